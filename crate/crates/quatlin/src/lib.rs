//! Canonic forms and minimal decompositions of linear quaternion functions.
//!
//! A linear quaternion function is a finite sum of double-sided terms
//! `f(q) = sum_p m_p q n_p`. No matter how many terms the sum has, the whole
//! function fits in a 4×4 real coefficient matrix, and everything this crate
//! does is read off that matrix:
//!
//! * [`linfun::CoefficientMatrix::canonic_left`] /
//!   [`linfun::CoefficientMatrix::canonic_right`] — the sixteen-coefficient
//!   forms `Aq + Bqi + Cqj + Dqk` and `qA' + iqB' + jqC' + kqD'`;
//! * [`linfun::CoefficientMatrix::mixed_form`] — the variant
//!   `Aq + qb + v1 q i + v3 q j + v5 q k` with pure-quaternion tails;
//! * [`svd::minimal_decomposition`] — the shortest double-sided sum, one
//!   term per significant singular value (never more than four);
//! * [`linfun::GeneralLinearFunction::solve`] — linear inversion through the
//!   action matrix.
//!
//! The singular value decomposition behind the rank decisions is the
//! self-contained small-matrix Jacobi routine in [`svd`]; nothing here links
//! against an external linear-algebra backend.
//!
//! The [`batch`] module runs corpus-sized sweeps, in parallel when the
//! default `parallel` feature is enabled, and [`random`] generates seeded,
//! bit-reproducible fixtures.
//!
//! ```
//! use quatlin::{GeneralLinearFunction, Quaternion, minimal_decomposition};
//!
//! // f(q) = (1+2i) q j + k q (3-j): two double-sided terms.
//! let f = GeneralLinearFunction::from_pairs(&[
//!     (Quaternion::new(1.0, 2.0, 0.0, 0.0), Quaternion::J),
//!     (Quaternion::K, Quaternion::new(3.0, 0.0, -1.0, 0.0)),
//! ]);
//!
//! let m = f.matrix();
//! assert_eq!(m.numeric_rank(), 2);
//!
//! // The canonic form evaluates identically to the term list.
//! let cf = m.canonic_left();
//! let q = Quaternion::new(0.5, -1.0, 0.25, 2.0);
//! assert!((cf.evaluate(q) - f.evaluate(q)).norm() < 1e-12);
//!
//! // Two terms in, two terms back out of the minimal decomposition.
//! let dec = minimal_decomposition(&m);
//! assert_eq!(dec.terms.len(), 2);
//! ```

pub mod batch;
pub mod linfun;
pub mod quat;
pub mod random;
pub mod svd;

pub use linfun::{
    functions_equal, CanonicFormLeft, CanonicFormRight, CoefficientMatrix,
    GeneralLinearFunction, MeisterForm, MixedForm, PureBilateralForm, SingularFunction, TermPair,
};
pub use quat::{PureQuaternion, Quaternion};
pub use svd::{minimal_decomposition, numeric_rank, MinimalDecomposition, SvdFactors};
