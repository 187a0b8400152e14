//! General linear quaternion functions and their canonic forms.
//!
//! A function `f(q) = sum_p m_p q n_p` is completely described by a 4×4 real
//! matrix: expanding every term over the basis `e_0 = 1, e_1 = i, e_2 = j,
//! e_3 = k` turns it into sixteen real coefficients, one per basis product
//! `e_r q e_c`. Entry `(r, c)` of [`CoefficientMatrix`] is the total
//! coefficient of `e_r q e_c`; a single term contributes the outer product
//! of its two component 4-vectors, so the matrix of a `P`-term function is a
//! sum of `P` rank-1 matrices.
//!
//! Everything else in this module is bookkeeping on that matrix:
//!
//! * grouping by columns gives the left canonic form `Aq + Bqi + Cqj + Dqk`;
//! * grouping by rows gives the right canonic form `qA' + iqB' + jqC' + kqD'`;
//! * splitting off the first column and first row and factorizing the
//!   remaining 3×3 block by columns gives the sixteen-coefficient mixed form
//!   `Aq + qb + v1 q i + v3 q j + v5 q k`;
//! * a singular value decomposition of the whole matrix gives the minimal
//!   sum of double-sided terms (see [`crate::svd::minimal_decomposition`]).

use core::fmt;
use core::ops::{Add, Index};

use crate::quat::{PureQuaternion, Quaternion};
use crate::svd;

/// One double-sided term `left * q * right`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TermPair {
    pub left: Quaternion,
    pub right: Quaternion,
}

impl TermPair {
    #[inline]
    pub fn new(left: Quaternion, right: Quaternion) -> Self {
        Self { left, right }
    }

    /// Coefficient matrix of this single term: the outer product of the two
    /// component 4-vectors. Rank 1 whenever both factors are nonzero.
    pub fn matrix(&self) -> CoefficientMatrix {
        let l = self.left.as_vector();
        let r = self.right.as_vector();
        let mut m = [[0.0; 4]; 4];
        for (row, &lc) in m.iter_mut().zip(l.iter()) {
            for (entry, &rc) in row.iter_mut().zip(r.iter()) {
                *entry = lc * rc;
            }
        }
        CoefficientMatrix { entries: m }
    }
}

/// A finite sum of double-sided terms `sum_p left_p * q * right_p`.
///
/// The empty term list is the zero function.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GeneralLinearFunction {
    pub terms: Vec<TermPair>,
}

impl GeneralLinearFunction {
    pub fn new(terms: Vec<TermPair>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Convenience constructor from `(left, right)` pairs.
    pub fn from_pairs(pairs: &[(Quaternion, Quaternion)]) -> Self {
        Self::new(pairs.iter().map(|&(l, r)| TermPair::new(l, r)).collect())
    }

    /// Apply the function: `sum_p left_p * q * right_p`.
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.terms
            .iter()
            .fold(Quaternion::ZERO, |acc, t| acc + t.left * q * t.right)
    }

    /// The 4×4 coefficient matrix: entrywise sum of the per-term outer
    /// products. The zero function maps to the zero matrix.
    pub fn matrix(&self) -> CoefficientMatrix {
        self.terms
            .iter()
            .fold(CoefficientMatrix::zero(), |acc, t| acc + t.matrix())
    }

    /// The real matrix `F` with `vec(f(q)) = F * vec(q)`, built by applying
    /// the function to the four basis elements. Column `c` is the component
    /// vector of `f(e_c)`.
    ///
    /// `F` pins down the function as a linear map on components, but unlike
    /// the coefficient matrix it does not expose the term structure.
    pub fn action_matrix(&self) -> [[f64; 4]; 4] {
        let basis = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
        let mut f = [[0.0; 4]; 4];
        for (c, &e) in basis.iter().enumerate() {
            let col = self.evaluate(e).as_vector();
            for r in 0..4 {
                f[r][c] = col[r];
            }
        }
        f
    }

    /// Invert the function at `r`: find `q` with `f(q) = r`.
    ///
    /// Fails with [`SingularFunction`] when the action matrix is
    /// rank-deficient, i.e. the function is not injective.
    pub fn solve(&self, r: Quaternion) -> Result<Quaternion, SingularFunction> {
        let f = self.action_matrix();
        let factors = svd::svd(&f).expect("Jacobi SVD convergence");
        if factors.numeric_rank() < 4 {
            return Err(SingularFunction);
        }

        let apply_inverse = |b: [f64; 4]| -> [f64; 4] {
            // V * diag(1/sigma) * U^T * b
            let mut ut_b = [0.0; 4];
            for (k, out) in ut_b.iter_mut().enumerate() {
                *out = (0..4).map(|i| factors.u[i][k] * b[i]).sum::<f64>() / factors.sigma[k];
            }
            let mut x = [0.0; 4];
            for (i, out) in x.iter_mut().enumerate() {
                *out = (0..4).map(|k| factors.v[i][k] * ut_b[k]).sum();
            }
            x
        };

        let b = r.as_vector();
        let mut x = apply_inverse(b);
        // One step of iterative refinement tightens the residual.
        let fx = self.evaluate(Quaternion::from_vector(x)).as_vector();
        let residual = [b[0] - fx[0], b[1] - fx[1], b[2] - fx[2], b[3] - fx[3]];
        let dx = apply_inverse(residual);
        for i in 0..4 {
            x[i] += dx[i];
        }
        Ok(Quaternion::from_vector(x))
    }
}

/// The action matrix of the function is rank-deficient; `solve` has no
/// unique preimage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularFunction;

impl fmt::Display for SingularFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "function is singular")
    }
}

impl std::error::Error for SingularFunction {}

/// Compare two functions through their coefficient matrices.
///
/// The matrix is a complete invariant, so this is true exactly when the two
/// term lists denote the same function. The comparison is relative: the
/// entrywise max difference must not exceed `tol * (1 + larger max-abs
/// entry)`.
pub fn functions_equal(f: &GeneralLinearFunction, g: &GeneralLinearFunction, tol: f64) -> bool {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    let mf = f.matrix();
    let mg = g.matrix();
    let scale = 1.0 + mf.max_abs_entry().max(mg.max_abs_entry());
    mf.max_abs_diff(&mg) <= tol * scale
}

/// The 4×4 real coefficient matrix of a linear quaternion function.
///
/// Rows are indexed by the left-coefficient component and columns by the
/// right-coefficient component, both in `(w, x, y, z)` order: entry `(r, c)`
/// is the coefficient of the basis product `e_r q e_c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientMatrix {
    entries: [[f64; 4]; 4],
}

impl CoefficientMatrix {
    pub fn zero() -> Self {
        Self { entries: [[0.0; 4]; 4] }
    }

    /// Wrap a raw 4×4 array. Panics on non-finite entries.
    pub fn from_entries(entries: [[f64; 4]; 4]) -> Self {
        assert!(
            entries.iter().all(|row| row.iter().all(|e| e.is_finite())),
            "coefficient matrix entries must be finite"
        );
        Self { entries }
    }

    #[inline]
    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.entries
    }

    /// Column `c` read as a quaternion `(m[0][c], m[1][c], m[2][c], m[3][c])`.
    fn column(&self, c: usize) -> Quaternion {
        Quaternion::new(
            self.entries[0][c],
            self.entries[1][c],
            self.entries[2][c],
            self.entries[3][c],
        )
    }

    /// Row `r` read as a quaternion `(m[r][0], m[r][1], m[r][2], m[r][3])`.
    fn row(&self, r: usize) -> Quaternion {
        Quaternion::new(
            self.entries[r][0],
            self.entries[r][1],
            self.entries[r][2],
            self.entries[r][3],
        )
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .fold(0.0f64, |acc, e| acc.max(e.abs()))
    }

    pub fn max_abs_diff(&self, other: &CoefficientMatrix) -> f64 {
        let mut max = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                max = max.max((self.entries[r][c] - other.entries[r][c]).abs());
            }
        }
        max
    }

    /// Number of singular values above the rank cutoff; at most 4.
    pub fn numeric_rank(&self) -> usize {
        svd::numeric_rank(&self.entries)
    }

    /// Group by columns: each column becomes a left coefficient against the
    /// fixed right-side multipliers `1, i, j, k`.
    pub fn canonic_left(&self) -> CanonicFormLeft {
        CanonicFormLeft {
            a: self.column(0),
            b: self.column(1),
            c: self.column(2),
            d: self.column(3),
        }
    }

    /// Group by rows: each row becomes a right coefficient against the fixed
    /// left-side multipliers `1, i, j, k`.
    pub fn canonic_right(&self) -> CanonicFormRight {
        CanonicFormRight {
            a: self.row(0),
            b: self.row(1),
            c: self.row(2),
            d: self.row(3),
        }
    }

    /// Column 1 as a full quaternion, the rest of row 1 as a right-side pure
    /// coefficient, and the remaining 3×3 block grouped by columns.
    pub fn mixed_form(&self) -> MixedForm {
        let m = &self.entries;
        MixedForm {
            a: self.column(0),
            b: PureQuaternion::new(m[0][1], m[0][2], m[0][3]),
            v1: PureQuaternion::new(m[1][1], m[2][1], m[3][1]),
            v3: PureQuaternion::new(m[1][2], m[2][2], m[3][2]),
            v5: PureQuaternion::new(m[1][3], m[2][3], m[3][3]),
        }
    }

    /// Like [`mixed_form`](Self::mixed_form), but the 3×3 block is split
    /// into at most three pure-by-pure double-sided terms via its singular
    /// value decomposition, each singular value distributed as a square root
    /// to either side. Pairs below the rank cutoff are omitted.
    pub fn pure_bilateral_form(&self) -> PureBilateralForm {
        let m = &self.entries;
        let block = [
            [m[1][1], m[1][2], m[1][3]],
            [m[2][1], m[2][2], m[2][3]],
            [m[3][1], m[3][2], m[3][3]],
        ];
        let factors = svd::svd(&block).expect("Jacobi SVD convergence");
        let cutoff = svd::RANK_TOLERANCE * factors.sigma[0].max(1e-300);
        let pairs = (0..3)
            .filter(|&t| factors.sigma[t] > cutoff)
            .map(|t| {
                let s = factors.sigma[t].sqrt();
                (
                    PureQuaternion::new(
                        s * factors.u[0][t],
                        s * factors.u[1][t],
                        s * factors.u[2][t],
                    ),
                    PureQuaternion::new(
                        s * factors.v[0][t],
                        s * factors.v[1][t],
                        s * factors.v[2][t],
                    ),
                )
            })
            .collect();
        PureBilateralForm {
            a: self.column(0),
            b: PureQuaternion::new(m[0][1], m[0][2], m[0][3]),
            pairs,
        }
    }
}

impl Add for CoefficientMatrix {
    type Output = CoefficientMatrix;
    fn add(self, rhs: CoefficientMatrix) -> CoefficientMatrix {
        let mut entries = self.entries;
        for (row, rhs_row) in entries.iter_mut().zip(rhs.entries.iter()) {
            for (e, &r) in row.iter_mut().zip(rhs_row.iter()) {
                *e += r;
            }
        }
        CoefficientMatrix { entries }
    }
}

impl Index<(usize, usize)> for CoefficientMatrix {
    type Output = f64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.entries[r][c]
    }
}

/// `f(q) = Aq + Bqi + Cqj + Dqk`: sixteen real coefficients with the
/// degenerate multipliers on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicFormLeft {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl CanonicFormLeft {
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.a * q
            + self.b * q * Quaternion::I
            + self.c * q * Quaternion::J
            + self.d * q * Quaternion::K
    }

    pub fn to_function(&self) -> GeneralLinearFunction {
        GeneralLinearFunction::from_pairs(&[
            (self.a, Quaternion::ONE),
            (self.b, Quaternion::I),
            (self.c, Quaternion::J),
            (self.d, Quaternion::K),
        ])
    }
}

/// `f(q) = qA' + iqB' + jqC' + kqD'`: the row-grouped dual of
/// [`CanonicFormLeft`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicFormRight {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl CanonicFormRight {
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        q * self.a
            + Quaternion::I * q * self.b
            + Quaternion::J * q * self.c
            + Quaternion::K * q * self.d
    }

    pub fn to_function(&self) -> GeneralLinearFunction {
        GeneralLinearFunction::from_pairs(&[
            (Quaternion::ONE, self.a),
            (Quaternion::I, self.b),
            (Quaternion::J, self.c),
            (Quaternion::K, self.d),
        ])
    }
}

/// `f(q) = Aq + qb + v1 q i + v3 q j + v5 q k`: one full quaternion, four
/// pure ones, sixteen real coefficients in total.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedForm {
    pub a: Quaternion,
    pub b: PureQuaternion,
    pub v1: PureQuaternion,
    pub v3: PureQuaternion,
    pub v5: PureQuaternion,
}

impl MixedForm {
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.a * q
            + q * self.b.as_quaternion()
            + self.v1.as_quaternion() * q * Quaternion::I
            + self.v3.as_quaternion() * q * Quaternion::J
            + self.v5.as_quaternion() * q * Quaternion::K
    }

    pub fn to_function(&self) -> GeneralLinearFunction {
        GeneralLinearFunction::from_pairs(&[
            (self.a, Quaternion::ONE),
            (Quaternion::ONE, self.b.as_quaternion()),
            (self.v1.as_quaternion(), Quaternion::I),
            (self.v3.as_quaternion(), Quaternion::J),
            (self.v5.as_quaternion(), Quaternion::K),
        ])
    }
}

/// `f(q) = Aq + qb + sum_t vo_t q ve_t` with every `v` pure: at most three
/// double-sided pure pairs, 25 real coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PureBilateralForm {
    pub a: Quaternion,
    pub b: PureQuaternion,
    pub pairs: Vec<(PureQuaternion, PureQuaternion)>,
}

impl PureBilateralForm {
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        let head = self.a * q + q * self.b.as_quaternion();
        self.pairs.iter().fold(head, |acc, &(vo, ve)| {
            acc + vo.as_quaternion() * q * ve.as_quaternion()
        })
    }

    pub fn to_function(&self) -> GeneralLinearFunction {
        let mut pairs = vec![
            (self.a, Quaternion::ONE),
            (Quaternion::ONE, self.b.as_quaternion()),
        ];
        pairs.extend(
            self.pairs
                .iter()
                .map(|&(vo, ve)| (vo.as_quaternion(), ve.as_quaternion())),
        );
        GeneralLinearFunction::from_pairs(&pairs)
    }
}

/// The three-term form `f(q) = Aq + qB + CqD`.
///
/// Its coefficient matrix is a sum of three rank-1 matrices, so its numeric
/// rank never exceeds 3 and the form cannot express a general function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeisterForm {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl MeisterForm {
    pub fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        Self { a, b, c, d }
    }

    pub fn to_function(&self) -> GeneralLinearFunction {
        GeneralLinearFunction::from_pairs(&[
            (self.a, Quaternion::ONE),
            (Quaternion::ONE, self.b),
            (self.c, self.d),
        ])
    }

    /// Coefficient matrix of the three-term function.
    pub fn matrix(&self) -> CoefficientMatrix {
        self.to_function().matrix()
    }
}
