//! Deterministic fixture generation.
//!
//! Fixtures must be reproducible bit-for-bit across runs, platforms, and
//! reimplementations in other languages, so the generator is a fixed 64-bit
//! linear congruential recurrence rather than a platform default:
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! ```
//!
//! Each draw advances the state once and maps the top 53 bits to a dyadic
//! rational in `[0, 1)`. Components are drawn in `(w, x, y, z)` order, the
//! left coefficient of a term before the right one, and matrix entries in
//! row-major order.

use crate::linfun::{GeneralLinearFunction, MeisterForm, TermPair};
use crate::quat::Quaternion;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// 64-bit linear congruential generator with fixed, documented constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Uniform draw from `[0, 1)` with 53 bits of resolution.
    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw from `[-1, 1)`.
    #[inline]
    pub fn next_symmetric(&mut self) -> f64 {
        2.0 * self.next_unit() - 1.0
    }

    /// Quaternion with components uniform in `[-1, 1)`, drawn `(w, x, y, z)`.
    pub fn next_quaternion(&mut self) -> Quaternion {
        let w = self.next_symmetric();
        let x = self.next_symmetric();
        let y = self.next_symmetric();
        let z = self.next_symmetric();
        Quaternion::new(w, x, y, z)
    }

    /// Term with left coefficient drawn before the right one.
    pub fn next_term(&mut self) -> TermPair {
        let left = self.next_quaternion();
        let right = self.next_quaternion();
        TermPair::new(left, right)
    }

    /// `terms`-term function with all components uniform in `[-1, 1)`.
    pub fn next_function(&mut self, terms: usize) -> GeneralLinearFunction {
        GeneralLinearFunction::new((0..terms).map(|_| self.next_term()).collect())
    }

    /// Three-term form coefficients drawn A, B, C, D.
    pub fn next_meister(&mut self) -> MeisterForm {
        let a = self.next_quaternion();
        let b = self.next_quaternion();
        let c = self.next_quaternion();
        let d = self.next_quaternion();
        MeisterForm::new(a, b, c, d)
    }

    /// Square matrix with entries uniform in `[-1, 1)`, drawn row-major.
    pub fn next_matrix<const N: usize>(&mut self) -> [[f64; N]; N] {
        let mut m = [[0.0; N]; N];
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = self.next_symmetric();
            }
        }
        m
    }
}

/// The `terms`-term function produced by a fresh generator seeded with
/// `seed`. Same `(terms, seed)`, same function, byte for byte.
pub fn random_function(terms: usize, seed: u64) -> GeneralLinearFunction {
    Lcg64::new(seed).next_function(terms)
}
