//! Singular value decomposition, numeric rank, and rank-1 splitting for
//! real square matrices up to 4×4.
//!
//! The algorithm is cyclic two-sided Jacobi: each sweep visits every index
//! pair `(p, q)` and applies a pair of plane rotations that annihilates the
//! 2×2 off-diagonal sub-block. At this matrix size the method converges in
//! a handful of sweeps and keeps both factor matrices orthogonal to machine
//! precision, which is what the rank decisions downstream rely on.

use core::fmt;

use crate::linfun::{CoefficientMatrix, GeneralLinearFunction, TermPair};
use crate::quat::Quaternion;

/// Relative cutoff separating genuine rank deficiency from roundoff.
///
/// A singular value counts toward the rank when it exceeds
/// `RANK_TOLERANCE * max(sigma_1, 1e-300)`.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// Off-diagonal entries below this multiple of the largest singular value
/// are treated as annihilated.
const SWEEP_TOLERANCE: f64 = 1e-15;

/// Convergence cap; unreachable for finite inputs at this size.
const MAX_SWEEPS: usize = 60;

/// The Jacobi iteration failed to drive the off-diagonal mass below the
/// sweep tolerance within the sweep cap. Signals a defect (or a non-finite
/// input that slipped past validation); not observed for finite matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoConvergence;

impl fmt::Display for NoConvergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jacobi SVD did not converge within {MAX_SWEEPS} sweeps")
    }
}

impl std::error::Error for NoConvergence {}

/// Factors `u * diag(sigma) * v^T` of a square matrix.
///
/// `u` and `v` are orthogonal; `sigma` is nonnegative and sorted descending.
/// The largest-magnitude entry of each column of `v` is nonnegative, with
/// `u` adjusted to compensate, so factorizations are deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvdFactors<const N: usize> {
    pub u: [[f64; N]; N],
    pub sigma: [f64; N],
    pub v: [[f64; N]; N],
}

impl<const N: usize> SvdFactors<N> {
    /// `u * diag(sigma) * v^T`.
    pub fn reconstruct(&self) -> [[f64; N]; N] {
        let mut out = [[0.0; N]; N];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..N).map(|k| self.u[i][k] * self.sigma[k] * self.v[j][k]).sum();
            }
        }
        out
    }

    /// Number of singular values above the rank cutoff.
    pub fn numeric_rank(&self) -> usize {
        let cutoff = rank_cutoff(self.sigma[0]);
        self.sigma.iter().filter(|&&s| s > cutoff).count()
    }
}

fn rank_cutoff(sigma_max: f64) -> f64 {
    RANK_TOLERANCE * sigma_max.max(1e-300)
}

fn identity<const N: usize>() -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

fn max_off_diagonal<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    let mut max = 0.0f64;
    for (i, row) in m.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if i != j {
                max = max.max(e.abs());
            }
        }
    }
    max
}

fn max_diagonal<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    (0..N).fold(0.0f64, |acc, i| acc.max(m[i][i].abs()))
}

/// Rotation pair diagonalizing the 2×2 block `[[b_pp, b_pq], [b_qp, b_qq]]`.
///
/// Returns `(cu, su, cv, sv)` such that with `R(c, s) = [[c, s], [-s, c]]`
/// the product `R(cu, su)^T * B * R(cv, sv)` is diagonal on the block: the
/// block is first symmetrized by a left rotation, then diagonalized by the
/// classic symmetric Jacobi rotation applied on both sides.
fn block_rotations(b_pp: f64, b_pq: f64, b_qp: f64, b_qq: f64) -> (f64, f64, f64, f64) {
    // Left rotation angle making the block symmetric. The quarter-turn case
    // is snapped so exact-basis inputs stay free of cos(pi/2) dust.
    let num = b_pq - b_qp;
    let den = b_pp + b_qq;
    let (s1, c1) = if den == 0.0 {
        if num == 0.0 {
            (0.0, 1.0)
        } else {
            (num.signum(), 0.0)
        }
    } else {
        f64::atan2(num, den).sin_cos()
    };

    // Symmetrized block entries.
    let alpha = c1 * b_pp - s1 * b_qp;
    let beta = s1 * b_pq + c1 * b_qq;
    let gamma = 0.5 * ((c1 * b_pq - s1 * b_qq) + (s1 * b_pp + c1 * b_qp));

    // Symmetric Jacobi rotation for [[alpha, gamma], [gamma, beta]].
    let (c2, s2) = if gamma == 0.0 {
        (1.0, 0.0)
    } else {
        let tau = (beta - alpha) / (2.0 * gamma);
        let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
        let c = 1.0 / (1.0 + t * t).sqrt();
        (c, t * c)
    };

    // Left side accumulates both rotations: angles add.
    let cu = c1 * c2 - s1 * s2;
    let su = c1 * s2 + s1 * c2;
    (cu, su, c2, s2)
}

/// Singular value decomposition of a square matrix with `1 <= N <= 4`.
///
/// All entries must be finite.
pub fn svd<const N: usize>(m: &[[f64; N]; N]) -> Result<SvdFactors<N>, NoConvergence> {
    const { assert!(N >= 1 && N <= 4, "svd supports sizes 1..=4") };
    assert!(
        m.iter().all(|row| row.iter().all(|e| e.is_finite())),
        "svd requires finite entries"
    );

    let mut b = *m;
    let mut u = identity::<N>();
    let mut v = identity::<N>();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if max_off_diagonal(&b) <= SWEEP_TOLERANCE * max_diagonal(&b) {
            converged = true;
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let thresh = SWEEP_TOLERANCE * max_diagonal(&b);
                if b[p][q].abs() <= thresh && b[q][p].abs() <= thresh {
                    continue;
                }
                let (cu, su, cv, sv) = block_rotations(b[p][p], b[p][q], b[q][p], b[q][q]);

                // Rows p, q of B from the left by R(cu, su)^T.
                let (top, rest) = b.split_at_mut(q);
                for (ep, eq) in top[p].iter_mut().zip(rest[0].iter_mut()) {
                    let (bp, bq) = (*ep, *eq);
                    *ep = cu * bp - su * bq;
                    *eq = su * bp + cu * bq;
                }
                // Columns p, q of B from the right by R(cv, sv).
                for row in b.iter_mut() {
                    let (bp, bq) = (row[p], row[q]);
                    row[p] = cv * bp - sv * bq;
                    row[q] = sv * bp + cv * bq;
                }
                // Accumulate factors.
                for (urow, vrow) in u.iter_mut().zip(v.iter_mut()) {
                    let (up, uq) = (urow[p], urow[q]);
                    urow[p] = cu * up - su * uq;
                    urow[q] = su * up + cu * uq;
                    let (vp, vq) = (vrow[p], vrow[q]);
                    vrow[p] = cv * vp - sv * vq;
                    vrow[q] = sv * vp + cv * vq;
                }
            }
        }
    }
    if !converged && max_off_diagonal(&b) > SWEEP_TOLERANCE * max_diagonal(&b) {
        return Err(NoConvergence);
    }

    let mut sigma = [0.0; N];
    for k in 0..N {
        sigma[k] = b[k][k];
        if sigma[k] < 0.0 {
            sigma[k] = -sigma[k];
            for row in u.iter_mut() {
                row[k] = -row[k];
            }
        }
    }

    // Sort descending, carrying the factor columns along.
    for i in 0..N {
        let mut top = i;
        for j in (i + 1)..N {
            if sigma[j] > sigma[top] {
                top = j;
            }
        }
        if top != i {
            sigma.swap(i, top);
            for row in u.iter_mut() {
                row.swap(i, top);
            }
            for row in v.iter_mut() {
                row.swap(i, top);
            }
        }
    }

    // Deterministic signs: largest-magnitude entry of each V column >= 0.
    for k in 0..N {
        let mut lead = 0;
        for i in 1..N {
            if v[i][k].abs() > v[lead][k].abs() {
                lead = i;
            }
        }
        if v[lead][k] < 0.0 {
            for i in 0..N {
                v[i][k] = -v[i][k];
                u[i][k] = -u[i][k];
            }
        }
    }

    Ok(SvdFactors { u, sigma, v })
}

/// Number of singular values above the rank cutoff; 0 for the zero matrix.
pub fn numeric_rank<const N: usize>(m: &[[f64; N]; N]) -> usize {
    svd(m).expect("Jacobi SVD convergence").numeric_rank()
}

/// A linear quaternion function rebuilt from the rank-1 pieces of its
/// coefficient matrix: one double-sided term per significant singular value,
/// in descending singular-value order.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalDecomposition {
    pub terms: Vec<TermPair>,
}

impl MinimalDecomposition {
    /// View the decomposition as an ordinary term list.
    pub fn to_function(&self) -> GeneralLinearFunction {
        GeneralLinearFunction::new(self.terms.clone())
    }

    /// Evaluate the decomposed function at `q`.
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.terms
            .iter()
            .fold(Quaternion::ZERO, |acc, t| acc + t.left * q * t.right)
    }
}

/// Split a coefficient matrix into at most four double-sided terms.
///
/// With `m = u * diag(sigma) * v^T`, term `k` pairs column `k` of
/// `u * diag(sigma)` with column `k` of `v`; columns whose singular value
/// falls below the rank cutoff are dropped, so the term count equals the
/// numeric rank.
pub fn minimal_decomposition(m: &CoefficientMatrix) -> MinimalDecomposition {
    let factors = svd(m.entries()).expect("Jacobi SVD convergence");
    let cutoff = rank_cutoff(factors.sigma[0]);
    let terms = (0..4)
        .filter(|&k| factors.sigma[k] > cutoff)
        .map(|k| {
            let s = factors.sigma[k];
            let left = Quaternion::from_vector([
                s * factors.u[0][k],
                s * factors.u[1][k],
                s * factors.u[2][k],
                s * factors.u[3][k],
            ]);
            let right = Quaternion::from_vector([
                factors.v[0][k],
                factors.v[1][k],
                factors.v[2][k],
                factors.v[3][k],
            ]);
            TermPair::new(left, right)
        })
        .collect();
    MinimalDecomposition { terms }
}
