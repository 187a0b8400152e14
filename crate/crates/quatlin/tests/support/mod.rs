//! Shared oracles for the integration and acceptance suites.
//!
//! Everything here recomputes results along a route independent of the
//! library code under test: singular values via characteristic-polynomial
//! bisection on `m^T m`, and canonic coefficients via a dense 16×16 linear
//! solve over basis evaluations.

#![allow(dead_code)]

use quatlin::quat::Quaternion;

pub const BASIS: [Quaternion; 4] = [
    Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 },
    Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 },
    Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 },
    Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 },
];

pub fn quat_close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

pub fn max_abs_diff<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> f64 {
    let mut max = 0.0f64;
    for i in 0..N {
        for j in 0..N {
            max = max.max((a[i][j] - b[i][j]).abs());
        }
    }
    max
}

pub fn max_abs_entry<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    m.iter().flatten().fold(0.0f64, |acc, e| acc.max(e.abs()))
}

/// Largest deviation of `m^T m` from the identity.
pub fn orthogonality_defect<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    let mut max = 0.0f64;
    for i in 0..N {
        for j in 0..N {
            let dot: f64 = (0..N).map(|k| m[k][i] * m[k][j]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            max = max.max((dot - target).abs());
        }
    }
    max
}

// ── Eigenvalue oracle ────────────────────────────────────────────────

fn det2(m: [[f64; 2]; 2]) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: [[f64; 4]; 4]) -> f64 {
    let minor = |skip: usize| {
        let mut s = [[0.0; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c != skip {
                    s[r - 1][cc] = m[r][c];
                    cc += 1;
                }
            }
        }
        s
    };
    m[0][0] * det3(minor(0)) - m[0][1] * det3(minor(1)) + m[0][2] * det3(minor(2))
        - m[0][3] * det3(minor(3))
}

/// Leading principal minor of order `k` of `s - x I`.
fn shifted_minor<const N: usize>(s: &[[f64; N]; N], x: f64, k: usize) -> f64 {
    let e = |i: usize, j: usize| s[i][j] - if i == j { x } else { 0.0 };
    match k {
        1 => e(0, 0),
        2 => det2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]),
        3 => det3([
            [e(0, 0), e(0, 1), e(0, 2)],
            [e(1, 0), e(1, 1), e(1, 2)],
            [e(2, 0), e(2, 1), e(2, 2)],
        ]),
        4 => det4([
            [e(0, 0), e(0, 1), e(0, 2), e(0, 3)],
            [e(1, 0), e(1, 1), e(1, 2), e(1, 3)],
            [e(2, 0), e(2, 1), e(2, 2), e(2, 3)],
            [e(3, 0), e(3, 1), e(3, 2), e(3, 3)],
        ]),
        _ => unreachable!("oracle supports orders 1..=4"),
    }
}

/// Number of eigenvalues of the symmetric matrix `s` strictly below `x`,
/// counted with multiplicity: the sign-change count of the sequence of
/// leading principal minors of `s - x I` (Jacobi/Sylvester inertia).
fn eigen_count_below<const N: usize>(s: &[[f64; N]; N], mut x: f64, scale: f64) -> usize {
    // Nudge off exact minor zeros; counting is monotone so bisection is safe.
    for _ in 0..64 {
        let minors: Vec<f64> = (1..=N).map(|k| shifted_minor(s, x, k)).collect();
        if minors.iter().all(|&d| d != 0.0) {
            let mut changes = 0;
            let mut prev = 1.0f64;
            for &d in &minors {
                if d.signum() != prev.signum() {
                    changes += 1;
                }
                prev = d;
            }
            return changes;
        }
        x += scale * 1e-14 + f64::MIN_POSITIVE;
    }
    panic!("eigen oracle could not move off a minor zero at x = {x}");
}

/// Eigenvalues of a symmetric matrix, ascending, by bisection on the
/// inertia count. Independent of the library's Jacobi iteration.
pub fn symmetric_eigenvalues<const N: usize>(s: &[[f64; N]; N]) -> [f64; N] {
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..N {
        let radius: f64 = (0..N).filter(|&j| j != i).map(|j| s[i][j].abs()).sum();
        lo = lo.min(s[i][i] - radius);
        hi = hi.max(s[i][i] + radius);
    }
    let scale = lo.abs().max(hi.abs()).max(1e-300);
    let (lo, hi) = (lo - scale * 1e-12, hi + scale * 1e-12);

    let mut eig = [0.0; N];
    for (k, out) in eig.iter_mut().enumerate() {
        let (mut a, mut b) = (lo, hi);
        for _ in 0..110 {
            let mid = 0.5 * (a + b);
            if eigen_count_below(s, mid, scale) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        *out = 0.5 * (a + b);
    }
    eig
}

/// Singular values of `m`, descending: square roots of the eigenvalues of
/// `m^T m` from the bisection oracle.
pub fn singular_values_oracle<const N: usize>(m: &[[f64; N]; N]) -> [f64; N] {
    let mut gram = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            gram[i][j] = (0..N).map(|k| m[k][i] * m[k][j]).sum();
        }
    }
    let eig = symmetric_eigenvalues(&gram);
    let mut sigma = [0.0; N];
    for k in 0..N {
        sigma[k] = eig[N - 1 - k].max(0.0).sqrt();
    }
    sigma
}

// ── Canonic-coefficient oracle ───────────────────────────────────────

/// Solve a dense linear system by Gaussian elimination with partial
/// pivoting. Panics on a numerically singular system.
pub fn gauss_solve(a: &mut [Vec<f64>], b: &mut [f64]) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r1, &r2| a[r1][col].abs().total_cmp(&a[r2][col].abs()))
            .unwrap();
        assert!(a[pivot][col].abs() > 1e-12, "singular oracle system");
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..n {
            let factor = a[row][col] / a[col][col];
            for c in col..n {
                a[row][c] -= factor * a[col][c];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let sum: f64 = ((row + 1)..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - sum) / a[row][row];
    }
    x
}

/// Brute-force canonic-left coefficients of an arbitrary real-linear
/// quaternion map, given its values on the basis `1, i, j, k`.
///
/// Sets up the 16×16 system `A e + B e i + C e j + D e k = target(e)` over
/// the coefficient components and solves it densely, without ever forming
/// the coefficient matrix.
pub fn canonic_left_by_basis_solve(targets: [Quaternion; 4]) -> [Quaternion; 4] {
    let multipliers = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    let mut a = vec![vec![0.0; 16]; 16];
    let mut b = vec![0.0; 16];

    for (c, &e) in BASIS.iter().enumerate() {
        let rhs = targets[c].as_vector();
        for comp in 0..4 {
            b[4 * c + comp] = rhs[comp];
        }
        for unknown in 0..16 {
            let coeff = BASIS[unknown % 4]; // unit component of the unknown
            let slot = unknown / 4; // which of A, B, C, D
            let contribution = (coeff * e * multipliers[slot]).as_vector();
            for comp in 0..4 {
                a[4 * c + comp][unknown] = contribution[comp];
            }
        }
    }

    let x = gauss_solve(&mut a, &mut b);
    let pick = |slot: usize| {
        Quaternion::new(x[4 * slot], x[4 * slot + 1], x[4 * slot + 2], x[4 * slot + 3])
    };
    [pick(0), pick(1), pick(2), pick(3)]
}
