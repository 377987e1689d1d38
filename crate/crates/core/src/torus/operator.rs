//! Curve operators on the level-`r` torus state space and their algebraic identities.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::matrix::ComplexMatrix;

/// Quantization level with `ħ = 1/(2r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    r: u32,
}

impl Level {
    pub fn new(r: u32) -> Option<Self> {
        (r >= 2).then_some(Self { r })
    }

    pub fn r(self) -> u32 {
        self.r
    }

    pub fn hbar(self) -> Ratio<i64> {
        Ratio::new(1, 2 * self.r as i64)
    }

    pub fn hbar_f64(self) -> f64 {
        0.5 / self.r as f64
    }

    /// Dimension of the state space, `r - 1`.
    pub fn dim(self) -> usize {
        self.r as usize - 1
    }
}

/// The class `(p, q)` of a torus curve, stored in the canonical form where the first
/// nonzero entry is positive, since `(p, q)` and `(-p, -q)` name the same observable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveObservable {
    p: i64,
    q: i64,
}

impl CurveObservable {
    pub fn new(p: i64, q: i64) -> Self {
        if p < 0 || (p == 0 && q < 0) {
            Self { p: -p, q: -q }
        } else {
            Self { p, q }
        }
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_trivial(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Value of the classical observable `2cos 2π(px + qy)`.
    pub fn classical(self, x: f64, y: f64) -> f64 {
        2.0 * (2.0 * PI * (self.p as f64 * x + self.q as f64 * y)).cos()
    }
}

impl fmt::Display for CurveObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Index `k` of the basis vector `±ζ_k` equal to `ζ_m` under `ζ_{-m} = -ζ_m` and period `2r`.
fn reduce_index(m: i64, r: i64) -> Option<(usize, f64)> {
    let m = m.rem_euclid(2 * r);
    if m == 0 || m == r {
        None
    } else if m < r {
        Some((m as usize, 1.0))
    } else {
        Some(((2 * r - m) as usize, -1.0))
    }
}

/// Matrix of `ζ_j ↦ e^{-iπpq/(2r)}(e^{iπjq/r} ζ_{j-p} + e^{-iπjq/r} ζ_{j+p})` in the basis
/// `ζ_1..ζ_{r-1}`; entry `(k-1, j-1)` is the coefficient of `ζ_k` in the image of `ζ_j`.
pub fn cs_matrix(p: i64, q: i64, r: u32) -> ComplexMatrix {
    assert!(r >= 2, "level must be at least 2");
    let ri = r as i64;
    let rf = r as f64;
    let dim = r as usize - 1;
    let mut out = ComplexMatrix::zeros(dim, dim);
    let front = Complex64::from_polar(1.0, -PI * (p * q) as f64 / (2.0 * rf));
    for j in 1..ri {
        let angle = PI * (j * q) as f64 / rf;
        for (target, phase) in [(j - p, angle), (j + p, -angle)] {
            if let Some((k, sign)) = reduce_index(target, ri) {
                out[(k - 1, j as usize - 1)] += front * Complex64::from_polar(sign, phase);
            }
        }
    }
    out
}

/// The operator quantizing the trace observable of `c` at level `r`.
pub fn cs_operator(c: CurveObservable, level: Level) -> ComplexMatrix {
    cs_matrix(c.p, c.q, level.r)
}

/// `e^{iπ c k / r}`.
fn phase(c: f64, k: i64, r: u32) -> Complex64 {
    Complex64::from_polar(1.0, PI * c * k as f64 / r as f64)
}

/// `‖C(m,n)C(p,q) - e^{iπc(mq-np)/r} C(m+p,n+q) - e^{-iπc(mq-np)/r} C(m-p,n-q)‖_max`.
pub fn product_to_sum_check(m: i64, n: i64, p: i64, q: i64, r: u32, c: f64) -> f64 {
    let lhs = &cs_matrix(m, n, r) * &cs_matrix(p, q, r);
    let e = phase(c, m * q - n * p, r);
    let rhs = &cs_matrix(m + p, n + q, r).scale(e) + &cs_matrix(m - p, n - q, r).scale(e.conj());
    lhs.max_abs_diff(&rhs)
}

/// `‖[C(m,n), C(p,q)] - 2i sin(πc(mq-np)/r)(C(m+p,n+q) - C(m-p,n-q))‖_max`.
pub fn commutator_identity_check(m: i64, n: i64, p: i64, q: i64, r: u32, c: f64) -> f64 {
    let lhs = cs_matrix(m, n, r).commutator(&cs_matrix(p, q, r));
    let s = (PI * c * (m * q - n * p) as f64 / r as f64).sin();
    let diff = &cs_matrix(m + p, n + q, r) - &cs_matrix(m - p, n - q, r);
    lhs.max_abs_diff(&diff.scale(Complex64::new(0.0, 2.0 * s)))
}

/// `T_d(x)` with `T_0 = 2`, `T_1 = x`, `T_{d+1} = x T_d - T_{d-1}`, evaluated on a square matrix.
pub fn chebyshev_matrix(d: u32, x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.rows();
    let two = ComplexMatrix::identity(n).scale(Complex64::new(2.0, 0.0));
    if d == 0 {
        return two;
    }
    let (mut prev, mut cur) = (two, x.clone());
    for _ in 1..d {
        let next = &(x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `‖C(dp, dq) - T_d(C(p, q))‖_max`.
pub fn chebyshev_check(d: u32, p: i64, q: i64, r: u32) -> f64 {
    let lhs = cs_matrix(d as i64 * p, d as i64 * q, r);
    lhs.max_abs_diff(&chebyshev_matrix(d, &cs_matrix(p, q, r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_rows(
            &rows.iter().map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn trivial_curve_is_twice_identity() {
        for r in 2..9 {
            let two = ComplexMatrix::identity(r as usize - 1).scale(Complex64::new(2.0, 0.0));
            assert!(cs_matrix(0, 0, r).max_abs_diff(&two) < 1e-14);
        }
    }

    #[test]
    fn level_three_values() {
        assert!(cs_matrix(1, 0, 3).max_abs_diff(&real(&[&[0.0, 1.0], &[1.0, 0.0]])) < 1e-14);
        assert!(cs_matrix(0, 1, 3).max_abs_diff(&real(&[&[1.0, 0.0], &[0.0, -1.0]])) < 1e-14);
        let c20 = cs_matrix(2, 0, 3);
        assert!(c20.max_abs_diff(&real(&[&[-1.0, 0.0], &[0.0, -1.0]])) < 1e-14);
        assert!(chebyshev_check(2, 1, 0, 3) < 1e-14);
    }

    #[test]
    fn level_two_odd_classes_vanish() {
        for (p, q) in [(1, 0), (0, 1), (1, 1), (3, 2)] {
            assert!(cs_matrix(p, q, 2).max_abs() < 1e-15);
        }
    }

    #[test]
    fn hermitian_and_sign_symmetric() {
        for r in 2..9 {
            for p in -4..=4 {
                for q in -4..=4 {
                    let c = cs_matrix(p, q, r);
                    assert!(c.hermitian_defect() < 1e-10);
                    assert!(c.max_abs_diff(&cs_matrix(-p, -q, r)) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn product_to_sum_phase_examples() {
        assert!(product_to_sum_check(1, 0, 1, 0, 5, 1.0) < 1e-12);
        assert!(product_to_sum_check(1, 0, 0, 1, 3, 0.5) < 1e-12);
        let printed = product_to_sum_check(1, 0, 0, 1, 3, 1.0);
        assert!(printed > 0.5, "{printed}");
    }

    #[test]
    fn commutator_identity_small() {
        for r in 3..7 {
            for (m, n, p, q) in [(1, 0, 0, 1), (2, 1, -1, 3), (1, 1, 1, -1)] {
                assert!(commutator_identity_check(m, n, p, q, r, 0.5) < 1e-10);
            }
        }
    }

    #[test]
    fn canonical_curves() {
        assert_eq!(CurveObservable::new(-1, 2), CurveObservable::new(1, -2));
        assert_eq!(CurveObservable::new(0, -3).q(), 3);
        let c = CurveObservable::new(-2, -5);
        assert_eq!(CurveObservable::new(c.p(), c.q()), c);
        assert!((c.classical(0.1, 0.0) - 2.0 * (0.4 * PI).cos()).abs() < 1e-12);
        assert_eq!(Level::new(4).unwrap().hbar(), Ratio::new(1, 8));
        assert!(Level::new(1).is_none());
    }
}
