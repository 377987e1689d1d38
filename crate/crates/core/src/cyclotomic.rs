//! Exact phases: elements of `Z[x]/(x^{M/2} + 1)` where `x` names `e^{2πi/M}`.
//!
//! Equality in the quotient ring implies equality of complex embeddings. The converse
//! fails whenever `M` is not a power of two, so a failed exact comparison is not a
//! proof of inequality; see [`CycScalar::approx_eq`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<i64>,
}

impl CycScalar {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 2 && order % 2 == 0, "order must be even and at least 2");
        Self { order, coeffs: vec![0; (order / 2) as usize] }
    }

    pub fn one(order: u32) -> Self {
        Self::root_power(order, 0)
    }

    pub fn from_int(order: u32, k: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = k;
        s
    }

    /// `x^k` for any integer `k`, reduced with `x^{M/2} = -1`.
    pub fn root_power(order: u32, k: i64) -> Self {
        let mut s = Self::zero(order);
        s.add_root_power(k, 1);
        s
    }

    /// Builds from raw coefficients of `1, x, x^2, ...`; entries past `M/2` are reduced.
    pub fn from_coeffs(order: u32, raw: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (k, &c) in raw.iter().enumerate() {
            s.add_root_power(k as i64, c);
        }
        s
    }

    fn add_root_power(&mut self, k: i64, c: i64) {
        let m = self.order as i64;
        let half = m / 2;
        let k = k.rem_euclid(m);
        if k >= half {
            self.coeffs[(k - half) as usize] -= c;
        } else {
            self.coeffs[k as usize] += c;
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Σ coeffs[k] · e^{2πik/M}`.
    pub fn embed(&self) -> Complex64 {
        let step = 2.0 * std::f64::consts::PI / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| Complex64::from_polar(c as f64, step * k as f64))
            .sum()
    }

    /// Exact equality in the quotient ring, falling back to a numeric comparison of the
    /// embeddings at `tol` when the exact test fails.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self == other || (self.embed() - other.embed()).norm() <= tol
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
    }
}

/// `Σ coeffs[k] · e^{2πik/M}`.
pub fn cyc_embed(s: &CycScalar) -> Complex64 {
    s.embed()
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycScalar { order: self.order, coeffs }
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycScalar { order: self.order, coeffs }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.check_order(rhs);
        let mut out = CycScalar::zero(self.order);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out.add_root_power((i + j) as i64, a * b);
                }
            }
        }
        out
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let m = c.unsigned_abs();
            match (k, m) {
                (0, _) => write!(f, "{m}")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{m}*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (mod x^{} + 1)", self.order / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_examples() {
        assert!((CycScalar::one(12).embed() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let half = CycScalar::root_power(12, 6);
        assert_eq!(half, CycScalar::from_int(12, -1));
        assert!((half.embed() + Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let i = CycScalar::root_power(12, 3);
        assert!((i.embed() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn negative_powers_wrap() {
        let a = CycScalar::root_power(20, -1);
        let b = CycScalar::root_power(20, 1);
        assert_eq!(&a * &b, CycScalar::one(20));
    }

    #[test]
    fn quotient_equality_is_conservative() {
        // 1 + x^4 + x^8 vanishes at a primitive 12th root (x^4 is a cube root of unity)
        // but is not zero in Z[x]/(x^6 + 1).
        let s = CycScalar::from_coeffs(12, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert!(!s.is_zero());
        assert!(s.embed().norm() < 1e-12);
        assert!(s.approx_eq(&CycScalar::zero(12), 1e-10));
    }
}
