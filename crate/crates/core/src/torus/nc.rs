//! The noncommutative torus with exact phases, and the map sending curves into it.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::CycScalar;
use crate::error::NumericError;
use crate::torus::operator::{CurveObservable, Level};

/// `Σ c_{ab} U^a V^b` with coefficients in `Z[x]/(x^{2r} + 1)`, `x = e^{iπ/(2r)}`, and the
/// relation `VU = ω UV` where `ω = x^{2s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCTorusElement {
    r: u32,
    s: i8,
    terms: BTreeMap<(i64, i64), CycScalar>,
}

impl NCTorusElement {
    pub fn zero(level: Level, s: i8) -> Self {
        assert!(s == 1 || s == -1, "commutation sign must be ±1");
        Self { r: level.r(), s, terms: BTreeMap::new() }
    }

    /// `coeff · U^a V^b`.
    pub fn monomial(level: Level, s: i8, a: i64, b: i64, coeff: CycScalar) -> Self {
        let mut out = Self::zero(level, s);
        out.add_term(a, b, coeff);
        out
    }

    /// `U^a V^b` with unit coefficient.
    pub fn unit_monomial(level: Level, s: i8, a: i64, b: i64) -> Self {
        let one = CycScalar::one(4 * level.r());
        Self::monomial(level, s, a, b, one)
    }

    pub fn one(level: Level, s: i8) -> Self {
        Self::unit_monomial(level, s, 0, 0)
    }

    pub fn level(&self) -> u32 {
        self.r
    }

    pub fn sign(&self) -> i8 {
        self.s
    }

    /// Order of the root of unity `x` the coefficients are written in.
    pub fn phase_order(&self) -> u32 {
        4 * self.r
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), CycScalar> {
        &self.terms
    }

    pub fn coeff(&self, a: i64, b: i64) -> CycScalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(|| CycScalar::zero(self.phase_order()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, a: i64, b: i64, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let sum = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), NumericError> {
        if self.r != other.r || self.s != other.s {
            return Err(NumericError::InvalidArgument(format!(
                "level/sign mismatch: (r={}, s={}) vs (r={}, s={})",
                self.r, self.s, other.r, other.s
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, NumericError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &CycScalar) -> Self {
        let mut out = Self { r: self.r, s: self.s, terms: BTreeMap::new() };
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, c * k);
        }
        out
    }

    /// Largest coefficient distance after embedding into the complex numbers.
    pub fn approx_distance(&self, other: &Self) -> f64 {
        let mut keys: Vec<_> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.iter()
            .map(|&(a, b)| (self.coeff(a, b).embed() - other.coeff(a, b).embed()).norm())
            .fold(0.0, f64::max)
    }
}

/// Bilinear extension of `(U^a V^b)(U^p V^q) = ω^{bp} U^{a+p} V^{b+q}`.
pub fn nc_mul(x: &NCTorusElement, y: &NCTorusElement) -> Result<NCTorusElement, NumericError> {
    x.compatible(y)?;
    let order = x.phase_order();
    let mut out = NCTorusElement { r: x.r, s: x.s, terms: BTreeMap::new() };
    for (&(a, b), c1) in &x.terms {
        for (&(p, q), c2) in &y.terms {
            // ω^{bp} = x^{2s·bp}
            let w = CycScalar::root_power(order, 2 * x.s as i64 * b * p);
            out.add_term(a + p, b + q, &(c1 * c2) * &w);
        }
    }
    Ok(out)
}

/// `x^{-pq}(U^p V^q + U^{-p} V^{-q})`.
pub fn phi(c: CurveObservable, level: Level, s: i8) -> NCTorusElement {
    phi_raw(c.p(), c.q(), level, s)
}

pub(crate) fn phi_raw(p: i64, q: i64, level: Level, s: i8) -> NCTorusElement {
    let order = 4 * level.r();
    let front = CycScalar::root_power(order, -p * q);
    let mut out = NCTorusElement::monomial(level, s, p, q, front.clone());
    out.add_term(-p, -q, front);
    out
}

/// Whether `φ(m,n)φ(p,q) = x^{2c(mq-np)} φ(m+p,n+q) + x^{-2c(mq-np)} φ(m-p,n-q)` holds exactly,
/// with `2c` an integer.
pub fn phi_product_to_sum_holds(m: i64, n: i64, p: i64, q: i64, level: Level, s: i8, twice_c: i64) -> bool {
    phi_product_to_sum_residual(m, n, p, q, level, s, twice_c).is_zero()
}

/// Left side minus right side of the identity in [`phi_product_to_sum_holds`].
pub fn phi_product_to_sum_residual(m: i64, n: i64, p: i64, q: i64, level: Level, s: i8, twice_c: i64) -> NCTorusElement {
    let order = 4 * level.r();
    let lhs = nc_mul(&phi_raw(m, n, level, s), &phi_raw(p, q, level, s)).expect("same level");
    let k = twice_c * (m * q - n * p);
    let plus = phi_raw(m + p, n + q, level, s).scale(&CycScalar::root_power(order, k));
    let minus = phi_raw(m - p, n - q, level, s).scale(&CycScalar::root_power(order, -k));
    let rhs = plus.add(&minus).expect("same level");
    let neg = rhs.scale(&CycScalar::from_int(order, -1));
    lhs.add(&neg).expect("same level")
}

impl fmt::Display for NCTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(&(a, b), c)| format!("({c}) U^{a} V^{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(r: u32) -> Level {
        Level::new(r).unwrap()
    }

    #[test]
    fn defining_relation() {
        for s in [1i8, -1] {
            let l = lv(5);
            let u = NCTorusElement::unit_monomial(l, s, 1, 0);
            let v = NCTorusElement::unit_monomial(l, s, 0, 1);
            let vu = nc_mul(&v, &u).unwrap();
            let omega = CycScalar::root_power(20, 2 * s as i64);
            let uv = nc_mul(&u, &v).unwrap().scale(&omega);
            assert_eq!(vu, uv);
        }
    }

    #[test]
    fn inverse_monomials() {
        let l = lv(4);
        let s = -1;
        let uv = NCTorusElement::unit_monomial(l, s, 1, 1);
        let inv = NCTorusElement::unit_monomial(l, s, -1, -1);
        let prod = nc_mul(&uv, &inv).unwrap();
        let omega_inv = CycScalar::root_power(16, -2 * s as i64);
        assert_eq!(prod, NCTorusElement::one(l, s).scale(&omega_inv));
    }

    #[test]
    fn phi_simple_values() {
        let l = lv(3);
        let u = NCTorusElement::unit_monomial(l, -1, 1, 0);
        let u_inv = NCTorusElement::unit_monomial(l, -1, -1, 0);
        assert_eq!(phi(CurveObservable::new(1, 0), l, -1), u.add(&u_inv).unwrap());
        let two = NCTorusElement::monomial(l, -1, 0, 0, CycScalar::from_int(12, 2));
        assert_eq!(phi(CurveObservable::new(0, 0), l, -1), two);
    }

    #[test]
    fn only_negative_sign_fits_printed_phase() {
        let l = lv(5);
        assert!(phi_product_to_sum_holds(0, 1, 1, 0, l, -1, 1));
        assert!(!phi_product_to_sum_holds(0, 1, 1, 0, l, 1, 1));
    }

    #[test]
    fn level_mismatch() {
        let a = NCTorusElement::one(lv(3), 1);
        let b = NCTorusElement::one(lv(4), 1);
        assert!(nc_mul(&a, &b).is_err());
    }
}
