//! Exact Laurent polynomials with integer coefficients.
//!
//! [`Laurent`] is a polynomial in a single variable with integer exponents; the
//! Kauffman bracket lives here in the variable `A`. [`HalfExpLaurent`] is the
//! same ring read as polynomials in `t^{1/2}`: exponents are stored doubled, so
//! the stored key `k` stands for `t^{k/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::ParseError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeff · x^exp`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (exp, coeff) in iter {
            p.add_term(exp, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order, as `(exp, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    /// Substitutes `x ↦ x^k`. A zero `k` collapses everything to the constant term sum.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e * k, c)))
    }

    /// Exact division by `x^d`-aligned exponents: returns `None` unless every exponent is a
    /// multiple of `d`, otherwise the polynomial with exponents divided by `d`.
    pub fn compress_exponents(&self, d: i64) -> Option<Self> {
        assert!(d != 0);
        if self.terms.keys().any(|e| e % d != 0) {
            return None;
        }
        Some(Self { terms: self.terms.iter().map(|(&e, &c)| (e / d, c)).collect() })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a complex point (nonzero when negative exponents are present).
    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.terms.iter().map(|(&e, &c)| x.powi(e as i32) * c as f64).sum()
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        &self - &rhs
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "A", |e| if e == 1 { String::new() } else { format!("^{e}") })
    }
}

/// A Laurent polynomial in `t^{1/2}`; the exponent key `k` means `t^{k/2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfExpLaurent(Laurent);

impl HalfExpLaurent {
    pub fn zero() -> Self {
        Self(Laurent::zero())
    }

    pub fn one() -> Self {
        Self(Laurent::one())
    }

    /// `coeff · t^{half_exp/2}`.
    pub fn monomial(coeff: i64, half_exp: i64) -> Self {
        Self(Laurent::monomial(coeff, half_exp))
    }

    /// `coeff · t^exp` for an integer power of `t`.
    pub fn t_pow(coeff: i64, exp: i64) -> Self {
        Self::monomial(coeff, 2 * exp)
    }

    /// Builds from `(integer t-exponent, coeff)` pairs.
    pub fn from_t_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self(Laurent::from_terms(iter.into_iter().map(|(e, c)| (2 * e, c))))
    }

    pub fn from_half_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self(Laurent::from_terms(iter))
    }

    pub fn as_laurent(&self) -> &Laurent {
        &self.0
    }

    pub fn into_laurent(self) -> Laurent {
        self.0
    }

    pub fn from_laurent(p: Laurent) -> Self {
        Self(p)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `(doubled exponent, coeff)` in ascending order.
    pub fn half_terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.terms()
    }

    /// `t ↦ t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self(self.0.substitute_power(-1))
    }

    /// Value at `t^{1/2} = e^{iπ/r}`, i.e. `t = e^{2πi/r}`.
    pub fn eval_at_root(&self, r: u32) -> Complex64 {
        assert!(r >= 2, "root order must be at least 2");
        let base = std::f64::consts::PI / r as f64;
        self.0
            .terms()
            .map(|(k, c)| Complex64::from_polar(1.0, base * k as f64) * c as f64)
            .sum()
    }
}

impl Add for &HalfExpLaurent {
    type Output = HalfExpLaurent;
    fn add(self, rhs: &HalfExpLaurent) -> HalfExpLaurent {
        HalfExpLaurent(&self.0 + &rhs.0)
    }
}

impl Sub for &HalfExpLaurent {
    type Output = HalfExpLaurent;
    fn sub(self, rhs: &HalfExpLaurent) -> HalfExpLaurent {
        HalfExpLaurent(&self.0 - &rhs.0)
    }
}

impl Mul for &HalfExpLaurent {
    type Output = HalfExpLaurent;
    fn mul(self, rhs: &HalfExpLaurent) -> HalfExpLaurent {
        HalfExpLaurent(&self.0 * &rhs.0)
    }
}

impl Neg for &HalfExpLaurent {
    type Output = HalfExpLaurent;
    fn neg(self) -> HalfExpLaurent {
        HalfExpLaurent(-&self.0)
    }
}

/// Substitutes `t^{1/2} = e^{iπ/r}` into `p`.
pub fn laurent_eval_at_root(p: &HalfExpLaurent, r: u32) -> Complex64 {
    p.eval_at_root(r)
}

fn t_exponent_text(k: i64) -> String {
    if k % 2 != 0 {
        format!("^({k}/2)")
    } else if k == 2 {
        String::new()
    } else {
        format!("^{}", k / 2)
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, i64)>,
    var: &str,
    exp_text: impl Fn(i64) -> String,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let mag = c.unsigned_abs();
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c < 0 { " - " } else { " + " })?;
        }
        first = false;
        if e == 0 {
            write!(f, "{mag}")?;
        } else {
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{var}{}", exp_text(e))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for HalfExpLaurent {
    /// Ascending exponents, e.g. `t^(-1/2) + t^(1/2)` or `t + t^3 - t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0.terms(), "t", t_exponent_text)
    }
}

impl FromStr for HalfExpLaurent {
    type Err = ParseError;

    /// Parses the rendering produced by `Display`; whitespace between tokens is optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| ParseError::Polynomial { text: s.to_string(), reason: msg.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let bytes = compact.as_bytes();
        let mut out = Laurent::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(err("expected '+' or '-' between terms"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mag: Option<i64> = if i > start {
                Some(compact[start..i].parse().map_err(|_| err("coefficient overflow"))?)
            } else {
                None
            };
            let has_var = i < bytes.len() && (bytes[i] == b'*' || bytes[i] == b't');
            if !has_var {
                let m = mag.ok_or_else(|| err("missing term"))?;
                out.add_term(0, sign * m);
                continue;
            }
            if bytes[i] == b'*' {
                if mag.is_none() {
                    return Err(err("'*' without coefficient"));
                }
                i += 1;
            }
            if i >= bytes.len() || bytes[i] != b't' {
                return Err(err("expected variable 't'"));
            }
            i += 1;
            let half_exp = if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                if i < bytes.len() && bytes[i] == b'(' {
                    let close = compact[i..].find(')').ok_or_else(|| err("unclosed '('"))? + i;
                    let inner = &compact[i + 1..close];
                    i = close + 1;
                    let (num, den) = inner.split_once('/').ok_or_else(|| err("expected k/2"))?;
                    if den != "2" {
                        return Err(err("only half-integer exponents are supported"));
                    }
                    num.parse::<i64>().map_err(|_| err("bad exponent"))?
                } else {
                    let st = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    2 * compact[st..i].parse::<i64>().map_err(|_| err("bad exponent"))?
                }
            } else {
                2
            };
            out.add_term(half_exp, sign * mag.unwrap_or(1));
        }
        Ok(Self(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_examples() {
        let p = HalfExpLaurent::from_half_terms([(1, 1), (-1, 1)]);
        assert_eq!(p.to_string(), "t^(-1/2) + t^(1/2)");
        let trefoil = HalfExpLaurent::from_t_terms([(1, 1), (3, 1), (4, -1)]);
        assert_eq!(trefoil.to_string(), "t + t^3 - t^4");
        assert_eq!(HalfExpLaurent::zero().to_string(), "0");
        assert_eq!(HalfExpLaurent::from_t_terms([(-2, -3), (0, 2)]).to_string(), "-3*t^-2 + 2");
    }

    #[test]
    fn parse_examples() {
        let p: HalfExpLaurent = "t + t^3 - t^4".parse().unwrap();
        assert_eq!(p, HalfExpLaurent::from_t_terms([(1, 1), (3, 1), (4, -1)]));
        let q: HalfExpLaurent = "-t^(1/2) - t^(5/2)".parse().unwrap();
        assert_eq!(q, HalfExpLaurent::from_half_terms([(1, -1), (5, -1)]));
        assert!("t^(1/3)".parse::<HalfExpLaurent>().is_err());
        assert!("".parse::<HalfExpLaurent>().is_err());
        assert!("t t".parse::<HalfExpLaurent>().is_err());
    }

    #[test]
    fn eval_constant_and_sign_case() {
        assert!((HalfExpLaurent::one().eval_at_root(7) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let p = HalfExpLaurent::from_t_terms([(1, 1), (3, 1), (4, -1)]);
        assert!((p.eval_at_root(2) - Complex64::new(-3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eval_matches_termwise_sum() {
        let p = HalfExpLaurent::from_t_terms([(1, 1), (3, 1), (4, -1)]);
        let t = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0);
        let direct = t + t * t * t - t * t * t * t;
        assert!((p.eval_at_root(5) - direct).norm() < 1e-12);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = Laurent::monomial(3, 2);
        p.add_term(2, -3);
        assert!(p.is_zero());
        let q = &Laurent::monomial(1, 1) - &Laurent::monomial(1, 1);
        assert_eq!(q.len(), 0);
    }
}
