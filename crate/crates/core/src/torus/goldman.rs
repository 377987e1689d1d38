//! The Goldman bracket of torus curves and its comparison with operator commutators.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;
use serde::Serialize;

use crate::matrix::ComplexMatrix;
use crate::torus::operator::{cs_operator, CurveObservable, Level};

/// Finite rational combination of curve observables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalTraceSum {
    terms: BTreeMap<CurveObservable, Ratio<i64>>,
}

impl FormalTraceSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, c: CurveObservable, k: Ratio<i64>) {
        let e = self.terms.entry(c).or_insert_with(|| Ratio::from_integer(0));
        *e += k;
        if *e == Ratio::from_integer(0) {
            self.terms.remove(&c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<CurveObservable, Ratio<i64>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, c: CurveObservable) -> Ratio<i64> {
        self.terms.get(&c).copied().unwrap_or_else(|| Ratio::from_integer(0))
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&c, &k)| (c, -k)).collect() }
    }

    /// `Σ k_c · C(c)` at the given level.
    pub fn to_operator(&self, level: Level) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(level.dim(), level.dim());
        for (&c, k) in &self.terms {
            let w = *k.numer() as f64 / *k.denom() as f64;
            out = &out + &cs_operator(c, level).scale(Complex64::new(w, 0.0));
        }
        out
    }
}

impl fmt::Display for FormalTraceSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, k)| format!("{k}*I{c}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `σ · ½(pn - qm)(I_{(p-m, q-n)} - I_{(p+m, q+n)})` for `a = (p, q)`, `b = (m, n)`.
pub fn goldman_torus(a: CurveObservable, b: CurveObservable, sigma: i8) -> FormalTraceSum {
    let (p, q, m, n) = (a.p(), a.q(), b.p(), b.q());
    let k = Ratio::new(sigma as i64 * (p * n - q * m), 2);
    let mut out = FormalTraceSum::zero();
    out.add_term(CurveObservable::new(p - m, q - n), k);
    out.add_term(CurveObservable::new(p + m, q + n), -k);
    out
}

/// `(1/(iħ)) [C_a, C_b]`.
pub fn scaled_commutator(a: CurveObservable, b: CurveObservable, level: Level) -> ComplexMatrix {
    let comm = cs_operator(a, level).commutator(&cs_operator(b, level));
    // 1/(iħ) = -2r i
    comm.scale(Complex64::new(0.0, -2.0 * level.r() as f64))
}

/// Least-squares real `k` minimizing `Σ ‖L - k·G‖²` over the pairs at one level, where `L`
/// is the scaled commutator and `G` the bracket operator with `σ = +1`.
pub fn fit_bracket_scale(pairs: &[(CurveObservable, CurveObservable)], level: Level) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for &(a, b) in pairs {
        let l = scaled_commutator(a, b, level);
        let g = goldman_torus(a, b, 1).to_operator(level);
        num += g.frobenius_dot(&l).re;
        den += g.frobenius_dot(&g).re;
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// `E(r)` for one pair at one level.
pub fn correspondence_error(a: CurveObservable, b: CurveObservable, level: Level, sigma: i8, kappa: f64) -> f64 {
    let l = scaled_commutator(a, b, level);
    let g = goldman_torus(a, b, sigma).to_operator(level);
    l.max_abs_diff(&g.scale(Complex64::new(kappa, 0.0)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayTable {
    pub alpha: (i64, i64),
    pub beta: (i64, i64),
    pub kappa: f64,
    pub sigma: i8,
    pub rows: Vec<(u32, f64)>,
}

impl DecayTable {
    /// `E(r_{i+1}) / E(r_i)`, or `None` where `E(r_i)` vanishes.
    pub fn ratios(&self) -> Vec<Option<f64>> {
        self.rows.windows(2).map(|w| (w[0].1 > 0.0).then(|| w[1].1 / w[0].1)).collect()
    }

    /// Least-squares slope of `log E` against `log r`; `None` if any error vanishes.
    pub fn log_log_slope(&self) -> Option<f64> {
        if self.rows.len() < 2 || self.rows.iter().any(|&(_, e)| !(e > 0.0)) {
            return None;
        }
        let pts: Vec<(f64, f64)> = self.rows.iter().map(|&(r, e)| ((r as f64).ln(), e.ln())).collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        Some(sxy / sxx)
    }

    /// One-line summary: errors, successive ratios and slope.
    pub fn summary(&self) -> String {
        let num = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.4}"));
        let errs: Vec<String> = self.rows.iter().map(|&(r, e)| format!("{r}:{e:.4e}")).collect();
        let ratios: Vec<String> = self.ratios().into_iter().map(num).collect();
        format!("E = [{}]; ratios [{}]; slope {}", errs.join(", "), ratios.join(", "), num(self.log_log_slope()))
    }

    /// All errors below `tol`, as for a commuting pair.
    pub fn all_below(&self, tol: f64) -> bool {
        self.rows.iter().all(|&(_, e)| e < tol)
    }
}

/// `E(r)` across `levels` with fixed `σ` and `κ`.
pub fn correspondence_check(a: CurveObservable, b: CurveObservable, levels: &[Level], sigma: i8, kappa: f64) -> DecayTable {
    DecayTable {
        alpha: (a.p(), a.q()),
        beta: (b.p(), b.q()),
        kappa,
        sigma,
        rows: levels.iter().map(|&l| (l.r(), correspondence_error(a, b, l, sigma, kappa))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(p: i64, q: i64) -> CurveObservable {
        CurveObservable::new(p, q)
    }

    #[test]
    fn self_bracket_vanishes() {
        for c in [cv(1, 0), cv(2, 3), cv(0, 1)] {
            assert!(goldman_torus(c, c, 1).is_zero());
            let t = correspondence_check(c, c, &[Level::new(8).unwrap(), Level::new(16).unwrap()], 1, 3.0);
            assert!(t.all_below(1e-12));
        }
    }

    #[test]
    fn meridian_longitude() {
        let g = goldman_torus(cv(1, 0), cv(0, 1), 1);
        assert_eq!(g.coeff(cv(1, -1)), Ratio::new(1, 2));
        assert_eq!(g.coeff(cv(1, 1)), Ratio::new(-1, 2));
        assert_eq!(g.terms().len(), 2);
        assert_eq!(goldman_torus(cv(1, 0), cv(0, 1), -1), g.neg());
    }

    #[test]
    fn antisymmetric() {
        for (a, b) in [(cv(1, 0), cv(0, 1)), (cv(2, 1), cv(1, -3)), (cv(1, 1), cv(3, 2))] {
            assert_eq!(goldman_torus(a, b, 1), goldman_torus(b, a, 1).neg());
        }
    }

    #[test]
    fn scale_fit_is_positive_for_negative_sign() {
        let pairs = [(cv(1, 0), cv(0, 1)), (cv(1, 1), cv(1, 0))];
        let k = fit_bracket_scale(&pairs, Level::new(8).unwrap());
        assert!(k < 0.0, "{k}");
    }
}
