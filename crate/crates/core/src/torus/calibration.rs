//! Empirical determination of the phase conventions shared by the operator formula, the
//! product-to-sum identity, the noncommutative torus, and the bracket comparison.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CalibrationError;
use crate::matrix::ComplexMatrix;
use crate::torus::goldman::fit_bracket_scale;
use crate::torus::nc::phi_product_to_sum_holds;
use crate::torus::operator::{cs_matrix, product_to_sum_check, CurveObservable, Level};

/// Candidate phase coefficients for `e^{iπc(mq-np)/r}`; the first is the printed one.
pub const PHASE_CANDIDATES: [f64; 4] = [1.0, -1.0, 0.5, -0.5];
/// Candidate commutation signs in `VU = e^{s·2πiħ} UV`; the first is the printed one.
pub const SIGN_CANDIDATES: [i8; 2] = [1, -1];
/// Matrix identities count as holding below this deviation.
pub const IDENTITY_TOL: f64 = 1e-10;
/// The bracket scale is fitted once at this level.
pub const KAPPA_LEVEL: u32 = 8;

/// Curve pairs used for the bracket-scale fit and the decay measurement.
pub fn default_pairs() -> Vec<(CurveObservable, CurveObservable)> {
    [((1, 0), (0, 1)), ((1, 1), (1, 0)), ((2, 1), (0, 1)), ((1, 2), (1, -1)), ((1, 0), (1, 3))]
        .iter()
        .map(|&((p, q), (m, n))| (CurveObservable::new(p, q), CurveObservable::new(m, n)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibrationRecord {
    pub c: f64,
    pub s: i8,
    pub sigma: i8,
    pub kappa: f64,
    pub r_set: Vec<u32>,
    pub max_deviation: f64,
}

/// Search bounds for the calibration sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CalibrationBounds {
    /// `|m|, |n|, |p|, |q|` bound for the matrix identity.
    pub operator_bound: i64,
    /// `|m|, |n|, |p|, |q|` bound for the exact identity in the noncommutative torus.
    pub phi_bound: i64,
    /// Largest level used for the exact identity.
    pub phi_level_max: u32,
}

impl Default for CalibrationBounds {
    fn default() -> Self {
        Self { operator_bound: 3, phi_bound: 3, phi_level_max: 8 }
    }
}

/// The record plus the evidence behind it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CalibrationOutcome {
    pub record: CalibrationRecord,
    /// Worst matrix deviation for each phase candidate.
    pub phase_scan: Vec<(f64, f64)>,
    /// Failed exact instances for each sign candidate, under the selected phase.
    pub sign_scan: Vec<(i8, usize)>,
    /// Instances that could tell the phase candidates apart.
    pub discriminating_instances: usize,
    /// Unsigned bracket scale before `σ` is split off.
    pub raw_scale: f64,
}

fn operator_table(r: u32, bound: i64) -> HashMap<(i64, i64), ComplexMatrix> {
    let mut out = HashMap::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            out.insert((p, q), cs_matrix(p, q, r));
        }
    }
    out
}

fn box_iter(bound: i64) -> impl Iterator<Item = (i64, i64, i64, i64)> {
    let range = move || -bound..=bound;
    range().flat_map(move |m| {
        range().flat_map(move |n| range().flat_map(move |p| range().map(move |q| (m, n, p, q))))
    })
}

/// Worst deviation of the matrix identity for every phase candidate, and the number of
/// instances where the candidates disagree by more than the tolerance.
fn scan_phases(levels: &[u32], bound: i64) -> (Vec<f64>, usize) {
    let mut worst = vec![0.0f64; PHASE_CANDIDATES.len()];
    let mut discriminating = 0;
    for &r in levels {
        let ops = operator_table(r, 2 * bound);
        for (m, n, p, q) in box_iter(bound) {
            let lhs = &ops[&(m, n)] * &ops[&(p, q)];
            let plus = &ops[&(m + p, n + q)];
            let minus = &ops[&(m - p, n - q)];
            let k = (m * q - n * p) as f64;
            let devs: Vec<f64> = PHASE_CANDIDATES
                .iter()
                .map(|&c| {
                    let e = num_complex::Complex64::from_polar(1.0, std::f64::consts::PI * c * k / r as f64);
                    lhs.max_abs_diff(&(&plus.scale(e) + &minus.scale(e.conj())))
                })
                .collect();
            let lo = devs.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = devs.iter().cloned().fold(0.0, f64::max);
            // vanishing instances hold for every candidate and carry no information
            if hi - lo > IDENTITY_TOL {
                discriminating += 1;
            }
            for (w, d) in worst.iter_mut().zip(devs) {
                *w = w.max(d);
            }
        }
    }
    (worst, discriminating)
}

fn unique<T: Copy>(consistent: &[T], what: &str, detail: String) -> Result<T, CalibrationError> {
    match consistent {
        [one] => Ok(*one),
        [] => Err(CalibrationError::NoneConsistent(format!("{what}: {detail}"))),
        _ => Err(CalibrationError::Ambiguous(format!("{what}: {detail}"))),
    }
}

pub fn calibrate_conventions(r_set: &[u32]) -> Result<CalibrationOutcome, CalibrationError> {
    calibrate_conventions_with(r_set, CalibrationBounds::default())
}

pub fn calibrate_conventions_with(r_set: &[u32], bounds: CalibrationBounds) -> Result<CalibrationOutcome, CalibrationError> {
    if r_set.is_empty() || r_set.iter().any(|&r| r < 2) {
        return Err(CalibrationError::Inconsistent(format!("level set {r_set:?} must be nonempty with every r >= 2")));
    }
    let (worst, discriminating) = scan_phases(r_set, bounds.operator_bound);
    let phase_scan: Vec<(f64, f64)> = PHASE_CANDIDATES.iter().copied().zip(worst.iter().copied()).collect();
    let detail = format!("{phase_scan:?}");
    if discriminating == 0 {
        return Err(CalibrationError::Ambiguous(format!(
            "no instance over levels {r_set:?} distinguishes the phase candidates; deviations {detail}"
        )));
    }
    let consistent: Vec<f64> = phase_scan.iter().filter(|(_, d)| *d < IDENTITY_TOL).map(|&(c, _)| c).collect();
    let c = unique(&consistent, "phase coefficient", detail)?;
    let twice_c = (2.0 * c).round() as i64;

    let phi_levels: Vec<u32> = r_set.iter().copied().filter(|&r| r <= bounds.phi_level_max).collect();
    let phi_levels = if phi_levels.is_empty() { vec![r_set[0]] } else { phi_levels };
    let sign_scan: Vec<(i8, usize)> = SIGN_CANDIDATES
        .iter()
        .map(|&s| {
            let failures = phi_levels
                .iter()
                .map(|&r| {
                    let level = Level::new(r).expect("checked above");
                    box_iter(bounds.phi_bound)
                        .filter(|&(m, n, p, q)| !phi_product_to_sum_holds(m, n, p, q, level, s, twice_c))
                        .count()
                })
                .sum();
            (s, failures)
        })
        .collect();
    let consistent: Vec<i8> = sign_scan.iter().filter(|(_, f)| *f == 0).map(|&(s, _)| s).collect();
    let s = unique(&consistent, "commutation sign", format!("failed instances {sign_scan:?}"))?;

    let raw_scale = fit_bracket_scale(&default_pairs(), Level::new(KAPPA_LEVEL).expect("valid level"));
    if !(raw_scale.is_finite() && raw_scale != 0.0) {
        return Err(CalibrationError::NoneConsistent(format!("bracket scale fit gave {raw_scale}")));
    }
    let record = CalibrationRecord {
        c,
        s,
        sigma: if raw_scale > 0.0 { 1 } else { -1 },
        kappa: raw_scale.abs(),
        r_set: r_set.to_vec(),
        max_deviation: worst[PHASE_CANDIDATES.iter().position(|&x| x == c).expect("candidate")],
    };
    Ok(CalibrationOutcome { record, phase_scan, sign_scan, discriminating_instances: discriminating, raw_scale })
}

impl CalibrationRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CalibrationError> {
        let rec: Self = serde_json::from_str(text).map_err(|e| CalibrationError::Unreadable(e.to_string()))?;
        rec.validate()?;
        Ok(rec)
    }

    pub fn load(path: &Path) -> Result<Self, CalibrationError> {
        let text = std::fs::read_to_string(path).map_err(|e| CalibrationError::Unreadable(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json() + "\n")
    }

    /// Structural checks plus a spot re-verification of the stored conventions.
    pub fn validate(&self) -> Result<(), CalibrationError> {
        let bad = |msg: String| Err(CalibrationError::Inconsistent(msg));
        if !PHASE_CANDIDATES.contains(&self.c) {
            return bad(format!("phase coefficient {} is not a candidate", self.c));
        }
        if !SIGN_CANDIDATES.contains(&self.s) || !SIGN_CANDIDATES.contains(&self.sigma) {
            return bad(format!("signs must be ±1, got s={} sigma={}", self.s, self.sigma));
        }
        if !(self.kappa.is_finite() && self.kappa > 0.0) {
            return bad(format!("kappa must be positive, got {}", self.kappa));
        }
        if self.r_set.is_empty() || self.r_set.iter().any(|&r| r < 2) {
            return bad(format!("level set {:?} is invalid", self.r_set));
        }
        if !(self.max_deviation.is_finite() && self.max_deviation < IDENTITY_TOL) {
            return bad(format!("stored deviation {} exceeds {IDENTITY_TOL}", self.max_deviation));
        }
        let dev = product_to_sum_check(1, 0, 0, 1, 3, self.c).max(product_to_sum_check(2, 1, -1, 1, 5, self.c));
        if dev > IDENTITY_TOL {
            return bad(format!("phase coefficient {} fails the product-to-sum identity ({dev:e})", self.c));
        }
        let twice_c = (2.0 * self.c).round() as i64;
        if !phi_product_to_sum_holds(0, 1, 1, 0, Level::new(5).expect("valid"), self.s, twice_c) {
            return bad(format!("commutation sign {} fails the homomorphism identity", self.s));
        }
        Ok(())
    }

    pub fn twice_c(&self) -> i64 {
        (2.0 * self.c).round() as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_conventions() {
        let out = calibrate_conventions_with(&[3, 4, 5], CalibrationBounds { operator_bound: 2, phi_bound: 2, phi_level_max: 8 })
            .unwrap();
        assert_eq!(out.record.c, 0.5);
        assert_eq!(out.record.s, -1);
        assert!(out.record.max_deviation < IDENTITY_TOL);
        assert!(out.phase_scan[0].1 > 0.1, "printed phase should fail");
        assert!(out.sign_scan[0].1 > 0, "printed sign should fail");
        assert!(out.record.kappa > 0.0);
    }

    #[test]
    fn level_two_alone_is_undetermined() {
        let err = calibrate_conventions_with(&[2], CalibrationBounds { operator_bound: 2, phi_bound: 1, phi_level_max: 8 }).unwrap_err();
        assert!(matches!(err, CalibrationError::Ambiguous(_)), "{err}");
    }

    #[test]
    fn json_round_trip_and_guards() {
        let rec = CalibrationRecord { c: 0.5, s: -1, sigma: -1, kappa: 12.0, r_set: vec![3, 4], max_deviation: 1e-14 };
        assert_eq!(CalibrationRecord::from_json(&rec.to_json()).unwrap(), rec);
        assert!(matches!(CalibrationRecord::from_json("{not json"), Err(CalibrationError::Unreadable(_))));
        let wrong = CalibrationRecord { c: 1.0, ..rec.clone() };
        assert!(matches!(CalibrationRecord::from_json(&wrong.to_json()), Err(CalibrationError::Inconsistent(_))));
        let wrong = CalibrationRecord { s: 1, ..rec };
        assert!(matches!(wrong.validate(), Err(CalibrationError::Inconsistent(_))));
    }
}
