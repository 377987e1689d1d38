//! Toeplitz operators with heat-smoothed symbols on the level-`r` theta space, computed by
//! quadrature over the torus fundamental domain, and their comparison with the curve
//! operators.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::NumericError;
use crate::matrix::ComplexMatrix;
use crate::torus::{cs_operator, zeta_table, CurveObservable, Level};

pub const MIN_GRID: usize = 32;
pub const MAX_CONDITION: f64 = 1e8;
pub const MAX_DRIFT: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureSpec {
    /// Points per axis on `[0, 1)`.
    pub grid: usize,
    /// Truncation tolerance for the theta series.
    pub eps: f64,
    /// The consistency estimate compares `grid` with `grid * refinement`.
    pub refinement: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { grid: MIN_GRID, eps: 1e-16, refinement: 2 }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<(), NumericError> {
        if self.grid < MIN_GRID {
            return Err(NumericError::InvalidArgument(format!("grid {} is below {MIN_GRID}", self.grid)));
        }
        if self.refinement < 2 {
            return Err(NumericError::InvalidArgument("refinement factor must be at least 2".into()));
        }
        if !(self.eps > 0.0 && self.eps < 1e-6) {
            return Err(NumericError::InvalidArgument(format!("eps {} must lie in (0, 1e-6)", self.eps)));
        }
        Ok(())
    }
}

/// Hermitian weight `e^{-rate·π r y²}` on the sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Weight {
    /// `rate = 4`, matching curvature `2r`.
    Curvature,
    /// `rate = 2`; a deliberately wrong metric used as a negative control.
    HalfCurvature,
}

impl Weight {
    fn rate(self) -> f64 {
        match self {
            Weight::Curvature => 4.0,
            Weight::HalfCurvature => 2.0,
        }
    }
}

/// Basis samples and quadrature weights on one grid.
pub struct QuadratureGrid {
    level: Level,
    n: usize,
    zeta: Vec<Vec<Complex64>>,
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// per-`y` weight including the `1/n²` cell area
    wy: Vec<f64>,
}

impl QuadratureGrid {
    pub fn new(level: Level, n: usize, eps: f64, weight: Weight) -> Result<Self, NumericError> {
        let xs: Vec<f64> = (0..n).map(|a| a as f64 / n as f64).collect();
        let ys = xs.clone();
        let zeta = zeta_table(level.r(), &xs, &ys, eps)?;
        let rf = level.r() as f64;
        let cell = 1.0 / (n * n) as f64;
        let wy = ys.iter().map(|&y| (-weight.rate() * std::f64::consts::PI * rf * y * y).exp() * cell).collect();
        Ok(Self { level, n, zeta, xs, ys, wy })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    /// `Σ f ζ_j conj(ζ_k) w` as the `(k, j)` entry, over basis indices `1..r-1`.
    fn weighted_matrix(&self, f: impl Fn(f64, f64) -> f64) -> ComplexMatrix {
        let dim = self.level.dim();
        let ny = self.ys.len();
        let mut fw = vec![0.0; self.xs.len() * ny];
        for (a, &x) in self.xs.iter().enumerate() {
            for (b, &y) in self.ys.iter().enumerate() {
                fw[a * ny + b] = f(x, y) * self.wy[b];
            }
        }
        ComplexMatrix::from_fn(dim, dim, |k, j| {
            self.zeta[j].iter().zip(&self.zeta[k]).zip(&fw).map(|((zj, zk), &w)| zj * zk.conj() * w).sum()
        })
    }

    pub fn gram(&self) -> ComplexMatrix {
        self.weighted_matrix(|_, _| 1.0)
    }

    /// `F_{kj} = ⟨f_c ζ_j, ζ_k⟩` for the smoothed symbol of `c`.
    pub fn symbol_matrix(&self, c: CurveObservable) -> ComplexMatrix {
        let heat = heat_factor(c, self.level);
        self.weighted_matrix(|x, y| heat * c.classical(x, y))
    }
}

/// `e^{πħ(p² + q²)/2}`, the action of the heat operator `e^{-Δħ/4}` on `cos 2π(px + qy)`.
pub fn heat_factor(c: CurveObservable, level: Level) -> f64 {
    let (p, q) = (c.p() as f64, c.q() as f64);
    (std::f64::consts::PI * level.hbar_f64() * (p * p + q * q) / 2.0).exp()
}

fn check_indices(j: usize, k: usize, level: Level) -> Result<(), NumericError> {
    let top = level.dim();
    if j < 1 || j > top || k < 1 || k > top {
        return Err(NumericError::InvalidArgument(format!("basis indices ({j}, {k}) must lie in 1..={top}")));
    }
    Ok(())
}

/// `⟨ζ_j, ζ_k⟩` with weight `e^{-4πr y²}`, refined once to certify convergence.
pub fn inner_product(j: usize, k: usize, level: Level, spec: &QuadratureSpec) -> Result<Complex64, NumericError> {
    check_indices(j, k, level)?;
    spec.validate()?;
    let coarse = QuadratureGrid::new(level, spec.grid, spec.eps, Weight::Curvature)?.gram();
    let fine = QuadratureGrid::new(level, spec.grid * spec.refinement, spec.eps, Weight::Curvature)?.gram();
    let (a, b) = (coarse[(k - 1, j - 1)], fine[(k - 1, j - 1)]);
    let drift = (a - b).norm();
    if drift > MAX_DRIFT {
        return Err(NumericError::NotConverged { drift, limit: MAX_DRIFT });
    }
    Ok(b)
}

pub fn gram_matrix(level: Level, spec: &QuadratureSpec) -> Result<ComplexMatrix, NumericError> {
    spec.validate()?;
    Ok(QuadratureGrid::new(level, spec.grid, spec.eps, Weight::Curvature)?.gram())
}

/// `G^{-1} F` on one grid, with the Gram condition number.
fn toeplitz_on(grid: &QuadratureGrid, c: CurveObservable) -> Result<(ComplexMatrix, f64), NumericError> {
    let g = grid.gram();
    let cond = g.condition_number();
    if !(cond <= MAX_CONDITION) {
        return Err(NumericError::IllConditioned(cond));
    }
    Ok((g.solve(&grid.symbol_matrix(c))?, cond))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzResult {
    pub matrix: ComplexMatrix,
    pub gram_condition: f64,
    /// `‖T_N - T_{N·refinement}‖_max`
    pub drift: f64,
}

fn toeplitz_refined(c: CurveObservable, level: Level, spec: &QuadratureSpec, weight: Weight) -> Result<ToeplitzResult, NumericError> {
    spec.validate()?;
    let coarse = QuadratureGrid::new(level, spec.grid, spec.eps, weight)?;
    let fine = QuadratureGrid::new(level, spec.grid * spec.refinement, spec.eps, weight)?;
    let (t0, _) = toeplitz_on(&coarse, c)?;
    let (t1, cond) = toeplitz_on(&fine, c)?;
    Ok(ToeplitzResult { drift: t0.max_abs_diff(&t1), matrix: t1, gram_condition: cond })
}

/// The Toeplitz operator of the heat-smoothed symbol of `c`.
pub fn toeplitz_matrix(c: CurveObservable, level: Level, spec: &QuadratureSpec) -> Result<ToeplitzResult, NumericError> {
    let out = toeplitz_refined(c, level, spec, Weight::Curvature)?;
    if out.drift > MAX_DRIFT {
        return Err(NumericError::NotConverged { drift: out.drift, limit: MAX_DRIFT });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeylReport {
    pub r: u32,
    pub p: i64,
    pub q: i64,
    pub grid: usize,
    pub max_abs_diff: f64,
    pub best_scalar_diff: f64,
    /// `[re, im]` of the least-squares scalar
    pub fitted_scalar: [f64; 2],
    pub gram_condition: f64,
    pub quadrature_drift: f64,
    pub weight: Weight,
}

impl WeylReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `‖λT - C‖_max` for the least-squares `λ = ⟨T, C⟩ / ⟨T, T⟩`, together with `λ`.
pub fn best_scalar_fit(t: &ComplexMatrix, c: &ComplexMatrix) -> (f64, Complex64) {
    let tt = t.frobenius_dot(t);
    if tt.norm() == 0.0 {
        return (c.max_abs(), Complex64::new(0.0, 0.0));
    }
    let lambda = t.frobenius_dot(c) / tt;
    (t.scale(lambda).max_abs_diff(c), lambda)
}

fn compare(c: CurveObservable, level: Level, spec: &QuadratureSpec, weight: Weight) -> Result<WeylReport, NumericError> {
    let t = toeplitz_refined(c, level, spec, weight)?;
    let qg = cs_operator(c, level);
    let (best, lambda) = best_scalar_fit(&t.matrix, &qg);
    Ok(WeylReport {
        r: level.r(),
        p: c.p(),
        q: c.q(),
        grid: spec.grid * spec.refinement,
        max_abs_diff: t.matrix.max_abs_diff(&qg),
        best_scalar_diff: best,
        fitted_scalar: [lambda.re, lambda.im],
        gram_condition: t.gram_condition,
        quadrature_drift: t.drift,
        weight,
    })
}

/// Compares the Toeplitz operator of `c` with the curve operator.
pub fn weyl_qg_compare(c: CurveObservable, level: Level, spec: &QuadratureSpec) -> Result<WeylReport, NumericError> {
    let rep = compare(c, level, spec, Weight::Curvature)?;
    if rep.quadrature_drift > MAX_DRIFT {
        return Err(NumericError::NotConverged { drift: rep.quadrature_drift, limit: MAX_DRIFT });
    }
    Ok(rep)
}

/// The same comparison under a wrong weight; no convergence guard, since the point is to
/// show the comparison is sensitive to the metric.
pub fn weyl_negative_control(c: CurveObservable, level: Level, spec: &QuadratureSpec) -> Result<WeylReport, NumericError> {
    compare(c, level, spec, Weight::HalfCurvature)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(r: u32) -> Level {
        Level::new(r).unwrap()
    }

    #[test]
    fn gram_is_identity_like() {
        let spec = QuadratureSpec::default();
        for r in 2..9 {
            let g = gram_matrix(lv(r), &spec).unwrap();
            assert!(g.hermitian_defect() < 1e-12);
            assert!(g.hermitian_eigenvalues().iter().all(|&e| e > 0.5));
            for j in 0..g.rows() {
                for k in 0..g.cols() {
                    if j != k {
                        assert!(g[(k, j)].norm() < 1e-8);
                    }
                }
            }
        }
        let v = inner_product(2, 2, lv(5), &spec).unwrap();
        assert!(v.re > 0.0);
        assert!(inner_product(0, 1, lv(5), &spec).is_err());
    }

    #[test]
    fn constant_symbol() {
        let t = toeplitz_matrix(CurveObservable::new(0, 0), lv(4), &QuadratureSpec::default()).unwrap();
        let two = ComplexMatrix::identity(3).scale(Complex64::new(2.0, 0.0));
        assert!(t.matrix.max_abs_diff(&two) < 1e-8);
    }

    #[test]
    fn level_three_meridian() {
        let rep = weyl_qg_compare(CurveObservable::new(1, 0), lv(3), &QuadratureSpec::default()).unwrap();
        assert!(rep.max_abs_diff < 1e-6 && rep.best_scalar_diff < 1e-6, "{rep:?}");
    }

    #[test]
    fn heat_factor_halves_with_level() {
        let c = CurveObservable::new(1, 2);
        let a = heat_factor(c, lv(3)).ln();
        let b = heat_factor(c, lv(6)).ln();
        assert!((a - 2.0 * b).abs() < 1e-14);
    }

    #[test]
    fn wrong_weight_is_detected() {
        let rep = weyl_negative_control(CurveObservable::new(1, 0), lv(3), &QuadratureSpec::default()).unwrap();
        assert!(rep.best_scalar_diff > 1e-3, "{rep:?}");
    }

    #[test]
    fn spec_guard() {
        let spec = QuadratureSpec { grid: 16, ..QuadratureSpec::default() };
        assert!(gram_matrix(lv(3), &spec).is_err());
    }
}
