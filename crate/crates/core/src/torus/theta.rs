//! Theta series at level `r` and the odd combinations spanning the torus state space.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::NumericError;

/// Largest `|Im z|` accepted by the series evaluators.
pub const IM_WINDOW: f64 = 2.0;

fn check_args(z: Complex64, r: u32, eps: f64) -> Result<(), NumericError> {
    if r < 1 {
        return Err(NumericError::InvalidArgument("level must be positive".into()));
    }
    if !(eps > 0.0) {
        return Err(NumericError::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    if !(z.im.abs() <= IM_WINDOW) {
        return Err(NumericError::OutsideWindow(z.im.abs()));
    }
    Ok(())
}

/// Sums `Σ_k e^{-πk²/(2r) + 2πikz}` over `k ≡ j (mod 2r)`, stopping once the remaining
/// Gaussian tail on each side is below `eps / 4`.
fn class_sum(j: i64, z: Complex64, r: u32, eps: f64) -> Complex64 {
    let m = 2 * r as i64;
    let r = r as f64;
    let log_mag = |k: f64| -PI * k * k / (2.0 * r) - 2.0 * PI * k * z.im;
    let term = |k: f64| Complex64::from_polar(log_mag(k).exp(), 2.0 * PI * k * z.re);
    // the peak of the Gaussian in k
    let k_star = -2.0 * r * z.im;
    let n0 = ((k_star - j as f64) / m as f64).round() as i64;
    let mut sum = term((j + m * n0) as f64);
    let threshold = (eps / 4.0).ln();
    for dir in [1i64, -1] {
        let mut n = n0 + dir;
        loop {
            let k = (j + m * n) as f64;
            let lm = log_mag(k);
            sum += term(k);
            // beyond the peak successive ratios are at most e^{-2π m}, so the tail is
            // bounded by twice the current term
            let past_peak = (k - k_star) * dir as f64 > 0.0;
            if past_peak && lm + 2f64.ln() < threshold {
                break;
            }
            n += dir;
        }
    }
    sum
}

/// `θ_j(z) = Σ_n e^{-π(2rn² + 2jn) + 2πiz(j + 2rn)}`, truncated with tail bound below `eps`.
pub fn theta_eval(j: i64, z: Complex64, r: u32, eps: f64) -> Result<Complex64, NumericError> {
    check_args(z, r, eps)?;
    let rf = r as f64;
    let jf = j as f64;
    // θ_j = e^{πj²/(2r)} · Σ_{k ≡ j} e^{-πk²/(2r)} e^{2πikz}; rescale eps accordingly
    let scale = (PI * jf * jf / (2.0 * rf)).exp();
    Ok(class_sum(j, z, r, eps / scale) * scale)
}

/// `ζ_j(z) = r^{1/4} e^{-πj²/(2r)} (θ_j(z) - θ_{-j}(z))`, assembled directly from the
/// Gaussian class sums, which avoids the large prefactors of the display.
pub fn zeta_eval(j: i64, z: Complex64, r: u32, eps: f64) -> Result<Complex64, NumericError> {
    check_args(z, r, eps)?;
    let m = 2 * r as i64;
    let jr = j.rem_euclid(m);
    if jr == 0 || jr == r as i64 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let pre = (r as f64).powf(0.25);
    let part = eps / (2.0 * pre);
    Ok((class_sum(j, z, r, part) - class_sum(-j, z, r, part)) * pre)
}

/// Samples of `ζ_1..ζ_{r-1}` on the points `x_a + i y_b`, laid out as
/// `out[j - 1][a * ys.len() + b]`. Uses the separable form of each Gaussian term.
pub fn zeta_table(r: u32, xs: &[f64], ys: &[f64], eps: f64) -> Result<Vec<Vec<Complex64>>, NumericError> {
    if r < 2 {
        return Err(NumericError::InvalidArgument("level must be at least 2".into()));
    }
    if let Some(&y) = ys.iter().find(|y| !(y.abs() <= IM_WINDOW)) {
        return Err(NumericError::OutsideWindow(y.abs()));
    }
    let m = 2 * r as i64;
    let rf = r as f64;
    let y_max = ys.iter().fold(0.0f64, |a, &y| a.max(y.abs()));
    // every k with a term above eps relative to the peak at |k| ≈ 2r|y|
    let spread = (2.0 * rf * (1.0 / eps).ln() / PI).sqrt().ceil() as i64 + 1;
    let k_max = (2.0 * rf * y_max).ceil() as i64 + spread;
    let pre = rf.powf(0.25);
    let ks: Vec<i64> = (-k_max..=k_max).collect();
    let x_phase: Vec<Vec<Complex64>> =
        ks.iter().map(|&k| xs.iter().map(|&x| Complex64::from_polar(1.0, 2.0 * PI * k as f64 * x)).collect()).collect();
    let y_decay: Vec<Vec<f64>> = ks
        .iter()
        .map(|&k| {
            let kf = k as f64;
            ys.iter().map(|&y| (-PI * kf * kf / (2.0 * rf) - 2.0 * PI * kf * y).exp()).collect()
        })
        .collect();
    let mut out = Vec::with_capacity(r as usize - 1);
    for j in 1..r as i64 {
        let mut vals = vec![Complex64::new(0.0, 0.0); xs.len() * ys.len()];
        for (ki, &k) in ks.iter().enumerate() {
            let kr = k.rem_euclid(m);
            let sign = if kr == j {
                1.0
            } else if kr == m - j {
                -1.0
            } else {
                continue;
            };
            for (a, xp) in x_phase[ki].iter().enumerate() {
                let row = &mut vals[a * ys.len()..(a + 1) * ys.len()];
                for (v, &d) in row.iter_mut().zip(&y_decay[ki]) {
                    *v += xp * (sign * pre * d);
                }
            }
        }
        out.push(vals);
    }
    Ok(out)
}
