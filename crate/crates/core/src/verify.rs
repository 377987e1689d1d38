//! The verification suite: every checkable identity, run end to end, collected into a
//! versioned machine-readable report.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use crate::knots::{braid_closure_pd, jones, parse_pd, skein_triple, BraidWord};
use crate::laurent::HalfExpLaurent;
use crate::temperley_lieb::markov_trace_jones;
use crate::toeplitz::{weyl_negative_control, weyl_qg_compare, QuadratureSpec, MAX_DRIFT};
use crate::torus::{
    calibrate_conventions_with, chebyshev_check, commutator_identity_check, correspondence_check, cs_matrix, default_pairs,
    CalibrationBounds, CalibrationRecord, CurveObservable, Level, IDENTITY_TOL, KAPPA_LEVEL,
};
use crate::verlinde::{count_colorings, spine_graph_of_kind, verlinde_dim, verlinde_integrality_defect, SpineKind, INTEGRALITY_TOL};

pub const SCHEMA_VERSION: u32 = 1;

/// Failure class, which decides the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Input,
    Math,
    Calibration,
}

impl Category {
    pub fn exit_code(self) -> i32 {
        match self {
            Category::Input => 2,
            Category::Math => 3,
            Category::Calibration => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run because of a reduced level cap.
    Skipped,
    /// Diagnostic output that does not gate the exit code.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub criterion: u8,
    pub inputs: Value,
    pub status: Status,
    pub category: Category,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Where the checked formula comes from: the printed display or a calibrated convention.
    pub provenance: String,
    pub detail: String,
}

impl ReportEntry {
    fn new(criterion: u8, check: &str, inputs: Value, pass: bool) -> Self {
        Self {
            check: check.to_string(),
            criterion,
            inputs,
            status: if pass { Status::Pass } else { Status::Fail },
            category: Category::Math,
            deviation: None,
            tolerance: None,
            provenance: "display".to_string(),
            detail: String::new(),
        }
    }

    fn measured(mut self, deviation: f64, tolerance: f64) -> Self {
        self.deviation = Some(deviation);
        self.tolerance = Some(tolerance);
        self
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    fn provenance(mut self, p: &str) -> Self {
        self.provenance = p.to_string();
        self
    }

    fn category(mut self, c: Category) -> Self {
        self.category = c;
        self
    }

    fn info(mut self) -> Self {
        self.status = Status::Info;
        self
    }

    fn skipped(criterion: u8, check: &str, why: &str) -> Self {
        let mut e = Self::new(criterion, check, Value::Null, true).detail(why);
        e.status = Status::Skipped;
        e
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub level_max: Option<u32>,
    pub calibration: CalibrationRecord,
    pub elapsed_secs: f64,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    /// 0 if nothing failed, otherwise the code of the first failing entry's category.
    pub fn exit_code(&self) -> i32 {
        self.entries.iter().find(|e| e.failed()).map_or(0, |e| e.category.exit_code())
    }

    /// Every criterion 1..=9 is represented and every entry is well formed.
    pub fn validate(&self) -> Result<(), String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!("schema version {} != {SCHEMA_VERSION}", self.schema_version));
        }
        for c in 1..=9u8 {
            if !self.entries.iter().any(|e| e.criterion == c) {
                return Err(format!("criterion {c} has no entry"));
            }
        }
        for e in &self.entries {
            if e.check.is_empty() {
                return Err("entry without a check name".into());
            }
            if let Some(d) = e.deviation {
                if d.is_nan() {
                    return Err(format!("{}: deviation is NaN", e.check));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String, String> {
        self.validate()?;
        serde_json::to_string_pretty(self).map_err(|e| e.to_string())
    }

    /// One line per criterion: `PASS`, `FAIL`, or `SKIP` when nothing ran.
    pub fn criterion_summary(&self) -> Vec<(u8, Status, usize, usize)> {
        (1..=9u8)
            .map(|c| {
                let gated: Vec<&ReportEntry> =
                    self.entries.iter().filter(|e| e.criterion == c && matches!(e.status, Status::Pass | Status::Fail)).collect();
                let failed = gated.iter().filter(|e| e.failed()).count();
                let status = if gated.is_empty() {
                    Status::Skipped
                } else if failed > 0 {
                    Status::Fail
                } else {
                    Status::Pass
                };
                (c, status, gated.len() - failed, gated.len())
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Caps every level range in the suite.
    pub level_max: Option<u32>,
}

impl VerifyOptions {
    fn cap(&self, r: u32) -> u32 {
        self.level_max.map_or(r, |m| r.min(m))
    }
}

const TREFOIL: &str = "t + t^3 - t^4";
const TREFOIL_PD: &str = "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n";

fn both_paths(b: &BraidWord) -> Result<(HalfExpLaurent, HalfExpLaurent), String> {
    let state = jones(&braid_closure_pd(b)).map_err(|e| e.to_string())?;
    let trace = markov_trace_jones(b).map_err(|e| e.to_string())?;
    Ok((state, trace))
}

pub fn check_trefoil() -> Vec<ReportEntry> {
    let start = Instant::now();
    let pd = parse_pd(TREFOIL_PD).map(|d| jones(&d));
    let braid: BraidWord = "n=2 +1 +1 +1".parse().expect("fixed word");
    let paths = both_paths(&braid);
    let secs = start.elapsed().as_secs_f64();
    let mut out = Vec::new();
    let pd_text = match &pd {
        Ok(Ok(v)) => v.to_string(),
        Ok(Err(e)) => e.to_string(),
        Err(e) => e.to_string(),
    };
    out.push(
        ReportEntry::new(1, "jones.trefoil.state_sum", json!({"pd": TREFOIL_PD}), pd_text == TREFOIL)
            .detail(format!("got {pd_text}")),
    );
    let (closure_text, trace_text) = match &paths {
        Ok((a, b)) => (a.to_string(), b.to_string()),
        Err(e) => (e.clone(), e.clone()),
    };
    out.push(
        ReportEntry::new(1, "jones.trefoil.braid_closure", json!({"braid": braid.to_string()}), closure_text == TREFOIL)
            .detail(format!("got {closure_text}")),
    );
    out.push(
        ReportEntry::new(1, "jones.trefoil.markov_trace", json!({"braid": braid.to_string()}), trace_text == TREFOIL)
            .detail(format!("got {trace_text}")),
    );
    out.push(ReportEntry::new(1, "jones.trefoil.runtime", json!({}), secs < 1.0).measured(secs, 1.0).detail("seconds"));
    out
}

fn random_word(rng: &mut StdRng, strands: usize, len: usize) -> BraidWord {
    let signed: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_signed(strands, &signed).expect("indices in range")
}

pub fn check_skein() -> Vec<ReportEntry> {
    let mut rng = StdRng::seed_from_u64(0x5e1f);
    let (mut total, mut holds) = (0, 0);
    let mut first_bad = None;
    while total < 60 {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=8);
        let word = random_word(&mut rng, strands, len);
        let pos = rng.gen_range(0..len);
        let (kp, km, k0) = skein_triple(&word, pos);
        let ok = match (jones(&braid_closure_pd(&kp)), jones(&braid_closure_pd(&km)), jones(&braid_closure_pd(&k0))) {
            (Ok(p), Ok(m), Ok(z)) => crate::knots::skein_residual(&p, &m, &z).is_zero(),
            _ => false,
        };
        total += 1;
        if ok {
            holds += 1;
        } else if first_bad.is_none() {
            first_bad = Some(format!("{word} at {pos}"));
        }
    }
    vec![ReportEntry::new(2, "jones.skein", json!({"triples": total, "max_crossings": 8, "seed": 0x5e1f}), holds == total)
        .detail(format!("{holds}/{total} exact{}", first_bad.map(|b| format!("; first failure {b}")).unwrap_or_default()))]
}

fn all_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let letters: Vec<i64> = (1..strands as i64).flat_map(|i| [i, -i]).collect();
    let mut out = vec![BraidWord::from_signed(strands, &[]).expect("empty word")];
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in &letters {
                let mut v = w.clone();
                v.push(l);
                out.push(BraidWord::from_signed(strands, &v).expect("indices in range"));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

pub fn check_oracle_equivalence() -> Vec<ReportEntry> {
    let mut out = Vec::new();
    let mut run = |name: &str, words: Vec<BraidWord>, inputs: Value| {
        let mut bad = None;
        for w in &words {
            match both_paths(w) {
                Ok((a, b)) if a == b => {}
                Ok((a, b)) => {
                    bad = Some(format!("{w}: closure {a} vs trace {b}"));
                    break;
                }
                Err(e) => {
                    bad = Some(format!("{w}: {e}"));
                    break;
                }
            }
        }
        out.push(
            ReportEntry::new(3, name, inputs, bad.is_none())
                .detail(bad.unwrap_or_else(|| format!("{} words agree exactly", words.len()))),
        );
    };
    run("jones.oracle.b2_exhaustive", all_words(2, 6), json!({"strands": 2, "max_len": 6}));
    run("jones.oracle.b3_exhaustive", all_words(3, 6), json!({"strands": 3, "max_len": 6}));
    let mut rng = StdRng::seed_from_u64(0xb4);
    let random: Vec<BraidWord> = (0..100)
        .map(|_| {
            let len = rng.gen_range(0..=10);
            random_word(&mut rng, 4, len)
        })
        .collect();
    run("jones.oracle.b4_random", random, json!({"strands": 4, "count": 100, "max_len": 10, "seed": 0xb4}));
    out
}

pub fn check_verlinde_integrality(opts: &VerifyOptions) -> Vec<ReportEntry> {
    let r_max = opts.cap(32);
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    let mut failure = None;
    for g in 2..=5 {
        for r in 3..=r_max {
            match verlinde_integrality_defect(g, r) {
                Ok(d) => worst = worst.max(d),
                Err(e) => {
                    failure.get_or_insert(format!("g={g} r={r}: {e}"));
                }
            }
        }
    }
    out.push(
        ReportEntry::new(4, "verlinde.integrality", json!({"g": [2, 5], "r": [3, r_max]}), failure.is_none() && worst < INTEGRALITY_TOL)
            .measured(worst, INTEGRALITY_TOL)
            .detail(failure.unwrap_or_else(|| "extended-precision sums".into())),
    );
    let genus_one = (3..=r_max).all(|r| verlinde_dim(1, r) == Ok((r - 1) as u64));
    out.push(ReportEntry::new(4, "verlinde.genus_one", json!({"r": [3, r_max]}), genus_one).detail("dim = r - 1"));
    out
}

pub fn check_colorings(opts: &VerifyOptions) -> Vec<ReportEntry> {
    let mut out = Vec::new();
    let cases = [(2u32, 12u32, SpineKind::Chain), (3, 8, SpineKind::Chain), (3, 8, SpineKind::Necklace), (4, 6, SpineKind::Chain)];
    for (g, r_top, kind) in cases {
        let r_max = opts.cap(r_top);
        let graph = spine_graph_of_kind(g, kind);
        let mut bad = None;
        for r in 2..=r_max {
            let dim = verlinde_dim(g, r);
            let count = count_colorings(&graph, r);
            if dim != Ok(count) {
                bad = Some(format!("r={r}: colorings {count}, formula {dim:?}"));
                break;
            }
        }
        let name = format!("verlinde.colorings.g{g}.{}", format!("{kind:?}").to_lowercase());
        out.push(
            ReportEntry::new(5, &name, json!({"g": g, "r": [2, r_max], "spine": format!("{kind:?}")}), bad.is_none())
                .provenance("calibrated admissibility (parity and level bound)")
                .detail(bad.unwrap_or_else(|| "exact equality".into())),
        );
    }
    let theta = crate::verlinde::spine_graph(2);
    let spots = [(3u32, 4u64), (4, 10)];
    let ok = spots.iter().all(|&(r, want)| count_colorings(&theta, r) == want && verlinde_dim(2, r) == Ok(want));
    out.push(ReportEntry::new(5, "verlinde.colorings.spot_values", json!({"g": 2, "pairs": [[3, 4], [4, 10]]}), ok));
    out
}

pub fn check_calibration(opts: &VerifyOptions, stored: &CalibrationRecord) -> Vec<ReportEntry> {
    let r_top = opts.cap(10).max(3);
    let r_set: Vec<u32> = (3..=r_top).collect();
    let bounds = CalibrationBounds { operator_bound: 4, phi_bound: 5, phi_level_max: 8 };
    let mut out = Vec::new();
    match calibrate_conventions_with(&r_set, bounds) {
        Ok(o) => {
            let rec = &o.record;
            let printed_c = o.phase_scan[0].1;
            let printed_s = o.sign_scan[0].1;
            out.push(
                ReportEntry::new(6, "calibration.phase", json!({"r_set": r_set, "bound": 4, "candidates": [1.0, -1.0, 0.5, -0.5]}), true)
                    .measured(rec.max_deviation, IDENTITY_TOL)
                    .category(Category::Calibration)
                    .provenance("calibrated convention")
                    .detail(format!(
                        "unique c = {}; printed exponent c = 1 deviates by {printed_c:.3e}; scan {:?}",
                        rec.c, o.phase_scan
                    )),
            );
            out.push(
                ReportEntry::new(6, "calibration.commutation_sign", json!({"levels": "3..=8", "bound": 5}), true)
                    .category(Category::Calibration)
                    .provenance("calibrated convention")
                    .detail(format!(
                        "unique s = {}; printed relation s = +1 fails {printed_s} exact instances; scan {:?}",
                        rec.s, o.sign_scan
                    )),
            );
            let same = rec.c == stored.c && rec.s == stored.s && rec.sigma == stored.sigma && (rec.kappa - stored.kappa).abs() < 1e-9 * rec.kappa;
            out.push(
                ReportEntry::new(6, "calibration.stored_record", json!({}), same)
                    .category(Category::Calibration)
                    .detail(format!("fresh {{c: {}, s: {}, sigma: {}, kappa: {}}}; stored {{c: {}, s: {}, sigma: {}, kappa: {}}}",
                        rec.c, rec.s, rec.sigma, rec.kappa, stored.c, stored.s, stored.sigma, stored.kappa)),
            );
        }
        Err(e) => out.push(
            ReportEntry::new(6, "calibration.phase", json!({"r_set": r_set}), false)
                .category(Category::Calibration)
                .detail(e.to_string()),
        ),
    }
    let mut worst = 0.0f64;
    for r in 3..=r_top {
        for (m, n, p, q) in [(1, 0, 0, 1), (2, 1, -1, 3), (1, 1, 1, -1), (3, -2, 2, 1)] {
            worst = worst.max(commutator_identity_check(m, n, p, q, r, stored.c));
        }
    }
    out.push(
        ReportEntry::new(6, "operator.commutator_identity", json!({"r": [3, r_top]}), worst < IDENTITY_TOL)
            .measured(worst, IDENTITY_TOL)
            .provenance("calibrated convention"),
    );
    let mut herm = 0.0f64;
    for r in 2..=r_top {
        for p in -4..=4 {
            for q in -4..=4 {
                herm = herm.max(cs_matrix(p, q, r).hermitian_defect());
            }
        }
    }
    out.push(ReportEntry::new(6, "operator.hermitian", json!({"r": [2, r_top], "bound": 4}), herm < IDENTITY_TOL).measured(herm, IDENTITY_TOL));
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn check_chebyshev(opts: &VerifyOptions) -> Vec<ReportEntry> {
    let r_max = opts.cap(10);
    let mut worst = 0.0f64;
    for r in 2..=r_max {
        for p in -3i64..=3 {
            for q in -3i64..=3 {
                if gcd(p, q) != 1 {
                    continue;
                }
                for d in 0..=4 {
                    worst = worst.max(chebyshev_check(d, p, q, r));
                }
            }
        }
    }
    vec![ReportEntry::new(7, "operator.chebyshev", json!({"r": [2, r_max], "d": [0, 4], "bound": 3}), worst < IDENTITY_TOL)
        .measured(worst, IDENTITY_TOL)]
}

pub const DECAY_LEVELS: [u32; 4] = [8, 16, 32, 64];
pub const DECAY_RATIO_MAX: f64 = 0.6;
pub const DECAY_SLOPE: (f64, f64) = (-1.3, -0.7);

pub fn check_correspondence(opts: &VerifyOptions, rec: &CalibrationRecord) -> Vec<ReportEntry> {
    let levels: Vec<Level> = DECAY_LEVELS.iter().filter(|&&r| opts.level_max.map_or(true, |m| r <= m)).filter_map(|&r| Level::new(r)).collect();
    if levels.len() < 2 {
        return vec![ReportEntry::skipped(8, "correspondence.decay", "level cap leaves fewer than two levels of 8, 16, 32, 64")];
    }
    let mut out = Vec::new();
    let rs: Vec<u32> = levels.iter().map(|l| l.r()).collect();
    for (a, b) in default_pairs() {
        let t = correspondence_check(a, b, &levels, rec.sigma, rec.kappa);
        let ratios = t.ratios();
        let slope = t.log_log_slope();
        let ratios_ok = ratios.iter().all(|r| matches!(r, Some(x) if *x <= DECAY_RATIO_MAX));
        let slope_ok = matches!(slope, Some(s) if s >= DECAY_SLOPE.0 && s <= DECAY_SLOPE.1);
        out.push(
            ReportEntry::new(8, &format!("correspondence.decay.{a}x{b}").replace(' ', ""), json!({"alpha": [a.p(), a.q()], "beta": [b.p(), b.q()], "r": rs}), ratios_ok && slope_ok)
                .provenance("calibrated sigma and kappa")
                .detail(format!("{}; kappa {:.6} fitted at r = {KAPPA_LEVEL}", t.summary(), rec.kappa)),
        );
    }
    // the classical symplectic normalization, for comparison with the fitted one
    let classical = 4.0 * std::f64::consts::PI;
    let (a, b) = default_pairs()[0];
    let t = correspondence_check(a, b, &levels, rec.sigma, classical);
    out.push(
        ReportEntry::new(8, "correspondence.classical_kappa", json!({"alpha": [1, 0], "beta": [0, 1], "kappa": classical, "r": rs}), true)
            .info()
            .detail(t.summary()),
    );
    out
}

pub fn check_weyl(opts: &VerifyOptions) -> Vec<ReportEntry> {
    let spec = QuadratureSpec::default();
    let r_max = opts.cap(6);
    let mut out = Vec::new();
    let mut curves: Vec<CurveObservable> = Vec::new();
    for p in -2..=2 {
        for q in -2..=2 {
            let c = CurveObservable::new(p, q);
            if !curves.contains(&c) {
                curves.push(c);
            }
        }
    }
    for r in 2..=r_max {
        let level = Level::new(r).expect("r >= 2");
        let (mut best, mut drift, mut spread) = (0.0f64, 0.0f64, 0.0f64);
        let mut scalars = Vec::new();
        let mut error = None;
        for &c in &curves {
            match weyl_qg_compare(c, level, &spec) {
                Ok(rep) => {
                    best = best.max(rep.best_scalar_diff);
                    drift = drift.max(rep.quadrature_drift);
                    // curves whose operator vanishes leave the scalar unconstrained
                    if cs_matrix(c.p(), c.q(), r).max_abs() > 1e-12 {
                        scalars.push(num_complex::Complex64::new(rep.fitted_scalar[0], rep.fitted_scalar[1]));
                    }
                }
                Err(e) => {
                    error.get_or_insert(format!("{c}: {e}"));
                }
            }
        }
        for s in &scalars {
            spread = spread.max((s - scalars[0]).norm());
        }
        let inputs = json!({"r": r, "bound": 2, "grid": spec.grid, "refinement": spec.refinement});
        out.push(
            ReportEntry::new(9, &format!("weyl.best_scalar.r{r}"), inputs.clone(), error.is_none() && best <= 1e-6)
                .measured(best, 1e-6)
                .detail(error.clone().unwrap_or_else(|| format!("fitted scalar {:?}", scalars.first()))),
        );
        out.push(ReportEntry::new(9, &format!("weyl.scalar_constant.r{r}"), inputs.clone(), error.is_none() && spread <= 1e-6).measured(spread, 1e-6));
        out.push(ReportEntry::new(9, &format!("weyl.quadrature.r{r}"), inputs, error.is_none() && drift < MAX_DRIFT).measured(drift, MAX_DRIFT));
    }
    let control_level = Level::new(r_max.clamp(2, 3)).expect("r >= 2");
    match weyl_negative_control(CurveObservable::new(1, 0), control_level, &spec) {
        Ok(rep) => out.push(
            ReportEntry::new(9, "weyl.negative_control", json!({"r": control_level.r(), "p": 1, "q": 0, "weight": "exp(-2 pi r y^2)"}), rep.best_scalar_diff > 1e-3)
                .measured(rep.best_scalar_diff, 1e-3)
                .detail("wrong metric must be detected (deviation above tolerance)"),
        ),
        Err(e) => out.push(ReportEntry::new(9, "weyl.negative_control", json!({}), false).detail(e.to_string())),
    }
    out
}

/// Runs criteria 1-9. Independent groups run on separate threads; entries keep a fixed order.
pub fn run_all(opts: &VerifyOptions, rec: &CalibrationRecord) -> Report {
    let start = Instant::now();
    let groups: Vec<Vec<ReportEntry>> = std::thread::scope(|s| {
        let handles = vec![
            s.spawn(check_trefoil),
            s.spawn(check_skein),
            s.spawn(check_oracle_equivalence),
            s.spawn(|| check_verlinde_integrality(opts)),
            s.spawn(|| check_colorings(opts)),
            s.spawn(|| check_calibration(opts, rec)),
            s.spawn(|| check_chebyshev(opts)),
            s.spawn(|| check_correspondence(opts, rec)),
            s.spawn(|| check_weyl(opts)),
        ];
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    Report {
        schema_version: SCHEMA_VERSION,
        level_max: opts.level_max,
        calibration: rec.clone(),
        elapsed_secs: start.elapsed().as_secs_f64(),
        entries: groups.into_iter().flatten().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(all_words(2, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(all_words(3, 2).len(), 1 + 4 + 16);
    }

    #[test]
    fn exit_code_follows_first_failure() {
        let rec = CalibrationRecord { c: 0.5, s: -1, sigma: -1, kappa: 12.0, r_set: vec![3], max_deviation: 0.0 };
        let mut rep = Report { schema_version: SCHEMA_VERSION, level_max: None, calibration: rec, elapsed_secs: 0.0, entries: check_trefoil() };
        assert_eq!(rep.exit_code(), 0);
        rep.entries.push(ReportEntry::new(6, "x", Value::Null, false).category(Category::Calibration));
        rep.entries.push(ReportEntry::new(2, "y", Value::Null, false));
        assert_eq!(rep.exit_code(), 4);
        assert!(rep.validate().is_err());
    }
}
