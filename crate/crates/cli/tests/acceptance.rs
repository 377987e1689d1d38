//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line with its
//! numbers. Tolerances live next to the checks in `cskit::verify`.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use cskit::torus::{calibrate_conventions, CalibrationRecord};
use cskit::verify::{self, ReportEntry, Status, VerifyOptions};

fn record() -> &'static CalibrationRecord {
    static REC: OnceLock<CalibrationRecord> = OnceLock::new();
    REC.get_or_init(|| calibrate_conventions(&(3..=10).collect::<Vec<_>>()).expect("calibration").record)
}

fn gate(label: &str, entries: Vec<ReportEntry>) {
    let gated: Vec<&ReportEntry> = entries.iter().filter(|e| matches!(e.status, Status::Pass | Status::Fail)).collect();
    let failed: Vec<&&ReportEntry> = gated.iter().filter(|e| e.failed()).collect();
    let verdict = if failed.is_empty() && !gated.is_empty() { "PASS" } else { "FAIL" };
    println!("{verdict} {label} ({}/{})", gated.len() - failed.len(), gated.len());
    for e in &entries {
        let dev = e.deviation.map(|d| format!(" deviation {d:.3e} tol {:.1e}", e.tolerance.unwrap_or(f64::NAN))).unwrap_or_default();
        println!("  [{:?}] {}{dev} {}", e.status, e.check, e.detail);
    }
    assert!(!gated.is_empty(), "{label}: nothing ran");
    assert!(failed.is_empty(), "{label}: {} failing checks: {:?}", failed.len(), failed.iter().map(|e| &e.check).collect::<Vec<_>>());
}

#[test]
fn trefoil_jones_by_state_sum_and_markov_trace() {
    gate("trefoil Jones polynomial, both paths, under 1 s", verify::check_trefoil());
}

#[test]
fn skein_relation_on_generated_triples() {
    gate("skein relation on 60 braid triples", verify::check_skein());
}

#[test]
fn markov_trace_matches_state_sum() {
    gate("oracle equivalence B2/B3 exhaustive, B4 random", verify::check_oracle_equivalence());
}

#[test]
fn verlinde_sums_are_integers() {
    gate("Verlinde integrality g <= 5, r <= 32", verify::check_verlinde_integrality(&VerifyOptions::default()));
}

#[test]
fn colorings_count_verlinde_dimension() {
    gate("admissible colorings equal Verlinde dimension", verify::check_colorings(&VerifyOptions::default()));
}

#[test]
fn conventions_calibrate_uniquely() {
    gate("unique phase and commutation conventions", verify::check_calibration(&VerifyOptions::default(), record()));
}

#[test]
fn chebyshev_structure_of_curve_operators() {
    gate("C(dp,dq) = T_d(C(p,q))", verify::check_chebyshev(&VerifyOptions::default()));
}

#[test]
fn commutator_approaches_bracket_linearly_in_hbar() {
    gate("correspondence decay E(2r)/E(r) <= 0.6, slope in [-1.3, -0.7]", verify::check_correspondence(&VerifyOptions::default(), record()));
}

#[test]
fn toeplitz_quantization_equals_curve_operators() {
    gate("Weyl = quantum group up to one scalar", verify::check_weyl(&VerifyOptions::default()));
}

#[test]
fn verify_all_exits_zero_within_ten_minutes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cskit"))
        .args(["verify-all", "--out"])
        .arg(&report)
        .env("CSKIT_CALIBRATION", dir.path().join("calibration.json"))
        .output()
        .expect("run cskit");
    let elapsed = start.elapsed();
    let code = out.status.code();
    let ok = code == Some(0) && elapsed < Duration::from_secs(600);
    println!("{} verify-all exit {code:?} in {:.1} s", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    print!("{}", String::from_utf8_lossy(&out.stdout));
    assert!(report.exists(), "report not written");
    assert!(ok, "verify-all exit {code:?} after {elapsed:?}");
}
