use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use cskit::knots::{braid_closure_pd, jones, parse_pd, BraidWord};
use cskit::matrix::{format_complex, format_sig};
use cskit::temperley_lieb::markov_trace_jones;
use cskit::toeplitz::{weyl_qg_compare, QuadratureSpec};
use cskit::torus::{
    calibrate_conventions, correspondence_check, cs_operator, goldman_torus, phi_product_to_sum_holds, product_to_sum_check,
    CalibrationRecord, CurveObservable, Level, IDENTITY_TOL,
};
use cskit::verify::{run_all, Status, VerifyOptions, DECAY_RATIO_MAX, DECAY_SLOPE};
use cskit::verlinde::{count_colorings, spine_graph, verlinde_dim, TrivalentGraph};
use cskit::{CalibrationError, ComplexMatrix};

const CALIBRATION_ENV: &str = "CSKIT_CALIBRATION";
const DEFAULT_CALIBRATION: &str = "cskit-calibration.json";
const WEYL_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "cskit", version, about = "Jones polynomials, Verlinde counts and torus quantization checks")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Jones polynomial of a PD file or a braid closure.
    Jones(JonesArgs),
    /// Verlinde dimension, optionally cross-checked against admissible colorings.
    Verlinde(VerlindeArgs),
    /// Matrix of the curve operator C(p,q) at level r.
    Csop(CurveArgs),
    /// Calibrated conventions and the product-to-sum checks behind them.
    Ncheck(NcheckArgs),
    /// Goldman bracket of two torus curves, with an optional correspondence table.
    Goldman(GoldmanArgs),
    /// Toeplitz quantization of a curve compared with the curve operator.
    Weyl(WeylArgs),
    /// Run the whole verification suite and write a JSON report.
    VerifyAll(VerifyArgs),
    /// Recompute the calibration record and store it.
    Calibrate(CalibrateArgs),
}

#[derive(Args)]
struct JonesArgs {
    #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
    pd: Option<PathBuf>,
    /// Braid word such as "n=3 +1 -2 +1".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Also evaluate at t = exp(2πi/r).
    #[arg(long)]
    at_root: Option<u32>,
}

#[derive(Args)]
struct VerlindeArgs {
    #[arg(long, required_unless_present_any = ["table", "graph"])]
    genus: Option<u32>,
    #[arg(long, required_unless_present = "table")]
    level: Option<u32>,
    #[arg(long)]
    with_colorings: bool,
    /// Count colorings of a trivalent graph file instead of the standard spine.
    #[arg(long, conflicts_with = "table")]
    graph: Option<PathBuf>,
    /// Table of dimensions for 1 ≤ g ≤ GMAX and 2 ≤ r ≤ RMAX.
    #[arg(long, num_args = 2, value_names = ["GMAX", "RMAX"], conflicts_with_all = ["genus", "level"])]
    table: Option<Vec<u32>>,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
    #[arg(long)]
    r: u32,
}

#[derive(Args)]
struct NcheckArgs {
    #[arg(long, default_value_t = 5)]
    r: u32,
    #[arg(long, default_value_t = 3)]
    bound: i64,
}

#[derive(Args)]
struct GoldmanArgs {
    /// First curve as "p,q".
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Second curve as "m,n".
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    /// Ascending levels such as "8,16,32".
    #[arg(long)]
    correspondence: Option<String>,
}

#[derive(Args)]
struct WeylArgs {
    #[command(flatten)]
    curve: CurveArgs,
    #[arg(long, default_value_t = 32)]
    grid: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    level_max: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CalibrateArgs {
    /// Where to write the record; defaults to the active calibration path.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    msg: String,
}

fn input(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn math(msg: impl Into<String>) -> Failure {
    Failure { code: 3, msg: msg.into() }
}

fn calib(e: CalibrationError) -> Failure {
    Failure { code: 4, msg: e.to_string() }
}

type Outcome = Result<(), Failure>;

fn calibration_path() -> PathBuf {
    std::env::var_os(CALIBRATION_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_CALIBRATION))
}

/// Loads the stored record, calibrating first if none exists.
fn calibration() -> Result<CalibrationRecord, Failure> {
    let path = calibration_path();
    if path.exists() {
        return CalibrationRecord::load(&path).map_err(calib);
    }
    let rec = calibrate_conventions(&(3..=10).collect::<Vec<_>>()).map_err(calib)?.record;
    if let Err(e) = rec.save(&path) {
        eprintln!("warning: could not store calibration at {}: {e}", path.display());
    }
    Ok(rec)
}

fn level(r: u32) -> Result<Level, Failure> {
    Level::new(r).ok_or_else(|| input(format!("level must be at least 2, got {r}")))
}

fn matrix_json(m: &ComplexMatrix) -> serde_json::Value {
    let m = m.rounded(1e-12);
    json!((0..m.rows()).map(|i| (0..m.cols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_jones(a: &JonesArgs, as_json: bool) -> Outcome {
    let root = |v: &cskit::HalfExpLaurent| -> Result<Option<Complex64>, Failure> {
        match a.at_root {
            Some(r) if r < 2 => Err(input("--at-root needs r >= 2")),
            Some(r) => Ok(Some(v.eval_at_root(r))),
            None => Ok(None),
        }
    };
    if let Some(path) = &a.pd {
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        let pd = parse_pd(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
        let v = jones(&pd).map_err(|e| input(e.to_string()))?;
        let at = root(&v)?;
        if as_json {
            print_json(&json!({"jones": v.to_string(), "crossings": pd.crossing_count(), "at_root": at.map(|z| [z.re, z.im])}));
        } else {
            println!("{v}");
            if let (Some(z), Some(r)) = (at, a.at_root) {
                println!("at t = exp(2πi/{r}): {}", format_complex(z));
            }
        }
        return Ok(());
    }
    let word: BraidWord = a.braid.as_deref().unwrap_or_default().parse().map_err(|e: cskit::ParseError| input(e.to_string()))?;
    let state = jones(&braid_closure_pd(&word)).map_err(|e| input(e.to_string()))?;
    let trace = markov_trace_jones(&word);
    let agree = trace.as_ref().map(|t| *t == state).ok();
    let at = root(&state)?;
    if as_json {
        print_json(&json!({
            "jones": state.to_string(),
            "state_sum": state.to_string(),
            "markov_trace": trace.as_ref().map(|t| t.to_string()).map_err(|e| e.to_string()),
            "agree": agree,
            "at_root": at.map(|z| [z.re, z.im]),
        }));
    } else {
        println!("{state}");
        println!("state sum:    {state}");
        match &trace {
            Ok(t) => println!("markov trace: {t}"),
            Err(e) => println!("markov trace: unavailable ({e})"),
        }
        if let Some(ag) = agree {
            println!("paths agree: {ag}");
        }
        if let (Some(z), Some(r)) = (at, a.at_root) {
            println!("at t = exp(2πi/{r}): {}", format_complex(z));
        }
    }
    if agree == Some(false) {
        return Err(math("state sum and Markov trace disagree"));
    }
    Ok(())
}

fn cmd_verlinde(a: &VerlindeArgs, as_json: bool) -> Outcome {
    if let Some(t) = &a.table {
        let (gmax, rmax) = (t[0], t[1]);
        if gmax < 1 || rmax < 2 {
            return Err(input("--table needs GMAX >= 1 and RMAX >= 2"));
        }
        let mut rows = Vec::new();
        for g in 1..=gmax {
            let row = (2..=rmax).map(|r| verlinde_dim(g, r).map_err(|e| math(format!("g={g} r={r}: {e}")))).collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        if as_json {
            print_json(&json!({"r": (2..=rmax).collect::<Vec<_>>(), "rows": rows}));
        } else {
            let head: Vec<String> = (2..=rmax).map(|r| format!("r={r}")).collect();
            println!("g\\r {}", head.join(" "));
            for (g, row) in rows.iter().enumerate() {
                println!("{} {}", g + 1, row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            }
            println!("all sums integral within 1e-6");
        }
        return Ok(());
    }
    let r = a.level.expect("clap requires --level");
    let custom = match &a.graph {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
            Some(text.parse::<TrivalentGraph>().map_err(|e| input(format!("{}: {e}", path.display())))?)
        }
        None => None,
    };
    let g = match (&custom, a.genus) {
        (Some(graph), Some(g)) if graph.genus() as u32 != g => {
            return Err(input(format!("graph has genus {}, --genus says {g}", graph.genus())))
        }
        (Some(graph), _) => graph.genus() as u32,
        (None, g) => g.expect("clap requires --genus"),
    };
    let dim = verlinde_dim(g, r).map_err(|e| match e {
        cskit::NumericError::InvalidArgument(m) => input(m),
        other => math(other.to_string()),
    })?;
    let colorings = if a.with_colorings || custom.is_some() {
        match (&custom, g) {
            (Some(graph), _) => Some(count_colorings(graph, r)),
            (None, 1) => Some((r - 1) as u64),
            (None, g) => Some(count_colorings(&spine_graph(g), r)),
        }
    } else {
        None
    };
    if as_json {
        print_json(&json!({"genus": g, "level": r, "dimension": dim, "colorings": colorings, "agree": colorings.map(|c| c == dim)}));
    } else if let Some(c) = colorings {
        println!("{dim} == {c}");
    } else {
        println!("{dim}");
    }
    if let Some(c) = colorings {
        if c != dim {
            return Err(math(format!("coloring count {c} differs from the Verlinde formula {dim}")));
        }
    }
    Ok(())
}

fn cmd_csop(a: &CurveArgs, as_json: bool) -> Outcome {
    calibration()?;
    let l = level(a.r)?;
    let c = CurveObservable::new(a.p, a.q);
    let m = cs_operator(c, l);
    let herm = m.hermitian_defect();
    if as_json {
        print_json(&json!({"p": a.p, "q": a.q, "r": a.r, "matrix": matrix_json(&m), "hermitianDefect": herm}));
    } else {
        print!("{}", m.rounded(1e-12));
    }
    if herm > IDENTITY_TOL {
        return Err(math(format!("operator is not Hermitian (defect {herm:e})")));
    }
    Ok(())
}

fn cmd_ncheck(a: &NcheckArgs, as_json: bool) -> Outcome {
    let rec = calibration()?;
    let l = level(a.r)?;
    let b = a.bound;
    let mut worst = 0.0f64;
    let mut phi_fail = [0usize; 2];
    for m in -b..=b {
        for n in -b..=b {
            for p in -b..=b {
                for q in -b..=b {
                    worst = worst.max(product_to_sum_check(m, n, p, q, a.r, rec.c));
                    for (i, s) in [rec.s, -rec.s].into_iter().enumerate() {
                        if !phi_product_to_sum_holds(m, n, p, q, l, s, rec.twice_c()) {
                            phi_fail[i] += 1;
                        }
                    }
                }
            }
        }
    }
    let printed = product_to_sum_check(1, 0, 0, 1, a.r, 1.0);
    if as_json {
        print_json(&json!({
            "calibration": rec, "r": a.r, "bound": b,
            "productToSumDeviation": worst, "phiFailures": phi_fail[0], "phiFailuresOppositeSign": phi_fail[1],
            "printedExponentDeviation": printed,
        }));
    } else {
        println!("calibration: c = {}, s = {}, sigma = {}, kappa = {}", rec.c, rec.s, rec.sigma, format_sig(rec.kappa));
        println!("product-to-sum (r = {}, |m|,|n|,|p|,|q| <= {b}): max deviation {}", a.r, format_sig(worst));
        println!("printed exponent c = 1 at (1,0,0,1): deviation {}", format_sig(printed));
        println!("phi homomorphism with s = {}: {} exact failures", rec.s, phi_fail[0]);
        println!("phi homomorphism with s = {}: {} exact failures", -rec.s, phi_fail[1]);
    }
    if worst > IDENTITY_TOL || phi_fail[0] > 0 {
        return Err(math("calibrated conventions fail the product-to-sum identity"));
    }
    Ok(())
}

fn parse_curve(s: &str) -> Result<CurveObservable, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [p, q] => {
            let p = p.parse().map_err(|_| input(format!("bad curve {s:?}")))?;
            let q = q.parse().map_err(|_| input(format!("bad curve {s:?}")))?;
            Ok(CurveObservable::new(p, q))
        }
        _ => Err(input(format!("curve must look like p,q; got {s:?}"))),
    }
}

fn cmd_goldman(a: &GoldmanArgs, as_json: bool) -> Outcome {
    let rec = calibration()?;
    let (x, y) = (parse_curve(&a.alpha)?, parse_curve(&a.beta)?);
    let bracket = goldman_torus(x, y, rec.sigma);
    let Some(levels) = &a.correspondence else {
        if as_json {
            let terms: Vec<_> = bracket.terms().iter().map(|(c, k)| json!({"p": c.p(), "q": c.q(), "coeff": k.to_string()})).collect();
            print_json(&json!({"alpha": [x.p(), x.q()], "beta": [y.p(), y.q()], "sigma": rec.sigma, "terms": terms}));
        } else {
            println!("{bracket}");
        }
        return Ok(());
    };
    let rs: Vec<u32> = levels
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| input(format!("bad level list {levels:?}"))))
        .collect::<Result<_, _>>()?;
    if rs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(input("correspondence levels must be ascending"));
    }
    let ls = rs.iter().map(|&r| level(r)).collect::<Result<Vec<_>, _>>()?;
    let table = correspondence_check(x, y, &ls, rec.sigma, rec.kappa);
    let ratios = table.ratios();
    let slope = table.log_log_slope();
    let trivial = table.all_below(1e-12);
    let decays = ratios.iter().all(|r| matches!(r, Some(v) if *v <= DECAY_RATIO_MAX))
        && matches!(slope, Some(s) if (DECAY_SLOPE.0..=DECAY_SLOPE.1).contains(&s));
    if as_json {
        print_json(&json!({"bracket": bracket.to_string(), "table": table, "ratios": ratios, "slope": slope, "decays": decays || trivial}));
    } else {
        println!("{bracket}");
        println!("kappa = {} (sigma = {})", format_sig(rec.kappa), rec.sigma);
        println!("r E(r) E(r)/E(prev)");
        for (i, (r, e)) in table.rows.iter().enumerate() {
            let ratio = if i == 0 { "-".to_string() } else { ratios[i - 1].map_or("-".into(), format_sig) };
            println!("{r} {} {ratio}", format_sig(*e));
        }
        println!("log-log slope: {}", slope.map_or("-".into(), format_sig));
    }
    if !(decays || trivial) {
        return Err(math("E(r) does not decay like hbar"));
    }
    Ok(())
}

fn cmd_weyl(a: &WeylArgs, as_json: bool) -> Outcome {
    calibration()?;
    let l = level(a.curve.r)?;
    let spec = QuadratureSpec { grid: a.grid, ..QuadratureSpec::default() };
    let rep = weyl_qg_compare(CurveObservable::new(a.curve.p, a.curve.q), l, &spec).map_err(|e| match e {
        cskit::NumericError::InvalidArgument(m) => input(m),
        other => math(other.to_string()),
    })?;
    if as_json {
        println!("{}", rep.to_json());
    } else {
        println!("maxAbsDiff     {}", format_sig(rep.max_abs_diff));
        println!("bestScalarDiff {}", format_sig(rep.best_scalar_diff));
        println!("fittedScalar   {}", format_complex(Complex64::new(rep.fitted_scalar[0], rep.fitted_scalar[1])));
        println!("gramCondition  {}", format_sig(rep.gram_condition));
        println!("drift          {}", format_sig(rep.quadrature_drift));
    }
    if rep.best_scalar_diff > WEYL_TOL {
        return Err(math(format!("bestScalarDiff {} exceeds {WEYL_TOL:e}", rep.best_scalar_diff)));
    }
    Ok(())
}

fn cmd_verify_all(a: &VerifyArgs) -> Outcome {
    let rec = calibration()?;
    let report = run_all(&VerifyOptions { level_max: a.level_max }, &rec);
    for (c, status, ok, total) in report.criterion_summary() {
        let tag = match status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            _ => "SKIP",
        };
        println!("criterion {c}: {tag} ({ok}/{total})");
    }
    for e in report.entries.iter().filter(|e| e.failed()) {
        println!("  failed {}: {}", e.check, e.detail);
    }
    println!("elapsed: {:.1} s", report.elapsed_secs);
    let text = report.to_json().map_err(|e| math(format!("report failed validation: {e}")))?;
    if let Some(path) = &a.out {
        std::fs::write(path, text + "\n").map_err(|e| input(format!("{}: {e}", path.display())))?;
    }
    match report.exit_code() {
        0 => Ok(()),
        code => Err(Failure { code: code as u8, msg: "verification suite has failures".into() }),
    }
}

fn cmd_calibrate(a: &CalibrateArgs, as_json: bool) -> Outcome {
    let out = calibrate_conventions(&(3..=10).collect::<Vec<_>>()).map_err(calib)?;
    let path = a.out.clone().unwrap_or_else(calibration_path);
    out.record.save(&path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    if as_json {
        print_json(&json!(out));
    } else {
        println!("{}", out.record.to_json());
        println!("phase scan {:?}", out.phase_scan);
        println!("sign scan {:?}", out.sign_scan);
        println!("written to {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match &cli.cmd {
        Cmd::Jones(a) => cmd_jones(a, cli.json),
        Cmd::Verlinde(a) => cmd_verlinde(a, cli.json),
        Cmd::Csop(a) => cmd_csop(a, cli.json),
        Cmd::Ncheck(a) => cmd_ncheck(a, cli.json),
        Cmd::Goldman(a) => cmd_goldman(a, cli.json),
        Cmd::Weyl(a) => cmd_weyl(a, cli.json),
        Cmd::VerifyAll(a) => cmd_verify_all(a),
        Cmd::Calibrate(a) => cmd_calibrate(a, cli.json),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
