//! Browser bindings: Jones polynomials of braid closures, Verlinde tables, and curve
//! operator matrices, all returned as JSON strings.

use serde_json::json;
use wasm_bindgen::prelude::*;

use cskit::knots::{braid_closure_pd, jones, BraidWord};
use cskit::temperley_lieb::markov_trace_jones;
use cskit::torus::{cs_operator, CurveObservable, Level};
use cskit::verlinde::verlinde_dim;

/// Largest table the page will request.
pub const TABLE_LIMIT: u32 = 40;

pub fn braid_jones_json(word: &str) -> Result<String, String> {
    let b: BraidWord = word.parse().map_err(|e: cskit::ParseError| e.to_string())?;
    let pd = braid_closure_pd(&b);
    let state = jones(&pd).map_err(|e| e.to_string())?;
    let trace = markov_trace_jones(&b).map(|t| t.to_string()).ok();
    let agree = trace.as_ref().map(|t| *t == state.to_string());
    let samples: Vec<[f64; 3]> = (2..=12)
        .map(|r| {
            let z = state.eval_at_root(r);
            [r as f64, z.re, z.im]
        })
        .collect();
    Ok(json!({
        "braid": b.to_string(),
        "crossings": pd.crossing_count(),
        "components": pd.component_count(),
        "jones": state.to_string(),
        "markovTrace": trace,
        "agree": agree,
        "atRoots": samples,
    })
    .to_string())
}

pub fn verlinde_table_json(gmax: u32, rmax: u32) -> Result<String, String> {
    if gmax < 1 || rmax < 2 || gmax > TABLE_LIMIT || rmax > TABLE_LIMIT {
        return Err(format!("need 1 <= g <= {TABLE_LIMIT} and 2 <= r <= {TABLE_LIMIT}"));
    }
    let mut rows = Vec::new();
    for g in 1..=gmax {
        let row: Result<Vec<String>, String> =
            (2..=rmax).map(|r| verlinde_dim(g, r).map(|d| d.to_string()).map_err(|e| e.to_string())).collect();
        rows.push(row?);
    }
    Ok(json!({"levels": (2..=rmax).collect::<Vec<_>>(), "rows": rows}).to_string())
}

pub fn cs_operator_json(p: i64, q: i64, r: u32) -> Result<String, String> {
    let level = Level::new(r).ok_or("level must be at least 2")?;
    if r > 64 {
        return Err("level must be at most 64".into());
    }
    let m = cs_operator(CurveObservable::new(p, q), level).rounded(1e-12);
    let cells: Vec<Vec<[f64; 2]>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect();
    Ok(json!({"p": p, "q": q, "r": r, "matrix": cells}).to_string())
}

#[wasm_bindgen(js_name = braidJones)]
pub fn braid_jones(word: &str) -> Result<String, JsError> {
    braid_jones_json(word).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = verlindeTable)]
pub fn verlinde_table(gmax: u32, rmax: u32) -> Result<String, JsError> {
    verlinde_table_json(gmax, rmax).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = curveOperator)]
pub fn curve_operator(p: i32, q: i32, r: u32) -> Result<String, JsError> {
    cs_operator_json(p as i64, q as i64, r).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let v: serde_json::Value = serde_json::from_str(&braid_jones_json("n=2 +1 +1 +1").unwrap()).unwrap();
        assert_eq!(v["jones"], "t + t^3 - t^4");
        assert_eq!(v["agree"], true);
        assert!(braid_jones_json("n=2 +3").is_err());
    }

    #[test]
    fn table() {
        let v: serde_json::Value = serde_json::from_str(&verlinde_table_json(2, 4).unwrap()).unwrap();
        assert_eq!(v["rows"][1][1], "4");
        assert_eq!(v["rows"][1][2], "10");
        assert!(verlinde_table_json(0, 4).is_err());
    }

    #[test]
    fn operator() {
        let v: serde_json::Value = serde_json::from_str(&cs_operator_json(1, 0, 3).unwrap()).unwrap();
        assert_eq!(v["matrix"][0][1][0], 1.0);
        assert!(cs_operator_json(1, 0, 1).is_err());
    }
}
