use crate::error::KnotError;
use crate::knots::bracket::kauffman_bracket;
use crate::knots::braid::{BraidWord, Letter};
use crate::knots::pd::PDCode;
use crate::laurent::{HalfExpLaurent, Laurent};

/// Sum of crossing signs.
pub fn writhe(d: &PDCode) -> i64 {
    d.signs().iter().map(|&s| s as i64).sum()
}

/// `(-A)^{-3w} ⟨D⟩` rewritten in `t^{1/2}` via `t = A^{-4}`.
pub fn normalize_bracket(bracket: &Laurent, writhe: i64) -> Result<HalfExpLaurent, KnotError> {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * writhe).scale(sign);
    // A^e = t^{-e/4} = (t^{1/2})^{-e/2}
    let mut out = Laurent::zero();
    for (e, c) in normalized.terms() {
        if e % 2 != 0 {
            return Err(KnotError::OddExponent(e));
        }
        out.add_term(-e / 2, c);
    }
    Ok(HalfExpLaurent::from_laurent(out))
}

/// Jones polynomial, normalized so the unknot gives 1.
pub fn jones(d: &PDCode) -> Result<HalfExpLaurent, KnotError> {
    normalize_bracket(&kauffman_bracket(d)?, writhe(d))
}

/// The left side minus the right side of
/// `t^{-1} V(K+) - t V(K-) = (t^{1/2} - t^{-1/2}) V(K0)`.
pub fn skein_residual(
    vplus: &HalfExpLaurent,
    vminus: &HalfExpLaurent,
    vzero: &HalfExpLaurent,
) -> HalfExpLaurent {
    let t_inv = HalfExpLaurent::t_pow(1, -1);
    let t = HalfExpLaurent::t_pow(1, 1);
    let root_diff = HalfExpLaurent::from_half_terms([(1, 1), (-1, -1)]);
    let lhs = &(&t_inv * vplus) - &(&t * vminus);
    &lhs - &(&root_diff * vzero)
}

/// True iff the skein relation holds exactly for the three diagrams.
pub fn skein_verify(kplus: &PDCode, kminus: &PDCode, kzero: &PDCode) -> bool {
    match (jones(kplus), jones(kminus), jones(kzero)) {
        (Ok(p), Ok(m), Ok(z)) => skein_residual(&p, &m, &z).is_zero(),
        _ => false,
    }
}

/// `(K+, K-, K0)` obtained by making letter `pos` positive, negative, or deleting it.
pub fn skein_triple(b: &BraidWord, pos: usize) -> (BraidWord, BraidWord, BraidWord) {
    let idx = b.letters()[pos].index;
    (
        b.with_letter(pos, Some(Letter::new(idx, true))),
        b.with_letter(pos, Some(Letter::new(idx, false))),
        b.with_letter(pos, None),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::braid::braid_closure_pd;
    use crate::knots::pd::parse_pd;

    fn closure(s: &str) -> PDCode {
        braid_closure_pd(&s.parse::<BraidWord>().unwrap())
    }

    #[test]
    fn unknot_and_trefoil() {
        assert_eq!(jones(&PDCode::unknot()).unwrap(), HalfExpLaurent::one());
        assert_eq!(jones(&closure("n=2 +1")).unwrap(), HalfExpLaurent::one());
        let trefoil = jones(&closure("n=2 +1 +1 +1")).unwrap();
        assert_eq!(trefoil.to_string(), "t + t^3 - t^4");
    }

    #[test]
    fn trefoil_from_pd_text() {
        let pd = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n").unwrap();
        assert_eq!(jones(&pd).unwrap().to_string(), "t + t^3 - t^4");
    }

    #[test]
    fn hopf_link_value() {
        // Exhaustive over the four states: ⟨H⟩ = -A^4 - A^{-4}, w = 2.
        let pd = closure("n=2 +1 +1");
        assert_eq!(kauffman_bracket(&pd).unwrap(), Laurent::from_terms([(4, -1), (-4, -1)]));
        assert_eq!(jones(&pd).unwrap().to_string(), "-t^(1/2) - t^(5/2)");
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(writhe(&closure("n=2 +1 +1 +1")), 3);
        assert_eq!(writhe(&closure("n=2 -1")), -1);
        let pd = closure("n=3 +1 -2 +1 +2");
        assert_eq!(writhe(&pd.mirror()), -writhe(&pd));
    }

    #[test]
    fn skein_examples() {
        assert!(skein_verify(&closure("n=2 +1 +1 +1"), &closure("n=2 +1"), &closure("n=2 +1 +1")));
        assert!(skein_verify(&closure("n=2 +1"), &closure("n=2 -1"), &closure("n=2")));
        assert!(!skein_verify(&closure("n=2 +1 +1 +1"), &closure("n=2 +1"), &closure("n=2")));
    }

    #[test]
    fn mirror_inverts_variable() {
        let pd = closure("n=3 +1 +1 -2 +1 -2");
        assert_eq!(jones(&pd.mirror()).unwrap(), jones(&pd).unwrap().invert_variable());
    }
}
