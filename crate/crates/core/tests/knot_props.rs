use proptest::prelude::*;

use cskit::knots::{
    braid_closure_pd, jones, kauffman_bracket, kauffman_bracket_memo, parse_pd, skein_triple, skein_verify, BraidWord, Letter,
};
use cskit::temperley_lieb::markov_trace_jones;

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec((1..n as i64, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let signed: Vec<i64> = ls.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
            BraidWord::from_signed(n, &signed).unwrap()
        })
    })
}

fn v(b: &BraidWord) -> cskit::HalfExpLaurent {
    jones(&braid_closure_pd(b)).unwrap()
}

fn concat(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let mut s = a.signed();
    s.extend(b.signed());
    BraidWord::from_signed(a.strands(), &s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn markov_moves_preserve_jones(b in word(4, 7), k in 0usize..8, i in 1usize..4, pos in any::<bool>()) {
        let base = v(&b);
        prop_assert_eq!(&v(&b.rotate(k)), &base);
        let g = Letter::new(1 + (i - 1) % (b.strands() - 1), pos);
        prop_assert_eq!(&v(&b.conjugate(g).unwrap()), &base);
        prop_assert_eq!(&v(&b.stabilize(pos)), &base);
    }

    #[test]
    fn mirror_inverts_variable(b in word(4, 8)) {
        prop_assert_eq!(v(&b.mirror()), v(&b).invert_variable());
    }

    #[test]
    fn skein_relation(b in word(4, 8).prop_filter("nonempty", |b| !b.is_empty()), k in any::<prop::sample::Index>()) {
        let pos = k.index(b.len());
        let (p, m, z) = skein_triple(&b, pos);
        prop_assert!(skein_verify(&braid_closure_pd(&p), &braid_closure_pd(&m), &braid_closure_pd(&z)));
    }

    #[test]
    fn trace_matches_state_sum(b in word(5, 8)) {
        prop_assert_eq!(markov_trace_jones(&b).unwrap(), v(&b));
    }

    #[test]
    fn memo_matches_state_sum(b in word(5, 10)) {
        let pd = braid_closure_pd(&b);
        prop_assert_eq!(kauffman_bracket_memo(&pd).unwrap(), kauffman_bracket(&pd).unwrap());
    }

    #[test]
    fn braid_relations(n in 3usize..=5, i in 1usize..4, j in 1usize..5, ctx in word(5, 4)) {
        let i = 1 + (i - 1) % (n - 2);
        let ctx = BraidWord::from_signed(n, &ctx.signed().into_iter().filter(|x| (x.unsigned_abs() as usize) < n).collect::<Vec<_>>()).unwrap();
        let w = |s: &[i64]| concat(&ctx, &BraidWord::from_signed(n, s).unwrap());
        let (a, b) = (i as i64, i as i64 + 1);
        prop_assert_eq!(v(&w(&[a, b, a])), v(&w(&[b, a, b])));
        prop_assert_eq!(v(&w(&[a, -a])), v(&ctx));
        let j = 1 + (j - 1) % (n - 1);
        if (j as i64 - a).abs() >= 2 {
            prop_assert_eq!(v(&w(&[a, j as i64])), v(&w(&[j as i64, a])));
        }
    }

    #[test]
    fn pd_text_round_trips(b in word(4, 8)) {
        let pd = braid_closure_pd(&b);
        let back = parse_pd(&pd.to_text()).unwrap();
        prop_assert_eq!(jones(&back).unwrap(), jones(&pd).unwrap());
        let sorted = |d: &cskit::knots::PDCode| {
            let mut s = d.signs().to_vec();
            s.sort();
            s
        };
        prop_assert_eq!(sorted(&back), sorted(&pd));
        prop_assert_eq!(back.component_count(), pd.component_count());
    }

    #[test]
    fn braid_text_round_trips(b in word(6, 10)) {
        prop_assert_eq!(b.to_string().parse::<BraidWord>().unwrap(), b);
    }
}
