use proptest::prelude::*;

use cskit::knots::BraidWord;
use cskit::temperley_lieb::{all_matchings, braid_to_tl, tl_mul, TLElement};
use cskit::Laurent;

fn element(n: usize) -> impl Strategy<Value = TLElement> {
    let basis = all_matchings(n);
    let k = basis.len();
    prop::collection::vec((0..k, -3i64..=3, -4i64..=4), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(TLElement::zero(n), |acc, (i, c, e)| {
            acc.add(&TLElement::basis(basis[i].clone(), Laurent::monomial(c, e))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative((x, y, z) in (2usize..=5).prop_flat_map(|n| (element(n), element(n), element(n)))) {
        let left = tl_mul(&tl_mul(&x, &y).unwrap(), &z).unwrap();
        let right = tl_mul(&x, &tl_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(x in (2usize..=5).prop_flat_map(element)) {
        let id = TLElement::identity(x.strands());
        prop_assert_eq!(tl_mul(&x, &id).unwrap(), x.clone());
        prop_assert_eq!(tl_mul(&id, &x).unwrap(), x);
    }

    #[test]
    fn braid_images_satisfy_braid_relations(n in 3usize..=6, i in 1usize..5) {
        let i = 1 + (i - 1) % (n - 2);
        let img = |s: &[i64]| braid_to_tl(&BraidWord::from_signed(n, s).unwrap()).unwrap();
        let (a, b) = (i as i64, i as i64 + 1);
        prop_assert_eq!(img(&[a, b, a]), img(&[b, a, b]));
        prop_assert_eq!(img(&[a, -a]), TLElement::identity(n));
    }
}
