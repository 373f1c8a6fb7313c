mod common;

use proptest::prelude::*;

use common::{arb_raw, RawSet};
use modalgebra::bao::Bao;
use modalgebra::upset::{recession_algebra, Flavor, UpSet};

fn agrees(set: &UpSet, bound: u64, oracle: impl Fn(u64) -> bool) -> bool {
    (0..bound).all(|n| set.contains(n) == oracle(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normalize_preserves_members(x in arb_raw()) {
        let set = x.to_upset();
        prop_assert!(agrees(&set, x.horizon(&x), |n| x.member(n)));
    }

    #[test]
    fn normalize_is_idempotent(x in arb_raw()) {
        let set = x.to_upset();
        let again = UpSet::normalize(set.prefix().to_vec(), set.period().to_vec()).unwrap();
        prop_assert_eq!(again, set);
    }

    #[test]
    fn equality_is_extensional(x in arb_raw(), y in arb_raw()) {
        let same = (0..x.horizon(&y)).all(|n| x.member(n) == y.member(n));
        prop_assert_eq!(x.to_upset() == y.to_upset(), same);
    }

    #[test]
    fn boolean_operations(x in arb_raw(), y in arb_raw()) {
        let (a, b) = (x.to_upset(), y.to_upset());
        let h = x.horizon(&y);
        prop_assert!(agrees(&a.union(&b), h, |n| x.member(n) || y.member(n)));
        prop_assert!(agrees(&a.intersection(&b), h, |n| x.member(n) && y.member(n)));
        prop_assert!(agrees(&a.difference(&b), h, |n| x.member(n) && !y.member(n)));
        prop_assert!(agrees(&a.complement(), h, |n| !x.member(n)));
        prop_assert_eq!(a.is_subset(&b), (0..h).all(|n| !x.member(n) || y.member(n)));
    }

    #[test]
    fn recession_operators(x in arb_raw()) {
        let a = x.to_upset();
        let h = x.horizon(&x) + 2;
        prop_assert!(agrees(&a.dia_recession(), h, |w| x.dia(w)));
        prop_assert!(agrees(&a.box_recession(), h, |w| x.boxed(w)));
    }

    #[test]
    fn diamond_is_normal(x in arb_raw(), y in arb_raw()) {
        let ctx = recession_algebra(Flavor::Full);
        let (a, b) = (x.to_upset(), y.to_upset());
        prop_assert_eq!(ctx.diamond(&ctx.zero()), ctx.zero());
        prop_assert_eq!(ctx.diamond(&a.union(&b)), ctx.diamond(&a).union(&ctx.diamond(&b)));
        prop_assert_eq!(ctx.box_(&a.intersection(&b)), ctx.box_(&a).intersection(&ctx.box_(&b)));
    }

    #[test]
    fn veiled_sets_are_closed(x in arb_raw(), y in arb_raw()) {
        let finite_or_cofinite = |r: &RawSet| RawSet { prefix: r.prefix.clone(), period: vec![r.period[0]] };
        let (a, b) = (finite_or_cofinite(&x).to_upset(), finite_or_cofinite(&y).to_upset());
        let ctx = recession_algebra(Flavor::Veiled);
        prop_assert!(ctx.contains(&a) && ctx.contains(&b));
        for result in [ctx.meet(&a, &b), ctx.join(&a, &b), ctx.complement(&a), ctx.diamond(&a), ctx.box_(&a)] {
            prop_assert!(result.veiled_admissible(), "{}", result);
        }
    }

    #[test]
    fn text_forms_round_trip(x in arb_raw()) {
        let a = x.to_upset();
        prop_assert_eq!(a.to_bits().parse::<UpSet>().unwrap(), a.clone());
        prop_assert_eq!(a.to_string().parse::<UpSet>().unwrap(), a);
    }
}
