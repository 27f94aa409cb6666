use std::collections::HashMap;

use proptest::prelude::*;

use weyltrop::algebra::expr_equals;
use weyltrop::birational::ParamModel;
use weyltrop::lattice::ShapeConfig;
use weyltrop::tau::{certify, tau_of, OrbitElement};
use weyltrop::word::{Generator, WeylWord};

fn a2() -> ParamModel {
    ParamModel::generic(ShapeConfig::a(3).unwrap())
}

fn element(m: &ParamModel, base: usize, picks: &[u16]) -> OrbitElement {
    let cfg = m.cfg();
    let b = cfg.exceptional()[base % cfg.exceptional().len()];
    let w = WeylWord(picks.iter().map(|k| Generator::s(k % 3 + 1, 0)).collect());
    OrbitElement::from_word(cfg, w, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn random_words_certify(base in 0usize..6, picks in prop::collection::vec(0u16..3, 0..=5)) {
        let m = a2();
        let el = element(&m, base, &picks);
        let tv = tau_of(&m, &el).unwrap();
        let c = certify(&m, &el, &tv.expr);
        prop_assert!(c.passed(), "{} {:?}", el.witness, c);
    }

    #[test]
    fn tau_depends_only_on_the_class(words in prop::collection::vec((0usize..6, prop::collection::vec(0u16..3, 0..=4)), 2..6)) {
        let m = a2();
        let mut seen: HashMap<_, weyltrop::algebra::RationalExpression> = HashMap::new();
        for (base, picks) in words {
            let el = element(&m, base, &picks);
            let t = tau_of(&m, &el).unwrap().expr;
            if let Some(prev) = seen.get(&el.divisor) {
                prop_assert!(expr_equals(prev, &t), "{}", el.witness);
            } else {
                seen.insert(el.divisor.clone(), t);
            }
        }
    }
}
