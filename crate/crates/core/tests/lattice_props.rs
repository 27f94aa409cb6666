use proptest::prelude::*;

use weyltrop::lattice::{
    apply_word_lattice, invariant_classes, kac_translate, reflect_curve, reflect_divisor, CurveClass, DivisorClass,
    RootVector, ShapeConfig,
};
use weyltrop::word::{Generator, WeylWord};

fn shapes() -> Vec<ShapeConfig> {
    vec![
        ShapeConfig::a(3).unwrap(),
        ShapeConfig::a(4).unwrap(),
        ShapeConfig::new(vec![2, 1, 1], vec![1, 2, 1]).unwrap(),
        ShapeConfig::d(3).unwrap(),
    ]
}

fn basis(cfg: &ShapeConfig) -> (Vec<DivisorClass>, Vec<CurveClass>) {
    let mut ds: Vec<DivisorClass> = (1..=cfg.n() as i64).map(|n| DivisorClass::h(cfg, n)).collect();
    let mut cs: Vec<CurveClass> = (1..=cfg.n() as i64).map(|n| CurveClass::h(cfg, n)).collect();
    for (n, i) in cfg.exceptional() {
        ds.push(DivisorClass::e(cfg, n as i64, i));
        cs.push(CurveClass::e(cfg, n as i64, i));
    }
    (ds, cs)
}

fn word(cfg: &ShapeConfig, picks: &[usize]) -> WeylWord {
    let roots = cfg.roots();
    WeylWord(picks.iter().map(|k| Generator::S(roots[k % roots.len()])).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn words_preserve_pairing_and_delta(s in 0usize..4, picks in prop::collection::vec(0usize..64, 0..=12)) {
        let cfg = &shapes()[s];
        let w = word(cfg, &picks);
        let (ds, cs) = basis(cfg);
        for d in &ds {
            for c in &cs {
                let wd = apply_word_lattice(cfg, &w, d).unwrap();
                let wc = apply_word_lattice(cfg, &w, c).unwrap();
                prop_assert_eq!(wd.pair(&wc), d.pair(c));
            }
        }
        let inv = invariant_classes(cfg);
        prop_assert_eq!(apply_word_lattice(cfg, &w, &inv.delta).unwrap(), inv.delta.clone());
        prop_assert_eq!(apply_word_lattice(cfg, &w, &inv.delta_check).unwrap(), inv.delta_check.clone());
    }

    #[test]
    fn reflections_are_involutions(s in 0usize..4, k in 0usize..64, coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let cfg = &shapes()[s];
        let roots = cfg.roots();
        let r = roots[k % roots.len()];
        let (ds, cs) = basis(cfg);
        let mut d = DivisorClass::zero(cfg);
        let mut c = CurveClass::zero(cfg);
        for (x, a) in ds.iter().zip(&coeffs) {
            d = d.add_scaled(x, *a);
        }
        for (x, a) in cs.iter().zip(coeffs.iter().rev()) {
            c = c.add_scaled(x, *a);
        }
        prop_assert_eq!(reflect_divisor(cfg, r, &reflect_divisor(cfg, r, &d).unwrap()).unwrap(), d);
        prop_assert_eq!(reflect_curve(cfg, r, &reflect_curve(cfg, r, &c).unwrap()).unwrap(), c);
    }

    #[test]
    fn kac_translations_commute_and_add(s in prop::sample::select(vec![0usize, 1, 3]), a in 0usize..64, b in 0usize..64, m in -2i64..=2) {
        let cfg = &shapes()[s];
        let roots = cfg.roots();
        let ra = RootVector::simple(roots[a % roots.len()]).scale(m);
        let rb = RootVector::simple(roots[b % roots.len()]);
        for d in basis(cfg).0 {
            let ab = kac_translate(cfg, &ra, &kac_translate(cfg, &rb, &d).unwrap()).unwrap();
            let ba = kac_translate(cfg, &rb, &kac_translate(cfg, &ra, &d).unwrap()).unwrap();
            prop_assert_eq!(&ab, &ba);
            prop_assert_eq!(ab, kac_translate(cfg, &ra.add(&rb), &d).unwrap());
        }
    }
}
