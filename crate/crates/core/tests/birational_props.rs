use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;

use weyltrop::algebra::{int, Sym};
use weyltrop::birational::{apply_word, ultradiscrete_step, FForm, Frame, ParamModel};
use weyltrop::lattice::ShapeConfig;
use weyltrop::word::{Generator, WeylWord};

fn a2() -> ParamModel {
    ParamModel::generic(ShapeConfig::a(3).unwrap())
}

fn word(model: &ParamModel, picks: &[usize]) -> WeylWord {
    let gens = model.generators();
    WeylWord(picks.iter().map(|k| gens[k % gens.len()]).collect())
}

fn point(model: &ParamModel, frame: Frame, xs: &[i64]) -> BTreeMap<Sym, BigRational> {
    let syms = frame
        .variables(model.cfg())
        .into_iter()
        .map(Sym::Var)
        .chain(model.params().into_iter().map(Sym::Param));
    syms.zip(xs.iter().cycle()).map(|(s, x)| (s, int(*x))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tau_images_stay_subtraction_free(picks in prop::collection::vec(0usize..16, 1..=4)) {
        let m = a2();
        let (_, e) = apply_word(&m, Frame::Tau, &word(&m, &picks)).unwrap();
        prop_assert!(e.values().all(|x| x.is_subtraction_free()));
    }

    #[test]
    fn min_plus_steps_are_involutions(xs in prop::collection::vec(-30i64..=30, 12), k in 0usize..16) {
        for m in [a2(), ParamModel::d(3).unwrap()] {
            let gens = m.generators();
            let g: Generator = gens[k % gens.len()];
            for frame in [Frame::Tau, Frame::F] {
                let p = point(&m, frame, &xs);
                let q = ultradiscrete_step(&m, frame, FForm::Plain, g, &p).unwrap();
                prop_assert_eq!(ultradiscrete_step(&m, frame, FForm::Plain, g, &q).unwrap(), p);
            }
        }
    }
}
