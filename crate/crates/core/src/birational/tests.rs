use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{exp_frac, expr_equals, int, Param};
use crate::lattice::{cartan_entry, ShapeConfig};

fn same(
    model: &ParamModel,
    frame: Frame,
    form: FForm,
    w1: &WeylWord,
    w2: &WeylWord,
) -> bool {
    let (s1, e1) = apply_word_with(model, frame, form, w1).unwrap();
    let (s2, e2) = apply_word_with(model, frame, form, w2).unwrap();
    s1.images == s2.images && e1.iter().all(|(v, e)| expr_equals(e, &e2[v]))
}

fn relations(model: &ParamModel, frame: Frame, form: FForm) {
    let cfg = model.cfg().clone();
    let roots = cfg.roots();
    let id = WeylWord::empty();
    for &a in &roots {
        let sa = Generator::S(a);
        assert!(same(model, frame, form, &WeylWord(vec![sa, sa]), &id), "{a} squared, {frame:?}");
        for &b in &roots {
            if b <= a {
                continue;
            }
            let sb = Generator::S(b);
            let (l, r) = match cartan_entry(&cfg, a, b).unwrap() {
                0 => (vec![sa, sb], vec![sb, sa]),
                -1 => (vec![sa, sb, sa], vec![sb, sa, sb]),
                c => panic!("unexpected Cartan entry {c}"),
            };
            assert!(same(model, frame, form, &WeylWord(l), &WeylWord(r)), "{a} {b} {frame:?}");
        }
    }
}

fn models() -> Vec<ParamModel> {
    vec![
        ParamModel::generic(ShapeConfig::a(3).unwrap()),
        ParamModel::generic(ShapeConfig::a(4).unwrap()),
        ParamModel::d(3).unwrap(),
    ]
}

#[test]
fn relations_tau_frame() {
    for m in models() {
        relations(&m, Frame::Tau, FForm::Omega);
    }
}

#[test]
fn relations_f_frame() {
    for m in models() {
        relations(&m, Frame::F, FForm::Plain);
        relations(&m, Frame::F, FForm::Omega);
    }
}

#[test]
fn relations_x_frame() {
    for m in models() {
        relations(&m, Frame::X, FForm::Omega);
    }
}

#[test]
fn relations_on_a_shape_with_longer_chains() {
    let m = ParamModel::generic(ShapeConfig::new(vec![2, 3, 2], vec![2, 3, 2]).unwrap());
    relations(&m, Frame::Tau, FForm::Omega);
    // the plain f action needs no assumption on the shape
    let m = ParamModel::generic(ShapeConfig::new(vec![3, 1, 2], vec![1, 2, 2]).unwrap());
    relations(&m, Frame::F, FForm::Plain);
}

fn intertwines(model: &ParamModel, g: Generator, from: Frame, to: Frame, map: &Substitution) {
    let st = ParamState::new(model.clone());
    let src = identity_images(model.cfg(), from);
    let dst = identity_images(model.cfg(), to);
    let moved_src = act_frame(&st, from, FForm::Omega, g, &src).unwrap();
    let moved_dst = act_frame(&st, to, FForm::Plain, g, &dst).unwrap();
    let mut rho = Substitution::new();
    for (v, e) in &moved_src {
        rho.bind_var(*v, e.clone());
    }
    for (p, m) in model.param_images(g).unwrap() {
        rho.bind_param(p, m);
    }
    for (v, e) in &moved_dst {
        let lhs = rho.apply(map.var_binding(*v).unwrap()).unwrap();
        let rhs = map.apply(e).unwrap();
        assert!(expr_equals(&lhs, &rhs), "{g} on {v:?}");
    }
}

#[test]
fn frame_maps_intertwine_the_actions() {
    let mut ms = models();
    ms.push(ParamModel::a_extended(3).unwrap());
    ms.push(ParamModel::a_extended(4).unwrap());
    for m in ms {
        let fm = frame_maps(m.cfg());
        for g in m.generators() {
            intertwines(&m, g, Frame::Tau, Frame::F, &fm.tau_to_f);
            if !matches!(g, Generator::R0 | Generator::R1) {
                intertwines(&m, g, Frame::Tau, Frame::X, &fm.tau_to_x);
                intertwines(&m, g, Frame::X, Frame::F, &fm.x_to_f);
            }
        }
    }
}

#[test]
fn a2_tau_to_f_display() {
    let cfg = ShapeConfig::a(3).unwrap();
    let fm = frame_maps(&cfg);
    let t = |n, i| RationalExpression::var(Var::Tau(n, i));
    let want = t(2, 1).mul(&t(3, -1)).div(&t(3, 1).mul(&t(2, -1))).unwrap();
    assert!(expr_equals(fm.tau_to_f.var_binding(Var::F(1)).unwrap(), &want));
    // tauToX then xToF is tauToF
    let composed = fm.x_to_f.then(&fm.tau_to_x).unwrap();
    for n in 1..=3 {
        let v = Var::F(n);
        assert!(expr_equals(composed.var_binding(v).unwrap(), fm.tau_to_f.var_binding(v).unwrap()));
    }
}

#[test]
fn a_case_tau_reflection_display() {
    let m = ParamModel::generic(ShapeConfig::a(3).unwrap());
    let (_, e) = apply_word(&m, Frame::Tau, &"s1".parse().unwrap()).unwrap();
    let t = |n, i| RationalExpression::var(Var::Tau(n, i));
    let half = exp_frac(1, 2);
    let v = m.v(1);
    let want = t(2, 1)
        .mul(&t(3, -1))
        .mul_monomial(&v.pow(half))
        .add(&t(3, 1).mul(&t(2, -1)).mul_monomial(&v.pow(-half)))
        .div(&t(1, -1))
        .unwrap();
    assert!(expr_equals(&e[&Var::Tau(1, 1)], &want));
    // v_1 = sqrt(a_1^0) for k = l = 1
    assert_eq!(v, Monomial::single(Param::Root(1, 0), half));
}

#[test]
fn plain_f_in_a_case_has_half_exponent() {
    let m = ParamModel::generic(ShapeConfig::a(3).unwrap());
    let (_, e) = apply_word(&m, Frame::F, &"s1".parse().unwrap()).unwrap();
    let f = |n| RationalExpression::var(Var::F(n));
    let a = Monomial::single(Param::Root(1, 0), exp_frac(1, 2));
    let u = RationalExpression::monomial(m.u(1));
    let vi = RationalExpression::monomial(m.v(1).inv());
    let want = f(3).mul_monomial(&a).mul(&f(1).add(&vi)).div(&f(1).add(&u)).unwrap();
    assert!(expr_equals(&e[&Var::F(3)], &want));
    assert!(expr_equals(&e[&Var::F(1)], &f(1)));
}

#[test]
fn inner_generators_fix_f_and_x() {
    let m = ParamModel::generic(ShapeConfig::new(vec![2, 1, 2], vec![2, 1, 2]).unwrap());
    for frame in [Frame::F, Frame::X] {
        let (st, e) = apply_word(&m, frame, &"s1.1".parse().unwrap()).unwrap();
        assert!(!st.images.is_empty());
        for (v, x) in &e {
            assert!(expr_equals(x, &RationalExpression::var(*v)));
        }
    }
    let (_, e) = apply_word(&m, Frame::Tau, &"s1.-1".parse().unwrap()).unwrap();
    assert!(expr_equals(&e[&Var::Tau(1, -1)], &RationalExpression::var(Var::Tau(1, -2))));
}

#[test]
fn omega_form_is_guarded() {
    let m = ParamModel::generic(ShapeConfig::new(vec![2, 1, 1], vec![1, 1, 1]).unwrap());
    let cfg = m.cfg().clone();
    let bad = (1..=3).find(|&n| !cfg.assumption_holds(n)).unwrap();
    let g = Generator::s(bad as u16, 0);
    let st = ParamState::new(m.clone());
    let f = identity_images(&cfg, Frame::F);
    assert!(matches!(act_f_omega(&st, g, &f), Err(BirationalError::AssumptionViolated(_))));
    assert!(act_f(&st, g, &f).is_ok());
    let t = identity_images(&cfg, Frame::Tau);
    assert!(matches!(act_tau(&st, g, &t), Err(BirationalError::AssumptionViolated(_))));
}

#[test]
fn plain_and_omega_forms_agree() {
    for m in models() {
        for r in m.cfg().roots().into_iter().filter(|r| r.i == 0) {
            let w = WeylWord(vec![Generator::S(r)]);
            let (_, a) = apply_word_with(&m, Frame::F, FForm::Plain, &w).unwrap();
            let (_, b) = apply_word_with(&m, Frame::F, FForm::Omega, &w).unwrap();
            for (v, e) in &a {
                assert!(expr_equals(e, &b[v]));
            }
        }
    }
}

#[test]
fn images_are_subtraction_free() {
    let m = ParamModel::generic(ShapeConfig::a(3).unwrap());
    let (_, e) = apply_word(&m, Frame::Tau, &"s1 s2 s3 s1".parse().unwrap()).unwrap();
    assert!(e.values().all(|x| x.is_subtraction_free()));
}

fn random_point(model: &ParamModel, frame: Frame, rng: &mut ChaCha8Rng) -> BTreeMap<Sym, BigRational> {
    let mut p = BTreeMap::new();
    for v in frame.variables(model.cfg()) {
        p.insert(Sym::Var(v), int(rng.gen_range(-20..=20)));
    }
    for q in model.params() {
        p.insert(Sym::Param(q), int(rng.gen_range(-20..=20)));
    }
    p
}

#[test]
fn min_plus_reflections_are_involutions() {
    let m = ParamModel::generic(ShapeConfig::a(3).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for frame in [Frame::Tau, Frame::F] {
        for _ in 0..1000 {
            let p = random_point(&m, frame, &mut rng);
            for g in m.generators() {
                let q = ultradiscrete_step(&m, frame, FForm::Plain, g, &p).unwrap();
                let back = ultradiscrete_step(&m, frame, FForm::Plain, g, &q).unwrap();
                assert_eq!(back, p);
            }
        }
    }
}

#[test]
fn extended_relations() {
    for nn in [3usize, 4] {
        let m = ParamModel::a_extended(nn).unwrap();
        let id = WeylWord::empty();
        let pi = Generator::Pi;
        for frame in [Frame::Tau, Frame::F] {
            for g in [Generator::Iota, Generator::R0, Generator::R1] {
                assert!(same(&m, frame, FForm::Plain, &WeylWord(vec![g, g]), &id), "{g} {frame:?}");
            }
            assert!(same(&m, frame, FForm::Plain, &WeylWord(vec![pi; nn]), &id));
            for n in 1..=nn as u16 {
                let s = Generator::s(n, 0);
                let s1 = Generator::s(n % nn as u16 + 1, 0);
                assert!(same(&m, frame, FForm::Plain, &WeylWord(vec![pi, s]), &WeylWord(vec![s1, pi])));
            }
        }
        relations(&m, Frame::Tau, FForm::Plain);
    }
}

#[test]
fn r1_fixes_tau_minus() {
    let m = ParamModel::a_extended(3).unwrap();
    let (_, e) = apply_word(&m, Frame::Tau, &"r1".parse().unwrap()).unwrap();
    for n in 1..=3 {
        assert!(expr_equals(&e[&Var::Tau(n, -1)], &RationalExpression::var(Var::Tau(n, -1))));
        assert!(e[&Var::Tau(n, 1)].to_laurent().is_some());
    }
}
