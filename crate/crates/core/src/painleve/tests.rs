use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::eval::reduced_degree_in;
use crate::algebra::{exp_int, expr_equals, Monomial, Param};
use crate::birational::{apply_word, ModelKind};
use crate::lattice::{DivisorClass, LatticeAction};
use crate::tau::enumerate_orbit;

fn f(n: u16) -> RationalExpression {
    RationalExpression::var(Var::F(n))
}

#[test]
fn qpa_step_matches_the_equation() {
    let m = ParamModel::a_extended(3).unwrap();
    let (st, e) = qpa_step(&m).unwrap();
    for n in 1..=3i64 {
        let w = |k: i64| (k - 1).rem_euclid(3) as u16 + 1;
        let want = f(w(n + 1)).mul(&extended::g_f(&m, n - 1)).div(&extended::g_f(&m, n + 1)).unwrap();
        assert!(expr_equals(&e[&Var::F(w(n))], &want));
    }
    for n in 1..=2u16 {
        assert_eq!(st.image(Param::A(n)), m.a(n as i64));
    }
    assert_eq!(st.image(Param::B(1)), m.q().mul(&Monomial::single(Param::B(1), exp_int(1))));
    assert_eq!(st.image(Param::B(0)), Monomial::single(Param::B(0), exp_int(1)).div(&m.q()));
    // ι first, then r_1
    let (_, i) = apply_word(&m, Frame::F, &WeylWord(vec![Generator::Iota])).unwrap();
    assert!(expr_equals(&i[&Var::F(2)], &f(2).recip().unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for v in e.values() {
        for j in 1..=3 {
            assert!(reduced_degree_in(v, Var::F(j), 3, &mut rng).unwrap() <= 4);
        }
    }
    assert!(matches!(qpa_step(&ParamModel::d(3).unwrap()), Err(PainleveError::NotExtended)));
}

#[test]
fn b_shifts_of_the_a1_part() {
    let m = ParamModel::a_extended(3).unwrap();
    let b = |i| Monomial::single(Param::B(i), exp_int(1));
    for k in 1..=3 {
        let w = WeylWord(vec![Generator::R0, Generator::R1]).pow(k);
        let mut st = ParamState::new(m.clone());
        for g in w.letters().iter().rev() {
            st = crate::birational::act_params(&st, *g).unwrap();
        }
        let q = m.q().pow(exp_int(2 * k as i64));
        assert!(
            (st.image(Param::B(1)) == b(1).mul(&q) && st.image(Param::B(0)) == b(0).div(&q))
                || (st.image(Param::B(1)) == b(1).div(&q) && st.image(Param::B(0)) == b(0).mul(&q)),
            "{k}"
        );
        for n in 1..=2 {
            assert_eq!(st.image(Param::A(n)), m.a(n as i64));
        }
    }
}

#[test]
fn d_model_generators() {
    let (m, gens) = build_d(5).unwrap();
    assert_eq!(m.kind(), ModelKind::D);
    assert_eq!(gens.len(), 8);
    let s0 = gens[0].1;
    let (_, e) = apply_word(&m, Frame::Tau, &WeylWord(vec![s0])).unwrap();
    assert!(expr_equals(&e[&Var::Tau(1, 1)], &RationalExpression::var(Var::Tau(1, 2))));
    assert!(expr_equals(&e[&Var::Tau(1, 2)], &RationalExpression::var(Var::Tau(1, 1))));
    for n in 2..=3 {
        let a = Monomial::single(Param::DRoot(n as u16), exp_int(1));
        assert_eq!(m.u(n), a);
        assert_eq!(m.v(n), a);
    }
    for (l, g) in gens {
        let img = m.param_images(g).unwrap();
        assert_eq!(img[&Param::DRoot(l)], Monomial::single(Param::DRoot(l), exp_int(-1)));
    }
    assert!(matches!(build_d(2), Err(PainleveError::RankTooSmall(2))));
}

#[test]
fn conserved_quantities_are_invariant() {
    let q3 = conserved_quantities_d(3).unwrap();
    assert_eq!(q3.len(), 1);
    assert!(expr_equals(&q3[0], &f(1).mul(&f(2)).mul(&f(3))));
    let q4 = conserved_quantities_d(4).unwrap();
    assert!(expr_equals(&q4[0], &f(2).mul(&f(4))));
    assert!(expr_equals(&q4[1], &f(1).mul(&f(3))));
    for n in [3, 4] {
        let (m, gens) = build_d(n).unwrap();
        for q in conserved_quantities_d(n).unwrap() {
            for (_, g) in &gens {
                let (_, e) = apply_word(&m, Frame::F, &WeylWord(vec![*g])).unwrap();
                let mut s = crate::algebra::Substitution::new();
                for (v, x) in e {
                    s.bind_var(v, x);
                }
                assert!(expr_equals(&s.apply(&q).unwrap(), &q), "{g}");
            }
        }
    }
}

#[test]
fn translation_words() {
    let (ts, tt) = translations_a(4).unwrap();
    assert_eq!(ts[0].to_string(), "pi s3.0 s2.0 s1.0");
    assert_eq!(ts[3].to_string(), "pi s2.0 s1.0 s4.0");
    assert_eq!(tt, qpa_word());
    assert_eq!(inverse_word(&ts[0], 4).len(), 6);
}

fn same_on_f(m: &ParamModel, a: &WeylWord, b: &WeylWord) -> bool {
    let (s1, e1) = apply_word(m, Frame::F, a).unwrap();
    let (s2, e2) = apply_word(m, Frame::F, b).unwrap();
    s1.images == s2.images && e1.iter().all(|(v, e)| expr_equals(e, &e2[v]))
}

#[test]
fn translations_commute_on_f() {
    let m = ParamModel::a_extended(3).unwrap();
    let (ts, tt) = translations_a(3).unwrap();
    assert!(same_on_f(&m, &ts[0].concat(&ts[1]), &ts[1].concat(&ts[0])));
    assert!(same_on_f(&m, &ts[2].concat(&tt), &tt.concat(&ts[2])));
}

#[test]
fn nu_kappa_of_seeds() {
    let cfg = crate::lattice::ShapeConfig::a(4).unwrap();
    for n in 1..=4usize {
        let mut nu: Vec<i64> = (1..=4).map(|k| (k <= n) as i64).collect();
        let want = NuKappa::new(nu.clone(), 0);
        assert_eq!(nu_kappa_of(&cfg, &DivisorClass::e(&cfg, n as i64, 1)).unwrap(), want);
        nu = want.nu.clone();
        assert_eq!(nu_kappa_of(&cfg, &DivisorClass::e(&cfg, n as i64, -1)).unwrap(), NuKappa::new(nu, 1));
    }
    assert!(matches!(
        nu_kappa_of(&cfg, &DivisorClass::h(&cfg, 1)),
        Err(PainleveError::NonIntegralSolution(_))
    ));
}

#[test]
fn nu_kappa_round_trip_and_shifts() {
    for nn in [3usize, 4] {
        let cfg = crate::lattice::ShapeConfig::a(nn).unwrap();
        let (ts, tt) = translations_a(nn).unwrap();
        for el in enumerate_orbit(&cfg, 4).unwrap() {
            let nk = nu_kappa_of(&cfg, &el.divisor).unwrap();
            assert_eq!(divisor_of(&cfg, &nk).unwrap(), el.divisor);
            for (k, t) in ts.iter().enumerate() {
                let moved = crate::lattice::apply_word_lattice(&cfg, t, &el.divisor).unwrap();
                let mut nu = nk.nu.clone();
                nu[k] += 1;
                assert_eq!(nu_kappa_of(&cfg, &moved).unwrap(), NuKappa::new(nu, nk.kappa));
            }
            let moved = crate::lattice::apply_word_lattice(&cfg, &tt, &el.divisor).unwrap();
            assert_eq!(nu_kappa_of(&cfg, &moved).unwrap(), NuKappa::new(nk.nu.clone(), nk.kappa + 1));
        }
    }
    let cfg = crate::lattice::ShapeConfig::a(3).unwrap();
    let b0 = beta0_check(&cfg).unwrap();
    assert_eq!(b0.act(&cfg, Generator::Iota).unwrap().act(&cfg, Generator::Iota).unwrap(), b0);
}

#[test]
fn degree_growth_is_bounded_and_quadratic() {
    let m = ParamModel::a_extended(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (i, j) in [(1, 1), (1, 2), (3, 2)] {
        let t = degree_growth_table(&m, &qpa_word(), 8, i, j, 2, &mut rng).unwrap();
        assert_eq!(t.degrees[0], (i == j) as usize);
        assert!(t.degrees.iter().zip(&t.bound).all(|(d, b)| *d as i64 <= *b), "{t:?}");
        let d: Vec<i64> = t.degrees.iter().map(|&x| x as i64).collect();
        assert!(quadratic_with_period(&d, 3), "{d:?}");
    }
    assert!(matches!(
        degree_growth_table(&m, &qpa_word(), 1, 1, 1, 2, &mut rng),
        Err(PainleveError::TooFewIterations(2))
    ));
}

#[test]
fn periodic_quadratic_detector() {
    let sq: Vec<i64> = (0..10).map(|n| n * n).collect();
    assert!(quadratic_with_period(&sq, 1));
    assert!(quadratic_with_period(&[0, 1, 3, 6, 11, 17, 24, 33, 43], 3));
    assert!(!quadratic_with_period(&[0, 1, 3, 6, 11, 17, 24, 33, 43], 1));
    assert!(!quadratic_with_period(&(0..10).map(|n| n * n * n).collect::<Vec<_>>(), 1));
}
