use std::collections::HashMap;

use super::*;
use crate::algebra::{exp_int, expr_equals, Monomial};
use crate::birational::{frame_maps, tau as tau_var, zeta0, zeta_inf};
use crate::lattice::{invariant_classes, DivisorClass, ShapeConfig};
use crate::word::{Generator, WeylWord};

fn a2() -> ParamModel {
    ParamModel::generic(ShapeConfig::a(3).unwrap())
}

fn mono(m: Monomial) -> RationalExpression {
    RationalExpression::monomial(m)
}

fn zmono(v: Var) -> Monomial {
    Monomial::single(v, exp_int(1))
}

#[test]
fn seeds_and_first_layer() {
    let cfg = ShapeConfig::a(3).unwrap();
    assert_eq!(enumerate_orbit(&cfg, 0).unwrap().len(), 6);
    let one = enumerate_orbit(&cfg, 1).unwrap();
    for n in 1..=3 {
        for i in [1i16, -1] {
            let mut d = DivisorClass::h(&cfg, n);
            d.add_e(&cfg, n, -i, -1);
            assert!(one.iter().any(|e| e.divisor == d));
        }
    }
    let sizes: Vec<usize> = (0..=5).map(|l| enumerate_orbit(&cfg, l).unwrap().len()).collect();
    assert!(sizes.windows(2).all(|w| w[0] < w[1]), "{sizes:?}");
}

#[test]
fn first_reflection_tau_values() {
    let m = a2();
    let cfg = m.cfg().clone();
    let w = cfg.omega(1);
    let one = exp_int(1);
    let (u, v) = (m.u(1), m.v(1));
    let z0 = mono(zeta0(&cfg, 1));
    let zi = mono(zeta_inf(&cfg, 1));
    // s_1 . E_1^1 = H_1 - E_1^-1
    let el = OrbitElement::from_word(&cfg, "s1".parse().unwrap(), (1, 1)).unwrap();
    let t = tau_of(&m, &el).unwrap().expr;
    let want = z0.mul_monomial(&v.pow(w)).add(&zi.mul_monomial(&v.pow(w - one))).mul_monomial(&tau_var(&cfg, 1, -1).inv());
    assert!(expr_equals(&t, &want));
    let el = OrbitElement::from_word(&cfg, "s1".parse().unwrap(), (1, -1)).unwrap();
    let t = tau_of(&m, &el).unwrap().expr;
    let want = z0.mul_monomial(&u.pow(-w)).add(&zi.mul_monomial(&u.pow(one - w))).mul_monomial(&tau_var(&cfg, 1, 1).inv());
    assert!(expr_equals(&t, &want));
    assert!(expr_equals(&tau_of(&m, &OrbitElement::seed(&cfg, 2, -1)).unwrap().expr, &RationalExpression::var(Var::Tau(2, -1))));
}

#[test]
fn tau_depends_only_on_the_class() {
    let m = a2();
    let cfg = m.cfg().clone();
    let gens: Vec<Generator> = cfg.roots().into_iter().map(Generator::S).collect();
    let mut words = vec![WeylWord::empty()];
    let mut layer = words.clone();
    for _ in 0..4 {
        layer = layer.iter().flat_map(|w| gens.iter().map(move |g| w.prepend(*g))).collect();
        words.extend(layer.iter().cloned());
    }
    let mut seen: HashMap<DivisorClass, RationalExpression> = HashMap::new();
    let mut compared = 0;
    for (n, i) in cfg.exceptional() {
        for w in &words {
            let el = OrbitElement::from_word(&cfg, w.clone(), (n, i)).unwrap();
            let t = tau_of(&m, &el).unwrap().expr;
            match seen.get(&el.divisor) {
                Some(prev) => {
                    assert!(expr_equals(prev, &t), "{w} on E{n}^{i}");
                    compared += 1;
                }
                None => {
                    seen.insert(el.divisor.clone(), t);
                }
            }
        }
    }
    assert!(compared > 100);
}

#[test]
fn laurent_after_two_reflections() {
    let m = a2();
    let el = OrbitElement::from_word(m.cfg(), "s1 s2".parse().unwrap(), (2, 1)).unwrap();
    let tv = tau_of(&m, &el).unwrap();
    let (ok, p) = laurent_certificate(&tv);
    assert!(ok);
    assert!(p.unwrap().len() > 1);
}

#[test]
fn listed_defining_polynomials() {
    let m = a2();
    let cfg = m.cfg().clone();
    let phi = phi_from_tau(&m, &OrbitElement::seed(&cfg, 2, 1)).unwrap();
    assert!(phi.poly.is_one());
    assert!(check_normalization(&phi, &cfg).unwrap());

    let z0 = |n: u16| zmono(Var::Zeta0(n));
    let zi = |n: u16| zmono(Var::ZetaInf(n));
    let half = cfg.omega(1);
    let one = exp_int(1);
    // H_1 - E_1^1
    let mut d = DivisorClass::h(&cfg, 1);
    d.add_e(&cfg, 1, 1, -1);
    let el = locate(&cfg, &d, 1).unwrap().unwrap();
    let phi = phi_from_tau(&m, &el).unwrap();
    let u = m.u(1);
    let want = mono(z0(1)).add(&mono(zi(1)).mul_monomial(&u)).mul_monomial(&u.pow(-half));
    assert!(expr_equals(&RationalExpression::from_poly(phi.poly.clone()), &want));
    assert_eq!(phi.degree, vec![1, 0, 0]);
    assert!(check_normalization(&phi, &cfg).unwrap());
    let mut skewed = phi.clone();
    skewed.poly = skewed.poly.mul_term(&u, &crate::algebra::int(1));
    assert!(!check_normalization(&skewed, &cfg).unwrap());

    // H_1 + H_2 - E_1^1 - E_1^-1 - E_2^-1
    let mut d = DivisorClass::h(&cfg, 1);
    d.add_h(&cfg, 2, 1);
    d.add_e(&cfg, 1, 1, -1);
    d.add_e(&cfg, 1, -1, -1);
    d.add_e(&cfg, 2, -1, -1);
    let el = locate(&cfg, &d, 4).unwrap().unwrap();
    let phi = phi_from_tau(&m, &el).unwrap();
    let (u1, v1, v2) = (m.u(1), m.v(1), m.v(2));
    let (w1, w2) = (cfg.omega(1), cfg.omega(2));
    let c = u1.pow(w1 * (w2 - one)).mul(&v1.pow(w1 * w2)).mul(&v2.pow(w2));
    let body = mono(z0(1).mul(&z0(2)))
        .add(&mono(u1.mul(&zi(1)).mul(&z0(2))))
        .add(&mono(z0(1).mul(&zi(2)).div(&v2)))
        .add(&mono(zi(1).mul(&zi(2)).div(&v1.mul(&v2))));
    assert!(expr_equals(&RationalExpression::from_poly(phi.poly.clone()), &body.mul_monomial(&c)));
    assert!(check_normalization(&phi, &cfg).unwrap());
}

#[test]
fn hyperplane_classes_have_trivial_tau() {
    for m in [a2(), ParamModel::d(3).unwrap()] {
        let cfg = m.cfg().clone();
        let inv = invariant_classes(&cfg);
        let one = crate::algebra::LaurentPoly::one();
        for n in 1..=cfg.n() as i64 {
            for (d, z) in [(&inv.d0[n as usize - 1], Var::Zeta0(n as u16)), (&inv.dinf[n as usize - 1], Var::ZetaInf(n as u16))] {
                let phi = phi_from_laurent(&m, d, &one).unwrap();
                let want = zmono(z);
                let got = phi.poly.as_monomial().map(|(mm, _)| mm.clone());
                assert_eq!(got, Some(want));
            }
        }
    }
}

#[test]
fn certificates_on_short_words() {
    for (m, len) in [(a2(), 3), (ParamModel::d(3).unwrap(), 3)] {
        for e in enumerate_orbit_with_tau(&m, len).unwrap() {
            let c = certify(&m, &e.element, &e.tau);
            assert!(c.passed(), "{} {c:?}", e.element.witness);
        }
    }
}

#[test]
fn claim_on_listed_classes() {
    let m = a2();
    let cfg = m.cfg().clone();
    let mut d = DivisorClass::h(&cfg, 2);
    d.add_e(&cfg, 2, 1, -1);
    let els = vec![
        OrbitElement::seed(&cfg, 1, -1),
        OrbitElement::seed(&cfg, 3, 1),
        locate(&cfg, &d, 1).unwrap().unwrap(),
    ];
    for el in els {
        for n in 1..=3u16 {
            assert!(check_claim_transform(&m, &el, Generator::s(n, 0)).unwrap(), "{n}");
        }
    }
    assert!(matches!(
        check_claim_transform(&m, &OrbitElement::seed(&cfg, 1, 1), Generator::Pi),
        Err(TauError::NotZeroReflection(_))
    ));
    let _ = frame_maps(&cfg);
}
