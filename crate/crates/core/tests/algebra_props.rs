use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use weyltrop::algebra::eval::specialize_numeric;
use weyltrop::algebra::{
    exact_divide, exp_frac, exp_int, expr_equals, LaurentPoly, Monomial, Param, RationalExpression, Substitution, Sym,
    Var,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (prop::collection::vec(-2i64..=2, 3), -1i64..=1).prop_map(|(es, half)| {
        let mut pairs: Vec<(Sym, _)> = es.iter().enumerate().map(|(k, e)| (Sym::Var(Var::Free(k as u16 + 1)), exp_int(*e))).collect();
        pairs.push((Sym::Param(Param::Free(1)), exp_frac(half, 2)));
        Monomial::from_pairs(pairs)
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(), -5i64..=5, 1i64..=3), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(m, n, d)| (m, rat(n, d)))))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn v(k: u16) -> RationalExpression {
    RationalExpression::var(Var::Free(k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_divide_recovers_the_factor(n in poly(), d in nonzero_poly()) {
        prop_assert_eq!(exact_divide(&n.mul(&d), &d), Some(n));
    }

    #[test]
    fn expr_equals_is_an_equivalence(n in nonzero_poly(), d in nonzero_poly(), s in nonzero_poly(), t in nonzero_poly()) {
        let base = RationalExpression::new(n.clone(), d.clone()).unwrap();
        let a = RationalExpression::new(n.mul(&s), d.mul(&s)).unwrap();
        let b = RationalExpression::new(n.mul(&t), d.mul(&t)).unwrap();
        prop_assert!(expr_equals(&base, &base));
        prop_assert_eq!(expr_equals(&a, &b), expr_equals(&b, &a));
        prop_assert!(expr_equals(&a, &base) && expr_equals(&base, &b) && expr_equals(&a, &b));
    }

    #[test]
    fn substitution_composes(p in poly(), c1 in 1i64..=4, c2 in 1i64..=4) {
        let e = RationalExpression::from_poly(p);
        let sigma = Substitution::new()
            .with_var(Var::Free(1), v(2).add(&RationalExpression::constant(rat(c1, 1))))
            .with_var(Var::Free(2), v(1).mul(&v(3)));
        let rho = Substitution::new()
            .with_var(Var::Free(3), v(1).add(&v(2)).add(&RationalExpression::constant(rat(c2, 1))))
            .with_param(Param::Free(1), Monomial::single(Param::Free(2), exp_int(2)));
        let seq = rho.apply(&sigma.apply(&e).unwrap()).unwrap();
        let once = sigma.then(&rho).unwrap().apply(&e).unwrap();
        prop_assert!(expr_equals(&seq, &once));
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(a in poly(), b in poly(), xs in prop::collection::vec(1i64..=9, 4)) {
        let params = HashMap::from([(Param::Free(1), rat(xs[0], 1))]);
        let vars: HashMap<Var, BigRational> = (1..=3).map(|k| (Var::Free(k), rat(xs[k as usize], 7))).collect();
        let ev = |p: &LaurentPoly| specialize_numeric(&RationalExpression::from_poly(p.clone()), 2, &params, &vars).unwrap();
        prop_assert_eq!(ev(&a.mul(&b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&a.add(&b)), ev(&a) + ev(&b));
    }
}
