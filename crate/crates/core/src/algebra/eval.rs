use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use super::error::AlgebraError;
use super::expr::RationalExpression;
use super::field::{Field, Fp};
use super::monomial::Exp;
use super::poly::LaurentPoly;
use super::symbol::{Param, Sym, Var};
use super::unipoly::UniRat;

/// Evaluate a Laurent polynomial in a field. `value(s, e)` must return the
/// value of `s^e`.
pub fn eval_poly<F, V>(p: &LaurentPoly, value: &mut V) -> Result<F, AlgebraError>
where
    F: Field,
    V: FnMut(Sym, Exp) -> Result<F, AlgebraError>,
{
    let mut cache: HashMap<(Sym, Exp), F> = HashMap::new();
    let mut acc = F::zero();
    for (m, c) in p.terms() {
        let mut t = F::from_rational(c).ok_or(AlgebraError::PoleAtPoint)?;
        for (s, e) in m.entries() {
            let v = match cache.get(&(*s, *e)) {
                Some(v) => v.clone(),
                None => {
                    let v = value(*s, *e)?;
                    cache.insert((*s, *e), v.clone());
                    v
                }
            };
            t = t.mul(&v);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

pub fn eval_expr<F, V>(e: &RationalExpression, value: &mut V) -> Result<F, AlgebraError>
where
    F: Field,
    V: FnMut(Sym, Exp) -> Result<F, AlgebraError>,
{
    let n: F = eval_poly(e.num(), value)?;
    let d: F = eval_poly(e.den(), value)?;
    let di = d.inv().ok_or(AlgebraError::PoleAtPoint)?;
    Ok(n.mul(&di))
}

/// Least common multiple of all parameter exponent denominators.
pub fn clearing_root(e: &RationalExpression) -> i64 {
    e.num()
        .terms()
        .iter()
        .chain(e.den().terms())
        .fold(1i64, |acc, (m, _)| acc.lcm(&m.denominator_lcm()))
}

fn cleared(s: Sym, e: Exp, root: i64) -> Result<i64, AlgebraError> {
    let x = e * Exp::from_integer(root);
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(AlgebraError::NonClearedExponent { sym: s, exp: e.to_string(), root })
    }
}

/// Exact value at a rational point. Parameter `p` is assigned the value of
/// `p^{1/root}`; a monomial `p^e` evaluates to `value^{root * e}`.
pub fn specialize_numeric(
    e: &RationalExpression,
    root: i64,
    params: &HashMap<Param, BigRational>,
    vars: &HashMap<Var, BigRational>,
) -> Result<BigRational, AlgebraError> {
    let mut value = |s: Sym, x: Exp| -> Result<BigRational, AlgebraError> {
        let (base, k) = match s {
            Sym::Param(p) => (params.get(&p).ok_or(AlgebraError::Unbound(s))?, cleared(s, x, root)?),
            Sym::Var(v) => (vars.get(&v).ok_or(AlgebraError::Unbound(s))?, cleared(s, x, 1)?),
        };
        base.pow_i64(k).ok_or(AlgebraError::PoleAtPoint)
    };
    eval_expr(e, &mut value)
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let n: i64 = rng.gen_range(1..=10_000);
    let d: i64 = rng.gen_range(1..=10_000);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Lower bound (generically exact) for the degree of `e` in `v`: all other
/// symbols are specialized to random rationals, the univariate fraction is
/// reduced by gcd, and the maximum degree over the trials is returned.
pub fn reduced_degree_in<R: Rng>(
    e: &RationalExpression,
    v: Var,
    trials: usize,
    rng: &mut R,
) -> Result<usize, AlgebraError> {
    if trials < 3 {
        return Err(AlgebraError::TooFewTrials(3));
    }
    let root = clearing_root(e);
    let mut best: Option<usize> = None;
    for _ in 0..trials {
        let mut point: HashMap<Sym, BigRational> = HashMap::new();
        let mut value = |s: Sym, x: Exp| -> Result<UniRat<BigRational>, AlgebraError> {
            if s == Sym::Var(v) {
                return UniRat::x().pow_i64(x.to_integer()).ok_or(AlgebraError::PoleAtPoint);
            }
            let r = match s {
                Sym::Param(_) => cleared(s, x, root)?,
                Sym::Var(_) => cleared(s, x, 1)?,
            };
            let base = point.entry(s).or_insert_with(|| random_rational(rng)).clone();
            Ok(UniRat::constant(base.pow_i64(r).ok_or(AlgebraError::PoleAtPoint)?))
        };
        match eval_expr::<UniRat<BigRational>, _>(e, &mut value) {
            Ok(r) => best = Some(best.unwrap_or(0).max(r.degree())),
            Err(AlgebraError::PoleAtPoint) => continue,
            Err(err) => return Err(err),
        }
    }
    best.ok_or(AlgebraError::DegenerateSpecialization(trials))
}

/// Same measurement over GF(2^61 - 1); used for long iterate chains.
pub fn reduced_degree_in_fp<R: Rng>(
    e: &RationalExpression,
    v: Var,
    trials: usize,
    rng: &mut R,
) -> Result<usize, AlgebraError> {
    if trials < 3 {
        return Err(AlgebraError::TooFewTrials(3));
    }
    let root = clearing_root(e);
    let mut best: Option<usize> = None;
    for _ in 0..trials {
        let mut point: HashMap<Sym, Fp> = HashMap::new();
        let mut value = |s: Sym, x: Exp| -> Result<UniRat<Fp>, AlgebraError> {
            if s == Sym::Var(v) {
                return UniRat::x().pow_i64(x.to_integer()).ok_or(AlgebraError::PoleAtPoint);
            }
            let r = match s {
                Sym::Param(_) => cleared(s, x, root)?,
                Sym::Var(_) => cleared(s, x, 1)?,
            };
            let base = *point.entry(s).or_insert_with(|| Fp::new(rng.gen_range(2..super::field::P61)));
            Ok(UniRat::constant(base.pow_i64(r).ok_or(AlgebraError::PoleAtPoint)?))
        };
        match eval_expr::<UniRat<Fp>, _>(e, &mut value) {
            Ok(r) => best = Some(best.unwrap_or(0).max(r.degree())),
            Err(AlgebraError::PoleAtPoint) => continue,
            Err(err) => return Err(err),
        }
    }
    best.ok_or(AlgebraError::DegenerateSpecialization(trials))
}

fn min_plus(p: &LaurentPoly, point: &BTreeMap<Sym, BigRational>) -> Result<Option<BigRational>, AlgebraError> {
    let mut best: Option<BigRational> = None;
    for (m, c) in p.terms() {
        if !c.is_positive() {
            return Err(AlgebraError::NotSubtractionFree);
        }
        let mut t = <BigRational as Zero>::zero();
        for (s, e) in m.entries() {
            let x = point.get(s).ok_or(AlgebraError::Unbound(*s))?;
            let e = BigRational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()));
            t += x * e;
        }
        best = Some(match best {
            Some(b) if b <= t => b,
            _ => t,
        });
    }
    Ok(best)
}

/// Min-plus image of a subtraction-free expression: products become sums,
/// quotients differences and sums minima. Positive constants map to 0.
pub fn ultradiscrete_eval(
    e: &RationalExpression,
    point: &BTreeMap<Sym, BigRational>,
) -> Result<BigRational, AlgebraError> {
    if !e.is_subtraction_free() {
        return Err(AlgebraError::NotSubtractionFree);
    }
    let n = min_plus(e.num(), point)?.ok_or(AlgebraError::NotSubtractionFree)?;
    let d = min_plus(e.den(), point)?.ok_or(AlgebraError::DivisionByZero)?;
    Ok(n - d)
}
