use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use rand::Rng;
use serde::Serialize;

use crate::algebra::eval::{clearing_root, eval_expr};
use crate::algebra::field::{Field, Fp, P61};
use crate::algebra::{AlgebraError, Exp, Param, RationalExpression, Sym, UniRat, Var};
use crate::birational::{act_params, apply_word_with, FForm, Frame, ParamModel, ParamState};
use crate::lattice::{apply_word_lattice, CurveClass, DivisorClass};
use crate::word::WeylWord;

use super::PainleveError;

/// Measured degrees of the iterates of one `f` variable in another, with the
/// lattice prediction alongside.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeTable {
    pub degrees: Vec<usize>,
    pub bound: Vec<i64>,
    pub second_differences: Vec<i64>,
}

pub fn second_differences(xs: &[i64]) -> Vec<i64> {
    xs.windows(3).map(|w| w[2] - 2 * w[1] + w[0]).collect()
}

/// `<w^{-n}(H_i), h_j>`: the degree of the pull-back `w^n(f_i)` in `f_j`
/// as predicted by the Néron-Severi action.
pub fn lattice_degree_bound(
    model: &ParamModel,
    word: &WeylWord,
    n: usize,
    i: i64,
    j: i64,
) -> Result<i64, PainleveError> {
    let cfg = model.cfg();
    let inv = super::inverse_word(word, cfg.n()).pow(n);
    let h = apply_word_lattice(cfg, &inv, &DivisorClass::h(cfg, i))?;
    let mut hj = CurveClass::zero(cfg);
    hj.add_h(cfg, j, 1);
    Ok(h.pair(&hj))
}

fn random_fp<R: Rng>(rng: &mut R) -> Fp {
    Fp::new(rng.gen_range(2..P61))
}

// p^e after k steps: the image monomial of p raised to e, evaluated at the
// chosen roots
fn param_value<F: Field>(
    state: &ParamState,
    roots: &HashMap<Param, F>,
    root: i64,
    p: Param,
    e: Exp,
) -> Result<F, AlgebraError> {
    let m = state.image(p).pow(e);
    let mut out = F::one();
    for (s, x) in m.entries() {
        let Sym::Param(q) = s else { unreachable!("parameter images only hold parameters") };
        let k = *x * Exp::from_integer(root);
        if !k.is_integer() {
            return Err(AlgebraError::NonClearedExponent { sym: *s, exp: x.to_string(), root });
        }
        let base = roots.get(q).ok_or(AlgebraError::Unbound(*s))?;
        out = out.mul(&base.pow_i64(k.to_integer()).ok_or(AlgebraError::PoleAtPoint)?);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn run_once<R: Rng>(
    model: &ParamModel,
    images: &BTreeMap<Var, RationalExpression>,
    step_params: &ParamState,
    word: &WeylWord,
    n_iters: usize,
    i: u16,
    j: u16,
    rng: &mut R,
) -> Result<Vec<usize>, PainleveError> {
    let root = step_root(images);
    let roots: HashMap<Param, Fp> = model.params().into_iter().map(|p| (p, random_fp(rng))).collect();
    let mut current: BTreeMap<Var, UniRat<Fp>> = images
        .keys()
        .map(|v| (*v, if *v == Var::F(j) { UniRat::x() } else { UniRat::constant(random_fp(rng)) }))
        .collect();
    let mut state = ParamState::new(model.clone());
    let mut out = vec![current[&Var::F(i)].degree()];
    for _ in 0..n_iters {
        let mut value = |s: Sym, e: Exp| -> Result<UniRat<Fp>, AlgebraError> {
            match s {
                Sym::Param(p) => Ok(UniRat::constant(param_value(&state, &roots, root, p, e)?)),
                Sym::Var(v) => {
                    let x = current.get(&v).ok_or(AlgebraError::Unbound(s))?;
                    x.pow_i64(e.to_integer()).ok_or(AlgebraError::PoleAtPoint)
                }
            }
        };
        let mut next = BTreeMap::new();
        for (v, e) in images {
            next.insert(*v, eval_expr::<UniRat<Fp>, _>(e, &mut value)?);
        }
        current = next;
        // σ^{k+1}(p) = σ^k(σ(p))
        let mut s = state.clone();
        for g in word.letters().iter().rev() {
            s = act_params(&s, *g)?;
        }
        debug_assert_eq!(s.images.len(), step_params.images.len());
        state = s;
        out.push(current[&Var::F(i)].degree());
    }
    Ok(out)
}

/// The exact orbit `x, w(x), w^2(x), ...` of a rational point. `roots`
/// holds the value of `p^{1/r}` for every parameter `p`, where `r` clears
/// all fractional exponents of the step (see [`step_root`]).
pub fn iterate_rational(
    model: &ParamModel,
    word: &WeylWord,
    n_iters: usize,
    roots: &HashMap<Param, BigRational>,
    start: &BTreeMap<Var, BigRational>,
) -> Result<Vec<BTreeMap<Var, BigRational>>, PainleveError> {
    let (_, images) = apply_word_with(model, Frame::F, FForm::Plain, word)?;
    let root = step_root(&images);
    let mut state = ParamState::new(model.clone());
    let mut out = vec![start.clone()];
    for _ in 0..n_iters {
        let current = out.last().cloned().unwrap_or_default();
        let mut value = |s: Sym, e: Exp| -> Result<BigRational, AlgebraError> {
            match s {
                Sym::Param(p) => param_value(&state, roots, root, p, e),
                Sym::Var(v) => {
                    let x = current.get(&v).ok_or(AlgebraError::Unbound(s))?;
                    x.pow_i64(e.to_integer()).ok_or(AlgebraError::PoleAtPoint)
                }
            }
        };
        let mut next = BTreeMap::new();
        for (v, e) in &images {
            next.insert(*v, eval_expr::<BigRational, _>(e, &mut value)?);
        }
        for g in word.letters().iter().rev() {
            state = act_params(&state, *g)?;
        }
        out.push(next);
    }
    Ok(out)
}

/// Common root clearing every fractional parameter exponent in the images
/// of one step.
pub fn step_root(images: &BTreeMap<Var, RationalExpression>) -> i64 {
    images.values().fold(1i64, |a, e| num_integer::Integer::lcm(&a, &clearing_root(e)))
}

/// Degrees in `f_j` of `w^k(f_i)` for `k = 0..=n_iters`, measured on
/// univariate specializations over GF(2^61-1) (maximum over `trials` random
/// points), with the lattice values `<w^{-k}(H_i), h_j>`.
pub fn degree_growth_table<R: Rng>(
    model: &ParamModel,
    word: &WeylWord,
    n_iters: usize,
    i: u16,
    j: u16,
    trials: usize,
    rng: &mut R,
) -> Result<DegreeTable, PainleveError> {
    if n_iters < 2 {
        return Err(PainleveError::TooFewIterations(2));
    }
    let (step_params, images) = apply_word_with(model, Frame::F, FForm::Plain, word)?;
    let mut degrees = vec![0usize; n_iters + 1];
    let mut done = 0;
    for _ in 0..trials.max(1) * 4 {
        match run_once(model, &images, &step_params, word, n_iters, i, j, rng) {
            Ok(d) => {
                degrees.iter_mut().zip(d).for_each(|(a, b)| *a = (*a).max(b));
                done += 1;
                if done == trials.max(1) {
                    break;
                }
            }
            Err(PainleveError::Algebra(AlgebraError::PoleAtPoint)) => continue,
            Err(e) => return Err(e),
        }
    }
    if done == 0 {
        return Err(AlgebraError::DegenerateSpecialization(trials).into());
    }
    let bound = (0..=n_iters)
        .map(|k| lattice_degree_bound(model, word, k, i as i64, j as i64))
        .collect::<Result<Vec<_>, _>>()?;
    let as_i64: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
    Ok(DegreeTable { second_differences: second_differences(&as_i64), degrees, bound })
}

/// True when the second differences repeat with period `p` and the
/// subsequence `x_0, x_p, x_{2p}, ...` has constant second differences,
/// i.e. the growth is quadratic up to a `p`-periodic correction.
pub fn quadratic_with_period(xs: &[i64], p: usize) -> bool {
    let d2 = second_differences(xs);
    let periodic = d2.iter().zip(d2.iter().skip(p)).all(|(a, b)| a == b);
    let sampled: Vec<i64> = xs.iter().step_by(p).copied().collect();
    let s2 = second_differences(&sampled);
    periodic && !s2.is_empty() && s2.windows(2).all(|w| w[0] == w[1])
}
