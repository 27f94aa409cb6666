//! Birational realizations of the Weyl group on parameters and on the
//! `f`, `x` and `τ` frames, with their min-plus counterparts.

mod images;
mod model;

pub use images::{generator_substitution, FForm};
pub use model::{act_params, ModelKind, ParamModel, ParamState};

use std::collections::BTreeMap;

use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::{
    ultradiscrete_eval, AlgebraError, Exp, LaurentPoly, Monomial, RationalExpression, Substitution, Sym, Var,
};
use crate::lattice::{LatticeError, ShapeConfig};
use crate::word::{Generator, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BirationalError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("k_(n-1) k_(n+1) = l_(n-1) l_(n+1) fails at n = {0}")]
    AssumptionViolated(u16),
    #[error("generator {0} is not available for this model")]
    UnsupportedGenerator(Generator),
    #[error("generator {0} has no action on the {1:?} frame")]
    UnsupportedFrame(Generator, Frame),
}

/// Dynamical variables a generator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frame {
    F,
    X,
    Tau,
    Zeta,
}

impl Frame {
    /// Variables of the frame for a shape. In a frozen shape the frozen
    /// node's `τ_N^{±1}` are constants and are left out.
    pub fn variables(&self, cfg: &ShapeConfig) -> Vec<Var> {
        let nn = cfg.n() as u16;
        match self {
            Frame::F => (1..=nn).map(Var::F).collect(),
            Frame::X => (1..=nn).map(Var::X).collect(),
            Frame::Tau => cfg
                .exceptional()
                .into_iter()
                .filter(|(n, _)| cfg.frozen() != Some(*n))
                .map(|(n, i)| Var::Tau(n, i))
                .collect(),
            Frame::Zeta => (1..=nn).flat_map(|n| [Var::Zeta0(n), Var::ZetaInf(n)]).collect(),
        }
    }
}

/// `τ_n^i` as a monomial; frozen variables are 1.
pub fn tau(cfg: &ShapeConfig, n: i64, i: i16) -> Monomial {
    let n = cfg.wrap(n);
    if cfg.frozen() == Some(n) || cfg.eidx(n as i64, i).is_none() {
        return Monomial::one();
    }
    Monomial::single(Var::Tau(n, i), Exp::from_integer(1))
}

/// `ξ_n = Π_i τ_n^i`.
pub fn xi(cfg: &ShapeConfig, n: i64) -> Monomial {
    (1..=cfg.k(n) as i16).fold(Monomial::one(), |m, i| m.mul(&tau(cfg, n, i)))
}

/// `η_n = Π_j τ_n^{-j}`.
pub fn eta(cfg: &ShapeConfig, n: i64) -> Monomial {
    (1..=cfg.l(n) as i16).fold(Monomial::one(), |m, j| m.mul(&tau(cfg, n, -j)))
}

/// `ζ_n^0 = ξ_{n+1} η_{n-1}`.
pub fn zeta0(cfg: &ShapeConfig, n: i64) -> Monomial {
    xi(cfg, n + 1).mul(&eta(cfg, n - 1))
}

/// `ζ_n^∞ = ξ_{n-1} η_{n+1}`.
pub fn zeta_inf(cfg: &ShapeConfig, n: i64) -> Monomial {
    xi(cfg, n - 1).mul(&eta(cfg, n + 1))
}

/// Substitutions relating the frames.
#[derive(Clone, Debug)]
pub struct FrameMaps {
    pub tau_to_f: Substitution,
    pub tau_to_x: Substitution,
    pub x_to_f: Substitution,
    pub tau_to_zeta: Substitution,
    pub zeta_to_f: Substitution,
}

pub fn frame_maps(cfg: &ShapeConfig) -> FrameMaps {
    let mut tau_to_f = Substitution::new();
    let mut tau_to_x = Substitution::new();
    let mut x_to_f = Substitution::new();
    let mut tau_to_zeta = Substitution::new();
    let mut zeta_to_f = Substitution::new();
    let m = RationalExpression::monomial;
    let x = |n: i64| Var::X(cfg.wrap(n));
    for n in 1..=cfg.n() as i64 {
        let un = cfg.wrap(n);
        tau_to_f.bind_var(Var::F(un), m(zeta0(cfg, n).div(&zeta_inf(cfg, n))));
        tau_to_x.bind_var(Var::X(un), m(xi(cfg, n).div(&eta(cfg, n))));
        let f = Monomial::single(x(n + 1), Exp::from_integer(1)).div(&Monomial::single(x(n - 1), Exp::from_integer(1)));
        x_to_f.bind_var(Var::F(un), m(f));
        tau_to_zeta.bind_var(Var::Zeta0(un), m(zeta0(cfg, n)));
        tau_to_zeta.bind_var(Var::ZetaInf(un), m(zeta_inf(cfg, n)));
        let z = Monomial::single(Var::Zeta0(un), Exp::from_integer(1))
            .div(&Monomial::single(Var::ZetaInf(un), Exp::from_integer(1)));
        zeta_to_f.bind_var(Var::F(un), m(z));
    }
    FrameMaps { tau_to_f, tau_to_x, x_to_f, tau_to_zeta, zeta_to_f }
}

/// The identity images of a frame.
pub fn identity_images(cfg: &ShapeConfig, frame: Frame) -> BTreeMap<Var, RationalExpression> {
    frame.variables(cfg).into_iter().map(|v| (v, RationalExpression::var(v))).collect()
}

/// Right action of one generator on images already carrying a word `w`:
/// the generator's formula with `w`'s images and `w`'s parameters inserted.
/// In the `τ` frame every result is brought back to Laurent form when the
/// division is exact.
pub fn act_frame(
    state: &ParamState,
    frame: Frame,
    form: FForm,
    g: Generator,
    exprs: &BTreeMap<Var, RationalExpression>,
) -> Result<BTreeMap<Var, RationalExpression>, BirationalError> {
    let sigma = generator_substitution(&state.model, frame, form, g)?;
    let mut rho = Substitution::new();
    for (v, e) in exprs {
        rho.bind_var(*v, e.clone());
    }
    for (p, m) in &state.images {
        rho.bind_param(*p, m.clone());
    }
    let mut out = BTreeMap::new();
    for (v, e) in exprs {
        let img = match sigma.var_binding(*v) {
            Some(s) => {
                let r = rho.apply(s)?;
                if frame == Frame::Tau {
                    r.reduce_exact()
                } else {
                    r
                }
            }
            None => e.clone(),
        };
        out.insert(*v, img);
    }
    Ok(out)
}

pub fn act_f(
    state: &ParamState,
    g: Generator,
    exprs: &BTreeMap<Var, RationalExpression>,
) -> Result<BTreeMap<Var, RationalExpression>, BirationalError> {
    act_frame(state, Frame::F, FForm::Plain, g, exprs)
}

pub fn act_f_omega(
    state: &ParamState,
    g: Generator,
    exprs: &BTreeMap<Var, RationalExpression>,
) -> Result<BTreeMap<Var, RationalExpression>, BirationalError> {
    act_frame(state, Frame::F, FForm::Omega, g, exprs)
}

pub fn act_x(
    state: &ParamState,
    g: Generator,
    exprs: &BTreeMap<Var, RationalExpression>,
) -> Result<BTreeMap<Var, RationalExpression>, BirationalError> {
    act_frame(state, Frame::X, FForm::Omega, g, exprs)
}

pub fn act_tau(
    state: &ParamState,
    g: Generator,
    exprs: &BTreeMap<Var, RationalExpression>,
) -> Result<BTreeMap<Var, RationalExpression>, BirationalError> {
    act_frame(state, Frame::Tau, FForm::Omega, g, exprs)
}

/// Images of the frame variables under `w = g_1 ... g_m`, i.e. the
/// composite `φ_{g_1} ∘ ... ∘ φ_{g_m}`, together with the parameter state
/// `a · w`.
pub fn apply_word(
    model: &ParamModel,
    frame: Frame,
    word: &WeylWord,
) -> Result<(ParamState, BTreeMap<Var, RationalExpression>), BirationalError> {
    apply_word_with(model, frame, FForm::Plain, word)
}

pub fn apply_word_with(
    model: &ParamModel,
    frame: Frame,
    form: FForm,
    word: &WeylWord,
) -> Result<(ParamState, BTreeMap<Var, RationalExpression>), BirationalError> {
    let mut state = ParamState::new(model.clone());
    let mut exprs = identity_images(model.cfg(), frame);
    for g in word.letters() {
        exprs = act_frame(&state, frame, form, *g, &exprs)?;
        state = act_params(&state, *g)?;
    }
    Ok((state, exprs))
}

/// Image of an arbitrary expression under `w`: substitute the word's frame
/// images and parameter images.
pub fn transport(
    state: &ParamState,
    exprs: &BTreeMap<Var, RationalExpression>,
    e: &RationalExpression,
) -> Result<RationalExpression, BirationalError> {
    let mut rho = Substitution::new();
    for (v, x) in exprs {
        rho.bind_var(*v, x.clone());
    }
    for (p, m) in &state.images {
        rho.bind_param(*p, m.clone());
    }
    Ok(rho.apply(e)?)
}

/// One generator as a piecewise-linear map on a point of the min-plus
/// frame: each variable goes to the tropicalization of its image and each
/// parameter to the tropicalization of its monomial image.
pub fn ultradiscrete_step(
    model: &ParamModel,
    frame: Frame,
    form: FForm,
    g: Generator,
    point: &BTreeMap<Sym, BigRational>,
) -> Result<BTreeMap<Sym, BigRational>, BirationalError> {
    let sigma = generator_substitution(model, frame, form, g)?;
    let mut out = point.clone();
    for (v, e) in sigma.var_bindings() {
        out.insert(Sym::Var(*v), ultradiscrete_eval(e, point)?);
    }
    for (p, m) in sigma.param_bindings() {
        let e = RationalExpression::from_poly(LaurentPoly::monomial(m.clone()));
        out.insert(Sym::Param(*p), ultradiscrete_eval(&e, point)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
