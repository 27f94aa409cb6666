//! Extended generators `π`, `ι`, `r_1` of the `A_{N-1}^{(1)}` model on the
//! `τ`, `f` and `x` frames. `r_0 = ι r_1 ι` is assembled by the caller.

use crate::algebra::{exp_frac, exp_int, LaurentPoly, Monomial, RationalExpression, Substitution, Var};
use crate::birational::{zeta0, zeta_inf, BirationalError, Frame, ModelKind, ParamModel};
use crate::word::Generator;

fn var(v: Var) -> RationalExpression {
    RationalExpression::var(v)
}

fn unit(v: Var) -> Monomial {
    Monomial::single(v, exp_int(1))
}

/// `Π_{k=1}^{N-1} u_{n+k}^{-1+k/N}`.
fn g_prefactor(model: &ParamModel, n: i64) -> Monomial {
    let nn = model.cfg().n() as i64;
    (1..nn).fold(Monomial::one(), |m, k| m.mul(&model.u(n + k).pow(exp_frac(k - nn, nn))))
}

/// `G_n` cleared to a polynomial in the `τ`'s:
/// `Σ_{j=0}^{N-1} Π_{i<=j} u_{n+i} ζ^∞_{n+i} Π_{k>j} ζ^0_{n+k}` times the prefactor.
pub fn g_tau(model: &ParamModel, n: i64) -> LaurentPoly {
    let cfg = model.cfg();
    let nn = cfg.n() as i64;
    let mut terms = Vec::new();
    for j in 0..nn {
        let mut m = g_prefactor(model, n);
        for i in 1..=j {
            m = m.mul(&model.u(n + i)).mul(&zeta_inf(cfg, n + i));
        }
        for k in (j + 1)..nn {
            m = m.mul(&zeta0(cfg, n + k));
        }
        terms.push((m, num_rational::BigRational::from_integer(1.into())));
    }
    LaurentPoly::from_terms(terms)
}

/// `g_n(f) = (1 + Σ_{j=1}^{N-1} Π_{i<=j} u_{n+i}/f_{n+i}) Π_k u_{n+k}^{-1+k/N}`.
pub fn g_f(model: &ParamModel, n: i64) -> RationalExpression {
    let cfg = model.cfg();
    let nn = cfg.n() as i64;
    let mut terms = vec![(Monomial::one(), num_rational::BigRational::from_integer(1.into()))];
    let mut m = Monomial::one();
    for j in 1..nn {
        m = m.mul(&model.u(n + j)).div(&unit(Var::F(cfg.wrap(n + j))));
        terms.push((m.clone(), num_rational::BigRational::from_integer(1.into())));
    }
    RationalExpression::from_poly(LaurentPoly::from_terms(terms)).mul_monomial(&g_prefactor(model, n))
}

/// Variable part of `π`, `ι` or `r_1` on a frame.
pub fn frame_substitution(model: &ParamModel, frame: Frame, g: Generator) -> Result<Substitution, BirationalError> {
    if model.kind() != ModelKind::AExtended {
        return Err(BirationalError::UnsupportedGenerator(g));
    }
    let cfg = model.cfg();
    let nn = cfg.n() as i64;
    let w = |n: i64| cfg.wrap(n);
    let mut s = Substitution::new();
    match (g, frame) {
        (Generator::Pi, Frame::Tau) => {
            for n in 1..=nn {
                for i in [1i16, -1] {
                    s.bind_var(Var::Tau(w(n), i), var(Var::Tau(w(n + 1), i)));
                }
            }
        }
        (Generator::Pi, Frame::F) => {
            for n in 1..=nn {
                s.bind_var(Var::F(w(n)), var(Var::F(w(n + 1))));
            }
        }
        (Generator::Pi, Frame::X) => {
            for n in 1..=nn {
                s.bind_var(Var::X(w(n)), var(Var::X(w(n + 1))));
            }
        }
        (Generator::Iota, Frame::Tau) => {
            for n in 1..=nn {
                s.bind_var(Var::Tau(w(n), 1), var(Var::Tau(w(n), -1)));
                s.bind_var(Var::Tau(w(n), -1), var(Var::Tau(w(n), 1)));
            }
        }
        (Generator::Iota, Frame::F) | (Generator::Iota, Frame::X) => {
            for n in 1..=nn {
                let v = if frame == Frame::F { Var::F(w(n)) } else { Var::X(w(n)) };
                s.bind_var(v, RationalExpression::monomial(unit(v).inv()));
            }
        }
        (Generator::R1, Frame::Tau) => {
            for n in 1..=nn {
                let mut den = Monomial::one();
                for j in 1..=nn {
                    den = den.mul(&unit(Var::Tau(w(j), 1)));
                    let d = (j - n).rem_euclid(nn);
                    if d != 0 && d != 1 && d != nn - 1 {
                        den = den.mul(&unit(Var::Tau(w(j), -1)));
                    }
                }
                let img = RationalExpression::from_poly(g_tau(model, n)).mul_monomial(&den.inv());
                s.bind_var(Var::Tau(w(n), 1), img);
            }
        }
        (Generator::R1, Frame::F) => {
            for n in 1..=nn {
                let img = g_f(model, n + 1)
                    .div(&g_f(model, n - 1).mul_monomial(&unit(Var::F(w(n + 1)))))?;
                s.bind_var(Var::F(w(n)), img);
            }
        }
        _ => return Err(BirationalError::UnsupportedFrame(g, frame)),
    }
    Ok(s)
}
