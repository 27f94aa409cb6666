use num_traits::One;

use crate::algebra::{Exp, Monomial, RationalExpression, Substitution, Var};
use crate::lattice::RootIndex;
use crate::painleve::extended;
use crate::word::Generator;

use super::{tau, xi, eta, BirationalError, Frame, ParamModel};

/// Which of the two equivalent `f` formulas to use for `s_n^0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FForm {
    /// Coefficient `(a_n^0)^{l/(k+l)}`, valid for every shape.
    Plain,
    /// The `ω_n` form; needs `k_{n-1} k_{n+1} = l_{n-1} l_{n+1}`.
    Omega,
}

fn mono(m: Monomial) -> RationalExpression {
    RationalExpression::monomial(m)
}

fn var(v: Var) -> RationalExpression {
    RationalExpression::var(v)
}

/// `c_1 A + c_2 B` with monomial `A, B` and monomial coefficients.
fn binomial(c1: Monomial, a: Monomial, c2: Monomial, b: Monomial) -> RationalExpression {
    mono(c1.mul(&a)).add(&mono(c2.mul(&b)))
}

/// The substitution `x -> g(x)` on one frame, including the parameter part.
/// Unbound variables are fixed.
pub fn generator_substitution(
    model: &ParamModel,
    frame: Frame,
    form: FForm,
    g: Generator,
) -> Result<Substitution, BirationalError> {
    if !model.supports(g) {
        if let Generator::S(r) = g {
            model.cfg().check_root(r)?;
        }
        return Err(BirationalError::UnsupportedGenerator(g));
    }
    let mut sub = match g {
        Generator::S(r) if r.i == 0 => zero_reflection(model, frame, form, r.n as i64)?,
        Generator::S(r) => inner_reflection(model, frame, r),
        Generator::R0 => {
            let iota = generator_substitution(model, frame, form, Generator::Iota)?;
            let r1 = generator_substitution(model, frame, form, Generator::R1)?;
            return Ok(iota.then(&r1)?.then(&iota)?);
        }
        _ => extended::frame_substitution(model, frame, g)?,
    };
    for (p, m) in model.param_images(g)? {
        sub.bind_param(p, m);
    }
    Ok(sub)
}

fn zero_reflection(model: &ParamModel, frame: Frame, form: FForm, n: i64) -> Result<Substitution, BirationalError> {
    let cfg = model.cfg();
    let un = cfg.wrap(n);
    if (frame != Frame::F || form == FForm::Omega) && !cfg.assumption_holds(n) {
        return Err(BirationalError::AssumptionViolated(un));
    }
    let (u, v) = (model.u(n), model.v(n));
    let w = cfg.omega(n);
    let one = Exp::one();
    let mut s = Substitution::new();
    match frame {
        Frame::F => {
            let fp = Var::F(cfg.wrap(n - 1));
            let fnx = Var::F(cfg.wrap(n + 1));
            let f = var(Var::F(un));
            match form {
                FForm::Plain => {
                    let kp = cfg.k(n - 1) as i64;
                    let lp = cfg.l(n - 1) as i64;
                    let kn = cfg.k(n + 1) as i64;
                    let ln = cfg.l(n + 1) as i64;
                    let plus_u = f.add(&mono(u.clone()));
                    let plus_v = f.add(&mono(v.inv()));
                    let cp = model.a0_pow(n, Exp::new(lp, kp + lp));
                    let cn = model.a0_pow(n, Exp::new(-kn, kn + ln));
                    let ip = var(fp).mul_monomial(&cp).mul(&plus_v).div(&plus_u)?;
                    let inx = var(fnx).mul_monomial(&cn).mul(&plus_u).div(&plus_v)?;
                    s.bind_var(fp, ip);
                    s.bind_var(fnx, inx);
                }
                FForm::Omega => {
                    let top = f.mul_monomial(&v.pow(w)).add(&mono(v.pow(w - one)));
                    let bot = f.mul_monomial(&u.pow(-w)).add(&mono(u.pow(one - w)));
                    s.bind_var(fp, var(fp).mul(&top).div(&bot)?);
                    s.bind_var(fnx, var(fnx).mul(&bot).div(&top)?);
                }
            }
        }
        Frame::X => {
            let xp = Monomial::single(Var::X(cfg.wrap(n - 1)), one);
            let xn = Monomial::single(Var::X(cfg.wrap(n + 1)), one);
            let top = binomial(v.pow(w), xn.clone(), v.pow(w - one), xp.clone());
            let bot = binomial(u.pow(-w), xn, u.pow(one - w), xp);
            s.bind_var(Var::X(un), var(Var::X(un)).mul(&top).div(&bot)?);
        }
        Frame::Tau => {
            let z0 = xi(cfg, n + 1).mul(&eta(cfg, n - 1));
            let zi = xi(cfg, n - 1).mul(&eta(cfg, n + 1));
            let top = binomial(v.pow(w), z0.clone(), v.pow(w - one), zi.clone());
            let bot = binomial(u.pow(-w), z0, u.pow(one - w), zi);
            s.bind_var(Var::Tau(un, 1), top.mul_monomial(&tau(cfg, n, -1).inv()));
            s.bind_var(Var::Tau(un, -1), bot.mul_monomial(&tau(cfg, n, 1).inv()));
        }
        Frame::Zeta => return Err(BirationalError::UnsupportedFrame(Generator::s(un, 0), frame)),
    }
    Ok(s)
}

// s_n^i for i != 0 permutes two adjacent τ's and fixes f and x
fn inner_reflection(model: &ParamModel, frame: Frame, r: RootIndex) -> Substitution {
    let mut s = Substitution::new();
    if frame == Frame::Tau {
        let cfg = model.cfg();
        let next = if r.i > 0 { r.i + 1 } else { r.i - 1 };
        let (a, b) = (Var::Tau(r.n, r.i), Var::Tau(r.n, next));
        debug_assert!(cfg.eidx(r.n as i64, next).is_some());
        s.bind_var(a, var(b));
        s.bind_var(b, var(a));
    }
    s
}
