use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::linalg::{kernel, solve, Q};
use crate::algebra::{exp_int, expr_equals, LaurentPoly, Monomial, RationalExpression, Sym, Var};
use crate::birational::{frame_maps, generator_substitution, FForm, Frame, ParamModel};
use crate::lattice::{DivisorClass, ShapeConfig};
use crate::word::Generator;

use super::{laurent_certificate, tau_of, OrbitElement, TauError};

/// `Φ_Λ(ζ)` with the data of `Λ = Σ d_n H_n - Σ μ_n^i E_n^i`.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizedPolynomial {
    #[serde(serialize_with = "as_string")]
    pub poly: LaurentPoly,
    pub degree: Vec<i64>,
    pub mu: BTreeMap<String, i64>,
}

fn as_string<S: serde::Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Rewrites `τ` monomials as `ζ` monomials through
/// `ζ_n^0 = ξ_{n+1} η_{n-1}`, `ζ_n^∞ = ξ_{n-1} η_{n+1}`.
///
/// The map from `ζ` to `τ` exponents has a kernel: each kernel direction
/// trades `ζ_n^0` for `ζ_n^∞` on a set of nodes (so `Π f_n` over that set is
/// 1 in the `τ` frame). The lift is made unique by taking the smallest
/// `ζ^∞` exponents along every such direction.
#[derive(Clone, Debug)]
pub struct ZetaLift {
    cfg: ShapeConfig,
    taus: Vec<Var>,
    matrix: Vec<Vec<i64>>,
    directions: Vec<Vec<usize>>,
}

impl ZetaLift {
    pub fn new(cfg: &ShapeConfig) -> Result<Self, TauError> {
        let nn = cfg.n();
        let taus = Frame::Tau.variables(cfg);
        let mut matrix = vec![vec![0i64; 2 * nn]; taus.len() + nn];
        for n in 1..=nn as i64 {
            let col0 = 2 * (n as usize - 1);
            for (col, z) in [(col0, crate::birational::zeta0(cfg, n)), (col0 + 1, crate::birational::zeta_inf(cfg, n))] {
                for (r, t) in taus.iter().enumerate() {
                    matrix[r][col] = z.exponent(Sym::Var(*t)).to_integer();
                }
                matrix[taus.len() + n as usize - 1][col] = 1;
            }
        }
        let mut directions = Vec::new();
        let mut covered = vec![false; nn];
        for k in kernel(&matrix) {
            // normalize to +1 on ζ^∞ entries
            let Some(p) = k.iter().position(|x| !x.is_zero()) else { continue };
            let s = if p % 2 == 1 { k[p] } else { -k[p] };
            let k: Vec<Q> = k.iter().map(|x| x / s).collect();
            let mut nodes = Vec::new();
            for n in 0..nn {
                let (a, b) = (k[2 * n], k[2 * n + 1]);
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                if a != -Q::one() || b != Q::one() || covered[n] {
                    return Err(TauError::NotZetaExpressible("unexpected ζ relation".into()));
                }
                covered[n] = true;
                nodes.push(n);
            }
            directions.push(nodes);
        }
        Ok(ZetaLift { cfg: cfg.clone(), taus, matrix, directions })
    }

    /// Node sets `S` with `Π_{n∈S} ζ_n^0 = Π_{n∈S} ζ_n^∞` in the `τ` frame.
    pub fn relations(&self) -> &[Vec<usize>] {
        &self.directions
    }

    /// The `ζ` monomial of multidegree `degree` equal to the `τ` monomial `m`.
    pub fn lift(&self, m: &Monomial, degree: &[i64]) -> Result<Monomial, TauError> {
        let fail = || TauError::NotZetaExpressible(m.to_string());
        let mut b = Vec::with_capacity(self.matrix.len());
        for t in &self.taus {
            let e = m.exponent(Sym::Var(*t));
            if !e.is_integer() || e < exp_int(0) {
                return Err(fail());
            }
            b.push(e.to_integer());
        }
        for (s, _) in m.entries() {
            if !matches!(s, Sym::Var(Var::Tau(..))) {
                return Err(fail());
            }
        }
        b.extend_from_slice(degree);
        let mut x = solve(&self.matrix, &b).ok_or_else(fail)?;
        for nodes in &self.directions {
            let t = nodes.iter().map(|&n| x[2 * n + 1]).min().unwrap_or_else(Q::zero);
            for &n in nodes {
                x[2 * n] += t;
                x[2 * n + 1] -= t;
            }
        }
        let mut pairs = Vec::new();
        for n in 0..self.cfg.n() {
            for (k, v) in [(2 * n, Var::Zeta0(n as u16 + 1)), (2 * n + 1, Var::ZetaInf(n as u16 + 1))] {
                if !x[k].is_integer() || x[k].is_negative() {
                    return Err(fail());
                }
                pairs.push((Sym::Var(v), x[k]));
            }
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

/// `Φ_Λ(ζ) = τ(Λ) Π (τ_n^i)^{μ_n^i}` from a Laurent form of `τ(Λ)`.
pub fn phi_from_laurent(
    model: &ParamModel,
    divisor: &DivisorClass,
    laurent: &LaurentPoly,
) -> Result<NormalizedPolynomial, TauError> {
    let cfg = model.cfg();
    let lift = ZetaLift::new(cfg)?;
    let mut cleared = Monomial::one();
    let mut mu = BTreeMap::new();
    for (n, i) in cfg.exceptional() {
        let m = divisor.mu(cfg, n as i64, i);
        mu.insert(format!("{n}.{i}"), m);
        cleared = cleared.mul(&crate::birational::tau(cfg, n as i64, i).pow(exp_int(m)));
    }
    let degree = divisor.degree();
    let mut terms = Vec::new();
    for (m, c) in laurent.terms() {
        let (p, v) = m.mul(&cleared).split();
        terms.push((lift.lift(&v, &degree)?.mul(&p), c.clone()));
    }
    Ok(NormalizedPolynomial { poly: LaurentPoly::from_terms(terms), degree, mu })
}

/// [`phi_from_laurent`] on the τ value of an orbit element.
pub fn phi_from_tau(model: &ParamModel, el: &OrbitElement) -> Result<NormalizedPolynomial, TauError> {
    let tv = tau_of(model, el)?;
    let (_, laurent) = laurent_certificate(&tv);
    phi_from_laurent(model, &el.divisor, &laurent.ok_or(TauError::NotLaurent)?)
}

/// `φ_Λ(f) = Φ_Λ(ζ) Π (ζ_n^∞)^{-d_n}`.
pub fn phi_to_f(np: &NormalizedPolynomial) -> RationalExpression {
    let p = np.poly.map_monomials(|m| {
        Monomial::from_pairs(m.entries().iter().filter_map(|(s, e)| match s {
            Sym::Var(Var::Zeta0(n)) => Some((Sym::Var(Var::F(*n)), *e)),
            Sym::Var(Var::ZetaInf(_)) => None,
            _ => Some((*s, *e)),
        }))
    });
    RationalExpression::from_poly(p)
}

/// `Σ_m (1/θ)^m · (exponents of A_m) = 0`, the multiplicative condition
/// `Π_m A_m^{(1/θ)^m} = 1` in additive form.
///
/// `Φ` is read as a sum of monic monomials `A_m ζ^m` in which the same
/// `ζ^m` may occur several times: a coefficient `2X + Y` contributes `X`
/// twice and `Y` once. Coefficients that are not positive integers are
/// rejected.
pub fn check_normalization(np: &NormalizedPolynomial, cfg: &ShapeConfig) -> Result<bool, TauError> {
    let mut total: BTreeMap<Sym, BigRational> = BTreeMap::new();
    for (m, c) in np.poly.terms() {
        let (a, zm) = m.split();
        if !c.is_integer() || !c.is_positive() {
            return Err(TauError::NonMonomialCoefficient(zm.to_string()));
        }
        let mut w = c.clone();
        for n in 1..=cfg.n() as u16 {
            let e0 = zm.exponent(Sym::Var(Var::Zeta0(n))).to_integer();
            let ei = zm.exponent(Sym::Var(Var::ZetaInf(n))).to_integer();
            let t0 = BigRational::from_integer(BigInt::from(cfg.theta0(n as i64)));
            let ti = BigRational::from_integer(BigInt::from(cfg.theta_inf(n as i64)));
            w *= t0.pow(-(e0 as i32)) * ti.pow(-(ei as i32));
        }
        for (s, e) in a.entries() {
            let e = BigRational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()));
            *total.entry(*s).or_insert_with(BigRational::zero) += &w * e;
        }
    }
    Ok(total.values().all(|x| x.is_zero()))
}

/// Checks `s_n^0(φ_Λ) = c (f_n+u_n)^{-d_{n-1}+μ_n^{-1}} (f_n+1/v_n)^{-d_{n+1}+μ_n^1} φ_{s_n^0.Λ}`
/// with `c = (u_n^{d_{n-1}-μ_n^{-1}} v_n^{-d_{n+1}+μ_n^1})^{ω_n}`.
pub fn check_claim_transform(model: &ParamModel, el: &OrbitElement, g: Generator) -> Result<bool, TauError> {
    let n = match g {
        Generator::S(r) if r.i == 0 => r.n as i64,
        _ => return Err(TauError::NotZeroReflection(g)),
    };
    let cfg = model.cfg();
    let moved = el.act(cfg, g)?;
    let phi = phi_to_f(&phi_from_tau(model, el)?);
    let phi_moved = phi_to_f(&phi_from_tau(model, &moved)?);
    let sub = generator_substitution(model, Frame::F, FForm::Plain, g)?;
    let lhs = sub.apply(&phi)?;

    let d = &el.divisor;
    let a = -d.h_coeff(cfg, n - 1) + d.mu(cfg, n, -1);
    let b = -d.h_coeff(cfg, n + 1) + d.mu(cfg, n, 1);
    let (u, v) = (model.u(n), model.v(n));
    let c = u.pow(exp_int(-a)).mul(&v.pow(exp_int(b))).pow(cfg.omega(n));
    let f = RationalExpression::var(Var::F(cfg.wrap(n)));
    let plus_u = f.add(&RationalExpression::monomial(u));
    let plus_v = f.add(&RationalExpression::monomial(v.inv()));
    let rhs = plus_u
        .pow(a as i32)?
        .mul(&plus_v.pow(b as i32)?)
        .mul(&phi_moved)
        .mul_monomial(&c);
    if expr_equals(&lhs, &rhs) {
        return Ok(true);
    }
    // Φ is only defined up to Π ζ^0 = Π ζ^∞ (Π f_n = 1 in the τ frame), so
    // compare the two sides there
    let to_tau = frame_maps(cfg).tau_to_f;
    Ok(expr_equals(&to_tau.apply(&lhs)?, &to_tau.apply(&rhs)?))
}
