use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::algebra::eval::eval_expr;
use crate::algebra::{AlgebraError, Param, Sym, Var};
use crate::birational::ParamModel;
use crate::painleve::nu_kappa_of;
use crate::tau::{tau_of, OrbitElement};

use super::{core_partition, elliptic_gamma, pochhammer2, universal_character, with_precision, CharError, Partition, Real};

/// Which closed form the τ-functions are specialized to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// `a_i = q`; Schur functions of `N`-cores.
    Schur,
    /// `N = 2g + 2`, `a_{odd} = c`, `a_{even} = q^2/c`; universal characters.
    Uc,
}

type SigmaKey = (Vec<i64>, i64, Mode);

/// Numerical data of the specialization: `q`, `b_0`, `c`, the truncation
/// exponent `t` (factors within `2^{-t}` of 1 are dropped) and the working
/// precision in bits.
#[derive(Debug)]
pub struct QContext {
    pub q: Real,
    pub b0: Real,
    pub c: Real,
    pub truncation: usize,
    pub precision: usize,
    cache: Mutex<HashMap<SigmaKey, Real>>,
    // F only sees N, κ and, for universal characters, the shift of c
    f_cache: Mutex<HashMap<(Mode, usize, i64, i64), Real>>,
}

impl QContext {
    /// `truncation` defaults to the smallest `t` with `2^{-t} < tolerance/100`.
    pub fn new(q: (i64, i64), b0: (i64, i64), c: (i64, i64), tolerance: f64, precision: usize) -> Result<Self, CharError> {
        let truncation = (100.0 / tolerance).log2().ceil().max(8.0) as usize;
        Self::with_truncation(q, b0, c, truncation, precision)
    }

    pub fn with_truncation(
        q: (i64, i64),
        b0: (i64, i64),
        c: (i64, i64),
        truncation: usize,
        precision: usize,
    ) -> Result<Self, CharError> {
        if q.0.abs() >= q.1.abs() || q.0 == 0 {
            return Err(CharError::NonConvergent(format!("q = {}/{}", q.0, q.1)));
        }
        if b0.0 == 0 || c.0 == 0 {
            return Err(CharError::Evaluation("b_0 and c must be nonzero".into()));
        }
        with_precision(precision, || {
            Ok(QContext {
                q: Real::from_ratio(q.0, q.1),
                b0: Real::from_ratio(b0.0, b0.1),
                c: Real::from_ratio(c.0, c.1),
                truncation,
                precision,
                cache: Mutex::new(HashMap::new()),
                f_cache: Mutex::new(HashMap::new()),
            })
        })
    }

    fn t_of(&self, kappa: i64) -> Real {
        self.q.powi(kappa).div(&self.b0)
    }

    fn cached_f(
        &self,
        key: (Mode, usize, i64, i64),
        compute: impl FnOnce() -> Result<Real, CharError>,
    ) -> Result<Real, CharError> {
        if let Some(v) = self.f_cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = compute()?;
        self.f_cache.lock().expect("cache lock").insert(key, v.clone());
        Ok(v)
    }
}

impl Clone for QContext {
    fn clone(&self) -> Self {
        QContext {
            q: self.q.clone(),
            b0: self.b0.clone(),
            c: self.c.clone(),
            truncation: self.truncation,
            precision: self.precision,
            cache: Mutex::new(HashMap::new()),
            f_cache: Mutex::new(HashMap::new()),
        }
    }
}

/// `F(t)`, `H_ν` and `x_1..x_K` of the Schur specialization.
#[derive(Clone, Debug)]
pub struct SchurPrefactors {
    pub f: Real,
    pub h: Real,
    pub x: Vec<Real>,
    pub lambda: Partition,
}

/// `F̃(c_ν, t)`, `H̃_ν`, `x`, `y` and the two partitions of the universal
/// character specialization.
#[derive(Clone, Debug)]
pub struct UcPrefactors {
    pub f: Real,
    pub h: Real,
    pub c_nu: Real,
    pub x: Vec<Real>,
    pub y: Vec<Real>,
    pub lambda: Partition,
    pub mu: Partition,
}

fn r(x: i64) -> Real {
    Real::from_i64(x)
}

fn needed(l: &Partition, m: &Partition) -> usize {
    l.parts().first().copied().unwrap_or(0) + m.parts().first().copied().unwrap_or(0) + l.len() + m.len() + 1
}

/// `F(t) = (q^{2N}t^{2N}; q^{2N}, q^{2N}) / (q^2t^2; q^2, q^2) Γ(-q^{N-1}t^{N-1}; q^{N-1}, q^{N-1})`.
fn f_schur(ctx: &QContext, n: usize, t: &Real) -> Result<Real, CharError> {
    let (q, tr) = (&ctx.q, ctx.truncation);
    let n = n as i64;
    let q2n = q.powi(2 * n);
    let num = pochhammer2(&q2n.mul(&t.powi(2 * n)), &q2n, &q2n, tr)?;
    let q2 = q.powi(2);
    let den = pochhammer2(&q2.mul(&t.powi(2)), &q2, &q2, tr)?;
    let qn1 = q.powi(n - 1);
    let g = elliptic_gamma(&qn1.mul(&t.powi(n - 1)).neg(), &qn1, &qn1, tr)?;
    Ok(num.div(&den).mul(&g))
}

pub fn schur_prefactors(ctx: &QContext, n: usize, nu: &[i64], kappa: i64) -> Result<SchurPrefactors, CharError> {
    with_precision(ctx.precision, || {
        let q = &ctx.q;
        let t = ctx.t_of(kappa);
        let lambda = core_partition(nu);
        let sq = q.sqrt();
        let mut h = r(1);
        for (i, j, hk) in lambda.hooks() {
            let hk = hk as i64;
            h = h.mul(&q.powi(hk).sub(&q.powi(-hk))).mul(&sq.powi(i as i64 - j as i64));
        }
        let k = needed(&lambda, &Partition::empty());
        let x = (1..=k as i64)
            .map(|m| t.powi(m).add(&t.powi(-m)).div(&r(m).mul(&q.powi(m).sub(&q.powi(-m)))))
            .collect();
        let f = ctx.cached_f((Mode::Schur, n, 0, kappa), || f_schur(ctx, n, &t))?;
        Ok(SchurPrefactors { f, h, x, lambda })
    })
}

fn f_uc(ctx: &QContext, g: i64, c: &Real, t: &Real) -> Result<Real, CharError> {
    let (q, tr) = (&ctx.q, ctx.truncation);
    let q2 = q.powi(2);
    let q3t2 = q.powi(3).mul(&t.powi(2));
    let q4 = q.powi(4);
    let big = q.powi(4 * g + 4);
    let mut num = pochhammer2(&c.mul(&q3t2).neg(), &q2, &q4, tr)?;
    num = num.mul(&pochhammer2(&q3t2.div(c).neg(), &q2, &q4, tr)?);
    num = num.mul(&pochhammer2(&big.mul(&t.powi(4 * g + 4)), &big, &big, tr)?);
    let den = pochhammer2(&q4.mul(&t.powi(4)), &q4, &q4, tr)?;
    let s = q.powi(3).sqrt().mul(t);
    let sc = c.sqrt();
    let mut gam = elliptic_gamma(&sc.mul(&s).neg(), q, &q2, tr)?;
    gam = gam.mul(&elliptic_gamma(&s.div(&sc).neg(), q, &q2, tr)?);
    let q2g = q.powi(2 * g);
    gam = gam.mul(&elliptic_gamma(&q2g.mul(&t.powi(2 * g)).neg(), &q2g, &q2g, tr)?);
    Ok(num.div(&den).mul(&gam))
}

pub fn uc_prefactors(ctx: &QContext, g: usize, nu: &[i64], kappa: i64) -> Result<UcPrefactors, CharError> {
    let n = 2 * g + 2;
    if g == 0 || nu.len() != n {
        return Err(CharError::BadShape(nu.len()));
    }
    with_precision(ctx.precision, || {
        let q = &ctx.q;
        let t = ctx.t_of(kappa);
        let odd: Vec<i64> = nu.iter().step_by(2).copied().collect();
        let even: Vec<i64> = nu.iter().skip(1).step_by(2).copied().collect();
        let shift = even.iter().sum::<i64>() - odd.iter().sum::<i64>();
        let c_nu = ctx.c.mul(&q.powi(2 * shift));
        let lo = core_partition(&odd);
        let le = core_partition(&even);
        let mut h = c_nu.pow_ratio(le.size() as i64 - lo.size() as i64, 2);
        for (_, _, hk) in lo.hooks() {
            let hk = 2 * hk as i64;
            h = h.mul(&q.powi(hk).sub(&q.powi(-hk)));
        }
        for (_, _, hk) in le.hooks() {
            let hk = 2 * hk as i64;
            h = h.mul(&q.powi(-hk).sub(&q.powi(hk)));
        }
        let mu = le.conjugate();
        let k = needed(&lo, &mu) as i64;
        let mut x = Vec::new();
        let mut y = Vec::new();
        let mc = c_nu.neg();
        for m in 1..=k {
            let a = t.powi(2 * m).add(&t.powi(-2 * m));
            let b = q.powi(m).add(&q.powi(-m));
            let d = r(m).mul(&q.powi(2 * m).sub(&q.powi(-2 * m)));
            x.push(a.sub(&mc.powi(m).mul(&b)).div(&d));
            y.push(a.sub(&mc.powi(-m).mul(&b)).div(&d.neg()));
        }
        let f = ctx.cached_f((Mode::Uc, n, shift, kappa), || f_uc(ctx, g as i64, &c_nu, &t))?;
        Ok(UcPrefactors { f, h, c_nu, x, y, lambda: lo, mu })
    })
}

/// `σ_ν^κ` from the closed form of `mode`.
pub fn sigma(ctx: &QContext, nu: &[i64], kappa: i64, mode: Mode) -> Result<Real, CharError> {
    // σ only depends on ν modulo the all-ones vector
    let last = nu.last().copied().unwrap_or(0);
    let key: Vec<i64> = nu.iter().map(|v| v - last).collect();
    if let Some(v) = ctx.cache.lock().expect("cache lock").get(&(key.clone(), kappa, mode)) {
        return Ok(v.clone());
    }
    let v = with_precision(ctx.precision, || -> Result<Real, CharError> {
        match mode {
            Mode::Schur => {
                let p = schur_prefactors(ctx, nu.len(), &key, kappa)?;
                Ok(p.f.mul(&p.h).mul(&universal_character(&p.lambda, &Partition::empty(), &p.x, &[])))
            }
            Mode::Uc => {
                if nu.len() % 2 == 1 || nu.len() < 4 {
                    return Err(CharError::BadShape(nu.len()));
                }
                let p = uc_prefactors(ctx, (nu.len() - 2) / 2, &key, kappa)?;
                Ok(p.f.mul(&p.h).mul(&universal_character(&p.lambda, &p.mu, &p.x, &p.y)))
            }
        }
    })?;
    ctx.cache.lock().expect("cache lock").insert((key, kappa, mode), v.clone());
    Ok(v)
}

/// `a_i` of the specialization, indices modulo `N`.
fn a_value(ctx: &QContext, mode: Mode, n: usize, i: i64) -> Real {
    match mode {
        Mode::Schur => ctx.q.clone(),
        Mode::Uc => {
            if (i - 1).rem_euclid(n as i64) % 2 == 0 {
                ctx.c.clone()
            } else {
                ctx.q.powi(2).div(&ctx.c)
            }
        }
    }
}

/// Relative residual `|L - R| / max(|L|, |R|)` of
/// `q^{Nν_i-|ν|+i-1} Π_j (a_{i+j-1}/q)^{j/N} (t^N - t^{-N}) σ_ν^κ σ_{ν+e_i}^κ
///  = t σ_ν^{κ-1} σ_{ν+e_i}^{κ+1} - t^{-1} σ_ν^{κ+1} σ_{ν+e_i}^{κ-1}`.
pub fn verify_bilinear(ctx: &QContext, nu: &[i64], i: usize, kappa: i64, mode: Mode) -> Result<Real, CharError> {
    let n = nu.len();
    if i == 0 || i > n {
        return Err(CharError::Evaluation(format!("index {i} out of 1..={n}")));
    }
    let mut shifted = nu.to_vec();
    shifted[i - 1] += 1;
    let s = |v: &[i64], k: i64| sigma(ctx, v, k, mode);
    let (a0, a1) = (s(nu, kappa)?, s(&shifted, kappa)?);
    let (bm, bp) = (s(nu, kappa - 1)?, s(&shifted, kappa + 1)?);
    let (cp, cm) = (s(nu, kappa + 1)?, s(&shifted, kappa - 1)?);
    with_precision(ctx.precision, || {
        let q = &ctx.q;
        let t = ctx.t_of(kappa);
        let nn = n as i64;
        let size: i64 = nu.iter().sum();
        let mut pre = q.powi(nn * nu[i - 1] - size + i as i64 - 1);
        for j in 1..=nn {
            let a = a_value(ctx, mode, n, i as i64 + j - 1).div(q);
            pre = pre.mul(&a.pow_ratio(j, nn));
        }
        let lhs = pre.mul(&t.powi(nn).sub(&t.powi(-nn))).mul(&a0).mul(&a1);
        let rhs = t.mul(&bm).mul(&bp).sub(&cp.mul(&cm).div(&t));
        let scale = lhs.abs().max(&rhs.abs());
        if scale.is_zero_value() {
            return Err(CharError::DegenerateScale);
        }
        Ok(lhs.sub(&rhs).abs().div(&scale))
    })
}

/// Evaluates `τ(Λ)` of the extended `A_{N-1}^{(1)}` model at `a_i = q`,
/// `τ_i^1 = F(1/b_0)`, `τ_i^{-1} = F(b_1)` and compares it with the
/// closed form `σ_ν^κ`. Returns the relative difference.
pub fn verify_specialization_against_tau(ctx: &QContext, model: &ParamModel, el: &OrbitElement) -> Result<Real, CharError> {
    let cfg = model.cfg();
    let n = cfg.n();
    let err = |e: String| CharError::Evaluation(e);
    let nk = nu_kappa_of(cfg, &el.divisor).map_err(|e| err(e.to_string()))?;
    let closed = sigma(ctx, &nk.nu, nk.kappa, Mode::Schur)?;
    let tv = tau_of(model, el).map_err(|e| err(e.to_string()))?;
    with_precision(ctx.precision, || {
        let q = ctx.q.clone();
        let b0 = ctx.b0.clone();
        let b1 = q.div(&b0);
        let tau_plus = f_schur(ctx, n, &r(1).div(&b0))?;
        let tau_minus = f_schur(ctx, n, &b1)?;
        let mut value = |s: Sym, e: crate::algebra::Exp| -> Result<Real, AlgebraError> {
            let base = match s {
                Sym::Param(Param::A(_)) | Sym::Param(Param::Q) => q.clone(),
                Sym::Param(Param::B(0)) => b0.clone(),
                Sym::Param(Param::B(1)) => b1.clone(),
                Sym::Var(Var::Tau(_, 1)) => tau_plus.clone(),
                Sym::Var(Var::Tau(_, -1)) => tau_minus.clone(),
                _ => return Err(AlgebraError::Unbound(s)),
            };
            Ok(base.pow_ratio(*e.numer(), *e.denom()))
        };
        let v: Real = eval_expr(&tv.expr, &mut value).map_err(|e| err(e.to_string()))?;
        let scale = v.abs().max(&closed.abs());
        if scale.is_zero_value() {
            return Err(CharError::DegenerateScale);
        }
        Ok(v.sub(&closed).abs().div(&scale))
    })
}
