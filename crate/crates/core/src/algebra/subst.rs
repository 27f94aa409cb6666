use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::error::AlgebraError;
use super::expr::RationalExpression;
use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::symbol::{Param, Sym, Var};

/// Simultaneous substitution of dynamical variables by rational expressions
/// and of parameters by monomials. Unbound symbols pass through.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    vars: BTreeMap<Var, RationalExpression>,
    params: BTreeMap<Param, Monomial>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind_var(&mut self, v: Var, e: RationalExpression) -> &mut Self {
        self.vars.insert(v, e);
        self
    }

    pub fn bind_param(&mut self, p: Param, m: Monomial) -> &mut Self {
        self.params.insert(p, m);
        self
    }

    pub fn with_var(mut self, v: Var, e: RationalExpression) -> Self {
        self.bind_var(v, e);
        self
    }

    pub fn with_param(mut self, p: Param, m: Monomial) -> Self {
        self.bind_param(p, m);
        self
    }

    pub fn var_binding(&self, v: Var) -> Option<&RationalExpression> {
        self.vars.get(&v)
    }

    pub fn param_binding(&self, p: Param) -> Option<&Monomial> {
        self.params.get(&p)
    }

    pub fn var_bindings(&self) -> impl Iterator<Item = (&Var, &RationalExpression)> {
        self.vars.iter()
    }

    pub fn param_bindings(&self) -> impl Iterator<Item = (&Param, &Monomial)> {
        self.params.iter()
    }

    /// Image of a parameter-only or mixed monomial under the parameter part.
    pub fn map_params(&self, m: &Monomial) -> Monomial {
        if self.params.is_empty() {
            return m.clone();
        }
        let mut out = Monomial::one();
        let mut rest = Vec::new();
        for (s, e) in m.entries() {
            match s {
                Sym::Param(p) => match self.params.get(p) {
                    Some(img) => out = out.mul(&img.pow(*e)),
                    None => rest.push((*s, *e)),
                },
                Sym::Var(_) => rest.push((*s, *e)),
            }
        }
        out.mul(&Monomial::from_pairs(rest))
    }

    /// The binding map `x -> rho(sigma(x))`, i.e. substituting `self` first
    /// and then `rho` equals substituting the result once.
    pub fn then(&self, rho: &Substitution) -> Result<Substitution, AlgebraError> {
        let mut out = Substitution::new();
        for (v, e) in &self.vars {
            out.vars.insert(*v, rho.apply(e)?);
        }
        for (v, e) in &rho.vars {
            out.vars.entry(*v).or_insert_with(|| e.clone());
        }
        for (p, m) in &self.params {
            out.params.insert(*p, rho.map_params(m));
        }
        for (p, m) in &rho.params {
            out.params.entry(*p).or_insert_with(|| m.clone());
        }
        Ok(out)
    }

    pub fn apply(&self, e: &RationalExpression) -> Result<RationalExpression, AlgebraError> {
        let n = self.apply_poly(e.num())?;
        let d = self.apply_poly(e.den())?;
        let sf = e.is_subtraction_free() && n.is_subtraction_free() && d.is_subtraction_free();
        Ok(n.div(&d)?.with_sf(sf))
    }

    /// Substitute into a Laurent polynomial.
    ///
    /// Bindings with a unit numerator or denominator contribute only
    /// monomials. For the others a common denominator
    /// `prod N_v^{-min(lo,0)} D_v^{max(hi,0)}` is used so each term becomes
    /// a polynomial product.
    pub fn apply_poly(&self, p: &LaurentPoly) -> Result<RationalExpression, AlgebraError> {
        let mut sf = true;
        // exponent ranges of bound variables
        let mut ranges: BTreeMap<Var, (i64, i64)> = BTreeMap::new();
        for (m, _) in p.terms() {
            for (s, e) in m.entries() {
                if let Sym::Var(v) = s {
                    if self.vars.contains_key(v) {
                        let k = e.to_integer();
                        let r = ranges.entry(*v).or_insert((k, k));
                        r.0 = r.0.min(k);
                        r.1 = r.1.max(k);
                    }
                }
            }
        }
        struct Bound<'a> {
            num: &'a LaurentPoly,
            den: &'a LaurentPoly,
            num_unit: bool,
            den_unit: bool,
            lo: i64,
            hi: i64,
        }
        let mut bound: BTreeMap<Var, Bound> = BTreeMap::new();
        let mut common = LaurentPoly::one();
        for (v, (lo, hi)) in &ranges {
            let b = &self.vars[v];
            sf &= b.is_subtraction_free();
            let lo = (*lo).min(0);
            let hi = (*hi).max(0);
            let num_unit = b.num().as_monomial().is_some();
            let den_unit = b.den().as_monomial().is_some();
            if b.num().is_zero() && lo < 0 {
                return Err(AlgebraError::DivisionByZero);
            }
            if !num_unit && lo < 0 {
                common = common.mul(&b.num().pow((-lo) as u32));
            }
            if !den_unit && hi > 0 {
                common = common.mul(&b.den().pow(hi as u32));
            }
            bound.insert(*v, Bound { num: b.num(), den: b.den(), num_unit, den_unit, lo, hi });
        }

        let mut cache: HashMap<(Var, bool, i64), LaurentPoly> = HashMap::new();
        let mut power = |v: Var, is_num: bool, k: i64, base: &LaurentPoly, unit: bool| -> LaurentPoly {
            if k == 0 {
                return LaurentPoly::one();
            }
            cache
                .entry((v, is_num, k))
                .or_insert_with(|| {
                    if k < 0 {
                        debug_assert!(unit);
                        base.unit_inverse().expect("unit").pow((-k) as u32)
                    } else {
                        base.pow(k as u32)
                    }
                })
                .clone()
        };

        let mut acc: Vec<(Monomial, BigRational)> = Vec::new();
        for (m, c) in p.terms() {
            if c.is_negative() {
                sf = false;
            }
            let mut mono = Monomial::one();
            let mut factors: Vec<LaurentPoly> = Vec::new();
            for (s, e) in m.entries() {
                match s {
                    Sym::Param(q) => match self.params.get(q) {
                        Some(img) => mono = mono.mul(&img.pow(*e)),
                        None => mono = mono.mul(&Monomial::single(*s, *e)),
                    },
                    Sym::Var(v) => {
                        if !bound.contains_key(v) {
                            mono = mono.mul(&Monomial::single(*s, *e));
                        }
                    }
                }
            }
            for (v, b) in &bound {
                let k = m.exponent(Sym::Var(*v)).to_integer();
                let kn = if b.num_unit { k } else { k - b.lo };
                let kd = if b.den_unit { -k } else { b.hi - k };
                for (is_num, kk, base, unit) in
                    [(true, kn, b.num, b.num_unit), (false, kd, b.den, b.den_unit)]
                {
                    let f = power(*v, is_num, kk, base, unit);
                    if let Some((fm, fc)) = f.as_monomial() {
                        if fc.is_one() {
                            mono = mono.mul(fm);
                            continue;
                        }
                    }
                    factors.push(f);
                }
            }
            if factors.is_empty() {
                acc.push((mono, c.clone()));
                continue;
            }
            factors.sort_by_key(|f| f.len());
            let mut prod = factors.pop().unwrap();
            for f in factors {
                prod = prod.mul(&f);
            }
            for (pm, pc) in prod.terms() {
                acc.push((pm.mul(&mono), pc * c));
            }
        }
        let num = LaurentPoly::from_terms(acc);
        Ok(RationalExpression::new(num, common)?.with_sf(sf))
    }
}

/// Apply a substitution to every expression of a map.
pub fn substitute_all<K: Ord + Clone>(
    exprs: &BTreeMap<K, RationalExpression>,
    s: &Substitution,
) -> Result<BTreeMap<K, RationalExpression>, AlgebraError> {
    exprs.iter().map(|(k, e)| Ok((k.clone(), s.apply(e)?))).collect()
}

pub fn substitute(
    e: &RationalExpression,
    s: &Substitution,
) -> Result<RationalExpression, AlgebraError> {
    s.apply(e)
}
