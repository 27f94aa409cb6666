use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{exp_int, Exp, Monomial};
use super::symbol::{Param, Sym, Var};

/// Sparse Laurent polynomial over the rationals.
///
/// Dynamical variables carry integer exponents, parameters carry rational
/// exponents; both live in one exponent map, so a coefficient in the sense of
/// "polynomial in the variables over the parameter ring" is recovered by
/// [`LaurentPoly::coefficients`]. Terms are kept sorted by monomial with no
/// zero coefficients, so structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigRational)>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::single(v, exp_int(1)))
    }

    pub fn param(p: Param) -> Self {
        Self::monomial(Monomial::single(p, exp_int(1)))
    }

    pub fn param_pow(p: Param, e: Exp) -> Self {
        Self::monomial(Monomial::single(p, e))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigRational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Single-term polynomial (a unit of the Laurent ring).
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // merge of two sorted lists
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        // multiplication by a monomial preserves distinctness but not order
        let mut terms: Vec<_> = self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c;
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        if let Some((m, c)) = self.as_monomial() {
            return LaurentPoly::term(m.pow(exp_int(k as i64)), num_traits::pow(c.clone(), k as usize));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Inverse of a unit (single term); `None` otherwise.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        let (m, c) = self.as_monomial()?;
        Some(LaurentPoly::term(m.inv(), c.recip()))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some((m, _)) => m.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |acc, (m, _)| acc.meet(m))
    }

    pub fn symbols(&self) -> Vec<Sym> {
        let mut s: Vec<Sym> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.entries().iter().map(|(s, _)| *s))
            .collect();
        s.sort();
        s.dedup();
        s
    }

    pub fn vars(&self) -> Vec<Var> {
        self.symbols().into_iter().filter_map(|s| s.as_var()).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        let s = Sym::Var(v);
        self.terms.iter().any(|(m, _)| !m.exponent(s).is_zero())
    }

    /// Group terms by their dynamical monomial; the values are the
    /// parameter-only coefficients.
    pub fn coefficients(&self) -> Vec<(Monomial, LaurentPoly)> {
        let mut acc: HashMap<Monomial, Vec<(Monomial, BigRational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let (p, v) = m.split();
            acc.entry(v).or_default().push((p, c.clone()));
        }
        let mut out: Vec<_> = acc
            .into_iter()
            .map(|(v, ts)| (v, LaurentPoly::from_terms(ts)))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// True when every coefficient is positive; a syntactic proxy for
    /// subtraction-freeness of polynomials.
    pub fn all_positive(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_positive())
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Maximum and minimum exponent of `s` over the terms.
    pub fn exponent_range(&self, s: Sym) -> Option<(Exp, Exp)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exponent(s));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Degree in `v` as a Laurent polynomial (max exponent, may be negative).
    pub fn degree_in(&self, v: Var) -> Option<i64> {
        self.exponent_range(Sym::Var(v)).map(|(_, hi)| hi.to_integer())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::exp_frac;

    fn f(n: u16) -> LaurentPoly {
        LaurentPoly::var(Var::F(n))
    }

    #[test]
    fn monomial_product_with_inverse() {
        let t = LaurentPoly::var(Var::Tau(1, 1));
        let ti = LaurentPoly::var(Var::Tau(1, -1));
        let p = t.mul(&ti);
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].1, int(1));
    }

    #[test]
    fn additive_identity() {
        let p = f(1).add(&f(2).scale(&int(3)));
        assert_eq!(p.add(&LaurentPoly::zero()), p);
    }

    #[test]
    fn hand_expansion_of_a_two_factor_product() {
        // (f + u)(f + 1/v) with u = a^{1/2}, v = a^{1/2}
        let u = LaurentPoly::param_pow(Param::Root(1, 0), exp_frac(1, 2));
        let vinv = LaurentPoly::param_pow(Param::Root(1, 0), exp_frac(-1, 2));
        let p = f(1).add(&u).mul(&f(1).add(&vinv));
        // f^2 + (u + 1/v) f + u/v -> u/v = 1 collapses, u and 1/v distinct
        assert_eq!(p.len(), 4);
        let u2 = LaurentPoly::param(Param::Root(2, 0));
        let v2 = LaurentPoly::param_pow(Param::Root(3, 0), exp_int(-1));
        let p2 = f(1).add(&u2).mul(&f(1).add(&v2));
        assert_eq!(p2.len(), 4);
        let coeffs = p2.coefficients();
        assert_eq!(coeffs.len(), 3);
    }

    #[test]
    fn subtraction_cancels() {
        let p = f(1).add(&f(2));
        assert!(p.sub(&p).is_zero());
    }
}
