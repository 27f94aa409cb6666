use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::divide::exact_divide;
use super::error::AlgebraError;
use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::symbol::{Param, Var};

/// A fraction of Laurent polynomials.
///
/// No gcd is taken. The only normalization is cosmetic: a monomial
/// denominator is folded into the numerator and monomial content of the
/// denominator is moved up. `sf` records whether the expression was built
/// without subtraction.
#[derive(Clone, Debug)]
pub struct RationalExpression {
    num: LaurentPoly,
    den: LaurentPoly,
    sf: bool,
}

impl RationalExpression {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let sf = num.all_positive() && den.all_positive();
        Ok(Self::raw(num, den, sf).normalized())
    }

    fn raw(num: LaurentPoly, den: LaurentPoly, sf: bool) -> Self {
        RationalExpression { num, den, sf }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let sf = p.all_positive();
        Self::raw(p, LaurentPoly::one(), sf)
    }

    pub fn zero() -> Self {
        Self::raw(LaurentPoly::zero(), LaurentPoly::one(), true)
    }

    pub fn one() -> Self {
        Self::raw(LaurentPoly::one(), LaurentPoly::one(), true)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn param(p: Param) -> Self {
        Self::from_poly(LaurentPoly::param(p))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_subtraction_free(&self) -> bool {
        self.sf
    }

    /// Force the flag; used when an expression is known to be built from a
    /// subtraction-free formula but came through a non-tracking route.
    pub fn with_sf(mut self, sf: bool) -> Self {
        self.sf = sf;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this expression equals, if the denominator is
    /// a unit.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let inv = self.den.unit_inverse()?;
        Some(self.num.mul(&inv))
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return self;
        }
        if let Some(inv) = self.den.unit_inverse() {
            self.num = self.num.mul(&inv);
            self.den = LaurentPoly::one();
            return self;
        }
        let content = self.den.monomial_content();
        if !content.is_one() {
            let ci = content.inv();
            let one = BigRational::one();
            self.num = self.num.mul_term(&ci, &one);
            self.den = self.den.mul_term(&ci, &one);
        }
        // keep the leading denominator coefficient positive when possible
        if let Some((_, c)) = self.den.terms().last() {
            if c.is_negative() && !self.sf {
                let m1 = -BigRational::one();
                self.num = self.num.scale(&m1);
                self.den = self.den.scale(&m1);
            }
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let sf = self.sf && other.sf;
        if self.den == other.den {
            return Self::raw(self.num.add(&other.num), self.den.clone(), sf).normalized();
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::raw(num, self.den.mul(&other.den), sf).normalized()
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.num.neg(), self.den.clone(), false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg()).with_sf(false)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::raw(
            self.num.mul(&other.num),
            self.den.mul(&other.den),
            self.sf && other.sf,
        )
        .normalized()
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::raw(self.den.clone(), self.num.clone(), self.sf).normalized())
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self::raw(base.num.pow(e), base.den.pow(e), base.sf).normalized())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let sf = self.sf && c.is_positive();
        Self::raw(self.num.scale(c), self.den.clone(), sf).normalized()
    }

    /// Multiply by a monomial with coefficient 1.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self::raw(self.num.mul_term(m, &BigRational::one()), self.den.clone(), self.sf)
    }

    /// Semantic equality by cross multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Try to turn the expression into a Laurent polynomial by exact division.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if let Some(p) = self.as_laurent() {
            return Some(p);
        }
        exact_divide(&self.num, &self.den)
    }

    /// Replace by the exact quotient when the denominator divides.
    pub fn reduce_exact(&self) -> Self {
        match self.to_laurent() {
            Some(p) => Self::raw(p, LaurentPoly::one(), self.sf),
            None => self.clone(),
        }
    }
}

pub fn expr_equals(a: &RationalExpression, b: &RationalExpression) -> bool {
    a.equals(b)
}

impl From<LaurentPoly> for RationalExpression {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl PartialEq for RationalExpression {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Zero for RationalExpression {
    fn zero() -> Self {
        RationalExpression::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RationalExpression {
    type Output = RationalExpression;
    fn add(self, rhs: Self) -> Self {
        RationalExpression::add(&self, &rhs)
    }
}
