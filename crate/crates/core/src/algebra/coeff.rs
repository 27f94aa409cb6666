use std::fmt;

use num_rational::BigRational;

use super::monomial::Monomial;
use super::poly::LaurentPoly;

/// `c * prod a^e` over parameters only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffMonomial {
    pub coefficient: BigRational,
    pub exponents: Monomial,
}

impl CoeffMonomial {
    pub fn new(coefficient: BigRational, exponents: Monomial) -> Self {
        debug_assert!(!exponents.has_vars());
        CoeffMonomial { coefficient, exponents }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::term(self.exponents.clone(), self.coefficient.clone())
    }
}

/// Element of the coefficient ring: a finite sum of parameter monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffElement(LaurentPoly);

impl CoeffElement {
    /// `None` if `p` involves dynamical variables.
    pub fn from_poly(p: LaurentPoly) -> Option<Self> {
        if p.terms().iter().any(|(m, _)| m.has_vars()) {
            None
        } else {
            Some(CoeffElement(p))
        }
    }

    pub fn terms(&self) -> Vec<CoeffMonomial> {
        self.0
            .terms()
            .iter()
            .map(|(m, c)| CoeffMonomial::new(c.clone(), m.clone()))
            .collect()
    }

    pub fn as_monomial(&self) -> Option<CoeffMonomial> {
        self.0
            .as_monomial()
            .map(|(m, c)| CoeffMonomial::new(c.clone(), m.clone()))
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }
}

impl LaurentPoly {
    /// Coefficients over the parameter ring, keyed by dynamical monomial.
    pub fn coeff_elements(&self) -> Vec<(Monomial, CoeffElement)> {
        self.coefficients()
            .into_iter()
            .map(|(m, p)| (m, CoeffElement(p)))
            .collect()
    }
}

impl fmt::Display for CoeffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
