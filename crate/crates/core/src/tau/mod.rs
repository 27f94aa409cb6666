//! τ-functions on the orbit of the exceptional classes: word application,
//! Laurent certificates and the normalized defining polynomials `Φ_Λ(ζ)`.

mod orbit;
mod phi;

pub use orbit::{enumerate_orbit, enumerate_orbit_with_tau, locate, OrbitElement, OrbitEntry};
pub use phi::{
    check_claim_transform, check_normalization, phi_from_laurent, phi_from_tau, phi_to_f, NormalizedPolynomial,
    ZetaLift,
};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, LaurentPoly, RationalExpression, Sym, Var};
use crate::birational::{apply_word, BirationalError, Frame, ParamModel};
use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TauError {
    #[error(transparent)]
    Birational(#[from] BirationalError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("τ value is not a Laurent polynomial")]
    NotLaurent,
    #[error("not expressible in ζ monomials: {0}")]
    NotZetaExpressible(String),
    #[error("coefficient of {0} is not a monomial")]
    NonMonomialCoefficient(String),
    #[error("{0} is not a reflection s_n^0")]
    NotZeroReflection(crate::word::Generator),
}

/// `τ(Λ)` together with the orbit element it was computed for.
#[derive(Clone, Debug)]
pub struct TauValue {
    pub expr: RationalExpression,
    pub element: OrbitElement,
}

/// `τ(w.E_n^i) = w.τ_n^i`, by applying the witness word in the `τ` frame.
pub fn tau_of(model: &ParamModel, el: &OrbitElement) -> Result<TauValue, TauError> {
    let (n, i) = el.base;
    let expr = if model.cfg().frozen() == Some(n) && el.witness.is_empty() {
        RationalExpression::one()
    } else {
        let (_, images) = apply_word(model, Frame::Tau, &el.witness)?;
        match images.get(&Var::Tau(n, i)) {
            Some(e) => e.clone(),
            // a frozen seed is never moved by the retained generators
            None => RationalExpression::one(),
        }
    };
    Ok(TauValue { expr, element: el.clone() })
}

/// Exact division of the cleared denominator; `None` means the value is
/// not Laurent.
pub fn laurent_certificate(tv: &TauValue) -> (bool, Option<LaurentPoly>) {
    match tv.expr.to_laurent() {
        Some(p) => (true, Some(p)),
        None => (false, None),
    }
}

/// The checks of the τ/Φ correspondence for one orbit element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub laurent: bool,
    pub zeta_expressible: bool,
    pub degree_matches: bool,
    pub multiplicities_match: bool,
    pub normalized: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.laurent && self.zeta_expressible && self.degree_matches && self.multiplicities_match && self.normalized
    }
}

/// Runs every check on a τ value. The multiplicity check compares the
/// lowest exponent of each `τ_n^i` in `τ(Λ)` with `-μ_n^i`.
pub fn certify(model: &ParamModel, el: &OrbitElement, tau: &RationalExpression) -> Certificate {
    let mut c = Certificate::default();
    let Some(laurent) = tau.to_laurent() else { return c };
    c.laurent = true;
    let cfg = model.cfg();
    c.multiplicities_match = Frame::Tau.variables(cfg).into_iter().all(|v| {
        let Var::Tau(n, i) = v else { return false };
        let lo = laurent.exponent_range(Sym::Var(v)).map(|r| r.0).unwrap_or_default();
        lo == crate::algebra::exp_int(-el.divisor.mu(cfg, n as i64, i))
    });
    let Ok(np) = phi_from_laurent(model, &el.divisor, &laurent) else { return c };
    c.zeta_expressible = true;
    c.degree_matches = np.poly.terms().iter().all(|(m, _)| {
        (1..=cfg.n() as u16).all(|n| {
            let d = m.exponent(Sym::Var(Var::Zeta0(n))) + m.exponent(Sym::Var(Var::ZetaInf(n)));
            d == crate::algebra::exp_int(np.degree[n as usize - 1])
        })
    }) && np.degree == el.divisor.degree();
    c.normalized = check_normalization(&np, cfg).unwrap_or(false);
    c
}

#[cfg(test)]
mod tests;
