use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::RationalExpression;
use crate::birational::{generator_substitution, FForm, Frame, ParamModel};
use crate::lattice::{apply_word_lattice, DivisorClass, LatticeAction, LatticeError, ShapeConfig};
use crate::word::{Generator, WeylWord};

use super::TauError;

/// A class `w.E_n^i` of the orbit with the word that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitElement {
    pub divisor: DivisorClass,
    pub witness: WeylWord,
    pub base: (u16, i16),
}

impl OrbitElement {
    pub fn seed(cfg: &ShapeConfig, n: u16, i: i16) -> Self {
        OrbitElement { divisor: DivisorClass::e(cfg, n as i64, i), witness: WeylWord::empty(), base: (n, i) }
    }

    pub fn from_word(cfg: &ShapeConfig, witness: WeylWord, base: (u16, i16)) -> Result<Self, LatticeError> {
        let e = DivisorClass::e(cfg, base.0 as i64, base.1);
        let divisor = apply_word_lattice(cfg, &witness, &e)?;
        Ok(OrbitElement { divisor, witness, base })
    }

    /// `g.Λ` with witness `g w`.
    pub fn act(&self, cfg: &ShapeConfig, g: Generator) -> Result<Self, LatticeError> {
        Ok(OrbitElement { divisor: self.divisor.act(cfg, g)?, witness: self.witness.prepend(g), base: self.base })
    }
}

/// The orbit element with class `divisor` and a shortest witness, if one of
/// length at most `max_len` exists.
pub fn locate(cfg: &ShapeConfig, divisor: &DivisorClass, max_len: usize) -> Result<Option<OrbitElement>, LatticeError> {
    Ok(enumerate_orbit(cfg, max_len)?.into_iter().find(|e| &e.divisor == divisor))
}

fn seeds(cfg: &ShapeConfig) -> Vec<OrbitElement> {
    cfg.exceptional().into_iter().map(|(n, i)| OrbitElement::seed(cfg, n, i)).collect()
}

/// Breadth-first enumeration of the classes reachable from the seeds
/// `E_n^i` by words of length at most `max_len`, keeping the first
/// (shortest) witness found.
pub fn enumerate_orbit(cfg: &ShapeConfig, max_len: usize) -> Result<Vec<OrbitElement>, LatticeError> {
    let gens: Vec<Generator> = cfg.roots().into_iter().map(Generator::S).collect();
    let mut seen: HashSet<DivisorClass> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for s in seeds(cfg) {
        if seen.insert(s.divisor.clone()) {
            frontier.push(out.len());
            out.push(s);
        }
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &k in &frontier {
            for g in &gens {
                let el = out[k].act(cfg, *g)?;
                if seen.insert(el.divisor.clone()) {
                    next.push(out.len());
                    out.push(el);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// An orbit element with its τ value.
#[derive(Clone, Debug)]
pub struct OrbitEntry {
    pub element: OrbitElement,
    pub tau: RationalExpression,
}

/// [`enumerate_orbit`] carrying τ values along: `τ(g.Λ) = g.τ(Λ)` is
/// obtained by substituting the images of `g` into the stored value and
/// dividing out exactly.
pub fn enumerate_orbit_with_tau(model: &ParamModel, max_len: usize) -> Result<Vec<OrbitEntry>, TauError> {
    let cfg = model.cfg();
    let gens: Vec<Generator> = cfg.roots().into_iter().map(Generator::S).collect();
    let subs = gens
        .iter()
        .map(|g| generator_substitution(model, Frame::Tau, FForm::Omega, *g))
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen: HashSet<DivisorClass> = HashSet::new();
    let mut out: Vec<OrbitEntry> = Vec::new();
    let mut frontier = Vec::new();
    for s in seeds(cfg) {
        if seen.insert(s.divisor.clone()) {
            let (n, i) = s.base;
            let tau = if cfg.frozen() == Some(n) {
                RationalExpression::one()
            } else {
                RationalExpression::var(crate::algebra::Var::Tau(n, i))
            };
            frontier.push(out.len());
            out.push(OrbitEntry { element: s, tau });
        }
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &k in &frontier {
            for (g, sub) in gens.iter().zip(&subs) {
                let el = out[k].element.act(cfg, *g)?;
                if seen.insert(el.divisor.clone()) {
                    let tau = sub.apply(&out[k].tau)?.reduce_exact();
                    next.push(out.len());
                    out.push(OrbitEntry { element: el, tau });
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}
