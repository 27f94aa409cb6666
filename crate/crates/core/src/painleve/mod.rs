//! Affine specializations: the extended `A_{N-1}^{(1)}` group and its
//! q-Painlevé map, the frozen `D_{N+2}^{(1)}` shape, translations and
//! degree growth.

mod d_case;
mod growth;
mod indexing;
pub mod extended;

pub use d_case::{build_d, conserved_quantities_d};
pub use growth::{
    degree_growth_table, iterate_rational, lattice_degree_bound, quadratic_with_period, second_differences, step_root,
    DegreeTable,
};
pub use indexing::{beta0_check, divisor_of, nu_kappa_of, NuKappa};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{AlgebraError, RationalExpression, Var};
use crate::birational::{apply_word_with, BirationalError, FForm, Frame, ParamModel, ParamState};
use crate::lattice::LatticeError;
use crate::word::{Generator, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PainleveError {
    #[error(transparent)]
    Birational(#[from] BirationalError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("rank {0} is too small (need N >= 3)")]
    RankTooSmall(usize),
    #[error("pairings are inconsistent, class is not in the orbit: {0}")]
    NonIntegralSolution(String),
    #[error("need at least {0} iterations")]
    TooFewIterations(usize),
    #[error("model is not of the extended A type")]
    NotExtended,
}

/// `T̃ = r_1 ι`, the map whose `f` images are the q-Painlevé equation.
pub fn qpa_word() -> WeylWord {
    WeylWord(vec![Generator::R1, Generator::Iota])
}

/// One step of the q-Painlevé equation of type `A_{N-1}^{(1)}`:
/// `f̄_n = f_{n+1} g_{n-1}(f) / g_{n+1}(f)` with `b_1 -> q b_1`, `b_0 -> b_0/q`.
pub fn qpa_step(model: &ParamModel) -> Result<(ParamState, BTreeMap<Var, RationalExpression>), PainleveError> {
    if model.kind() != crate::birational::ModelKind::AExtended {
        return Err(PainleveError::NotExtended);
    }
    Ok(apply_word_with(model, Frame::F, FForm::Plain, &qpa_word())?)
}

/// `T_n = π s_{n+N-2} ... s_{n+1} s_n` for `n = 1..N`, and `T̃ = r_1 ι`.
pub fn translations_a(n: usize) -> Result<(Vec<WeylWord>, WeylWord), PainleveError> {
    if n < 3 {
        return Err(PainleveError::RankTooSmall(n));
    }
    let w = |k: usize| ((k - 1) % n + 1) as u16;
    let ts = (1..=n)
        .map(|m| {
            let mut letters = vec![Generator::Pi];
            letters.extend((m..=m + n - 2).rev().map(|k| Generator::s(w(k), 0)));
            WeylWord(letters)
        })
        .collect();
    Ok((ts, qpa_word()))
}

/// Inverse word; `π^{-1} = π^{N-1}` and every other generator is an
/// involution.
pub fn inverse_word(w: &WeylWord, n: usize) -> WeylWord {
    let mut out = Vec::new();
    for g in w.letters().iter().rev() {
        match g {
            Generator::Pi => out.extend(std::iter::repeat_n(Generator::Pi, n - 1)),
            g => out.push(*g),
        }
    }
    WeylWord(out)
}

#[cfg(test)]
mod tests;
