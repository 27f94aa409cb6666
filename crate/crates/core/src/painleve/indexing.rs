use serde::{Deserialize, Serialize};

use crate::lattice::{apply_word_lattice, coroot, gamma1_check, CurveClass, DivisorClass, LatticeAction, RootIndex, ShapeConfig};
use crate::word::{Generator, WeylWord};

use super::{inverse_word, translations_a, PainleveError};

/// `(ν, κ)` with `ν` taken modulo the all-ones vector and stored with
/// `ν_N = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NuKappa {
    pub nu: Vec<i64>,
    pub kappa: i64,
}

impl NuKappa {
    pub fn new(mut nu: Vec<i64>, kappa: i64) -> Self {
        if let Some(&last) = nu.last() {
            nu.iter_mut().for_each(|x| *x -= last);
        }
        NuKappa { nu, kappa }
    }
}

/// `β̌_0 = ι(β̌_1)` with `β̌_1 = Σ (h_n - e_n^1)`.
pub fn beta0_check(cfg: &ShapeConfig) -> Result<CurveClass, PainleveError> {
    let b1 = (1..=cfg.n() as i64).fold(CurveClass::zero(cfg), |c, n| c.add_scaled(&gamma1_check(cfg, n), 1));
    Ok(b1.act(cfg, Generator::Iota)?)
}

/// Solves `ν_i - ν_{i+1} = <Λ, α̌_i>` (`i < N`), `κ = <Λ, β̌_0>`, and checks
/// `ν_N - ν_1 + 1 = <Λ, α̌_N>`.
pub fn nu_kappa_of(cfg: &ShapeConfig, d: &DivisorClass) -> Result<NuKappa, PainleveError> {
    let nn = cfg.n();
    let pair = |n: usize| -> Result<i64, PainleveError> {
        Ok(d.pair(&coroot(cfg, RootIndex { n: n as u16, i: 0 })?))
    };
    let mut nu = vec![0i64; nn];
    for i in (1..nn).rev() {
        nu[i - 1] = nu[i] + pair(i)?;
    }
    if nu[nn - 1] - nu[0] + 1 != pair(nn)? {
        return Err(PainleveError::NonIntegralSolution(d.to_string_with(cfg, true)));
    }
    Ok(NuKappa::new(nu, d.pair(&beta0_check(cfg)?)))
}

/// `T_1^{ν_1} ... T_N^{ν_N} T̃^κ . E_N^1`.
pub fn divisor_of(cfg: &ShapeConfig, nk: &NuKappa) -> Result<DivisorClass, PainleveError> {
    let nn = cfg.n();
    let (ts, tt) = translations_a(nn)?;
    let power = |w: &WeylWord, k: i64| {
        if k >= 0 {
            w.pow(k as usize)
        } else {
            inverse_word(w, nn).pow((-k) as usize)
        }
    };
    let mut word = WeylWord::empty();
    for (t, &k) in ts.iter().zip(&nk.nu) {
        word = word.concat(&power(t, k));
    }
    word = word.concat(&power(&tt, nk.kappa));
    Ok(apply_word_lattice(cfg, &word, &DivisorClass::e(cfg, nn as i64, 1))?)
}
