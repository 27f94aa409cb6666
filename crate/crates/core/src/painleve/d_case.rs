use crate::algebra::{exp_int, Monomial, RationalExpression, Var};
use crate::birational::ParamModel;
use crate::word::Generator;

use super::PainleveError;

/// The frozen `D_{N+2}^{(1)}` model and its generators `s_0, ..., s_{N+2}`
/// indexed by the `D` labels.
pub fn build_d(n: usize) -> Result<(ParamModel, Vec<(u16, Generator)>), PainleveError> {
    if n < 3 {
        return Err(PainleveError::RankTooSmall(n));
    }
    let model = ParamModel::d(n)?;
    let gens = (0..=n as u16 + 2)
        .map(|l| model.d_root(l).map(|r| (l, Generator::S(r))))
        .collect::<Option<Vec<_>>>()
        .ok_or(PainleveError::RankTooSmall(n))?;
    Ok((model, gens))
}

/// `[Π f_n]` for odd `N`, `[Π f_{2n}, Π f_{2n-1}]` for even `N`.
pub fn conserved_quantities_d(n: usize) -> Result<Vec<RationalExpression>, PainleveError> {
    if n < 3 {
        return Err(PainleveError::RankTooSmall(n));
    }
    let prod = |it: &mut dyn Iterator<Item = usize>| {
        RationalExpression::monomial(it.fold(Monomial::one(), |m, k| m.mul(&Monomial::single(Var::F(k as u16), exp_int(1)))))
    };
    Ok(if n % 2 == 1 {
        vec![prod(&mut (1..=n))]
    } else {
        vec![prod(&mut (2..=n).step_by(2)), prod(&mut (1..=n).step_by(2))]
    })
}
