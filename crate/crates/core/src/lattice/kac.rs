use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::linalg::kernel;

use super::{coroot_unchecked, root_unchecked, CurveClass, DivisorClass, LatticeError, RootIndex, ShapeConfig};

/// Integer combination of simple roots; the matching coroot is the same
/// combination of simple coroots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RootVector(pub BTreeMap<RootIndex, i64>);

impl RootVector {
    pub fn simple(r: RootIndex) -> Self {
        RootVector(BTreeMap::from([(r, 1)]))
    }

    pub fn add(&self, o: &RootVector) -> RootVector {
        let mut m = self.0.clone();
        for (r, k) in &o.0 {
            *m.entry(*r).or_insert(0) += k;
        }
        m.retain(|_, k| *k != 0);
        RootVector(m)
    }

    pub fn scale(&self, k: i64) -> RootVector {
        let mut m: BTreeMap<_, _> = self.0.iter().map(|(r, c)| (*r, c * k)).collect();
        m.retain(|_, c| *c != 0);
        RootVector(m)
    }

    pub fn divisor(&self, cfg: &ShapeConfig) -> Result<DivisorClass, LatticeError> {
        let mut d = DivisorClass::zero(cfg);
        for (r, k) in &self.0 {
            cfg.check_root(*r)?;
            d = d.add_scaled(&root_unchecked(cfg, *r), *k);
        }
        Ok(d)
    }

    pub fn curve(&self, cfg: &ShapeConfig) -> Result<CurveClass, LatticeError> {
        let mut c = CurveClass::zero(cfg);
        for (r, k) in &self.0 {
            cfg.check_root(*r)?;
            c = c.add_scaled(&coroot_unchecked(cfg, *r), *k);
        }
        Ok(c)
    }
}

/// `C_ab = -<alpha_a, alpha_b^vee>` over [`ShapeConfig::roots`].
pub fn cartan_matrix(cfg: &ShapeConfig) -> Vec<Vec<i64>> {
    let roots = cfg.roots();
    roots
        .iter()
        .map(|a| {
            let ra = root_unchecked(cfg, *a);
            roots.iter().map(|b| -ra.pair(&coroot_unchecked(cfg, *b))).collect()
        })
        .collect()
}

/// Null root and its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullPair {
    pub delta: DivisorClass,
    pub delta_check: CurveClass,
    pub coefficients: RootVector,
}

/// The null root of an affine diagram: the primitive positive integer
/// vector spanning the kernel of the Cartan matrix. For `A_{N-1}^{(1)}` this
/// is `(-K/2, -k/2)`; for the frozen D shape it is the `D_{N+2}^{(1)}` null
/// root, which differs from `-K/2`.
pub fn null_pair(cfg: &ShapeConfig) -> Result<NullPair, LatticeError> {
    let c = cartan_matrix(cfg);
    let ker = kernel(&c);
    if ker.len() != 1 {
        return Err(LatticeError::NotAffine(format!(
            "Cartan kernel has dimension {}",
            ker.len()
        )));
    }
    let v = &ker[0];
    let den = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<i64> = v.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    for x in ints.iter_mut() {
        *x /= g;
    }
    if ints.iter().all(|&x| x < 0) {
        for x in ints.iter_mut() {
            *x = -*x;
        }
    }
    if !ints.iter().all(|&x| x > 0) {
        return Err(LatticeError::NotAffine("kernel vector is not positive".into()));
    }
    let coefficients = RootVector(cfg.roots().into_iter().zip(ints).collect());
    let delta = coefficients.divisor(cfg)?;
    let delta_check = coefficients.curve(cfg)?;
    // the null pair must also be orthogonal to every (co)root
    for r in cfg.roots() {
        if delta.pair(&coroot_unchecked(cfg, r)) != 0 || root_unchecked(cfg, r).pair(&delta_check) != 0 {
            return Err(LatticeError::NotAffine("null vector not orthogonal".into()));
        }
    }
    if delta.pair(&delta_check) != 0 {
        return Err(LatticeError::NotAffine("<delta, delta^vee> != 0".into()));
    }
    Ok(NullPair { delta, delta_check, coefficients })
}

fn half(x: i64) -> Result<i64, LatticeError> {
    if x % 2 == 0 {
        Ok(x / 2)
    } else {
        Err(LatticeError::HalfIntegerResult)
    }
}

impl NullPair {
    /// `t_alpha(L) = L - <L, d^v> a + (<L, a^v> - 1/2 <a, a^v> <L, d^v>) d`.
    pub fn translate(&self, a: &DivisorClass, ac: &CurveClass, v: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        let ld = v.pair(&self.delta_check);
        let coef = v.pair(ac) - half(a.pair(ac) * ld)?;
        Ok(v.add_scaled(a, -ld).add_scaled(&self.delta, coef))
    }

    pub fn translate_curve(&self, a: &DivisorClass, ac: &CurveClass, v: &CurveClass) -> Result<CurveClass, LatticeError> {
        let dl = self.delta.pair(v);
        let coef = a.pair(v) - half(a.pair(ac) * dl)?;
        Ok(v.add_scaled(ac, -dl).add_scaled(&self.delta_check, coef))
    }
}

pub fn kac_translate(cfg: &ShapeConfig, alpha: &RootVector, v: &DivisorClass) -> Result<DivisorClass, LatticeError> {
    let np = null_pair(cfg)?;
    np.translate(&alpha.divisor(cfg)?, &alpha.curve(cfg)?, v)
}

pub fn kac_translate_curve(cfg: &ShapeConfig, alpha: &RootVector, v: &CurveClass) -> Result<CurveClass, LatticeError> {
    let np = null_pair(cfg)?;
    np.translate_curve(&alpha.divisor(cfg)?, &alpha.curve(cfg)?, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::invariant_classes;

    #[test]
    fn a_null_pair_is_half_anticanonical() {
        let c = ShapeConfig::a(4).unwrap();
        let np = null_pair(&c).unwrap();
        let inv = invariant_classes(&c);
        assert_eq!(np.delta, inv.delta);
        assert_eq!(np.delta_check, inv.delta_check);
    }

    #[test]
    fn d_null_root_coefficients() {
        let c = ShapeConfig::d(4).unwrap();
        let np = null_pair(&c).unwrap();
        // chain nodes carry 2, the four leaves carry 1
        for (r, k) in &np.coefficients.0 {
            assert_eq!(*k, if r.i == 0 { 2 } else { 1 });
        }
        let inv = invariant_classes(&c);
        assert_ne!(np.delta, inv.delta);
    }

    #[test]
    fn generic_shape_is_not_affine() {
        let c = ShapeConfig::new(vec![2, 1, 1], vec![1, 2, 1]).unwrap();
        assert!(matches!(null_pair(&c), Err(LatticeError::NotAffine(_))));
    }

    #[test]
    fn translation_fixes_delta_and_zero_is_identity() {
        let c = ShapeConfig::a(3).unwrap();
        let np = null_pair(&c).unwrap();
        let a = RootVector::simple(RootIndex::new(1, 0));
        assert_eq!(kac_translate(&c, &a, &np.delta).unwrap(), np.delta);
        let h = DivisorClass::h(&c, 1);
        assert_eq!(kac_translate(&c, &RootVector::default(), &h).unwrap(), h);
    }
}
