//! The Néron–Severi bilattice: divisor classes over `{H_n, E_n^i}`, curve
//! classes over `{h_n, e_n^i}`, roots, reflections and Kac translations.

mod class;
mod kac;
mod shape;

pub use class::{Curve, CurveClass, Divisor, DivisorClass, LatticeClass};
pub use kac::{cartan_matrix, kac_translate, kac_translate_curve, null_pair, NullPair, RootVector};
pub use shape::{RootIndex, ShapeConfig};

use thiserror::Error;

use crate::word::{Generator, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("root index {0} out of range")]
    IndexOutOfRange(RootIndex),
    #[error("classes belong to different shapes")]
    ShapeMismatch,
    #[error("shape is not affine: {0}")]
    NotAffine(String),
    #[error("translation produced a non-integral coefficient")]
    HalfIntegerResult,
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("generator {0} needs the shape k = l = (1,...,1)")]
    NotExtended(Generator),
}

/// `alpha_n^i` as a divisor class.
pub fn root(cfg: &ShapeConfig, r: RootIndex) -> Result<DivisorClass, LatticeError> {
    cfg.check_root(r)?;
    Ok(root_unchecked(cfg, r))
}

/// `alpha_n^i` as a curve class.
pub fn coroot(cfg: &ShapeConfig, r: RootIndex) -> Result<CurveClass, LatticeError> {
    cfg.check_root(r)?;
    Ok(coroot_unchecked(cfg, r))
}

pub(crate) fn root_unchecked(cfg: &ShapeConfig, r: RootIndex) -> DivisorClass {
    let n = r.n as i64;
    let mut c = DivisorClass::zero(cfg);
    if r.i == 0 {
        c.add_h(cfg, n, 1);
        c.add_e(cfg, n, 1, -1);
        c.add_e(cfg, n, -1, -1);
    } else {
        let next = if r.i > 0 { r.i + 1 } else { r.i - 1 };
        c.add_e(cfg, n, r.i, 1);
        c.add_e(cfg, n, next, -1);
    }
    c
}

pub(crate) fn coroot_unchecked(cfg: &ShapeConfig, r: RootIndex) -> CurveClass {
    let n = r.n as i64;
    let mut c = CurveClass::zero(cfg);
    if r.i == 0 {
        c.add_h(cfg, n - 1, 1);
        c.add_h(cfg, n + 1, 1);
        c.add_e(cfg, n, 1, -1);
        c.add_e(cfg, n, -1, -1);
    } else {
        let next = if r.i > 0 { r.i + 1 } else { r.i - 1 };
        c.add_e(cfg, n, r.i, 1);
        c.add_e(cfg, n, next, -1);
    }
    c
}

/// `<Lambda, lambda>` with `<H_m, h_n> = delta_{mn}` and
/// `<E_m^i, e_n^j> = -delta_{mn} delta_{ij}`.
pub fn pairing(d: &DivisorClass, c: &CurveClass) -> Result<i64, LatticeError> {
    if d.h.len() != c.h.len() || d.e.len() != c.e.len() {
        return Err(LatticeError::ShapeMismatch);
    }
    Ok(d.pair(c))
}

pub fn reflect_divisor(cfg: &ShapeConfig, r: RootIndex, d: &DivisorClass) -> Result<DivisorClass, LatticeError> {
    cfg.check_root(r)?;
    let k = d.pair(&coroot_unchecked(cfg, r));
    Ok(d.add_scaled(&root_unchecked(cfg, r), k))
}

pub fn reflect_curve(cfg: &ShapeConfig, r: RootIndex, c: &CurveClass) -> Result<CurveClass, LatticeError> {
    cfg.check_root(r)?;
    let k = root_unchecked(cfg, r).pair(c);
    Ok(c.add_scaled(&coroot_unchecked(cfg, r), k))
}

/// `-cartan_entry` is the pairing `<alpha_a, alpha_b^vee>`.
pub fn cartan_entry(cfg: &ShapeConfig, a: RootIndex, b: RootIndex) -> Result<i64, LatticeError> {
    Ok(-root(cfg, a)?.pair(&coroot(cfg, b)?))
}

/// The Weyl-invariant classes `delta = -K/2`, `delta^vee = -k/2` and the two
/// decompositions into `D_n^0, D_n^inf` (and `d_n^0, d_n^inf`).
#[derive(Clone, Debug)]
pub struct Invariants {
    pub delta: DivisorClass,
    pub delta_check: CurveClass,
    pub d0: Vec<DivisorClass>,
    pub dinf: Vec<DivisorClass>,
    pub d0_check: Vec<CurveClass>,
    pub dinf_check: Vec<CurveClass>,
}

pub fn invariant_classes(cfg: &ShapeConfig) -> Invariants {
    let nn = cfg.n() as i64;
    let mut delta = DivisorClass::zero(cfg);
    let mut delta_check = CurveClass::zero(cfg);
    let (mut d0, mut dinf, mut d0c, mut dinfc) = (vec![], vec![], vec![], vec![]);
    for n in 1..=nn {
        delta.add_h(cfg, n, 1);
        delta_check.add_h(cfg, n, 2);
        for (m, i) in cfg.exceptional() {
            if m as i64 == n {
                delta.add_e(cfg, n, i, -1);
                delta_check.add_e(cfg, n, i, -1);
            }
        }
        let build_d = |fwd: i64, bwd: i64| {
            // H_n - sum_i E_{fwd}^i - sum_j E_{bwd}^{-j}
            let mut d = DivisorClass::zero(cfg);
            let mut c = CurveClass::zero(cfg);
            d.add_h(cfg, n, 1);
            c.add_h(cfg, n - 1, 1);
            c.add_h(cfg, n + 1, 1);
            for i in 1..=cfg.k(fwd) as i16 {
                d.add_e(cfg, fwd, i, -1);
                c.add_e(cfg, fwd, i, -1);
            }
            for j in 1..=cfg.l(bwd) as i16 {
                d.add_e(cfg, bwd, -j, -1);
                c.add_e(cfg, bwd, -j, -1);
            }
            (d, c)
        };
        let (a, b) = build_d(n + 1, n - 1);
        d0.push(a);
        d0c.push(b);
        let (a, b) = build_d(n - 1, n + 1);
        dinf.push(a);
        dinfc.push(b);
    }
    Invariants { delta, delta_check, d0, dinf, d0_check: d0c, dinf_check: dinfc }
}

/// Action of a single generator on a lattice class. The extended
/// generators `pi`, `iota`, `r0`, `r1` exist for `k = l = (1,...,1)` only.
pub trait LatticeAction: Sized {
    fn act(&self, cfg: &ShapeConfig, g: Generator) -> Result<Self, LatticeError>;
}

impl LatticeAction for DivisorClass {
    fn act(&self, cfg: &ShapeConfig, g: Generator) -> Result<Self, LatticeError> {
        match g {
            Generator::S(r) => reflect_divisor(cfg, r, self),
            Generator::Pi => extended_guard(cfg, g).map(|_| self.shifted(cfg)),
            Generator::Iota => extended_guard(cfg, g).map(|_| self.swapped(cfg)),
            Generator::R1 => {
                extended_guard(cfg, g)?;
                Ok(r1_divisor(cfg, self))
            }
            Generator::R0 => {
                extended_guard(cfg, g)?;
                Ok(r1_divisor(cfg, &self.swapped(cfg)).swapped(cfg))
            }
        }
    }
}

impl LatticeAction for CurveClass {
    fn act(&self, cfg: &ShapeConfig, g: Generator) -> Result<Self, LatticeError> {
        match g {
            Generator::S(r) => reflect_curve(cfg, r, self),
            Generator::Pi => extended_guard(cfg, g).map(|_| self.shifted(cfg)),
            Generator::Iota => extended_guard(cfg, g).map(|_| self.swapped(cfg)),
            Generator::R1 => {
                extended_guard(cfg, g)?;
                Ok(r1_curve(cfg, self))
            }
            Generator::R0 => {
                extended_guard(cfg, g)?;
                Ok(r1_curve(cfg, &self.swapped(cfg)).swapped(cfg))
            }
        }
    }
}

fn extended_guard(cfg: &ShapeConfig, g: Generator) -> Result<(), LatticeError> {
    if cfg.is_a_type() {
        Ok(())
    } else {
        Err(LatticeError::NotExtended(g))
    }
}

/// `gamma_{1,n} = -K/2 - H_n - E_n^1 + E_{n-1}^{-1} + E_n^{-1} + E_{n+1}^{-1}`.
pub fn gamma1(cfg: &ShapeConfig, n: i64) -> DivisorClass {
    let mut g = invariant_classes(cfg).delta;
    g.add_h(cfg, n, -1);
    g.add_e(cfg, n, 1, -1);
    g.add_e(cfg, n - 1, -1, 1);
    g.add_e(cfg, n, -1, 1);
    g.add_e(cfg, n + 1, -1, 1);
    g
}

/// `gamma_{1,n}^vee = h_n - e_n^1`.
pub fn gamma1_check(cfg: &ShapeConfig, n: i64) -> CurveClass {
    let mut g = CurveClass::zero(cfg);
    g.add_h(cfg, n, 1);
    g.add_e(cfg, n, 1, -1);
    g
}

// r_1 is the product of the mutually orthogonal reflections r_{1,n}
fn r1_divisor(cfg: &ShapeConfig, d: &DivisorClass) -> DivisorClass {
    let mut out = d.clone();
    for n in 1..=cfg.n() as i64 {
        let k = d.pair(&gamma1_check(cfg, n));
        out = out.add_scaled(&gamma1(cfg, n), k);
    }
    out
}

fn r1_curve(cfg: &ShapeConfig, c: &CurveClass) -> CurveClass {
    let mut out = c.clone();
    for n in 1..=cfg.n() as i64 {
        let k = gamma1(cfg, n).pair(c);
        out = out.add_scaled(&gamma1_check(cfg, n), k);
    }
    out
}

/// Apply `g_1 ... g_m` to a class; `g_m` acts first.
pub fn apply_word_lattice<T: LatticeAction + Clone>(
    cfg: &ShapeConfig,
    w: &WeylWord,
    v: &T,
) -> Result<T, LatticeError> {
    let mut out = v.clone();
    for g in w.letters().iter().rev() {
        out = out.act(cfg, *g)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> ShapeConfig {
        ShapeConfig::a(3).unwrap()
    }

    #[test]
    fn root_and_coroot_tables() {
        let c = a2();
        let r = root(&c, RootIndex::new(2, 0)).unwrap();
        let mut expect = DivisorClass::zero(&c);
        expect.add_h(&c, 2, 1);
        expect.add_e(&c, 2, 1, -1);
        expect.add_e(&c, 2, -1, -1);
        assert_eq!(r, expect);
        let rc = coroot(&c, RootIndex::new(2, 0)).unwrap();
        let mut expect = CurveClass::zero(&c);
        expect.add_h(&c, 1, 1);
        expect.add_h(&c, 3, 1);
        expect.add_e(&c, 2, 1, -1);
        expect.add_e(&c, 2, -1, -1);
        assert_eq!(rc, expect);
        assert!(root(&c, RootIndex::new(1, 1)).is_err());
    }

    #[test]
    fn pairing_values() {
        let c = a2();
        let a = RootIndex::new(1, 0);
        let b = RootIndex::new(2, 0);
        assert_eq!(root(&c, a).unwrap().pair(&coroot(&c, a).unwrap()), -2);
        assert_eq!(root(&c, a).unwrap().pair(&coroot(&c, b).unwrap()), 1);
        assert_eq!(DivisorClass::h(&c, 1).pair(&CurveClass::h(&c, 2)), 0);
    }

    #[test]
    fn reflections_of_basis_classes() {
        let c = a2();
        let s = RootIndex::new(2, 0);
        let img = reflect_divisor(&c, s, &DivisorClass::e(&c, 2, 1)).unwrap();
        let mut expect = DivisorClass::h(&c, 2);
        expect.add_e(&c, 2, -1, -1);
        assert_eq!(img, expect);
        let img = reflect_divisor(&c, s, &DivisorClass::h(&c, 3)).unwrap();
        let expect = DivisorClass::h(&c, 3).add_scaled(&root(&c, s).unwrap(), 1);
        assert_eq!(img, expect);
    }

    #[test]
    fn delta_is_isotropic_for_a2() {
        let c = a2();
        let inv = invariant_classes(&c);
        assert_eq!(inv.delta.pair(&inv.delta_check), 0);
        let sum = inv.d0.iter().fold(DivisorClass::zero(&c), |a, b| a.add_scaled(b, 1));
        assert_eq!(sum, inv.delta);
        for r in c.roots() {
            for d in inv.d0_check.iter().chain(&inv.dinf_check) {
                assert_eq!(root(&c, r).unwrap().pair(d), 0);
            }
        }
    }

    #[test]
    fn cartan_of_far_exceptional_roots() {
        let c = ShapeConfig::new(vec![2, 2, 2], vec![2, 2, 2]).unwrap();
        assert_eq!(cartan_entry(&c, RootIndex::new(1, 1), RootIndex::new(2, -1)).unwrap(), 0);
        assert_eq!(cartan_entry(&c, RootIndex::new(1, 1), RootIndex::new(1, 0)).unwrap(), -1);
        assert_eq!(cartan_entry(&c, RootIndex::new(1, 1), RootIndex::new(1, 1)).unwrap(), 2);
    }

    #[test]
    fn gamma_vectors_are_orthogonal() {
        let c = ShapeConfig::a(4).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                let v = gamma1(&c, i).pair(&gamma1_check(&c, j));
                assert_eq!(v, if i == j { -2 } else { 0 });
            }
        }
        // r_1(E_n^1) = E_n^1 + gamma_{1,n}
        let e = DivisorClass::e(&c, 2, 1);
        let img = e.act(&c, Generator::R1).unwrap();
        assert_eq!(img, e.add_scaled(&gamma1(&c, 2), 1));
    }
}
