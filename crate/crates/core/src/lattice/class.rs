use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

use super::ShapeConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Divisor;
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Curve;

/// Integer vector over `{H_n, E_n^i}` (divisors) or `{h_n, e_n^i}` (curves).
/// The exceptional part is dense in the order of [`ShapeConfig::exceptional`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeClass<K> {
    pub h: Vec<i64>,
    pub e: Vec<i64>,
    #[serde(skip)]
    kind: PhantomData<K>,
}

pub type DivisorClass = LatticeClass<Divisor>;
pub type CurveClass = LatticeClass<Curve>;

impl<K: Clone> LatticeClass<K> {
    pub fn zero(cfg: &ShapeConfig) -> Self {
        LatticeClass { h: vec![0; cfg.n()], e: vec![0; cfg.num_exceptional()], kind: PhantomData }
    }

    pub fn h(cfg: &ShapeConfig, n: i64) -> Self {
        let mut c = Self::zero(cfg);
        c.add_h(cfg, n, 1);
        c
    }

    pub fn e(cfg: &ShapeConfig, n: i64, i: i16) -> Self {
        let mut c = Self::zero(cfg);
        c.add_e(cfg, n, i, 1);
        c
    }

    pub fn add_h(&mut self, cfg: &ShapeConfig, n: i64, k: i64) {
        self.h[cfg.wrap(n) as usize - 1] += k;
    }

    /// Adds `k E_n^i`; indices outside the shape are ignored.
    pub fn add_e(&mut self, cfg: &ShapeConfig, n: i64, i: i16, k: i64) {
        if let Some(p) = cfg.eidx(n, i) {
            self.e[p] += k;
        }
    }

    pub fn h_coeff(&self, cfg: &ShapeConfig, n: i64) -> i64 {
        self.h[cfg.wrap(n) as usize - 1]
    }

    pub fn e_coeff(&self, cfg: &ShapeConfig, n: i64, i: i16) -> i64 {
        cfg.eidx(n, i).map(|p| self.e[p]).unwrap_or(0)
    }

    pub fn add_scaled(&self, o: &Self, k: i64) -> Self {
        let mut out = self.clone();
        if k != 0 {
            for (a, b) in out.h.iter_mut().zip(&o.h) {
                *a += k * b;
            }
            for (a, b) in out.e.iter_mut().zip(&o.e) {
                *a += k * b;
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::zero_like(self).add_scaled(self, k)
    }

    fn zero_like(o: &Self) -> Self {
        LatticeClass { h: vec![0; o.h.len()], e: vec![0; o.e.len()], kind: PhantomData }
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().chain(&self.e).all(|&x| x == 0)
    }

    /// Index shift `n -> n + 1` (the rotation `pi`).
    pub fn shifted(&self, cfg: &ShapeConfig) -> Self {
        let mut out = Self::zero(cfg);
        let nn = cfg.n() as i64;
        for n in 1..=nn {
            out.add_h(cfg, n + 1, self.h_coeff(cfg, n));
        }
        for (n, i) in cfg.exceptional() {
            out.add_e(cfg, n as i64 + 1, i, self.e_coeff(cfg, n as i64, i));
        }
        out
    }

    /// `E_n^i <-> E_n^{-i}` (the involution `iota`).
    pub fn swapped(&self, cfg: &ShapeConfig) -> Self {
        let mut out = Self::zero(cfg);
        out.h = self.h.clone();
        for (n, i) in cfg.exceptional() {
            out.add_e(cfg, n as i64, -i, self.e_coeff(cfg, n as i64, i));
        }
        out
    }

    pub fn to_string_with(&self, cfg: &ShapeConfig, upper: bool) -> String {
        let (hs, es) = if upper { ("H", "E") } else { ("h", "e") };
        let mut parts: Vec<String> = Vec::new();
        let mut push = |k: i64, label: String| {
            if k == 0 {
                return;
            }
            let sign = if k < 0 { "-" } else { "+" };
            let mag = if k.abs() == 1 { String::new() } else { k.abs().to_string() };
            parts.push(format!("{sign}{mag}{label}"));
        };
        for n in 1..=cfg.n() as i64 {
            push(self.h_coeff(cfg, n), format!("{hs}{n}"));
        }
        for (n, i) in cfg.exceptional() {
            push(self.e_coeff(cfg, n as i64, i), format!("{es}{n}^{i}"));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let s = parts.join(" ");
        s.strip_prefix('+').map(str::to_string).unwrap_or(s)
    }
}

impl DivisorClass {
    pub fn pair(&self, c: &CurveClass) -> i64 {
        let h: i64 = self.h.iter().zip(&c.h).map(|(a, b)| a * b).sum();
        let e: i64 = self.e.iter().zip(&c.e).map(|(a, b)| a * b).sum();
        h - e
    }

    /// Degree vector `d_n` (coefficients of `H_n`).
    pub fn degree(&self) -> Vec<i64> {
        self.h.clone()
    }

    /// Multiplicity `mu_n^i` in `Lambda = sum d H - sum mu E`.
    pub fn mu(&self, cfg: &ShapeConfig, n: i64, i: i16) -> i64 {
        -self.e_coeff(cfg, n, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_and_swap() {
        let c = ShapeConfig::a(3).unwrap();
        let e = DivisorClass::e(&c, 3, 1);
        assert_eq!(e.shifted(&c), DivisorClass::e(&c, 1, 1));
        assert_eq!(e.swapped(&c), DivisorClass::e(&c, 3, -1));
        assert_eq!(e.to_string_with(&c, true), "E3^1");
    }
}
