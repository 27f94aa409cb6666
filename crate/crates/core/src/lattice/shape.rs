use std::fmt;

use serde::{Deserialize, Serialize};

use super::LatticeError;
use crate::algebra::{exp_frac, Exp};

/// Index `(n, i)` of a simple root `alpha_n^i`; `n` is 1-based and cyclic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootIndex {
    pub n: u16,
    pub i: i16,
}

impl RootIndex {
    pub fn new(n: u16, i: i16) -> Self {
        RootIndex { n, i }
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}.{}", self.n, self.i)
    }
}

/// The pair of sequences `(k, l)` fixing the blow-up data, plus an optional
/// frozen node whose reflection `s_n^0` is removed from the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeConfig {
    k: Vec<u32>,
    l: Vec<u32>,
    frozen: Option<u16>,
}

impl ShapeConfig {
    pub fn new(k: Vec<u32>, l: Vec<u32>) -> Result<Self, LatticeError> {
        if k.len() < 3 {
            return Err(LatticeError::BadShape(format!("N = {} < 3", k.len())));
        }
        if k.len() != l.len() {
            return Err(LatticeError::BadShape(format!(
                "k has {} entries, l has {}",
                k.len(),
                l.len()
            )));
        }
        if k.iter().chain(&l).any(|&x| x == 0) {
            return Err(LatticeError::BadShape("entries of k and l must be positive".into()));
        }
        Ok(ShapeConfig { k, l, frozen: None })
    }

    /// `k = l = (1, ..., 1)`: type `A_{N-1}^{(1)}`.
    pub fn a(n: usize) -> Result<Self, LatticeError> {
        Self::new(vec![1; n], vec![1; n])
    }

    /// `k = l = (2, 1, ..., 1, 2, 1)` with node `N` frozen: type `D_{N+2}^{(1)}`.
    pub fn d(n: usize) -> Result<Self, LatticeError> {
        if n < 3 {
            return Err(LatticeError::BadShape(format!("N = {n} < 3")));
        }
        let mut k = vec![1u32; n];
        k[0] = 2;
        k[n - 2] = 2;
        let mut s = Self::new(k.clone(), k)?;
        s.frozen = Some(n as u16);
        Ok(s)
    }

    pub fn frozen(&self) -> Option<u16> {
        self.frozen
    }

    pub fn is_a_type(&self) -> bool {
        self.frozen.is_none() && self.k.iter().chain(&self.l).all(|&x| x == 1)
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    /// Reduce any integer to the cyclic label in `1..=N`.
    pub fn wrap(&self, n: i64) -> u16 {
        let m = self.n() as i64;
        ((n - 1).rem_euclid(m) + 1) as u16
    }

    pub fn k(&self, n: i64) -> u32 {
        self.k[self.wrap(n) as usize - 1]
    }

    pub fn l(&self, n: i64) -> u32 {
        self.l[self.wrap(n) as usize - 1]
    }

    pub fn ks(&self) -> &[u32] {
        &self.k
    }

    pub fn ls(&self) -> &[u32] {
        &self.l
    }

    pub fn theta0(&self, n: i64) -> i64 {
        (self.k(n + 1) + self.l(n - 1)) as i64
    }

    pub fn theta_inf(&self, n: i64) -> i64 {
        (self.k(n - 1) + self.l(n + 1)) as i64
    }

    pub fn omega(&self, n: i64) -> Exp {
        let t0 = self.theta0(n);
        exp_frac(t0, t0 + self.theta_inf(n))
    }

    /// `k_{n-1} k_{n+1} = l_{n-1} l_{n+1}`.
    pub fn assumption_holds(&self, n: i64) -> bool {
        self.k(n - 1) * self.k(n + 1) == self.l(n - 1) * self.l(n + 1)
    }

    pub fn is_valid_root(&self, r: RootIndex) -> bool {
        if r.n == 0 || r.n as usize > self.n() {
            return false;
        }
        if r.i == 0 && self.frozen == Some(r.n) {
            return false;
        }
        let k = self.k(r.n as i64) as i16;
        let l = self.l(r.n as i64) as i16;
        -l < r.i && r.i < k
    }

    pub fn check_root(&self, r: RootIndex) -> Result<(), LatticeError> {
        if self.is_valid_root(r) {
            Ok(())
        } else {
            Err(LatticeError::IndexOutOfRange(r))
        }
    }

    /// All simple roots of the group, ordered by `(n, i)`.
    pub fn roots(&self) -> Vec<RootIndex> {
        let mut out = Vec::new();
        for n in 1..=self.n() as u16 {
            let k = self.k(n as i64) as i16;
            let l = self.l(n as i64) as i16;
            for i in (1 - l)..k {
                let r = RootIndex::new(n, i);
                if self.is_valid_root(r) {
                    out.push(r);
                }
            }
        }
        out
    }

    /// Exceptional labels `(n, i)`: `1 <= i <= k_n` and `-l_n <= i <= -1`,
    /// in storage order.
    pub fn exceptional(&self) -> Vec<(u16, i16)> {
        let mut out = Vec::new();
        for n in 1..=self.n() as u16 {
            for i in 1..=self.k(n as i64) as i16 {
                out.push((n, i));
            }
            for j in 1..=self.l(n as i64) as i16 {
                out.push((n, -j));
            }
        }
        out
    }

    /// Position of `E_n^i` in the dense exceptional vector.
    pub fn eidx(&self, n: i64, i: i16) -> Option<usize> {
        let n = self.wrap(n) as usize;
        let mut off = 0usize;
        for m in 1..n {
            off += (self.k[m - 1] + self.l[m - 1]) as usize;
        }
        let (k, l) = (self.k[n - 1] as i16, self.l[n - 1] as i16);
        if i >= 1 && i <= k {
            Some(off + (i - 1) as usize)
        } else if i <= -1 && -i <= l {
            Some(off + k as usize + (-i - 1) as usize)
        } else {
            None
        }
    }

    pub fn num_exceptional(&self) -> usize {
        self.k.iter().chain(&self.l).map(|&x| x as usize).sum()
    }

    pub fn describe(&self) -> String {
        let k: Vec<String> = self.k.iter().map(|x| x.to_string()).collect();
        let l: Vec<String> = self.l.iter().map(|x| x.to_string()).collect();
        let mut s = format!("N={} k=({}) l=({})", self.n(), k.join(","), l.join(","));
        if let Some(f) = self.frozen {
            s.push_str(&format!(" frozen={f}"));
        }
        s
    }
}
