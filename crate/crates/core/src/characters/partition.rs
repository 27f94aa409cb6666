use std::fmt;

use serde::{Deserialize, Serialize};

use super::CharError;

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CharError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(CharError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Cells `(i, j, h_ij)`, 1-based, with `h_ij = λ_i + λ'_j - i - j + 1`.
    pub fn hooks(&self) -> Vec<(usize, usize, usize)> {
        let c = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &li) in self.0.iter().enumerate() {
            for j in 0..li {
                out.push((i + 1, j + 1, li + c.0[j] - i - j - 1));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// No hook length divisible by `n`.
pub fn is_n_core(l: &Partition, n: usize) -> bool {
    n > 0 && l.hooks().iter().all(|&(_, _, h)| h % n != 0)
}

/// A Maya diagram: every integer `<= floor` plus the finitely many
/// elements listed in `top` (descending, all `> floor`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MayaDiagram {
    pub floor: i64,
    pub top: Vec<i64>,
}

impl MayaDiagram {
    pub fn new(floor: i64, mut top: Vec<i64>) -> Self {
        top.retain(|&x| x > floor);
        top.sort_unstable_by(|a, b| b.cmp(a));
        top.dedup();
        // absorb a run sitting right above the floor
        let mut floor = floor;
        while top.last() == Some(&(floor + 1)) {
            top.pop();
            floor += 1;
        }
        MayaDiagram { floor, top }
    }

    pub fn contains(&self, x: i64) -> bool {
        x <= self.floor || self.top.contains(&x)
    }

    /// Number of elements relative to the vacuum `Z_{<=0}`.
    pub fn charge(&self) -> i64 {
        self.floor + self.top.len() as i64
    }
}

/// `m(ν) = (N Z_{<ν_1} + 1) ∪ ... ∪ (N Z_{<ν_N} + N)`.
pub fn maya_from_nu(nu: &[i64]) -> MayaDiagram {
    let n = nu.len() as i64;
    let lo = nu.iter().copied().min().unwrap_or(0);
    // every residue is complete below N*lo + 1
    let floor = n * lo;
    let mut top = Vec::new();
    for (k, &v) in nu.iter().enumerate() {
        for a in lo..v {
            top.push(n * a + k as i64 + 1);
        }
    }
    MayaDiagram::new(floor, top)
}

/// `λ_i = m_i + i - 1 - charge` for the descending elements `m_1 > m_2 > ...`.
pub fn partition_of(m: &MayaDiagram) -> Partition {
    let c = m.charge();
    let parts = m
        .top
        .iter()
        .enumerate()
        .map(|(i, &mi)| (mi + i as i64 - c) as usize)
        .filter(|&p| p > 0)
        .collect();
    Partition(parts)
}

/// `λ(ν)`.
pub fn core_partition(nu: &[i64]) -> Partition {
    partition_of(&maya_from_nu(nu))
}
