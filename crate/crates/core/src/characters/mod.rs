//! Partitions, Maya diagrams and `N`-cores, Schur functions and universal
//! characters as (twisted) Jacobi-Trudi determinants, q-products and the
//! numerical check of the bilinear relation satisfied by the specialized
//! τ-functions.

mod bilinear;
mod partition;
mod qseries;
mod real;

pub use bilinear::{
    schur_prefactors, sigma, uc_prefactors, verify_bilinear, verify_specialization_against_tau, Mode, QContext,
    SchurPrefactors, UcPrefactors,
};
pub use partition::{core_partition, is_n_core, maya_from_nu, partition_of, MayaDiagram, Partition};
pub use qseries::{elliptic_gamma, pochhammer1, pochhammer2};
pub use real::{precision, with_precision, Real, DEFAULT_PRECISION};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<usize>),
    #[error("product does not converge: {0}")]
    NonConvergent(String),
    #[error("N = {0} is not of the form 2g + 2")]
    BadShape(usize),
    #[error("both sides of the relation underflow")]
    DegenerateScale,
    #[error("evaluation failed: {0}")]
    Evaluation(String),
}

/// Commutative ring with rational scalars; enough for `p_k` and
/// determinants.
pub trait CharRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
    /// An inverse when one exists in the ring.
    fn try_inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// Used to pick pivots; larger is better.
    fn pivot_size(&self) -> f64 {
        1.0
    }
}

impl CharRing for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &BigRational) -> Self {
        self * c
    }
    fn try_inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl CharRing for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn scale(&self, c: &BigRational) -> Self {
        LaurentPoly::scale(self, c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

/// `p_0, ..., p_kmax` from `k p_k = Σ_{m=1}^k m x_m p_{k-m}`; `x[0]` is
/// `x_1` and missing entries are zero.
pub fn p_values<R: CharRing>(x: &[R], kmax: usize) -> Vec<R> {
    let mut p = vec![R::one()];
    for k in 1..=kmax {
        let mut acc = R::zero();
        for m in 1..=k.min(x.len()) {
            let c = BigRational::from_integer(BigInt::from(m));
            acc = acc.add(&x[m - 1].mul(&p[k - m]).scale(&c));
        }
        p.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
    }
    p
}

/// `p_k(x)`, zero for negative `k`.
pub fn p_k<R: CharRing>(k: i64, x: &[R]) -> R {
    if k < 0 {
        return R::zero();
    }
    p_values(x, k as usize).pop().unwrap_or_else(R::one)
}

/// Determinant by elimination while invertible pivots exist, by cofactor
/// expansion otherwise.
pub fn determinant<R: CharRing>(m: Vec<Vec<R>>) -> R {
    let n = m.len();
    let mut a = m;
    let mut acc = R::one();
    for c in 0..n {
        let pivot = (c..n)
            .filter_map(|r| a[r][c].try_inv().map(|inv| (r, inv)))
            .max_by(|x, y| a[x.0][c].pivot_size().total_cmp(&a[y.0][c].pivot_size()));
        let Some((r, inv)) = pivot else {
            if (c..n).all(|r| a[r][c].is_zero()) {
                return R::zero();
            }
            let rest: Vec<Vec<R>> = a[c..].iter().map(|row| row[c..].to_vec()).collect();
            return acc.mul(&cofactor(&rest));
        };
        if r != c {
            a.swap(r, c);
            acc = acc.scale(&BigRational::from_integer((-1).into()));
        }
        acc = acc.mul(&a[c][c]);
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].mul(&inv);
            for k in c..n {
                let v = a[r][k].sub(&f.mul(&a[c][k]));
                a[r][k] = v;
            }
        }
    }
    acc
}

// expansion along rows, memoized on the set of used columns
fn cofactor<R: CharRing>(m: &[Vec<R>]) -> R {
    fn go<R: CharRing>(m: &[Vec<R>], row: usize, used: u64, memo: &mut HashMap<u64, R>) -> R {
        if row == m.len() {
            return R::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = R::zero();
        let mut sign = 0usize;
        for c in 0..m.len() {
            if used & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let t = m[row][c].mul(&go(m, row + 1, used | (1 << c), memo));
                acc = if sign.is_multiple_of(2) { acc.add(&t) } else { acc.sub(&t) };
            }
            sign += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, 0, &mut HashMap::new())
}

/// `S_{[λ,μ]}(x, y)`: rows `1..r'` are `p_{μ_{r'-i+1}+i-j}(y)`, rows
/// `r'+1..r+r'` are `p_{λ_{i-r'}-i+j}(x)`.
pub fn universal_character<R: CharRing>(lambda: &Partition, mu: &Partition, x: &[R], y: &[R]) -> R {
    let (r, rp) = (lambda.len(), mu.len());
    let n = r + rp;
    if n == 0 {
        return R::one();
    }
    let kmax = lambda.parts().first().copied().unwrap_or(0).max(mu.parts().first().copied().unwrap_or(0)) + n;
    let px = p_values(x, kmax);
    let py = p_values(y, kmax);
    let at = |p: &[R], k: i64| if k < 0 { R::zero() } else { p[k as usize].clone() };
    let mut m = vec![vec![R::zero(); n]; n];
    for i in 1..=n {
        for j in 1..=n {
            let (i_, j_) = (i as i64, j as i64);
            m[i - 1][j - 1] = if i <= rp {
                at(&py, mu.parts()[rp - i] as i64 + i_ - j_)
            } else {
                at(&px, lambda.parts()[i - rp - 1] as i64 - i_ + j_)
            };
        }
    }
    determinant(m)
}

/// `S_λ(x) = det(p_{λ_i-i+j}(x))`.
pub fn schur<R: CharRing>(lambda: &Partition, x: &[R]) -> R {
    universal_character(lambda, &Partition::empty(), x, &[])
}
