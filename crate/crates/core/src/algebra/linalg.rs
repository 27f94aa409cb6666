//! Small dense linear algebra over `Ratio<i64>`.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..cols {
                    let v = a[row][c];
                    a[r][c] -= f * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the right kernel, one vector per free column.
pub fn kernel(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let pivots = rref(&mut a);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f];
            }
            v
        })
        .collect()
}

/// A solution of `m x = b` with free variables set to zero.
pub fn solve(m: &[Vec<i64>], b: &[i64]) -> Option<Vec<Q>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(r, &y)| r.iter().map(|&x| Q::from_integer(x)).chain([Q::from_integer(y)]).collect())
        .collect();
    let pivots = rref(&mut a);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = a[r][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let k = kernel(&m);
        assert_eq!(k, vec![vec![Q::one(), -Q::one(), Q::one()]]);
        let x = solve(&m, &[2, 3]).unwrap();
        assert_eq!(x, vec![Q::from_integer(-1), Q::from_integer(3), Q::zero()]);
        assert!(solve(&[vec![1, 1], vec![1, 1]], &[1, 2]).is_none());
    }
}
