use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::{Exp, Monomial};
use super::poly::LaurentPoly;

/// Graded lexicographic key. Exponents may be rational; since all of them
/// live in `Z[1/L]` for a common `L` this is an admissible order on the
/// polynomial ring in the `L`-th roots.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GrKey(Exp, Monomial);

impl GrKey {
    fn new(m: Monomial) -> Self {
        GrKey(m.total_degree(), m)
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (a.entries(), b.entries());
    let (mut i, mut j) = (0, 0);
    loop {
        match (x.get(i), y.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(p), None) => return p.1.cmp(&Exp::zero()),
            (None, Some(q)) => return Exp::zero().cmp(&q.1),
            (Some(p), Some(q)) => match p.0.cmp(&q.0) {
                Ordering::Less => return p.1.cmp(&Exp::zero()),
                Ordering::Greater => return Exp::zero().cmp(&q.1),
                Ordering::Equal => {
                    if p.1 != q.1 {
                        return p.1.cmp(&q.1);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl Ord for GrKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0).then_with(|| lex(&self.1, &other.1))
    }
}

impl PartialOrd for GrKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn all_nonneg(m: &Monomial) -> bool {
    m.entries().iter().all(|(_, e)| *e >= Exp::zero())
}

/// Exact quotient `n / d` in the Laurent ring, or `None` when `d` does not
/// divide `n`.
///
/// Both sides are stripped of monomial content so the problem becomes
/// division of honest polynomials, then the leading term of the remainder is
/// repeatedly cancelled. If the leading term of `d` fails to divide the
/// leading term of the remainder the division is not exact.
pub fn exact_divide(n: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    if d.is_zero() {
        return None;
    }
    if n.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if let Some(inv) = d.unit_inverse() {
        return Some(n.mul(&inv));
    }
    let cn = n.monomial_content();
    let cd = d.monomial_content();
    let one = BigRational::one();
    let n0 = n.mul_term(&cn.inv(), &one);
    let d0 = d.mul_term(&cd.inv(), &one);

    let dterms: Vec<(GrKey, BigRational)> = d0
        .terms()
        .iter()
        .map(|(m, c)| (GrKey::new(m.clone()), c.clone()))
        .collect();
    let (lead_key, lead_c) = dterms.iter().max_by(|a, b| a.0.cmp(&b.0))?.clone();
    let lead_ci = lead_c.recip();

    let mut rem: BTreeMap<GrKey, BigRational> = n0
        .terms()
        .iter()
        .map(|(m, c)| (GrKey::new(m.clone()), c.clone()))
        .collect();
    let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
    while let Some((k, c)) = rem.pop_last() {
        let qm = k.1.div(&lead_key.1);
        if !all_nonneg(&qm) {
            return None;
        }
        let qc = &c * &lead_ci;
        for (dk, dc) in &dterms {
            if dk == &lead_key {
                continue;
            }
            let key = GrKey::new(dk.1.mul(&qm));
            let delta = -(&qc * dc);
            match rem.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(delta);
                }
            }
        }
        quot.push((qm, qc));
    }
    let q = LaurentPoly::from_terms(quot);
    Some(q.mul_term(&cn.div(&cd), &one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::exp_frac;
    use crate::algebra::poly::int;
    use crate::algebra::symbol::{Param, Var};

    fn x() -> LaurentPoly {
        LaurentPoly::var(Var::Free(1))
    }
    fn y() -> LaurentPoly {
        LaurentPoly::var(Var::Free(2))
    }

    #[test]
    fn difference_of_squares() {
        let n = x().pow(2).sub(&y().pow(2));
        let d = x().sub(&y());
        assert_eq!(exact_divide(&n, &d), Some(x().add(&y())));
    }

    #[test]
    fn divide_by_one() {
        let p = x().add(&y().scale(&int(5)));
        assert_eq!(exact_divide(&p, &LaurentPoly::one()), Some(p));
    }

    #[test]
    fn non_divisor_is_rejected() {
        let n = x().pow(2).add(&LaurentPoly::one());
        let d = x().add(&LaurentPoly::one());
        assert_eq!(exact_divide(&n, &d), None);
    }

    #[test]
    fn laurent_and_fractional_exponents() {
        let u = LaurentPoly::param_pow(Param::Root(1, 0), exp_frac(1, 3));
        let xi = x().unit_inverse().unwrap();
        let d = x().add(&u).mul(&xi);
        let q = y().add(&u.pow(2)).mul(&y().unit_inverse().unwrap().pow(3));
        let n = d.mul(&q);
        assert_eq!(exact_divide(&n, &d), Some(q));
    }
}
