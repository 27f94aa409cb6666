use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::symbol::Sym;

/// Exponents of parameters may be fractional; exponents of dynamical
/// variables are always integral but share the same storage.
pub type Exp = Ratio<i64>;

pub fn exp_int(n: i64) -> Exp {
    Ratio::from_integer(n)
}

pub fn exp_frac(n: i64, d: i64) -> Exp {
    Ratio::new(n, d)
}

/// A power product `prod s^e` over symbols, stored sorted by symbol with no
/// zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Sym, Exp)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(s: impl Into<Sym>, e: Exp) -> Self {
        if e.is_zero() {
            Monomial::one()
        } else {
            Monomial(vec![(s.into(), e)])
        }
    }

    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, Exp)>,
        S: Into<Sym>,
    {
        let mut v: Vec<(Sym, Exp)> = pairs.into_iter().map(|(s, e)| (s.into(), e)).collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Sym, Exp)> = Vec::with_capacity(v.len());
        for (s, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => out.push((s, e)),
            }
        }
        out.retain(|(_, e)| !e.is_zero());
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(Sym, Exp)] {
        &self.0
    }

    pub fn exponent(&self, s: Sym) -> Exp {
        match self.0.binary_search_by(|(t, _)| t.cmp(&s)) {
            Ok(i) => self.0[i].1,
            Err(_) => Exp::zero(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if !e.is_zero() {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: Exp) -> Monomial {
        if e.is_zero() {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(s, x)| (*s, *x * e)).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|(s, x)| (*s, -*x)).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// Split into (parameter part, dynamical part).
    pub fn split(&self) -> (Monomial, Monomial) {
        let (p, v): (Vec<_>, Vec<_>) = self.0.iter().partition(|(s, _)| s.is_param());
        (Monomial(p), Monomial(v))
    }

    pub fn has_vars(&self) -> bool {
        self.0.iter().any(|(s, _)| !s.is_param())
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> Exp {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    /// Componentwise minimum (the monomial gcd in the Laurent sense).
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let pick = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            let (s, e) = match pick {
                std::cmp::Ordering::Less => {
                    i += 1;
                    (a[i - 1].0, a[i - 1].1.min(Exp::zero()))
                }
                std::cmp::Ordering::Greater => {
                    j += 1;
                    (b[j - 1].0, b[j - 1].1.min(Exp::zero()))
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (a[i - 1].0, a[i - 1].1.min(b[j - 1].1))
                }
            };
            if !e.is_zero() {
                out.push((s, e));
            }
        }
        Monomial(out)
    }

    /// Least common multiple of the exponent denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.0.iter().fold(1i64, |acc, (_, e)| acc.lcm(e.denom()))
    }

    pub fn map_syms(&self, f: impl Fn(Sym) -> Sym) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|(s, e)| (f(*s), *e)))
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|(_, e)| e.is_integer())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e.is_one() {
                write!(f, "{s}")?;
            } else if e.is_integer() && !e.is_negative() {
                write!(f, "{s}^{e}")?;
            } else {
                write!(f, "{s}^({e})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symbol::{Param, Var};

    #[test]
    fn product_cancels_to_one() {
        let t = Monomial::single(Var::Tau(1, 1), exp_int(1));
        assert!(t.mul(&t.inv()).is_one());
    }

    #[test]
    fn meet_takes_minimum_and_treats_missing_as_zero() {
        let a = Monomial::from_pairs([(Sym::from(Var::F(1)), exp_int(2)), (Var::F(2).into(), exp_int(-1))]);
        let b = Monomial::from_pairs([(Sym::from(Var::F(1)), exp_int(1))]);
        let m = a.meet(&b);
        assert_eq!(m.exponent(Var::F(1).into()), exp_int(1));
        assert_eq!(m.exponent(Var::F(2).into()), exp_int(-1));
    }

    #[test]
    fn fractional_powers() {
        let u = Monomial::single(Param::Root(1, 0), exp_frac(1, 2));
        assert_eq!(u.pow(exp_int(2)), Monomial::single(Param::Root(1, 0), exp_int(1)));
        assert_eq!(u.denominator_lcm(), 2);
    }
}
