use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_rational::BigRational;

use crate::algebra::Field;

use super::CharRing;

const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 200;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
    static PRECISION: RefCell<usize> = const { RefCell::new(DEFAULT_PRECISION) };
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision for values created on this thread.
pub fn precision() -> usize {
    PRECISION.with(|p| *p.borrow())
}

/// Runs `f` with the working precision set to `bits`.
pub fn with_precision<T>(bits: usize, f: impl FnOnce() -> T) -> T {
    let old = PRECISION.with(|p| p.replace(bits));
    let out = f();
    PRECISION.with(|p| *p.borrow_mut() = old);
    out
}

/// Multiple-precision real number.
#[derive(Clone)]
pub struct Real(BigFloat);

impl Real {
    pub fn from_i64(x: i64) -> Self {
        Real(BigFloat::from_i64(x, precision()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Real::from_i64(n).div(&Real::from_i64(d))
    }

    pub fn from_big_rational(r: &BigRational) -> Self {
        let p = precision();
        let parse = |s: String| with_cc(|cc| BigFloat::parse(&s, Radix::Dec, p, RM, cc));
        Real(parse(r.numer().to_string()).div(&parse(r.denom().to_string()), p, RM))
    }

    pub fn add(&self, o: &Self) -> Self {
        Real(self.0.add(&o.0, precision(), RM))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Real(self.0.sub(&o.0, precision(), RM))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Real(self.0.mul(&o.0, precision(), RM))
    }

    pub fn div(&self, o: &Self) -> Self {
        Real(self.0.div(&o.0, precision(), RM))
    }

    pub fn neg(&self) -> Self {
        Real(self.0.neg())
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn powi(&self, k: i64) -> Self {
        let p = self.0.powi(k.unsigned_abs() as usize, precision(), RM);
        if k < 0 {
            Real(p.reciprocal(precision(), RM))
        } else {
            Real(p)
        }
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(precision(), RM))
    }

    pub fn ln(&self) -> Self {
        Real(with_cc(|cc| self.0.ln(precision(), RM, cc)))
    }

    pub fn exp(&self) -> Self {
        Real(with_cc(|cc| self.0.exp(precision(), RM, cc)))
    }

    /// `self^{n/d}` for positive `self`; integer exponents also accept
    /// negative bases.
    pub fn pow_ratio(&self, n: i64, d: i64) -> Self {
        if d == 1 || n % d == 0 {
            return self.powi(n / d);
        }
        self.ln().mul(&Real::from_ratio(n, d)).exp()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    pub fn is_zero_value(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        with_cc(|cc| self.0.format(Radix::Dec, RM, cc))
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .unwrap_or(f64::NAN)
    }

    pub fn max(&self, o: &Self) -> Self {
        if self >= o {
            self.clone()
        } else {
            o.clone()
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, o: &Self) -> bool {
        self.0.cmp(&o.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.0.cmp(&o.0).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match with_cc(|cc| self.0.format(Radix::Dec, RM, cc)) {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str("NaN"),
        }
    }
}

impl Field for Real {
    fn zero() -> Self {
        Real::from_i64(0)
    }
    fn one() -> Self {
        Real::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Real::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Real::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Real::mul(self, o)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Real(self.0.reciprocal(precision(), RM)))
        }
    }
    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(Real::from_big_rational(r))
    }
}

impl CharRing for Real {
    fn zero() -> Self {
        Real::from_i64(0)
    }
    fn one() -> Self {
        Real::from_i64(1)
    }
    fn add(&self, o: &Self) -> Self {
        Real::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Real::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Real::mul(self, o)
    }
    fn scale(&self, c: &BigRational) -> Self {
        self.mul(&Real::from_big_rational(c))
    }
    fn try_inv(&self) -> Option<Self> {
        Field::inv(self)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn pivot_size(&self) -> f64 {
        self.abs().to_f64()
    }
}
