use super::field::Field;

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    c: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn constant(a: F) -> Self {
        Self::new(vec![a])
    }

    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn lead(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = F::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z).add(o.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = F::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z).sub(o.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, a: &F) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(a)).collect())
    }

    /// Quotient and remainder; `o` must be nonzero.
    pub fn divrem(&self, o: &Self) -> (Self, Self) {
        let li = o.lead().inv().expect("division by zero polynomial");
        let mut r = self.c.clone();
        let dn = o.c.len();
        if r.len() < dn {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let t = r[k + dn - 1].mul(&li);
            if t.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[k + j] = r[k + j].sub(&t.mul(b));
            }
            q[k] = t;
        }
        r.truncate(dn - 1);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.lead().inv() {
            Some(li) => self.scale(&li),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.c.iter().rev().fold(F::zero(), |acc, a| acc.mul(x).add(a))
    }
}

/// Reduced fraction of univariate polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct UniRat<F: Field> {
    pub num: UniPoly<F>,
    pub den: UniPoly<F>,
}

impl<F: Field> UniRat<F> {
    pub fn from_parts(num: UniPoly<F>, den: UniPoly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(UniRat { num, den: UniPoly::constant(F::one()) });
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let li = d.lead().inv()?;
        Some(UniRat { num: n.scale(&li), den: d.scale(&li) })
    }

    pub fn x() -> Self {
        UniRat { num: UniPoly::x(), den: UniPoly::constant(F::one()) }
    }

    pub fn constant(a: F) -> Self {
        UniRat { num: UniPoly::constant(a), den: UniPoly::constant(F::one()) }
    }

    /// Algebraic degree: max of numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }
}

impl<F: Field> Field for UniRat<F> {
    fn zero() -> Self {
        UniRat { num: UniPoly::zero(), den: UniPoly::constant(F::one()) }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::from_parts(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        Self::from_parts(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .unwrap()
    }
    fn sub(&self, o: &Self) -> Self {
        Self::from_parts(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .unwrap()
    }
    fn mul(&self, o: &Self) -> Self {
        Self::from_parts(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }
    fn inv(&self) -> Option<Self> {
        Self::from_parts(self.den.clone(), self.num.clone())
    }
    fn from_rational(r: &num_rational::BigRational) -> Option<Self> {
        F::from_rational(r).map(Self::constant)
    }
}
