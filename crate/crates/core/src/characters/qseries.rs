use super::{CharError, Real};

/// Factors `1 - w` with `|w| < 2^{-t}` are dropped.
fn negligible(w: &Real, t: usize) -> bool {
    w.abs() < Real::from_i64(2).powi(-(t as i64))
}

fn check_base(q: &Real) -> Result<(), CharError> {
    if q.abs() >= Real::from_i64(1) {
        return Err(CharError::NonConvergent(format!("|{}| >= 1", q.to_f64())));
    }
    Ok(())
}

/// `(z; q)_∞`, truncated where the factors are within `2^{-t}` of 1.
pub fn pochhammer1(z: &Real, q: &Real, t: usize) -> Result<Real, CharError> {
    check_base(q)?;
    let one = Real::from_i64(1);
    let mut acc = one.clone();
    let mut w = z.clone();
    while !negligible(&w, t) {
        acc = acc.mul(&one.sub(&w));
        w = w.mul(q);
    }
    Ok(acc)
}

/// `(z; p, q)_∞ = Π_{i,j} (1 - z p^i q^j)`, same truncation rule.
pub fn pochhammer2(z: &Real, p: &Real, q: &Real, t: usize) -> Result<Real, CharError> {
    check_base(p)?;
    check_base(q)?;
    let mut acc = Real::from_i64(1);
    let mut row = z.clone();
    while !negligible(&row, t) {
        acc = acc.mul(&pochhammer1(&row, q, t)?);
        row = row.mul(p);
    }
    Ok(acc)
}

/// `Γ(z; p, q) = (pq/z; p, q)_∞ / (z; p, q)_∞`.
pub fn elliptic_gamma(z: &Real, p: &Real, q: &Real, t: usize) -> Result<Real, CharError> {
    let num = pochhammer2(&p.mul(q).div(z), p, q, t)?;
    let den = pochhammer2(z, p, q, t)?;
    if den.is_zero_value() {
        return Err(CharError::NonConvergent("pole of the elliptic gamma function".into()));
    }
    Ok(num.div(&den))
}
