//! Exact arithmetic kernel: Laurent polynomials in `q`, polynomials in a
//! formal `x` over them, and the standard q-analogs.

mod laurent;
mod xpoly;

pub use laurent::{exact_div, QLaurent};
pub use xpoly::XPoly;

use crate::error::{Error, Result};

/// The q-number `[a] = (1 - q^a) / (1 - q)` at an integer `a`.
///
/// For `a >= 0` this is `1 + q + ... + q^(a-1)`; for negative `a` it is
/// `-(q^a + ... + q^-1)`.
pub fn q_number(a: i64) -> QLaurent {
    if a >= 0 {
        QLaurent::from_i64s(0, &vec![1; a as usize])
    } else {
        QLaurent::from_i64s(a, &vec![-1; (-a) as usize])
    }
}

/// Falling q-factorial `[m]_k = [m][m-1]...[m-k+1]`.
pub fn q_falling(m: i64, k: i64) -> Result<QLaurent> {
    if m < 0 || k < 0 || k > m {
        return Err(Error::InvalidArgument(format!(
            "q_falling({m}, {k}) needs 0 <= k <= m"
        )));
    }
    Ok(q_falling_at(m, k as usize))
}

/// The product `[x][x-1]...[x-k+1]` at any integer `x`, negative included.
pub fn q_falling_at(x: i64, k: usize) -> QLaurent {
    (0..k as i64).fold(QLaurent::one(), |acc, t| acc.mul_q_number(x - t))
}

/// Like [`q_falling`] but yields zero when `k = m + 1, m + 2, ...`, where the
/// product passes through the factor `[0]`.
pub fn q_falling_or_zero(m: i64, k: i64) -> Result<QLaurent> {
    if m >= 0 && k > m {
        Ok(QLaurent::zero())
    } else {
        q_falling(m, k)
    }
}

pub fn q_factorial(n: i64) -> Result<QLaurent> {
    q_falling(n, n)
}

/// Gaussian binomial `[n]_k / [k]!`.
pub fn q_binomial(n: i64, k: i64) -> Result<QLaurent> {
    exact_div(&q_falling(n, k)?, &q_factorial(k)?)
}

/// `(x; q)_i = (1 - x)(1 - xq)...(1 - xq^(i-1))` as a polynomial in `x`.
pub fn x_pochhammer(i: usize) -> XPoly {
    (0..i).fold(XPoly::one(), |acc, t| {
        let factor = XPoly::new(vec![QLaurent::one(), -QLaurent::q_pow(t as i64)]);
        &acc * &factor
    })
}
