use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Stored densely: `coeffs[i]` is the coefficient of `q^(min_exp + i)`. The
/// representation is kept normalized (no zero at either end, and the zero
/// polynomial is `min_exp = 0` with no coefficients), so structural equality
/// is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![coeff.into()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QLaurent { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.min_exp;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Iterator over `(exponent, coefficient)` for the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `[a] = (1 - q^a) / (1 - q)` with a sliding-window sum.
    pub fn mul_q_number(&self, a: i64) -> Self {
        if a == 0 || self.is_zero() {
            return Self::zero();
        }
        if a < 0 {
            // [a] = -q^a [-a]
            return -self.mul_q_number(-a).shift(a);
        }
        let width = a as usize;
        let len = self.coeffs.len() + width - 1;
        let mut coeffs = Vec::with_capacity(len);
        let mut window = BigInt::zero();
        for k in 0..len {
            if let Some(c) = self.coeffs.get(k) {
                window += c;
            }
            if k >= width {
                window -= &self.coeffs[k - width];
            }
            coeffs.push(window.clone());
        }
        Self::new(self.min_exp, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Membership in `N[q]`: nonnegative coefficients and no negative powers.
    pub fn is_in_nq(&self) -> bool {
        self.has_nonnegative_coeffs() && (self.is_zero() || self.min_exp >= 0)
    }

    /// The factored text form `q^{min}*(c0 + c1*q + ...)`.
    pub fn factored_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let body: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{i}"),
            })
            .collect();
        format!("q^{{{}}}*({})", self.min_exp, body.join(" + "))
    }

    fn add_scaled(&mut self, other: &QLaurent, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other } else { other.clone() };
            return;
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.drain(..).enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] = c;
        }
        let off = (other.min_exp - lo) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if negate {
                coeffs[off + i] -= c;
            } else {
                coeffs[off + i] += c;
            }
        }
        self.min_exp = lo;
        self.coeffs = coeffs;
        self.normalize();
    }
}

/// Exact quotient `num / den` in the Laurent ring `Z[q, q^-1]`.
///
/// Both operands are reduced to polynomials with nonzero constant term
/// (the `q^min` factors are units); long division then runs from the top
/// and must leave no remainder.
pub fn exact_div(num: &QLaurent, den: &QLaurent) -> Result<QLaurent> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(QLaurent::zero());
    }
    let non_exact = || Error::NonExactDivision {
        num: num.to_string(),
        den: den.to_string(),
    };
    let a = &num.coeffs;
    let b = &den.coeffs;
    if a.len() < b.len() {
        return Err(non_exact());
    }
    let lead = b.last().unwrap();
    let qlen = a.len() - b.len() + 1;
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let top = &rem[i + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return Err(non_exact());
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(non_exact());
    }
    Ok(QLaurent::new(num.min_exp - den.min_exp, quot))
}

impl fmt::Display for QLaurent {
    /// Compact form in ascending powers, e.g. `1`, `2q+2q^2`, `-q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

impl FromStr for QLaurent {
    type Err = Error;

    /// Parses the compact form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("malformed polynomial `{s}`"));
        // Split into signed terms; a '-' right after '^' or '{' belongs to the exponent.
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-')
                && bytes[i - 1] != b'^'
                && bytes[i - 1] != b'{'
            {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = QLaurent::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 {
                        BigInt::one()
                    } else {
                        body[..pos].parse::<BigInt>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else if let Some(x) = rest.strip_prefix('^') {
                        x.trim_matches(|c| c == '{' || c == '}')
                            .parse::<i64>()
                            .map_err(|_| bad())?
                    } else {
                        return Err(bad());
                    };
                    (c, e)
                }
            };
            let coeff = if neg { -coeff } else { coeff };
            acc += &QLaurent::monomial(coeff, exp);
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct QLaurentJson {
    min: i64,
    coeffs: Vec<String>,
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        QLaurentJson {
            min: self.min_exp,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = QLaurentJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QLaurent::new(raw.min, coeffs))
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        self.add_scaled(rhs, false);
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        self.add_scaled(rhs, true);
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QLaurent::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl MulAssign<&QLaurent> for QLaurent {
    fn mul_assign(&mut self, rhs: &QLaurent) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $assign:ident) => {
        impl $Trait<&QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: &QLaurent) -> QLaurent {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
    };
}
forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

macro_rules! owned_binops {
    ($Trait:ident, $method:ident) => {
        impl $Trait<QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: QLaurent) -> QLaurent {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: &QLaurent) -> QLaurent {
                (&self).$method(rhs)
            }
        }
        impl $Trait<QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: QLaurent) -> QLaurent {
                self.$method(&rhs)
            }
        }
    };
}
owned_binops!(Add, add);
owned_binops!(Sub, sub);
owned_binops!(Mul, mul);

impl AddAssign<QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: QLaurent) {
        *self += &rhs;
    }
}

impl SubAssign<QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: QLaurent) {
        *self -= &rhs;
    }
}

impl Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a QLaurent> for QLaurent {
    fn sum<I: Iterator<Item = &'a QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for QLaurent {
    fn product<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::one(), |acc, x| &acc * &x)
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        QLaurent::constant(c)
    }
}
