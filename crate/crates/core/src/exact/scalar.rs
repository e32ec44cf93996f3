//! The scalar abstraction shared by every module.
//!
//! All geometry in this crate is exact. [`Scalar`] is implemented for
//! `Ratio<I>` over any signed integer type with integer square roots, which
//! covers `BigRational` (the default used by the CLI) as well as the
//! fixed-width `Rational64` / `Ratio<i128>` for callers who know their
//! coordinates stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};

/// An exact ordered field element with access to its integer parts.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + FromStr + Num + Signed + Send + Sync + 'static
{
    /// Underlying integer ring.
    type Int: Integer + Signed + Roots + Clone + Debug + Display;

    fn from_int(n: Self::Int) -> Self;
    fn from_i64(n: i64) -> Self;
    fn numer_int(&self) -> Self::Int;
    /// Always positive.
    fn denom_int(&self) -> Self::Int;
    fn int_from_i64(n: i64) -> Self::Int;

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }

    fn is_integer(&self) -> bool {
        self.denom_int().is_one()
    }

    /// Largest integer not exceeding `self`.
    fn floor_int(&self) -> Self::Int {
        self.numer_int().div_floor(&self.denom_int())
    }

    /// Smallest integer not below `self`.
    fn ceil_int(&self) -> Self::Int {
        self.numer_int().div_ceil(&self.denom_int())
    }

    fn floor(&self) -> Self {
        Self::from_int(self.floor_int())
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Signed
        + Roots
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + From<i64>
        + Send
        + Sync
        + 'static,
{
    type Int = I;

    fn from_int(n: I) -> Self {
        Ratio::from_integer(n)
    }

    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(I::from(n))
    }

    fn numer_int(&self) -> I {
        self.numer().clone()
    }

    fn denom_int(&self) -> I {
        self.denom().clone()
    }

    fn int_from_i64(n: i64) -> I {
        I::from(n)
    }
}

/// `floor(sqrt(x))` for a non-negative scalar, as an integer.
pub fn floor_sqrt<T: Scalar>(x: &T) -> T::Int {
    if !x.is_positive() {
        return T::Int::zero();
    }
    // k^2 <= x  <=>  k^2 <= floor(x) for integer k
    x.floor_int().sqrt()
}

/// Parse a rational written as `p/q` or `p`, with surrounding whitespace allowed.
pub fn parse_scalar<T: Scalar>(text: &str) -> Option<T> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return None;
    }
    if let Some((n, d)) = trimmed.split_once('/') {
        let n = T::from_str(n.trim()).ok()?;
        let d = T::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    T::from_str(trimmed).ok()
}

/// Render a scalar as a decimal string with at most `digits` fractional digits.
///
/// Returns the string and whether it is exact.
pub fn to_decimal<T: Scalar>(x: &T, digits: usize) -> (String, bool) {
    let negative = x.is_negative();
    let a = x.abs();
    let whole = a.floor_int();
    let mut rem = a.numer_int() - whole.clone() * a.denom_int();
    let den = a.denom_int();
    let ten = T::int_from_i64(10);
    let mut frac = String::new();
    while !rem.is_zero() && frac.len() < digits {
        rem = rem * ten.clone();
        let (q, r) = rem.div_rem(&den);
        frac.push_str(&q.to_string());
        rem = r;
    }
    let exact = rem.is_zero();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if !frac.is_empty() {
        out.push('.');
        out.push_str(&frac);
    }
    (out, exact)
}

/// True when the reduced denominator has no prime factors other than 2 and 5.
pub fn has_terminating_decimal<T: Scalar>(x: &T) -> bool {
    let mut d = x.denom_int();
    for p in [2i64, 5] {
        let p = T::int_from_i64(p);
        while (d.clone() % p.clone()).is_zero() {
            d = d / p.clone();
        }
    }
    d.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_rational::Rational64;

    #[test]
    fn parses_fractions_and_integers() {
        let x: Rational = parse_scalar("3/4").unwrap();
        assert_eq!(x, Rational::from_frac(3, 4));
        let y: Rational = parse_scalar(" -2 ").unwrap();
        assert_eq!(y, Rational::from_i64(-2));
        let z: Rational = parse_scalar("6/8").unwrap();
        assert_eq!(z.to_string(), "3/4");
        assert!(parse_scalar::<Rational>("1/0").is_none());
        assert!(parse_scalar::<Rational>("x").is_none());
        assert!(parse_scalar::<Rational>("").is_none());
    }

    #[test]
    fn floor_and_ceil() {
        let x = Rational64::from_frac(-7, 2);
        assert_eq!(x.floor_int(), -4);
        assert_eq!(x.ceil_int(), -3);
        assert_eq!(floor_sqrt(&Rational64::from_frac(17, 2)), 2);
        assert_eq!(floor_sqrt(&Rational64::from_i64(9)), 3);
    }

    #[test]
    fn decimals() {
        let x = Rational::from_frac(-5, 4);
        assert_eq!(to_decimal(&x, 10), ("-1.25".to_string(), true));
        assert!(has_terminating_decimal(&x));
        let third = Rational::from_frac(1, 3);
        let (s, exact) = to_decimal(&third, 4);
        assert_eq!(s, "0.3333");
        assert!(!exact);
        assert!(!has_terminating_decimal(&third));
    }
}
