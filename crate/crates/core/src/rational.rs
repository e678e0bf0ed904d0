//! Arbitrary-precision rationals, always stored reduced with a positive
//! denominator.
//!
//! The canonical text form is `p/q` with `q > 1` and `gcd(|p|, q) = 1`, or a
//! bare integer `p` when `q = 1`. Parsing is strict: it accepts `p/1` but
//! rejects unreduced fractions, signed or zero denominators, leading zeros,
//! `+` signs and `-0`, so every accepted string names exactly one value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Why a string is not a canonical rational.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty string")]
    Empty,
    #[error("invalid numerator {0:?}")]
    InvalidNumerator(String),
    #[error("invalid denominator {0:?}")]
    InvalidDenominator(String),
    #[error("denominator must be positive, got {0:?}")]
    NegativeDenominator(String),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("{num}/{den} is not reduced (common factor {gcd})")]
    NotReduced { num: String, den: String, gcd: String },
}

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in reduced form. Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// True iff the stored form is reduced with a positive denominator.
    pub fn is_canonical(&self) -> bool {
        self.denom().is_positive() && self.numer().gcd(self.denom()).is_one()
    }

    /// Total bit length of numerator and denominator.
    pub fn bits(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Decimal rendering with `digits` significant digits, rounding
    /// half-to-even on the exact value. Never uses exponent notation.
    pub fn to_decimal(&self, digits: u32) -> String {
        assert!(digits > 0, "at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let num = self.numer().abs();
        let den = self.denom().clone();
        let ten = BigInt::from(10u32);

        // Find e with 10^e <= |v| < 10^(e+1).
        let mut exp: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
        let ge_pow = |e: i64| -> bool {
            if e >= 0 {
                num >= &den * ten.pow(e as u32)
            } else {
                &num * ten.pow((-e) as u32) >= den
            }
        };
        while !ge_pow(exp) {
            exp -= 1;
        }
        while ge_pow(exp + 1) {
            exp += 1;
        }

        // mantissa = round(|v| * 10^(digits-1-exp))
        let shift = digits as i64 - 1 - exp;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&num * ten.pow(shift as u32), den)
        } else {
            (num, den * ten.pow((-shift) as u32))
        };
        let (mut mantissa, rem) = scaled_num.div_rem(&scaled_den);
        match (&rem * 2u32).cmp(&scaled_den) {
            Ordering::Greater => mantissa += 1u32,
            Ordering::Equal if mantissa.is_odd() => mantissa += 1u32,
            _ => {}
        }
        let mut shift = shift;
        if mantissa == ten.pow(digits) {
            mantissa /= 10u32;
            shift -= 1;
        }

        let mut body = mantissa.to_string();
        let text = if shift <= 0 {
            body.extend(std::iter::repeat_n('0', (-shift) as usize));
            body
        } else {
            let shift = shift as usize;
            if body.len() <= shift {
                let pad = "0".repeat(shift - body.len());
                body = format!("0.{pad}{body}");
            } else {
                body.insert(body.len() - shift, '.');
            }
            let trimmed = body.trim_end_matches('0').trim_end_matches('.');
            trimmed.to_string()
        };
        if self.is_negative() {
            format!("-{text}")
        } else {
            text
        }
    }
}

fn parse_numerator(text: &str) -> Result<BigInt, RationalParseError> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    let well_formed = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && !(digits.len() > 1 && digits.starts_with('0'))
        && !(text.starts_with('-') && digits == "0");
    if !well_formed {
        return Err(RationalParseError::InvalidNumerator(text.to_string()));
    }
    text.parse()
        .map_err(|_| RationalParseError::InvalidNumerator(text.to_string()))
}

fn parse_denominator(text: &str) -> Result<BigInt, RationalParseError> {
    if let Some(rest) = text.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RationalParseError::NegativeDenominator(text.to_string()));
        }
        return Err(RationalParseError::InvalidDenominator(text.to_string()));
    }
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError::InvalidDenominator(text.to_string()));
    }
    if text.bytes().all(|b| b == b'0') {
        return Err(RationalParseError::ZeroDenominator);
    }
    if text.starts_with('0') {
        return Err(RationalParseError::InvalidDenominator(text.to_string()));
    }
    text.parse()
        .map_err(|_| RationalParseError::InvalidDenominator(text.to_string()))
}

impl FromStr for Rational {
    type Err = RationalParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(RationalParseError::Empty);
        }
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_numerator(s)?)),
            Some((n, d)) => {
                let num = parse_numerator(n)?;
                let den = parse_denominator(d)?;
                let gcd = num.gcd(&den);
                if !gcd.is_one() {
                    return Err(RationalParseError::NotReduced {
                        num: n.to_string(),
                        den: d.to_string(),
                        gcd: gcd.to_string(),
                    });
                }
                Ok(Rational(BigRational::new_raw(num, den)))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::from_integer(value)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'b> $trait<&'b Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
