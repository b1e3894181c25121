use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Ring};
use crate::error::Error;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Text form is `p/q` or `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational(self.0.pow(e as i32))
    }

    /// numer * denom as an integer: the integer representative of this
    /// rational's square class.
    pub fn square_class_int(&self) -> BigInt {
        self.numer() * self.denom()
    }

    /// Squarefree integer representing the class of `self` modulo nonzero
    /// rational squares. Zero maps to zero.
    pub fn square_class(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let k = super::factor::squarefree_kernel(&self.square_class_int());
        Rational(BigRational::from_integer(k))
    }

    /// Exact square root if this is a square in Q.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(Rational(BigRational::new(ns, ds)))
        } else {
            None
        }
    }

    /// Crude size measure used for deterministic pivoting: the larger of
    /// the numerator's and denominator's magnitudes.
    pub fn magnitude(&self) -> BigUint {
        let n = self.numer().magnitude();
        let d = self.denom().magnitude();
        if n >= d {
            n.clone()
        } else {
            d.clone()
        }
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid integer `{t}`"), 0))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`"), 0));
                }
                Ok(Rational::new(parse_int(n)?, denom))
            }
            None => Ok(Rational::from_bigint(parse_int(s)?)),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

/// Sign of a BigInt as -1, 0, 1.
pub(crate) fn bigint_signum(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_text() {
        let r = Rational::from_frac(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), &BigInt::from(2));
        let p: Rational = "-3/2".parse().unwrap();
        assert_eq!(p, r);
        let i: Rational = "17".parse().unwrap();
        assert_eq!(i.to_string(), "17");
    }

    #[test]
    fn square_class() {
        assert_eq!(Rational::from_frac(4, 9).square_class(), Rational::one());
        assert_eq!(
            Rational::from_frac(-8, 3).square_class(),
            Rational::from_int(-6)
        );
        assert_eq!(Rational::from_int(12).square_class(), Rational::from_int(3));
    }

    #[test]
    fn rejects_zero_denominator_text() {
        assert!("3/0".parse::<Rational>().is_err());
    }
}
