use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{Field, Rational, Ring};
use crate::error::Error;

/// Element a + b*z of Q(z), where z is the primitive cube root of unity
/// with z^2 + z + 1 = 0. No complex embedding is fixed; all identities in
/// play are algebraic. Text form is `a+b*z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo3 {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclo3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Cyclo3 { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Cyclo3::new(Rational::from_int(a), Rational::from_int(b))
    }

    pub fn rational(a: Rational) -> Self {
        Cyclo3::new(a, Rational::zero())
    }

    /// The root z itself.
    pub fn zeta() -> Self {
        Cyclo3::from_ints(0, 1)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugation, i.e. z -> z^2 = -1 - z.
    pub fn conj(&self) -> Self {
        Cyclo3::new(&self.a - &self.b, -self.b.clone())
    }

    /// x * conj(x) = a^2 - a b + b^2, always a nonnegative rational.
    pub fn norm(&self) -> Rational {
        &(&(&self.a * &self.a) - &(&self.a * &self.b)) + &(&self.b * &self.b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclo3::new(c * &self.a, c * &self.b)
    }
}

impl fmt::Display for Cyclo3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let zpart = if self.b.is_one() {
            "z".to_string()
        } else if self.b == Rational::from_int(-1) {
            "-z".to_string()
        } else {
            format!("{}*z", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{zpart}")
        } else if zpart.starts_with('-') {
            write!(f, "{}{}", self.a, zpart)
        } else {
            write!(f, "{}+{}", self.a, zpart)
        }
    }
}

impl fmt::Debug for Cyclo3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclo3 {
    type Err = Error;

    /// Accepts `a`, `b*z`, `z`, `-z`, `a+b*z`, `a-b*z` (whitespace ignored).
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic literal".into(), 0));
        }
        // split at the last top-level +/- that is not a leading sign
        let bytes = compact.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
                split = Some(i);
                break;
            }
        }
        let parse_zpart = |t: &str| -> Result<Rational, Error> {
            let t = t.strip_suffix('z').ok_or_else(|| {
                Error::Parse(format!("expected z-term in `{t}`"), 0)
            })?;
            let t = t.strip_suffix('*').unwrap_or(t);
            match t {
                "" | "+" => Ok(Rational::one()),
                "-" => Ok(-Rational::one()),
                other => other.parse(),
            }
        };
        if compact.contains('z') {
            match split {
                Some(i) if compact[i..].contains('z') => {
                    let a: Rational = compact[..i].parse()?;
                    let b = parse_zpart(&compact[i..])?;
                    Ok(Cyclo3::new(a, b))
                }
                _ => Ok(Cyclo3::new(Rational::zero(), parse_zpart(&compact)?)),
            }
        } else {
            Ok(Cyclo3::rational(compact.parse()?))
        }
    }
}

impl Add for Cyclo3 {
    type Output = Cyclo3;
    fn add(self, rhs: Cyclo3) -> Cyclo3 {
        Cyclo3::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Cyclo3 {
    type Output = Cyclo3;
    fn sub(self, rhs: Cyclo3) -> Cyclo3 {
        Cyclo3::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for Cyclo3 {
    type Output = Cyclo3;
    /// (a+bz)(c+dz) with z^2 = -z-1.
    fn mul(self, rhs: Cyclo3) -> Cyclo3 {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad_bc = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Cyclo3::new(&ac - &bd, &ad_bc - &bd)
    }
}

impl Neg for Cyclo3 {
    type Output = Cyclo3;
    fn neg(self) -> Cyclo3 {
        Cyclo3::new(-self.a, -self.b)
    }
}

impl Zero for Cyclo3 {
    fn zero() -> Self {
        Cyclo3::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Cyclo3 {
    fn one() -> Self {
        Cyclo3::rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl Ring for Cyclo3 {
    fn from_i64(n: i64) -> Self {
        Cyclo3::rational(Rational::from_int(n))
    }
}

impl Field for Cyclo3 {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        self.conj().scale(&n.inv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let z = Cyclo3::zeta();
        // z * z = -1 - z
        assert_eq!(z.clone() * z.clone(), Cyclo3::from_ints(-1, -1));
        // z^2 + z + 1 = 0
        let sq = z.clone() * z.clone();
        assert!((sq + z + Cyclo3::one()).is_zero());
    }

    #[test]
    fn sqrt_minus_three() {
        // (2z+1)^2 = -3
        let x = Cyclo3::from_ints(1, 2);
        assert_eq!(x.clone() * x, Cyclo3::from_ints(-3, 0));
    }

    #[test]
    fn rational_subring() {
        let x = Cyclo3::from_ints(5, 0);
        let y = Cyclo3::from_ints(-7, 0);
        assert_eq!(x * y, Cyclo3::from_ints(-35, 0));
    }

    #[test]
    fn conjugation() {
        let z = Cyclo3::zeta();
        assert_eq!(z.conj(), Cyclo3::from_ints(-1, -1));
        assert_eq!(Cyclo3::from_ints(5, 0).conj(), Cyclo3::from_ints(5, 0));
        let x = Cyclo3::from_ints(3, -4);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn field_inverse() {
        let x = Cyclo3::from_ints(2, 5);
        assert!( (x.clone() * x.inv()).is_one());
    }

    #[test]
    fn text_roundtrip() {
        for s in ["1+2*z", "-1/3-z", "z", "-z", "7", "0", "2/3*z"] {
            let x: Cyclo3 = s.parse().unwrap();
            let y: Cyclo3 = x.to_string().parse().unwrap();
            assert_eq!(x, y, "roundtrip failed for {s}");
        }
    }
}
