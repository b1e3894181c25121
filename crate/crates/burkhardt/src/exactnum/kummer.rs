use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::{Rational, Ring};
use crate::multipoly::{Polynomial, VarSet};

/// The two parameter variables s, t shared by every Kummer coefficient.
pub fn st_vars() -> &'static VarSet {
    static VARS: OnceLock<VarSet> = OnceLock::new();
    VARS.get_or_init(|| VarSet::new(["s", "t"]))
}

/// Element of the rank-4 algebra Q[s,t][sqrt(s), sqrt(t)] with basis
/// {1, sqrt(s), sqrt(t), sqrt(st)}. Components stay polynomial in s and t;
/// every computation in scope does.
///
/// Multiplication follows sqrt(s)^2 = s, sqrt(t)^2 = t,
/// sqrt(s)*sqrt(t) = sqrt(st), sqrt(s)*sqrt(st) = s*sqrt(t),
/// sqrt(t)*sqrt(st) = t*sqrt(s), sqrt(st)^2 = s*t.
#[derive(Clone, PartialEq, Eq)]
pub struct Kummer {
    /// coefficient of 1
    pub c00: Polynomial<Rational>,
    /// coefficient of sqrt(s)
    pub c10: Polynomial<Rational>,
    /// coefficient of sqrt(t)
    pub c01: Polynomial<Rational>,
    /// coefficient of sqrt(st)
    pub c11: Polynomial<Rational>,
}

impl Kummer {
    pub fn new(
        c00: Polynomial<Rational>,
        c10: Polynomial<Rational>,
        c01: Polynomial<Rational>,
        c11: Polynomial<Rational>,
    ) -> Self {
        Kummer { c00, c10, c01, c11 }
    }

    pub fn from_rational(c: Rational) -> Self {
        Kummer {
            c00: Polynomial::constant(st_vars(), c),
            c10: Polynomial::zero(st_vars()),
            c01: Polynomial::zero(st_vars()),
            c11: Polynomial::zero(st_vars()),
        }
    }

    pub fn scalar(p: Polynomial<Rational>) -> Self {
        Kummer {
            c00: p,
            c10: Polynomial::zero(st_vars()),
            c01: Polynomial::zero(st_vars()),
            c11: Polynomial::zero(st_vars()),
        }
    }

    pub fn sqrt_s() -> Self {
        let mut k = Self::zero();
        k.c10 = Polynomial::one(st_vars());
        k
    }

    pub fn sqrt_t() -> Self {
        let mut k = Self::zero();
        k.c01 = Polynomial::one(st_vars());
        k
    }

    pub fn sqrt_st() -> Self {
        let mut k = Self::zero();
        k.c11 = Polynomial::one(st_vars());
        k
    }

    pub fn var_s() -> Polynomial<Rational> {
        Polynomial::var(st_vars(), 0)
    }

    pub fn var_t() -> Polynomial<Rational> {
        Polynomial::var(st_vars(), 1)
    }

    /// The element lies in the rational (degree-0) component.
    pub fn is_scalar(&self) -> bool {
        self.c10.is_zero() && self.c01.is_zero() && self.c11.is_zero()
    }
}

impl fmt::Display for Kummer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.c00.is_zero() {
            parts.push(format!("({})", self.c00));
        }
        if !self.c10.is_zero() {
            parts.push(format!("({})*rs", self.c10));
        }
        if !self.c01.is_zero() {
            parts.push(format!("({})*rt", self.c01));
        }
        if !self.c11.is_zero() {
            parts.push(format!("({})*rst", self.c11));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for Kummer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Kummer {
    type Output = Kummer;
    fn add(self, rhs: Kummer) -> Kummer {
        Kummer {
            c00: self.c00 + rhs.c00,
            c10: self.c10 + rhs.c10,
            c01: self.c01 + rhs.c01,
            c11: self.c11 + rhs.c11,
        }
    }
}

impl Sub for Kummer {
    type Output = Kummer;
    fn sub(self, rhs: Kummer) -> Kummer {
        Kummer {
            c00: self.c00 - rhs.c00,
            c10: self.c10 - rhs.c10,
            c01: self.c01 - rhs.c01,
            c11: self.c11 - rhs.c11,
        }
    }
}

impl Neg for Kummer {
    type Output = Kummer;
    fn neg(self) -> Kummer {
        Kummer {
            c00: -self.c00,
            c10: -self.c10,
            c01: -self.c01,
            c11: -self.c11,
        }
    }
}

impl Mul for Kummer {
    type Output = Kummer;
    fn mul(self, rhs: Kummer) -> Kummer {
        let s = Self::var_s();
        let t = Self::var_t();
        let (a0, a1, a2, a3) = (self.c00, self.c10, self.c01, self.c11);
        let (b0, b1, b2, b3) = (rhs.c00, rhs.c10, rhs.c01, rhs.c11);
        let c00 = a0.clone() * b0.clone()
            + s.clone() * (a1.clone() * b1.clone())
            + t.clone() * (a2.clone() * b2.clone())
            + s.clone() * t.clone() * (a3.clone() * b3.clone());
        let c10 = a0.clone() * b1.clone()
            + a1.clone() * b0.clone()
            + t.clone() * (a2.clone() * b3.clone() + a3.clone() * b2.clone());
        let c01 = a0.clone() * b2.clone()
            + a2.clone() * b0.clone()
            + s.clone() * (a1.clone() * b3.clone() + a3.clone() * b1.clone());
        let c11 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Kummer { c00, c10, c01, c11 }
    }
}

impl Zero for Kummer {
    fn zero() -> Self {
        Kummer {
            c00: Polynomial::zero(st_vars()),
            c10: Polynomial::zero(st_vars()),
            c01: Polynomial::zero(st_vars()),
            c11: Polynomial::zero(st_vars()),
        }
    }
    fn is_zero(&self) -> bool {
        self.c00.is_zero() && self.is_scalar()
    }
}

impl One for Kummer {
    fn one() -> Self {
        Kummer::from_rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.is_scalar() && self.c00 == Polynomial::one(st_vars())
    }
}

impl Ring for Kummer {
    fn from_i64(n: i64) -> Self {
        Kummer::from_rational(Rational::from_int(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table() {
        let rs = Kummer::sqrt_s();
        let rt = Kummer::sqrt_t();
        let rst = Kummer::sqrt_st();
        // sqrt(s)*sqrt(t) = sqrt(st)
        assert_eq!(rs.clone() * rt.clone(), rst);
        // sqrt(s)^2 = s in the scalar slot
        let s_sq = rs.clone() * rs.clone();
        assert!(s_sq.is_scalar());
        assert_eq!(s_sq.c00, Kummer::var_s());
        // sqrt(st)^2 = s*t
        let st_sq = rst.clone() * rst;
        assert!(st_sq.is_scalar());
        assert_eq!(st_sq.c00, Kummer::var_s() * Kummer::var_t());
        // sqrt(s)*sqrt(st) = s*sqrt(t)
        let m = rs * Kummer::sqrt_st();
        assert!(m.c10.is_zero() && m.c00.is_zero() && m.c11.is_zero());
        assert_eq!(m.c01, Kummer::var_s());
        // (z2*sqrt(s))^2 = s*z2^2 with the scalar z2 carried by the caller
        let two_rs = Kummer::sqrt_s().mul(Kummer::from_rational(Rational::from_int(2)));
        let sq = two_rs.clone() * two_rs;
        assert!(sq.is_scalar());
        assert_eq!(sq.c00, Kummer::var_s().scale(&Rational::from_int(4)));
    }

    #[test]
    fn commutative_square_lands_in_scalar() {
        let x = Kummer::sqrt_s() + Kummer::sqrt_t();
        let y = Kummer::sqrt_st() + Kummer::one();
        assert_eq!(x.clone() * y.clone(), y * x);
    }
}
