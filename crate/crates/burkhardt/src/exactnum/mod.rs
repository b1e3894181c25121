//! Exact coefficient rings: arbitrary-precision rationals, the cyclotomic
//! ring Q(z) with z^2 + z + 1 = 0, and the rank-4 Kummer algebra over
//! Q[s,t] with basis {1, sqrt(s), sqrt(t), sqrt(st)}.

mod cyclo;
mod factor;
mod kummer;
mod rational;

pub use cyclo::Cyclo3;
pub use factor::{factor, is_prime, squarefree_kernel};
pub use kummer::Kummer;
pub use rational::Rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring with exact arithmetic, suitable as a polynomial
/// coefficient domain. All implementors are immutable value types.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;
}

/// Rings with exact division by nonzero elements.
pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv()
    }
}
