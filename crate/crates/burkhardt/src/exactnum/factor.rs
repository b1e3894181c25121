//! Integer factorization support for square-class reduction and for
//! locating the ramified places of a quaternion symbol.
//!
//! Trial division up to a fixed bound, then Miller-Rabin plus Brent's
//! variant of Pollard rho for the cofactor. The inputs arising here are
//! diagonal conic entries after content reduction; they are far below
//! cryptographic sizes.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_BOUND: u64 = 100_000;

/// Deterministic witness set: correct for all n < 3.3 * 10^24, and a strong
/// probable-prime test beyond that.
const MR_WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in MR_WITNESSES.iter() {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of a composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    for c in 1u64..64 {
        let c = BigUint::from(c);
        let mut y = BigUint::from(2u32);
        let mut d = one.clone();
        let (mut x, mut ys) = (y.clone(), y.clone());
        let mut r: u64 = 1;
        let m: u64 = 128;
        while d.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k: u64 = 0;
            while k < r && d.is_one() {
                ys = y.clone();
                let mut q = one.clone();
                for _ in 0..m.min(r - k) {
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                d = q.gcd(n);
                k += m;
            }
            r *= 2;
            // cycle cap per c; try the next polynomial offset
            if r > (1 << 24) {
                break;
            }
        }
        if d == *n {
            // backtrack
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                d = diff.gcd(n);
                if !d.is_one() {
                    break;
                }
            }
        }
        if !d.is_one() && d != *n {
            return d;
        }
    }
    panic!("failed to factor {n}: composite resisted rho");
}

fn factor_into(n: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        push_prime(out, n, 1);
        return;
    }
    let d = pollard_brent(&n);
    let q = &n / &d;
    factor_into(d, out);
    factor_into(q, out);
}

fn push_prime(out: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    for (q, k) in out.iter_mut() {
        if *q == p {
            *k += e;
            return;
        }
    }
    out.push((p, e));
}

/// Prime factorization of |n| for nonzero n, sorted by prime.
pub fn factor(n: &BigInt) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "factor(0)");
    let mut m = n.magnitude().clone();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p <= TRIAL_BOUND {
        if m.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        if (&m % &bp).is_zero() {
            let mut e = 0u32;
            while (&m % &bp).is_zero() {
                m /= &bp;
                e += 1;
            }
            push_prime(&mut out, bp, e);
        }
        // after 2 and 3, step over multiples of 2 and 3
        p = match p {
            2 => 3,
            3 => 5,
            _ => {
                if p % 6 == 5 {
                    p + 2
                } else {
                    p + 4
                }
            }
        };
    }
    if !m.is_one() {
        factor_into(m, &mut out);
    }
    out.sort();
    out
}

/// The squarefree kernel of n: the product of primes dividing n to an odd
/// power, with the sign of n. This is the canonical integer representative
/// of n modulo squares.
pub fn squarefree_kernel(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "square class of 0");
    let mut k = BigInt::one();
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            k *= BigInt::from(p);
        }
    }
    if n.is_negative() {
        -k
    } else {
        k
    }
}

/// Odd part and 2-adic valuation of n (n must be nonzero).
pub fn two_adic_split(n: &BigInt) -> (u64, BigInt) {
    assert!(!n.is_zero());
    let v = n.magnitude().trailing_zeros().unwrap_or(0);
    (v, n >> v)
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: &BigUint) -> (u32, BigInt) {
    assert!(!n.is_zero());
    let pb = BigInt::from(p.clone());
    let mut m = n.clone();
    let mut v = 0u32;
    loop {
        let (q, r) = m.div_rem(&pb);
        if r.is_zero() {
            m = q;
            v += 1;
        } else {
            return (v, m);
        }
    }
}

#[allow(dead_code)]
pub fn to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(&BigUint::from(2u32)));
        assert!(is_prime(&BigUint::from(1_000_003u64)));
        assert!(!is_prime(&BigUint::from(1_000_001u64)));
        assert!(is_prime(&"170141183460469231731687303715884105727".parse().unwrap()));
    }

    #[test]
    fn factors_semiprime() {
        // 15-digit semiprime, beyond the trial bound
        let n = BigInt::from(1_000_003i64) * BigInt::from(999_983i64);
        let f = factor(&n);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].0, BigUint::from(999_983u64));
        assert_eq!(f[1].0, BigUint::from(1_000_003u64));
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_kernel(&BigInt::from(-12)), BigInt::from(-3));
        assert_eq!(squarefree_kernel(&BigInt::from(360)), BigInt::from(10));
        assert_eq!(squarefree_kernel(&BigInt::from(1)), BigInt::from(1));
    }
}
