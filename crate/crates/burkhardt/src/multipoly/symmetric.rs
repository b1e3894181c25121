//! Symmetric-function reduction: Newton identities between power sums and
//! elementary symmetric functions, and rewriting of symmetric polynomials
//! in terms of e_1..e_n by lexicographic leading-term descent.

use num_traits::{One, Zero};

use super::{Monomial, Polynomial, VarSet};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Ring};

/// Power sums p_0..p_upto of n quantities from their elementary symmetric
/// values e_1..e_n (Newton's identities; no roots are constructed).
pub fn newton_power_sums(elem: &[Rational], upto: usize) -> Vec<Rational> {
    let n = elem.len();
    let e = |i: usize| -> Rational {
        if i == 0 {
            Rational::one()
        } else if i <= n {
            elem[i - 1].clone()
        } else {
            Rational::zero()
        }
    };
    let mut p: Vec<Rational> = vec![Rational::from_int(n as i64)];
    for k in 1..=upto {
        // p_k = sum_{i=1..min(k,n)} (-1)^(i-1) e_i p_{k-i}  (+ (-1)^(k-1) k e_k when k <= n)
        let mut acc = Rational::zero();
        for i in 1..=k.min(n) {
            if i == k {
                break;
            }
            let term = &e(i) * &p[k - i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        if k <= n {
            let term = &Rational::from_int(k as i64) * &e(k);
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    p
}

/// Elementary symmetric values e_1..e_m from power sums p_1..p_m over any
/// coefficient field (inverse Newton identities).
pub fn elementary_from_power_sums<R: Field>(p: &[R], m: usize) -> Vec<R> {
    assert!(p.len() >= m, "need p_1..p_{m}");
    let mut e: Vec<R> = Vec::with_capacity(m);
    for k in 1..=m {
        // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i, with e_0 = 1
        let mut acc = R::zero();
        for i in 1..=k {
            let prev = if k - i == 0 {
                R::one()
            } else {
                e[k - i - 1].clone()
            };
            let term = prev * p[i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc * R::from_i64(k as i64).inv());
    }
    e
}

/// Outcome of reducing a symmetric polynomial to the elementary basis.
pub struct SymmetricReduction {
    /// Polynomial in the elementary variables e1..en.
    pub in_elementary: Polynomial<Rational>,
    /// The elementary symmetric polynomials used, for round-trip expansion.
    pub elementary: Vec<Polynomial<Rational>>,
}

impl SymmetricReduction {
    /// Expand the reduced polynomial back into the original variables.
    pub fn expand(&self) -> Result<Polynomial<Rational>> {
        self.in_elementary.substitute(&self.elementary)
    }
}

/// Elementary symmetric polynomial e_k of the given ambient ring variables.
pub fn elementary_symmetric(vars: &VarSet, k: usize) -> Polynomial<Rational> {
    let n = vars.len();
    assert!(k >= 1 && k <= n);
    let mut out = Polynomial::zero(vars);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut exps = vec![0u16; n];
        for &i in &subset {
            exps[i] = 1;
        }
        out.add_term(Monomial::from_exponents(exps), Rational::one());
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn lex_leading(p: &Polynomial<Rational>) -> Option<(Monomial, Rational)> {
    p.terms_desc()
        .max_by(|(m1, _), (m2, _)| {
            for (a, b) in m1.exponents().iter().zip(m2.exponents()) {
                match a.cmp(b) {
                    std::cmp::Ordering::Equal => {}
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
        .map(|(m, c)| (m.clone(), c.clone()))
}

/// Verify invariance of p under the n-1 adjacent transpositions, which
/// generate the full symmetric group on the ambient variables.
pub fn check_symmetric(p: &Polynomial<Rational>) -> Result<()> {
    let n = p.nvars();
    for i in 0..n.saturating_sub(1) {
        let mut swapped = Polynomial::zero(p.vars());
        for (m, c) in p.terms_desc() {
            let mut e = m.exponents().to_vec();
            e.swap(i, i + 1);
            swapped.add_term(Monomial::from_exponents(e), c.clone());
        }
        if &swapped != p {
            return Err(Error::NotSymmetric(i, i + 1));
        }
    }
    Ok(())
}

/// Rewrite a symmetric polynomial in n variables as a polynomial in the
/// elementary symmetric functions e1..en. The elementary variables are
/// named `e1`..`en`. Fails if the input is not symmetric.
pub fn symmetric_reduce(p: &Polynomial<Rational>) -> Result<SymmetricReduction> {
    check_symmetric(p)?;
    let n = p.nvars();
    let evars = VarSet::new((1..=n).map(|i| format!("e{i}")));
    let elementary: Vec<Polynomial<Rational>> =
        (1..=n).map(|k| elementary_symmetric(p.vars(), k)).collect();

    let mut rest = p.clone();
    let mut out = Polynomial::zero(&evars);
    // cache of expanded powers of each elementary polynomial
    let mut pow_cache: Vec<Vec<Polynomial<Rational>>> = elementary
        .iter()
        .map(|e| vec![Polynomial::one(p.vars()), e.clone()])
        .collect();

    while !rest.is_zero() {
        let (m, c) = lex_leading(&rest).unwrap();
        let lam = m.exponents();
        // symmetry forces a weakly decreasing leading exponent vector
        for w in lam.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Internal(
                    "leading exponents of a symmetric polynomial must be sorted".into(),
                ));
            }
        }
        // e-exponents: nu_i = lam_i - lam_{i+1}, nu_n = lam_n
        let mut nu = vec![0u16; n];
        for i in 0..n {
            nu[i] = if i + 1 < n { lam[i] - lam[i + 1] } else { lam[i] };
        }
        out.add_term(Monomial::from_exponents(nu.clone()), c.clone());
        // subtract c * prod e_i^{nu_i} expanded in the original variables
        let mut expanded = Polynomial::constant(p.vars(), c);
        for (i, &e) in nu.iter().enumerate() {
            if e == 0 {
                continue;
            }
            while pow_cache[i].len() <= e as usize {
                let last = pow_cache[i].last().unwrap().clone();
                pow_cache[i].push(last * elementary[i].clone());
            }
            expanded = expanded * pow_cache[i][e as usize].clone();
        }
        rest = rest - expanded;
    }
    Ok(SymmetricReduction {
        in_elementary: out,
        elementary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse::parse_polynomial;

    fn bvars(n: usize) -> VarSet {
        VarSet::new((1..=n).map(|i| format!("b{i}")))
    }

    #[test]
    fn power_sums_of_sixth_roots_of_unity() {
        // roots of T^6 - 1: e1..e5 = 0, e6 = -1
        let elem = vec![
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::from_int(-1),
        ];
        let p = newton_power_sums(&elem, 6);
        assert_eq!(p[0], Rational::from_int(6));
        for k in 1..=5 {
            assert!(p[k].is_zero(), "p{k} should vanish");
        }
        assert_eq!(p[6], Rational::from_int(6));
    }

    #[test]
    fn newton_roundtrip_random_values() {
        let elem: Vec<Rational> = [3, -7, 2, 5, -1, 4]
            .iter()
            .map(|&n| Rational::from_int(n))
            .collect();
        let p = newton_power_sums(&elem, 6);
        let back = elementary_from_power_sums(&p[1..], 6);
        assert_eq!(back, elem);
    }

    #[test]
    fn reduce_e1() {
        let v = bvars(6);
        let p: Polynomial<Rational> =
            parse_polynomial(&v, "b1 + b2 + b3 + b4 + b5 + b6").unwrap();
        let red = symmetric_reduce(&p).unwrap();
        assert_eq!(red.in_elementary.to_string(), "e1");
        assert_eq!(red.expand().unwrap(), p);
    }

    #[test]
    fn reduce_sum_of_squares() {
        let v = bvars(4);
        let p: Polynomial<Rational> =
            parse_polynomial(&v, "b1^2 + b2^2 + b3^2 + b4^2").unwrap();
        let red = symmetric_reduce(&p).unwrap();
        assert_eq!(red.in_elementary.to_string(), "e1^2 + -2*e2");
        assert_eq!(red.expand().unwrap(), p);
    }

    #[test]
    fn reduce_power_sum_p5_roundtrip() {
        let v = bvars(6);
        let p: Polynomial<Rational> =
            parse_polynomial(&v, "b1^5 + b2^5 + b3^5 + b4^5 + b5^5 + b6^5").unwrap();
        let red = symmetric_reduce(&p).unwrap();
        assert_eq!(red.expand().unwrap(), p);
        // cross-check against Newton power sums with symbolic elementaries:
        // evaluate both at a concrete root multiset {1,2,3,4,5,6}
        let roots: Vec<Rational> = (1..=6).map(Rational::from_int).collect();
        let direct: Rational = p.evaluate(&roots).unwrap();
        let elem_vals: Vec<Rational> = red
            .elementary
            .iter()
            .map(|e| e.evaluate(&roots).unwrap())
            .collect();
        let via_e = red.in_elementary.evaluate(&elem_vals).unwrap();
        assert_eq!(direct, via_e);
    }

    #[test]
    fn rejects_asymmetric() {
        let v = bvars(3);
        let p: Polynomial<Rational> = parse_polynomial(&v, "b1^2 + b2 + b3").unwrap();
        assert!(matches!(symmetric_reduce(&p), Err(Error::NotSymmetric(_, _))));
    }
}
