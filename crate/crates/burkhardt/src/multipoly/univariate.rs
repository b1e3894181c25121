//! Helpers for polynomials that are univariate in one designated variable:
//! Euclidean gcd, squarefree part, resultants, and exact square roots.

use num_traits::{One, Zero};

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Ring};

fn check_univariate<R: Ring>(p: &Polynomial<R>, var: usize) -> Result<()> {
    for (m, _) in p.terms_desc() {
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != var && e != 0 {
                return Err(Error::Internal(format!(
                    "polynomial is not univariate in {}",
                    p.vars().name(var)
                )));
            }
        }
    }
    Ok(())
}

/// Dense coefficient vector (ascending) of a univariate polynomial.
pub fn univariate_coeffs<R: Ring>(p: &Polynomial<R>, var: usize) -> Result<Vec<R>> {
    check_univariate(p, var)?;
    let d = p.degree_in(var) as usize;
    let mut out = vec![R::zero(); d + 1];
    for (m, c) in p.terms_desc() {
        out[m.exponent(var) as usize] = c.clone();
    }
    Ok(out)
}

pub fn univariate_from_coeffs<R: Ring>(
    p_template: &Polynomial<R>,
    var: usize,
    coeffs: &[R],
) -> Polynomial<R> {
    let vars = p_template.vars();
    let mut out = Polynomial::zero(vars);
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let mut exps = vec![0u16; vars.len()];
            exps[var] = e as u16;
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
    }
    out
}

fn dense_degree<R: Ring>(c: &[R]) -> Option<usize> {
    c.iter().rposition(|x| !x.is_zero())
}

fn dense_rem<R: Field>(num: &[R], den: &[R]) -> Vec<R> {
    let dd = dense_degree(den).expect("division by zero polynomial");
    let lc = den[dd].clone();
    let mut r = num.to_vec();
    while let Some(dr) = dense_degree(&r) {
        if dr < dd {
            break;
        }
        let q = r[dr].clone() * lc.inv();
        for i in 0..=dd {
            let idx = dr - dd + i;
            r[idx] = r[idx].clone() - q.clone() * den[i].clone();
        }
        r[dr] = R::zero();
    }
    r
}

fn dense_monic<R: Field>(c: &mut Vec<R>) {
    if let Some(d) = dense_degree(c) {
        let lc = c[d].clone();
        let inv = lc.inv();
        for x in c.iter_mut() {
            *x = x.clone() * inv.clone();
        }
    }
    while c.len() > 1 && c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
}

/// Monic gcd of two polynomials univariate in `var`.
pub fn univariate_gcd<R: Field>(
    p: &Polynomial<R>,
    q: &Polynomial<R>,
    var: usize,
) -> Result<Polynomial<R>> {
    let mut a = univariate_coeffs(p, var)?;
    let mut b = univariate_coeffs(q, var)?;
    loop {
        if dense_degree(&b).is_none() {
            dense_monic(&mut a);
            return Ok(univariate_from_coeffs(p, var, &a));
        }
        let r = dense_rem(&a, &b);
        a = b;
        b = r;
    }
}

/// p divided by gcd(p, p'), normalized monic: the squarefree part.
pub fn univariate_squarefree_part<R: Field>(
    p: &Polynomial<R>,
    var: usize,
) -> Result<Polynomial<R>> {
    let dp = p.partial_derivative_idx(var);
    if dp.is_zero() {
        return Ok(Polynomial::one(p.vars()));
    }
    let g = univariate_gcd(p, &dp, var)?;
    let num = univariate_coeffs(p, var)?;
    let den = univariate_coeffs(&g, var)?;
    let mut quo = dense_div_exact(&num, &den)?;
    dense_monic(&mut quo);
    Ok(univariate_from_coeffs(p, var, &quo))
}

fn dense_div_exact<R: Field>(num: &[R], den: &[R]) -> Result<Vec<R>> {
    let dd = dense_degree(den).ok_or_else(|| Error::Internal("division by zero".into()))?;
    let dn = match dense_degree(num) {
        None => return Ok(vec![R::zero()]),
        Some(d) => d,
    };
    if dn < dd {
        return Err(Error::Internal("inexact polynomial division".into()));
    }
    let lc = den[dd].clone();
    let mut r = num.to_vec();
    let mut q = vec![R::zero(); dn - dd + 1];
    while let Some(dr) = dense_degree(&r) {
        if dr < dd {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        let f = r[dr].clone() * lc.inv();
        q[dr - dd] = f.clone();
        for i in 0..=dd {
            let idx = dr - dd + i;
            r[idx] = r[idx].clone() - f.clone() * den[i].clone();
        }
        r[dr] = R::zero();
    }
    Ok(q)
}

/// Resultant of two polynomials univariate in `var`, via the Sylvester
/// matrix determinant over the coefficient field.
pub fn univariate_resultant<R: Field>(
    p: &Polynomial<R>,
    q: &Polynomial<R>,
    var: usize,
) -> Result<R> {
    let a = univariate_coeffs(p, var)?;
    let b = univariate_coeffs(q, var)?;
    let da = dense_degree(&a).ok_or_else(|| Error::Internal("resultant with zero".into()))?;
    let db = dense_degree(&b).ok_or_else(|| Error::Internal("resultant with zero".into()))?;
    if da == 0 {
        return Ok(crate::matrix::ring_pow(&a[0], db as u32));
    }
    if db == 0 {
        return Ok(crate::matrix::ring_pow(&b[0], da as u32));
    }
    let n = da + db;
    let mut m = vec![vec![R::zero(); n]; n];
    for row in 0..db {
        for (j, c) in a.iter().enumerate().take(da + 1) {
            m[row][row + da - j] = c.clone();
        }
    }
    for row in 0..da {
        for (j, c) in b.iter().enumerate().take(db + 1) {
            m[db + row][row + db - j] = c.clone();
        }
    }
    Ok(field_det(m))
}

fn field_det<R: Field>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    let mut det = R::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else {
            return R::zero();
        };
        if pr != col {
            m.swap(pr, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det = det * pv.clone();
        let inv = pv.inv();
        for r in col + 1..n {
            let f = m[r][col].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                m[r][c] = m[r][c].clone() - f.clone() * m[col][c].clone();
            }
        }
    }
    det
}

/// Exact square root of a multivariate rational polynomial, if it is a
/// perfect square.
pub fn rational_poly_sqrt(p: &Polynomial<Rational>) -> Option<Polynomial<Rational>> {
    if p.is_zero() {
        return Some(p.clone());
    }
    let (lm, lc) = p.leading()?;
    if lm.exponents().iter().any(|&e| e % 2 != 0) {
        return None;
    }
    let lc_sqrt = lc.sqrt_exact()?;
    let half = Monomial::from_exponents(lm.exponents().iter().map(|&e| e / 2).collect());
    let deg_bound = p.total_degree() / 2;
    let mut root = Polynomial::monomial(p.vars(), half.clone(), lc_sqrt.clone());
    let two_lead = Polynomial::monomial(
        p.vars(),
        half,
        &Rational::from_int(2) * &lc_sqrt,
    );
    let mut guard = 0usize;
    loop {
        let diff = p.clone() - root.clone() * root.clone();
        if diff.is_zero() {
            return Some(root);
        }
        guard += 1;
        if guard > 20_000 {
            return None;
        }
        let (dm, dc) = diff.leading()?;
        // correction = leading(diff) / (2 * leading(root))
        let (tm, tc) = two_lead.leading()?;
        let mut exps = Vec::with_capacity(dm.exponents().len());
        for (&a, &b) in dm.exponents().iter().zip(tm.exponents()) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        let corr = Polynomial::monomial(
            p.vars(),
            Monomial::from_exponents(exps),
            dc.clone() * tc.inv(),
        );
        if corr.total_degree() > deg_bound {
            return None;
        }
        root = root + corr;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse::parse_polynomial;
    use crate::multipoly::VarSet;

    #[test]
    fn gcd_and_squarefree() {
        let v = VarSet::new(["t"]);
        let p: Polynomial<Rational> =
            parse_polynomial(&v, "t^4 + -2*t^3 + 2*t + -1").unwrap(); // (t-1)^3 (t+1)
        let sf = univariate_squarefree_part(&p, 0).unwrap();
        let expect: Polynomial<Rational> = parse_polynomial(&v, "t^2 + -1").unwrap();
        assert_eq!(sf, expect);
    }

    #[test]
    fn resultant_shared_root() {
        let v = VarSet::new(["t"]);
        let p: Polynomial<Rational> = parse_polynomial(&v, "t^2 + -1").unwrap();
        let q: Polynomial<Rational> = parse_polynomial(&v, "t^2 + -3*t + 2").unwrap();
        // share root t=1
        assert!(univariate_resultant(&p, &q, 0).unwrap().is_zero());
        let q2: Polynomial<Rational> = parse_polynomial(&v, "t + -3").unwrap();
        assert!(!univariate_resultant(&p, &q2, 0).unwrap().is_zero());
    }

    #[test]
    fn poly_sqrt() {
        let v = VarSet::new(["x", "y"]);
        let r: Polynomial<Rational> = parse_polynomial(&v, "2*x^2 + -3*x*y + 1/2*y^2 + 5").unwrap();
        let sq = r.clone() * r.clone();
        let back = rational_poly_sqrt(&sq).unwrap();
        // square root is determined up to sign; normalize on leading coefficient
        assert!(back == r || back == -r);
        let not_square: Polynomial<Rational> = parse_polynomial(&v, "x^2 + y").unwrap();
        assert!(rational_poly_sqrt(&not_square).is_none());
    }
}
