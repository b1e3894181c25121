//! Sparse multivariate polynomial engine over any exact coefficient ring.
//!
//! Terms are kept in a BTreeMap keyed by graded reverse lexicographic
//! monomial order, so printing and equality are canonical and runs are
//! bit-reproducible.

mod linmap;
mod parse;
mod symmetric;
mod univariate;

pub use linmap::LinearMap;
pub use symmetric::{
    elementary_from_power_sums, newton_power_sums, symmetric_reduce, SymmetricReduction,
};
pub use univariate::{univariate_gcd, univariate_resultant, univariate_squarefree_part};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};

/// Ordered list of variable names fixing the ambient polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn joined(&self) -> String {
        self.0.join(",")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet[{}]", self.joined())
    }
}

/// Exponent vector; length always equals the ambient variable count.
/// Ordered by graded reverse lexicographic comparison.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic: higher total degree wins; on ties the
    /// monomial with the *smaller* exponent at the last differing variable
    /// is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Sparse multivariate polynomial over the ring R.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<R: Ring> {
    vars: VarSet,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: R) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, R::one())
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), R::one());
        p
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, i))
    }

    pub fn monomial(vars: &VarSet, mon: Monomial, c: R) -> Self {
        assert_eq!(mon.exponents().len(), vars.len(), "monomial arity");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(mon, c);
        }
        p
    }

    /// Build from (coefficient, exponent-vector) pairs.
    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (R, Vec<u16>)>) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            p.add_term(Monomial::from_exponents(e), c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending grevlex order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, mon: &Monomial) -> R {
        self.terms.get(mon).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of the monomial given by exponents.
    pub fn coeff_of(&self, exps: &[u16]) -> R {
        self.coeff(&Monomial::from_exponents(exps.to_vec()))
    }

    pub fn leading(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, mon: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mon) {
            None => {
                self.terms.insert(mon, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(mon, s);
                }
            }
        }
    }

    fn assert_same_ambient(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "ambient variable sets differ: [{}] vs [{}]",
            self.vars.joined(),
            other.vars.joined()
        );
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch(
                self.vars.joined(),
                other.vars.joined(),
            ));
        }
        Ok(self.clone() + other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch(
                self.vars.joined(),
                other.vars.joined(),
            ));
        }
        Ok(self.clone() * other.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut exp = e;
        let mut acc = Self::one(&self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        let i = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.partial_derivative_idx(i))
    }

    pub fn partial_derivative_idx(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(
                Monomial::from_exponents(exps),
                c.clone() * R::from_i64(e as i64),
            );
        }
        out
    }

    /// Exact evaluation at a full coordinate vector.
    pub fn evaluate(&self, coords: &[R]) -> Result<R> {
        if coords.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: coords.len(),
            });
        }
        // cached powers per variable
        let mut pows: Vec<Vec<R>> = coords.iter().map(|c| vec![R::one(), c.clone()]).collect();
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let last = pows[i].last().unwrap().clone();
                    pows[i].push(last * coords[i].clone());
                }
                t = t * pows[i][e as usize].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// General substitution: variable i is replaced by `images[i]`. All
    /// images must share one ambient ring, which becomes the result's.
    pub fn substitute(&self, images: &[Polynomial<R>]) -> Result<Polynomial<R>> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => self.vars.clone(),
        };
        for p in images {
            if p.vars != target {
                return Err(Error::AmbientMismatch(target.joined(), p.vars.joined()));
            }
        }
        let mut pows: Vec<Vec<Polynomial<R>>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let last = pows[i].last().unwrap().clone();
                    pows[i].push(last * images[i].clone());
                }
                t = t * pows[i][e as usize].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Map coefficients into another ring, dropping zeros.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Rewrites every occurrence of `lead_var^k` (k = the relation's degree
    /// in `lead_var`) using the relation, until the degree in `lead_var`
    /// drops below k. The relation must be monic in that power: its leading
    /// coefficient with respect to `lead_var` must be a nonzero constant.
    pub fn reduce_by_relation(&self, lead_var: &str, relation: &Polynomial<R>) -> Result<Self>
    where
        R: Field,
    {
        self.assert_ambient_result(relation)?;
        let vi = self
            .vars
            .index_of(lead_var)
            .ok_or_else(|| Error::UnknownVariable(lead_var.to_string()))?;
        let k = relation.degree_in(vi);
        if k == 0 {
            return Err(Error::NotMonicRelation(lead_var.to_string()));
        }
        // leading coefficient of the relation in lead_var must be constant
        let mut lead_coef: Option<R> = None;
        for (m, c) in &relation.terms {
            if m.exponent(vi) == k {
                let mut rest = m.exponents().to_vec();
                rest[vi] = 0;
                if rest.iter().any(|&e| e != 0) {
                    return Err(Error::NotMonicRelation(lead_var.to_string()));
                }
                lead_coef = Some(c.clone());
            }
        }
        let lc = lead_coef.ok_or_else(|| Error::NotMonicRelation(lead_var.to_string()))?;
        // monic rewrite rule: lead_var^k = tail, tail = lead_var^k - relation/lc
        let lv_pow = Polynomial::var(&self.vars, vi).pow(k as u32);
        let tail = lv_pow - relation.scale(&lc.inv());

        let mut p = self.clone();
        loop {
            // find a term with lead_var exponent >= k (take the largest)
            let target = p
                .terms
                .iter()
                .rev()
                .find(|(m, _)| m.exponent(vi) >= k)
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = target else {
                return Ok(p);
            };
            let mut rest = m.exponents().to_vec();
            rest[vi] -= k;
            let cofactor = Polynomial::monomial(&self.vars, Monomial::from_exponents(rest), c);
            p.terms.remove(&m);
            p = p + cofactor * tail.clone();
        }
    }

    fn assert_ambient_result(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch(
                self.vars.joined(),
                other.vars.joined(),
            ));
        }
        Ok(())
    }

    /// Collect the homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.total_degree() == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: Polynomial<R>) -> Polynomial<R> {
        self.assert_same_ambient(&rhs);
        let mut out = self;
        for (m, c) in rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: Polynomial<R>) -> Polynomial<R> {
        self.assert_same_ambient(&rhs);
        let mut out = self;
        for (m, c) in rhs.terms {
            out.add_term(m, -c);
        }
        out
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        let vars = self.vars.clone();
        let mut out = Polynomial::zero(&vars);
        for (m, c) in self.terms {
            out.terms.insert(m, -c);
        }
        out
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: Polynomial<R>) -> Polynomial<R> {
        self.assert_same_ambient(&rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(self))
    }
}

impl<R: Ring> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(self))
    }
}
