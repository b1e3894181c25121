//! Linear substitutions between polynomial rings.

use super::{Polynomial, VarSet};
use crate::error::{Error, Result};
use crate::exactnum::Ring;
use crate::matrix::Mat;

/// A linear change of variables: target variable i is sent to the linear
/// form `sum_j matrix[i][j] * source_j`.
#[derive(Clone, Debug)]
pub struct LinearMap<R: Ring> {
    pub matrix: Mat<R>,
    pub source: VarSet,
    pub target: VarSet,
}

impl<R: Ring> LinearMap<R> {
    pub fn new(matrix: Mat<R>, source: VarSet, target: VarSet) -> Result<Self> {
        if matrix.rows() != target.len() || matrix.cols() != source.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len() * source.len(),
                got: matrix.rows() * matrix.cols(),
            });
        }
        Ok(LinearMap {
            matrix,
            source,
            target,
        })
    }

    pub fn identity(vars: &VarSet) -> Self {
        LinearMap {
            matrix: Mat::identity(vars.len()),
            source: vars.clone(),
            target: vars.clone(),
        }
    }

    /// The linear form that the target variable i maps to.
    pub fn image_of(&self, i: usize) -> Polynomial<R> {
        let mut p = Polynomial::zero(&self.source);
        for j in 0..self.source.len() {
            let c = self.matrix.at(i, j).clone();
            if !c.is_zero() {
                p = p + Polynomial::var(&self.source, j).scale(&c);
            }
        }
        p
    }

    /// Substitute the map into a polynomial over the target ring, expanding
    /// fully into the source ring.
    pub fn apply(&self, p: &Polynomial<R>) -> Result<Polynomial<R>> {
        if p.vars() != &self.target {
            return Err(Error::AmbientMismatch(
                p.vars().names().join(","),
                self.target.names().join(","),
            ));
        }
        let images: Vec<Polynomial<R>> =
            (0..self.target.len()).map(|i| self.image_of(i)).collect();
        p.substitute(&images)
    }

    /// Composition: (self ∘ other), i.e. apply `other` after `self` when
    /// substituting. Requires other.target == self.source.
    pub fn compose(&self, other: &LinearMap<R>) -> Result<LinearMap<R>> {
        if other.target != self.source {
            return Err(Error::AmbientMismatch(
                other.target.names().join(","),
                self.source.names().join(","),
            ));
        }
        Ok(LinearMap {
            matrix: self.matrix.mul(&other.matrix),
            source: other.source.clone(),
            target: self.target.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::multipoly::parse::parse_polynomial;

    #[test]
    fn identity_fixes() {
        let v = VarSet::new(["x", "y"]);
        let p: Polynomial<Rational> = parse_polynomial(&v, "x^2 + 3*x*y + -2").unwrap();
        let id = LinearMap::identity(&v);
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn composition_matches_sequential_substitution() {
        let v = VarSet::new(["x", "y"]);
        let p: Polynomial<Rational> = parse_polynomial(&v, "x^2 + -1*y^2").unwrap();
        let m1 = LinearMap::new(
            Mat::from_rows(vec![
                vec![Rational::from_int(1), Rational::from_int(1)],
                vec![Rational::from_int(1), Rational::from_int(-1)],
            ]),
            v.clone(),
            v.clone(),
        )
        .unwrap();
        let m2 = LinearMap::new(
            Mat::from_rows(vec![
                vec![Rational::from_int(2), Rational::from_int(0)],
                vec![Rational::from_int(0), Rational::from_int(3)],
            ]),
            v.clone(),
            v.clone(),
        )
        .unwrap();
        let seq = m2.apply(&m1.apply(&p).unwrap()).unwrap();
        let comp = m1.compose(&m2).unwrap().apply(&p).unwrap();
        assert_eq!(seq, comp);
    }
}
