//! Subspaces of `K^n` held in canonical (reduced echelon) form.

use super::field::{Field, Scalar};
use super::matrix::{canonical_rows, Matrix};
use crate::error::{FoveaError, Result};

/// A subspace of `K^ambient`; `basis` is the reduced echelon basis, so two
/// subspaces are equal exactly when their data are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

/// Dimensions relating two subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceReport {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_sum: usize,
    pub dim_intersection: usize,
    /// `dim (A + B) / B`.
    pub quotient_dim: usize,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace::span(
            field,
            ambient,
            Matrix::identity(field, ambient).row_vectors(),
        )
        .expect("identity rows have the ambient length")
    }

    pub fn span(field: Field, ambient: usize, gens: Vec<Vec<Scalar>>) -> Result<Self> {
        if let Some(v) = gens.iter().find(|v| v.len() != ambient) {
            return Err(FoveaError::Dimension(format!(
                "vector of length {} in ambient dimension {ambient}",
                v.len()
            )));
        }
        Ok(Subspace {
            field,
            ambient,
            basis: canonical_rows(field, ambient, gens),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }
    pub fn field(&self) -> Field {
        self.field
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(FoveaError::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, gens)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // x^T A = y^T B  <=>  [A^T | -B^T] (x, y) = 0
        let a = Matrix::from_rows(self.field, self.ambient, self.basis.clone()).transpose();
        let b = Matrix::from_rows(self.field, self.ambient, other.basis.clone()).transpose();
        let neg_b = b.scale(&-self.field.one());
        let ker = a.hstack(&neg_b).kernel_basis();
        let gens = ker
            .into_iter()
            .map(|v| a.mul_vec(&v[..self.dim()]))
            .collect();
        Subspace::span(self.field, self.ambient, gens)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        let mut gens = self.basis.clone();
        gens.push(v.to_vec());
        Matrix::from_rows(self.field, self.ambient, gens).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Indices of standard basis vectors completing this subspace to the
    /// whole space: the non-pivot coordinates of the canonical basis.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("canonical rows are nonzero")
            })
            .collect();
        (0..self.ambient).filter(|c| !pivots.contains(c)).collect()
    }
}

/// Dimension bookkeeping for two generator families of equal length.
pub fn subspace_ops(
    field: Field,
    ambient: usize,
    a: Vec<Vec<Scalar>>,
    b: Vec<Vec<Scalar>>,
) -> Result<SubspaceReport> {
    let sa = Subspace::span(field, ambient, a)?;
    let sb = Subspace::span(field, ambient, b)?;
    let sum = sa.sum(&sb)?;
    let int = sa.intersection(&sb)?;
    Ok(SubspaceReport {
        dim_a: sa.dim(),
        dim_b: sb.dim(),
        dim_sum: sum.dim(),
        dim_intersection: int.dim(),
        quotient_dim: sum.dim() - sb.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(f: Field, n: usize, i: usize) -> Vec<Scalar> {
        (0..n)
            .map(|j| if i == j { f.one() } else { f.zero() })
            .collect()
    }

    #[test]
    fn equal_lines() {
        let f = Field::default();
        let r = subspace_ops(f, 2, vec![e(f, 2, 0)], vec![e(f, 2, 0)]).unwrap();
        assert_eq!((r.dim_sum, r.dim_intersection), (1, 1));
    }

    #[test]
    fn coordinate_lines() {
        let f = Field::default();
        let r = subspace_ops(f, 2, vec![e(f, 2, 0)], vec![e(f, 2, 1)]).unwrap();
        assert_eq!((r.dim_sum, r.dim_intersection, r.quotient_dim), (2, 0, 1));
    }

    #[test]
    fn mismatched_ambient() {
        let f = Field::default();
        assert!(subspace_ops(f, 2, vec![e(f, 3, 0)], vec![]).is_err());
        let a = Subspace::span(f, 2, vec![e(f, 2, 0)]).unwrap();
        let b = Subspace::span(f, 3, vec![e(f, 3, 0)]).unwrap();
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn complement() {
        let f = Field::default();
        let s = Subspace::span(f, 3, vec![e(f, 3, 1)]).unwrap();
        assert_eq!(s.complement_coordinates(), vec![0, 2]);
    }
}
