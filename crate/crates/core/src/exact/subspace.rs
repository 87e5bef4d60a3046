use num::Zero;

use super::matrix::{dot, Matrix};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced
/// row echelon basis. Two subspaces are equal iff their representations are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim).row_vecs() }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        for v in &rows {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient_dim));
        }
        let (r, pivots) = Matrix::from_rows(rows, ambient_dim)?.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis })
    }

    /// Kernel of a matrix, as a subspace of its column space dimension.
    pub fn kernel(m: &Matrix) -> Self {
        Subspace::span(m.cols(), m.nullspace()).expect("nullspace vectors have matching length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|row| row.iter().position(|v| !v.is_zero()).expect("basis rows are nonzero")).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Remainder of `v` after eliminating the pivot coordinates with the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o -= &c * r;
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Subspace::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    /// `{x : <v, x> = 0 for all v in self}` under the standard pairing.
    pub fn perp(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        let m = Matrix::from_rows(self.basis.clone(), self.ambient_dim).expect("basis is rectangular");
        Subspace::kernel(&m)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.perp().sum(&other.perp())?.perp())
    }

    /// Whether a linear functional (given by coefficients) vanishes on the subspace.
    pub fn annihilated_by(&self, form: &[Scalar]) -> bool {
        self.basis.iter().all(|v| dot(v, form).is_zero())
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }
}
