use num::Zero;

use super::tensor::InheritanceTensor;
use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, MultiPoly, Scalar, Subspace};

/// A commutative algebra given by structure constants `c[a][b][d]`, the
/// `d`-th coordinate of the product of basis vectors `a` and `b`.
///
/// Algebras built from an inheritance tensor keep it as their origin; their
/// basis lists the `n` female types first and the `nu` male types after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralAlgebra {
    dim: usize,
    table: Vec<Vec<Scalar>>,
    nonzero: Vec<(usize, usize, usize, Scalar)>,
    origin: Option<InheritanceTensor>,
}

impl GeneralAlgebra {
    pub fn new(c: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = c.len();
        for (a, row) in c.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for (b, prod) in row.iter().enumerate() {
                if prod.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: prod.len() });
                }
                if b < a {
                    if let Some(d) = (0..dim).find(|&d| prod[d] != c[b][a][d]) {
                        return Err(Error::NotCommutative { a, b, d });
                    }
                }
            }
        }
        Ok(GeneralAlgebra::from_table(dim, c.into_iter().flatten().collect(), None))
    }

    /// Builds an algebra from the products of basis pairs `a <= b`.
    pub fn from_products(dim: usize, product: impl Fn(usize, usize) -> Vec<Scalar>) -> Result<Self> {
        let mut table = vec![vec![Scalar::zero(); dim]; dim * dim];
        for a in 0..dim {
            for b in a..dim {
                let p = product(a, b);
                if p.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
                }
                table[a * dim + b] = p.clone();
                table[b * dim + a] = p;
            }
        }
        Ok(GeneralAlgebra::from_table(dim, table, None))
    }

    pub fn zero_algebra(dim: usize) -> Self {
        GeneralAlgebra::from_table(dim, vec![vec![Scalar::zero(); dim]; dim * dim], None)
    }

    fn from_table(dim: usize, table: Vec<Vec<Scalar>>, origin: Option<InheritanceTensor>) -> Self {
        let mut nonzero = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                for (d, c) in table[a * dim + b].iter().enumerate() {
                    if !c.is_zero() {
                        nonzero.push((a, b, d, c.clone()));
                    }
                }
            }
        }
        GeneralAlgebra { dim, table, nonzero, origin }
    }

    pub(crate) fn with_origin(mut self, t: InheritanceTensor) -> Self {
        self.origin = Some(t);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> Option<&InheritanceTensor> {
        self.origin.as_ref()
    }

    pub fn is_eabp(&self) -> bool {
        self.origin.is_some()
    }

    pub(crate) fn require_eabp(&self) -> Result<&InheritanceTensor> {
        self.origin.as_ref().ok_or(Error::NotEabp)
    }

    pub fn structure_constant(&self, a: usize, b: usize, d: usize) -> &Scalar {
        &self.table[a * self.dim + b][d]
    }

    /// Product of basis vectors `a` and `b`.
    pub fn basis_product(&self, a: usize, b: usize) -> &[Scalar] {
        &self.table[a * self.dim + b]
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim).map(|a| (0..self.dim).map(|b| self.basis_product(a, b).to_vec()).collect()).collect()
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn multiply(&self, z: &[Scalar], t: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(z.len())?;
        self.check_len(t.len())?;
        Ok(self.mul_unchecked(z, t))
    }

    pub(crate) fn mul_unchecked(&self, z: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, b, d, c) in &self.nonzero {
            if z[*a].is_zero() || t[*b].is_zero() {
                continue;
            }
            out[*d] += c * &z[*a] * &t[*b];
        }
        out
    }

    /// Product of two elements with polynomial coordinates.
    pub fn multiply_symbolic(&self, z: &[MultiPoly], t: &[MultiPoly]) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.dim];
        for (a, b, d, c) in &self.nonzero {
            if z[*a].is_zero() || t[*b].is_zero() {
                continue;
            }
            out[*d].add_product(&z[*a], &t[*b], c);
        }
        out
    }

    /// Span of all products of basis vectors, i.e. the square of the algebra.
    pub fn square_span(&self) -> Subspace {
        Subspace::span(self.dim, self.table.iter().cloned()).expect("products have length dim")
    }

    /// The same algebra written in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<GeneralAlgebra> {
        if basis.rows() != self.dim || basis.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: basis.rows() });
        }
        let inv = basis.inverse().ok_or_else(|| Error::Precondition("change of basis matrix is singular".into()))?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| basis.column(j)).collect();
        GeneralAlgebra::from_products(self.dim, |i, j| {
            let p = self.mul_unchecked(&cols[i], &cols[j]);
            inv.mul_vec(&p).expect("square inverse")
        })
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: len });
        }
        Ok(())
    }
}

/// Builds the evolution algebra of a bisexual population:
/// `e_i^(f) e_j^(m) = 1/2 (Σ_k Pf(i,j,k) e_k^(f) + Σ_l Pm(i,j,l) e_l^(m))`,
/// with all same-sex products zero.
pub fn eabp_from_tensor(t: &InheritanceTensor) -> GeneralAlgebra {
    let (n, nu) = (t.n(), t.nu());
    let half = scalar::half();
    let alg = GeneralAlgebra::from_products(n + nu, |a, b| {
        let mut out = vec![Scalar::zero(); n + nu];
        if a < n && b >= n {
            let (i, j) = (a, b - n);
            for (d, v) in out.iter_mut().enumerate() {
                let p = if d < n { t.female(i, j, d) } else { t.male(i, j, d - n) };
                *v = p * &half;
            }
        }
        out
    })
    .expect("products have length n + nu");
    alg.with_origin(t.clone())
}
