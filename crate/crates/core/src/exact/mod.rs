//! Exact rational linear algebra and polynomial arithmetic.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::Matrix;
pub use poly::{Monomial, MultiPoly};
pub use scalar::Scalar;
pub use subspace::Subspace;

/// Canonical basis of the kernel of `m`.
pub fn nullspace(m: &Matrix) -> Subspace {
    Subspace::kernel(m)
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn intersect(a: &Subspace, b: &Subspace) -> crate::Result<Subspace> {
    a.intersect(b)
}

pub fn is_zero_poly(p: &MultiPoly) -> bool {
    p.is_zero()
}
