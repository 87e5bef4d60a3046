//! Linear forms on an algebra: bq-homomorphisms, spaces of invariant forms,
//! annihilators, disappearing forms, and the conservative, Bernstein and
//! induced-by-operator predicates.

mod bq;
mod induced;
mod invariant;
mod predicates;

use std::ops::Deref;

use num::Zero;

use crate::exact::{Matrix, Scalar};

pub use bq::{
    canonical_xy, classify_bq, complete_female_male, complete_male_female, verify_bq, zero_partner_forms, BqFamily,
    BqVerdict,
};
pub use induced::{induced_bernstein_check, induced_operator, is_induced_by, InducedOperator};
pub use invariant::{
    annihilator, annihilator_via_tensor, disappearing_forms, invariant_forms, male_invariant_solutions, perp_of_forms,
    simplex_invariant_forms, SimplexInvariants,
};
pub use predicates::{
    bernstein_identity, conservative_identity, is_bernstein, is_conservative, plenary_formula_check,
    ConservativeVerdict,
};

/// Coefficients of a linear form in the dual basis. For an evolution algebra
/// the first `n` coefficients act on female coordinates, the rest on male.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        LinearForm { coeffs: vec![Scalar::zero(); dim] }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, z: &[Scalar]) -> Scalar {
        crate::exact::matrix::dot(&self.coeffs, z)
    }
}

impl Deref for LinearForm {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.coeffs
    }
}

impl From<Vec<Scalar>> for LinearForm {
    fn from(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }
}

/// A candidate bq-homomorphism `(f, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BqPair {
    pub f: LinearForm,
    pub g: LinearForm,
}

impl BqPair {
    pub fn new(f: LinearForm, g: LinearForm) -> Self {
        BqPair { f, g }
    }

    /// Both forms are nonzero covectors.
    pub fn is_nonzero(&self) -> bool {
        !self.f.is_zero() && !self.g.is_zero()
    }
}

/// A square matrix acting on algebra elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn new(matrix: Matrix) -> crate::Result<Self> {
        if !matrix.is_square() {
            return Err(crate::Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        Ok(LinearOperator { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, z: &[Scalar]) -> crate::Result<Vec<Scalar>> {
        self.matrix.mul_vec(z)
    }
}
