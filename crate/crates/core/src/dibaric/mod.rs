//! The sex differentiation algebra, ideals and quotients, classification of
//! two-dimensional quotients, and homomorphisms onto the sex
//! differentiation algebra built from bq pairs.

mod hom;
mod quotient;

use crate::algebra::GeneralAlgebra;
use crate::exact::scalar::{half, int};
use crate::exact::{Matrix, Scalar};

pub use hom::{dibaric_hom_from_bq, pair_witness, square_character, DibaricHom, PairWitness};
pub use quotient::{
    classify_two_dim_quotient, is_dibaric_via_tt1, quotient, quotient_with_complement, rational_sqrt, square_ideal,
    verify_ideal, BasisChange, DibaricVerdict, Ideal, QuotientCase, QuotientClassification,
};

/// `w^2 = m^2 = 0`, `wm = (w + m)/2` on the basis `(w, m)`.
pub fn sex_diff_algebra() -> GeneralAlgebra {
    GeneralAlgebra::from_products(2, |a, b| if a == b { vec![int(0), int(0)] } else { vec![half(), half()] })
        .expect("2-dim products")
}

/// Columns `p = w + m` and `q = m - w` in `(w, m)` coordinates.
pub fn sex_diff_pq_basis() -> Matrix {
    Matrix::from_columns(&[vec![int(1), int(1)], vec![int(-1), int(1)]], 2).expect("2x2")
}

/// The same algebra presented as `p^2 = p`, `pq = 0`, `q^2 = -p`.
pub fn sex_diff_pq() -> GeneralAlgebra {
    presentation(int(-1))
}

/// `p^2 = p`, `pq = 0`, `q^2 = alpha2 p` on the basis `(p, q)`.
pub fn presentation(alpha2: Scalar) -> GeneralAlgebra {
    GeneralAlgebra::from_products(2, |a, b| match (a, b) {
        (0, 0) => vec![int(1), int(0)],
        (1, 1) => vec![alpha2.clone(), int(0)],
        _ => vec![int(0), int(0)],
    })
    .expect("2-dim products")
}
