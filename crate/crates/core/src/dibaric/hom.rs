use num::Zero;
use serde::Serialize;

use super::sex_diff_algebra;
use crate::algebra::identity::{apply_symbolic, generic, verdict_from_difference};
use crate::algebra::{GeneralAlgebra, IdentityVerdict};
use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, Scalar, Subspace};
use crate::forms::{verify_bq, BqPair};

/// The map `x -> f(x) w + g(x) m` onto the sex differentiation algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DibaricHom {
    pub pair: BqPair,
    /// `2 x dim`, rows `f` and `g`.
    pub matrix: Matrix,
    pub multiplicativity: IdentityVerdict,
}

impl DibaricHom {
    pub fn kernel(&self) -> Subspace {
        Subspace::kernel(&self.matrix)
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(x)
    }
}

/// How a verified nonzero bq pair witnesses structure on the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairWitness {
    /// `(f, g)` has rank 2: the map is onto the sex differentiation algebra.
    DibaricOnto,
    /// `f = g` is a character; the image is the line spanned by `w + m`.
    Baric,
}

fn checked_pair(alg: &GeneralAlgebra, pair: &BqPair) -> Result<Matrix> {
    let v = verify_bq(alg, pair)?;
    if !v.holds {
        return Err(Error::NotBq);
    }
    if !v.nonzero {
        return Err(Error::ZeroPair);
    }
    Matrix::from_rows(vec![pair.f.coeffs().to_vec(), pair.g.coeffs().to_vec()], alg.dim())
}

/// Classifies a nonzero bq pair as a dibaric or a baric witness.
pub fn pair_witness(alg: &GeneralAlgebra, pair: &BqPair) -> Result<PairWitness> {
    let m = checked_pair(alg, pair)?;
    match m.rank() {
        2 => Ok(PairWitness::DibaricOnto),
        _ if pair.f == pair.g => Ok(PairWitness::Baric),
        rank => Err(Error::InvariantBreach(format!("nonzero bq pair of rank {rank} with f != g"))),
    }
}

/// Builds `x -> f(x) w + g(x) m` from a nonzero bq pair and verifies it is
/// a homomorphism onto the sex differentiation algebra.
pub fn dibaric_hom_from_bq(alg: &GeneralAlgebra, pair: &BqPair) -> Result<DibaricHom> {
    let matrix = checked_pair(alg, pair)?;
    let rank = matrix.rank();
    if rank != 2 {
        return Err(Error::NotOnto { rank });
    }
    let target = sex_diff_algebra();
    let n = alg.dim();
    let (x, y) = (generic(n, 0), generic(n, 1));
    let lhs = apply_symbolic(&matrix, &alg.multiply_symbolic(&x, &y));
    let rhs = target.multiply_symbolic(&apply_symbolic(&matrix, &x), &apply_symbolic(&matrix, &y));
    let diff: Vec<_> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
    let multiplicativity = verdict_from_difference("dibaric-homomorphism", &diff, n, 2);
    if !multiplicativity.holds {
        return Err(Error::InvariantBreach("bq pair does not give a homomorphism".into()));
    }
    Ok(DibaricHom { pair: pair.clone(), matrix, multiplicativity })
}

/// With `chi = (f + g)/2`, the coordinate along `p = w + m`, checks
/// `chi(uv) = chi(u) chi(v)` on a basis of the square and that `chi` does
/// not vanish there.
pub fn square_character(alg: &GeneralAlgebra, hom: &DibaricHom) -> Result<bool> {
    let half = scalar::half();
    let chi: Vec<Scalar> = hom.pair.f.iter().zip(hom.pair.g.iter()).map(|(a, b)| (a + b) * &half).collect();
    let eval = |v: &[Scalar]| crate::exact::matrix::dot(&chi, v);
    let square = alg.square_span();
    let basis = square.basis();
    for u in basis {
        for v in basis {
            let uv = alg.multiply(u, v)?;
            if eval(&uv) != eval(u) * eval(v) {
                return Ok(false);
            }
        }
    }
    Ok(basis.iter().any(|u| !eval(u).is_zero()))
}
