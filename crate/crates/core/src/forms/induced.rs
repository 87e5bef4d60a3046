use serde::Serialize;

use super::bq::canonical_xy;
use super::invariant::disappearing_forms;
use super::LinearOperator;
use crate::algebra::{check_identity, GeneralAlgebra, Identity, IdentityVerdict};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};

/// An operator inducing the multiplication of an evolution algebra together
/// with the checks made when it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedOperator {
    pub operator: LinearOperator,
    /// Result of re-deriving `xy = (X(x)A(y) + X(y)A(x))/2` symbolically.
    pub induction: IdentityVerdict,
    /// The disappearing forms coincide with the forms vanishing on `Im A`.
    pub disappearing_equals_image_perp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedBernsteinReport {
    pub holds: bool,
    pub identity: IdentityVerdict,
    pub disappearing_equals_image_perp: bool,
}

/// Decides `xy = (f(x)A(y) + f(y)A(x))/2`.
pub fn is_induced_by(alg: &GeneralAlgebra, f: &[Scalar], op: &LinearOperator) -> Result<IdentityVerdict> {
    check_identity(alg, &Identity::InducedByOperator { f: f.to_vec(), op: op.matrix().clone() })
}

/// For an evolution algebra, returns `A(z) = 2 z e_1^(f)` when every female
/// type shares the inheritance rows of the first one, and `None` otherwise.
pub fn induced_operator(alg: &GeneralAlgebra) -> Result<Option<InducedOperator>> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    let uniform = (1..n).all(|i| {
        (0..nu).all(|j| {
            (0..n).all(|k| t.female(i, j, k) == t.female(0, j, k))
                && (0..nu).all(|l| t.male(i, j, l) == t.male(0, j, l))
        })
    });
    if !uniform {
        return Ok(None);
    }
    let dim = n + nu;
    let two = Scalar::from_integer(2.into());
    let columns: Vec<Vec<Scalar>> =
        (0..dim).map(|a| alg.basis_product(a, 0).iter().map(|v| v * &two).collect()).collect();
    let operator = LinearOperator::new(Matrix::from_columns(&columns, dim)?)?;
    let x = canonical_xy(alg)?.f;
    let induction = is_induced_by(alg, &x, &operator)?;
    if !induction.holds {
        return Err(Error::InvariantBreach("uniform inheritance rows but 2 z e_1 does not induce the product".into()));
    }
    let disappearing_equals_image_perp = disappearing_forms(alg) == image_perp(&operator);
    Ok(Some(InducedOperator { operator, induction, disappearing_equals_image_perp }))
}

fn image_perp(op: &LinearOperator) -> Subspace {
    let m = op.matrix();
    Subspace::span(m.rows(), (0..m.cols()).map(|j| m.column(j))).expect("columns have length rows").perp()
}

/// Decides `f(x)A(x) = f(A(x)) A^2(x)` for an algebra induced by `A`.
/// Errors with [`Error::NotInduced`] when `A` does not induce the product.
pub fn induced_bernstein_check(
    alg: &GeneralAlgebra,
    op: &LinearOperator,
    f: &[Scalar],
) -> Result<InducedBernsteinReport> {
    if !is_induced_by(alg, f, op)?.holds {
        return Err(Error::NotInduced);
    }
    let identity = check_identity(alg, &Identity::InducedBernstein { f: f.to_vec(), op: op.matrix().clone() })?;
    Ok(InducedBernsteinReport {
        holds: identity.holds,
        identity,
        disappearing_equals_image_perp: disappearing_forms(alg) == image_perp(op),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{eabp_from_tensor, InheritanceTensor, Mode};
    use crate::exact::scalar::{half, int, ratio};
    use crate::forms::predicates::bernstein_identity;

    fn two_males(a: Scalar, b: Scalar) -> GeneralAlgebra {
        let t = InheritanceTensor::from_fn(
            1,
            2,
            Mode::Strict,
            |_, _, _| int(1),
            |_, j, l| {
                let p = if j == 0 { a.clone() } else { b.clone() };
                if l == 0 {
                    p
                } else {
                    int(1) - p
                }
            },
        )
        .unwrap();
        eabp_from_tensor(&t)
    }

    #[test]
    fn two_males_operator_matrix() {
        let (a, b) = (ratio(1, 3), ratio(2, 7));
        let alg = two_males(a.clone(), b.clone());
        let induced = induced_operator(&alg).unwrap().unwrap();
        let z = vec![ratio(5, 2), int(3), int(-1)];
        let az = induced.operator.apply(&z).unwrap();
        let (y1, y2) = (&z[1], &z[2]);
        assert_eq!(az, vec![y1 + y2, &a * y1 + &b * y2, (int(1) - &a) * y1 + (int(1) - &b) * y2]);
        assert!(induced.disappearing_equals_image_perp);
    }

    #[test]
    fn two_males_is_not_induced_bernstein() {
        let alg = two_males(ratio(1, 3), ratio(2, 7));
        let induced = induced_operator(&alg).unwrap().unwrap();
        let x = canonical_xy(&alg).unwrap().f;
        let r = induced_bernstein_check(&alg, &induced.operator, &x).unwrap();
        assert!(!r.holds);
        assert_eq!(r.holds, bernstein_identity(&alg, &x).unwrap().holds);
    }

    #[test]
    fn non_uniform_rows_have_no_operator() {
        let t = InheritanceTensor::from_fn(
            2,
            1,
            Mode::Strict,
            |i, _, k| if i == k { int(1) } else { int(0) },
            |_, _, _| int(1),
        )
        .unwrap();
        assert!(induced_operator(&eabp_from_tensor(&t)).unwrap().is_none());
    }

    #[test]
    fn zero_operator_on_zero_algebra() {
        let alg = GeneralAlgebra::zero_algebra(2);
        let op = LinearOperator::new(Matrix::zeros(2, 2)).unwrap();
        let r = induced_bernstein_check(&alg, &op, &[half(), int(1)]).unwrap();
        assert!(r.holds);
        let wrong = LinearOperator::new(Matrix::identity(2)).unwrap();
        assert!(matches!(induced_bernstein_check(&alg, &wrong, &[int(1), int(0)]), Err(Error::NotInduced)));
    }
}
