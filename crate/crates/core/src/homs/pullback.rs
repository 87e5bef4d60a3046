use super::{verify_algebra_hom, AlgebraMap};
use crate::algebra::GeneralAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};
use crate::forms::{conservative_identity, invariant_forms, LinearForm};

/// `(h*F)(x) = F(h(x))`.
pub fn pullback_form(h: &AlgebraMap, form: &LinearForm) -> Result<LinearForm> {
    Ok(LinearForm::new(h.matrix().vec_mul(form.coeffs())?))
}

/// Image of a space of target forms under `h*`.
pub fn pullback_forms(h: &AlgebraMap, forms: &Subspace) -> Result<Subspace> {
    if forms.ambient_dim() != h.target_dim() {
        return Err(Error::DimensionMismatch { expected: h.target_dim(), found: forms.ambient_dim() });
    }
    let images = forms.basis().iter().map(|v| h.matrix().vec_mul(v)).collect::<Result<Vec<_>>>()?;
    Subspace::span(h.source_dim(), images)
}

/// Invariant forms on both sides of a homomorphism and their relation
/// under `h*`, with `f1 = f2 ∘ h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPullback {
    pub f_source: LinearForm,
    pub j_source: Subspace,
    pub j_target: Subspace,
    /// `h*(J_target)`.
    pub image: Subspace,
    /// `Im h` contains the square of the target.
    pub image_contains_square: bool,
    /// `h*` is injective on `J_target`.
    pub injective_on_target: bool,
    /// `F` is invariant on the target iff `h*F` is invariant on the source.
    pub preimage_equals_target: bool,
    /// `h*` maps `J_target` onto `J_source`.
    pub onto_source: bool,
}

/// Computes `J_{f2}` on the target, `J_{f1}` on the source and `h*(J_{f2})`.
/// `h*(J_{f2}) ⊆ J_{f1}` is asserted for a verified homomorphism.
pub fn pullback_invariants(
    src: &GeneralAlgebra,
    dst: &GeneralAlgebra,
    h: &AlgebraMap,
    f_target: &LinearForm,
) -> Result<InvariantPullback> {
    if !verify_algebra_hom(src, dst, h)?.is_linear_hom {
        return Err(Error::Precondition("map is not an algebra homomorphism".into()));
    }
    let f_source = pullback_form(h, f_target)?;
    let j_source = invariant_forms(src, f_source.coeffs())?;
    let j_target = invariant_forms(dst, f_target.coeffs())?;
    let image = pullback_forms(h, &j_target)?;
    if !image.is_subspace_of(&j_source) {
        return Err(Error::InvariantBreach("pullback of an invariant form is not invariant".into()));
    }
    let im_h = Subspace::span(dst.dim(), (0..src.dim()).map(|a| h.image_of_basis(a)))?;
    let image_contains_square = dst.square_span().is_subspace_of(&im_h);
    let injective_on_target = image.dim() == j_target.dim();
    // Forms whose pullback is invariant: kernel of (h*, then quotient by J_source).
    let pre = {
        let perp = j_source.perp();
        let rows: Vec<Vec<Scalar>> = perp.basis().iter().map(|v| h.apply(v)).collect::<Result<_>>()?;
        if rows.is_empty() {
            Subspace::full(dst.dim())
        } else {
            Subspace::kernel(&Matrix::from_rows(rows, dst.dim())?)
        }
    };
    Ok(InvariantPullback {
        preimage_equals_target: pre == j_target,
        onto_source: image == j_source,
        f_source,
        j_source,
        j_target,
        image,
        image_contains_square,
        injective_on_target,
    })
}

/// `L⊥` for a space `L` of f-invariant forms, with closure under the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpSubalgebra {
    pub subspace: Subspace,
    pub closed: bool,
    /// Dimension of the space of invariant forms of the subalgebra for the
    /// restriction of `f`; computed when the conservative identity holds.
    pub restricted_invariant_dim: Option<usize>,
    /// `dim J_1 = dim J_f - dim L`, when the conservative identity holds.
    pub dimension_formula: Option<bool>,
}

pub fn perp_subalgebra(alg: &GeneralAlgebra, f: &LinearForm, l: &Subspace) -> Result<PerpSubalgebra> {
    let j = invariant_forms(alg, f.coeffs())?;
    if !l.is_subspace_of(&j) {
        return Err(Error::Precondition("L is not a space of invariant forms".into()));
    }
    let sub = l.perp();
    let basis = sub.basis();
    let closed = basis.iter().all(|u| basis.iter().all(|v| sub.contains(&alg.multiply(u, v).expect("lengths match"))));
    let mut restricted_invariant_dim = None;
    let mut dimension_formula = None;
    if closed && !basis.is_empty() && conservative_identity(alg, f.coeffs())?.holds() {
        let r = basis.len();
        let embed = Matrix::from_columns(basis, alg.dim())?;
        let sub_alg = GeneralAlgebra::from_products(r, |a, b| {
            let p = alg.multiply(&basis[a], &basis[b]).expect("lengths match");
            embed.solve(&p).expect("shapes match").expect("closed under the product")
        })?;
        let f1 = embed.vec_mul(f.coeffs())?;
        let d = invariant_forms(&sub_alg, &f1)?.dim();
        restricted_invariant_dim = Some(d);
        dimension_formula = Some(d + l.dim() == j.dim());
    }
    Ok(PerpSubalgebra { subspace: sub, closed, restricted_invariant_dim, dimension_formula })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{eabp_from_tensor, InheritanceTensor, Mode};
    use crate::exact::scalar::{int, ratio};
    use crate::forms::canonical_xy;

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

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_pulls_back_forms_to_themselves() {
        let f = LinearForm::new(v(&[2, -1, 3]));
        assert_eq!(pullback_form(&AlgebraMap::identity(3), &f).unwrap(), f);
        let alg = two_males(ratio(1, 3), ratio(1, 5));
        let x = canonical_xy(&alg).unwrap().f;
        let p = pullback_invariants(&alg, &alg, &AlgebraMap::identity(3), &x).unwrap();
        assert!(p.onto_source && p.injective_on_target && p.image_contains_square && p.preimage_equals_target);
    }

    #[test]
    fn perp_of_y_is_closed() {
        let alg = two_males(ratio(1, 3), ratio(1, 5));
        let x = canonical_xy(&alg).unwrap().f;
        let l = Subspace::span(3, [v(&[0, 1, 1])]).unwrap();
        let p = perp_subalgebra(&alg, &x, &l).unwrap();
        assert!(p.closed);
        assert_eq!(p.subspace, Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, -1])]).unwrap());
        assert!(p.dimension_formula.is_none());
        let whole = perp_subalgebra(&alg, &x, &Subspace::zero(3)).unwrap();
        assert_eq!(whole.subspace, Subspace::full(3));
        let bad = Subspace::span(3, [v(&[1, 0, 0])]).unwrap();
        assert!(matches!(perp_subalgebra(&alg, &x, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn dimension_formula_in_a_conservative_algebra() {
        // e1^2 = e1, e1 e2 = e2/2, f = e1^*: J_f = span{e1^*, e2^*}.
        let alg = GeneralAlgebra::from_products(2, |a, b| match (a, b) {
            (0, 0) => vec![int(1), int(0)],
            (0, 1) => vec![int(0), ratio(1, 2)],
            _ => vec![int(0), int(0)],
        })
        .unwrap();
        let f = LinearForm::new(v(&[1, 0]));
        assert_eq!(invariant_forms(&alg, f.coeffs()).unwrap().dim(), 2);
        let l = Subspace::span(2, [v(&[0, 1])]).unwrap();
        let p = perp_subalgebra(&alg, &f, &l).unwrap();
        assert!(p.closed);
        assert_eq!(p.restricted_invariant_dim, Some(1));
        assert_eq!(p.dimension_formula, Some(true));
    }
}
