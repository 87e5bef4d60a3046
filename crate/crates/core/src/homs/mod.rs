//! Homomorphisms between algebras: verification against the structure
//! constants, weight conditions for evolution algebras, dibaric
//! homomorphisms, and pullback of invariant forms.

mod pullback;

use num::{One, Zero};
use serde::Serialize;

use crate::algebra::GeneralAlgebra;
use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, Scalar};
use crate::forms::{verify_bq, BqPair};

pub use pullback::{
    perp_subalgebra, pullback_form, pullback_forms, pullback_invariants, InvariantPullback, PerpSubalgebra,
};

/// A linear map given by its matrix: column `a` holds the image of source
/// basis vector `a` in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    matrix: Matrix,
}

/// Coefficients of an evolution algebra map in the sex-separated bases:
/// `h(e_i^(f)) = Σ alpha[i][j] e_j^(f) + Σ beta[i][k] e_k^(m)` and
/// `h(e_s^(m)) = Σ lambda[s][t] e_t^(f) + Σ mu[s][l] e_l^(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapBlocks {
    pub alpha: Vec<Vec<Scalar>>,
    pub beta: Vec<Vec<Scalar>>,
    pub lambda: Vec<Vec<Scalar>>,
    pub mu: Vec<Vec<Scalar>>,
}

impl AlgebraMap {
    pub fn new(matrix: Matrix) -> Self {
        AlgebraMap { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        AlgebraMap { matrix: Matrix::identity(dim) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(x)
    }

    pub fn image_of_basis(&self, a: usize) -> Vec<Scalar> {
        self.matrix.column(a)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AlgebraMap) -> Result<AlgebraMap> {
        Ok(AlgebraMap { matrix: self.matrix.mul(&inner.matrix)? })
    }

    pub fn inverse(&self) -> Option<AlgebraMap> {
        self.matrix.inverse().map(AlgebraMap::new)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim()
    }

    /// Block view for a map between evolution algebras with `src_n` and
    /// `dst_n` female types.
    pub fn blocks(&self, src_n: usize, dst_n: usize) -> MapBlocks {
        let m = &self.matrix;
        let (src_nu, dst_nu) = (m.cols() - src_n, m.rows() - dst_n);
        MapBlocks {
            alpha: (0..src_n).map(|i| (0..dst_n).map(|j| m[(j, i)].clone()).collect()).collect(),
            beta: (0..src_n).map(|i| (0..dst_nu).map(|k| m[(dst_n + k, i)].clone()).collect()).collect(),
            lambda: (0..src_nu).map(|s| (0..dst_n).map(|t| m[(t, src_n + s)].clone()).collect()).collect(),
            mu: (0..src_nu).map(|s| (0..dst_nu).map(|l| m[(dst_n + l, src_n + s)].clone()).collect()).collect(),
        }
    }
}

/// Family of a violated homomorphism constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintKind {
    /// `h(e_i^(f))^2 = 0`, from `e_i^(f) e_i^(f) = 0`.
    FemaleSquare,
    /// `h(e_i^(f)) h(e_t^(f)) = 0` for `i != t`.
    FemaleFemale,
    /// `h(e_s^(m))^2 = 0`.
    MaleSquare,
    /// `h(e_s^(m)) h(e_r^(m)) = 0` for `s != r`.
    MaleMale,
    /// `h(e_i^(f) e_s^(m)) = h(e_i^(f)) h(e_s^(m))`.
    CrossProduct,
    /// `X(h(z)) = X(z)` on a basis vector.
    Weight,
    /// `h(e_a e_b) = h(e_a) h(e_b)` for an algebra without sex structure.
    Product,
}

/// One failing scalar equation, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintViolation {
    pub kind: ConstraintKind,
    /// Source basis indices: `(i, s)` for cross products, `(i, t)` or
    /// `(s, r)` for same-sex pairs, `(a)` for weights, `(a, b)` otherwise.
    pub indices: Vec<usize>,
    /// `"female"` or `"male"` for evolution algebra targets, else `"coordinate"`.
    pub component: String,
    /// 1-based index of the failing target coordinate within `component`.
    pub coordinate: usize,
    /// `lhs - rhs` of the equation.
    pub residual: String,
}

/// Weights of the image of one source basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightRow {
    pub basis: String,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    /// `h(zt) = h(z)h(t)` on all basis pairs.
    pub is_linear_hom: bool,
    /// Additionally both algebras are evolution algebras and `X ∘ h = X`.
    pub is_eabp_hom: bool,
    /// `X` and `Y` of the image of each source basis vector; present only
    /// when `is_eabp_hom`.
    pub t3_table: Option<Vec<WeightRow>>,
    pub violated_constraints: Vec<ConstraintViolation>,
}

fn check_dims(src: &GeneralAlgebra, dst: &GeneralAlgebra, h: &AlgebraMap) -> Result<()> {
    if h.source_dim() != src.dim() {
        return Err(Error::DimensionMismatch { expected: src.dim(), found: h.source_dim() });
    }
    if h.target_dim() != dst.dim() {
        return Err(Error::DimensionMismatch { expected: dst.dim(), found: h.target_dim() });
    }
    Ok(())
}

fn basis_label(a: usize, n: Option<usize>) -> String {
    match n {
        Some(n) if a < n => format!("e{}(f)", a + 1),
        Some(n) => format!("e{}(m)", a - n + 1),
        None => format!("e{}", a + 1),
    }
}

/// Checks `h(e_a e_b) = h(e_a) h(e_b)` on all basis pairs and, between
/// evolution algebras, `X ∘ h = X`.
pub fn verify_algebra_hom(src: &GeneralAlgebra, dst: &GeneralAlgebra, h: &AlgebraMap) -> Result<HomReport> {
    check_dims(src, dst, h)?;
    let sexes = match (src.tensor(), dst.tensor()) {
        (Some(s), Some(d)) => Some((s.n(), d.n())),
        _ => None,
    };
    let (sn, dn) = (src.dim(), dst.dim());
    let images: Vec<Vec<Scalar>> = (0..sn).map(|a| h.image_of_basis(a)).collect();
    let mut violations = Vec::new();
    let mut multiplicative = true;
    for a in 0..sn {
        for b in a..sn {
            let lhs = h.apply(src.basis_product(a, b))?;
            let rhs = dst.multiply(&images[a], &images[b])?;
            for d in 0..dn {
                let residual = &lhs[d] - &rhs[d];
                if residual.is_zero() {
                    continue;
                }
                multiplicative = false;
                violations.push(product_violation(sexes, a, b, d, &residual));
            }
        }
    }
    let mut weight_ok = sexes.is_some();
    if let Some((src_n, dst_n)) = sexes {
        for (a, img) in images.iter().enumerate() {
            let x: Scalar = img[..dst_n].iter().sum();
            let expected = if a < src_n { Scalar::one() } else { Scalar::zero() };
            if x != expected {
                weight_ok = false;
                violations.push(ConstraintViolation {
                    kind: ConstraintKind::Weight,
                    indices: vec![a + 1],
                    component: "weight".into(),
                    coordinate: 1,
                    residual: scalar::render(&(x - expected)),
                });
            }
        }
    }
    let is_eabp_hom = multiplicative && weight_ok;
    let t3_table = match sexes {
        Some((src_n, dst_n)) if is_eabp_hom => Some(
            images
                .iter()
                .enumerate()
                .map(|(a, img)| WeightRow {
                    basis: basis_label(a, Some(src_n)),
                    x: scalar::render(&img[..dst_n].iter().sum()),
                    y: scalar::render(&img[dst_n..].iter().sum()),
                })
                .collect(),
        ),
        _ => None,
    };
    Ok(HomReport { is_linear_hom: multiplicative, is_eabp_hom, t3_table, violated_constraints: violations })
}

fn product_violation(
    sexes: Option<(usize, usize)>,
    a: usize,
    b: usize,
    d: usize,
    residual: &Scalar,
) -> ConstraintViolation {
    let residual = scalar::render(residual);
    let Some((src_n, dst_n)) = sexes else {
        return ConstraintViolation {
            kind: ConstraintKind::Product,
            indices: vec![a + 1, b + 1],
            component: "coordinate".into(),
            coordinate: d + 1,
            residual,
        };
    };
    let (component, coordinate) = if d < dst_n { ("female", d + 1) } else { ("male", d - dst_n + 1) };
    let (kind, indices) = match (a < src_n, b < src_n) {
        (true, true) if a == b => (ConstraintKind::FemaleSquare, vec![a + 1, b + 1]),
        (true, true) => (ConstraintKind::FemaleFemale, vec![a + 1, b + 1]),
        (false, false) if a == b => (ConstraintKind::MaleSquare, vec![a - src_n + 1, b - src_n + 1]),
        (false, false) => (ConstraintKind::MaleMale, vec![a - src_n + 1, b - src_n + 1]),
        // a < b, so a is the female index.
        _ => (ConstraintKind::CrossProduct, vec![a + 1, b - src_n + 1]),
    };
    ConstraintViolation { kind, indices, component: component.into(), coordinate, residual }
}

/// For a verified homomorphism of evolution algebras, checks that images of
/// female basis vectors have weights `X = 1, Y = 0` and images of male
/// basis vectors `X = 0, Y = 1`.
pub fn check_t3_conclusions(src: &GeneralAlgebra, dst: &GeneralAlgebra, h: &AlgebraMap) -> Result<bool> {
    let report = verify_algebra_hom(src, dst, h)?;
    if !report.is_eabp_hom {
        return Err(Error::Precondition("map is not a homomorphism of evolution algebras".into()));
    }
    let (src_n, dst_n) = (src.require_eabp()?.n(), dst.require_eabp()?.n());
    Ok((0..src.dim()).all(|a| {
        let img = h.image_of_basis(a);
        let x: Scalar = img[..dst_n].iter().sum();
        let y: Scalar = img[dst_n..].iter().sum();
        if a < src_n {
            x.is_one() && y.is_zero()
        } else {
            x.is_zero() && y.is_one()
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DibaricHomVerdict {
    pub is_algebra_hom: bool,
    /// `f2 ∘ h = f1`.
    pub f_preserved: bool,
    /// `g2 ∘ h = g1`.
    pub g_preserved: bool,
}

impl DibaricHomVerdict {
    pub fn holds(&self) -> bool {
        self.is_algebra_hom && self.f_preserved
    }
}

/// Checks that `h` is a homomorphism with `f2 ∘ h = f1`. For a
/// homomorphism, preserving `f` and preserving `g` are equivalent whenever
/// the forms involved are nonzero; a mismatch is reported as an invariant
/// breach.
pub fn verify_dibaric_hom(
    src: &GeneralAlgebra,
    src_pair: &BqPair,
    dst: &GeneralAlgebra,
    dst_pair: &BqPair,
    h: &AlgebraMap,
) -> Result<DibaricHomVerdict> {
    check_dims(src, dst, h)?;
    if !verify_bq(src, src_pair)?.holds || !verify_bq(dst, dst_pair)?.holds {
        return Err(Error::NotBq);
    }
    let is_algebra_hom = verify_algebra_hom(src, dst, h)?.is_linear_hom;
    let f_preserved = pullback_form(h, &dst_pair.f)? == src_pair.f;
    let g_preserved = pullback_form(h, &dst_pair.g)? == src_pair.g;
    if is_algebra_hom && f_preserved != g_preserved {
        let witness_nonzero = if f_preserved { !src_pair.f.is_zero() } else { !src_pair.g.is_zero() };
        if witness_nonzero {
            return Err(Error::InvariantBreach("homomorphism preserves exactly one form of the pair".into()));
        }
    }
    Ok(DibaricHomVerdict { is_algebra_hom, f_preserved, g_preserved })
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

    /// `h(e_f) = e_f + alpha (m1 - m2)` and `h(m_j) = images[j]`.
    fn map(alpha: &Scalar, m1: [Scalar; 2], m2: [Scalar; 2]) -> AlgebraMap {
        let cols = vec![
            vec![int(1), alpha.clone(), -alpha.clone()],
            vec![int(0), m1[0].clone(), m1[1].clone()],
            vec![int(0), m2[0].clone(), m2[1].clone()],
        ];
        AlgebraMap::new(Matrix::from_columns(&cols, 3).unwrap())
    }

    #[test]
    fn identity_passes() {
        let alg = two_males(ratio(1, 3), ratio(1, 7));
        let r = verify_algebra_hom(&alg, &alg, &AlgebraMap::identity(3)).unwrap();
        assert!(r.is_linear_hom && r.is_eabp_hom && r.violated_constraints.is_empty());
        assert_eq!(r.t3_table.unwrap().len(), 3);
        assert!(check_t3_conclusions(&alg, &alg, &AlgebraMap::identity(3)).unwrap());
    }

    #[test]
    fn shifted_female_with_fixed_males_fails_cross_products() {
        // With a = b: h(e_f m1) - h(e_f) h(m1) = alpha/2 (m1 - m2).
        let a = ratio(2, 5);
        let alpha = ratio(3, 4);
        let alg = two_males(a.clone(), a);
        let h = map(&alpha, [int(1), int(0)], [int(0), int(1)]);
        let r = verify_algebra_hom(&alg, &alg, &h).unwrap();
        assert!(!r.is_linear_hom);
        assert!(r.violated_constraints.iter().all(|v| v.kind == ConstraintKind::CrossProduct));
        let v = &r.violated_constraints[0];
        assert_eq!((v.indices.clone(), v.component.as_str(), v.coordinate), (vec![1, 1], "male", 1));
        assert_eq!(v.residual, "3/8");
    }

    #[test]
    fn shifted_female_with_collapsed_males_is_a_hom() {
        // h(m_j) = (a - alpha) m1 + (1 - a + alpha) m2 for both j.
        let a = ratio(2, 5);
        let alpha = ratio(3, 4);
        let alg = two_males(a.clone(), a.clone());
        let img = [&a - &alpha, int(1) - &a + &alpha];
        let h = map(&alpha, img.clone(), img);
        let r = verify_algebra_hom(&alg, &alg, &h).unwrap();
        assert!(r.is_eabp_hom, "{:?}", r.violated_constraints);
        assert!(check_t3_conclusions(&alg, &alg, &h).unwrap());
        let row = &r.t3_table.unwrap()[0];
        assert_eq!((row.x.as_str(), row.y.as_str()), ("1", "0"));
    }

    #[test]
    fn unequal_rows_break_the_female_square() {
        let alg = two_males(ratio(1, 2), ratio(1, 5));
        let h = map(&int(1), [int(1), int(0)], [int(0), int(1)]);
        let r = verify_algebra_hom(&alg, &alg, &h).unwrap();
        assert!(r.violated_constraints.iter().any(|v| v.kind == ConstraintKind::FemaleSquare));
        assert!(matches!(check_t3_conclusions(&alg, &alg, &h), Err(Error::Precondition(_))));
    }

    #[test]
    fn dibaric_hom_verdicts() {
        let alg = two_males(ratio(1, 3), ratio(1, 4));
        let xy = canonical_xy(&alg).unwrap();
        let id = AlgebraMap::identity(3);
        assert!(verify_dibaric_hom(&alg, &xy, &alg, &xy, &id).unwrap().holds());
        let double = AlgebraMap::new(Matrix::identity(3).scale(&int(2)));
        let v = verify_dibaric_hom(&alg, &xy, &alg, &xy, &double).unwrap();
        assert!(!v.holds() && !v.f_preserved);
        let bad = BqPair::new(xy.f.clone(), xy.f.clone());
        assert!(matches!(verify_dibaric_hom(&alg, &bad, &alg, &xy, &id), Err(Error::NotBq)));
    }

    #[test]
    fn block_view() {
        let h = map(&int(5), [int(7), int(8)], [int(9), int(10)]);
        let b = h.blocks(1, 1);
        assert_eq!(b.alpha, vec![vec![int(1)]]);
        assert_eq!(b.beta, vec![vec![int(5), int(-5)]]);
        assert_eq!(b.lambda, vec![vec![int(0)], vec![int(0)]]);
        assert_eq!(b.mu, vec![vec![int(7), int(8)], vec![int(9), int(10)]]);
    }
}
