use num::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::GeneralAlgebra;
use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, Scalar, Subspace};

/// A subspace verified to be closed under multiplication by the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    subspace: Subspace,
}

impl Ideal {
    pub fn new(alg: &GeneralAlgebra, subspace: Subspace) -> Result<Ideal> {
        if subspace.ambient_dim() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: subspace.ambient_dim() });
        }
        if !verify_ideal(alg, &subspace) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Ideal { subspace })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn codim(&self) -> usize {
        self.subspace.codim()
    }
}

/// `e_a v` lies in `s` for every basis vector `e_a` and every basis vector `v` of `s`.
pub fn verify_ideal(alg: &GeneralAlgebra, s: &Subspace) -> bool {
    if s.ambient_dim() != alg.dim() {
        return false;
    }
    let n = alg.dim();
    s.basis().iter().all(|v| {
        (0..n).all(|a| {
            let mut e = vec![Scalar::zero(); n];
            e[a] = Scalar::one();
            s.contains(&alg.multiply(&e, v).expect("lengths match"))
        })
    })
}

/// The square of the algebra, which is always an ideal.
pub fn square_ideal(alg: &GeneralAlgebra) -> Ideal {
    Ideal { subspace: alg.square_span() }
}

/// Quotient by an ideal, using the standard basis vectors at the non-pivot
/// coordinates of the ideal as representatives of the quotient basis.
pub fn quotient(alg: &GeneralAlgebra, ideal: &Ideal) -> Result<GeneralAlgebra> {
    let pivots = ideal.subspace().pivots();
    let n = alg.dim();
    let complement: Vec<Vec<Scalar>> = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|c| {
            let mut e = vec![Scalar::zero(); n];
            e[c] = Scalar::one();
            e
        })
        .collect();
    quotient_with_complement(alg, ideal, &complement)
}

/// Quotient by an ideal with an explicit complement. The images of the
/// `complement` vectors form the basis of the quotient.
pub fn quotient_with_complement(
    alg: &GeneralAlgebra,
    ideal: &Ideal,
    complement: &[Vec<Scalar>],
) -> Result<GeneralAlgebra> {
    let n = alg.dim();
    let k = ideal.codim();
    if ideal.subspace().ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: ideal.subspace().ambient_dim() });
    }
    if complement.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: complement.len() });
    }
    let columns: Vec<Vec<Scalar>> = complement.iter().chain(ideal.subspace().basis()).cloned().collect();
    let basis = Matrix::from_columns(&columns, n)?;
    let inv = basis
        .inverse()
        .ok_or_else(|| Error::Precondition("complement does not span a complement of the ideal".into()))?;
    GeneralAlgebra::from_products(k, |a, b| {
        let p = alg.multiply(&complement[a], &complement[b]).expect("lengths match");
        let coords = inv.mul_vec(&p).expect("square inverse");
        coords[..k].to_vec()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientCase {
    /// `alpha2 < 0`: isomorphic to the sex differentiation algebra.
    SexDiff,
    /// `alpha2 = 0`.
    DegenerateZero,
    /// `alpha2 > 0`.
    PositiveSquare,
    /// The square is a line with no idempotent on it.
    NoIdempotentSquare,
    /// The square is not one-dimensional.
    SquareNotOneDim,
}

/// `r` with `r^2 = s`, when `s` is the square of a rational.
pub fn rational_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let (p, q) = (s.numer(), s.denom());
    let (rp, rq) = (p.sqrt(), q.sqrt());
    (&rp * &rp == *p && &rq * &rq == *q).then(|| Scalar::new(rp, rq))
}

/// The normalizing substitutions, in coordinates of the classified algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisChange {
    /// Idempotent spanning the square.
    pub p: Vec<String>,
    /// Chosen second basis vector.
    pub q: Vec<String>,
    /// `pq = alpha1 p`.
    pub alpha1: String,
    /// `q' = q - alpha1 p`, so that `pq' = 0` and `q'^2 = alpha2 p`.
    pub q_prime: Vec<String>,
    /// `q'` is further divided by `sqrt(|alpha2|)`; kept symbolic.
    pub scale: String,
    /// `|alpha2|` when the scale is rational, its square root.
    pub scale_exact: Option<String>,
    pub scale_approx: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientClassification {
    pub case: QuotientCase,
    pub alpha2: Option<Scalar>,
    pub basis_change: Option<BasisChange>,
    p: Option<Vec<Scalar>>,
    q_prime: Option<Vec<Scalar>>,
}

impl QuotientClassification {
    fn early(case: QuotientCase) -> Self {
        QuotientClassification { case, alpha2: None, basis_change: None, p: None, q_prime: None }
    }

    pub fn is_sex_diff(&self) -> bool {
        self.case == QuotientCase::SexDiff
    }

    /// For a `SexDiff` algebra, the `(w, m)` images of its basis vectors
    /// under the isomorphism onto the sex differentiation algebra, as
    /// columns of a 2x2 matrix. `None` unless `sqrt(-alpha2)` is rational.
    pub fn isomorphism_exact(&self) -> Option<Matrix> {
        let minus = -self.alpha2.clone()?;
        let r = rational_sqrt(&minus)?;
        self.isomorphism_with(&r)
    }

    /// Decimal rendering of the isomorphism, for reports.
    pub fn isomorphism_approx(&self) -> Option<[[f64; 2]; 2]> {
        if !self.is_sex_diff() {
            return None;
        }
        let r = scalar::to_f64(&-self.alpha2.clone()?).sqrt();
        let inv = self.pq_coordinates()?;
        let mut out = [[0.0; 2]; 2];
        for col in 0..2 {
            let s = scalar::to_f64(&inv[(0, col)]);
            let t = scalar::to_f64(&inv[(1, col)]);
            out[0][col] = s - t * r;
            out[1][col] = s + t * r;
        }
        Some(out)
    }

    /// Coordinates along `(p, q')` of the standard basis vectors, as columns.
    fn pq_coordinates(&self) -> Option<Matrix> {
        let (p, qp) = (self.p.as_ref()?, self.q_prime.as_ref()?);
        Matrix::from_columns(&[p.clone(), qp.clone()], 2).ok()?.inverse()
    }

    /// `s p + t q'` goes to `s (w + m) + t r (m - w)`.
    fn isomorphism_with(&self, r: &Scalar) -> Option<Matrix> {
        if !self.is_sex_diff() {
            return None;
        }
        let inv = self.pq_coordinates()?;
        let cols: Vec<Vec<Scalar>> = (0..2)
            .map(|col| {
                let (s, t) = (&inv[(0, col)], &inv[(1, col)]);
                vec![s - t * r, s + t * r]
            })
            .collect();
        Matrix::from_columns(&cols, 2).ok()
    }
}

/// Classifies a two-dimensional algebra by normalizing it to
/// `p^2 = p`, `pq' = 0`, `q'^2 = alpha2 p` and reading the sign of `alpha2`.
pub fn classify_two_dim_quotient(q: &GeneralAlgebra) -> Result<QuotientClassification> {
    if q.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: q.dim() });
    }
    let square = q.square_span();
    if square.dim() != 1 {
        return Ok(QuotientClassification::early(QuotientCase::SquareNotOneDim));
    }
    let c = square.basis()[0].clone();
    let c2 = q.multiply(&c, &c)?;
    let mu = coefficient_along(&c, &c2)?;
    if mu.is_zero() {
        return Ok(QuotientClassification::early(QuotientCase::NoIdempotentSquare));
    }
    let p: Vec<Scalar> = c.iter().map(|v| v / &mu).collect();
    let second = (0..2)
        .map(|i| {
            let mut e = vec![Scalar::zero(); 2];
            e[i] = Scalar::one();
            e
        })
        .find(|e| !square.contains(e))
        .expect("a line in the plane misses a basis vector");
    let alpha1 = coefficient_along(&p, &q.multiply(&p, &second)?)?;
    let q_prime: Vec<Scalar> = second.iter().zip(&p).map(|(s, pv)| s - &alpha1 * pv).collect();
    let alpha2 = coefficient_along(&p, &q.multiply(&q_prime, &q_prime)?)?;
    let case = if alpha2.is_negative() {
        QuotientCase::SexDiff
    } else if alpha2.is_zero() {
        QuotientCase::DegenerateZero
    } else {
        QuotientCase::PositiveSquare
    };
    let abs = alpha2.abs();
    let render = |v: &[Scalar]| v.iter().map(scalar::render).collect::<Vec<_>>();
    let basis_change = BasisChange {
        p: render(&p),
        q: render(&second),
        alpha1: scalar::render(&alpha1),
        q_prime: render(&q_prime),
        scale: format!("1/sqrt({})", scalar::render(&abs)),
        scale_exact: (!abs.is_zero()).then(|| rational_sqrt(&abs)).flatten().map(|r| scalar::render(&r.recip())),
        scale_approx: (!abs.is_zero()).then(|| scalar::approx_f64(1.0 / scalar::to_f64(&abs).sqrt())),
    };
    Ok(QuotientClassification {
        case,
        alpha2: Some(alpha2),
        basis_change: Some(basis_change),
        p: Some(p),
        q_prime: Some(q_prime),
    })
}

/// `lambda` with `v = lambda * base`, where `v` is known to lie on the line of `base`.
fn coefficient_along(base: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    let i = base.iter().position(|b| !b.is_zero()).expect("nonzero base");
    let lambda = &v[i] / &base[i];
    if v.iter().zip(base).any(|(x, b)| *x != &lambda * b) {
        return Err(Error::InvariantBreach("product left the square of the algebra".into()));
    }
    Ok(lambda)
}

/// Result of the quotient criterion for dibaricity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DibaricVerdict {
    pub classification: QuotientClassification,
    /// `2 x dim` matrix of the map onto the sex differentiation algebra
    /// through the quotient, in `(w, m)` coordinates, when exact.
    pub onto: Option<Matrix>,
}

impl DibaricVerdict {
    pub fn is_dibaric(&self) -> bool {
        self.classification.is_sex_diff()
    }
}

/// Decides dibaricity through an ideal of codimension 2: the algebra is
/// dibaric when the quotient is isomorphic to the sex differentiation algebra.
pub fn is_dibaric_via_tt1(alg: &GeneralAlgebra, ideal: &Subspace) -> Result<DibaricVerdict> {
    let ideal = Ideal::new(alg, ideal.clone())?;
    if ideal.codim() != 2 {
        return Err(Error::Codimension { found: ideal.codim() });
    }
    let quo = quotient(alg, &ideal)?;
    let classification = classify_two_dim_quotient(&quo)?;
    let onto = match classification.isomorphism_exact() {
        Some(iso) => Some(iso.mul(&projection(alg.dim(), &ideal)?)?),
        None => None,
    };
    Ok(DibaricVerdict { classification, onto })
}

/// Matrix of the projection onto the quotient in the basis used by [`quotient`].
fn projection(n: usize, ideal: &Ideal) -> Result<Matrix> {
    let pivots = ideal.subspace().pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut columns: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&c| {
            let mut e = vec![Scalar::zero(); n];
            e[c] = Scalar::one();
            e
        })
        .collect();
    columns.extend(ideal.subspace().basis().iter().cloned());
    let inv = Matrix::from_columns(&columns, n)?
        .inverse()
        .ok_or_else(|| Error::InvariantBreach("echelon complement is not a complement".into()))?;
    let rows = (0..free.len()).map(|r| inv.row(r).to_vec()).collect();
    Matrix::from_rows(rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dibaric::{presentation, sex_diff_algebra, sex_diff_pq};
    use crate::exact::scalar::{int, ratio};

    #[test]
    fn square_of_sex_diff_is_an_ideal() {
        let alg = sex_diff_algebra();
        let sq = square_ideal(&alg);
        assert_eq!(sq.subspace(), &Subspace::span(2, [vec![int(1), int(1)]]).unwrap());
        assert!(verify_ideal(&alg, sq.subspace()));
        assert!(verify_ideal(&alg, &Subspace::zero(2)));
        assert!(verify_ideal(&alg, &Subspace::full(2)));
        assert!(!verify_ideal(&alg, &Subspace::span(2, [vec![int(1), int(0)]]).unwrap()));
    }

    #[test]
    fn quotient_by_square_is_zero() {
        let alg = sex_diff_algebra();
        let q = quotient(&alg, &square_ideal(&alg)).unwrap();
        assert_eq!(q, GeneralAlgebra::zero_algebra(1));
        let same = quotient(&alg, &Ideal::new(&alg, Subspace::zero(2)).unwrap()).unwrap();
        assert_eq!(same, alg);
    }

    #[test]
    fn presentations_classify_by_sign() {
        let c = classify_two_dim_quotient(&sex_diff_algebra()).unwrap();
        assert_eq!(c.case, QuotientCase::SexDiff);
        let c = classify_two_dim_quotient(&sex_diff_pq()).unwrap();
        assert_eq!((c.case, c.alpha2), (QuotientCase::SexDiff, Some(int(-1))));
        assert_eq!(classify_two_dim_quotient(&presentation(int(0))).unwrap().case, QuotientCase::DegenerateZero);
        assert_eq!(classify_two_dim_quotient(&presentation(int(1))).unwrap().case, QuotientCase::PositiveSquare);
    }

    #[test]
    fn sex_diff_normalization_in_wm_basis() {
        // p = w + m, q = w, pq = p/2, q' = (w - m)/2, q'^2 = -p/4.
        let c = classify_two_dim_quotient(&sex_diff_algebra()).unwrap();
        assert_eq!(c.alpha2, Some(ratio(-1, 4)));
        let swap = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]], 2).unwrap();
        let iso = c.isomorphism_exact().unwrap();
        assert_eq!(iso, swap);
        let alg = sex_diff_algebra();
        assert_eq!(alg.change_basis(&iso).unwrap(), alg);
        let approx = c.isomorphism_approx().unwrap();
        assert!(approx[0][0].abs() < 1e-12 && (approx[1][0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nilpotent_square_has_no_idempotent() {
        // p^2 = 0, pq = p, q^2 = p
        let alg = GeneralAlgebra::from_products(2, |a, b| match (a, b) {
            (0, 0) => vec![int(0), int(0)],
            _ => vec![int(1), int(0)],
        })
        .unwrap();
        let c = classify_two_dim_quotient(&alg).unwrap();
        assert_eq!(c.case, QuotientCase::NoIdempotentSquare);
        assert!(c.alpha2.is_none());
        let zero = classify_two_dim_quotient(&GeneralAlgebra::zero_algebra(2)).unwrap();
        assert_eq!(zero.case, QuotientCase::SquareNotOneDim);
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-1)), None);
    }

    #[test]
    fn codimension_is_checked() {
        let alg = sex_diff_algebra();
        assert!(matches!(
            is_dibaric_via_tt1(&alg, &square_ideal(&alg).subspace().clone()),
            Err(Error::Codimension { found: 1 })
        ));
        let not_ideal = Subspace::span(2, [vec![int(1), int(0)]]).unwrap();
        assert!(matches!(is_dibaric_via_tt1(&alg, &not_ideal), Err(Error::NotAnIdeal)));
        let v = is_dibaric_via_tt1(&alg, &Subspace::zero(2)).unwrap();
        assert!(v.is_dibaric());
        let onto = v.onto.unwrap();
        assert_eq!(onto.rank(), 2);
        assert_eq!(alg.change_basis(&onto).unwrap(), alg);
    }
}
