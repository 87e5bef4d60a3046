use num::{One, Zero};
use serde::Serialize;

use super::{BqPair, LinearForm};
use crate::algebra::{check_identity, GeneralAlgebra, Identity, IdentityVerdict, InheritanceTensor};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};

/// Which family of bq-homomorphisms of an evolution algebra a pair
/// belongs to. Forms are written `f = (alpha; beta)`, `g = (gamma; delta)`
/// over female and male coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BqFamily {
    /// `(0, 0)`.
    Zero,
    /// `(0, g)` with `g` vanishing on every product.
    B01,
    /// `(f, 0)` with `f` vanishing on every product.
    B10,
    /// `f` female-only, `g` male-only, with the rank-one coupling.
    B12,
    /// `f` male-only, `g` female-only, with the rank-one coupling.
    B21,
    /// The pair does not satisfy the bq law.
    NotBq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BqVerdict {
    pub holds: bool,
    pub nonzero: bool,
    pub identity: IdentityVerdict,
}

/// The weights `X(z) = Σ x_i` and `Y(z) = Σ y_j` of an evolution algebra.
pub fn canonical_xy(alg: &GeneralAlgebra) -> Result<BqPair> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    let f = (0..n + nu).map(|a| if a < n { Scalar::one() } else { Scalar::zero() }).collect();
    let g = (0..n + nu).map(|a| if a < n { Scalar::zero() } else { Scalar::one() }).collect();
    Ok(BqPair::new(LinearForm::new(f), LinearForm::new(g)))
}

/// Decides `f(xy) = g(xy) = (f(x)g(y) + f(y)g(x))/2` for generic `x, y`.
pub fn verify_bq(alg: &GeneralAlgebra, pair: &BqPair) -> Result<BqVerdict> {
    let identity = check_identity(alg, &Identity::BqLaw { f: pair.f.coeffs().to_vec(), g: pair.g.coeffs().to_vec() })?;
    Ok(BqVerdict { holds: identity.holds, nonzero: pair.is_nonzero(), identity })
}

/// Places a verified pair of an evolution algebra in its family.
pub fn classify_bq(alg: &GeneralAlgebra, pair: &BqPair) -> Result<BqFamily> {
    let t = alg.require_eabp()?;
    let verdict = verify_bq(alg, pair)?;
    let n = t.n();
    let (alpha, beta) = pair.f.split_at(n);
    let (gamma, delta) = pair.g.split_at(n);
    let zero = |v: &[Scalar]| v.iter().all(Zero::is_zero);

    if !verdict.holds {
        return Ok(BqFamily::NotBq);
    }
    let family = if pair.f.is_zero() && pair.g.is_zero() {
        Some(BqFamily::Zero)
    } else if pair.f.is_zero() {
        vanishes_on_products(t, gamma, delta).then_some(BqFamily::B01)
    } else if pair.g.is_zero() {
        vanishes_on_products(t, alpha, beta).then_some(BqFamily::B10)
    } else if zero(beta) && zero(gamma) {
        rank_one_coupled(t, alpha, delta).then_some(BqFamily::B12)
    } else if zero(alpha) && zero(delta) {
        rank_one_coupled(t, gamma, beta).then_some(BqFamily::B21)
    } else {
        None
    };
    family.ok_or_else(|| Error::InvariantBreach("bq pair satisfies the law but matches no family".into()))
}

/// `Σ_k Pf(i,j,k) u_k + Σ_l Pm(i,j,l) v_l = 0` for all `i, j`.
fn vanishes_on_products(t: &InheritanceTensor, u: &[Scalar], v: &[Scalar]) -> bool {
    (0..t.n()).all(|i| {
        (0..t.nu()).all(|j| {
            let s: Scalar = (0..t.n()).map(|k| t.female(i, j, k) * &u[k]).sum::<Scalar>()
                + (0..t.nu()).map(|l| t.male(i, j, l) * &v[l]).sum::<Scalar>();
            s.is_zero()
        })
    })
}

/// `Σ_k Pf(i,j,k) a_k = Σ_l Pm(i,j,l) d_l = a_i d_j` for all `i, j`.
fn rank_one_coupled(t: &InheritanceTensor, a: &[Scalar], d: &[Scalar]) -> bool {
    (0..t.n()).all(|i| {
        (0..t.nu()).all(|j| {
            let fem: Scalar = (0..t.n()).map(|k| t.female(i, j, k) * &a[k]).sum();
            let mal: Scalar = (0..t.nu()).map(|l| t.male(i, j, l) * &d[l]).sum();
            let prod = &a[i] * &d[j];
            fem == prod && mal == prod
        })
    })
}

/// Forms `g` for which `(0, g)` (equivalently `(g, 0)`) is a bq pair,
/// computed from the inheritance coefficients.
pub fn zero_partner_forms(alg: &GeneralAlgebra) -> Result<Subspace> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    let mut rows = Vec::with_capacity(n * nu);
    for i in 0..n {
        for j in 0..nu {
            let mut row: Vec<Scalar> = (0..n).map(|k| t.female(i, j, k).clone()).collect();
            row.extend((0..nu).map(|l| t.male(i, j, l).clone()));
            rows.push(row);
        }
    }
    Ok(Subspace::kernel(&Matrix::from_rows(rows, n + nu)?))
}

/// Given a female-supported `f = (alpha; 0)`, finds a male-supported `g`
/// making `(f, g)` a bq pair, if one exists.
///
/// With `alpha` fixed the coupling conditions are linear in `delta`:
/// `alpha_i delta_j = Σ_k Pf(i,j,k) alpha_k` and
/// `Σ_l Pm(i,j,l) delta_l - alpha_i delta_j = 0`.
pub fn complete_female_male(alg: &GeneralAlgebra, alpha: &[Scalar]) -> Result<Option<BqPair>> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    if alpha.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: alpha.len() });
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..nu {
            let mut r = vec![Scalar::zero(); nu];
            r[j] = alpha[i].clone();
            rows.push(r);
            rhs.push((0..n).map(|k| t.female(i, j, k) * &alpha[k]).sum());
            let mut r = (0..nu).map(|l| t.male(i, j, l).clone()).collect::<Vec<_>>();
            r[j] -= &alpha[i];
            rows.push(r);
            rhs.push(Scalar::zero());
        }
    }
    let Some(delta) = Matrix::from_rows(rows, nu)?.solve(&rhs)? else {
        return Ok(None);
    };
    let f = alpha.iter().cloned().chain(std::iter::repeat_n(Scalar::zero(), nu)).collect();
    let g = std::iter::repeat_n(Scalar::zero(), n).chain(delta).collect();
    Ok(Some(BqPair::new(LinearForm::new(f), LinearForm::new(g))))
}

/// Given a male-supported `f = (0; beta)`, finds a female-supported `g`
/// making `(f, g)` a bq pair, if one exists.
pub fn complete_male_female(alg: &GeneralAlgebra, beta: &[Scalar]) -> Result<Option<BqPair>> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    if beta.len() != nu {
        return Err(Error::DimensionMismatch { expected: nu, found: beta.len() });
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..nu {
            let mut r = vec![Scalar::zero(); n];
            r[i] = beta[j].clone();
            rows.push(r);
            rhs.push((0..nu).map(|l| t.male(i, j, l) * &beta[l]).sum());
            let mut r = (0..n).map(|k| t.female(i, j, k).clone()).collect::<Vec<_>>();
            r[i] -= &beta[j];
            rows.push(r);
            rhs.push(Scalar::zero());
        }
    }
    let Some(gamma) = Matrix::from_rows(rows, n)?.solve(&rhs)? else {
        return Ok(None);
    };
    let f = std::iter::repeat_n(Scalar::zero(), n).chain(beta.iter().cloned()).collect();
    let g = gamma.into_iter().chain(std::iter::repeat_n(Scalar::zero(), nu)).collect();
    Ok(Some(BqPair::new(LinearForm::new(f), LinearForm::new(g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{eabp_from_tensor, Mode};
    use crate::exact::scalar::{int, ratio};

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

    fn form(xs: &[i64]) -> LinearForm {
        LinearForm::new(xs.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn canonical_pair_is_b12() {
        let alg = two_males(ratio(1, 3), ratio(2, 3));
        let xy = canonical_xy(&alg).unwrap();
        assert_eq!(xy.f, form(&[1, 0, 0]));
        assert_eq!(xy.g, form(&[0, 1, 1]));
        let v = verify_bq(&alg, &xy).unwrap();
        assert!(v.holds && v.nonzero);
        assert_eq!(classify_bq(&alg, &xy).unwrap(), BqFamily::B12);
    }

    #[test]
    fn x_paired_with_itself_is_not_bq() {
        let alg = two_males(ratio(1, 3), ratio(2, 3));
        let pair = BqPair::new(form(&[1, 0, 0]), form(&[1, 0, 0]));
        assert!(!verify_bq(&alg, &pair).unwrap().holds);
        assert_eq!(classify_bq(&alg, &pair).unwrap(), BqFamily::NotBq);
    }

    #[test]
    fn zero_pair_and_b01() {
        let alg = two_males(int(1), int(0));
        let zero = BqPair::new(form(&[0, 0, 0]), form(&[0, 0, 0]));
        let v = verify_bq(&alg, &zero).unwrap();
        assert!(v.holds && !v.nonzero);
        assert_eq!(classify_bq(&alg, &zero).unwrap(), BqFamily::Zero);

        let b01 = BqPair::new(form(&[0, 0, 0]), form(&[1, -1, -1]));
        assert_eq!(classify_bq(&alg, &b01).unwrap(), BqFamily::B01);
        let b10 = BqPair::new(form(&[1, -1, -1]), form(&[0, 0, 0]));
        assert_eq!(classify_bq(&alg, &b10).unwrap(), BqFamily::B10);
    }

    #[test]
    fn completion_recovers_the_canonical_partner() {
        let alg = two_males(ratio(1, 5), ratio(3, 7));
        let pair = complete_female_male(&alg, &[int(1)]).unwrap().unwrap();
        assert_eq!(pair, canonical_xy(&alg).unwrap());
        let pair = complete_male_female(&alg, &[int(1), int(1)]).unwrap().unwrap();
        assert_eq!(classify_bq(&alg, &pair).unwrap(), BqFamily::B21);
    }

    #[test]
    fn non_eabp_is_rejected() {
        let alg = GeneralAlgebra::zero_algebra(2);
        assert!(matches!(canonical_xy(&alg), Err(Error::NotEabp)));
    }
}
