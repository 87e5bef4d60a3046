use std::collections::BTreeSet;

use num::{One, Zero};

use crate::algebra::identity::generic;
use crate::algebra::GeneralAlgebra;
use crate::error::Result;
use crate::exact::{scalar, Matrix, Monomial, MultiPoly, Scalar, Subspace};

/// Forms `F` with `F(xy) = (f(x)F(y) + f(y)F(x))/2` for all `x, y`.
///
/// The law is bilinear, so it is imposed on every pair of basis vectors
/// `a <= b`: `Σ_d c_ab^d F_d - f_a F_b / 2 - f_b F_a / 2 = 0`.
pub fn invariant_forms(alg: &GeneralAlgebra, f: &[Scalar]) -> Result<Subspace> {
    let n = alg.dim();
    alg.check_len(f.len())?;
    let half = scalar::half();
    let mut rows = Vec::with_capacity(n * (n + 1) / 2);
    for a in 0..n {
        for b in a..n {
            let mut row = alg.basis_product(a, b).to_vec();
            row[b] -= &f[a] * &half;
            row[a] -= &f[b] * &half;
            rows.push(row);
        }
    }
    Ok(Subspace::kernel(&Matrix::from_rows(rows, n)?))
}

/// `∩_i ker(P_i - I)` over the male transition matrices of an evolution
/// algebra, embedded in the male block of the dual space. This is the space
/// of X-invariant forms computed directly from the inheritance coefficients.
pub fn male_invariant_solutions(alg: &GeneralAlgebra) -> Result<Subspace> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    let mut w = Subspace::full(nu);
    for i in 0..n {
        let shifted = t.male_transition(i).sub(&Matrix::identity(nu))?;
        w = w.intersect(&Subspace::kernel(&shifted))?;
    }
    let embedded =
        w.basis().iter().map(|v| std::iter::repeat_n(Scalar::zero(), n).chain(v.iter().cloned()).collect::<Vec<_>>());
    Subspace::span(n + nu, embedded)
}

/// `{z : zt = 0 for all t}`, from `z e_b = 0` for every basis vector.
pub fn annihilator(alg: &GeneralAlgebra) -> Subspace {
    let n = alg.dim();
    let mut rows = Vec::with_capacity(n * n);
    for b in 0..n {
        for d in 0..n {
            rows.push((0..n).map(|a| alg.structure_constant(a, b, d).clone()).collect());
        }
    }
    Subspace::kernel(&Matrix::from_rows(rows, n).expect("rows have length dim"))
}

/// The annihilator of an evolution algebra from the inheritance
/// coefficients: `Σ_i Pf(i,j,k) x_i = Σ_i Pm(i,j,l) x_i = 0` for every `j`,
/// and `Σ_j Pf(i,j,k) y_j = Σ_j Pm(i,j,l) y_j = 0` for every `i`.
pub fn annihilator_via_tensor(alg: &GeneralAlgebra) -> Result<Subspace> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    let mut rows = Vec::new();
    for j in 0..nu {
        for k in 0..n {
            let mut r = vec![Scalar::zero(); n + nu];
            for (i, ri) in r.iter_mut().enumerate().take(n) {
                *ri = t.female(i, j, k).clone();
            }
            rows.push(r);
        }
        for l in 0..nu {
            let mut r = vec![Scalar::zero(); n + nu];
            for (i, ri) in r.iter_mut().enumerate().take(n) {
                *ri = t.male(i, j, l).clone();
            }
            rows.push(r);
        }
    }
    for i in 0..n {
        for k in 0..n {
            let mut r = vec![Scalar::zero(); n + nu];
            for j in 0..nu {
                r[n + j] = t.female(i, j, k).clone();
            }
            rows.push(r);
        }
        for l in 0..nu {
            let mut r = vec![Scalar::zero(); n + nu];
            for j in 0..nu {
                r[n + j] = t.male(i, j, l).clone();
            }
            rows.push(r);
        }
    }
    Ok(Subspace::kernel(&Matrix::from_rows(rows, n + nu)?))
}

/// Elements on which every form of `forms` vanishes.
pub fn perp_of_forms(forms: &Subspace) -> Subspace {
    forms.perp()
}

/// Forms vanishing on the square of the algebra.
pub fn disappearing_forms(alg: &GeneralAlgebra) -> Subspace {
    alg.square_span().perp()
}

/// Linear forms whose value on the product of simplices is preserved by
/// the evolution operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexInvariants {
    /// Linear forms `F` with `F(V(z)) = F(z)` for every state `z`.
    pub linear: Subspace,
    /// Affine functions `F(z) + c` with the same property, as vectors
    /// `(F; c)` of length `dim + 1`. Always `linear` plus the constants.
    pub affine: Subspace,
    /// Affine functions that vanish identically on the states; two invariant
    /// functions differing by one of these agree on the simplex.
    pub vanishing: Subspace,
}

impl SimplexInvariants {
    pub fn contains(&self, form: &[Scalar]) -> bool {
        self.linear.contains(form)
    }

    /// Number of independent invariant functions on the states.
    pub fn effective_dim(&self) -> usize {
        self.affine.dim() - self.vanishing.dim()
    }
}

/// Invariant forms of the evolution operator restricted to the product of
/// simplices: `F(z^2) - F(z)` must vanish after substituting
/// `x_n = 1 - Σ_{i<n} x_i` and `y_nu = 1 - Σ_{j<nu} y_j`.
pub fn simplex_invariant_forms(alg: &GeneralAlgebra) -> Result<SimplexInvariants> {
    let t = alg.require_eabp()?;
    let (n, nu) = (t.n(), t.nu());
    let dim = n + nu;
    let z = generic(dim, 0);
    let square = alg.multiply_symbolic(&z, &z);
    let restrict = simplex_restriction(n, nu);

    // Column d: restricted polynomial of F = e_d^*.
    let moved: Vec<MultiPoly> = (0..dim).map(|d| restrict(&(&square[d] - &z[d]))).collect();
    let linear = Subspace::kernel(&coefficient_system(&moved, &[]));

    let mut affine_basis: Vec<Vec<Scalar>> =
        linear.basis().iter().map(|v| v.iter().cloned().chain([Scalar::zero()]).collect()).collect();
    let mut constant = vec![Scalar::zero(); dim + 1];
    constant[dim] = Scalar::one();
    affine_basis.push(constant);
    let affine = Subspace::span(dim + 1, affine_basis)?;

    let values: Vec<MultiPoly> = (0..dim).map(|d| restrict(&z[d])).collect();
    let vanishing = Subspace::kernel(&coefficient_system(&values, &[MultiPoly::constant(Scalar::one())]));

    Ok(SimplexInvariants { linear, affine, vanishing })
}

fn simplex_restriction(n: usize, nu: usize) -> impl Fn(&MultiPoly) -> MultiPoly {
    let last_female = (n - 1) as u32;
    let last_male = (n + nu - 1) as u32;
    let complement = |from: usize, to: usize| {
        let mut p = MultiPoly::constant(Scalar::one());
        for v in from..to {
            p -= &MultiPoly::var(v as u32);
        }
        p
    };
    let x_last = complement(0, n - 1);
    let y_last = complement(n, n + nu - 1);
    move |p: &MultiPoly| p.substitute(last_female, &x_last).substitute(last_male, &y_last)
}

/// Matrix whose rows are indexed by monomials and whose columns hold the
/// coefficients of `columns` followed by `extra`.
fn coefficient_system(columns: &[MultiPoly], extra: &[MultiPoly]) -> Matrix {
    let all: Vec<&MultiPoly> = columns.iter().chain(extra).collect();
    let monomials: BTreeSet<Monomial> = all.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    let rows: Vec<Vec<Scalar>> = monomials.iter().map(|m| all.iter().map(|p| p.coefficient(m)).collect()).collect();
    if rows.is_empty() {
        return Matrix::zeros(0, all.len());
    }
    Matrix::from_rows(rows, all.len()).expect("rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{eabp_from_tensor, InheritanceTensor, Mode};
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

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn two_males_invariant_dimensions() {
        let x = v(&[1, 0, 0]);
        assert_eq!(invariant_forms(&two_males(int(1), int(0)), &x).unwrap().dim(), 2);
        let generic = invariant_forms(&two_males(ratio(1, 3), ratio(1, 5)), &x).unwrap();
        assert_eq!(generic, Subspace::span(3, [v(&[0, 1, 1])]).unwrap());
    }

    #[test]
    fn two_males_annihilator_is_trivial() {
        assert!(annihilator(&two_males(int(1), int(0))).is_zero());
        assert!(annihilator_via_tensor(&two_males(int(1), int(0))).unwrap().is_zero());
    }

    #[test]
    fn perp_of_y_in_two_males() {
        let j = Subspace::span(3, [v(&[0, 1, 1])]).unwrap();
        let expected = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, -1])]).unwrap();
        assert_eq!(perp_of_forms(&j), expected);
        assert!(perp_of_forms(&Subspace::full(3)).is_zero());
        assert_eq!(perp_of_forms(&Subspace::zero(3)), Subspace::full(3));
    }

    #[test]
    fn zero_algebra_has_every_form_disappearing() {
        assert_eq!(disappearing_forms(&GeneralAlgebra::zero_algebra(3)), Subspace::full(3));
    }

    #[test]
    fn weights_are_simplex_invariant() {
        let inv = simplex_invariant_forms(&two_males(ratio(1, 3), ratio(1, 5))).unwrap();
        assert!(inv.contains(&v(&[1, 0, 0])));
        assert!(inv.contains(&v(&[0, 1, 1])));
        assert!(!inv.contains(&v(&[0, 1, 0])));
        // X - 1, Y - 1 vanish on the states.
        assert_eq!(inv.vanishing.dim(), 2);
    }
}
