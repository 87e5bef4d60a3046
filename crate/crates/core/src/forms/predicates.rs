use num::Zero;
use serde::Serialize;

use super::bq::verify_bq;
use super::invariant::{annihilator, invariant_forms};
use super::BqPair;
use crate::algebra::{check_identity, GeneralAlgebra, Identity, IdentityVerdict};
use crate::error::{Error, Result};
use crate::exact::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConservativeVerdict {
    /// `x^2 y = f(x) xy` holds, decided on basis triples in polarized form.
    pub identity_holds: bool,
    /// First basis triple `(a, b, c)` with `2(e_a e_b)e_c != f_a e_b e_c + f_b e_a e_c`.
    pub failing_triple: Option<(usize, usize, usize)>,
    /// The elements killed by every f-invariant form are exactly the annihilator.
    pub perp_equals_annihilator: bool,
}

impl ConservativeVerdict {
    pub fn holds(&self) -> bool {
        self.identity_holds
    }
}

/// Checks `x^2 y = f(x) xy` through its polarization in `x`,
/// `2(e_a e_b)e_c = f(e_a)(e_b e_c) + f(e_b)(e_a e_c)`, on every basis
/// triple, and separately compares the common kernel of the f-invariant
/// forms with the annihilator.
pub fn conservative_identity(alg: &GeneralAlgebra, f: &[Scalar]) -> Result<ConservativeVerdict> {
    let n = alg.dim();
    alg.check_len(f.len())?;
    let two = Scalar::from_integer(2.into());
    let mut failing_triple = None;
    'search: for a in 0..n {
        for b in 0..n {
            let ab = alg.basis_product(a, b);
            for c in 0..n {
                let mut lhs = alg.mul_unchecked(ab, &unit(n, c));
                lhs.iter_mut().for_each(|v| *v *= &two);
                let bc = alg.basis_product(b, c);
                let ac = alg.basis_product(a, c);
                let rhs: Vec<Scalar> = bc.iter().zip(ac).map(|(u, w)| &f[a] * u + &f[b] * w).collect();
                if lhs != rhs {
                    failing_triple = Some((a, b, c));
                    break 'search;
                }
            }
        }
    }
    let perp = invariant_forms(alg, f)?.perp();
    Ok(ConservativeVerdict {
        identity_holds: failing_triple.is_none(),
        failing_triple,
        perp_equals_annihilator: perp == annihilator(alg),
    })
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::from_integer(1.into());
    v
}

fn require_nonzero_bq(alg: &GeneralAlgebra, pair: &BqPair) -> Result<()> {
    let v = verify_bq(alg, pair)?;
    if !v.holds {
        return Err(Error::NotBq);
    }
    if !v.nonzero {
        return Err(Error::ZeroPair);
    }
    Ok(())
}

/// Conservativity of a dibaric algebra `(alg, (f, g))`, judged with `f`.
pub fn is_conservative(alg: &GeneralAlgebra, pair: &BqPair) -> Result<ConservativeVerdict> {
    require_nonzero_bq(alg, pair)?;
    conservative_identity(alg, &pair.f)
}

/// `(x^2)^2 = f(x)^2 x^2` by full expansion in generic coordinates.
pub fn bernstein_identity(alg: &GeneralAlgebra, f: &[Scalar]) -> Result<IdentityVerdict> {
    check_identity(alg, &Identity::Bernstein { f: f.to_vec() })
}

/// Bernstein (stationarity) property of a dibaric algebra `(alg, (f, g))`.
pub fn is_bernstein(alg: &GeneralAlgebra, pair: &BqPair) -> Result<IdentityVerdict> {
    require_nonzero_bq(alg, pair)?;
    bernstein_identity(alg, &pair.f)
}

/// Verifies `x^[k] = f(x)^(2^k - 2) x^2` in a conservative algebra.
pub fn plenary_formula_check(alg: &GeneralAlgebra, pair: &BqPair, k: u32) -> Result<IdentityVerdict> {
    if !is_conservative(alg, pair)?.holds() {
        return Err(Error::NotConservative);
    }
    check_identity(alg, &Identity::PlenaryPower { f: pair.f.coeffs().to_vec(), k })
}
