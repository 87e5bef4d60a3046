//! The quadratic evolution operator `V(z) = z^2` on the product of simplices.

use num::One;

use super::element::Element;
use super::structure::GeneralAlgebra;
use crate::error::{Error, Result};
use crate::exact::{scalar, Scalar};

/// A population state: female and male type distributions, each a point of
/// a probability simplex, stored as one element of the evolution algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    element: Element,
    n: usize,
}

impl State {
    pub fn new(alg: &GeneralAlgebra, coords: Vec<Scalar>) -> Result<Self> {
        let t = alg.require_eabp()?;
        if !t.is_strict() {
            return Err(Error::PermissiveTensor);
        }
        alg.check_len(coords.len())?;
        let state = State { element: Element::new(coords), n: t.n() };
        state.validate()?;
        Ok(state)
    }

    /// State from separate female and male distributions.
    pub fn from_parts(alg: &GeneralAlgebra, x: &[Scalar], y: &[Scalar]) -> Result<Self> {
        State::new(alg, x.iter().chain(y).cloned().collect())
    }

    fn validate(&self) -> Result<()> {
        if let Some((i, v)) = self.element.iter().enumerate().find(|(_, v)| scalar::is_negative(v)) {
            return Err(Error::InvalidState(format!("coordinate {} is negative ({v})", i + 1)));
        }
        let female: Scalar = self.female().iter().sum();
        let male: Scalar = self.male().iter().sum();
        if !female.is_one() {
            return Err(Error::InvalidState(format!("female coordinates sum to {female}")));
        }
        if !male.is_one() {
            return Err(Error::InvalidState(format!("male coordinates sum to {male}")));
        }
        Ok(())
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn coords(&self) -> &[Scalar] {
        self.element.coords()
    }

    pub fn female(&self) -> &[Scalar] {
        &self.element[..self.n]
    }

    pub fn male(&self) -> &[Scalar] {
        &self.element[self.n..]
    }
}

/// One generation of the evolution operator: `V(z) = z^2`.
pub fn evolve(alg: &GeneralAlgebra, s: &State) -> Result<State> {
    alg.require_eabp()?;
    let next = alg.multiply(s.coords(), s.coords())?;
    let out = State { element: Element::new(next), n: s.n };
    out.validate().map_err(|e| Error::InvariantBreach(format!("evolution left the simplex: {e}")))?;
    Ok(out)
}

/// Iterated squaring `z^[k]`, with `z^[0] = z` and `z^[k+1] = (z^[k])^2`.
pub fn plenary_power(alg: &GeneralAlgebra, z: &[Scalar], k: u32) -> Result<Vec<Scalar>> {
    alg.check_len(z.len())?;
    let mut cur = z.to_vec();
    for _ in 0..k {
        cur = alg.mul_unchecked(&cur, &cur);
    }
    Ok(cur)
}

/// `[s, V(s), ..., V^T(s)]`.
pub fn trajectory(alg: &GeneralAlgebra, s: &State, steps: usize) -> Result<Vec<State>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(s.clone());
    for _ in 0..steps {
        let next = evolve(alg, out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

/// Whether a state is an equilibrium, `V(s) = s`.
pub fn is_fixed_point(alg: &GeneralAlgebra, s: &State) -> Result<bool> {
    Ok(evolve(alg, s)?.coords() == s.coords())
}
