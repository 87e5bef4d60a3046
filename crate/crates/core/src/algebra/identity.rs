//! Exact checking of polynomial identities of an algebra.
//!
//! Each law is expanded in generic coordinates: slot `s` (x, y, z) of an
//! algebra of dimension `n` owns variables `s*n .. (s+1)*n`. A law holds iff
//! every coordinate of `lhs - rhs` is the zero polynomial. When it fails a
//! rational witness point is produced from the nonzero difference.

use serde::Serialize;

use super::structure::GeneralAlgebra;
use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, MultiPoly, Scalar};

const SLOT_NAMES: [&str; 3] = ["x", "y", "z"];

/// Catalog of laws understood by [`check_identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `xy = yx`
    Commutativity,
    /// `(xy)x = x(yx)`
    Flexibility,
    /// `x^2 x^2 = (x^2 x) x`
    PowerAssociativity,
    /// `f(xy) = g(xy) = (f(x)g(y) + f(y)g(x)) / 2`
    BqLaw { f: Vec<Scalar>, g: Vec<Scalar> },
    /// `F(xy) = (f(x)F(y) + f(y)F(x)) / 2`
    InvariantForm { f: Vec<Scalar>, form: Vec<Scalar> },
    /// `x^2 y = f(x) xy`
    Conservative { f: Vec<Scalar> },
    /// `(x^2)^2 = f(x)^2 x^2`
    Bernstein { f: Vec<Scalar> },
    /// `x^[k] = f(x)^(2^k - 2) x^2`
    PlenaryPower { f: Vec<Scalar>, k: u32 },
    /// `xy = (f(x)A(y) + f(y)A(x)) / 2`
    InducedByOperator { f: Vec<Scalar>, op: Matrix },
    /// `f(x)A(x) = f(A(x)) A^2(x)`
    InducedBernstein { f: Vec<Scalar>, op: Matrix },
}

impl Identity {
    /// Looks up a parameterless law by name.
    pub fn from_name(name: &str) -> Result<Identity> {
        match name {
            "commutativity" => Ok(Identity::Commutativity),
            "flexibility" => Ok(Identity::Flexibility),
            "power-associativity" => Ok(Identity::PowerAssociativity),
            other => Err(Error::UnsupportedIdentity(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Commutativity => "commutativity",
            Identity::Flexibility => "flexibility",
            Identity::PowerAssociativity => "power-associativity",
            Identity::BqLaw { .. } => "bq-law",
            Identity::InvariantForm { .. } => "invariant-form",
            Identity::Conservative { .. } => "conservative",
            Identity::Bernstein { .. } => "bernstein",
            Identity::PlenaryPower { .. } => "plenary-power",
            Identity::InducedByOperator { .. } => "induced-by-operator",
            Identity::InducedBernstein { .. } => "induced-bernstein",
        }
    }

    fn slots(&self) -> u32 {
        match self {
            Identity::Commutativity
            | Identity::Flexibility
            | Identity::BqLaw { .. }
            | Identity::InvariantForm { .. }
            | Identity::Conservative { .. }
            | Identity::InducedByOperator { .. } => 2,
            _ => 1,
        }
    }
}

/// A point where a failing law's two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Values of the generic coordinates, e.g. `("x1", "2")`.
    pub assignment: Vec<(String, String)>,
    /// Index of the output coordinate (or scalar equation) that differs.
    pub component: usize,
    /// Value of `lhs - rhs` in that component at the point.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub identity: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Generic element in slot `slot`: coordinate `a` is the variable `slot*dim + a`.
pub fn generic(dim: usize, slot: u32) -> Vec<MultiPoly> {
    (0..dim).map(|a| MultiPoly::var(slot * dim as u32 + a as u32)).collect()
}

/// Value of a linear form on an element with polynomial coordinates.
pub fn form_on(form: &[Scalar], z: &[MultiPoly]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (c, p) in form.iter().zip(z) {
        out.add_scaled(p, c);
    }
    out
}

/// Image of a polynomial element under a matrix.
pub fn apply_symbolic(op: &Matrix, z: &[MultiPoly]) -> Vec<MultiPoly> {
    (0..op.rows()).map(|i| form_on(op.row(i), z)).collect()
}

fn scale_all(v: &[MultiPoly], s: &MultiPoly) -> Vec<MultiPoly> {
    v.iter().map(|p| p * s).collect()
}

fn sub_all(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

fn check_form(alg: &GeneralAlgebra, form: &[Scalar]) -> Result<()> {
    alg.check_len(form.len())
}

fn check_op(alg: &GeneralAlgebra, op: &Matrix) -> Result<()> {
    if op.rows() != alg.dim() || op.cols() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: op.rows() });
    }
    Ok(())
}

/// Expands `lhs - rhs` of a law in generic coordinates.
pub fn difference(alg: &GeneralAlgebra, identity: &Identity) -> Result<Vec<MultiPoly>> {
    let n = alg.dim();
    let x = generic(n, 0);
    let y = generic(n, 1);
    let mul = |a: &[MultiPoly], b: &[MultiPoly]| alg.multiply_symbolic(a, b);
    let half = MultiPoly::constant(scalar::half());
    Ok(match identity {
        Identity::Commutativity => sub_all(&mul(&x, &y), &mul(&y, &x)),
        Identity::Flexibility => {
            let xy = mul(&x, &y);
            let yx = mul(&y, &x);
            sub_all(&mul(&xy, &x), &mul(&x, &yx))
        }
        Identity::PowerAssociativity => {
            let x2 = mul(&x, &x);
            let lhs = mul(&x2, &x2);
            let rhs = mul(&mul(&x2, &x), &x);
            sub_all(&lhs, &rhs)
        }
        Identity::BqLaw { f, g } => {
            check_form(alg, f)?;
            check_form(alg, g)?;
            let xy = mul(&x, &y);
            let fxy = form_on(f, &xy);
            let gxy = form_on(g, &xy);
            let cross = &(&form_on(f, &x) * &form_on(g, &y)) + &(&form_on(f, &y) * &form_on(g, &x));
            vec![&fxy - &gxy, &fxy - &(&cross * &half)]
        }
        Identity::InvariantForm { f, form } => {
            check_form(alg, f)?;
            check_form(alg, form)?;
            let lhs = form_on(form, &mul(&x, &y));
            let rhs = &(&form_on(f, &x) * &form_on(form, &y)) + &(&form_on(f, &y) * &form_on(form, &x));
            vec![&lhs - &(&rhs * &half)]
        }
        Identity::Conservative { f } => {
            check_form(alg, f)?;
            let lhs = mul(&mul(&x, &x), &y);
            let rhs = scale_all(&mul(&x, &y), &form_on(f, &x));
            sub_all(&lhs, &rhs)
        }
        Identity::Bernstein { f } => {
            check_form(alg, f)?;
            let x2 = mul(&x, &x);
            let fx = form_on(f, &x);
            sub_all(&mul(&x2, &x2), &scale_all(&x2, &(&fx * &fx)))
        }
        Identity::PlenaryPower { f, k } => {
            check_form(alg, f)?;
            if *k == 0 || *k > 8 {
                return Err(Error::Precondition(format!("plenary power index {k} outside 1..=8")));
            }
            let x2 = mul(&x, &x);
            let mut lhs = x2.clone();
            for _ in 1..*k {
                lhs = mul(&lhs, &lhs);
            }
            let factor = form_on(f, &x).pow((1u32 << k) - 2);
            sub_all(&lhs, &scale_all(&x2, &factor))
        }
        Identity::InducedByOperator { f, op } => {
            check_form(alg, f)?;
            check_op(alg, op)?;
            let ax = apply_symbolic(op, &x);
            let ay = apply_symbolic(op, &y);
            let fx = form_on(f, &x);
            let fy = form_on(f, &y);
            let rhs: Vec<MultiPoly> = ay.iter().zip(&ax).map(|(a, b)| &(&(&fx * a) + &(&fy * b)) * &half).collect();
            sub_all(&mul(&x, &y), &rhs)
        }
        Identity::InducedBernstein { f, op } => {
            check_form(alg, f)?;
            check_op(alg, op)?;
            let ax = apply_symbolic(op, &x);
            let aax = apply_symbolic(op, &ax);
            let lhs = scale_all(&ax, &form_on(f, &x));
            let rhs = scale_all(&aax, &form_on(f, &ax));
            sub_all(&lhs, &rhs)
        }
    })
}

/// Decides a law exactly by symbolic expansion.
pub fn check_identity(alg: &GeneralAlgebra, identity: &Identity) -> Result<IdentityVerdict> {
    let diff = difference(alg, identity)?;
    Ok(verdict_from_difference(identity.name(), &diff, alg.dim(), identity.slots()))
}

/// Builds a verdict from the coordinates of `lhs - rhs`; variables are named
/// by slot (`x1.., y1.., z1..`) for an algebra of dimension `dim`.
pub fn verdict_from_difference(name: &str, diff: &[MultiPoly], dim: usize, slots: u32) -> IdentityVerdict {
    let failing = diff.iter().enumerate().find(|(_, p)| !p.is_zero());
    let witness = failing.map(|(component, p)| {
        let num_vars = slots * dim as u32;
        let point = p.nonvanishing_point(num_vars).expect("nonzero polynomial");
        let residual = p.eval(&point);
        Witness {
            assignment: point
                .iter()
                .enumerate()
                .map(|(v, val)| (var_name(v as u32, dim), scalar::render(val)))
                .collect(),
            component,
            residual: scalar::render(&residual),
        }
    });
    IdentityVerdict { identity: name.to_string(), holds: witness.is_none(), witness }
}

/// Name of generic variable `v` for an algebra of dimension `dim`.
pub fn var_name(v: u32, dim: usize) -> String {
    let slot = (v as usize) / dim.max(1);
    let idx = (v as usize) % dim.max(1) + 1;
    let prefix = SLOT_NAMES.get(slot).copied().unwrap_or("w");
    format!("{prefix}{idx}")
}
