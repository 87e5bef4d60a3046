//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are plain indices; names are attached only when rendering.
//! Identities of the algebras are decided by expanding both sides in generic
//! coordinates and testing the difference with [`MultiPoly::is_zero`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::scalar::{self, Scalar};

/// A monomial as sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn without(&self, v: u32) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: u32) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var(v), Scalar::one());
        p
    }

    /// `Σ coeffs[i] · var(offset + i)`.
    pub fn linear(coeffs: &[Scalar], offset: u32) -> Self {
        let mut p = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(offset + i as u32), c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: u32) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Variables occurring with a nonzero coefficient, ascending.
    pub fn variables(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    /// `self += c · a · b`, without materializing `a · b`.
    pub fn add_product(&mut self, a: &MultiPoly, b: &MultiPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (ma, va) in &a.terms {
            let cva = c * va;
            for (mb, vb) in &b.terms {
                self.add_term(ma.mul(mb), &cva * vb);
            }
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(Scalar::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a point indexed by variable; missing variables read as 0.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let get = |v: u32| point.get(v as usize).cloned().unwrap_or_else(Scalar::zero);
        self.terms.iter().fold(Scalar::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                t *= scalar::pow(&get(v), e);
            }
            acc + t
        })
    }

    /// Replaces variable `v` by the polynomial `by`.
    pub fn substitute(&self, v: u32, by: &MultiPoly) -> MultiPoly {
        let max = self.degree_in(v);
        let mut powers = vec![MultiPoly::constant(Scalar::one())];
        for k in 1..=max {
            powers.push(&powers[k as usize - 1] * by);
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = MultiPoly { terms: BTreeMap::from([(m.without(v), c.clone())]) };
            out.add_product(&rest, &powers[e as usize], &Scalar::one());
        }
        out
    }

    /// Replaces variable `v` by a constant.
    pub fn substitute_value(&self, v: u32, value: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            out.add_term(m.without(v), c * scalar::pow(value, e));
        }
        out
    }

    /// A rational point (over variables `0..num_vars`) where a nonzero
    /// polynomial does not vanish. Returns `None` for the zero polynomial.
    ///
    /// Variables are fixed one at a time; for each, one of the values
    /// `0..=deg` keeps the partially evaluated polynomial nonzero, since a
    /// nonzero univariate coefficient has at most `deg` roots.
    pub fn nonvanishing_point(&self, num_vars: u32) -> Option<Vec<Scalar>> {
        if self.is_zero() {
            return None;
        }
        let mut current = self.clone();
        let mut point = Vec::with_capacity(num_vars as usize);
        for v in 0..num_vars {
            let deg = current.degree_in(v);
            let mut chosen = None;
            for k in 0..=deg as i64 {
                let value = scalar::int(k);
                let next = current.substitute_value(v, &value);
                if !next.is_zero() {
                    chosen = Some((value, next));
                    break;
                }
            }
            let (value, next) = chosen.expect("a nonzero polynomial has a non-root among deg+1 values");
            point.push(value);
            current = next;
        }
        debug_assert!(!current.is_zero());
        Some(point)
    }

    pub fn display_with<'a>(&'a self, names: &'a dyn Fn(u32) -> String) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a dyn Fn(u32) -> String,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.poly.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .map(|&(v, e)| if e == 1 { (self.names)(v) } else { format!("{}^{}", (self.names)(v), e) })
                    .collect();
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "({c})*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |v: u32| format!("v{v}");
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.add_scaled(rhs, &Scalar::one());
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        self.add_scaled(rhs, &-Scalar::one());
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        out.add_product(self, rhs, &Scalar::one());
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}
