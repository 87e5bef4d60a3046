use std::ops::Deref;

use num::Zero;

use crate::exact::Scalar;

/// Coordinates of an algebra element in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element { coords: vec![Scalar::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coords[i] = Scalar::from_integer(1.into());
        e
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, s: &Scalar) -> Element {
        Element { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    pub fn plus(&self, other: &Element) -> Element {
        Element { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Deref for Element {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.coords
    }
}

impl From<Vec<Scalar>> for Element {
    fn from(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }
}
