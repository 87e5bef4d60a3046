//! Commutative algebras from structure constants or inheritance tensors,
//! their products, plenary powers, evolution trajectories and identities.

mod dynamics;
mod element;
pub mod identity;
mod structure;
mod tensor;

pub use dynamics::{evolve, is_fixed_point, plenary_power, trajectory, State};
pub use element::Element;
pub use identity::{check_identity, Identity, IdentityVerdict, Witness};
pub use structure::{eabp_from_tensor, GeneralAlgebra};
pub use tensor::{InheritanceTensor, Mode};
