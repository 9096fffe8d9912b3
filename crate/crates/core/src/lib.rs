pub mod algebra;
pub mod arith;
pub mod corpus;
pub mod error;
pub mod formations;
pub mod group;
pub mod io;
pub mod perm;
pub mod products;
pub mod verifier;

pub use error::{GroupError, Result};
pub use group::{Elem, ElementSet, Group, Label, Limits, Subgroup};
pub use perm::Permutation;
