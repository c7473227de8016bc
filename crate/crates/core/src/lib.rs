//! Abstract regular polytopes as string groups generated by involutions,
//! with tools to decide whether they are internally or externally self-dual.

pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod cpr;
pub mod duality;
pub mod error;
pub mod fpgroup;
pub mod lattice;
pub mod mixer;
pub mod permcore;
pub mod sggi;

pub use duality::{classify, DualityClass};
pub use error::{Error, Result};
pub use permcore::{PermGroup, Permutation};
pub use sggi::{check_string, covers, SchlafliType, Sggi};
