//! Permutations, permutation groups and the search kernels built on them.

mod chain;
mod group;
mod perm;
mod search;

pub use chain::StabChain;
pub use group::{
    center, center_exhaustive, commutator, derived_subgroup, in_derived_subgroup, intersection_data, normal_closure,
    subgroup_intersection, IntersectionData, PermGroup, DEFAULT_ELEMENT_CAP,
};
pub use perm::Permutation;
pub use search::{conjugator_search, conjugators, conjugators_exhaustive};
