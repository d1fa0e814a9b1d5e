//! Simplicial groupoids as groupoid objects in finite simplicial sets.

mod fiber;
mod hom;
mod homotopy;
mod make;
mod reedy;
mod row;
mod simp;

pub use fiber::{sgpd_fiber_product, FiberMode, SGpdFiberProduct};
pub use hom::{
    hom_groupoid, latching_object, matching_object, restriction_functor, HomGroupoid, LatchingObject, MatchingObject,
};
pub use homotopy::{nat_iso_to_homotopy, SingHomotopy};
pub use make::{
    chaotic_resolution, chaotic_resolution_map, constant, constant_map, discrete, from_levels, make_sgpd, ChaoticMorphism, ChaoticObject, GroupoidLevels,
    KeyedGroupoid, SGpdKind,
};
pub use reedy::{check_reedy, gap_functor, ReedyLevel, ReedyReport};
pub use simp::{SGpdMap, SGpdNatIso, SimpGroupoid};
