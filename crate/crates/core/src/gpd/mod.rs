//! Finite groupoids, functors and natural isomorphisms.

mod fiber;
mod functor;
mod groupoid;
mod nerve;
mod pi1;

pub use fiber::{fiber_products, strict_fiber_product, FiberProducts, StrictFiberProduct};
pub use functor::{
    classify_gpd_map, enumerate_functors, enumerate_nat_isos, functor_groupoid, FunctorGroupoid, GpdFunctor,
    GpdMapFlags, NatIso,
};
pub use groupoid::FinGroupoid;
pub use nerve::{degen_string, face_string, nerve, nerve_map, Nerve, NerveString};
pub use pi1::{fundamental_groupoid, todd_coxeter, CosetGroup, Letter, Pi1Quotient, PresentedGroupoid, QUOTIENT_CAP};
