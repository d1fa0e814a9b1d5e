//! Finite simplicial sets, groupoids, simplicial groupoids and bisimplicial sets,
//! with exact checks of lifting properties and model-categorical constructions.

pub mod bisset;
pub mod cli;
pub mod error;
pub mod gpd;
pub mod lifting;
pub mod sgpd;
pub mod sset;

pub use error::{Error, Result};
