//! Bisimplicial sets: levelwise nerves, diagonals, exterior products and `d*`.

mod diag;
mod dstar;
mod exterior;
mod nerve;
mod reedy;
mod transpose;
mod view;

pub use diag::{diag, diag_map, sing, sing_map, Diagonal};
pub use dstar::{d_star, d_star_agreement, d_star_fast, d_star_generic, DStar};
pub use exterior::{exterior, exterior_map};
pub use nerve::{nerve_bisset, nerve_bisset_map};
pub use reedy::{bisset_gap, reedy_check_bisset, BiGap, BiReedyLevel, BiReedyReport};
pub use transpose::{column, transpose, transpose_map, Column};
pub use view::{BiSSetMap, BiSSetView, RowProvider};
