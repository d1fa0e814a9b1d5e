//! Finite simplicial sets in Eilenberg–Zilber normal form.

mod builtin;
mod colimit;
mod complex;
mod faces;
mod homology;
mod keyed;
mod map;
mod normal;
mod search;
mod tuple;
mod word;

pub use builtin::{builtin_complex, BuiltinKind, Subsimplex};
pub use colimit::{coequalizer, coproduct, coproduct_many, factor_through, pushout, summand_map, Colimit};
pub use complex::{facet_masks, FinSSet, Level, RestrictionIndex};
pub use faces::{check_sset, closure_of, faces_containing, generated_subcomplex, image, SSetReport, Subcomplex};
pub use homology::{boundary_matrix, homology, invariant_factors, HomologyProfile, SparseMatrix};
pub use keyed::{from_keys, keyed_map, Keyed, KeyedLevels};
pub use map::{MapFlags, SSetMap};
pub use normal::{normalize_degeneracies, normalize_word, verify_identities, Op};
pub use search::{enumerate_maps, MapSearch};
pub use tuple::{product, reduce_tuple, TupleSSet};
pub use word::{compose_surjections, masks_with_popcount, surj_value, Monotone, SimplexRef, SimplexWord, MAX_DIM};
