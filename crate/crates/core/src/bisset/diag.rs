//! The diagonal of a bisimplicial set and the functor `Sing`.

use std::sync::Arc;

use super::nerve::{nerve_bisset, nerve_bisset_map};
use super::view::{BiSSetMap, BiSSetView};
use crate::error::{Error, Result};
use crate::sgpd::{SGpdMap, SimpGroupoid};
use crate::sset::{from_keys, keyed_map, Keyed, KeyedLevels, SSetMap, SimplexWord};

/// The diagonal; the key of an `n`-simplex is its word in row `n`.
pub type Diagonal = Keyed<SimplexWord>;

struct DiagLevels<'a>(&'a BiSSetView);

impl KeyedLevels for DiagLevels<'_> {
    type Key = SimplexWord;

    fn level(&self, n: usize) -> Vec<SimplexWord> {
        self.0.row(n).unwrap().level(n).unwrap().simplices.clone()
    }

    fn face(&self, n: usize, w: &SimplexWord, i: usize) -> SimplexWord {
        let v = self.0.row(n).unwrap().face(w, i).unwrap();
        self.0.hface(n, i).unwrap().apply(&v)
    }

    fn degen(&self, n: usize, w: &SimplexWord, i: usize) -> SimplexWord {
        self.0.hdegen(n, i).unwrap().apply(&w.degen(i).unwrap())
    }
}

/// The diagonal simplicial set, truncated at `d`.
pub fn diag(v: &BiSSetView, d: usize) -> Result<Diagonal> {
    let (h, vb) = v.bounds();
    if h < d {
        return Err(Error::Truncation { needed: d, available: h });
    }
    if let Some(b) = vb {
        if b < d {
            return Err(Error::Truncation { needed: d, available: b });
        }
    }
    for n in 0..=d {
        v.row(n)?.level(n)?;
    }
    from_keys(&DiagLevels(v), d, Some(d), false)
}

/// The map of diagonals induced by a map of bisimplicial sets.
pub fn diag_map(f: &BiSSetMap, dx: &Diagonal, dy: &Diagonal) -> Result<SSetMap> {
    keyed_map(dx, dy, |n, w| Ok(f.row(n).apply(w)))
}

/// `Sing(X)`: the diagonal of the levelwise nerve, truncated at `d`.
pub fn sing(x: &Arc<SimpGroupoid>, d: usize) -> Result<Diagonal> {
    diag(&nerve_bisset(x, d), d)
}

/// `Sing` of a map, together with the two diagonals.
pub fn sing_map(f: &SGpdMap, d: usize) -> Result<(Diagonal, Diagonal, SSetMap)> {
    let (bx, by) = (nerve_bisset(f.dom(), d), nerve_bisset(f.cod(), d));
    let (dx, dy) = (diag(&bx, d)?, diag(&by, d)?);
    let fm = nerve_bisset_map(f, &bx, &by)?;
    let m = diag_map(&fm, &dx, &dy)?;
    Ok((dx, dy, m))
}
