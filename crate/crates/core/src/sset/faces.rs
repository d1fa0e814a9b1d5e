//! Subcomplexes, images and structural predicates.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::complex::FinSSet;
use super::map::SSetMap;
use super::word::{SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A subcomplex together with its inclusion.
#[derive(Debug, Clone)]
pub struct Subcomplex {
    pub sset: Arc<FinSSet>,
    pub inclusion: SSetMap,
}

impl Subcomplex {
    /// Position of an ambient nondegenerate simplex in the subcomplex.
    pub fn locate(&self, x: SimplexRef) -> Option<SimplexRef> {
        let layer = self.inclusion.images().get(x.dim())?;
        layer
            .iter()
            .position(|w| w.base() == x)
            .map(|i| SimplexRef::new(x.dim(), i))
    }

    /// Ambient nondegenerate simplices, in the subcomplex's order.
    pub fn members(&self) -> BTreeSet<SimplexRef> {
        self.inclusion.images().iter().flatten().map(|w| w.base()).collect()
    }
}

/// All nondegenerate faces of a nondegenerate simplex, itself included.
pub fn closure_of(a: &FinSSet, x: SimplexRef) -> BTreeSet<SimplexRef> {
    let full = (1u32 << (x.dim() + 1)) - 1;
    (1..=full).map(|m| a.restrict_base(x, m).base()).collect()
}

/// The smallest subcomplex containing the given nondegenerate simplices.
pub fn generated_subcomplex(a: &Arc<FinSSet>, gens: impl IntoIterator<Item = SimplexRef>) -> Result<Subcomplex> {
    let mut keep = BTreeSet::new();
    for g in gens {
        if g.dim() >= a.counts().len() || g.index() >= a.count(g.dim()) {
            return Err(Error::Invalid(format!("{g} is not a simplex")));
        }
        keep.extend(closure_of(a, g));
    }
    subcomplex_of_closed(a, &keep)
}

fn subcomplex_of_closed(a: &Arc<FinSSet>, keep: &BTreeSet<SimplexRef>) -> Result<Subcomplex> {
    let mut renumber: HashMap<SimplexRef, SimplexRef> = HashMap::new();
    let top = keep.iter().map(|x| x.dim() + 1).max().unwrap_or(0);
    let mut faces: Vec<Vec<Vec<SimplexWord>>> = vec![Vec::new(); top];
    let mut labels: Vec<Vec<Option<String>>> = vec![Vec::new(); top];
    let mut images: Vec<Vec<SimplexWord>> = vec![Vec::new(); top];
    for &x in keep {
        let new = SimplexRef::new(x.dim(), faces[x.dim()].len());
        renumber.insert(x, new);
        let fs = a
            .faces_of(x)
            .iter()
            .map(|w| {
                let b = renumber.get(&w.base()).copied().ok_or_else(|| {
                    Error::Invalid(format!("face {w} of {x} is outside the subcomplex"))
                })?;
                Ok(SimplexWord::raw(b, w.dim(), w.repeats()))
            })
            .collect::<Result<Vec<_>>>()?;
        faces[x.dim()].push(fs);
        labels[x.dim()].push(a.label(x).map(str::to_owned));
        images[x.dim()].push(SimplexWord::nondegenerate(x));
    }
    let sset = Arc::new(FinSSet::with_labels(faces, labels, a.truncation())?);
    let inclusion = SSetMap::new(sset.clone(), a.clone(), images)?;
    Ok(Subcomplex { sset, inclusion })
}

/// The union of all faces of `a` that contain the base of `alpha`.
pub fn faces_containing(a: &Arc<FinSSet>, alpha: &SimplexWord) -> Result<Subcomplex> {
    if !a.contains(alpha) {
        return Err(Error::Invalid(format!("{alpha} is not a simplex of the given set")));
    }
    let b = alpha.base();
    let gens: Vec<SimplexRef> = a.all_nondegenerate().filter(|&y| closure_of(a, y).contains(&b)).collect();
    generated_subcomplex(a, gens)
}

/// The image of a map, as a subcomplex of its codomain.
pub fn image(f: &SSetMap) -> Result<Subcomplex> {
    let gens: Vec<SimplexRef> = f.images().iter().flatten().map(|w| w.base()).collect();
    generated_subcomplex(f.cod(), gens)
}

/// Structural summary of a finite simplicial set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSetReport {
    pub nonsingular: bool,
    pub dim: usize,
    pub counts: Vec<usize>,
}

/// Whether every nondegenerate simplex has an injective characteristic map.
pub fn check_sset(a: &FinSSet) -> Result<SSetReport> {
    if a.truncation().is_some() {
        return Err(Error::Precondition("structural check needs an untruncated simplicial set".into()));
    }
    let mut nonsingular = true;
    'outer: for x in a.all_nondegenerate() {
        let full = (1u32 << (x.dim() + 1)) - 1;
        let mut seen = BTreeSet::new();
        for m in 1..=full {
            let w = a.restrict_base(x, m);
            if w.is_degenerate() || !seen.insert(w.base()) {
                nonsingular = false;
                break 'outer;
            }
        }
    }
    Ok(SSetReport { nonsingular, dim: a.dim(), counts: a.counts() })
}
