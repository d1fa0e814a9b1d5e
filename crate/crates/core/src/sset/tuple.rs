//! Simplicial subsets of products: products, pullbacks and their structure maps.

use std::collections::HashMap;
use std::sync::Arc;

use super::complex::FinSSet;
use super::map::SSetMap;
use super::word::{masks_with_popcount, SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A simplicial subset of `A_1 × … × A_r`, whose nondegenerate simplices are tuples of
/// words with no common degeneracy.
#[derive(Debug, Clone)]
pub struct TupleSSet {
    components: Vec<Arc<FinSSet>>,
    tuples: Vec<Vec<Vec<SimplexWord>>>,
    index: HashMap<Vec<SimplexWord>, SimplexRef>,
    sset: Arc<FinSSet>,
}

/// Removes the degeneracies shared by all words of a tuple. Returns the reduced tuple and the
/// shared repeat mask.
pub fn reduce_tuple(words: &[SimplexWord]) -> (Vec<SimplexWord>, u32) {
    let common = words.iter().fold(u32::MAX, |acc, w| acc & w.repeats());
    let n = words.first().map_or(0, |w| w.dim());
    let common = common & ((1u64 << n) - 1) as u32;
    if common == 0 {
        return (words.to_vec(), 0);
    }
    let k = n - common.count_ones() as usize;
    let reduced = words
        .iter()
        .map(|w| {
            let mut r = 0u32;
            for j in 0..n {
                if w.repeats() >> j & 1 == 1 && common >> j & 1 == 0 {
                    r |= 1 << (j - (common & ((1u32 << j) - 1)).count_ones() as usize);
                }
            }
            SimplexWord::raw(w.base(), k, r)
        })
        .collect();
    (reduced, common)
}

fn truncation_min(parts: &[Arc<FinSSet>]) -> Option<usize> {
    parts.iter().filter_map(|a| a.truncation()).min()
}

impl TupleSSet {
    /// Builds the subset whose nondegenerate tuples satisfy `accept`. Candidates are generated
    /// by shuffles of nondegenerate simplices of the components; `accept` must define a
    /// simplicial subset (closed under faces).
    pub fn by_shuffles(components: Vec<Arc<FinSSet>>, accept: impl Fn(&[SimplexWord]) -> bool) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("a product needs at least one factor".into()));
        }
        let trunc = truncation_min(&components);
        let sum: usize = components.iter().map(|a| a.dim()).sum();
        let top = trunc.map_or(sum, |t| t.min(sum));
        let mut by_dim: Vec<Vec<Vec<SimplexWord>>> = vec![Vec::new(); top + 1];
        if components.iter().all(|a| !a.is_empty()) {
            let mut current: Vec<SimplexWord> = Vec::new();
            for n in 0..=top {
                shuffle_rec(&components, n, 0, u32::MAX, &mut current, &mut |t| {
                    if accept(t) {
                        by_dim[n].push(t.to_vec());
                    }
                });
            }
        }
        for l in &mut by_dim {
            l.sort();
        }
        Self::from_tuples(components, by_dim, trunc)
    }

    /// Builds the subset from complete level listings `levels(k)` of its `k`-simplices for
    /// `k ≤ top`; nondegenerate tuples are extracted and ordered canonically.
    pub fn by_levels(
        components: Vec<Arc<FinSSet>>,
        top: usize,
        truncation: Option<usize>,
        mut levels: impl FnMut(usize) -> Result<Vec<Vec<SimplexWord>>>,
    ) -> Result<Self> {
        let mut by_dim = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut l: Vec<Vec<SimplexWord>> = levels(k)?.into_iter().filter(|t| reduce_tuple(t).1 == 0).collect();
            l.sort();
            by_dim.push(l);
        }
        Self::from_tuples(components, by_dim, truncation)
    }

    /// The pullback computed level by level, as an independent route to [`Self::pullback`].
    pub fn pullback_by_levels(f: &SSetMap, g: &SSetMap) -> Result<Self> {
        let (x, y) = (f.dom().clone(), g.dom().clone());
        let comps = vec![x.clone(), y.clone()];
        let trunc = truncation_min(&comps);
        let sum = x.dim() + y.dim();
        let top = trunc.map_or(sum, |t| t.min(sum));
        Self::by_levels(comps, top, trunc, |k| {
            let xl = x.level(k)?;
            let yl = y.level(k)?;
            let mut by_image: HashMap<SimplexWord, Vec<SimplexWord>> = HashMap::new();
            for w in &yl.simplices {
                by_image.entry(g.apply(w)).or_default().push(*w);
            }
            let mut out = Vec::new();
            for v in &xl.simplices {
                for w in by_image.get(&f.apply(v)).into_iter().flatten() {
                    out.push(vec![*v, *w]);
                }
            }
            Ok(out)
        })
    }

    /// The product of the components.
    pub fn product(components: Vec<Arc<FinSSet>>) -> Result<Self> {
        Self::by_shuffles(components, |_| true)
    }

    /// The pullback `X ×_Z Y` of `f: X → Z` and `g: Y → Z`.
    pub fn pullback(f: &SSetMap, g: &SSetMap) -> Result<Self> {
        if !Arc::ptr_eq(f.cod(), g.cod()) && f.cod() != g.cod() {
            return Err(Error::Invalid("pullback legs have different codomains".into()));
        }
        Self::by_shuffles(vec![f.dom().clone(), g.dom().clone()], |t| f.apply(&t[0]) == g.apply(&t[1]))
    }

    /// Builds the tuple set from explicitly listed nondegenerate tuples, in the given order.
    pub fn from_tuples(
        components: Vec<Arc<FinSSet>>,
        mut tuples: Vec<Vec<Vec<SimplexWord>>>,
        truncation: Option<usize>,
    ) -> Result<Self> {
        while tuples.last().is_some_and(|l| l.is_empty()) {
            tuples.pop();
        }
        let mut index = HashMap::new();
        for (n, layer) in tuples.iter().enumerate() {
            for (i, t) in layer.iter().enumerate() {
                if t.len() != components.len() || t.iter().any(|w| w.dim() != n) {
                    return Err(Error::Invalid(format!("malformed tuple in dimension {n}")));
                }
                if reduce_tuple(t).1 != 0 {
                    return Err(Error::Invalid(format!("tuple in dimension {n} is degenerate")));
                }
                index.insert(t.clone(), SimplexRef::new(n, i));
            }
        }
        let mut faces = Vec::with_capacity(tuples.len());
        for (n, layer) in tuples.iter().enumerate() {
            let mut lf = Vec::with_capacity(layer.len());
            for t in layer {
                if n == 0 {
                    lf.push(Vec::new());
                    continue;
                }
                let mut fs = Vec::with_capacity(n + 1);
                for i in 0..=n {
                    let ft: Vec<SimplexWord> =
                        t.iter().zip(&components).map(|(w, a)| a.face_unchecked(w, i)).collect();
                    let (red, common) = reduce_tuple(&ft);
                    let base = index
                        .get(&red)
                        .copied()
                        .ok_or_else(|| Error::Invalid(format!("face d{i} of a {n}-tuple is missing")))?;
                    fs.push(SimplexWord::raw(base, n - 1, common));
                }
                lf.push(fs);
            }
            faces.push(lf);
        }
        let sset = Arc::new(FinSSet::new(faces, truncation)?);
        Ok(TupleSSet { components, tuples, index, sset })
    }

    pub fn sset(&self) -> &Arc<FinSSet> {
        &self.sset
    }

    pub fn components(&self) -> &[Arc<FinSSet>] {
        &self.components
    }

    pub fn tuple(&self, x: SimplexRef) -> &[SimplexWord] {
        &self.tuples[x.dim()][x.index()]
    }

    /// The normal form of a tuple of equal-dimensional words, if it lies in this subset.
    pub fn word_of(&self, words: &[SimplexWord]) -> Option<SimplexWord> {
        let n = words.first()?.dim();
        let (red, common) = reduce_tuple(words);
        let base = *self.index.get(&red)?;
        Some(SimplexWord::raw(base, n, common))
    }

    /// Component words of any simplex.
    pub fn components_of(&self, w: &SimplexWord) -> Vec<SimplexWord> {
        self.tuple(w.base()).iter().map(|c| c.degenerate_by(w.dim(), w.repeats())).collect()
    }

    pub fn projection(&self, j: usize) -> Result<SSetMap> {
        let comp = self
            .components
            .get(j)
            .ok_or_else(|| Error::Invalid(format!("no factor {j}")))?;
        let images = self.tuples.iter().map(|l| l.iter().map(|t| t[j]).collect()).collect();
        SSetMap::new(self.sset.clone(), comp.clone(), images)
    }

    /// The map into this subset with the given components.
    pub fn pairing(&self, maps: &[SSetMap]) -> Result<SSetMap> {
        if maps.len() != self.components.len() {
            return Err(Error::Invalid("pairing needs one map per factor".into()));
        }
        let dom = maps[0].dom().clone();
        let mut images = Vec::new();
        for n in 0..dom.counts().len() {
            let mut l = Vec::new();
            for x in dom.nondegenerate(n) {
                let ws: Vec<SimplexWord> = maps.iter().map(|m| m.image_of(x)).collect();
                let w = self
                    .word_of(&ws)
                    .ok_or_else(|| Error::Invalid(format!("{x} does not land in the subset")))?;
                l.push(w);
            }
            images.push(l);
        }
        SSetMap::new(dom, self.sset.clone(), images)
    }
}

fn shuffle_rec(
    comps: &[Arc<FinSSet>],
    n: usize,
    j: usize,
    common: u32,
    current: &mut Vec<SimplexWord>,
    emit: &mut impl FnMut(&[SimplexWord]),
) {
    if j == comps.len() {
        if common & ((1u64 << n) - 1) as u32 == 0 {
            emit(current);
        }
        return;
    }
    let a = &comps[j];
    for k in 0..=n.min(a.dim()) {
        if a.count(k) == 0 {
            continue;
        }
        let masks: Vec<u32> = masks_with_popcount(n, n - k).collect();
        for x in a.nondegenerate(k) {
            for &m in &masks {
                current.push(SimplexWord::raw(x, n, m));
                shuffle_rec(comps, n, j + 1, common & m, current, emit);
                current.pop();
            }
        }
    }
}

/// `A × B` with its two projections.
pub fn product(a: &Arc<FinSSet>, b: &Arc<FinSSet>) -> Result<TupleSSet> {
    TupleSSet::product(vec![a.clone(), b.clone()])
}
