//! Backtracking search for simplicial maps with constraints.

use std::sync::Arc;

use super::complex::{facet_masks, FinSSet, RestrictionIndex};
use super::map::SSetMap;
use super::word::{SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A search for maps `dom → cod`, optionally with prescribed images and with maps that must
/// lie over given maps to a third object.
#[derive(Clone)]
pub struct MapSearch {
    dom: Arc<FinSSet>,
    cod: Arc<FinSSet>,
    fixed: Vec<Vec<Option<SimplexWord>>>,
    over: Vec<(SSetMap, SSetMap)>,
    reverse: bool,
}

impl MapSearch {
    pub fn new(dom: &Arc<FinSSet>, cod: &Arc<FinSSet>) -> Result<Self> {
        if dom.truncation().is_some() {
            return Err(Error::Precondition("map search needs an untruncated domain".into()));
        }
        cod.require_dim(dom.dim())?;
        let fixed = dom.counts().iter().map(|&c| vec![None; c]).collect();
        Ok(MapSearch { dom: dom.clone(), cod: cod.clone(), fixed, over: Vec::new(), reverse: false })
    }

    /// Prescribes the image of a nondegenerate simplex of the domain.
    pub fn fix(&mut self, x: SimplexRef, w: SimplexWord) -> Result<&mut Self> {
        if w.dim() != x.dim() || !self.cod.contains(&w) {
            return Err(Error::Invalid(format!("{w} cannot be the image of {x}")));
        }
        match self.fixed[x.dim()][x.index()] {
            Some(old) if old != w => {
                return Err(Error::Precondition(format!("conflicting images prescribed for {x}")))
            }
            _ => self.fixed[x.dim()][x.index()] = Some(w),
        }
        Ok(self)
    }

    /// Prescribes `h ∘ i = f` for a map `i: A → dom` and `f: A → cod`.
    pub fn fix_along(&mut self, i: &SSetMap, f: &SSetMap) -> Result<&mut Self> {
        for x in i.dom().all_nondegenerate() {
            let b = i.image_of(x);
            // restrict f(x) along a section of the degeneracy of i(x)
            let section: u32 = {
                let mut m = 0u32;
                let mut last = usize::MAX;
                for v in 0..=b.dim() {
                    let s = super::word::surj_value(b.repeats(), v);
                    if s != last {
                        m |= 1 << v;
                        last = s;
                    }
                }
                m
            };
            let w = self.cod.restrict(&f.image_of(x), section);
            self.fix(b.base(), w)?;
        }
        Ok(self)
    }

    /// Requires `via ∘ h = target` with `via: cod → Z` and `target: dom → Z`.
    pub fn over(&mut self, via: &SSetMap, target: &SSetMap) -> &mut Self {
        self.over.push((via.clone(), target.clone()));
        self
    }

    /// Visit candidates in reverse order (an independent traversal for cross-checks).
    pub fn reversed(&mut self, yes: bool) -> &mut Self {
        self.reverse = yes;
        self
    }

    /// Runs the search, calling `visit` with each image table; stops early when it returns false.
    pub fn run(&self, mut visit: impl FnMut(&[Vec<SimplexWord>]) -> bool) -> Result<()> {
        let order: Vec<SimplexRef> = self.dom.all_nondegenerate().collect();
        let mut indices: Vec<Option<Arc<RestrictionIndex>>> = Vec::new();
        for n in 0..self.dom.counts().len() {
            indices.push(if n == 0 { None } else { Some(self.cod.restriction_index(n, &facet_masks(n))?) });
        }
        let vertex_level = self.cod.level(0)?;
        let mut images: Vec<Vec<SimplexWord>> = self
            .dom
            .counts()
            .iter()
            .map(|&c| vec![SimplexWord::nondegenerate(SimplexRef::new(0, 0)); c])
            .collect();
        let mut levels = Vec::new();
        for n in 0..self.dom.counts().len() {
            levels.push(self.cod.level(n)?);
        }
        let targets: Vec<Vec<Vec<SimplexWord>>> = self
            .over
            .iter()
            .map(|(_, t)| t.images().to_vec())
            .collect();
        let mut stop = false;
        self.rec(0, &order, &indices, &vertex_level.simplices, &levels, &targets, &mut images, &mut visit, &mut stop);
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        k: usize,
        order: &[SimplexRef],
        indices: &[Option<Arc<RestrictionIndex>>],
        vertices: &[SimplexWord],
        levels: &[Arc<super::complex::Level>],
        targets: &[Vec<Vec<SimplexWord>>],
        images: &mut Vec<Vec<SimplexWord>>,
        visit: &mut impl FnMut(&[Vec<SimplexWord>]) -> bool,
        stop: &mut bool,
    ) {
        if *stop {
            return;
        }
        if k == order.len() {
            if !visit(images) {
                *stop = true;
            }
            return;
        }
        let x = order[k];
        let n = x.dim();
        let try_one = |w: SimplexWord, images: &mut Vec<Vec<SimplexWord>>| -> bool {
            for (t, (via, _)) in targets.iter().zip(&self.over) {
                if via.apply(&w) != t[n][x.index()] {
                    return false;
                }
            }
            images[n][x.index()] = w;
            true
        };
        if let Some(w) = self.fixed[n][x.index()] {
            if n > 0 && !self.faces_match(x, &w, images) {
                return;
            }
            if try_one(w, images) {
                self.rec(k + 1, order, indices, vertices, levels, targets, images, visit, stop);
            }
            return;
        }
        let candidates: Vec<SimplexWord> = if n == 0 {
            vertices.to_vec()
        } else {
            let key: Vec<SimplexWord> = self
                .dom
                .faces_of(x)
                .iter()
                .map(|f| images[f.base().dim()][f.base().index()].degenerate_by(f.dim(), f.repeats()))
                .collect();
            let idx = indices[n].as_ref().expect("index for positive dimension");
            idx.get(&key).iter().map(|&p| levels[n].simplices[p as usize]).collect()
        };
        let iter: Box<dyn Iterator<Item = SimplexWord>> = if self.reverse {
            Box::new(candidates.into_iter().rev())
        } else {
            Box::new(candidates.into_iter())
        };
        for w in iter {
            if try_one(w, images) {
                self.rec(k + 1, order, indices, vertices, levels, targets, images, visit, stop);
                if *stop {
                    return;
                }
            }
        }
    }

    fn faces_match(&self, x: SimplexRef, w: &SimplexWord, images: &[Vec<SimplexWord>]) -> bool {
        self.dom.faces_of(x).iter().enumerate().all(|(i, f)| {
            let expected = images[f.base().dim()][f.base().index()].degenerate_by(f.dim(), f.repeats());
            self.cod.face_unchecked(w, i) == expected
        })
    }

    /// All solutions, in canonical order (or reversed traversal order if `reversed`).
    pub fn all(&self) -> Result<Vec<SSetMap>> {
        let mut out = Vec::new();
        self.run(|im| {
            out.push(SSetMap::new_unchecked(self.dom.clone(), self.cod.clone(), im.to_vec()));
            true
        })?;
        Ok(out)
    }

    pub fn first(&self) -> Result<Option<SSetMap>> {
        let mut out = None;
        self.run(|im| {
            out = Some(SSetMap::new_unchecked(self.dom.clone(), self.cod.clone(), im.to_vec()));
            false
        })?;
        Ok(out)
    }

    pub fn count(&self) -> Result<usize> {
        let mut c = 0usize;
        self.run(|_| {
            c += 1;
            true
        })?;
        Ok(c)
    }
}

/// Every simplicial map `a → x`, in canonical order.
pub fn enumerate_maps(a: &Arc<FinSSet>, x: &Arc<FinSSet>) -> Result<Vec<SSetMap>> {
    MapSearch::new(a, x)?.all()
}
