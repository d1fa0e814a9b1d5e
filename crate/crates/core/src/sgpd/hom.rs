//! Hom-groupoids, matching objects and latching objects.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use super::simp::{SGpdMap, SimpGroupoid};
use crate::error::{Error, Result};
use crate::gpd::{FinGroupoid, GpdFunctor};
use crate::sset::{enumerate_maps, FinSSet, SSetMap, SimplexWord, Subsimplex};

type Images = Vec<Vec<SimplexWord>>;

/// Maps `A → obj` and `A → mor` of a simplicial groupoid, as a groupoid.
#[derive(Debug, Clone)]
pub struct HomGroupoid {
    pub groupoid: Arc<FinGroupoid>,
    pub source: Arc<FinSSet>,
    pub objects: Vec<SSetMap>,
    pub morphisms: Vec<SSetMap>,
    object_index: HashMap<Images, u32>,
    morphism_index: HashMap<Images, u32>,
}

impl HomGroupoid {
    pub fn object_of(&self, m: &SSetMap) -> Option<u32> {
        self.object_index.get(m.images()).copied()
    }

    pub fn morphism_of(&self, m: &SSetMap) -> Option<u32> {
        self.morphism_index.get(m.images()).copied()
    }

    fn lookup_object(&self, images: &[Vec<SimplexWord>]) -> Result<u32> {
        self.object_index
            .get(images)
            .copied()
            .ok_or_else(|| Error::Internal("object map missing from the hom-groupoid".into()))
    }

    fn lookup_morphism(&self, images: &[Vec<SimplexWord>]) -> Result<u32> {
        self.morphism_index
            .get(images)
            .copied()
            .ok_or_else(|| Error::Internal("morphism map missing from the hom-groupoid".into()))
    }

    /// The functor `Hom(A, X) → Hom(A', X)` given by precomposition with `j: A' → A`.
    pub fn precompose(&self, j: &SSetMap, target: &HomGroupoid) -> Result<GpdFunctor> {
        let obj = self
            .objects
            .iter()
            .map(|m| target.lookup_object(j.then(m)?.images()))
            .collect::<Result<Vec<_>>>()?;
        let mor = self
            .morphisms
            .iter()
            .map(|m| target.lookup_morphism(j.then(m)?.images()))
            .collect::<Result<Vec<_>>>()?;
        GpdFunctor::new(self.groupoid.clone(), target.groupoid.clone(), obj, mor)
    }

    /// The functor `Hom(A, X) → Hom(A, Y)` given by postcomposition with `p: X → Y`.
    pub fn postcompose(&self, p: &SGpdMap, target: &HomGroupoid) -> Result<GpdFunctor> {
        let obj = self
            .objects
            .iter()
            .map(|m| target.lookup_object(m.then(p.on_obj())?.images()))
            .collect::<Result<Vec<_>>>()?;
        let mor = self
            .morphisms
            .iter()
            .map(|m| target.lookup_morphism(m.then(p.on_mor())?.images()))
            .collect::<Result<Vec<_>>>()?;
        GpdFunctor::new(self.groupoid.clone(), target.groupoid.clone(), obj, mor)
    }
}

/// The groupoid of maps `A → X`.
pub fn hom_groupoid(a: &Arc<FinSSet>, x: &SimpGroupoid) -> Result<HomGroupoid> {
    if !a.is_empty() {
        x.require(a.dim())?;
    }
    let objects = enumerate_maps(a, x.obj())?;
    let morphisms = enumerate_maps(a, x.mor())?;
    let object_index: HashMap<Images, u32> =
        objects.iter().enumerate().map(|(i, m)| (m.images().to_vec(), i as u32)).collect();
    let morphism_index: HashMap<Images, u32> =
        morphisms.iter().enumerate().map(|(i, m)| (m.images().to_vec(), i as u32)).collect();
    let mut src = Vec::with_capacity(morphisms.len());
    let mut tgt = Vec::with_capacity(morphisms.len());
    for m in &morphisms {
        src.push(object_index[m.then(x.src())?.images()]);
        tgt.push(object_index[m.then(x.tgt())?.images()]);
    }
    let memo = RefCell::new(HashMap::new());
    let compose = |a: &SimplexWord, b: &SimplexWord| {
        *memo.borrow_mut().entry((*a, *b)).or_insert_with(|| x.compose(a, b).unwrap())
    };
    let groupoid = FinGroupoid::from_trusted(objects.len(), src, tgt, |g, f| {
        let (f, g) = (&morphisms[f as usize], &morphisms[g as usize]);
        let images: Images = f
            .images()
            .iter()
            .zip(g.images())
            .map(|(lf, lg)| lf.iter().zip(lg).map(|(a, b)| compose(a, b)).collect())
            .collect();
        morphism_index[&images]
    })?;
    Ok(HomGroupoid { groupoid: Arc::new(groupoid), source: a.clone(), objects, morphisms, object_index, morphism_index })
}

/// The functor from the groupoid of `n`-simplices to `Hom(S, X)` restricting along
/// `S ⊆ Δⁿ`.
pub fn restriction_functor(x: &SimpGroupoid, sub: &Subsimplex, hom: &HomGroupoid) -> Result<GpdFunctor> {
    let n = sub.ambient;
    let level = x.level(n)?;
    let s = sub.sset();
    let restrict = |a: &FinSSet, w: &SimplexWord| -> Images {
        (0..s.counts().len())
            .map(|k| s.nondegenerate(k).map(|y| a.restrict(w, sub.mask_of(y))).collect())
            .collect()
    };
    let ol = x.obj().level(n)?;
    let ml = x.mor().level(n)?;
    let obj = ol.simplices.iter().map(|w| hom.lookup_object(&restrict(x.obj(), w))).collect::<Result<Vec<_>>>()?;
    let mor = ml.simplices.iter().map(|w| hom.lookup_morphism(&restrict(x.mor(), w))).collect::<Result<Vec<_>>>()?;
    GpdFunctor::new(level, hom.groupoid.clone(), obj, mor)
}

/// `M_n X = Hom(∂Δⁿ, X)` with the restriction functor from level `n`.
#[derive(Debug, Clone)]
pub struct MatchingObject {
    pub hom: HomGroupoid,
    pub restriction: GpdFunctor,
}

pub fn matching_object(x: &SimpGroupoid, n: usize) -> Result<MatchingObject> {
    let b = Subsimplex::boundary(n)?;
    let hom = hom_groupoid(b.sset(), x)?;
    let restriction = restriction_functor(x, &b, &hom)?;
    Ok(MatchingObject { hom, restriction })
}

/// The degenerate part of level `n`, as level positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatchingObject {
    pub objects: Vec<u32>,
    pub morphisms: Vec<u32>,
}

pub fn latching_object(x: &SimpGroupoid, n: usize) -> Result<LatchingObject> {
    x.require(n)?;
    let degenerate = |a: &FinSSet| -> Result<Vec<u32>> {
        Ok(a.level(n)?
            .simplices
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_degenerate())
            .map(|(i, _)| i as u32)
            .collect())
    };
    Ok(LatchingObject { objects: degenerate(x.obj())?, morphisms: degenerate(x.mor())? })
}
