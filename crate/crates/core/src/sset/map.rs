//! Maps of finite simplicial sets.

use std::sync::Arc;

use super::complex::FinSSet;
use super::word::{SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A simplicial map, given by the image word of every nondegenerate simplex of the domain.
#[derive(Clone, Debug)]
pub struct SSetMap {
    dom: Arc<FinSSet>,
    cod: Arc<FinSSet>,
    images: Vec<Vec<SimplexWord>>,
}

impl PartialEq for SSetMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && (Arc::ptr_eq(&self.dom, &other.dom) || self.dom == other.dom)
            && (Arc::ptr_eq(&self.cod, &other.cod) || self.cod == other.cod)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapFlags {
    pub mono: bool,
    pub iso: bool,
}

impl SSetMap {
    /// Validates that images have the right dimensions and commute with all faces.
    pub fn new(dom: Arc<FinSSet>, cod: Arc<FinSSet>, images: Vec<Vec<SimplexWord>>) -> Result<Self> {
        let map = SSetMap { dom, cod, images };
        map.validate()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(dom: Arc<FinSSet>, cod: Arc<FinSSet>, images: Vec<Vec<SimplexWord>>) -> Self {
        let map = SSetMap { dom, cod, images };
        debug_assert!(map.validate().is_ok(), "{:?}", map.validate());
        map
    }

    fn validate(&self) -> Result<()> {
        if self.images.len() != self.dom.counts().len()
            && !(self.dom.is_empty() && self.images.iter().all(|l| l.is_empty()))
        {
            return Err(Error::Invalid("image table does not match domain dimensions".into()));
        }
        if let Some(tc) = self.cod.truncation() {
            if !self.dom.is_empty() && self.dom.dim() > tc {
                return Err(Error::Truncation { needed: self.dom.dim(), available: tc });
            }
        }
        for (n, layer) in self.images.iter().enumerate() {
            if layer.len() != self.dom.count(n) {
                return Err(Error::Invalid(format!("dimension {n}: wrong number of images")));
            }
            for (x, img) in layer.iter().enumerate() {
                if img.dim() != n || !self.cod.contains(img) {
                    return Err(Error::Invalid(format!("image {img} of @{n}.{x} is not an {n}-simplex of the codomain")));
                }
                if n == 0 {
                    continue;
                }
                let xr = SimplexRef::new(n, x);
                for (i, fw) in self.dom.faces_of(xr).iter().enumerate() {
                    let lhs = self.apply(fw);
                    let rhs = self.cod.face_unchecked(img, i);
                    if lhs != rhs {
                        return Err(Error::Axiom(format!(
                            "map does not commute with d_{i} on @{n}.{x}: {lhs} vs {rhs}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a map from the images of the nondegenerate simplices of `dom`.
    pub fn from_fn(
        dom: &Arc<FinSSet>,
        cod: &Arc<FinSSet>,
        mut f: impl FnMut(SimplexRef) -> Result<SimplexWord>,
    ) -> Result<SSetMap> {
        let images = (0..dom.counts().len())
            .map(|n| dom.nondegenerate(n).map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SSetMap::new(dom.clone(), cod.clone(), images)
    }

    /// True when both maps agree on every simplex.
    pub fn agrees_with(&self, other: &SSetMap) -> bool {
        self.images == other.images
    }

    pub fn dom(&self) -> &Arc<FinSSet> {
        &self.dom
    }
    pub fn cod(&self) -> &Arc<FinSSet> {
        &self.cod
    }
    pub fn images(&self) -> &[Vec<SimplexWord>] {
        &self.images
    }

    pub fn image_of(&self, x: SimplexRef) -> SimplexWord {
        self.images[x.dim()][x.index()]
    }

    /// Image of an arbitrary simplex of the domain.
    pub fn apply(&self, w: &SimplexWord) -> SimplexWord {
        let img = self.image_of(w.base());
        img.degenerate_by(w.dim(), w.repeats())
    }

    pub fn identity(x: &Arc<FinSSet>) -> SSetMap {
        let images = (0..x.counts().len())
            .map(|n| x.nondegenerate(n).map(SimplexWord::nondegenerate).collect())
            .collect();
        SSetMap { dom: x.clone(), cod: x.clone(), images }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SSetMap) -> Result<SSetMap> {
        if !(Arc::ptr_eq(&self.cod, &other.dom) || self.cod == other.dom) {
            return Err(Error::Invalid("composition of non-composable maps".into()));
        }
        let images = self.images.iter().map(|l| l.iter().map(|w| other.apply(w)).collect()).collect();
        Ok(SSetMap { dom: self.dom.clone(), cod: other.cod.clone(), images })
    }

    /// Constant map onto a vertex.
    pub fn constant(dom: &Arc<FinSSet>, cod: &Arc<FinSSet>, vertex: SimplexRef) -> Result<SSetMap> {
        if vertex.dim() != 0 || vertex.index() >= cod.count(0) {
            return Err(Error::Invalid(format!("{vertex} is not a vertex")));
        }
        let v = SimplexWord::nondegenerate(vertex);
        let images = (0..dom.counts().len())
            .map(|n| (0..dom.count(n)).map(|_| v.degenerate_by(n, (1u32 << n) - 1)).collect())
            .collect();
        SSetMap::new(dom.clone(), cod.clone(), images)
    }

    /// Monomorphism and isomorphism flags.
    pub fn check(&self) -> MapFlags {
        let mut seen = std::collections::HashSet::new();
        let mut mono = true;
        for layer in &self.images {
            for w in layer {
                if w.is_degenerate() || !seen.insert(w.base()) {
                    mono = false;
                }
            }
        }
        let onto = mono
            && (0..self.cod.counts().len()).all(|n| self.cod.count(n) == self.dom.count(n))
            && self.dom.truncation() == self.cod.truncation();
        MapFlags { mono, iso: onto }
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<SSetMap> {
        if !self.check().iso {
            return Err(Error::Invalid("map is not an isomorphism".into()));
        }
        let mut images: Vec<Vec<SimplexWord>> = self.cod.counts().iter().map(|&c| vec![SimplexWord::nondegenerate(SimplexRef::new(0, 0)); c]).collect();
        for (n, layer) in self.images.iter().enumerate() {
            for (x, w) in layer.iter().enumerate() {
                images[n][w.base().index()] = SimplexWord::nondegenerate(SimplexRef::new(n, x));
            }
        }
        SSetMap::new(self.cod.clone(), self.dom.clone(), images)
    }
}
