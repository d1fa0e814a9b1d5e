//! Strict and lax fiber products of groupoids.

use std::collections::HashMap;
use std::sync::Arc;

use super::functor::GpdFunctor;
use super::groupoid::FinGroupoid;
use crate::error::{Error, Result};

/// The strict fiber product with its projections.
#[derive(Debug, Clone)]
pub struct StrictFiberProduct {
    pub groupoid: Arc<FinGroupoid>,
    /// Objects `(k, h)` with `q(k) = p(h)`; morphisms `(α, β)` with `q(α) = p(β)`.
    pub objects: Vec<(u32, u32)>,
    pub morphisms: Vec<(u32, u32)>,
    pub projections: (GpdFunctor, GpdFunctor),
    object_index: HashMap<(u32, u32), u32>,
    morphism_index: HashMap<(u32, u32), u32>,
}

impl StrictFiberProduct {
    pub fn object(&self, k: u32, h: u32) -> Option<u32> {
        self.object_index.get(&(k, h)).copied()
    }

    pub fn morphism(&self, a: u32, b: u32) -> Option<u32> {
        self.morphism_index.get(&(a, b)).copied()
    }

    /// The functor `T → K ×_G H` induced by `u: T → K` and `v: T → H`.
    pub fn pairing(&self, u: &GpdFunctor, v: &GpdFunctor) -> Result<GpdFunctor> {
        let t = u.dom();
        let obj = t
            .objects()
            .map(|x| self.object(u.on_object(x), v.on_object(x)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid("pairing does not land in the fiber product".into()))?;
        let mor = t
            .morphisms()
            .map(|f| self.morphism(u.on_morphism(f), v.on_morphism(f)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid("pairing does not land in the fiber product".into()))?;
        GpdFunctor::new(t.clone(), self.groupoid.clone(), obj, mor)
    }
}

/// The strict fiber product of `q: K → G` and `p: H → G`.
pub fn strict_fiber_product(q: &GpdFunctor, p: &GpdFunctor) -> Result<StrictFiberProduct> {
    if q.cod() != p.cod() {
        return Err(Error::Invalid("fiber product legs have different codomains".into()));
    }
    let (k, h) = (q.dom(), p.dom());
    let mut by_image: HashMap<u32, Vec<u32>> = HashMap::new();
    for b in h.objects() {
        by_image.entry(p.on_object(b)).or_default().push(b);
    }
    let objects: Vec<(u32, u32)> = k
        .objects()
        .flat_map(|a| by_image.get(&q.on_object(a)).into_iter().flatten().map(move |&b| (a, b)))
        .collect();
    let mut by_image: HashMap<u32, Vec<u32>> = HashMap::new();
    for b in h.morphisms() {
        by_image.entry(p.on_morphism(b)).or_default().push(b);
    }
    let morphisms: Vec<(u32, u32)> = k
        .morphisms()
        .flat_map(|a| by_image.get(&q.on_morphism(a)).into_iter().flatten().map(move |&b| (a, b)))
        .collect();
    let object_index: HashMap<(u32, u32), u32> = objects.iter().enumerate().map(|(i, &o)| (o, i as u32)).collect();
    let morphism_index: HashMap<(u32, u32), u32> =
        morphisms.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let src = morphisms.iter().map(|&(a, b)| object_index[&(k.src(a), h.src(b))]).collect();
    let tgt = morphisms.iter().map(|&(a, b)| object_index[&(k.tgt(a), h.tgt(b))]).collect();
    let groupoid = {
        let sm = morphisms.clone();
        let (k2, h2, idx) = (k.clone(), h.clone(), morphism_index.clone());
        Arc::new(FinGroupoid::from_trusted(objects.len(), src, tgt, move |y, x| {
            let (a1, b1) = sm[x as usize];
            let (a2, b2) = sm[y as usize];
            idx[&(k2.comp(a2, a1), h2.comp(b2, b1))]
        })?)
    };
    let pr_k = GpdFunctor::new(
        groupoid.clone(),
        k.clone(),
        objects.iter().map(|o| o.0).collect(),
        morphisms.iter().map(|m| m.0).collect(),
    )?;
    let pr_h = GpdFunctor::new(
        groupoid.clone(),
        h.clone(),
        objects.iter().map(|o| o.1).collect(),
        morphisms.iter().map(|m| m.1).collect(),
    )?;
    Ok(StrictFiberProduct { groupoid, objects, morphisms, projections: (pr_k, pr_h), object_index, morphism_index })
}

/// The strict fiber product, its lax counterpart and the comparison between them.
#[derive(Debug, Clone)]
pub struct FiberProducts {
    pub strict: Arc<FinGroupoid>,
    /// Objects `(k, h)` with `q(k) = p(h)`; morphisms `(α, β)` with `q(α) = p(β)`.
    pub strict_objects: Vec<(u32, u32)>,
    pub strict_morphisms: Vec<(u32, u32)>,
    pub lax: Arc<FinGroupoid>,
    /// Objects `(k, h, φ: q(k) → p(h))`.
    pub lax_objects: Vec<(u32, u32, u32)>,
    pub lax_morphisms: Vec<(u32, u32, u32, u32)>,
    pub comparison: GpdFunctor,
    /// Projections of the strict product to the domains of `q` and `p`.
    pub strict_projections: (GpdFunctor, GpdFunctor),
}

/// Fiber products of `q: K → G` and `p: H → G`.
pub fn fiber_products(q: &GpdFunctor, p: &GpdFunctor) -> Result<FiberProducts> {
    let (k, h, g) = (q.dom(), p.dom(), q.cod());
    let sp = strict_fiber_product(q, p)?;
    let strict = sp.groupoid.clone();
    let (strict_objects, strict_morphisms) = (sp.objects.clone(), sp.morphisms.clone());
    // lax
    let lax_objects: Vec<(u32, u32, u32)> = k
        .objects()
        .flat_map(|a| h.objects().map(move |b| (a, b)))
        .flat_map(|(a, b)| g.hom(q.on_object(a), p.on_object(b)).iter().map(move |&phi| (a, b, phi)))
        .collect();
    let lobj: HashMap<(u32, u32, u32), u32> = lax_objects.iter().enumerate().map(|(i, &o)| (o, i as u32)).collect();
    let mut lax_morphisms = Vec::new();
    let mut lsrc = Vec::new();
    let mut ltgt = Vec::new();
    for (i, &(a, b, phi)) in lax_objects.iter().enumerate() {
        for alpha in k.morphisms().filter(|&m| k.src(m) == a) {
            for beta in h.morphisms().filter(|&m| h.src(m) == b) {
                // the target connecting morphism is forced: φ' = p(β) ∘ φ ∘ q(α)⁻¹
                let phi2 = g.comp(g.comp(p.on_morphism(beta), phi), g.inverse(q.on_morphism(alpha)));
                let j = lobj[&(k.tgt(alpha), h.tgt(beta), phi2)];
                lax_morphisms.push((i as u32, j, alpha, beta));
                lsrc.push(i as u32);
                ltgt.push(j);
            }
        }
    }
    let lmor: HashMap<(u32, u32, u32), u32> = lax_morphisms
        .iter()
        .enumerate()
        .map(|(n, &(s, _, a, b))| ((s, a, b), n as u32))
        .collect();
    let lax = {
        let lm = lax_morphisms.clone();
        let (k2, h2, idx) = (k.clone(), h.clone(), lmor.clone());
        Arc::new(FinGroupoid::new(lax_objects.len(), lsrc, ltgt, move |y, x| {
            let (s, _, a1, b1) = lm[x as usize];
            let (_, _, a2, b2) = lm[y as usize];
            idx[&(s, k2.comp(a2, a1), h2.comp(b2, b1))]
        })?)
    };
    let comparison = GpdFunctor::new(
        strict.clone(),
        lax.clone(),
        strict_objects.iter().map(|&(a, b)| lobj[&(a, b, g.ident(q.on_object(a)))]).collect(),
        strict_morphisms
            .iter()
            .map(|&(a, b)| lmor[&(lobj[&(k.src(a), h.src(b), g.ident(q.on_object(k.src(a))))], a, b)])
            .collect(),
    )?;
    Ok(FiberProducts {
        strict,
        strict_objects,
        strict_morphisms,
        lax,
        lax_objects,
        lax_morphisms,
        comparison,
        strict_projections: sp.projections,
    })
}
