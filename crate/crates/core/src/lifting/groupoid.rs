//! Lifting problems against maps of simplicial groupoids.

use std::sync::Arc;

use super::problem::Cylinder;
use crate::error::{Error, Result};
use crate::gpd::{classify_gpd_map, strict_fiber_product, FinGroupoid, GpdFunctor, GpdMapFlags, StrictFiberProduct};
use crate::sgpd::{check_reedy, hom_groupoid, HomGroupoid, SGpdMap};
use crate::sset::{MapSearch, SSetMap};

/// A square with `i: A → B` mono, `p: X → Y`, `f: A → obj X` and `g: B → obj Y`.
#[derive(Debug, Clone)]
pub struct GpdLiftingProblem {
    pub i: SSetMap,
    pub p: SGpdMap,
    pub f: SSetMap,
    pub g: SSetMap,
}

impl GpdLiftingProblem {
    pub fn new(i: SSetMap, p: SGpdMap, f: SSetMap, g: SSetMap) -> Result<Self> {
        if !i.check().mono {
            return Err(Error::NotMono("the left map of a lifting problem must be a monomorphism".into()));
        }
        if f.dom() != i.dom() || g.dom() != i.cod() || f.cod() != p.dom().obj() || g.cod() != p.cod().obj() {
            return Err(Error::Invalid("lifting square maps do not fit together".into()));
        }
        if !f.then(p.on_obj())?.agrees_with(&i.then(&g)?) {
            return Err(Error::Invalid("lifting square does not commute".into()));
        }
        Ok(GpdLiftingProblem { i, p, f, g })
    }
}

/// A lift up to 2-isomorphism: `h: B → obj X`, `β: f ⇒ h ∘ i` and `γ: g ⇒ p ∘ h`, the last
/// two given as maps into the morphism objects.
#[derive(Debug, Clone)]
pub struct LaxLift {
    pub h: SSetMap,
    pub beta: SSetMap,
    pub gamma: SSetMap,
}

/// A strict lift `h′` with `θ: h′ ⇒ h` restricting to `β` along `i` and mapping to `γ` under `p`.
#[derive(Debug, Clone)]
pub struct StrictifiedLift {
    pub h: SSetMap,
    pub theta: SSetMap,
}

fn check_lax(prob: &GpdLiftingProblem, lax: &LaxLift) -> Result<()> {
    let (x, y) = (prob.p.dom(), prob.p.cod());
    let hi = prob.i.then(&lax.h)?;
    let ok = lax.beta.then(x.src())?.agrees_with(&prob.f)
        && lax.beta.then(x.tgt())?.agrees_with(&hi)
        && lax.gamma.then(y.src())?.agrees_with(&prob.g)
        && lax.gamma.then(y.tgt())?.agrees_with(&lax.h.then(prob.p.on_obj())?)
        && lax.beta.then(prob.p.on_mor())?.agrees_with(&prob.i.then(&lax.gamma)?);
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid("lax lift data do not match the square".into()))
    }
}

/// Replaces a lift up to 2-isomorphism by a strict lift.
pub fn strictify_lift(prob: &GpdLiftingProblem, lax: &LaxLift) -> Result<StrictifiedLift> {
    check_lax(prob, lax)?;
    let b = prob.i.cod();
    let x = prob.p.dom();
    let report = check_reedy(&prob.p, b.dim())?;
    if !report.fibration() {
        return Err(Error::Precondition(format!("the map is not a Reedy fibration through dimension {}", b.dim())));
    }
    let mut search = MapSearch::new(b, x.mor())?;
    search.fix_along(&prob.i, &lax.beta)?;
    search.over(prob.p.on_mor(), &lax.gamma);
    search.over(x.tgt(), &lax.h);
    let theta = search
        .first()?
        .ok_or_else(|| Error::Internal("no lift of the 2-isomorphism through a Reedy fibration".into()))?;
    let h = theta.then(x.src())?;
    let out = StrictifiedLift { h, theta };
    if !(prob.i.then(&out.h)?.agrees_with(&prob.f) && out.h.then(prob.p.on_obj())?.agrees_with(&prob.g)) {
        return Err(Error::Internal("strictified lift fails the square".into()));
    }
    Ok(out)
}

/// The full subgroupoid on the kept objects and morphisms, with old-to-new indices.
fn subgroupoid(g: &FinGroupoid, objects: &[bool], morphisms: &[bool]) -> Result<(FinGroupoid, Vec<u32>, Vec<u32>)> {
    let mut obj_old = Vec::new();
    let mut obj_new = vec![u32::MAX; objects.len()];
    for (o, &k) in objects.iter().enumerate() {
        if k {
            obj_new[o] = obj_old.len() as u32;
            obj_old.push(o as u32);
        }
    }
    let mut mor_old = Vec::new();
    let mut mor_new = vec![u32::MAX; morphisms.len()];
    for (m, &k) in morphisms.iter().enumerate() {
        if k && objects[g.src(m as u32) as usize] && objects[g.tgt(m as u32) as usize] {
            mor_new[m] = mor_old.len() as u32;
            mor_old.push(m as u32);
        }
    }
    let src = mor_old.iter().map(|&m| obj_new[g.src(m) as usize]).collect();
    let tgt = mor_old.iter().map(|&m| obj_new[g.tgt(m) as usize]).collect();
    let sub = FinGroupoid::from_trusted(obj_old.len(), src, tgt, |b, a| {
        mor_new[g.comp(mor_old[b as usize], mor_old[a as usize]) as usize]
    })?;
    Ok((sub, obj_new, mor_new))
}

/// The groupoid `L` of weak lifts and the functor `Ψ` into the groupoid of strict squares.
#[derive(Debug, Clone)]
pub struct WeakLiftSpace {
    /// Fiberwise homotopies `A × Δ¹ → X` over constant homotopies in `Y`.
    pub homotopies: Arc<FinGroupoid>,
    pub lifts: StrictFiberProduct,
    pub squares: StrictFiberProduct,
    pub psi: GpdFunctor,
    pub flags: GpdMapFlags,
    pub surjective_on_objects: bool,
}

/// Builds `L = Hom(A × Δ¹, X)_p ×_{Hom(A, X)} Hom(B, X)` and `Ψ(H, h) = (H₀, p ∘ h)`.
pub fn weak_lift_space(i: &SSetMap, p: &SGpdMap) -> Result<WeakLiftSpace> {
    if !i.check().mono {
        return Err(Error::NotMono("the inclusion of a weak lift space must be a monomorphism".into()));
    }
    let (a, b) = (i.dom(), i.cod());
    let (x, y) = (p.dom(), p.cod());
    let cyl = Cylinder::new(a)?;
    let hcyl = hom_groupoid(cyl.product.sset(), x)?;
    let (hax, hbx) = (hom_groupoid(a, x)?, hom_groupoid(b, x)?);
    let (hay, hby) = (hom_groupoid(a, y)?, hom_groupoid(b, y)?);
    // fiberwise: p ∘ H = p ∘ H₀ ∘ pr, on objects and on morphisms
    let fiberwise = |m: &SSetMap, on: &SSetMap, end0: &SSetMap| -> Result<bool> {
        let pm = m.then(on)?;
        Ok(pm.agrees_with(&cyl.projection.then(&end0.then(m)?.then(on)?)?))
    };
    let objects = hcyl
        .objects
        .iter()
        .map(|m| fiberwise(m, p.on_obj(), &cyl.end0))
        .collect::<Result<Vec<_>>>()?;
    let morphisms = hcyl
        .morphisms
        .iter()
        .map(|m| fiberwise(m, p.on_mor(), &cyl.end0))
        .collect::<Result<Vec<_>>>()?;
    let (sub, obj_new, mor_new) = subgroupoid(&hcyl.groupoid, &objects, &morphisms)?;
    let homotopies = Arc::new(sub);
    let restrict = |end: &SSetMap, target: &HomGroupoid| -> Result<GpdFunctor> {
        let full = hcyl.precompose(end, target)?;
        let obj = (0..obj_new.len()).filter(|&o| obj_new[o] != u32::MAX).map(|o| full.on_object(o as u32)).collect();
        let mor = (0..mor_new.len()).filter(|&m| mor_new[m] != u32::MAX).map(|m| full.on_morphism(m as u32)).collect();
        GpdFunctor::new(homotopies.clone(), target.groupoid.clone(), obj, mor)
    };
    let (at0, at1) = (restrict(&cyl.end0, &hax)?, restrict(&cyl.end1, &hax)?);
    let lifts = strict_fiber_product(&at1, &hbx.precompose(i, &hax)?)?;
    let squares = strict_fiber_product(&hax.postcompose(p, &hay)?, &hby.precompose(i, &hay)?)?;
    let (l0, l1) = (&lifts.projections.0, &lifts.projections.1);
    let psi = squares.pairing(&l0.then(&at0)?, &l1.then(&hbx.postcompose(p, &hby)?)?)?;
    let flags = classify_gpd_map(&psi);
    let mut hit = vec![false; squares.groupoid.object_count()];
    for o in lifts.groupoid.objects() {
        hit[psi.on_object(o) as usize] = true;
    }
    let surjective_on_objects = hit.iter().all(|&h| h);
    Ok(WeakLiftSpace { homotopies, lifts, squares, psi, flags, surjective_on_objects })
}
