//! Lifting problems of simplicial sets and their strict and weak solutions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::{builtin_complex, product, BuiltinKind, FinSSet, MapSearch, SSetMap, SimplexRef, TupleSSet};

/// A commutative square `p ∘ f = g ∘ i` with `i: A → B` a monomorphism and `p: X → Y`.
#[derive(Debug, Clone)]
pub struct LiftingProblem {
    pub i: SSetMap,
    pub p: SSetMap,
    pub f: SSetMap,
    pub g: SSetMap,
}

impl LiftingProblem {
    pub fn new(i: SSetMap, p: SSetMap, f: SSetMap, g: SSetMap) -> Result<Self> {
        if !i.check().mono {
            return Err(Error::NotMono("the left map of a lifting problem must be a monomorphism".into()));
        }
        if f.dom() != i.dom() || g.dom() != i.cod() || f.cod() != p.dom() || g.cod() != p.cod() {
            return Err(Error::Invalid("lifting square maps do not fit together".into()));
        }
        if f.then(&p)? != i.then(&g)? {
            return Err(Error::Invalid("lifting square does not commute".into()));
        }
        Ok(LiftingProblem { i, p, f, g })
    }

    fn search(&self) -> Result<MapSearch> {
        let mut s = MapSearch::new(self.i.cod(), self.p.dom())?;
        s.fix_along(&self.i, &self.f)?;
        s.over(&self.p, &self.g);
        Ok(s)
    }
}

/// `h: B → X` with `h ∘ i = f` and `p ∘ h = g`, if any.
pub fn solve_strict(prob: &LiftingProblem) -> Result<Option<SSetMap>> {
    prob.search()?.first()
}

/// All strict solutions; `reversed` traverses candidates in the opposite order.
pub fn all_strict_solutions(prob: &LiftingProblem, reversed: bool) -> Result<Vec<SSetMap>> {
    let mut s = prob.search()?;
    s.reversed(reversed);
    let mut out = s.all()?;
    out.sort_by(|a, b| a.images().cmp(b.images()));
    Ok(out)
}

/// A cylinder `A × Δ¹` with its end inclusions and projection.
#[derive(Debug, Clone)]
pub struct Cylinder {
    pub product: TupleSSet,
    pub end0: SSetMap,
    pub end1: SSetMap,
    pub projection: SSetMap,
}

impl Cylinder {
    pub fn new(a: &Arc<FinSSet>) -> Result<Self> {
        let d1 = Arc::new(builtin_complex(BuiltinKind::Simplex, 1, None)?);
        let product = product(a, &d1)?;
        let id = SSetMap::identity(a);
        let end = |v: usize| -> Result<SSetMap> {
            let c = SSetMap::constant(a, &d1, SimplexRef::new(0, v))?;
            product.pairing(&[id.clone(), c])
        };
        let (end0, end1) = (end(0)?, end(1)?);
        let projection = product.projection(0)?;
        Ok(Cylinder { product, end0, end1, projection })
    }
}

/// A weak solution: `h` with `p ∘ h = g` and a homotopy `H: A × Δ¹ → X` from `f` to
/// `h ∘ i` lying over the constant homotopy `p ∘ f ∘ pr`.
#[derive(Debug, Clone)]
pub struct WeakSolution {
    pub h: SSetMap,
    pub homotopy: SSetMap,
}

/// Searches for a homotopy `A × Δ¹ → X` between `start` and `end` lying over `base ∘ pr`.
pub fn find_fiberwise_homotopy(
    cyl: &Cylinder,
    p: &SSetMap,
    start: &SSetMap,
    end: &SSetMap,
    base: &SSetMap,
) -> Result<Option<SSetMap>> {
    let mut s = MapSearch::new(cyl.product.sset(), p.dom())?;
    if s.fix_along(&cyl.end0, start).is_err() || s.fix_along(&cyl.end1, end).is_err() {
        return Ok(None);
    }
    s.over(p, &cyl.projection.then(base)?);
    s.first()
}

/// A weak solution if one exists; tries the strict solution with a constant homotopy first.
pub fn solve_weak(prob: &LiftingProblem) -> Result<Option<WeakSolution>> {
    let a = prob.i.dom();
    let cyl = Cylinder::new(a)?;
    let base = prob.f.then(&prob.p)?;
    if let Some(h) = solve_strict(prob)? {
        let homotopy = cyl.projection.then(&prob.f)?;
        return Ok(Some(WeakSolution { h, homotopy }));
    }
    let mut hs = MapSearch::new(prob.i.cod(), prob.p.dom())?;
    hs.over(&prob.p, &prob.g);
    let mut found = None;
    let mut err = None;
    hs.run(|im| {
        let h = SSetMap::new(prob.i.cod().clone(), prob.p.dom().clone(), im.to_vec()).expect("search yields maps");
        let hi = match prob.i.then(&h) {
            Ok(m) => m,
            Err(e) => {
                err = Some(e);
                return false;
            }
        };
        match find_fiberwise_homotopy(&cyl, &prob.p, &prob.f, &hi, &base) {
            Ok(Some(homotopy)) => {
                found = Some(WeakSolution { h, homotopy });
                false
            }
            Ok(None) => true,
            Err(e) => {
                err = Some(e);
                false
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(found)
}

/// Checks every condition on a weak solution.
pub fn verify_weak_solution(prob: &LiftingProblem, sol: &WeakSolution) -> Result<bool> {
    let cyl = Cylinder::new(prob.i.dom())?;
    let hi = prob.i.then(&sol.h)?;
    Ok(sol.h.then(&prob.p)? == prob.g
        && cyl.end0.then(&sol.homotopy)? == prob.f
        && cyl.end1.then(&sol.homotopy)? == hi
        && sol.homotopy.then(&prob.p)? == cyl.projection.then(&prob.f)?.then(&prob.p)?)
}
