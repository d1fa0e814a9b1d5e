//! Strict and lax fiber products of simplicial groupoids, computed levelwise.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::make::{from_levels, GroupoidLevels};
use super::simp::{SGpdMap, SimpGroupoid};
use crate::error::{Error, Result};
use crate::gpd::{FinGroupoid, GpdFunctor};
use crate::sset::{FinSSet, SSetMap, TupleSSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberMode {
    Strict,
    Lax,
}

/// A fiber product with its projections to the domains of the two legs.
#[derive(Debug, Clone)]
pub struct SGpdFiberProduct {
    pub groupoid: Arc<SimpGroupoid>,
    pub projections: (SGpdMap, SGpdMap),
}

pub fn sgpd_fiber_product(q: &SGpdMap, p: &SGpdMap, mode: FiberMode) -> Result<SGpdFiberProduct> {
    if !Arc::ptr_eq(q.cod(), p.cod()) {
        return Err(Error::Invalid("fiber product legs have different codomains".into()));
    }
    match mode {
        FiberMode::Strict => strict(q, p),
        FiberMode::Lax => lax(q, p),
    }
}

fn strict(q: &SGpdMap, p: &SGpdMap) -> Result<SGpdFiberProduct> {
    let (x, y) = (q.dom().clone(), p.dom().clone());
    let obj = TupleSSet::pullback_by_levels(q.on_obj(), p.on_obj())?;
    let mor = TupleSSet::pullback_by_levels(q.on_mor(), p.on_mor())?;
    let (mo0, mo1) = (mor.projection(0)?, mor.projection(1)?);
    let (ob0, ob1) = (obj.projection(0)?, obj.projection(1)?);
    let src = obj.pairing(&[mo0.then(x.src())?, mo1.then(y.src())?])?;
    let tgt = obj.pairing(&[mo0.then(x.tgt())?, mo1.then(y.tgt())?])?;
    let ident = mor.pairing(&[ob0.then(x.ident())?, ob1.then(y.ident())?])?;
    let invert = mor.pairing(&[mo0.then(x.invert())?, mo1.then(y.invert())?])?;
    let g = SimpGroupoid::new(obj.sset().clone(), mor.sset().clone(), src, tgt, ident, invert, |f, h| {
        let (a, b) = (mor.components_of(f), mor.components_of(h));
        let c = [x.compose(&a[0], &b[0])?, y.compose(&a[1], &b[1])?];
        mor.word_of(&c).ok_or_else(|| Error::Internal("composite leaves the fiber product".into()))
    })?;
    let g = Arc::new(g);
    let px = SGpdMap::new(g.clone(), x, ob0, mo0)?;
    let py = SGpdMap::new(g.clone(), y, ob1, mo1)?;
    Ok(SGpdFiberProduct { groupoid: g, projections: (px, py) })
}

/// Level data of the lax fiber product; keys are level positions.
struct Lax<'a> {
    q: &'a SGpdMap,
    p: &'a SGpdMap,
    functors: Mutex<HashMap<usize, Arc<(GpdFunctor, GpdFunctor)>>>,
}

type Triple = (u32, u32, u32);

fn move_pos(a: &FinSSet, n: usize, pos: u32, to: usize, op: impl Fn(&crate::sset::SimplexWord) -> crate::sset::SimplexWord) -> u32 {
    let w = a.level(n).unwrap().simplices[pos as usize];
    a.level(to).unwrap().position(&op(&w)).unwrap() as u32
}

impl Lax<'_> {
    fn functors(&self, n: usize) -> Arc<(GpdFunctor, GpdFunctor)> {
        let mut c = self.functors.lock().unwrap();
        c.entry(n)
            .or_insert_with(|| Arc::new((self.q.level_functor(n).unwrap(), self.p.level_functor(n).unwrap())))
            .clone()
    }

    fn levels(&self, n: usize) -> (Arc<FinGroupoid>, Arc<FinGroupoid>, Arc<FinGroupoid>) {
        (self.q.dom().level(n).unwrap(), self.p.dom().level(n).unwrap(), self.q.cod().level(n).unwrap())
    }

    fn sides(&self, obj: bool) -> [&Arc<FinSSet>; 3] {
        let (x, y, z) = (self.q.dom(), self.p.dom(), self.q.cod());
        if obj {
            [x.obj(), z.mor(), y.obj()]
        } else {
            [x.mor(), z.mor(), y.mor()]
        }
    }

    fn apply(&self, obj: bool, n: usize, t: &Triple, to: usize, op: impl Fn(&FinSSet, &crate::sset::SimplexWord) -> crate::sset::SimplexWord) -> Triple {
        let [a, b, c] = self.sides(obj);
        (
            move_pos(a, n, t.0, to, |w| op(a, w)),
            move_pos(b, n, t.1, to, |w| op(b, w)),
            move_pos(c, n, t.2, to, |w| op(c, w)),
        )
    }
}

impl GroupoidLevels for Lax<'_> {
    type Obj = Triple;
    type Mor = Triple;

    fn objects(&self, n: usize) -> Vec<Triple> {
        let (gx, gy, gz) = self.levels(n);
        let f = self.functors(n);
        let mut out = Vec::new();
        for a in gx.objects() {
            for b in gy.objects() {
                for &phi in gz.hom(f.0.on_object(a), f.1.on_object(b)) {
                    out.push((a, phi, b));
                }
            }
        }
        out
    }

    fn morphisms(&self, n: usize) -> Vec<Triple> {
        let (gx, gy, _) = self.levels(n);
        let mut out = Vec::new();
        for (a, phi, b) in self.objects(n) {
            for alpha in gx.morphisms().filter(|&m| gx.src(m) == a) {
                for beta in gy.morphisms().filter(|&m| gy.src(m) == b) {
                    out.push((alpha, phi, beta));
                }
            }
        }
        out
    }

    fn obj_face(&self, n: usize, t: &Triple, i: usize) -> Triple {
        self.apply(true, n, t, n - 1, |a, w| a.face(w, i).unwrap())
    }
    fn obj_degen(&self, n: usize, t: &Triple, i: usize) -> Triple {
        self.apply(true, n, t, n + 1, |_, w| w.degen(i).unwrap())
    }
    fn mor_face(&self, n: usize, t: &Triple, i: usize) -> Triple {
        self.apply(false, n, t, n - 1, |a, w| a.face(w, i).unwrap())
    }
    fn mor_degen(&self, n: usize, t: &Triple, i: usize) -> Triple {
        self.apply(false, n, t, n + 1, |_, w| w.degen(i).unwrap())
    }

    fn src(&self, n: usize, &(a, phi, b): &Triple) -> Triple {
        let (gx, gy, _) = self.levels(n);
        (gx.src(a), phi, gy.src(b))
    }

    fn tgt(&self, n: usize, &(a, phi, b): &Triple) -> Triple {
        let (gx, gy, gz) = self.levels(n);
        let f = self.functors(n);
        let phi2 = gz.comp(gz.comp(f.1.on_morphism(b), phi), gz.inverse(f.0.on_morphism(a)));
        (gx.tgt(a), phi2, gy.tgt(b))
    }

    fn ident(&self, n: usize, &(a, phi, b): &Triple) -> Triple {
        let (gx, gy, _) = self.levels(n);
        (gx.ident(a), phi, gy.ident(b))
    }

    fn invert(&self, n: usize, f: &Triple) -> Triple {
        let (gx, gy, _) = self.levels(n);
        let t = self.tgt(n, f);
        (gx.inverse(f.0), t.1, gy.inverse(f.2))
    }

    fn comp(&self, n: usize, f: &Triple, g: &Triple) -> Triple {
        let (gx, gy, _) = self.levels(n);
        (gx.comp(g.0, f.0), f.1, gy.comp(g.2, f.2))
    }
}

fn lax(q: &SGpdMap, p: &SGpdMap) -> Result<SGpdFiberProduct> {
    let (x, y, z) = (q.dom().clone(), p.dom().clone(), q.cod().clone());
    let bounds = [x.bound(), y.bound(), z.bound()];
    let truncation = bounds.iter().flatten().min().copied();
    let natural = 2 * [x.obj(), x.mor(), y.obj(), y.mor(), z.mor()].iter().map(|a| a.dim()).sum::<usize>();
    let top = truncation.unwrap_or(natural);
    for k in 0..=top {
        x.level(k)?;
        y.level(k)?;
        z.level(k)?;
    }
    let src = Lax { q, p, functors: Mutex::new(HashMap::new()) };
    let k = from_levels(&src, top, truncation)?;
    let g = k.groupoid.clone();
    let proj = |a: &Arc<FinSSet>, from: &Arc<FinSSet>, keys: &crate::sset::Keyed<Triple>, first: bool| {
        SSetMap::from_fn(from, a, |s| {
            let t = keys.key(s);
            let pos = if first { t.0 } else { t.2 };
            Ok(a.level(s.dim())?.simplices[pos as usize])
        })
    };
    let px = SGpdMap::new(g.clone(), x.clone(), proj(x.obj(), g.obj(), &k.obj, true)?, proj(x.mor(), g.mor(), &k.mor, true)?)?;
    let py = SGpdMap::new(g.clone(), y.clone(), proj(y.obj(), g.obj(), &k.obj, false)?, proj(y.mor(), g.mor(), &k.mor, false)?)?;
    Ok(SGpdFiberProduct { groupoid: g, projections: (px, py) })
}
