//! Constructions of simplicial groupoids.

use std::hash::Hash;
use std::sync::Arc;

use super::simp::{SGpdMap, SimpGroupoid};
use crate::error::{Error, Result};
use crate::gpd::{FinGroupoid, GpdFunctor};
use crate::sset::{from_keys, keyed_map, FinSSet, Keyed, KeyedLevels, SSetMap, SimplexWord};

/// A simplicial groupoid presented by explicit keys for the objects and morphisms of each level.
pub trait GroupoidLevels {
    type Obj: Clone + Eq + Hash;
    type Mor: Clone + Eq + Hash;

    fn objects(&self, n: usize) -> Vec<Self::Obj>;
    fn morphisms(&self, n: usize) -> Vec<Self::Mor>;
    fn obj_face(&self, n: usize, x: &Self::Obj, i: usize) -> Self::Obj;
    fn obj_degen(&self, n: usize, x: &Self::Obj, i: usize) -> Self::Obj;
    fn mor_face(&self, n: usize, f: &Self::Mor, i: usize) -> Self::Mor;
    fn mor_degen(&self, n: usize, f: &Self::Mor, i: usize) -> Self::Mor;
    fn src(&self, n: usize, f: &Self::Mor) -> Self::Obj;
    fn tgt(&self, n: usize, f: &Self::Mor) -> Self::Obj;
    fn ident(&self, n: usize, x: &Self::Obj) -> Self::Mor;
    fn invert(&self, n: usize, f: &Self::Mor) -> Self::Mor;
    /// `g ∘ f`.
    fn comp(&self, n: usize, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
}

struct ObjSide<'a, S>(&'a S);
struct MorSide<'a, S>(&'a S);

impl<S: GroupoidLevels> KeyedLevels for ObjSide<'_, S> {
    type Key = S::Obj;
    fn level(&self, n: usize) -> Vec<S::Obj> {
        self.0.objects(n)
    }
    fn face(&self, n: usize, key: &S::Obj, i: usize) -> S::Obj {
        self.0.obj_face(n, key, i)
    }
    fn degen(&self, n: usize, key: &S::Obj, i: usize) -> S::Obj {
        self.0.obj_degen(n, key, i)
    }
}

impl<S: GroupoidLevels> KeyedLevels for MorSide<'_, S> {
    type Key = S::Mor;
    fn level(&self, n: usize) -> Vec<S::Mor> {
        self.0.morphisms(n)
    }
    fn face(&self, n: usize, key: &S::Mor, i: usize) -> S::Mor {
        self.0.mor_face(n, key, i)
    }
    fn degen(&self, n: usize, key: &S::Mor, i: usize) -> S::Mor {
        self.0.mor_degen(n, key, i)
    }
}

/// Keyed presentation together with the resulting simplicial groupoid.
#[derive(Debug)]
pub struct KeyedGroupoid<O, M> {
    pub groupoid: Arc<SimpGroupoid>,
    pub obj: Keyed<O>,
    pub mor: Keyed<M>,
}

/// Reads levels `0..=top` of a keyed presentation.
pub fn from_levels<S: GroupoidLevels>(
    src: &S,
    top: usize,
    truncation: Option<usize>,
) -> Result<KeyedGroupoid<S::Obj, S::Mor>> {
    let obj = from_keys(&ObjSide(src), top, truncation, false)?;
    let mor = from_keys(&MorSide(src), top, truncation, false)?;
    let s = keyed_map(&mor, &obj, |n, f| Ok(src.src(n, f)))?;
    let t = keyed_map(&mor, &obj, |n, f| Ok(src.tgt(n, f)))?;
    let e = keyed_map(&obj, &mor, |n, x| Ok(src.ident(n, x)))?;
    let v = keyed_map(&mor, &mor, |n, f| Ok(src.invert(n, f)))?;
    let key = |w: &SimplexWord| {
        mor.key_of(w)
            .cloned()
            .ok_or_else(|| Error::Truncation { needed: w.dim(), available: top })
    };
    let groupoid = SimpGroupoid::new(obj.sset.clone(), mor.sset.clone(), s, t, e, v, |f, g| {
        let n = f.dim();
        let c = src.comp(n, &key(f)?, &key(g)?);
        mor.word(n, &c).ok_or_else(|| Error::Internal("composite is not a listed key".into()))
    })?;
    Ok(KeyedGroupoid { groupoid: Arc::new(groupoid), obj, mor })
}

/// The simplicial groupoid constant at `g`.
pub fn constant(g: &Arc<FinGroupoid>) -> Result<SimpGroupoid> {
    let k = from_levels(&Constant(g.clone()), 0, None)?;
    Arc::try_unwrap(k.groupoid).map_err(|_| Error::Internal("shared groupoid".into()))
}

struct Constant(Arc<FinGroupoid>);

impl GroupoidLevels for Constant {
    type Obj = u32;
    type Mor = u32;
    fn objects(&self, _: usize) -> Vec<u32> {
        self.0.objects().collect()
    }
    fn morphisms(&self, _: usize) -> Vec<u32> {
        self.0.morphisms().collect()
    }
    fn obj_face(&self, _: usize, x: &u32, _: usize) -> u32 {
        *x
    }
    fn obj_degen(&self, _: usize, x: &u32, _: usize) -> u32 {
        *x
    }
    fn mor_face(&self, _: usize, f: &u32, _: usize) -> u32 {
        *f
    }
    fn mor_degen(&self, _: usize, f: &u32, _: usize) -> u32 {
        *f
    }
    fn src(&self, _: usize, f: &u32) -> u32 {
        self.0.src(*f)
    }
    fn tgt(&self, _: usize, f: &u32) -> u32 {
        self.0.tgt(*f)
    }
    fn ident(&self, _: usize, x: &u32) -> u32 {
        self.0.ident(*x)
    }
    fn invert(&self, _: usize, f: &u32) -> u32 {
        self.0.inverse(*f)
    }
    fn comp(&self, _: usize, f: &u32, g: &u32) -> u32 {
        self.0.comp(*g, *f)
    }
}

/// The discrete simplicial groupoid on `a`: only identities.
pub fn discrete(a: &Arc<FinSSet>) -> Result<SimpGroupoid> {
    let id = SSetMap::identity(a);
    SimpGroupoid::new(a.clone(), a.clone(), id.clone(), id.clone(), id.clone(), id, |f, _| Ok(*f))
}

/// Objects of level `n` of the chaotic resolution: a functor from the chaotic groupoid on
/// `0..=n`, stored as its values `a[i]: F(0) → F(i)` (so `a[0]` is an identity).
pub type ChaoticObject = Vec<u32>;
/// A natural isomorphism `F ⇒ F'` stored as `(F, F', component at 0)`.
pub type ChaoticMorphism = (Vec<u32>, Vec<u32>, u32);

struct Chaotic {
    g: Arc<FinGroupoid>,
    out: Vec<Vec<u32>>,
}

impl Chaotic {
    fn new(g: &Arc<FinGroupoid>) -> Self {
        let out = g.objects().map(|x| g.morphisms().filter(|&f| g.src(f) == x).collect()).collect();
        Chaotic { g: g.clone(), out }
    }

    fn reindex(&self, a: &[u32], theta: &[usize]) -> Vec<u32> {
        let back = self.g.inverse(a[theta[0]]);
        theta.iter().map(|&t| self.g.comp(a[t], back)).collect()
    }

    fn reindex_mor(&self, f: &ChaoticMorphism, theta: &[usize]) -> ChaoticMorphism {
        let (a, b, c) = f;
        let g = &self.g;
        let c2 = g.comp(g.comp(b[theta[0]], *c), g.inverse(a[theta[0]]));
        (self.reindex(a, theta), self.reindex(b, theta), c2)
    }
}

fn face_theta(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

fn degen_theta(n: usize, i: usize) -> Vec<usize> {
    (0..n + 2).map(|j| if j <= i { j } else { j - 1 }).collect()
}

impl GroupoidLevels for Chaotic {
    type Obj = ChaoticObject;
    type Mor = ChaoticMorphism;

    fn objects(&self, n: usize) -> Vec<ChaoticObject> {
        let mut out = Vec::new();
        for x in self.g.objects() {
            let choices = &self.out[x as usize];
            let mut cur = vec![self.g.ident(x)];
            fn rec(choices: &[u32], n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if cur.len() == n + 1 {
                    out.push(cur.clone());
                    return;
                }
                for &f in choices {
                    cur.push(f);
                    rec(choices, n, cur, out);
                    cur.pop();
                }
            }
            rec(choices, n, &mut cur, &mut out);
        }
        out
    }

    fn morphisms(&self, n: usize) -> Vec<ChaoticMorphism> {
        let objs = self.objects(n);
        let mut out = Vec::new();
        for a in &objs {
            for b in &objs {
                let (x, y) = (self.g.src(a[0]), self.g.src(b[0]));
                for &c in self.g.hom(x, y) {
                    out.push((a.clone(), b.clone(), c));
                }
            }
        }
        out
    }

    fn obj_face(&self, n: usize, x: &ChaoticObject, i: usize) -> ChaoticObject {
        self.reindex(x, &face_theta(n, i))
    }
    fn obj_degen(&self, n: usize, x: &ChaoticObject, i: usize) -> ChaoticObject {
        self.reindex(x, &degen_theta(n, i))
    }
    fn mor_face(&self, n: usize, f: &ChaoticMorphism, i: usize) -> ChaoticMorphism {
        self.reindex_mor(f, &face_theta(n, i))
    }
    fn mor_degen(&self, n: usize, f: &ChaoticMorphism, i: usize) -> ChaoticMorphism {
        self.reindex_mor(f, &degen_theta(n, i))
    }
    fn src(&self, _: usize, f: &ChaoticMorphism) -> ChaoticObject {
        f.0.clone()
    }
    fn tgt(&self, _: usize, f: &ChaoticMorphism) -> ChaoticObject {
        f.1.clone()
    }
    fn ident(&self, _: usize, x: &ChaoticObject) -> ChaoticMorphism {
        (x.clone(), x.clone(), x[0])
    }
    fn invert(&self, _: usize, f: &ChaoticMorphism) -> ChaoticMorphism {
        (f.1.clone(), f.0.clone(), self.g.inverse(f.2))
    }
    fn comp(&self, _: usize, f: &ChaoticMorphism, g: &ChaoticMorphism) -> ChaoticMorphism {
        (f.0.clone(), g.1.clone(), self.g.comp(g.2, f.2))
    }
}

/// The simplicial groupoid whose level `n` is the groupoid of functors from the chaotic
/// groupoid on `n + 1` objects into `g`, truncated at `d`.
pub fn chaotic_resolution(g: &Arc<FinGroupoid>, d: usize) -> Result<KeyedGroupoid<ChaoticObject, ChaoticMorphism>> {
    from_levels(&Chaotic::new(g), d, Some(d))
}

/// The constructions offered by [`make_sgpd`].
#[derive(Debug, Clone)]
pub enum SGpdKind {
    Constant(Arc<FinGroupoid>),
    Discrete(Arc<FinSSet>),
    ChaoticResolution(Arc<FinGroupoid>, usize),
}

pub fn make_sgpd(kind: &SGpdKind) -> Result<Arc<SimpGroupoid>> {
    match kind {
        SGpdKind::Constant(g) => Ok(Arc::new(constant(g)?)),
        SGpdKind::Discrete(a) => Ok(Arc::new(discrete(a)?)),
        SGpdKind::ChaoticResolution(g, d) => Ok(chaotic_resolution(g, *d)?.groupoid),
    }
}

/// The map of chaotic resolutions induced by a functor, truncated at `d`.
pub fn chaotic_resolution_map(f: &GpdFunctor, d: usize) -> Result<SGpdMap> {
    let (x, y) = (chaotic_resolution(f.dom(), d)?, chaotic_resolution(f.cod(), d)?);
    let on = |a: &[u32]| a.iter().map(|&m| f.on_morphism(m)).collect::<Vec<_>>();
    let on_obj = keyed_map(&x.obj, &y.obj, |_, a| Ok(on(a)))?;
    let on_mor = keyed_map(&x.mor, &y.mor, |_, (a, b, c)| Ok((on(a), on(b), f.on_morphism(*c))))?;
    SGpdMap::new(x.groupoid, y.groupoid, on_obj, on_mor)
}

/// The map of constant simplicial groupoids induced by a functor.
pub fn constant_map(f: &GpdFunctor) -> Result<SGpdMap> {
    let (x, y) = (from_levels(&Constant(f.dom().clone()), 0, None)?, from_levels(&Constant(f.cod().clone()), 0, None)?);
    let on_obj = keyed_map(&x.obj, &y.obj, |_, a| Ok(f.on_object(*a)))?;
    let on_mor = keyed_map(&x.mor, &y.mor, |_, m| Ok(f.on_morphism(*m)))?;
    SGpdMap::new(x.groupoid, y.groupoid, on_obj, on_mor)
}
