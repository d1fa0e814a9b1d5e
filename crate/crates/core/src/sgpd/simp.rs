//! Internal groupoids in finite simplicial sets and their maps.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::gpd::{FinGroupoid, GpdFunctor};
use crate::sset::{reduce_tuple, FinSSet, Keyed, SSetMap, SimplexWord, TupleSSet};

/// A groupoid object in finite simplicial sets.
///
/// `comp` is defined on the pullback `mor ×_obj mor` of `tgt` and `src`; the pair `(f, g)`
/// composes to `g ∘ f`.
#[derive(Debug)]
pub struct SimpGroupoid {
    obj: Arc<FinSSet>,
    mor: Arc<FinSSet>,
    src: SSetMap,
    tgt: SSetMap,
    ident: SSetMap,
    invert: SSetMap,
    pairs: TupleSSet,
    comp: SSetMap,
    levels: Mutex<HashMap<usize, Arc<FinGroupoid>>>,
    pub(crate) rows: Mutex<HashMap<usize, Arc<Keyed<Vec<u32>>>>>,
}

fn same(a: &Arc<FinSSet>, b: &Arc<FinSSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl SimpGroupoid {
    /// Validates raw structure maps; `comp(f, g)` gives the composite of a composable pair.
    pub fn new(
        obj: Arc<FinSSet>,
        mor: Arc<FinSSet>,
        src: SSetMap,
        tgt: SSetMap,
        ident: SSetMap,
        invert: SSetMap,
        mut comp: impl FnMut(&SimplexWord, &SimplexWord) -> Result<SimplexWord>,
    ) -> Result<Self> {
        let shapes = [
            ("source", &src, &mor, &obj),
            ("target", &tgt, &mor, &obj),
            ("identity", &ident, &obj, &mor),
            ("inverse", &invert, &mor, &mor),
        ];
        for (name, m, d, c) in shapes {
            if !same(m.dom(), d) || !same(m.cod(), c) {
                return Err(Error::Invalid(format!("{name} map has the wrong domain or codomain")));
            }
        }
        let pairs = TupleSSet::pullback_by_levels(&tgt, &src)?;
        let comp = SSetMap::from_fn(pairs.sset(), &mor, |x| {
            let t = pairs.tuple(x);
            comp(&t[0], &t[1])
        })?;
        let x = Self::assemble(obj, mor, src, tgt, ident, invert, pairs, comp);
        x.verify_axioms()?;
        Ok(x)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        obj: Arc<FinSSet>,
        mor: Arc<FinSSet>,
        src: SSetMap,
        tgt: SSetMap,
        ident: SSetMap,
        invert: SSetMap,
        pairs: TupleSSet,
        comp: SSetMap,
    ) -> Self {
        SimpGroupoid {
            obj,
            mor,
            src,
            tgt,
            ident,
            invert,
            pairs,
            comp,
            levels: Mutex::new(HashMap::new()),
            rows: Mutex::new(HashMap::new()),
        }
    }

    /// Checks units, inverses, endpoints of composites and associativity on every simplex.
    pub fn verify_axioms(&self) -> Result<()> {
        let fail = |name: &str, w: &SimplexWord| Err(Error::Axiom(format!("{name} fails at {w}")));
        for x in self.obj.all_nondegenerate() {
            let w = SimplexWord::nondegenerate(x);
            let i = self.ident.apply(&w);
            if self.src.apply(&i) != w {
                return fail("source of identity", &w);
            }
            if self.tgt.apply(&i) != w {
                return fail("target of identity", &w);
            }
        }
        for x in self.mor.all_nondegenerate() {
            let f = SimplexWord::nondegenerate(x);
            let (s, t) = (self.src.apply(&f), self.tgt.apply(&f));
            let inv = self.invert.apply(&f);
            if self.src.apply(&inv) != t || self.tgt.apply(&inv) != s {
                return fail("endpoints of inverse", &f);
            }
            if self.compose(&f, &self.ident.apply(&t))? != f {
                return fail("right unit", &f);
            }
            if self.compose(&self.ident.apply(&s), &f)? != f {
                return fail("left unit", &f);
            }
            if self.compose(&f, &inv)? != self.ident.apply(&s) {
                return fail("right inverse", &f);
            }
            if self.compose(&inv, &f)? != self.ident.apply(&t) {
                return fail("left inverse", &f);
            }
        }
        for x in self.pairs.sset().all_nondegenerate() {
            let p = self.pairs.tuple(x);
            let c = self.comp.image_of(x);
            if self.src.apply(&c) != self.src.apply(&p[0]) || self.tgt.apply(&c) != self.tgt.apply(&p[1]) {
                return fail("endpoints of composite", &c);
            }
        }
        // associativity, level by level on composable triples without a common degeneracy
        let natural = 3 * self.mor.dim();
        let top = self.mor.truncation().map_or(natural, |t| t.min(natural));
        for k in 0..=top {
            let level = self.mor.level(k)?;
            let mut out: HashMap<SimplexWord, Vec<SimplexWord>> = HashMap::new();
            for f in &level.simplices {
                out.entry(self.src.apply(f)).or_default().push(*f);
            }
            for f in &level.simplices {
                for g in out.get(&self.tgt.apply(f)).into_iter().flatten() {
                    let fg = self.compose(f, g)?;
                    for h in out.get(&self.tgt.apply(g)).into_iter().flatten() {
                        if reduce_tuple(&[*f, *g, *h]).1 != 0 {
                            continue;
                        }
                        if self.compose(&fg, h)? != self.compose(f, &self.compose(g, h)?)? {
                            return fail("associativity", f);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn obj(&self) -> &Arc<FinSSet> {
        &self.obj
    }
    pub fn mor(&self) -> &Arc<FinSSet> {
        &self.mor
    }
    pub fn src(&self) -> &SSetMap {
        &self.src
    }
    pub fn tgt(&self) -> &SSetMap {
        &self.tgt
    }
    pub fn ident(&self) -> &SSetMap {
        &self.ident
    }
    pub fn invert(&self) -> &SSetMap {
        &self.invert
    }
    pub fn comp(&self) -> &SSetMap {
        &self.comp
    }
    pub fn pairs(&self) -> &TupleSSet {
        &self.pairs
    }

    /// The largest dimension with complete data, or `None` when untruncated.
    pub fn bound(&self) -> Option<usize> {
        match (self.obj.truncation(), self.mor.truncation()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn require(&self, n: usize) -> Result<()> {
        self.obj.require_dim(n)?;
        self.mor.require_dim(n)
    }

    /// `g ∘ f` for morphism simplices of equal dimension.
    pub fn compose(&self, f: &SimplexWord, g: &SimplexWord) -> Result<SimplexWord> {
        let p = self
            .pairs
            .word_of(&[*f, *g])
            .ok_or_else(|| Error::Invalid(format!("{f} and {g} are not composable")))?;
        Ok(self.comp.apply(&p))
    }

    /// The groupoid of `n`-simplices: objects and morphisms are numbered by level position.
    pub fn level(&self, n: usize) -> Result<Arc<FinGroupoid>> {
        if let Some(g) = self.levels.lock().unwrap().get(&n) {
            return Ok(g.clone());
        }
        self.require(n)?;
        let ol = self.obj.level(n)?;
        let ml = self.mor.level(n)?;
        let pos = |w: SimplexWord| ol.position(&w).unwrap() as u32;
        let src = ml.simplices.iter().map(|f| pos(self.src.apply(f))).collect();
        let tgt = ml.simplices.iter().map(|f| pos(self.tgt.apply(f))).collect();
        let g = FinGroupoid::from_trusted(ol.len(), src, tgt, |g, f| {
            let c = self.compose(&ml.simplices[f as usize], &ml.simplices[g as usize]).unwrap();
            ml.position(&c).unwrap() as u32
        })?;
        let g = Arc::new(g);
        self.levels.lock().unwrap().insert(n, g.clone());
        Ok(g)
    }
}

/// A map of simplicial groupoids.
#[derive(Debug, Clone)]
pub struct SGpdMap {
    dom: Arc<SimpGroupoid>,
    cod: Arc<SimpGroupoid>,
    on_obj: SSetMap,
    on_mor: SSetMap,
}

impl SGpdMap {
    /// Checks that the pair of maps commutes with all structure maps.
    pub fn new(dom: Arc<SimpGroupoid>, cod: Arc<SimpGroupoid>, on_obj: SSetMap, on_mor: SSetMap) -> Result<Self> {
        if !same(on_obj.dom(), dom.obj()) || !same(on_obj.cod(), cod.obj()) {
            return Err(Error::Invalid("object map has the wrong domain or codomain".into()));
        }
        if !same(on_mor.dom(), dom.mor()) || !same(on_mor.cod(), cod.mor()) {
            return Err(Error::Invalid("morphism map has the wrong domain or codomain".into()));
        }
        let checks = [
            ("source", dom.src().then(&on_obj)?, on_mor.then(cod.src())?),
            ("target", dom.tgt().then(&on_obj)?, on_mor.then(cod.tgt())?),
            ("identity", dom.ident().then(&on_mor)?, on_obj.then(cod.ident())?),
            ("inverse", dom.invert().then(&on_mor)?, on_mor.then(cod.invert())?),
        ];
        for (name, a, b) in checks {
            if !a.agrees_with(&b) {
                return Err(Error::Axiom(format!("map does not preserve {name}")));
            }
        }
        for x in dom.pairs().sset().all_nondegenerate() {
            let p = dom.pairs().tuple(x);
            let lhs = on_mor.apply(&dom.comp().image_of(x));
            let rhs = cod.compose(&on_mor.apply(&p[0]), &on_mor.apply(&p[1]))?;
            if lhs != rhs {
                return Err(Error::Axiom(format!("map does not preserve composition at {x}")));
            }
        }
        Ok(SGpdMap { dom, cod, on_obj, on_mor })
    }

    pub fn identity(x: &Arc<SimpGroupoid>) -> Self {
        SGpdMap {
            dom: x.clone(),
            cod: x.clone(),
            on_obj: SSetMap::identity(x.obj()),
            on_mor: SSetMap::identity(x.mor()),
        }
    }

    pub fn dom(&self) -> &Arc<SimpGroupoid> {
        &self.dom
    }
    pub fn cod(&self) -> &Arc<SimpGroupoid> {
        &self.cod
    }
    pub fn on_obj(&self) -> &SSetMap {
        &self.on_obj
    }
    pub fn on_mor(&self) -> &SSetMap {
        &self.on_mor
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SGpdMap) -> Result<SGpdMap> {
        SGpdMap::new(self.dom.clone(), other.cod.clone(), self.on_obj.then(&other.on_obj)?, self.on_mor.then(&other.on_mor)?)
    }

    /// The functor between the groupoids of `n`-simplices.
    pub fn level_functor(&self, n: usize) -> Result<GpdFunctor> {
        let (gx, gy) = (self.dom.level(n)?, self.cod.level(n)?);
        let table = |m: &SSetMap, a: &FinSSet, b: &FinSSet| -> Result<Vec<u32>> {
            let (la, lb) = (a.level(n)?, b.level(n)?);
            Ok(la.simplices.iter().map(|w| lb.position(&m.apply(w)).unwrap() as u32).collect())
        };
        let obj = table(&self.on_obj, self.dom.obj(), self.cod.obj())?;
        let mor = table(&self.on_mor, self.dom.mor(), self.cod.mor())?;
        GpdFunctor::new(gx, gy, obj, mor)
    }
}

/// A natural isomorphism between two maps of simplicial groupoids.
#[derive(Debug, Clone)]
pub struct SGpdNatIso {
    src: SGpdMap,
    tgt: SGpdMap,
    component: SSetMap,
}

impl SGpdNatIso {
    pub fn new(src: SGpdMap, tgt: SGpdMap, component: SSetMap) -> Result<Self> {
        if !Arc::ptr_eq(src.dom(), tgt.dom()) || !Arc::ptr_eq(src.cod(), tgt.cod()) {
            return Err(Error::Invalid("natural isomorphism between maps with different endpoints".into()));
        }
        let y = src.cod().clone();
        if !same(component.dom(), src.dom().obj()) || !same(component.cod(), y.mor()) {
            return Err(Error::Invalid("component map has the wrong domain or codomain".into()));
        }
        if !component.then(y.src())?.agrees_with(src.on_obj()) {
            return Err(Error::Axiom("components do not start at the source map".into()));
        }
        if !component.then(y.tgt())?.agrees_with(tgt.on_obj()) {
            return Err(Error::Axiom("components do not end at the target map".into()));
        }
        let x = src.dom().clone();
        for m in x.mor().all_nondegenerate() {
            let f = SimplexWord::nondegenerate(m);
            let c_s = component.apply(&x.src().apply(&f));
            let c_t = component.apply(&x.tgt().apply(&f));
            let lhs = y.compose(&src.on_mor().apply(&f), &c_t)?;
            let rhs = y.compose(&c_s, &tgt.on_mor().apply(&f))?;
            if lhs != rhs {
                return Err(Error::Axiom(format!("naturality fails at {m}")));
            }
        }
        Ok(SGpdNatIso { src, tgt, component })
    }

    pub fn identity(f: &SGpdMap) -> Result<Self> {
        let component = f.on_obj().then(f.cod().ident())?;
        Self::new(f.clone(), f.clone(), component)
    }

    pub fn src(&self) -> &SGpdMap {
        &self.src
    }
    pub fn tgt(&self) -> &SGpdMap {
        &self.tgt
    }
    pub fn component(&self) -> &SSetMap {
        &self.component
    }

    /// Vertical composite: `self` followed by `next`.
    pub fn then(&self, next: &SGpdNatIso) -> Result<SGpdNatIso> {
        let y = self.src.cod().clone();
        let component = SSetMap::from_fn(self.component.dom(), y.mor(), |x| {
            y.compose(&self.component.image_of(x), &next.component.image_of(x))
        })?;
        Self::new(self.src.clone(), next.tgt.clone(), component)
    }
}
