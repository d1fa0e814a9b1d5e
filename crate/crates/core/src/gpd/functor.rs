//! Functors, natural isomorphisms and the model-structure predicates on groupoids.

use std::collections::HashMap;
use std::sync::Arc;

use super::groupoid::FinGroupoid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpdFunctor {
    dom: Arc<FinGroupoid>,
    cod: Arc<FinGroupoid>,
    obj: Vec<u32>,
    mor: Vec<u32>,
}

impl GpdFunctor {
    pub fn new(dom: Arc<FinGroupoid>, cod: Arc<FinGroupoid>, obj: Vec<u32>, mor: Vec<u32>) -> Result<Self> {
        if obj.len() != dom.object_count() || mor.len() != dom.morphism_count() {
            return Err(Error::Invalid("functor tables have the wrong size".into()));
        }
        if obj.iter().any(|&x| x as usize >= cod.object_count()) || mor.iter().any(|&f| f as usize >= cod.morphism_count()) {
            return Err(Error::Invalid("functor sends something outside the codomain".into()));
        }
        for f in dom.morphisms() {
            let m = mor[f as usize];
            if cod.src(m) != obj[dom.src(f) as usize] || cod.tgt(m) != obj[dom.tgt(f) as usize] {
                return Err(Error::Axiom(format!("morphism {f} is sent to a morphism with the wrong endpoints")));
            }
        }
        for x in dom.objects() {
            if mor[dom.ident(x) as usize] != cod.ident(obj[x as usize]) {
                return Err(Error::Axiom(format!("identity of {x} is not preserved")));
            }
        }
        for f in dom.morphisms() {
            for y in dom.objects() {
                for &g in dom.hom(dom.tgt(f), y) {
                    if mor[dom.comp(g, f) as usize] != cod.comp(mor[g as usize], mor[f as usize]) {
                        return Err(Error::Axiom(format!("composite of {g} and {f} is not preserved")));
                    }
                }
            }
        }
        Ok(GpdFunctor { dom, cod, obj, mor })
    }

    pub(crate) fn new_unchecked(dom: Arc<FinGroupoid>, cod: Arc<FinGroupoid>, obj: Vec<u32>, mor: Vec<u32>) -> Self {
        GpdFunctor { dom, cod, obj, mor }
    }

    pub fn identity(g: &Arc<FinGroupoid>) -> Self {
        GpdFunctor {
            dom: g.clone(),
            cod: g.clone(),
            obj: g.objects().collect(),
            mor: g.morphisms().collect(),
        }
    }

    /// The unique functor to the terminal groupoid.
    pub fn to_terminal(g: &Arc<FinGroupoid>) -> Self {
        GpdFunctor {
            dom: g.clone(),
            cod: Arc::new(FinGroupoid::terminal()),
            obj: vec![0; g.object_count()],
            mor: vec![0; g.morphism_count()],
        }
    }

    /// The inclusion of a single object of `g`.
    pub fn point(g: &Arc<FinGroupoid>, x: u32) -> Result<Self> {
        if x as usize >= g.object_count() {
            return Err(Error::Invalid(format!("no object {x}")));
        }
        Ok(GpdFunctor { dom: Arc::new(FinGroupoid::terminal()), cod: g.clone(), obj: vec![x], mor: vec![g.ident(x)] })
    }

    pub fn dom(&self) -> &Arc<FinGroupoid> {
        &self.dom
    }
    pub fn cod(&self) -> &Arc<FinGroupoid> {
        &self.cod
    }
    pub fn on_object(&self, x: u32) -> u32 {
        self.obj[x as usize]
    }
    pub fn on_morphism(&self, f: u32) -> u32 {
        self.mor[f as usize]
    }
    pub fn object_table(&self) -> &[u32] {
        &self.obj
    }
    pub fn morphism_table(&self) -> &[u32] {
        &self.mor
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GpdFunctor) -> Result<GpdFunctor> {
        if self.cod != other.dom {
            return Err(Error::Invalid("functors are not composable".into()));
        }
        Ok(GpdFunctor {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            obj: self.obj.iter().map(|&x| other.obj[x as usize]).collect(),
            mor: self.mor.iter().map(|&f| other.mor[f as usize]).collect(),
        })
    }

    /// A morphism `ψ' : z' → F(x)` of the codomain with no lift ending at `x`, if any.
    pub fn isofibration_witness(&self) -> Option<(u32, u32)> {
        for x in self.dom.objects() {
            let mut hit = vec![false; self.cod.morphism_count()];
            for f in self.dom.incoming(x) {
                hit[self.mor[f as usize] as usize] = true;
            }
            if let Some(m) = self.cod.incoming(self.obj[x as usize]).find(|&m| !hit[m as usize]) {
                return Some((x, m));
            }
        }
        None
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.cod.object_count()];
        self.obj.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn is_fully_faithful(&self) -> bool {
        for x in self.dom.objects() {
            for y in self.dom.objects() {
                let mut images: Vec<u32> = self.dom.hom(x, y).iter().map(|&f| self.mor[f as usize]).collect();
                images.sort_unstable();
                images.dedup();
                let target = self.cod.hom(self.obj[x as usize], self.obj[y as usize]);
                if images.len() != self.dom.hom(x, y).len() || images.len() != target.len() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_essentially_surjective(&self) -> bool {
        self.cod
            .objects()
            .all(|z| self.obj.iter().any(|&y| self.cod.is_connected(y, z)))
    }
}

/// The four predicates of the groupoid model structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GpdMapFlags {
    pub isofibration: bool,
    pub cofibration: bool,
    pub equivalence: bool,
    pub trivial_cofibration: bool,
}

/// Classifies a functor. The trivial-cofibration flag uses the independent characterization
/// "injective on objects, essentially surjective, and an isomorphism onto a full subgroupoid".
pub fn classify_gpd_map(f: &GpdFunctor) -> GpdMapFlags {
    let cofibration = f.is_injective_on_objects();
    let ff = f.is_fully_faithful();
    let es = f.is_essentially_surjective();
    let iso_onto_full = {
        let mut seen = vec![false; f.cod.morphism_count()];
        f.mor.iter().all(|&m| !std::mem::replace(&mut seen[m as usize], true))
            && f.dom.objects().all(|x| {
                f.dom.objects().all(|y| {
                    f.cod.hom(f.obj[x as usize], f.obj[y as usize]).len() == f.dom.hom(x, y).len()
                })
            })
    };
    GpdMapFlags {
        isofibration: f.isofibration_witness().is_none(),
        cofibration,
        equivalence: ff && es,
        trivial_cofibration: cofibration && es && iso_onto_full,
    }
}

/// A natural isomorphism between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatIso {
    pub src: GpdFunctor,
    pub tgt: GpdFunctor,
    pub components: Vec<u32>,
}

impl NatIso {
    pub fn new(src: GpdFunctor, tgt: GpdFunctor, components: Vec<u32>) -> Result<Self> {
        if src.dom != tgt.dom || src.cod != tgt.cod {
            return Err(Error::Invalid("natural isomorphism between non-parallel functors".into()));
        }
        if components.len() != src.dom.object_count() {
            return Err(Error::Invalid("one component per object required".into()));
        }
        let cod = &src.cod;
        for x in src.dom.objects() {
            let c = components[x as usize];
            if cod.src(c) != src.on_object(x) || cod.tgt(c) != tgt.on_object(x) {
                return Err(Error::Axiom(format!("component at {x} has the wrong endpoints")));
            }
        }
        for f in src.dom.morphisms() {
            let (x, y) = (src.dom.src(f), src.dom.tgt(f));
            let lhs = cod.comp(tgt.on_morphism(f), components[x as usize]);
            let rhs = cod.comp(components[y as usize], src.on_morphism(f));
            if lhs != rhs {
                return Err(Error::Axiom(format!("naturality fails at morphism {f}")));
            }
        }
        Ok(NatIso { src, tgt, components })
    }

    pub fn identity(f: &GpdFunctor) -> Self {
        let components = f.dom.objects().map(|x| f.cod.ident(f.on_object(x))).collect();
        NatIso { src: f.clone(), tgt: f.clone(), components }
    }
}

/// Every functor `g → h`, in lexicographic order of (object table, morphism table).
pub fn enumerate_functors(g: &Arc<FinGroupoid>, h: &Arc<FinGroupoid>) -> Vec<GpdFunctor> {
    let mut out = Vec::new();
    let mut obj = vec![0u32; g.object_count()];
    enum_objects(g, h, 0, &mut obj, &mut out);
    out
}

fn enum_objects(g: &Arc<FinGroupoid>, h: &Arc<FinGroupoid>, i: usize, obj: &mut Vec<u32>, out: &mut Vec<GpdFunctor>) {
    if i == obj.len() {
        let mut mor: Vec<Option<u32>> = vec![None; g.morphism_count()];
        for x in g.objects() {
            mor[g.ident(x) as usize] = Some(h.ident(obj[x as usize]));
        }
        enum_morphisms(g, h, obj, &mut mor, out);
        return;
    }
    for y in h.objects() {
        obj[i] = y;
        enum_objects(g, h, i + 1, obj, out);
    }
}

fn enum_morphisms(g: &Arc<FinGroupoid>, h: &Arc<FinGroupoid>, obj: &[u32], mor: &mut [Option<u32>], out: &mut Vec<GpdFunctor>) {
    let Some(f) = mor.iter().position(|m| m.is_none()) else {
        let table: Vec<u32> = mor.iter().map(|m| m.unwrap()).collect();
        out.push(GpdFunctor::new_unchecked(g.clone(), h.clone(), obj.to_vec(), table));
        return;
    };
    let f = f as u32;
    let (s, t) = (obj[g.src(f) as usize], obj[g.tgt(f) as usize]);
    for &m in h.hom(s, t) {
        let mut trial = mor.to_vec();
        trial[f as usize] = Some(m);
        if close(g, h, &mut trial) {
            enum_morphisms(g, h, obj, &mut trial, out);
        }
    }
}

/// Closes a partial morphism assignment under composition and inverses; false on conflict.
fn close(g: &FinGroupoid, h: &FinGroupoid, mor: &mut [Option<u32>]) -> bool {
    loop {
        let mut changed = false;
        let assigned: Vec<u32> = (0..mor.len() as u32).filter(|&f| mor[f as usize].is_some()).collect();
        for &f in &assigned {
            let mf = mor[f as usize].unwrap();
            let fi = g.inverse(f) as usize;
            match mor[fi] {
                None => {
                    mor[fi] = Some(h.inverse(mf));
                    changed = true;
                }
                Some(v) if v != h.inverse(mf) => return false,
                _ => {}
            }
            for &k in &assigned {
                if g.src(k) != g.tgt(f) {
                    continue;
                }
                let c = g.comp(k, f) as usize;
                let mc = h.comp(mor[k as usize].unwrap(), mf);
                match mor[c] {
                    None => {
                        mor[c] = Some(mc);
                        changed = true;
                    }
                    Some(v) if v != mc => return false,
                    _ => {}
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Every natural isomorphism `a ⇒ b`.
pub fn enumerate_nat_isos(a: &GpdFunctor, b: &GpdFunctor) -> Vec<NatIso> {
    let mut out = Vec::new();
    let mut comps = vec![0u32; a.dom.object_count()];
    fn rec(i: usize, a: &GpdFunctor, b: &GpdFunctor, comps: &mut Vec<u32>, out: &mut Vec<NatIso>) {
        let g = &a.dom;
        let h = &a.cod;
        if i == comps.len() {
            out.push(NatIso { src: a.clone(), tgt: b.clone(), components: comps.clone() });
            return;
        }
        let x = i as u32;
        for &c in h.hom(a.on_object(x), b.on_object(x)) {
            comps[i] = c;
            // naturality against morphisms between already chosen objects
            let ok = (0..=i as u32).all(|y| {
                g.hom(y, x).iter().chain(g.hom(x, y)).all(|&f| {
                    let (s, t) = (g.src(f) as usize, g.tgt(f) as usize);
                    h.comp(b.on_morphism(f), comps[s]) == h.comp(comps[t], a.on_morphism(f))
                })
            });
            if ok {
                rec(i + 1, a, b, comps, out);
            }
        }
    }
    rec(0, a, b, &mut comps, &mut out);
    out
}

/// The groupoid of functors `g → h` and natural isomorphisms, with its tables.
#[derive(Debug, Clone)]
pub struct FunctorGroupoid {
    pub groupoid: Arc<FinGroupoid>,
    pub functors: Vec<GpdFunctor>,
    pub isos: Vec<NatIso>,
}

pub fn functor_groupoid(g: &Arc<FinGroupoid>, h: &Arc<FinGroupoid>) -> Result<FunctorGroupoid> {
    let functors = enumerate_functors(g, h);
    let mut isos = Vec::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for (i, a) in functors.iter().enumerate() {
        for (j, b) in functors.iter().enumerate() {
            for n in enumerate_nat_isos(a, b) {
                isos.push(n);
                src.push(i as u32);
                tgt.push(j as u32);
            }
        }
    }
    let index: HashMap<(u32, u32, Vec<u32>), u32> = isos
        .iter()
        .zip(src.iter().zip(&tgt))
        .enumerate()
        .map(|(k, (n, (&s, &t)))| ((s, t, n.components.clone()), k as u32))
        .collect();
    let composite = |second: u32, first: u32| -> u32 {
        let a = &isos[first as usize];
        let b = &isos[second as usize];
        let comps: Vec<u32> = a.components.iter().zip(&b.components).map(|(&p, &q)| h.comp(q, p)).collect();
        index[&(src[first as usize], tgt[second as usize], comps)]
    };
    let groupoid = FinGroupoid::new(functors.len(), src.clone(), tgt.clone(), composite)?;
    Ok(FunctorGroupoid { groupoid: Arc::new(groupoid), functors, isos })
}
