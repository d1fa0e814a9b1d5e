//! Coproducts, pushouts and coequalizers.

use std::sync::Arc;

use super::complex::FinSSet;
use super::keyed::{from_keys, KeyedLevels};
use super::map::SSetMap;
use super::word::{SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A colimit object with its canonical structure maps.
#[derive(Debug, Clone)]
pub struct Colimit {
    pub object: Arc<FinSSet>,
    /// Insertions of each input object (for a coequalizer, the quotient map alone).
    pub insertions: Vec<SSetMap>,
}

/// Coproduct of any number of simplicial sets; simplices of earlier summands come first.
pub fn coproduct_many(parts: &[Arc<FinSSet>]) -> Result<Colimit> {
    let top = parts.iter().map(|a| a.counts().len()).max().unwrap_or(0);
    let trunc = parts.iter().filter_map(|a| a.truncation()).min();
    let mut faces: Vec<Vec<Vec<SimplexWord>>> = vec![Vec::new(); top];
    let mut labels: Vec<Vec<Option<String>>> = vec![Vec::new(); top];
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    for a in parts {
        let off: Vec<usize> = (0..top).map(|n| faces[n].len()).collect();
        for n in 0..a.counts().len() {
            for x in a.nondegenerate(n) {
                let fs = a
                    .faces_of(x)
                    .iter()
                    .map(|w| shift(w, &off))
                    .collect();
                faces[n].push(fs);
                labels[n].push(a.label(x).map(str::to_owned));
            }
        }
        offsets.push(off);
    }
    let object = Arc::new(FinSSet::with_labels(faces, labels, trunc)?);
    let mut insertions = Vec::new();
    for (a, off) in parts.iter().zip(&offsets) {
        let images = (0..a.counts().len())
            .map(|n| a.nondegenerate(n).map(|x| shift(&SimplexWord::nondegenerate(x), off)).collect())
            .collect();
        insertions.push(SSetMap::new(a.clone(), object.clone(), images)?);
    }
    Ok(Colimit { object, insertions })
}

fn shift(w: &SimplexWord, off: &[usize]) -> SimplexWord {
    let b = w.base();
    SimplexWord::raw(SimplexRef::new(b.dim(), b.index() + off[b.dim()]), w.dim(), w.repeats())
}

pub fn coproduct(a: &Arc<FinSSet>, b: &Arc<FinSSet>) -> Result<Colimit> {
    coproduct_many(&[a.clone(), b.clone()])
}

struct Quotient<'a> {
    a: &'a FinSSet,
    /// `rep[n][i]` is the class representative (a level position) of level position `i`.
    rep: Vec<Vec<u32>>,
    levels: Vec<Arc<super::complex::Level>>,
}

impl KeyedLevels for Quotient<'_> {
    type Key = u32;

    fn level(&self, n: usize) -> Vec<u32> {
        let mut v: Vec<u32> = self.rep[n].clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn face(&self, n: usize, key: &u32, i: usize) -> u32 {
        let w = self.levels[n].simplices[*key as usize];
        let f = self.a.face_unchecked(&w, i);
        self.rep[n - 1][self.levels[n - 1].position(&f).expect("face is in the level")]
    }

    fn degen(&self, n: usize, key: &u32, i: usize) -> u32 {
        let w = self.levels[n].simplices[*key as usize];
        let s = w.degen(i).expect("degeneracy in range");
        self.rep[n + 1][self.levels[n + 1].position(&s).expect("degeneracy is in the level")]
    }

    fn label(&self, n: usize, key: &u32) -> Option<String> {
        let w = self.levels[n].simplices[*key as usize];
        if w.is_degenerate() {
            None
        } else {
            self.a.label(w.base()).map(str::to_owned)
        }
    }
}

fn find(parent: &mut [u32], x: u32) -> u32 {
    let mut r = x;
    while parent[r as usize] != r {
        r = parent[r as usize];
    }
    let mut y = x;
    while parent[y as usize] != r {
        let next = parent[y as usize];
        parent[y as usize] = r;
        y = next;
    }
    r
}

/// Coequalizer of `f, g: C ⇉ A`, with the quotient map.
pub fn coequalizer(f: &SSetMap, g: &SSetMap) -> Result<Colimit> {
    if !same(f.dom(), g.dom()) || !same(f.cod(), g.cod()) {
        return Err(Error::Invalid("coequalizer needs parallel maps".into()));
    }
    let a = f.cod().clone();
    let c = f.dom();
    // quotient nondegenerate simplices live in dimensions ≤ dim A
    let top = a.dim();
    c.require_dim(top)?;
    if a.is_empty() {
        return Ok(Colimit { object: a.clone(), insertions: vec![SSetMap::identity(&a)] });
    }
    let mut levels = Vec::new();
    let mut rep = Vec::new();
    for n in 0..=top {
        let level = a.level(n)?;
        let mut parent: Vec<u32> = (0..level.len() as u32).collect();
        for w in &c.level(n)?.simplices {
            let x = level.position(&f.apply(w)).expect("image in level");
            let y = level.position(&g.apply(w)).expect("image in level");
            let (rx, ry) = (find(&mut parent, x as u32), find(&mut parent, y as u32));
            if rx != ry {
                let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
                parent[hi as usize] = lo;
            }
        }
        let r: Vec<u32> = (0..level.len() as u32).map(|i| find(&mut parent, i)).collect();
        rep.push(r);
        levels.push(level);
    }
    let q = Quotient { a: &a, rep, levels };
    let keyed = from_keys(&q, top, a.truncation(), false)?;
    let object = keyed.sset.clone();
    let mut images = Vec::new();
    for n in 0..a.counts().len() {
        let mut l = Vec::new();
        for x in a.nondegenerate(n) {
            let pos = q.levels[n].position(&SimplexWord::nondegenerate(x)).expect("in level");
            let key = q.rep[n][pos];
            l.push(keyed.word(n, &key).expect("class is listed"));
        }
        images.push(l);
    }
    let quotient = SSetMap::new(a.clone(), object.clone(), images)?;
    Ok(Colimit { object, insertions: vec![quotient] })
}

fn same(x: &Arc<FinSSet>, y: &Arc<FinSSet>) -> bool {
    Arc::ptr_eq(x, y) || x == y
}

/// Pushout of `B ←g C →f A`; at least one leg must be a monomorphism.
/// The insertions are returned in the order `A`, `B`.
pub fn pushout(f: &SSetMap, g: &SSetMap) -> Result<Colimit> {
    if !same(f.dom(), g.dom()) {
        return Err(Error::Invalid("pushout legs have different domains".into()));
    }
    if !f.check().mono && !g.check().mono {
        return Err(Error::NotMono(
            "pushout requires at least one leg to be a monomorphism; neither leg is injective".into(),
        ));
    }
    let sum = coproduct(f.cod(), g.cod())?;
    let f2 = f.then(&sum.insertions[0])?;
    let g2 = g.then(&sum.insertions[1])?;
    let q = coequalizer(&f2, &g2)?;
    let qa = sum.insertions[0].then(&q.insertions[0])?;
    let qb = sum.insertions[1].then(&q.insertions[0])?;
    Ok(Colimit { object: q.object, insertions: vec![qa, qb] })
}

/// The map `Q → T` through which `phi: A → T` factors along a surjection `q: A → Q`.
/// Fails when `phi` is not constant on the fibres of `q`.
pub fn factor_through(q: &SSetMap, phi: &SSetMap) -> Result<SSetMap> {
    if !same(q.dom(), phi.dom()) {
        return Err(Error::Invalid("maps to factor have different domains".into()));
    }
    let qo = q.cod();
    let mut images: Vec<Vec<Option<SimplexWord>>> = qo.counts().iter().map(|&c| vec![None; c]).collect();
    for x in q.dom().all_nondegenerate() {
        let w = q.image_of(x);
        let v = phi.image_of(x);
        if w.is_degenerate() {
            continue;
        }
        let slot = &mut images[w.base().dim()][w.base().index()];
        match slot {
            Some(prev) if *prev != v => {
                return Err(Error::Invalid(format!("map is not constant on the class of {w}")));
            }
            _ => *slot = Some(v),
        }
    }
    let images = images
        .into_iter()
        .map(|l| l.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("quotient map is not surjective on nondegenerate simplices".into()))?;
    let out = SSetMap::new(qo.clone(), phi.cod().clone(), images)?;
    for x in q.dom().all_nondegenerate() {
        if out.apply(&q.image_of(x)) != phi.image_of(x) {
            return Err(Error::Invalid(format!("map is not constant on the class of {x}")));
        }
    }
    Ok(out)
}

/// The map between coproducts sending summand `j` of `src` into summand `part(j).0` of `dst`
/// along `part(j).1`.
pub fn summand_map(
    src: &Colimit,
    dst: &Colimit,
    mut part: impl FnMut(usize) -> Result<(usize, SSetMap)>,
) -> Result<SSetMap> {
    let mut images: Vec<Vec<Option<SimplexWord>>> =
        src.object.counts().iter().map(|&c| vec![None; c]).collect();
    for (j, ins) in src.insertions.iter().enumerate() {
        let (k, m) = part(j)?;
        let to = dst
            .insertions
            .get(k)
            .ok_or_else(|| Error::Invalid(format!("no summand {k} in the target")))?;
        for x in ins.dom().all_nondegenerate() {
            let w = ins.image_of(x);
            images[w.base().dim()][w.base().index()] = Some(to.apply(&m.image_of(x)));
        }
    }
    let images = images
        .into_iter()
        .map(|l| l.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("coproduct summands do not cover the object".into()))?;
    SSetMap::new(src.object.clone(), dst.object.clone(), images)
}
