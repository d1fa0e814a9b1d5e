//! Nerves of groupoids and of functors.

use std::collections::HashMap;
use std::sync::Arc;

use super::functor::GpdFunctor;
use super::groupoid::FinGroupoid;
use crate::error::{Error, Result};
use crate::sset::{FinSSet, SSetMap, SimplexRef, SimplexWord};

/// A string `x_0 → x_1 → … → x_n`, stored as its start object and morphisms `f_1, …, f_n`.
pub type NerveString = (u32, Vec<u32>);

/// The nerve of a groupoid truncated at some dimension, with its string tables.
#[derive(Debug, Clone)]
pub struct Nerve {
    pub groupoid: Arc<FinGroupoid>,
    pub sset: Arc<FinSSet>,
    strings: Vec<Vec<NerveString>>,
    index: HashMap<NerveString, SimplexRef>,
}

impl Nerve {
    /// The nerve truncated at dimension `d`.
    pub fn build(g: &Arc<FinGroupoid>, d: usize) -> Result<Self> {
        let non_id: Vec<u32> = g.morphisms().filter(|&f| !g.is_identity(f)).collect();
        let mut strings: Vec<Vec<NerveString>> = vec![g.objects().map(|x| (x, Vec::new())).collect()];
        for n in 1..=d {
            let mut layer = Vec::new();
            for (x, prev) in &strings[n - 1] {
                let end = prev.last().map_or(*x, |&f| g.tgt(f));
                for &f in &non_id {
                    if g.src(f) == end {
                        let mut s = prev.clone();
                        s.push(f);
                        layer.push((*x, s));
                    }
                }
            }
            strings.push(layer);
        }
        while strings.len() > 1 && strings.last().is_some_and(|l| l.is_empty()) {
            strings.pop();
        }
        let index: HashMap<NerveString, SimplexRef> = strings
            .iter()
            .enumerate()
            .flat_map(|(n, l)| l.iter().enumerate().map(move |(i, s)| (s.clone(), SimplexRef::new(n, i))))
            .collect();
        let mut faces = Vec::new();
        for (n, layer) in strings.iter().enumerate() {
            let lf = layer
                .iter()
                .map(|s| (0..=n).filter(|_| n > 0).map(|i| normal_form(g, &index, &face_string(g, s, i))).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            faces.push(lf);
        }
        let labels = strings
            .iter()
            .map(|l| l.iter().map(|s| Some(string_label(g, s))).collect())
            .collect();
        let sset = Arc::new(FinSSet::with_labels(faces, labels, Some(d))?);
        Ok(Nerve { groupoid: g.clone(), sset, strings, index })
    }

    /// The string of a nondegenerate simplex.
    pub fn string(&self, x: SimplexRef) -> &NerveString {
        &self.strings[x.dim()][x.index()]
    }

    /// Normal form of any composable string (identities allowed).
    pub fn word_of(&self, s: &NerveString) -> Result<SimplexWord> {
        normal_form(&self.groupoid, &self.index, s)
    }

    /// The full string, identities included, of any simplex.
    pub fn string_of(&self, w: &SimplexWord) -> NerveString {
        let g = &self.groupoid;
        let (x0, base) = self.string(w.base());
        let mut out = Vec::with_capacity(w.dim());
        let mut at = *x0;
        let mut k = 0;
        for j in 0..w.dim() {
            if w.repeats() >> j & 1 == 1 {
                out.push(g.ident(at));
            } else {
                out.push(base[k]);
                at = g.tgt(base[k]);
                k += 1;
            }
        }
        (*x0, out)
    }

    /// The nerve of a functor between groupoids whose nerves are `self` and `target`.
    pub fn map_to(&self, target: &Nerve, f: &GpdFunctor) -> Result<SSetMap> {
        if **f.dom() != *self.groupoid || **f.cod() != *target.groupoid {
            return Err(Error::Invalid("functor does not match the nerves".into()));
        }
        let images = self
            .strings
            .iter()
            .map(|l| {
                l.iter()
                    .map(|(x, s)| {
                        let img = (f.on_object(*x), s.iter().map(|&m| f.on_morphism(m)).collect());
                        target.word_of(&img)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SSetMap::new(self.sset.clone(), target.sset.clone(), images)
    }
}

/// The nerve of `g` truncated at `d`.
pub fn nerve(g: &Arc<FinGroupoid>, d: usize) -> Result<Arc<FinSSet>> {
    Ok(Nerve::build(g, d)?.sset)
}

/// The nerve of a functor, both nerves truncated at `d`.
pub fn nerve_map(f: &GpdFunctor, d: usize) -> Result<SSetMap> {
    let a = Nerve::build(f.dom(), d)?;
    let b = Nerve::build(f.cod(), d)?;
    a.map_to(&b, f)
}

fn string_label(g: &FinGroupoid, s: &NerveString) -> String {
    if s.1.is_empty() {
        return format!("({})", g.object_label(s.0));
    }
    let parts: Vec<String> = s.1.iter().map(|f| f.to_string()).collect();
    format!("({}|{})", g.object_label(s.0), parts.join(","))
}

/// `d_i` of a string of length `n ≥ 1`, identities kept.
pub fn face_string(g: &FinGroupoid, s: &NerveString, i: usize) -> NerveString {
    let (x0, fs) = s;
    let n = fs.len();
    if i == 0 {
        return (g.tgt(fs[0]), fs[1..].to_vec());
    }
    if i == n {
        return (*x0, fs[..n - 1].to_vec());
    }
    let mut out = fs[..i - 1].to_vec();
    out.push(g.comp(fs[i], fs[i - 1]));
    out.extend_from_slice(&fs[i + 1..]);
    (*x0, out)
}

/// `s_i` of a string: insert an identity at vertex `i`.
pub fn degen_string(g: &FinGroupoid, s: &NerveString, i: usize) -> NerveString {
    let (x0, fs) = s;
    let v = if i == 0 { *x0 } else { g.tgt(fs[i - 1]) };
    let mut out = fs.clone();
    out.insert(i, g.ident(v));
    (*x0, out)
}

fn normal_form(g: &FinGroupoid, index: &HashMap<NerveString, SimplexRef>, s: &NerveString) -> Result<SimplexWord> {
    let mut repeats = 0u32;
    let mut base = Vec::new();
    for (j, &f) in s.1.iter().enumerate() {
        if g.is_identity(f) {
            repeats |= 1 << j;
        } else {
            base.push(f);
        }
    }
    let b = index
        .get(&(s.0, base))
        .copied()
        .ok_or_else(|| Error::Invalid("string is not a simplex of this nerve".into()))?;
    SimplexWord::from_repeats(b, s.1.len(), repeats)
}
