//! Building a finite simplicial set from level-complete keyed data.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use super::complex::FinSSet;
use super::word::{SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A simplicial object whose simplices in each dimension are listed explicitly.
pub trait KeyedLevels {
    type Key: Clone + Eq + Hash;

    /// All `n`-simplices, in the order that fixes the canonical numbering.
    fn level(&self, n: usize) -> Vec<Self::Key>;
    /// `d_i` of an `n`-simplex.
    fn face(&self, n: usize, key: &Self::Key, i: usize) -> Self::Key;
    /// `s_i` of an `n`-simplex.
    fn degen(&self, n: usize, key: &Self::Key, i: usize) -> Self::Key;
    fn label(&self, _n: usize, _key: &Self::Key) -> Option<String> {
        None
    }
}

/// Result of [`from_keys`]: the simplicial set and the normal form of every key.
#[derive(Debug, Clone)]
pub struct Keyed<K> {
    pub sset: Arc<FinSSet>,
    /// `keys[n][i]` is the key of the nondegenerate simplex `@n.i`.
    pub keys: Vec<Vec<K>>,
    words: Vec<HashMap<K, SimplexWord>>,
    levels: Vec<Vec<K>>,
    by_word: Vec<HashMap<SimplexWord, usize>>,
}

impl<K: Clone + Eq + Hash> Keyed<K> {
    pub fn word(&self, n: usize, key: &K) -> Option<SimplexWord> {
        self.words.get(n)?.get(key).copied()
    }

    pub fn key(&self, x: SimplexRef) -> &K {
        &self.keys[x.dim()][x.index()]
    }

    pub fn level_keys(&self, n: usize) -> &[K] {
        &self.levels[n]
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    /// The key of any simplex of dimension `≤ top`.
    pub fn key_of(&self, w: &SimplexWord) -> Option<&K> {
        let n = w.dim();
        let i = *self.by_word.get(n)?.get(w)?;
        Some(&self.levels[n][i])
    }
}

/// Reads levels `0..=top` of `src` and returns the simplicial set they present.
///
/// A simplex `y` is degenerate along `i` exactly when `s_i d_i y = y`. When `truncation` is
/// `None` the caller asserts that no nondegenerate simplex lives above `top`. With `verify`,
/// every face and degeneracy of every key is checked against the normal form.
pub fn from_keys<S: KeyedLevels>(src: &S, top: usize, truncation: Option<usize>, verify: bool) -> Result<Keyed<S::Key>> {
    let mut faces: Vec<Vec<Vec<SimplexWord>>> = Vec::new();
    let mut labels: Vec<Vec<Option<String>>> = Vec::new();
    let mut keys: Vec<Vec<S::Key>> = Vec::new();
    let mut words: Vec<HashMap<S::Key, SimplexWord>> = Vec::new();
    let mut levels = Vec::new();
    for n in 0..=top {
        let level = src.level(n);
        let mut map: HashMap<S::Key, SimplexWord> = HashMap::with_capacity(level.len());
        let mut nd_keys = Vec::new();
        let mut nd_faces = Vec::new();
        let mut nd_labels = Vec::new();
        for y in &level {
            let mut repeats = 0u32;
            for i in 0..n {
                let back = src.degen(n - 1, &src.face(n, y, i), i);
                if back == *y {
                    repeats |= 1 << i;
                }
            }
            let w = if repeats == 0 {
                let x = SimplexRef::new(n, nd_keys.len());
                let fs = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| {
                            let f = src.face(n, y, i);
                            words[n - 1].get(&f).copied().ok_or_else(|| {
                                Error::Axiom(format!("face d{i} of a {n}-simplex is not listed in level {}", n - 1))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                nd_keys.push(y.clone());
                nd_faces.push(fs);
                nd_labels.push(src.label(n, y));
                SimplexWord::nondegenerate(x)
            } else {
                let mut b = y.clone();
                let mut k = n;
                for i in (0..n).rev() {
                    if repeats >> i & 1 == 1 {
                        b = src.face(k, &b, i);
                        k -= 1;
                    }
                }
                let bw = words[k]
                    .get(&b)
                    .copied()
                    .ok_or_else(|| Error::Axiom(format!("degenerate {n}-simplex has an unlisted base")))?;
                if bw.is_degenerate() {
                    return Err(Error::Axiom(format!("degenerate {n}-simplex has a degenerate base")));
                }
                SimplexWord::raw(bw.base(), n, repeats)
            };
            if map.insert(y.clone(), w).is_some() {
                return Err(Error::Invalid(format!("duplicate key in level {n}")));
            }
        }
        faces.push(nd_faces);
        labels.push(nd_labels);
        keys.push(nd_keys);
        words.push(map);
        levels.push(level);
    }
    let sset = Arc::new(FinSSet::with_labels(faces, labels, truncation)?);
    // distinct keys must have distinct normal forms
    for (n, m) in words.iter().enumerate() {
        let expected = sset.level(n)?.len();
        if m.len() != expected {
            return Err(Error::Axiom(format!(
                "level {n} lists {} simplices but its normal forms describe {expected}",
                m.len()
            )));
        }
        let mut seen: Vec<&SimplexWord> = m.values().collect();
        seen.sort();
        seen.dedup();
        if seen.len() != m.len() {
            return Err(Error::Axiom(format!("two keys in level {n} share a normal form")));
        }
    }
    let by_word = levels
        .iter()
        .zip(&words)
        .map(|(l, m)| l.iter().enumerate().map(|(i, k)| (m[k], i)).collect())
        .collect();
    let out = Keyed { sset, keys, words, levels, by_word };
    if verify {
        verify_keyed(src, &out)?;
    }
    Ok(out)
}

fn verify_keyed<S: KeyedLevels>(src: &S, k: &Keyed<S::Key>) -> Result<()> {
    let a = &k.sset;
    for n in 0..=k.top() {
        for y in &k.levels[n] {
            let w = k.words[n][y];
            if n > 0 {
                for i in 0..=n {
                    let f = src.face(n, y, i);
                    if k.words[n - 1].get(&f) != Some(&a.face(&w, i)?) {
                        return Err(Error::Axiom(format!("d{i} disagrees with the normal form of {w}")));
                    }
                }
            }
            if n < k.top() {
                for i in 0..=n {
                    let s = src.degen(n, y, i);
                    if k.words[n + 1].get(&s) != Some(&w.degen(i)?) {
                        return Err(Error::Axiom(format!("s{i} disagrees with the normal form of {w}")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The map between keyed simplicial sets given on keys of nondegenerate simplices.
pub fn keyed_map<K1, K2>(
    dom: &Keyed<K1>,
    cod: &Keyed<K2>,
    mut f: impl FnMut(usize, &K1) -> Result<K2>,
) -> Result<crate::sset::SSetMap>
where
    K1: Clone + Eq + Hash,
    K2: Clone + Eq + Hash,
{
    crate::sset::SSetMap::from_fn(&dom.sset, &cod.sset, |x| {
        let k = f(x.dim(), dom.key(x))?;
        cod.word(x.dim(), &k)
            .ok_or_else(|| Error::Internal(format!("image of {x} is not a listed key")))
    })
}
