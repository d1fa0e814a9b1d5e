//! Standard simplices and their subcomplexes.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::complex::FinSSet;
use super::map::SSetMap;
use super::word::{SimplexRef, SimplexWord, MAX_DIM};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    Simplex,
    Boundary,
    Horn,
}

/// A subcomplex of `Δⁿ`, remembering the vertex set of every nondegenerate simplex.
#[derive(Debug, Clone)]
pub struct Subsimplex {
    pub ambient: usize,
    masks: Vec<Vec<u32>>,
    sset: Arc<FinSSet>,
}

fn vertex_list(mask: u32) -> Vec<u32> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

fn mask_label(mask: u32) -> String {
    let v: Vec<String> = vertex_list(mask).iter().map(|v| v.to_string()).collect();
    format!("[{}]", v.join(""))
}

impl Subsimplex {
    /// The subcomplex generated by the given vertex sets (closed downward automatically).
    pub fn generated(n: usize, generators: &[u32]) -> Result<Self> {
        if n > MAX_DIM - 1 {
            return Err(Error::Invalid(format!("ambient dimension {n} too large")));
        }
        let full = (1u64 << (n + 1)) - 1;
        let mut all = BTreeSet::new();
        for &g in generators {
            if g == 0 || g as u64 & !full != 0 {
                return Err(Error::Invalid(format!("{g:#b} is not a face of Δ^{n}")));
            }
            // every nonempty subset of g
            let mut sub = g;
            loop {
                if sub != 0 {
                    all.insert(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & g;
            }
        }
        Self::from_closed(n, all.into_iter().collect())
    }

    fn from_closed(n: usize, masks: Vec<u32>) -> Result<Self> {
        let top = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); top];
        for m in masks {
            by_dim[m.count_ones() as usize - 1].push(m);
        }
        for layer in &mut by_dim {
            layer.sort_by_key(|&m| vertex_list(m));
        }
        let position: HashMap<u32, usize> =
            by_dim.iter().flat_map(|l| l.iter().enumerate().map(|(i, &m)| (m, i))).collect();
        let mut faces = Vec::new();
        let mut labels = Vec::new();
        for (d, layer) in by_dim.iter().enumerate() {
            let mut lf = Vec::new();
            for &m in layer {
                let verts = vertex_list(m);
                let fs: Vec<SimplexWord> = if d == 0 {
                    Vec::new()
                } else {
                    verts
                        .iter()
                        .map(|&v| {
                            let f = m & !(1 << v);
                            SimplexWord::nondegenerate(SimplexRef::new(d - 1, position[&f]))
                        })
                        .collect()
                };
                lf.push(fs);
            }
            faces.push(lf);
            labels.push(layer.iter().map(|&m| Some(mask_label(m))).collect());
        }
        let sset = FinSSet::with_labels(faces, labels, None)?;
        let _ = n;
        Ok(Subsimplex { ambient: n, masks: by_dim, sset: Arc::new(sset) })
    }

    pub fn simplex(n: usize) -> Result<Self> {
        Self::generated(n, &[((1u64 << (n + 1)) - 1) as u32])
    }

    pub fn boundary(n: usize) -> Result<Self> {
        let full = ((1u64 << (n + 1)) - 1) as u32;
        let gens: Vec<u32> = (0..=n).map(|i| full & !(1 << i)).filter(|&m| m != 0).collect();
        Self::generated(n, &gens)
    }

    pub fn horn(n: usize, k: usize) -> Result<Self> {
        if n < 1 || k > n {
            return Err(Error::Invalid(format!("horn Λ^{n}_{k} requires n ≥ 1 and 0 ≤ k ≤ n")));
        }
        let full = ((1u64 << (n + 1)) - 1) as u32;
        let gens: Vec<u32> = (0..=n).filter(|&i| i != k).map(|i| full & !(1 << i)).collect();
        Self::generated(n, &gens)
    }

    pub fn vertex(n: usize, v: usize) -> Result<Self> {
        if v > n {
            return Err(Error::Invalid(format!("vertex {v} not in Δ^{n}")));
        }
        Self::generated(n, &[1 << v])
    }

    pub fn sset(&self) -> &Arc<FinSSet> {
        &self.sset
    }

    pub fn mask_of(&self, x: SimplexRef) -> u32 {
        self.masks[x.dim()][x.index()]
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.masks.iter().flatten().copied()
    }

    /// Vertex sets of the maximal faces, in canonical order.
    pub fn maximal_masks(&self) -> Vec<u32> {
        let all: Vec<u32> = self.masks().collect();
        all.iter().copied().filter(|&m| !all.iter().any(|&o| o != m && o & m == m)).collect()
    }

    /// The nondegenerate simplex with the given vertex set.
    pub fn simplex_with_mask(&self, mask: u32) -> Option<SimplexRef> {
        let d = (mask.count_ones() as usize).checked_sub(1)?;
        let i = self.masks.get(d)?.iter().position(|&m| m == mask)?;
        Some(SimplexRef::new(d, i))
    }

    pub fn is_whole_simplex(&self) -> bool {
        self.masks.len() == self.ambient + 1
    }

    /// Inclusion into another subcomplex of the same `Δⁿ` containing this one.
    pub fn inclusion_into(&self, other: &Subsimplex) -> Result<SSetMap> {
        if other.ambient != self.ambient {
            return Err(Error::Invalid("different ambient simplices".into()));
        }
        let mut images = Vec::new();
        for layer in &self.masks {
            let mut l = Vec::new();
            for &m in layer {
                let t = other
                    .simplex_with_mask(m)
                    .ok_or_else(|| Error::Invalid(format!("{} not in target", mask_label(m))))?;
                l.push(SimplexWord::nondegenerate(t));
            }
            images.push(l);
        }
        SSetMap::new(self.sset.clone(), other.sset.clone(), images)
    }

    /// Inclusion into the whole ambient simplex.
    pub fn inclusion(&self) -> Result<SSetMap> {
        self.inclusion_into(&Subsimplex::simplex(self.ambient)?)
    }

    /// Every subcomplex of `Δⁿ` (downward-closed families of faces), in a canonical order.
    /// Includes the empty subcomplex only if `with_empty`.
    pub fn all_subcomplexes(n: usize, with_empty: bool) -> Result<Vec<Subsimplex>> {
        let full = ((1u64 << (n + 1)) - 1) as u32;
        let faces: Vec<u32> = (1..=full).collect();
        let mut found: Vec<Vec<u32>> = Vec::new();
        // antichains of faces generate subcomplexes; enumerate downward-closed sets directly
        fn extend(i: usize, faces: &[u32], chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == faces.len() {
                out.push(chosen.clone());
                return;
            }
            let f = faces[i];
            extend(i + 1, faces, chosen, out);
            // f may be added only if all proper subsets are present
            let mut ok = true;
            let mut sub = (f - 1) & f;
            while sub != 0 {
                if !chosen.contains(&sub) {
                    ok = false;
                    break;
                }
                sub = (sub - 1) & f;
            }
            if ok {
                chosen.push(f);
                extend(i + 1, faces, chosen, out);
                chosen.pop();
            }
        }
        // faces sorted by size so subsets come first
        let mut sorted = faces;
        sorted.sort_by_key(|m| (m.count_ones(), vertex_list(*m)));
        extend(0, &sorted, &mut Vec::new(), &mut found);
        found.sort_by_key(|c| {
            let mut k: Vec<Vec<u32>> = c.iter().map(|&m| vertex_list(m)).collect();
            k.sort();
            (c.len(), k)
        });
        let mut out = Vec::new();
        for c in found {
            if c.is_empty() {
                if with_empty {
                    out.push(Subsimplex { ambient: n, masks: Vec::new(), sset: Arc::new(FinSSet::empty()) });
                }
                continue;
            }
            out.push(Subsimplex::from_closed(n, c)?);
        }
        Ok(out)
    }
}

/// `Δⁿ`, `∂Δⁿ` or `Λⁿ_k` as a finite simplicial set.
pub fn builtin_complex(kind: BuiltinKind, n: usize, k: Option<usize>) -> Result<FinSSet> {
    let s = match kind {
        BuiltinKind::Simplex => Subsimplex::simplex(n)?,
        BuiltinKind::Boundary => Subsimplex::boundary(n)?,
        BuiltinKind::Horn => {
            let k = k.ok_or_else(|| Error::Invalid("horn requires k".into()))?;
            Subsimplex::horn(n, k)?
        }
    };
    Ok((**s.sset()).clone())
}
