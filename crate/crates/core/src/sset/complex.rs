//! The finite simplicial set type.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::word::{masks_with_popcount, surj_value, Monotone, SimplexRef, SimplexWord, MAX_DIM};
use crate::error::{Error, Result};

/// Face data of one nondegenerate simplex.
#[derive(Debug, Clone)]
pub(crate) struct Cell {
    pub faces: Vec<SimplexWord>,
    /// Restriction to every nonempty vertex subset, indexed by mask.
    pub sub: Vec<SimplexWord>,
    pub label: Option<String>,
}

/// A finite simplicial set presented by its nondegenerate simplices.
///
/// When `truncation` is `Some(d)`, only simplices of dimension `≤ d` are known and
/// nothing is claimed above `d`. Otherwise the listed simplices are all of them.
pub struct FinSSet {
    cells: Vec<Vec<Cell>>,
    truncation: Option<usize>,
    cache: LevelCache,
}

impl Clone for FinSSet {
    fn clone(&self) -> Self {
        FinSSet { cells: self.cells.clone(), truncation: self.truncation, cache: LevelCache::default() }
    }
}

impl PartialEq for FinSSet {
    fn eq(&self, other: &Self) -> bool {
        self.truncation == other.truncation
            && self.counts() == other.counts()
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x.faces == y.faces))
    }
}
impl Eq for FinSSet {}

impl std::fmt::Debug for FinSSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinSSet")
            .field("counts", &self.counts())
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl FinSSet {
    /// Builds and validates a simplicial set from face words of each nondegenerate simplex.
    ///
    /// `faces[n][x]` lists `d_0 x, …, d_n x` (empty for vertices).
    pub fn new(faces: Vec<Vec<Vec<SimplexWord>>>, truncation: Option<usize>) -> Result<Self> {
        let labels = faces.iter().map(|d| vec![None; d.len()]).collect();
        Self::with_labels(faces, labels, truncation)
    }

    pub fn with_labels(
        mut faces: Vec<Vec<Vec<SimplexWord>>>,
        labels: Vec<Vec<Option<String>>>,
        truncation: Option<usize>,
    ) -> Result<Self> {
        while faces.last().is_some_and(|d| d.is_empty()) {
            faces.pop();
        }
        if let Some(t) = truncation {
            if faces.len() > t + 1 {
                return Err(Error::Invalid(format!("simplices above truncation bound {t}")));
            }
            if t > MAX_DIM {
                return Err(Error::Invalid(format!("truncation {t} exceeds {MAX_DIM}")));
            }
        }
        if faces.len() > MAX_DIM {
            return Err(Error::Invalid(format!("dimension exceeds {MAX_DIM}")));
        }
        let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(faces.len());
        for (n, layer) in faces.into_iter().enumerate() {
            let mut out = Vec::with_capacity(layer.len());
            for (x, fs) in layer.into_iter().enumerate() {
                let expected = if n == 0 { 0 } else { n + 1 };
                if fs.len() != expected {
                    return Err(Error::Invalid(format!(
                        "simplex @{n}.{x} has {} faces, expected {expected}",
                        fs.len()
                    )));
                }
                for w in &fs {
                    let b = w.base();
                    if w.dim() + 1 != n || b.dim() >= cells.len() || b.index() >= cells[b.dim()].len() {
                        return Err(Error::Invalid(format!("face {w} of @{n}.{x} does not exist")));
                    }
                }
                let label = labels.get(n).and_then(|l| l.get(x)).cloned().flatten();
                out.push(Cell { faces: fs, sub: Vec::new(), label });
            }
            // sub tables for this layer use only lower layers, which are complete
            for (x, cell) in out.iter_mut().enumerate() {
                cell.sub = build_sub_table(&cells, n, x, &cell.faces)?;
            }
            cells.push(out);
        }
        Ok(FinSSet { cells, truncation, cache: LevelCache::default() })
    }

    pub fn empty() -> Self {
        FinSSet { cells: Vec::new(), truncation: None, cache: LevelCache::default() }
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// Highest dimension carrying a nondegenerate simplex (0 for the empty set).
    pub fn dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Dimension up to which simplices are known, `None` meaning all dimensions.
    pub fn data_bound(&self) -> Option<usize> {
        self.truncation
    }

    pub fn require_dim(&self, needed: usize) -> Result<()> {
        match self.truncation {
            Some(t) if t < needed => Err(Error::Truncation { needed, available: t }),
            _ => Ok(()),
        }
    }

    /// Nondegenerate simplex counts per dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(|l| l.len()).collect()
    }

    pub fn count(&self, n: usize) -> usize {
        self.cells.get(n).map_or(0, |l| l.len())
    }

    pub fn nondegenerate(&self, n: usize) -> impl Iterator<Item = SimplexRef> + '_ {
        (0..self.count(n)).map(move |i| SimplexRef::new(n, i))
    }

    /// All nondegenerate simplices in canonical order.
    pub fn all_nondegenerate(&self) -> impl Iterator<Item = SimplexRef> + '_ {
        (0..self.cells.len()).flat_map(move |n| self.nondegenerate(n))
    }

    pub fn faces_of(&self, x: SimplexRef) -> &[SimplexWord] {
        &self.cells[x.dim()][x.index()].faces
    }

    pub fn label(&self, x: SimplexRef) -> Option<&str> {
        self.cells[x.dim()][x.index()].label.as_deref()
    }

    pub fn contains(&self, w: &SimplexWord) -> bool {
        let b = w.base();
        b.dim() < self.cells.len() && b.index() < self.cells[b.dim()].len()
    }

    /// Restriction of a nondegenerate simplex to a vertex subset.
    pub fn restrict_base(&self, x: SimplexRef, mask: u32) -> SimplexWord {
        self.cells[x.dim()][x.index()].sub[mask as usize]
    }

    /// Applies a monotone operator `θ: [m] → [n]` to an `n`-simplex: returns `w ∘ θ`.
    pub fn apply(&self, w: &SimplexWord, theta: &Monotone) -> Result<SimplexWord> {
        if theta.target != w.dim() {
            return Err(Error::Invalid(format!(
                "operator into [{}] applied to a {}-simplex",
                theta.target,
                w.dim()
            )));
        }
        Ok(self.apply_values(w, &theta.values))
    }

    pub(crate) fn apply_values(&self, w: &SimplexWord, values: &[u8]) -> SimplexWord {
        apply_in(&self.cells, w, values)
    }

    /// The face `d_i` of an `n`-simplex.
    pub fn face(&self, w: &SimplexWord, i: usize) -> Result<SimplexWord> {
        let n = w.dim();
        if n == 0 || i > n {
            return Err(Error::OperatorRange { index: i, dim: n });
        }
        Ok(self.face_unchecked(w, i))
    }

    pub(crate) fn face_unchecked(&self, w: &SimplexWord, i: usize) -> SimplexWord {
        let n = w.dim();
        let mut vals = [0u8; MAX_DIM + 1];
        for (j, v) in vals.iter_mut().enumerate().take(n) {
            *v = if j < i { j as u8 } else { j as u8 + 1 };
        }
        self.apply_values(w, &vals[..n])
    }

    /// Restriction of any simplex to the vertex set `mask` of its own dimension.
    pub fn restrict(&self, w: &SimplexWord, mask: u32) -> SimplexWord {
        let mut vals = [0u8; MAX_DIM + 1];
        let mut k = 0;
        for v in 0..=w.dim() {
            if mask >> v & 1 == 1 {
                vals[k] = v as u8;
                k += 1;
            }
        }
        self.apply_values(w, &vals[..k])
    }

    /// Vertices of a simplex, in order.
    pub fn vertices(&self, w: &SimplexWord) -> Vec<SimplexWord> {
        (0..=w.dim()).map(|v| self.restrict(w, 1 << v)).collect()
    }

    /// All `n`-simplices including degenerate ones, in canonical order.
    pub fn level(&self, n: usize) -> Result<Arc<Level>> {
        self.require_dim(n)?;
        self.cache.level(self, n)
    }

    /// Enumerates simplices of dimension `n` without caching.
    pub(crate) fn enumerate_level(&self, n: usize) -> Vec<SimplexWord> {
        let mut out = Vec::new();
        for k in 0..=n.min(self.dim()) {
            if self.count(k) == 0 {
                continue;
            }
            let masks: Vec<u32> = masks_with_popcount(n, n - k).collect();
            for x in self.nondegenerate(k) {
                for &m in &masks {
                    out.push(SimplexWord::raw(x, n, m));
                }
            }
        }
        out
    }

    /// Index of simplices of dimension `n` by their restrictions to the vertex sets `masks`.
    pub fn restriction_index(&self, n: usize, masks: &[u32]) -> Result<Arc<RestrictionIndex>> {
        let level = self.level(n)?;
        self.cache.restriction_index(self, &level, n, masks)
    }

    /// Whether `other` has identical face data (ignores labels).
    pub fn same_as(&self, other: &FinSSet) -> bool {
        self == other
    }

    /// Drops every simplex above dimension `d` and marks the result truncated at `d`.
    pub fn truncate(&self, d: usize) -> FinSSet {
        let faces: Vec<Vec<Vec<SimplexWord>>> = self
            .cells
            .iter()
            .take(d + 1)
            .map(|l| l.iter().map(|c| c.faces.clone()).collect())
            .collect();
        let labels = self.cells.iter().take(d + 1).map(|l| l.iter().map(|c| c.label.clone()).collect()).collect();
        let t = match self.truncation {
            Some(t) => Some(t.min(d)),
            None => Some(d),
        };
        FinSSet::with_labels(faces, labels, t).expect("truncation of a valid simplicial set")
    }

    /// Checks every simplicial identity `d_i d_j = d_{j-1} d_i` on all nondegenerate simplices.
    pub fn check_identities(&self) -> Result<()> {
        for (n, layer) in self.cells.iter().enumerate().skip(2) {
            for (x, _) in layer.iter().enumerate() {
                let w = SimplexWord::nondegenerate(SimplexRef::new(n, x));
                for j in 0..=n {
                    for i in 0..j {
                        let lhs = self.face_unchecked(&self.face_unchecked(&w, j), i);
                        let rhs = self.face_unchecked(&self.face_unchecked(&w, i), j - 1);
                        if lhs != rhs {
                            return Err(Error::Axiom(format!(
                                "d_{i} d_{j} != d_{} d_{i} on @{n}.{x}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn build_sub_table(cells: &[Vec<Cell>], n: usize, x: usize, faces: &[SimplexWord]) -> Result<Vec<SimplexWord>> {
    let size = 1usize << (n + 1);
    let full = (size - 1) as u32;
    let me = SimplexWord::nondegenerate(SimplexRef::new(n, x));
    let mut sub = vec![me; size];
    for mask in 1..full {
        let missing = !mask & full;
        let mut result: Option<SimplexWord> = None;
        for i in 0..=n {
            if missing >> i & 1 == 0 {
                continue;
            }
            // reindex mask into [n-1] after deleting vertex i
            let low = mask & ((1 << i) - 1);
            let high = (mask >> (i + 1)) << i;
            let w = restrict_in(cells, &faces[i], low | high);
            match result {
                None => result = Some(w),
                Some(r) if r != w => {
                    return Err(Error::Axiom(format!(
                        "simplicial identity fails on @{n}.{x}: vertex set {mask:#b} restricts inconsistently"
                    )))
                }
                _ => {}
            }
        }
        sub[mask as usize] = result.expect("proper subset misses a vertex");
    }
    Ok(sub)
}

fn restrict_in(cells: &[Vec<Cell>], w: &SimplexWord, mask: u32) -> SimplexWord {
    let mut vals = [0u8; MAX_DIM + 1];
    let mut k = 0;
    for v in 0..=w.dim() {
        if mask >> v & 1 == 1 {
            vals[k] = v as u8;
            k += 1;
        }
    }
    apply_in(cells, w, &vals[..k])
}

/// `w ∘ θ` for a monotone `θ` given by its values, using restriction tables.
fn apply_in(cells: &[Vec<Cell>], w: &SimplexWord, values: &[u8]) -> SimplexWord {
    let m = values.len() - 1;
    let mut rho = [0u8; MAX_DIM + 2];
    let mut image = 0u32;
    for (j, &v) in values.iter().enumerate() {
        let r = surj_value(w.repeats(), v as usize) as u8;
        rho[j] = r;
        image |= 1 << r;
    }
    let b = w.base();
    let face = cells[b.dim()][b.index()].sub[image as usize];
    // result surjection is τ ∘ π, π sending j to the rank of ρ(j) in the image
    let mut mask = 0u32;
    for j in 0..m {
        if rho[j] == rho[j + 1] {
            mask |= 1 << j;
            continue;
        }
        let a = (image & ((1u32 << rho[j]) - 1)).count_ones() as usize;
        let c = (image & ((1u32 << rho[j + 1]) - 1)).count_ones() as usize;
        if surj_value(face.repeats(), a) == surj_value(face.repeats(), c) {
            mask |= 1 << j;
        }
    }
    SimplexWord::raw(face.base(), m, mask)
}

/// All simplices of one dimension with their face indices into the level below.
#[derive(Debug)]
pub struct Level {
    pub simplices: Vec<SimplexWord>,
    index: HashMap<SimplexWord, usize>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }
    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }
    pub fn position(&self, w: &SimplexWord) -> Option<usize> {
        self.index.get(w).copied()
    }
}

/// Simplices of one dimension grouped by their restrictions to a fixed family of vertex sets.
#[derive(Debug)]
pub struct RestrictionIndex {
    pub masks: Vec<u32>,
    map: HashMap<Vec<SimplexWord>, Vec<u32>>,
}

impl RestrictionIndex {
    pub fn get(&self, key: &[SimplexWord]) -> &[u32] {
        self.map.get(key).map_or(&[], |v| v.as_slice())
    }
}

#[derive(Default)]
struct LevelCache {
    levels: Mutex<HashMap<usize, Arc<Level>>>,
    restrictions: Mutex<HashMap<(usize, Vec<u32>), Arc<RestrictionIndex>>>,
}

impl LevelCache {
    fn level(&self, s: &FinSSet, n: usize) -> Result<Arc<Level>> {
        if let Some(l) = self.levels.lock().unwrap().get(&n) {
            return Ok(l.clone());
        }
        let simplices = s.enumerate_level(n);
        let index = simplices.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let level = Arc::new(Level { simplices, index });
        let mut guard = self.levels.lock().unwrap();
        Ok(guard.entry(n).or_insert(level).clone())
    }

    fn restriction_index(&self, s: &FinSSet, level: &Level, n: usize, masks: &[u32]) -> Result<Arc<RestrictionIndex>> {
        let key = (n, masks.to_vec());
        if let Some(r) = self.restrictions.lock().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let mut map: HashMap<Vec<SimplexWord>, Vec<u32>> = HashMap::new();
        for (i, w) in level.simplices.iter().enumerate() {
            let k: Vec<SimplexWord> = masks.iter().map(|&m| s.restrict(w, m)).collect();
            map.entry(k).or_default().push(i as u32);
        }
        let idx = Arc::new(RestrictionIndex { masks: masks.to_vec(), map });
        let mut guard = self.restrictions.lock().unwrap();
        Ok(guard.entry(key).or_insert(idx).clone())
    }
}

/// The vertex masks of the facets of `[n]`, i.e. `d_0, …, d_n`.
pub fn facet_masks(n: usize) -> Vec<u32> {
    let full = (1u32 << (n + 1)) - 1;
    (0..=n).map(|i| full & !(1 << i)).collect()
}
