//! Columns of a bisimplicial set, assembled into the transposed bisimplicial set.

use std::sync::Arc;

use super::view::{BiSSetMap, BiSSetView, RowProvider};
use crate::error::{Error, Result};
use crate::sset::{from_keys, keyed_map, FinSSet, Keyed, KeyedLevels, SSetMap, SimplexWord};

/// Column `n`: its `m`-simplices are the `n`-simplices of row `m`, keyed by their words.
pub type Column = Keyed<SimplexWord>;

struct ColumnLevels<'a> {
    v: &'a BiSSetView,
    n: usize,
}

impl KeyedLevels for ColumnLevels<'_> {
    type Key = SimplexWord;

    fn level(&self, m: usize) -> Vec<SimplexWord> {
        self.v.row(m).unwrap().level(self.n).unwrap().simplices.clone()
    }

    fn face(&self, m: usize, w: &SimplexWord, i: usize) -> SimplexWord {
        self.v.hface(m, i).unwrap().apply(w)
    }

    fn degen(&self, m: usize, w: &SimplexWord, i: usize) -> SimplexWord {
        self.v.hdegen(m, i).unwrap().apply(w)
    }
}

/// Column `n` through horizontal dimension `d`.
pub fn column(v: &BiSSetView, n: usize, d: usize) -> Result<Column> {
    let (h, vb) = v.bounds();
    if h < d {
        return Err(Error::Truncation { needed: d, available: h });
    }
    if let Some(b) = vb {
        if b < n {
            return Err(Error::Truncation { needed: n, available: b });
        }
    }
    for m in 0..=d {
        v.row(m)?.level(n)?;
        if m < d {
            for i in 0..=m {
                v.hdegen(m, i)?;
            }
        }
    }
    from_keys(&ColumnLevels { v, n }, d, Some(d), false)
}

struct Columns {
    v: Arc<BiSSetView>,
    d: usize,
    cols: std::sync::Mutex<std::collections::HashMap<usize, Arc<Column>>>,
}

impl Columns {
    fn col(&self, n: usize) -> Result<Arc<Column>> {
        if let Some(c) = self.cols.lock().unwrap().get(&n) {
            return Ok(c.clone());
        }
        let c = Arc::new(column(&self.v, n, self.d)?);
        self.cols.lock().unwrap().insert(n, c.clone());
        Ok(c)
    }
}

impl RowProvider for Columns {
    fn row(&self, n: usize) -> Result<Arc<FinSSet>> {
        Ok(self.col(n)?.sset.clone())
    }
    fn hface(&self, n: usize, i: usize) -> Result<SSetMap> {
        let (a, b) = (self.col(n)?, self.col(n - 1)?);
        keyed_map(&a, &b, |m, w| self.v.row(m)?.face(w, i))
    }
    fn hdegen(&self, n: usize, i: usize) -> Result<SSetMap> {
        let (a, b) = (self.col(n)?, self.col(n + 1)?);
        keyed_map(&a, &b, |_, w| w.degen(i))
    }
}

/// The transpose, with rows the columns `0..=d` of `v`, each through horizontal dimension `d`.
pub fn transpose(v: &Arc<BiSSetView>, d: usize) -> Result<Arc<BiSSetView>> {
    let h = match v.bounds().1 {
        Some(b) => b.min(d),
        None => d,
    };
    let cols = Columns { v: v.clone(), d, cols: Default::default() };
    Ok(Arc::new(BiSSetView::new(Box::new(cols), h, Some(d))))
}

/// The transpose of a map, on columns `0..=d`.
pub fn transpose_map(f: &BiSSetMap, d: usize) -> Result<BiSSetMap> {
    if f.bound() < d {
        return Err(Error::Truncation { needed: d, available: f.bound() });
    }
    let (tx, ty) = (transpose(f.dom(), d)?, transpose(f.cod(), d)?);
    let h = tx.bounds().0.min(ty.bounds().0);
    let mut rows = Vec::with_capacity(h + 1);
    for n in 0..=h {
        let (a, b) = (column(f.dom(), n, d)?, column(f.cod(), n, d)?);
        rows.push(keyed_map(&a, &b, |m, w| Ok(f.row(m).apply(w)))?);
    }
    BiSSetMap::new(tx, ty, rows)
}
