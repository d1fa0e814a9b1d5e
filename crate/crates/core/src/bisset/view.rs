//! Bisimplicial sets given lazily by their rows.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::sset::{FinSSet, SSetMap};

/// Supplies rows and horizontal structure maps; results are cached by [`BiSSetView`].
pub trait RowProvider: Send + Sync {
    fn row(&self, m: usize) -> Result<Arc<FinSSet>>;
    /// `d_i`: row `m` → row `m - 1`.
    fn hface(&self, m: usize, i: usize) -> Result<SSetMap>;
    /// `s_i`: row `m` → row `m + 1`.
    fn hdegen(&self, m: usize, i: usize) -> Result<SSetMap>;
}

type MapCache = Mutex<HashMap<(usize, usize), Arc<SSetMap>>>;

/// A bisimplicial set with rows `0..=h`, each truncated vertically at `v` when given.
pub struct BiSSetView {
    provider: Box<dyn RowProvider>,
    h: usize,
    v: Option<usize>,
    rows: Mutex<HashMap<usize, Arc<FinSSet>>>,
    faces: MapCache,
    degens: MapCache,
}

impl fmt::Debug for BiSSetView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BiSSetView").field("h", &self.h).field("v", &self.v).finish()
    }
}

impl BiSSetView {
    pub fn new(provider: Box<dyn RowProvider>, h: usize, v: Option<usize>) -> Self {
        BiSSetView {
            provider,
            h,
            v,
            rows: Mutex::new(HashMap::new()),
            faces: Mutex::new(HashMap::new()),
            degens: Mutex::new(HashMap::new()),
        }
    }

    /// Horizontal and vertical bounds.
    pub fn bounds(&self) -> (usize, Option<usize>) {
        (self.h, self.v)
    }

    fn require_row(&self, m: usize) -> Result<()> {
        if m > self.h {
            return Err(Error::Truncation { needed: m, available: self.h });
        }
        Ok(())
    }

    pub fn row(&self, m: usize) -> Result<Arc<FinSSet>> {
        self.require_row(m)?;
        // the lock is held while computing so that concurrent callers share one value
        let mut rows = self.rows.lock().unwrap();
        if let Some(r) = rows.get(&m) {
            return Ok(r.clone());
        }
        let r = self.provider.row(m)?;
        rows.insert(m, r.clone());
        Ok(r)
    }

    pub fn hface(&self, m: usize, i: usize) -> Result<Arc<SSetMap>> {
        self.require_row(m)?;
        if m == 0 || i > m {
            return Err(Error::OperatorRange { index: i, dim: m });
        }
        let mut c = self.faces.lock().unwrap();
        if let Some(f) = c.get(&(m, i)) {
            return Ok(f.clone());
        }
        let f = Arc::new(self.provider.hface(m, i)?);
        c.insert((m, i), f.clone());
        Ok(f)
    }

    pub fn hdegen(&self, m: usize, i: usize) -> Result<Arc<SSetMap>> {
        self.require_row(m + 1)?;
        if i > m {
            return Err(Error::OperatorRange { index: i, dim: m });
        }
        let mut c = self.degens.lock().unwrap();
        if let Some(f) = c.get(&(m, i)) {
            return Ok(f.clone());
        }
        let f = Arc::new(self.provider.hdegen(m, i)?);
        c.insert((m, i), f.clone());
        Ok(f)
    }

    /// Checks the horizontal simplicial identities on rows `0..=h`.
    pub fn check_identities(&self) -> Result<()> {
        let fail = |what: &str, m: usize, i: usize, j: usize| {
            Err(Error::Axiom(format!("horizontal identity {what} fails in row {m} (i={i}, j={j})")))
        };
        for m in 0..=self.h {
            for j in 0..=m {
                for i in 0..=m {
                    if m >= 2 && i < j {
                        let a = self.hface(m, j)?.then(&*self.hface(m - 1, i)?)?;
                        let b = self.hface(m, i)?.then(&*self.hface(m - 1, j - 1)?)?;
                        if !a.agrees_with(&b) {
                            return fail("d_i d_j = d_{j-1} d_i", m, i, j);
                        }
                    }
                    if m < self.h && i <= j {
                        if m + 2 <= self.h {
                            let a = self.hdegen(m, j)?.then(&*self.hdegen(m + 1, i)?)?;
                            let b = self.hdegen(m, i)?.then(&*self.hdegen(m + 1, j + 1)?)?;
                            if !a.agrees_with(&b) {
                                return fail("s_i s_j = s_{j+1} s_i", m, i, j);
                            }
                        }
                    }
                }
                if m < self.h {
                    let s = self.hdegen(m, j)?;
                    for i in 0..=m + 1 {
                        let a = s.then(&*self.hface(m + 1, i)?)?;
                        let expected = if i == j || i == j + 1 {
                            SSetMap::identity(&self.row(m)?)
                        } else if i < j {
                            self.hface(m, i)?.then(&*self.hdegen(m - 1, j - 1)?)?
                        } else {
                            self.hface(m, i - 1)?.then(&*self.hdegen(m - 1, j)?)?
                        };
                        if !a.agrees_with(&expected) {
                            return fail("d_i s_j", m, i, j);
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A map of bisimplicial sets on rows `0..=h` of the domain.
#[derive(Debug, Clone)]
pub struct BiSSetMap {
    dom: Arc<BiSSetView>,
    cod: Arc<BiSSetView>,
    rows: Vec<SSetMap>,
}

impl BiSSetMap {
    /// Checks commutation with all horizontal faces and degeneracies in range.
    pub fn new(dom: Arc<BiSSetView>, cod: Arc<BiSSetView>, rows: Vec<SSetMap>) -> Result<Self> {
        let h = rows.len().checked_sub(1).ok_or_else(|| Error::Invalid("a map needs at least one row".into()))?;
        if h > dom.bounds().0 || h > cod.bounds().0 {
            return Err(Error::Truncation { needed: h, available: dom.bounds().0.min(cod.bounds().0) });
        }
        for m in 0..=h {
            if m >= 1 {
                for i in 0..=m {
                    let a = dom.hface(m, i)?.then(&rows[m - 1])?;
                    let b = rows[m].then(&*cod.hface(m, i)?)?;
                    if !a.agrees_with(&b) {
                        return Err(Error::Axiom(format!("row map {m} does not commute with d_{i}")));
                    }
                }
            }
            if m < h {
                for i in 0..=m {
                    let a = dom.hdegen(m, i)?.then(&rows[m + 1])?;
                    let b = rows[m].then(&*cod.hdegen(m, i)?)?;
                    if !a.agrees_with(&b) {
                        return Err(Error::Axiom(format!("row map {m} does not commute with s_{i}")));
                    }
                }
            }
        }
        Ok(BiSSetMap { dom, cod, rows })
    }

    pub fn identity(x: &Arc<BiSSetView>) -> Result<Self> {
        let rows = (0..=x.bounds().0).map(|m| Ok(SSetMap::identity(&x.row(m)?))).collect::<Result<Vec<_>>>()?;
        Ok(BiSSetMap { dom: x.clone(), cod: x.clone(), rows })
    }

    pub fn dom(&self) -> &Arc<BiSSetView> {
        &self.dom
    }
    pub fn cod(&self) -> &Arc<BiSSetView> {
        &self.cod
    }
    pub fn row(&self, m: usize) -> &SSetMap {
        &self.rows[m]
    }
    pub fn rows(&self) -> &[SSetMap] {
        &self.rows
    }
    /// The number of rows covered minus one.
    pub fn bound(&self) -> usize {
        self.rows.len() - 1
    }
}
