//! Exterior products `A ⊠ B`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::view::{BiSSetMap, BiSSetView, RowProvider};
use crate::error::Result;
use crate::sset::{coproduct_many, summand_map, Colimit, FinSSet, SSetMap, SimplexWord};

/// Rows that are coproducts of copies indexed by all `m`-simplices of `a`.
pub(crate) struct CopyRows {
    pub a: Arc<FinSSet>,
    pub summands: Box<dyn Fn(&SimplexWord) -> Result<Arc<FinSSet>> + Send + Sync>,
    /// The map from the summand of `alpha` to the summand of `beta`, where `beta` is an
    /// operator applied to `alpha`.
    pub transition: Box<dyn Fn(&SimplexWord, &SimplexWord) -> Result<SSetMap> + Send + Sync>,
    rows: Mutex<HashMap<usize, Arc<Colimit>>>,
}

impl CopyRows {
    pub fn new(
        a: Arc<FinSSet>,
        summands: Box<dyn Fn(&SimplexWord) -> Result<Arc<FinSSet>> + Send + Sync>,
        transition: Box<dyn Fn(&SimplexWord, &SimplexWord) -> Result<SSetMap> + Send + Sync>,
    ) -> Self {
        CopyRows { a, summands, transition, rows: Mutex::new(HashMap::new()) }
    }

    pub fn colimit(&self, m: usize) -> Result<Arc<Colimit>> {
        if let Some(c) = self.rows.lock().unwrap().get(&m) {
            return Ok(c.clone());
        }
        let parts = self
            .a
            .level(m)?
            .simplices
            .iter()
            .map(|w| (self.summands)(w))
            .collect::<Result<Vec<_>>>()?;
        let c = Arc::new(coproduct_many(&parts)?);
        self.rows.lock().unwrap().insert(m, c.clone());
        Ok(c)
    }

    fn operator(&self, m: usize, to: usize, op: impl Fn(&SimplexWord) -> SimplexWord) -> Result<SSetMap> {
        let (src, dst) = (self.colimit(m)?, self.colimit(to)?);
        let (la, lb) = (self.a.level(m)?, self.a.level(to)?);
        summand_map(&src, &dst, |j| {
            let alpha = la.simplices[j];
            let beta = op(&alpha);
            Ok((lb.position(&beta).expect("operator stays in A"), (self.transition)(&alpha, &beta)?))
        })
    }
}

impl RowProvider for Arc<CopyRows> {
    fn row(&self, m: usize) -> Result<Arc<FinSSet>> {
        Ok(self.colimit(m)?.object.clone())
    }
    fn hface(&self, m: usize, i: usize) -> Result<SSetMap> {
        let a = self.a.clone();
        self.operator(m, m - 1, move |w| a.face(w, i).expect("face in range"))
    }
    fn hdegen(&self, m: usize, i: usize) -> Result<SSetMap> {
        self.operator(m, m + 1, move |w| w.degen(i).expect("degeneracy in range"))
    }
}

/// `A ⊠ B` on rows `0..=h`: row `m` has one copy of `B` for every `m`-simplex of `A`.
pub fn exterior(a: &Arc<FinSSet>, b: &Arc<FinSSet>, h: usize) -> Result<Arc<BiSSetView>> {
    Ok(exterior_rows(a, b, h)?.0)
}

pub(crate) fn exterior_rows(a: &Arc<FinSSet>, b: &Arc<FinSSet>, h: usize) -> Result<(Arc<BiSSetView>, Arc<CopyRows>)> {
    a.require_dim(h)?;
    let (b1, b2) = (b.clone(), b.clone());
    let rows = Arc::new(CopyRows::new(
        a.clone(),
        Box::new(move |_| Ok(b1.clone())),
        Box::new(move |_, _| Ok(SSetMap::identity(&b2))),
    ));
    Ok((Arc::new(BiSSetView::new(Box::new(rows.clone()), h, b.truncation())), rows))
}

/// `f ⊠ g`, together with its domain and codomain.
pub fn exterior_map(f: &SSetMap, g: &SSetMap, h: usize) -> Result<BiSSetMap> {
    let (dom, dr) = exterior_rows(f.dom(), g.dom(), h)?;
    let (cod, cr) = exterior_rows(f.cod(), g.cod(), h)?;
    let mut rows = Vec::with_capacity(h + 1);
    for m in 0..=h {
        let (la, lb) = (f.dom().level(m)?, f.cod().level(m)?);
        rows.push(summand_map(&*dr.colimit(m)?, &*cr.colimit(m)?, |j| {
            let beta = f.apply(&la.simplices[j]);
            Ok((lb.position(&beta).expect("image is an m-simplex"), g.clone()))
        })?);
    }
    BiSSetMap::new(dom, cod, rows)
}
