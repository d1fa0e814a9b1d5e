//! The levelwise nerve of a simplicial groupoid.

use std::collections::HashMap;
use std::sync::Arc;

use super::view::{BiSSetMap, BiSSetView, RowProvider};
use crate::error::Result;
use crate::gpd::GpdFunctor;
use crate::sgpd::{SGpdMap, SimpGroupoid};
use crate::sset::{keyed_map, FinSSet, SSetMap};

struct NerveRows(Arc<SimpGroupoid>);

impl RowProvider for NerveRows {
    fn row(&self, m: usize) -> Result<Arc<FinSSet>> {
        self.0.row(m)
    }
    fn hface(&self, m: usize, i: usize) -> Result<SSetMap> {
        self.0.hface(m, i)
    }
    fn hdegen(&self, m: usize, i: usize) -> Result<SSetMap> {
        self.0.hdegen(m, i)
    }
}

/// The bisimplicial set whose row `m` is the simplicial set of `m`-strings, rows `0..=h`.
pub fn nerve_bisset(x: &Arc<SimpGroupoid>, h: usize) -> Arc<BiSSetView> {
    Arc::new(BiSSetView::new(Box::new(NerveRows(x.clone())), h, x.bound()))
}

/// The map of nerves induced by a map of simplicial groupoids.
pub fn nerve_bisset_map(f: &SGpdMap, dom: &Arc<BiSSetView>, cod: &Arc<BiSSetView>) -> Result<BiSSetMap> {
    let h = dom.bounds().0.min(cod.bounds().0);
    let mut functors: HashMap<usize, GpdFunctor> = HashMap::new();
    let mut rows = Vec::with_capacity(h + 1);
    for m in 0..=h {
        let a = f.dom().row_keyed(m)?;
        let b = f.cod().row_keyed_to(m, a.top())?;
        rows.push(keyed_map(&a, &b, |k, key| {
            if !functors.contains_key(&k) {
                functors.insert(k, f.level_functor(k)?);
            }
            let fk = &functors[&k];
            Ok(if m == 0 {
                vec![fk.on_object(key[0])]
            } else {
                key.iter().map(|&g| fk.on_morphism(g)).collect()
            })
        })?);
    }
    BiSSetMap::new(dom.clone(), cod.clone(), rows)
}
