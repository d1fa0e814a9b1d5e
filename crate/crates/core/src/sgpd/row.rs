//! Rows of a simplicial groupoid: simplicial sets of composable strings.

use std::sync::Arc;

use super::simp::SimpGroupoid;
use crate::error::{Error, Result};
use crate::gpd::FinGroupoid;
use crate::sset::{from_keys, keyed_map, FinSSet, Keyed, KeyedLevels, SSetMap};

/// Keys of row `m` at level `k`: the object position for `m = 0`, otherwise the level
/// positions of `m` composable morphisms.
struct RowLevels<'a> {
    x: &'a SimpGroupoid,
    m: usize,
}

fn strings(g: &FinGroupoid, m: usize) -> Vec<Vec<u32>> {
    if m == 0 {
        return g.objects().map(|x| vec![x]).collect();
    }
    let mut out_of: Vec<Vec<u32>> = vec![Vec::new(); g.object_count()];
    for f in g.morphisms() {
        out_of[g.src(f) as usize].push(f);
    }
    let mut out = Vec::new();
    fn rec(g: &FinGroupoid, out_of: &[Vec<u32>], m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let next = &out_of[g.tgt(*cur.last().unwrap()) as usize];
        for &f in next {
            cur.push(f);
            rec(g, out_of, m, cur, out);
            cur.pop();
        }
    }
    for f in g.morphisms() {
        let mut cur = vec![f];
        rec(g, &out_of, m, &mut cur, &mut out);
    }
    out
}

impl RowLevels<'_> {
    fn side(&self) -> &Arc<FinSSet> {
        if self.m == 0 {
            self.x.obj()
        } else {
            self.x.mor()
        }
    }
}

impl KeyedLevels for RowLevels<'_> {
    type Key = Vec<u32>;

    fn level(&self, k: usize) -> Vec<Vec<u32>> {
        strings(&self.x.level(k).expect("level within bound"), self.m)
    }

    fn face(&self, k: usize, key: &Vec<u32>, i: usize) -> Vec<u32> {
        let a = self.side();
        let (l, below) = (a.level(k).unwrap(), a.level(k - 1).unwrap());
        key.iter()
            .map(|&p| below.position(&a.face(&l.simplices[p as usize], i).unwrap()).unwrap() as u32)
            .collect()
    }

    fn degen(&self, k: usize, key: &Vec<u32>, i: usize) -> Vec<u32> {
        let a = self.side();
        let (l, above) = (a.level(k).unwrap(), a.level(k + 1).unwrap());
        key.iter()
            .map(|&p| above.position(&l.simplices[p as usize].degen(i).unwrap()).unwrap() as u32)
            .collect()
    }
}

impl SimpGroupoid {
    fn row_top(&self, m: usize) -> usize {
        let natural = m.max(1) * self.obj().dim().max(self.mor().dim());
        self.bound().unwrap_or(natural)
    }

    /// Row `m` with the key of each simplex: strings of `m` composable morphisms.
    pub fn row_keyed(&self, m: usize) -> Result<Arc<Keyed<Vec<u32>>>> {
        self.row_keyed_to(m, 0)
    }

    /// Row `m` with keys listed at least through level `top`; levels above the natural top
    /// are only available when the groupoid is untruncated.
    pub fn row_keyed_to(&self, m: usize, top: usize) -> Result<Arc<Keyed<Vec<u32>>>> {
        if let Some(r) = self.rows.lock().unwrap().get(&m) {
            if r.top() >= top {
                return Ok(r.clone());
            }
        }
        let top = self.row_top(m).max(if self.bound().is_none() { top } else { 0 });
        for k in 0..=top {
            self.level(k)?;
        }
        let r = Arc::new(from_keys(&RowLevels { x: self, m }, top, self.bound(), false)?);
        self.rows.lock().unwrap().insert(m, r.clone());
        Ok(r)
    }

    /// Row `m`: `mor ×_obj ⋯ ×_obj mor` with `m` factors (`obj` for `m = 0`).
    pub fn row(&self, m: usize) -> Result<Arc<FinSSet>> {
        Ok(self.row_keyed(m)?.sset.clone())
    }

    /// Horizontal face `d_i`: row `m` → row `m - 1`.
    pub fn hface(&self, m: usize, i: usize) -> Result<SSetMap> {
        if m == 0 || i > m {
            return Err(Error::OperatorRange { index: i, dim: m });
        }
        let a = self.row_keyed(m)?;
        let b = self.row_keyed_to(m - 1, a.top())?;
        keyed_map(&a, &b, |k, key| {
            let g = self.level(k)?;
            Ok(if m == 1 {
                vec![if i == 0 { g.tgt(key[0]) } else { g.src(key[0]) }]
            } else if i == 0 {
                key[1..].to_vec()
            } else if i == m {
                key[..m - 1].to_vec()
            } else {
                let mut v = key[..i - 1].to_vec();
                v.push(g.comp(key[i], key[i - 1]));
                v.extend_from_slice(&key[i + 1..]);
                v
            })
        })
    }

    /// Horizontal degeneracy `s_i`: row `m` → row `m + 1`, inserting an identity.
    pub fn hdegen(&self, m: usize, i: usize) -> Result<SSetMap> {
        if i > m {
            return Err(Error::OperatorRange { index: i, dim: m });
        }
        let a = self.row_keyed(m)?;
        let b = self.row_keyed_to(m + 1, a.top())?;
        keyed_map(&a, &b, |k, key| {
            let g = self.level(k)?;
            if m == 0 {
                return Ok(vec![g.ident(key[0])]);
            }
            let x = if i == 0 { g.src(key[0]) } else { g.tgt(key[i - 1]) };
            let mut v = key.clone();
            v.insert(i, g.ident(x));
            Ok(v)
        })
    }
}
