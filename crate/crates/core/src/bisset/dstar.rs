//! The left adjoint `d*` of the diagonal, by two independent constructions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::exterior::{exterior_rows, CopyRows};
use super::view::{BiSSetMap, BiSSetView, RowProvider};
use crate::error::{Error, Result};
use crate::lifting::simplex_map;
use crate::sset::{
    coequalizer, coproduct_many, factor_through, faces_containing, summand_map, surj_value, Colimit, FinSSet, Monotone,
    SSetMap, SimplexRef, SimplexWord, Subcomplex, Subsimplex,
};

type SubCache = Arc<Mutex<HashMap<SimplexWord, Arc<Subcomplex>>>>;

fn containing(a: &Arc<FinSSet>, cache: &SubCache, alpha: &SimplexWord) -> Result<Arc<Subcomplex>> {
    if let Some(c) = cache.lock().unwrap().get(alpha) {
        return Ok(c.clone());
    }
    let c = Arc::new(faces_containing(a, alpha)?);
    cache.lock().unwrap().insert(*alpha, c.clone());
    Ok(c)
}

/// The map `C_α → C_β` for `C_α ⊆ C_β`.
fn widen(from: &Subcomplex, to: &Subcomplex) -> Result<SSetMap> {
    SSetMap::from_fn(&from.sset, &to.sset, |x| {
        let w = from.inclusion.image_of(x);
        let r = to
            .locate(w.base())
            .ok_or_else(|| Error::Internal(format!("{w} is missing from the larger subcomplex")))?;
        SimplexWord::from_repeats(r, w.dim(), w.repeats())
    })
}

fn fast_rows(a: &Arc<FinSSet>) -> (Arc<CopyRows>, SubCache) {
    let cache: SubCache = Arc::new(Mutex::new(HashMap::new()));
    let (a1, c1) = (a.clone(), cache.clone());
    let (a2, c2) = (a.clone(), cache.clone());
    let rows = CopyRows::new(
        a.clone(),
        Box::new(move |alpha| Ok(containing(&a1, &c1, alpha)?.sset.clone())),
        Box::new(move |alpha, beta| widen(&*containing(&a2, &c2, alpha)?, &*containing(&a2, &c2, beta)?)),
    );
    (Arc::new(rows), cache)
}

/// `d*A` with row `m` the disjoint union of the subcomplexes `C_α` of simplices containing
/// `α`, over all `m`-simplices `α` of `A`. Valid for simplicial subsets of a simplex.
pub fn d_star_fast(a: &Arc<FinSSet>, h: usize) -> Result<Arc<BiSSetView>> {
    a.require_dim(h)?;
    let (rows, _) = fast_rows(a);
    Ok(Arc::new(BiSSetView::new(Box::new(rows), h, None)))
}

/// All monotone maps `[m] → [k]` as value lists, in lexicographic order.
fn monotone_maps(m: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    fn rec(m: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=k as u8 {
            cur.push(v);
            rec(m, k, cur, out);
            cur.pop();
        }
    }
    rec(m, k, &mut Vec::new(), &mut out);
    out
}

struct GenericRow {
    pre: Colimit,
    index: HashMap<(SimplexRef, Vec<u8>), usize>,
    summands: Vec<(SimplexRef, Vec<u8>)>,
    quotient: SSetMap,
}

/// The colimit of `Δ^{k,k}` over the nondegenerate simplices of `A` and their faces.
struct Generic {
    a: Arc<FinSSet>,
    simplices: Vec<Arc<FinSSet>>,
    rows: Mutex<HashMap<usize, Arc<GenericRow>>>,
}

impl Generic {
    fn new(a: &Arc<FinSSet>) -> Result<Self> {
        if a.truncation().is_some_and(|t| t < a.dim()) {
            return Err(Error::Truncation { needed: a.dim(), available: a.truncation().unwrap() });
        }
        let simplices =
            (0..=a.dim()).map(|k| Ok(Subsimplex::simplex(k)?.sset().clone())).collect::<Result<Vec<_>>>()?;
        Ok(Generic { a: a.clone(), simplices, rows: Mutex::new(HashMap::new()) })
    }

    /// The map `Δ^j → Δ^k` induced by `φ: [j] → [k]`.
    fn operator_map(&self, phi: &[u8], k: usize) -> Result<SSetMap> {
        let j = phi.len() - 1;
        let top = SimplexWord::nondegenerate(SimplexRef::new(k, 0));
        let w = self.simplices[k].apply(&top, &Monotone::new(phi.to_vec(), k)?)?;
        simplex_map(&self.simplices[j], &self.simplices[k], w, j)
    }

    fn row(&self, m: usize) -> Result<Arc<GenericRow>> {
        if let Some(r) = self.rows.lock().unwrap().get(&m) {
            return Ok(r.clone());
        }
        let a = &self.a;
        let mut summands = Vec::new();
        let mut parts = Vec::new();
        for y in a.all_nondegenerate() {
            for theta in monotone_maps(m, y.dim()) {
                summands.push((y, theta));
                parts.push(self.simplices[y.dim()].clone());
            }
        }
        let index: HashMap<(SimplexRef, Vec<u8>), usize> =
            summands.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let pre = coproduct_many(&parts)?;
        // relations: one copy of Δ^{k-1,k-1} for every face of every nondegenerate simplex
        let mut rel_parts = Vec::new();
        let mut rel_f = Vec::new();
        let mut rel_g = Vec::new();
        for y in a.all_nondegenerate() {
            let k = y.dim();
            if k == 0 {
                continue;
            }
            for i in 0..=k {
                let face = a.face(&SimplexWord::nondegenerate(y), i)?;
                let z = face.base();
                let sigma: Vec<u8> = (0..k).map(|t| surj_value(face.repeats(), t) as u8).collect();
                let delta: Vec<u8> = (0..k).map(|t| if t < i { t as u8 } else { t as u8 + 1 }).collect();
                for theta in monotone_maps(m, k - 1) {
                    let dt: Vec<u8> = theta.iter().map(|&t| delta[t as usize]).collect();
                    let st: Vec<u8> = theta.iter().map(|&t| sigma[t as usize]).collect();
                    rel_parts.push(self.simplices[k - 1].clone());
                    rel_f.push((index[&(y, dt)], self.operator_map(&delta, k)?));
                    rel_g.push((index[&(z, st)], self.operator_map(&sigma, z.dim())?));
                }
            }
        }
        let rel = coproduct_many(&rel_parts)?;
        let f = summand_map(&rel, &pre, |j| Ok(rel_f[j].clone()))?;
        let g = summand_map(&rel, &pre, |j| Ok(rel_g[j].clone()))?;
        let quotient = coequalizer(&f, &g)?.insertions.remove(0);
        let r = Arc::new(GenericRow { pre, index, summands, quotient });
        self.rows.lock().unwrap().insert(m, r.clone());
        Ok(r)
    }

    fn operator(&self, m: usize, to: usize, op: impl Fn(&[u8]) -> Vec<u8>) -> Result<SSetMap> {
        let (src, dst) = (self.row(m)?, self.row(to)?);
        let pre = summand_map(&src.pre, &dst.pre, |j| {
            let (y, theta) = &src.summands[j];
            Ok((dst.index[&(*y, op(theta))], SSetMap::identity(&self.simplices[y.dim()])))
        })?;
        factor_through(&src.quotient, &pre.then(&dst.quotient)?)
    }
}

impl RowProvider for Arc<Generic> {
    fn row(&self, m: usize) -> Result<Arc<FinSSet>> {
        Ok(Generic::row(self, m)?.quotient.cod().clone())
    }
    fn hface(&self, m: usize, i: usize) -> Result<SSetMap> {
        self.operator(m, m - 1, |t| t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect())
    }
    fn hdegen(&self, m: usize, i: usize) -> Result<SSetMap> {
        self.operator(m, m + 1, |t| {
            let mut v = t.to_vec();
            v.insert(i, t[i]);
            v
        })
    }
}

/// `d*A` as the colimit of `Δ^{k,k} = Δᵏ ⊠ Δᵏ` over the simplices of `A`.
pub fn d_star_generic(a: &Arc<FinSSet>, h: usize) -> Result<Arc<BiSSetView>> {
    let g = Arc::new(Generic::new(a)?);
    Ok(Arc::new(BiSSetView::new(Box::new(g), h, None)))
}

/// `d*A`, and when a monomorphism `γ: A → Δⁿ` is given, the comparison into `A ⊠ Δⁿ`.
#[derive(Debug, Clone)]
pub struct DStar {
    pub view: Arc<BiSSetView>,
    pub ambient: Option<Arc<BiSSetView>>,
    pub comparison: Option<BiSSetMap>,
}

pub fn d_star(a: &Arc<FinSSet>, gamma: Option<&SSetMap>, h: usize) -> Result<DStar> {
    let Some(gamma) = gamma else {
        return Ok(DStar { view: d_star_generic(a, h)?, ambient: None, comparison: None });
    };
    if !gamma.check().mono {
        return Err(Error::NotMono("the comparison needs a monomorphism into a simplex".into()));
    }
    a.require_dim(h)?;
    let (rows, cache) = fast_rows(a);
    let view = Arc::new(BiSSetView::new(Box::new(rows.clone()), h, None));
    let (ambient, ext) = exterior_rows(a, gamma.cod(), h)?;
    let mut maps = Vec::with_capacity(h + 1);
    for m in 0..=h {
        let level = a.level(m)?;
        let (src, dst) = (rows.colimit(m)?, ext.colimit(m)?);
        maps.push(summand_map(&src, &dst, |j| {
            let c = containing(a, &cache, &level.simplices[j])?;
            Ok((j, c.inclusion.then(gamma)?))
        })?);
    }
    let comparison = BiSSetMap::new(view.clone(), ambient.clone(), maps)?;
    Ok(DStar { view, ambient: Some(ambient), comparison: Some(comparison) })
}

/// The canonical map from the colimit construction to the column construction; for a
/// simplicial subset of a simplex every row of it is an isomorphism.
pub fn d_star_agreement(a: &Arc<FinSSet>, h: usize) -> Result<BiSSetMap> {
    a.require_dim(h)?;
    let g = Arc::new(Generic::new(a)?);
    let generic = Arc::new(BiSSetView::new(Box::new(g.clone()), h, None));
    let (rows, cache) = fast_rows(a);
    let fast = Arc::new(BiSSetView::new(Box::new(rows.clone()), h, None));
    let mut maps = Vec::with_capacity(h + 1);
    for m in 0..=h {
        let gr = Generic::row(&g, m)?;
        let dst = rows.colimit(m)?;
        let level = a.level(m)?;
        let pre = summand_map(&gr.pre, &dst, |j| {
            let (y, theta) = &gr.summands[j];
            let yw = SimplexWord::nondegenerate(*y);
            let alpha = a.apply(&yw, &Monotone::new(theta.clone(), y.dim())?)?;
            let c = containing(a, &cache, &alpha)?;
            let chi = simplex_map(&g.simplices[y.dim()], a, yw, y.dim())?;
            let into = SSetMap::from_fn(&g.simplices[y.dim()], &c.sset, |x| {
                let w = chi.image_of(x);
                let r = c.locate(w.base()).ok_or_else(|| Error::Internal("simplex outside C_α".into()))?;
                SimplexWord::from_repeats(r, w.dim(), w.repeats())
            })?;
            Ok((level.position(&alpha).expect("α is an m-simplex"), into))
        })?;
        maps.push(factor_through(&gr.quotient, &pre)?);
    }
    BiSSetMap::new(generic, fast, maps)
}
