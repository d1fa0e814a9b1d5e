//! Homotopies of `Sing` induced by natural isomorphisms.

use super::simp::SGpdNatIso;
use crate::bisset::{sing, Diagonal};
use crate::error::{Error, Result};
use crate::lifting::Cylinder;
use crate::sset::{SSetMap, SimplexWord};

/// A homotopy `Sing(X) × Δ¹ → Sing(Y)` with its cylinder.
#[derive(Debug, Clone)]
pub struct SingHomotopy {
    pub dom: Diagonal,
    pub cod: Diagonal,
    pub cylinder: Cylinder,
    pub map: SSetMap,
}

impl SingHomotopy {
    /// The restriction to the end `v ∈ {0, 1}`.
    pub fn end(&self, v: usize) -> Result<SSetMap> {
        match v {
            0 => self.cylinder.end0.then(&self.map),
            1 => self.cylinder.end1.then(&self.map),
            _ => Err(Error::Invalid(format!("Δ¹ has no vertex {v}"))),
        }
    }
}

/// The homotopy from `Sing(F)` to `Sing(G)` induced by `α: F ⇒ G`, through dimension `d`.
pub fn nat_iso_to_homotopy(alpha: &SGpdNatIso, d: usize) -> Result<SingHomotopy> {
    let (f, g) = (alpha.src(), alpha.tgt());
    let (x, y) = (f.dom().clone(), f.cod().clone());
    x.require(d + 1)?;
    y.require(d + 1)?;
    let (sx, sy) = (sing(&x, d)?, sing(&y, d)?);
    let cylinder = Cylinder::new(&sx.sset)?;
    let interval = cylinder.product.components()[1].clone();
    let mut levels = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let (fl, gl) = (f.level_functor(n)?, g.level_functor(n)?);
        let (ox, my) = (x.obj().level(n)?, y.mor().level(n)?);
        let c: Vec<u32> = ox
            .simplices
            .iter()
            .map(|w| my.position(&alpha.component().apply(w)).expect("component in level") as u32)
            .collect();
        levels.push((fl, gl, c, x.level(n)?, y.level(n)?, x.row_keyed_to(n, n)?, y.row_keyed_to(n, n)?));
    }
    let map = SSetMap::from_fn(cylinder.product.sset(), &sy.sset, |s| {
        let n = s.dim();
        let parts = cylinder.product.components_of(&SimplexWord::nondegenerate(s));
        let (fl, gl, c, lx, ly, rx, ry) = &levels[n];
        // vertices sent to 0 come first
        let k = interval.vertices(&parts[1]).iter().filter(|v| v.base().index() == 0).count();
        let row_word = *sx.key_of(&parts[0]).ok_or_else(|| Error::Internal("simplex outside Sing".into()))?;
        let key = rx.key_of(&row_word).ok_or_else(|| Error::Internal("row word without key".into()))?;
        let image: Vec<u32> = if n == 0 {
            vec![if k == 1 { fl.on_object(key[0]) } else { gl.on_object(key[0]) }]
        } else {
            (1..=n)
                .map(|j| {
                    let h = key[j - 1];
                    if j < k {
                        fl.on_morphism(h)
                    } else if j > k {
                        gl.on_morphism(h)
                    } else {
                        ly.comp(gl.on_morphism(h), c[lx.src(h) as usize])
                    }
                })
                .collect()
        };
        let rw = ry.word(n, &image).ok_or_else(|| Error::Internal("string image is not in the row".into()))?;
        sy.word(n, &rw).ok_or_else(|| Error::Internal("row word is not a diagonal simplex".into()))
    })?;
    Ok(SingHomotopy { dom: sx, cod: sy, cylinder, map })
}
