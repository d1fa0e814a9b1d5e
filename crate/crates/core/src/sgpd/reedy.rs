//! Levelwise Reedy conditions for maps of simplicial groupoids.

use std::collections::HashSet;

use super::hom::{latching_object, matching_object};
use super::simp::SGpdMap;
use crate::error::Result;
use crate::gpd::{classify_gpd_map, strict_fiber_product, GpdFunctor};

/// The verdicts at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReedyLevel {
    pub n: usize,
    /// The gap functor `X_n → M_nX ×_{M_nY} Y_n` is an isofibration.
    pub fibration: bool,
    /// An object of the gap target and a morphism into its image that does not lift.
    pub witness: Option<(u32, u32)>,
    /// `L_nY ⊔_{L_nX} X_n → Y_n` is injective on objects.
    pub cofibration: bool,
    /// `X_n → Y_n` is injective on objects.
    pub objectwise_cofibration: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReedyReport {
    pub levels: Vec<ReedyLevel>,
}

impl ReedyReport {
    pub fn fibration(&self) -> bool {
        self.levels.iter().all(|l| l.fibration)
    }
    pub fn cofibration(&self) -> bool {
        self.levels.iter().all(|l| l.cofibration)
    }
    pub fn objectwise_cofibration(&self) -> bool {
        self.levels.iter().all(|l| l.objectwise_cofibration)
    }
}

/// The gap functor `X_n → M_nX ×_{M_nY} Y_n`.
pub fn gap_functor(p: &SGpdMap, n: usize) -> Result<GpdFunctor> {
    let mx = matching_object(p.dom(), n)?;
    let my = matching_object(p.cod(), n)?;
    let mp = mx.hom.postcompose(p, &my.hom)?;
    let sp = strict_fiber_product(&mp, &my.restriction)?;
    sp.pairing(&mx.restriction, &p.level_functor(n)?)
}

pub fn check_reedy(p: &SGpdMap, d: usize) -> Result<ReedyReport> {
    let mut levels = Vec::new();
    for n in 0..=d {
        let gap = gap_functor(p, n)?;
        let flags = classify_gpd_map(&gap);
        let witness = if flags.isofibration { None } else { gap.isofibration_witness() };
        let pn = p.level_functor(n)?;
        let lx: HashSet<u32> = if n == 0 {
            HashSet::new()
        } else {
            latching_object(p.dom(), n)?.objects.into_iter().collect()
        };
        let ly: Vec<u32> = if n == 0 { Vec::new() } else { latching_object(p.cod(), n)?.objects };
        // the pushout is L_nY together with the objects of X_n outside L_nX
        let mut hit: HashSet<u32> = ly.into_iter().collect();
        let mut cofibration = true;
        for x in pn.dom().objects().filter(|x| !lx.contains(x)) {
            if !hit.insert(pn.on_object(x)) {
                cofibration = false;
            }
        }
        levels.push(ReedyLevel {
            n,
            fibration: flags.isofibration,
            witness,
            cofibration,
            objectwise_cofibration: pn.is_injective_on_objects(),
        });
    }
    Ok(ReedyReport { levels })
}
