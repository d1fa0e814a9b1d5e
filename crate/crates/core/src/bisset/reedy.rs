//! Reedy fibrations of bisimplicial sets.

use std::collections::HashMap;

use super::transpose::transpose_map;
use super::view::BiSSetMap;
use crate::error::{Error, Result};
use crate::lifting::{classify_sset_fibration, FibrationMode, FibrationReport};
use crate::sset::{SSetMap, SimplexWord, TupleSSet};

/// The relative matching object `M_n X ×_{M_n Y} Y_n` with the gap map out of `X_n`.
#[derive(Debug, Clone)]
pub struct BiGap {
    pub n: usize,
    pub target: TupleSSet,
    pub gap: SSetMap,
}

/// The gap map of the rows at level `n`, with simplices of the rows up to `d`.
pub fn bisset_gap(f: &BiSSetMap, n: usize, d: usize) -> Result<BiGap> {
    let (x, y) = (f.dom(), f.cod());
    let yn = y.row(n)?;
    if n == 0 {
        let target = TupleSSet::by_levels(vec![yn.clone()], d, Some(d), |k| {
            Ok(yn.level(k)?.simplices.iter().map(|w| vec![*w]).collect())
        })?;
        let gap = target.pairing(&[f.row(0).clone()])?;
        return Ok(BiGap { n, target, gap });
    }
    let xp = x.row(n - 1)?;
    let fp = f.row(n - 1);
    let yfaces = (0..=n).map(|i| y.hface(n, i)).collect::<Result<Vec<_>>>()?;
    let xfaces = if n >= 2 {
        (0..n).map(|i| x.hface(n - 1, i)).collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let mut comps = vec![xp.clone(); n + 1];
    comps.push(yn.clone());
    let target = TupleSSet::by_levels(comps, d, Some(d), |k| {
        let mut over: HashMap<SimplexWord, Vec<SimplexWord>> = HashMap::new();
        for w in &xp.level(k)?.simplices {
            over.entry(fp.apply(w)).or_default().push(*w);
        }
        let mut out = Vec::new();
        let empty = Vec::new();
        for yw in &yn.level(k)?.simplices {
            let choices: Vec<&Vec<SimplexWord>> =
                yfaces.iter().map(|g| over.get(&g.apply(yw)).unwrap_or(&empty)).collect();
            // later entries are indexed by their 0-th face
            let index: Vec<HashMap<SimplexWord, Vec<SimplexWord>>> = if xfaces.is_empty() {
                Vec::new()
            } else {
                choices
                    .iter()
                    .map(|c| {
                        let mut m: HashMap<SimplexWord, Vec<SimplexWord>> = HashMap::new();
                        for w in c.iter() {
                            m.entry(xfaces[0].apply(w)).or_default().push(*w);
                        }
                        m
                    })
                    .collect()
            };
            let mut cur = Vec::with_capacity(n + 2);
            extend(&choices, &index, &xfaces, &mut cur, &mut |t| {
                let mut t = t.to_vec();
                t.push(*yw);
                out.push(t);
            });
        }
        Ok(out)
    })?;
    let mut maps = (0..=n).map(|i| Ok((*x.hface(n, i)?).clone())).collect::<Result<Vec<_>>>()?;
    maps.push(f.row(n).clone());
    let gap = target.pairing(&maps)?;
    Ok(BiGap { n, target, gap })
}

/// Chooses `x_j` one at a time subject to `d_i x_j = d_{j-1} x_i` for `i < j`.
fn extend(
    choices: &[&Vec<SimplexWord>],
    index: &[HashMap<SimplexWord, Vec<SimplexWord>>],
    faces: &[std::sync::Arc<SSetMap>],
    cur: &mut Vec<SimplexWord>,
    emit: &mut impl FnMut(&[SimplexWord]),
) {
    let j = cur.len();
    if j == choices.len() {
        emit(cur);
        return;
    }
    let candidates: &[SimplexWord] = if j == 0 || faces.is_empty() {
        choices[j]
    } else {
        index[j].get(&faces[j - 1].apply(&cur[0])).map(|v| v.as_slice()).unwrap_or(&[])
    };
    for w in candidates {
        let ok = faces.is_empty() || (1..j).all(|i| faces[i].apply(w) == faces[j - 1].apply(&cur[i]));
        if ok {
            cur.push(*w);
            extend(choices, index, faces, cur, emit);
            cur.pop();
        }
    }
}

#[derive(Debug, Clone)]
pub struct BiReedyLevel {
    pub n: usize,
    pub report: FibrationReport,
}

#[derive(Debug, Clone)]
pub struct BiReedyReport {
    pub levels: Vec<BiReedyLevel>,
}

impl BiReedyReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|l| l.report.passed)
    }

    pub fn first_failure(&self) -> Option<&BiReedyLevel> {
        self.levels.iter().find(|l| !l.report.passed)
    }
}

/// Checks that for `n ≤ d` the map from column `n` of the domain into the relative matching
/// object of columns is a Kan fibration through dimension `d`.
pub fn reedy_check_bisset(f: &BiSSetMap, d: usize) -> Result<BiReedyReport> {
    let t = transpose_map(f, d)?;
    if t.bound() < d {
        return Err(Error::Truncation { needed: d, available: t.bound() });
    }
    let mut levels = Vec::new();
    for n in 0..=d {
        let g = bisset_gap(&t, n, d)?;
        let report = classify_sset_fibration(&g.gap, FibrationMode::Kan, d)?;
        levels.push(BiReedyLevel { n, report });
    }
    Ok(BiReedyReport { levels })
}
