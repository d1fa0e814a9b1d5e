//! Lifting against diagonals of Reedy fibrations of bisimplicial sets.

use super::classify::{classify_sset_fibration, FibrationMode, FibrationReport};
use super::problem::{solve_strict, solve_weak, LiftingProblem};
use crate::bisset::{d_star, diag, diag_map, exterior_map, reedy_check_bisset, BiReedyReport, BiSSetMap};
use crate::error::{Error, Result};
use crate::sset::{MapSearch, SSetMap};

/// The outcome of lifting `γ` against `diag(f)` over every square.
#[derive(Debug, Clone)]
pub struct JardineConclusion {
    pub squares: usize,
    pub strict: usize,
    pub weak: usize,
    /// The first square without a strict lift, as `(top, bottom)`.
    pub failure: Option<(SSetMap, SSetMap)>,
}

impl JardineConclusion {
    pub fn strict_holds(&self) -> bool {
        self.strict == self.squares
    }
    pub fn weak_holds(&self) -> bool {
        self.weak == self.squares
    }
}

#[derive(Debug, Clone)]
pub struct JardineReport {
    pub reedy: BiReedyReport,
    pub rows: Vec<FibrationReport>,
    /// Whether `d*A → A ⊠ Δⁿ → Δⁿ ⊠ Δⁿ` is a monomorphism in every row.
    pub factorization_mono: bool,
    /// Present only when the hypotheses hold.
    pub conclusion: Option<JardineConclusion>,
}

impl JardineReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.reedy.passed() && self.rows.iter().all(|r| r.passed)
    }
}

/// Checks the hypotheses on `f` and, when they hold, lifts `γ: A → Δⁿ` against `diag(f)` in
/// every square, through dimension `d`.
pub fn jardine_criterion(f: &BiSSetMap, gamma: &SSetMap, d: usize) -> Result<JardineReport> {
    if !gamma.check().mono {
        return Err(Error::NotMono("the left map must be a monomorphism".into()));
    }
    let (a, simplex) = (gamma.dom(), gamma.cod());
    let n = simplex.dim();
    if n > d {
        return Err(Error::Truncation { needed: n, available: d });
    }
    let reedy = reedy_check_bisset(f, d)?;
    let rows = (0..=d)
        .map(|m| classify_sset_fibration(f.row(m), FibrationMode::Kan, d))
        .collect::<Result<Vec<_>>>()?;
    let ds = d_star(a, Some(gamma), n)?;
    let id = SSetMap::identity(simplex);
    let outer = exterior_map(gamma, &id, n)?;
    let mut factorization_mono = true;
    for m in 0..=n {
        let c = ds.comparison.as_ref().expect("comparison for a mono").row(m).then(outer.row(m))?;
        factorization_mono &= c.check().mono;
    }
    let mut report = JardineReport { reedy, rows, factorization_mono, conclusion: None };
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let (dx, dy) = (diag(f.dom(), d)?, diag(f.cod(), d)?);
    let p = diag_map(f, &dx, &dy)?;
    let bottoms = MapSearch::new(simplex, &dy.sset)?.all()?;
    let mut conclusion = JardineConclusion { squares: 0, strict: 0, weak: 0, failure: None };
    for g in bottoms {
        let mut tops = MapSearch::new(a, &dx.sset)?;
        tops.over(&p, &gamma.then(&g)?);
        for top in tops.all()? {
            let prob = LiftingProblem::new(gamma.clone(), p.clone(), top.clone(), g.clone())?;
            conclusion.squares += 1;
            if solve_strict(&prob)?.is_some() {
                conclusion.strict += 1;
                conclusion.weak += 1;
            } else {
                if conclusion.failure.is_none() {
                    conclusion.failure = Some((top, g.clone()));
                }
                if solve_weak(&prob)?.is_some() {
                    conclusion.weak += 1;
                }
            }
        }
    }
    report.conclusion = Some(conclusion);
    Ok(report)
}
