//! Integral homology of the normalized chain complex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::complex::FinSSet;
use crate::error::Result;

/// Ranks and torsion invariant factors of `H_0, …, H_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub ranks: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    /// The profile of a point up to dimension `d`.
    pub fn point(d: usize) -> Self {
        let mut ranks = vec![0; d + 1];
        ranks[0] = 1;
        HomologyProfile { ranks, torsion: vec![Vec::new(); d + 1] }
    }

    pub fn is_point(&self) -> bool {
        *self == HomologyProfile::point(self.ranks.len() - 1)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ranks
            .iter()
            .zip(&self.torsion)
            .enumerate()
            .map(|(n, (r, t))| {
                let mut s = format!("H{n}=Z^{r}");
                for q in t {
                    s.push_str(&format!("+Z/{q}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A sparse integer matrix, stored by rows.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<BTreeMap<usize, BigInt>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { cols, rows: vec![BTreeMap::new(); rows] }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let e = self.rows[r].entry(c).or_insert_with(BigInt::zero);
        *e += v;
        if e.is_zero() {
            self.rows[r].remove(&c);
        }
    }
}

/// Boundary matrix `∂_n : C_n → C_{n-1}` of the normalized complex, rows indexed by
/// `(n-1)`-simplices and columns by `n`-simplices.
pub fn boundary_matrix(a: &FinSSet, n: usize) -> SparseMatrix {
    let rows = if n == 0 { 0 } else { a.count(n - 1) };
    let mut m = SparseMatrix::new(rows, a.count(n));
    if n == 0 {
        return m;
    }
    for x in a.nondegenerate(n) {
        for (i, f) in a.faces_of(x).iter().enumerate() {
            if !f.is_degenerate() {
                m.add(f.base().index(), x.index(), if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

/// Nonzero invariant factors of an integer matrix.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = m.rows.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut factors = Vec::new();
    let mut alive: BTreeSet<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    // eliminate unit pivots sparsely
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &alive {
            let len = rows[r].len();
            if best.is_some_and(|b| b.2 <= len) {
                continue;
            }
            if let Some((&c, _)) = rows[r]
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .min_by_key(|(c, _)| col_rows[**c].len())
            {
                best = Some((r, c, len));
                if len == 1 {
                    break;
                }
            }
        }
        let Some((r, c, _)) = best else { break };
        let pivot_row = rows[r].clone();
        let u = pivot_row[&c].clone();
        let others: Vec<usize> = col_rows[c].iter().copied().filter(|&o| o != r).collect();
        for o in others {
            let factor = &rows[o][&c] * &u;
            for (&pc, pv) in &pivot_row {
                let e = rows[o].entry(pc).or_insert_with(BigInt::zero);
                *e -= &factor * pv;
                if e.is_zero() {
                    rows[o].remove(&pc);
                    col_rows[pc].remove(&o);
                } else {
                    col_rows[pc].insert(o);
                }
            }
            if rows[o].is_empty() {
                alive.remove(&o);
            }
        }
        for &pc in pivot_row.keys() {
            col_rows[pc].remove(&r);
        }
        rows[r].clear();
        alive.remove(&r);
        factors.push(BigInt::one());
    }
    // dense reduction of what remains
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = alive
        .iter()
        .map(|&r| {
            let mut v = vec![BigInt::zero(); live_cols.len()];
            for (c, x) in &rows[r] {
                v[col_pos[c]] = x.clone();
            }
            v
        })
        .collect();
    factors.extend(dense_invariant_factors(&mut dense));
    factors.sort();
    factors
}

fn dense_invariant_factors(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility: fold any offending row into the pivot row
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Integral homology in dimensions `0..=d`.
pub fn homology(a: &FinSSet, d: usize) -> Result<HomologyProfile> {
    a.require_dim(d + 1)?;
    let mut rank_of = Vec::new();
    let mut tors_of = Vec::new();
    for n in 0..=d + 1 {
        let f = invariant_factors(&boundary_matrix(a, n));
        rank_of.push(f.len());
        tors_of.push(f.into_iter().filter(|q| !q.is_one()).collect::<Vec<_>>());
    }
    let mut ranks = Vec::new();
    let mut torsion = Vec::new();
    for n in 0..=d {
        ranks.push(a.count(n) - rank_of[n] - rank_of[n + 1]);
        torsion.push(tors_of[n + 1].clone());
    }
    Ok(HomologyProfile { ranks, torsion })
}
