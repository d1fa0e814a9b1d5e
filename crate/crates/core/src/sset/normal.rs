//! Normalization of raw operator sequences and exhaustive identity checks.

use super::complex::FinSSet;
use super::word::{SimplexRef, SimplexWord};
use crate::error::{Error, Result};

/// A single face or degeneracy operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Face(usize),
    Degen(usize),
}

impl Op {
    fn apply(self, a: &FinSSet, w: &SimplexWord) -> Result<SimplexWord> {
        match self {
            Op::Face(i) => a.face(w, i),
            Op::Degen(i) => w.degen(i),
        }
    }
}

/// Applies `ops` left to right, starting from the nondegenerate simplex `x`, and returns the
/// normal form of the result.
pub fn normalize_word(a: &FinSSet, x: SimplexRef, ops: &[Op]) -> Result<SimplexWord> {
    if x.dim() >= a.counts().len() || x.index() >= a.count(x.dim()) {
        return Err(Error::Invalid(format!("{x} is not a simplex")));
    }
    let mut w = SimplexWord::nondegenerate(x);
    for &op in ops {
        w = op.apply(a, &w)?;
    }
    Ok(w)
}

/// Normalizes a word given as a base plus an arbitrary (not necessarily sorted) list of
/// degeneracies, applied left to right.
pub fn normalize_degeneracies(a: &FinSSet, x: SimplexRef, degens: &[usize]) -> Result<SimplexWord> {
    let ops: Vec<Op> = degens.iter().map(|&i| Op::Degen(i)).collect();
    normalize_word(a, x, &ops)
}

/// Checks every simplicial identity on every simplex of dimension `≤ max_dim`, including
/// degenerate ones, together with idempotence of the normal form. Returns the number of
/// identities checked.
pub fn verify_identities(a: &FinSSet, max_dim: usize) -> Result<usize> {
    let mut checked = 0usize;
    let top = match a.truncation() {
        Some(t) => max_dim.min(t),
        None => max_dim,
    };
    for n in 0..=top {
        let level = a.level(n)?;
        for w in &level.simplices {
            // normal form is idempotent: rebuilding from its own degeneracy list is a no-op
            let again = normalize_degeneracies(a, w.base(), &w.degeneracies().iter().rev().copied().collect::<Vec<_>>())?;
            if again != *w {
                return Err(Error::Axiom(format!("normal form of {w} is not idempotent")));
            }
            checked += 1;
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        let lhs = a.face(&a.face(w, j)?, i)?;
                        let rhs = a.face(&a.face(w, i)?, j - 1)?;
                        expect(lhs, rhs, || format!("d{i} d{j} = d{} d{i} on {w}", j - 1))?;
                        checked += 1;
                    }
                }
            }
            for j in 0..=n {
                let sj = w.degen(j)?;
                for i in 0..=n + 1 {
                    let lhs = a.face(&sj, i)?;
                    let rhs = if i < j {
                        if n == 0 {
                            continue;
                        }
                        a.face(w, i)?.degen(j - 1)?
                    } else if i == j || i == j + 1 {
                        *w
                    } else {
                        if n == 0 {
                            continue;
                        }
                        a.face(w, i - 1)?.degen(j)?
                    };
                    expect(lhs, rhs, || format!("d{i} s{j} on {w}"))?;
                    checked += 1;
                }
                for i in 0..=j {
                    let lhs = sj.degen(i)?;
                    let rhs = w.degen(i)?.degen(j + 1)?;
                    expect(lhs, rhs, || format!("s{i} s{j} = s{} s{i} on {w}", j + 1))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

fn expect(lhs: SimplexWord, rhs: SimplexWord, what: impl Fn() -> String) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::Axiom(format!("{} fails: {lhs} vs {rhs}", what())))
    }
}
