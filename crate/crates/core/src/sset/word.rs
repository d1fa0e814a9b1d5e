//! Simplex references and Eilenberg–Zilber normal-form words.
//!
//! A simplex of a finite simplicial set is written uniquely as `s_{i_1} … s_{i_r} x`
//! with `x` nondegenerate and `i_1 > … > i_r`. We store the degeneracy part as the
//! bitmask of its repeat positions: bit `j` set means vertices `j` and `j + 1`
//! of the simplex are collapsed by the underlying surjection.

use std::fmt;

use crate::error::{Error, Result};

/// Largest simplex dimension representable by a word.
pub const MAX_DIM: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub dim: u32,
    pub index: u32,
}

impl SimplexRef {
    pub fn new(dim: usize, index: usize) -> Self {
        SimplexRef { dim: dim as u32, index: index as u32 }
    }
    pub fn dim(&self) -> usize {
        self.dim as usize
    }
    pub fn index(&self) -> usize {
        self.index as usize
    }
}

impl fmt::Display for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}.{}", self.dim, self.index)
    }
}

/// Normal-form word: a nondegenerate base and a degeneracy (repeat) mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexWord {
    base: SimplexRef,
    dim: u32,
    repeats: u32,
}

impl SimplexWord {
    pub fn nondegenerate(base: SimplexRef) -> Self {
        SimplexWord { base, dim: base.dim, repeats: 0 }
    }

    /// Builds a word from its repeat mask; the mask must have exactly
    /// `dim - base.dim` bits below `dim`.
    pub fn from_repeats(base: SimplexRef, dim: usize, repeats: u32) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::Invalid(format!("dimension {dim} exceeds {MAX_DIM}")));
        }
        let valid = repeats >> dim == 0 && repeats.count_ones() as usize + base.dim() == dim;
        if !valid {
            return Err(Error::Invalid(format!(
                "repeat mask {repeats:#b} does not fit base {base} in dimension {dim}"
            )));
        }
        Ok(SimplexWord { base, dim: dim as u32, repeats })
    }

    pub(crate) fn raw(base: SimplexRef, dim: usize, repeats: u32) -> Self {
        debug_assert_eq!(repeats.count_ones() as usize + base.dim(), dim);
        SimplexWord { base, dim: dim as u32, repeats }
    }

    /// Word with degeneracies `s_{i_1} … s_{i_r}` given in strictly decreasing order.
    pub fn with_degeneracies(base: SimplexRef, degens: &[usize]) -> Result<Self> {
        let dim = base.dim() + degens.len();
        let mut mask = 0u32;
        for w in degens.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::Invalid(format!(
                    "degeneracy indices must be strictly decreasing, got {degens:?}"
                )));
            }
        }
        for &i in degens {
            if i >= dim {
                return Err(Error::OperatorRange { index: i, dim });
            }
            mask |= 1 << i;
        }
        // Strictly decreasing indices `i_1 > … > i_r` with `i_k < dim` form the repeat set.
        Self::from_repeats(base, dim, mask)
    }

    pub fn base(&self) -> SimplexRef {
        self.base
    }
    pub fn dim(&self) -> usize {
        self.dim as usize
    }
    pub fn repeats(&self) -> u32 {
        self.repeats
    }
    pub fn is_degenerate(&self) -> bool {
        self.repeats != 0
    }

    /// Degeneracy indices in strictly decreasing order.
    pub fn degeneracies(&self) -> Vec<usize> {
        (0..self.dim()).rev().filter(|j| self.repeats >> j & 1 == 1).collect()
    }

    /// Precomposes with a surjection `[m] → [dim]` given by its repeat mask.
    pub fn degenerate_by(&self, m: usize, surj: u32) -> SimplexWord {
        let composed = compose_surjections(self.repeats, surj, m);
        SimplexWord::raw(self.base, m, composed)
    }

    /// The degeneracy `s_i` applied to this word.
    pub fn degen(&self, i: usize) -> Result<SimplexWord> {
        if i > self.dim() {
            return Err(Error::OperatorRange { index: i, dim: self.dim() });
        }
        Ok(self.degenerate_by(self.dim() + 1, 1 << i))
    }
}

impl fmt::Display for SimplexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if self.repeats != 0 {
            let d: Vec<String> = self.degeneracies().iter().map(|i| i.to_string()).collect();
            write!(f, " s[{}]", d.join(","))?;
        }
        Ok(())
    }
}

/// Value of the surjection with repeat mask `repeats` at `j`.
#[inline]
pub fn surj_value(repeats: u32, j: usize) -> usize {
    j - (repeats & ((1u32 << j) - 1)).count_ones() as usize
}

/// Repeat mask of `outer ∘ inner` where `inner: [m] → [n]` has mask `inner`
/// and `outer: [n] → [k]` has mask `outer`.
pub fn compose_surjections(outer: u32, inner: u32, m: usize) -> u32 {
    let mut mask = 0u32;
    for j in 0..m {
        let a = surj_value(outer, surj_value(inner, j));
        let b = surj_value(outer, surj_value(inner, j + 1));
        if a == b {
            mask |= 1 << j;
        }
    }
    mask
}

/// A monotone map `[m] → [n]`, stored by its values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monotone {
    pub values: Vec<u8>,
    pub target: usize,
}

impl Monotone {
    pub fn new(values: Vec<u8>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("monotone map needs a nonempty domain".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) || values.iter().any(|&v| v as usize > target) {
            return Err(Error::Invalid(format!("{values:?} is not a monotone map into [{target}]")));
        }
        Ok(Monotone { values, target })
    }

    pub fn identity(n: usize) -> Self {
        Monotone { values: (0..=n as u8).collect(), target: n }
    }

    /// The coface `δ^i : [n-1] → [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        let values = (0..n).map(|j| if j < i { j as u8 } else { j as u8 + 1 }).collect();
        Monotone { values, target: n }
    }

    /// The codegeneracy `σ^i : [n+1] → [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        let values = (0..=n + 1).map(|j| if j <= i { j as u8 } else { j as u8 - 1 }).collect();
        Monotone { values, target: n }
    }

    /// Inclusion of the vertex set `mask ⊆ [n]`.
    pub fn from_mask(mask: u32, n: usize) -> Self {
        let values = (0..=n).filter(|v| mask >> v & 1 == 1).map(|v| v as u8).collect();
        Monotone { values, target: n }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Monotone) -> Monotone {
        let values = other.values.iter().map(|&v| self.values[v as usize]).collect();
        Monotone { values, target: self.target }
    }
}

/// Iterates all masks over `n` bits with exactly `k` bits set, in increasing order.
pub fn masks_with_popcount(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    (0..limit).map(|m| m as u32).filter(move |m| m.count_ones() as usize == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_list_round_trips() {
        let x = SimplexRef::new(1, 0);
        let w = SimplexWord::with_degeneracies(x, &[2, 0]).unwrap();
        assert_eq!(w.dim(), 3);
        assert_eq!(w.degeneracies(), vec![2, 0]);
        assert!(SimplexWord::with_degeneracies(x, &[0, 2]).is_err());
        assert!(SimplexWord::with_degeneracies(x, &[3]).is_err());
    }

    #[test]
    fn s_i_s_j_relation() {
        // s_i s_j = s_{j+1} s_i for i <= j
        let x = SimplexRef::new(2, 0);
        let w = SimplexWord::nondegenerate(x);
        for i in 0..=2 {
            for j in i..=2 {
                let lhs = w.degen(j).unwrap().degen(i).unwrap();
                let rhs = w.degen(i).unwrap().degen(j + 1).unwrap();
                assert_eq!(lhs, rhs, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn surjection_values() {
        // repeats {0, 2} on [4] → [2]: 0,0,1,1,2
        let r = 0b101;
        let vals: Vec<usize> = (0..5).map(|j| surj_value(r, j)).collect();
        assert_eq!(vals, vec![0, 0, 1, 1, 2]);
    }
}
