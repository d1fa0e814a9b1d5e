//! Finite groupoids with explicit tables.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite groupoid. Morphism `i` goes `src[i] → tgt[i]`; `compose(g, f)` is `g ∘ f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroupoid {
    objects: usize,
    src: Vec<u32>,
    tgt: Vec<u32>,
    ident: Vec<u32>,
    inv: Vec<u32>,
    comp: HashMap<(u32, u32), u32>,
    homs: HashMap<(u32, u32), Vec<u32>>,
    labels: Vec<String>,
}

impl FinGroupoid {
    /// Builds a groupoid from source/target tables and a composition function, checking
    /// every groupoid law.
    pub fn new(objects: usize, src: Vec<u32>, tgt: Vec<u32>, compose: impl Fn(u32, u32) -> u32) -> Result<Self> {
        Self::build(objects, src, tgt, compose, true)
    }

    fn build(objects: usize, src: Vec<u32>, tgt: Vec<u32>, compose: impl Fn(u32, u32) -> u32, check: bool) -> Result<Self> {
        if src.len() != tgt.len() {
            return Err(Error::Invalid("source and target tables differ in length".into()));
        }
        if src.iter().chain(&tgt).any(|&x| x as usize >= objects) {
            return Err(Error::Invalid("morphism endpoint is not an object".into()));
        }
        let mut homs: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        for (m, (&s, &t)) in src.iter().zip(&tgt).enumerate() {
            homs.entry((s, t)).or_default().push(m as u32);
        }
        let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); objects];
        for (m, &s) in src.iter().enumerate() {
            by_src[s as usize].push(m as u32);
        }
        let mut comp = HashMap::new();
        for f in 0..src.len() as u32 {
            for &g in &by_src[tgt[f as usize] as usize] {
                let h = compose(g, f);
                if h as usize >= src.len() || src[h as usize] != src[f as usize] || tgt[h as usize] != tgt[g as usize] {
                    return Err(Error::Axiom(format!("composite of {g} and {f} has the wrong endpoints")));
                }
                comp.insert((g, f), h);
            }
        }
        let mut ident = Vec::with_capacity(objects);
        for x in 0..objects as u32 {
            let loops = homs.get(&(x, x)).map(|v| v.as_slice()).unwrap_or(&[]);
            let id = loops
                .iter()
                .copied()
                .find(|&e| loops.iter().all(|&f| comp[&(e, f)] == f && comp[&(f, e)] == f))
                .ok_or_else(|| Error::Axiom(format!("object {x} has no identity")))?;
            ident.push(id);
        }
        let mut inv = Vec::with_capacity(src.len());
        for f in 0..src.len() {
            let (s, t) = (src[f], tgt[f]);
            let back = homs.get(&(t, s)).map(|v| v.as_slice()).unwrap_or(&[]);
            let g = back
                .iter()
                .copied()
                .find(|&g| comp[&(g, f as u32)] == ident[s as usize] && comp[&(f as u32, g)] == ident[t as usize])
                .ok_or_else(|| Error::Axiom(format!("morphism {f} is not invertible")))?;
            inv.push(g);
        }
        // associativity
        for (&(g, f), &gf) in comp.iter().filter(|_| check) {
            for &h in &by_src[tgt[g as usize] as usize] {
                if comp[&(h, gf)] != comp[&(comp[&(h, g)], f)] {
                    return Err(Error::Axiom(format!("composition is not associative at ({h}, {g}, {f})")));
                }
            }
        }
        let labels = (0..objects).map(|x| x.to_string()).collect();
        Ok(FinGroupoid { objects, src, tgt, ident, inv, comp, homs, labels })
    }

    /// Builds a groupoid whose laws are guaranteed by construction; only identities and
    /// inverses are located, associativity is not re-checked.
    pub fn from_trusted(objects: usize, src: Vec<u32>, tgt: Vec<u32>, compose: impl Fn(u32, u32) -> u32) -> Result<Self> {
        Self::build(objects, src, tgt, compose, false)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.objects {
            return Err(Error::Invalid("one label per object required".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn object_label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    /// The discrete groupoid on `n` objects.
    pub fn discrete(n: usize) -> Self {
        let v: Vec<u32> = (0..n as u32).collect();
        FinGroupoid::new(n, v.clone(), v, |g, _| g).expect("discrete groupoid")
    }

    pub fn terminal() -> Self {
        Self::discrete(1)
    }

    pub fn empty() -> Self {
        Self::discrete(0)
    }

    /// The chaotic groupoid on `n` objects: exactly one morphism `i → j` for every pair,
    /// numbered `i·n + j`.
    pub fn chaotic(n: usize) -> Self {
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                src.push(i);
                tgt.push(j);
            }
        }
        let nn = n as u32;
        FinGroupoid::new(n, src, tgt, move |g, f| (f / nn) * nn + g % nn).expect("chaotic groupoid")
    }

    /// The interval groupoid `J = {0 ⇄ 1}`.
    pub fn interval() -> Self {
        Self::chaotic(2)
    }

    /// A one-object groupoid from a group multiplication table (`table[a][b] = a·b`,
    /// where `g ∘ f` is `f·g`, i.e. composition in diagrammatic order).
    pub fn group(table: &[Vec<u32>]) -> Result<Self> {
        let n = table.len();
        let t = table.to_vec();
        FinGroupoid::new(1, vec![0; n], vec![0; n], move |g, f| t[f as usize][g as usize])
    }

    /// The cyclic group `Z/k` as a one-object groupoid; morphism `i` is the residue `i`.
    pub fn cyclic(k: usize) -> Self {
        let table: Vec<Vec<u32>> = (0..k).map(|a| (0..k).map(|b| ((a + b) % k) as u32).collect()).collect();
        Self::group(&table).expect("cyclic group")
    }

    /// The Klein four-group as a one-object groupoid.
    pub fn klein() -> Self {
        let table: Vec<Vec<u32>> = (0..4u32).map(|a| (0..4u32).map(|b| a ^ b).collect()).collect();
        Self::group(&table).expect("klein group")
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: u32) -> u32 {
        self.src[f as usize]
    }

    pub fn tgt(&self, f: u32) -> u32 {
        self.tgt[f as usize]
    }

    pub fn ident(&self, x: u32) -> u32 {
        self.ident[x as usize]
    }

    pub fn is_identity(&self, f: u32) -> bool {
        self.ident[self.src[f as usize] as usize] == f
    }

    pub fn inverse(&self, f: u32) -> u32 {
        self.inv[f as usize]
    }

    /// `g ∘ f`, if composable.
    pub fn compose(&self, g: u32, f: u32) -> Option<u32> {
        self.comp.get(&(g, f)).copied()
    }

    /// `g ∘ f` for morphisms known to be composable.
    pub fn comp(&self, g: u32, f: u32) -> u32 {
        self.comp[&(g, f)]
    }

    pub fn hom(&self, x: u32, y: u32) -> &[u32] {
        self.homs.get(&(x, y)).map_or(&[], |v| v.as_slice())
    }

    pub fn objects(&self) -> impl Iterator<Item = u32> {
        0..self.objects as u32
    }

    pub fn morphisms(&self) -> impl Iterator<Item = u32> {
        0..self.src.len() as u32
    }

    /// Morphisms with target `x`.
    pub fn incoming(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        self.morphisms().filter(move |&f| self.tgt(f) == x)
    }

    /// Connected component index of every object, numbered by first occurrence.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.objects];
        let mut next = 0;
        for x in 0..self.objects {
            if comp[x] != usize::MAX {
                continue;
            }
            for y in 0..self.objects {
                if !self.hom(x as u32, y as u32).is_empty() {
                    comp[y] = next;
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self, x: u32, y: u32) -> bool {
        !self.hom(x, y).is_empty()
    }

    /// Product groupoid; object `(x, y)` is `x·|H| + y`, morphism `(f, g)` is `f·|mor H| + g`.
    pub fn product(&self, other: &FinGroupoid) -> FinGroupoid {
        let (no, nm) = (other.objects as u32, other.morphism_count() as u32);
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for f in self.morphisms() {
            for g in other.morphisms() {
                src.push(self.src(f) * no + other.src(g));
                tgt.push(self.tgt(f) * no + other.tgt(g));
            }
        }
        let a = self.clone();
        let b = other.clone();
        FinGroupoid::new(self.objects * other.objects, src, tgt, move |h, k| {
            a.comp(h / nm, k / nm) * nm + b.comp(h % nm, k % nm)
        })
        .expect("product of groupoids")
    }

    /// Disjoint union; objects and morphisms of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &FinGroupoid) -> FinGroupoid {
        let (oo, om) = (self.objects as u32, self.morphism_count() as u32);
        let src: Vec<u32> = self.src.iter().copied().chain(other.src.iter().map(|s| s + oo)).collect();
        let tgt: Vec<u32> = self.tgt.iter().copied().chain(other.tgt.iter().map(|s| s + oo)).collect();
        let a = self.clone();
        let b = other.clone();
        FinGroupoid::new(self.objects + other.objects, src, tgt, move |g, f| {
            if g < om {
                a.comp(g, f)
            } else {
                b.comp(g - om, f - om) + om
            }
        })
        .expect("disjoint union of groupoids")
    }
}
