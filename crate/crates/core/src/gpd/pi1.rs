//! Presentations of fundamental groupoids and their bounded enumeration.

use std::collections::VecDeque;
use std::sync::Arc;

use super::functor::GpdFunctor;
use super::groupoid::FinGroupoid;
use crate::error::{Error, Result};
use crate::sset::{FinSSet, SimplexWord};

/// A generator or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

/// A groupoid presented by a directed graph and relations between paths.
///
/// Paths are written in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedGroupoid {
    pub objects: usize,
    pub generators: Vec<(u32, u32)>,
    pub relations: Vec<(Vec<Letter>, Vec<Letter>)>,
}

/// Default bound on the number of morphisms of an enumerated quotient.
pub const QUOTIENT_CAP: usize = 8;

/// The enumerated groupoid of a presentation with the image of each generator.
#[derive(Debug, Clone)]
pub struct Pi1Quotient {
    pub groupoid: Arc<FinGroupoid>,
    pub generator_image: Vec<u32>,
}

/// Generators are the nondegenerate edges; each nondegenerate 2-simplex `σ` contributes the
/// relation `d₁σ = d₂σ · d₀σ`, where degenerate edges are read as identities.
pub fn fundamental_groupoid(a: &FinSSet) -> Result<PresentedGroupoid> {
    a.require_dim(2)?;
    let generators: Vec<(u32, u32)> = a
        .nondegenerate(1)
        .map(|e| {
            let f = a.faces_of(e);
            (f[1].base().index() as u32, f[0].base().index() as u32)
        })
        .collect();
    let letter = |w: &SimplexWord| -> Vec<Letter> {
        if w.is_degenerate() {
            Vec::new()
        } else {
            vec![Letter { generator: w.base().index() as u32, inverse: false }]
        }
    };
    let mut relations = Vec::new();
    for s in a.nondegenerate(2) {
        let f = a.faces_of(s);
        let lhs = letter(&f[1]);
        let mut rhs = letter(&f[2]);
        rhs.extend(letter(&f[0]));
        relations.push((lhs, rhs));
    }
    Ok(PresentedGroupoid { objects: a.count(0), generators, relations })
}

fn free_reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in w {
        if out.last().is_some_and(|p| p.generator == l.generator && p.inverse != l.inverse) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| Letter { generator: l.generator, inverse: !l.inverse }).collect()
}

impl PresentedGroupoid {
    /// Relations whose sides differ as reduced words.
    pub fn nontrivial_relations(&self) -> usize {
        self.relations
            .iter()
            .filter(|(l, r)| {
                let mut w = l.clone();
                w.extend(invert(r));
                !free_reduce(&w).is_empty()
            })
            .count()
    }

    /// No nontrivial relations: the presented groupoid is free on its graph.
    pub fn is_free(&self) -> bool {
        self.nontrivial_relations() == 0
    }

    /// Enumerates the presented groupoid, failing if it has more than `cap` morphisms.
    pub fn quotient(&self, cap: usize) -> Result<Pi1Quotient> {
        let n = self.objects;
        // spanning forest by breadth-first search over generators in both directions
        let mut root = vec![u32::MAX; n];
        let mut path: Vec<Vec<Letter>> = vec![Vec::new(); n];
        let mut tree = vec![false; self.generators.len()];
        for r in 0..n {
            if root[r] != u32::MAX {
                continue;
            }
            root[r] = r as u32;
            let mut q = VecDeque::from([r as u32]);
            while let Some(x) = q.pop_front() {
                for (i, &(s, t)) in self.generators.iter().enumerate() {
                    let (other, l) = if s == x && root[t as usize] == u32::MAX {
                        (t, Letter { generator: i as u32, inverse: false })
                    } else if t == x && root[s as usize] == u32::MAX {
                        (s, Letter { generator: i as u32, inverse: true })
                    } else {
                        continue;
                    };
                    root[other as usize] = r as u32;
                    let mut p = path[x as usize].clone();
                    p.push(l);
                    path[other as usize] = p;
                    tree[i] = true;
                    q.push_back(other);
                }
            }
        }
        let roots: Vec<u32> = (0..n as u32).filter(|&x| root[x as usize] == x).collect();
        let mut groups = Vec::new();
        let mut gen_elem: Vec<(usize, usize)> = vec![(0, 0); self.generators.len()];
        for &r in &roots {
            // group generators: non-tree edges inside this component
            let gens: Vec<usize> = (0..self.generators.len())
                .filter(|&i| !tree[i] && root[self.generators[i].0 as usize] == r)
                .collect();
            let col = |l: &Letter| -> Option<usize> {
                gens.iter().position(|&g| g == l.generator as usize).map(|p| 2 * p + l.inverse as usize)
            };
            let relators: Vec<Vec<usize>> = self
                .relations
                .iter()
                .filter(|(l, rr)| {
                    let first = l.first().or(rr.first());
                    first.is_some_and(|x| root[self.generators[x.generator as usize].0 as usize] == r)
                })
                .map(|(l, rr)| {
                    let mut w = l.clone();
                    w.extend(invert(rr));
                    w.iter().filter_map(col).collect::<Vec<usize>>()
                })
                .filter(|w| !w.is_empty())
                .collect();
            let limit = (cap * 64).max(4096);
            let g = todd_coxeter(gens.len(), &relators, limit)?;
            for (p, &i) in gens.iter().enumerate() {
                gen_elem[i] = (groups.len(), g.act(0, 2 * p));
            }
            groups.push(g);
        }
        let comp_of: Vec<usize> = (0..n).map(|x| roots.iter().position(|&r| r == root[x]).unwrap()).collect();
        let total: usize = roots
            .iter()
            .enumerate()
            .map(|(c, _)| {
                let k = comp_of.iter().filter(|&&x| x == c).count();
                k * k * groups[c].order()
            })
            .sum();
        if total > cap {
            return Err(Error::TooLarge(format!(
                "presented groupoid has {total} morphisms, more than the bound {cap}"
            )));
        }
        // morphism (x, y, g) means path(x)⁻¹-conjugate: t_x · g · t_y⁻¹
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        let mut elem = Vec::new();
        let mut id_of = std::collections::HashMap::new();
        for x in 0..n {
            for y in 0..n {
                if comp_of[x] != comp_of[y] {
                    continue;
                }
                for g in 0..groups[comp_of[x]].order() {
                    id_of.insert((x as u32, y as u32, g), src.len() as u32);
                    src.push(x as u32);
                    tgt.push(y as u32);
                    elem.push(g);
                }
            }
        }
        let groupoid = {
            let (src2, tgt2, elem2) = (src.clone(), tgt.clone(), elem.clone());
            let groups2 = groups.clone();
            let comp_of2 = comp_of.clone();
            let id2 = id_of.clone();
            FinGroupoid::new(n, src, tgt, move |g, f| {
                let (x, z) = (src2[f as usize], tgt2[g as usize]);
                let grp = &groups2[comp_of2[x as usize]];
                let e = grp.mul(elem2[f as usize], elem2[g as usize]);
                id2[&(x, z, e)]
            })?
        };
        let generator_image = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                let e = if tree[i] { 0 } else { gen_elem[i].1 };
                id_of[&(s, t, e)]
            })
            .collect();
        Ok(Pi1Quotient { groupoid: Arc::new(groupoid), generator_image })
    }
}

impl Pi1Quotient {
    /// The canonical functor from the presented groupoid into `target`, if the assignment
    /// of generators `images` respects all relations; used to compare with a known groupoid.
    pub fn functor_to(&self, target: &Arc<FinGroupoid>, objects: Vec<u32>, images: &[u32]) -> Result<GpdFunctor> {
        let g = &self.groupoid;
        // every morphism is a composite of generator images; search by closure from identities
        let mut mor: Vec<Option<u32>> = vec![None; g.morphism_count()];
        for x in g.objects() {
            mor[g.ident(x) as usize] = Some(target.ident(objects[x as usize]));
        }
        for (i, &m) in self.generator_image.iter().enumerate() {
            mor[m as usize] = Some(images[i]);
        }
        loop {
            let mut changed = false;
            for f in g.morphisms() {
                let Some(mf) = mor[f as usize] else { continue };
                let fi = g.inverse(f) as usize;
                if mor[fi].is_none() {
                    mor[fi] = Some(target.inverse(mf));
                    changed = true;
                }
                for h in g.morphisms() {
                    if g.src(h) != g.tgt(f) {
                        continue;
                    }
                    if let Some(mh) = mor[h as usize] {
                        let c = g.comp(h, f) as usize;
                        if mor[c].is_none() {
                            mor[c] = target.compose(mh, mf);
                            changed = mor[c].is_some() || changed;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let table = mor
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::Internal("generators do not reach every morphism".into())))
            .collect::<Result<Vec<_>>>()?;
        GpdFunctor::new(g.clone(), target.clone(), objects, table)
    }
}

/// A finite group from coset enumeration: elements are cosets of the trivial subgroup.
#[derive(Debug, Clone)]
pub struct CosetGroup {
    table: Vec<Vec<usize>>,
    words: Vec<Vec<usize>>,
}

impl CosetGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    fn act(&self, c: usize, col: usize) -> usize {
        self.table[c][col]
    }

    /// Product `a·b` in path order.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.words[b].iter().fold(a, |c, &col| self.table[c][col])
    }
}

/// Todd–Coxeter enumeration of `⟨k generators | relators⟩` over the trivial subgroup.
/// Column `2i` is generator `i`, column `2i+1` its inverse.
pub fn todd_coxeter(k: usize, relators: &[Vec<usize>], limit: usize) -> Result<CosetGroup> {
    let cols = 2 * k;
    let inv = |x: usize| x ^ 1;
    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; cols]];
    let mut parent: Vec<usize> = vec![0];
    fn rep(parent: &mut [usize], c: usize) -> usize {
        let mut r = c;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = c;
        while parent[x] != r {
            let n = parent[x];
            parent[x] = r;
            x = n;
        }
        r
    }
    fn merge(parent: &mut [usize], q: &mut Vec<usize>, a: usize, b: usize) {
        let (a, b) = (rep(parent, a), rep(parent, b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        parent[hi] = lo;
        q.push(hi);
    }
    let coincidence = |table: &mut Vec<Vec<Option<usize>>>, parent: &mut Vec<usize>, a: usize, b: usize| {
        let mut q = Vec::new();
        merge(parent, &mut q, a, b);
        let mut i = 0;
        while i < q.len() {
            let e = q[i];
            i += 1;
            for x in 0..cols {
                if let Some(f) = table[e][x] {
                    table[f][inv(x)] = None;
                    let (e1, f1) = (rep(parent, e), rep(parent, f));
                    if let Some(t) = table[e1][x] {
                        merge(parent, &mut q, f1, t);
                    } else if let Some(t) = table[f1][inv(x)] {
                        merge(parent, &mut q, e1, t);
                    } else {
                        table[e1][x] = Some(f1);
                        table[f1][inv(x)] = Some(e1);
                    }
                }
            }
        }
    };
    let define = |table: &mut Vec<Vec<Option<usize>>>, parent: &mut Vec<usize>, c: usize, x: usize| -> Result<usize> {
        let d = table.len();
        if d >= limit {
            return Err(Error::TooLarge(format!("coset enumeration exceeded {limit} cosets")));
        }
        table.push(vec![None; cols]);
        parent.push(d);
        table[c][x] = Some(d);
        table[d][inv(x)] = Some(c);
        Ok(d)
    };
    let mut c = 0;
    while c < table.len() {
        for r in relators {
            if parent[c] != c {
                break;
            }
            // scan and fill
            let (mut f, mut b) = (c, c);
            let (mut i, mut j) = (0usize, r.len() as isize - 1);
            loop {
                while (i as isize) <= j {
                    match table[f][r[i]] {
                        Some(n) => {
                            f = n;
                            i += 1;
                        }
                        None => break,
                    }
                }
                if (i as isize) > j {
                    if f != b {
                        coincidence(&mut table, &mut parent, f, b);
                    }
                    break;
                }
                while j >= i as isize {
                    match table[b][inv(r[j as usize])] {
                        Some(n) => {
                            b = n;
                            j -= 1;
                        }
                        None => break,
                    }
                }
                if j < i as isize {
                    coincidence(&mut table, &mut parent, f, b);
                    break;
                } else if j == i as isize {
                    table[f][r[i]] = Some(b);
                    table[b][inv(r[i])] = Some(f);
                    break;
                } else {
                    define(&mut table, &mut parent, f, r[i])?;
                }
            }
        }
        if parent[c] == c {
            for x in 0..cols {
                if table[c][x].is_none() {
                    define(&mut table, &mut parent, c, x)?;
                }
            }
        }
        c += 1;
    }
    // compact live cosets
    let live: Vec<usize> = (0..table.len()).filter(|&c| parent[c] == c).collect();
    let pos: std::collections::HashMap<usize, usize> = live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let compact: Vec<Vec<usize>> = live
        .iter()
        .map(|&c| {
            (0..cols)
                .map(|x| {
                    let t = table[c][x].expect("complete table");
                    pos[&rep(&mut parent, t)]
                })
                .collect()
        })
        .collect();
    let mut words: Vec<Option<Vec<usize>>> = vec![None; compact.len()];
    words[0] = Some(Vec::new());
    let mut q = VecDeque::from([0usize]);
    while let Some(c) = q.pop_front() {
        for x in 0..cols {
            let d = compact[c][x];
            if words[d].is_none() {
                let mut w = words[c].clone().unwrap();
                w.push(x);
                words[d] = Some(w);
                q.push_back(d);
            }
        }
    }
    let words = words.into_iter().map(|w| w.expect("connected coset graph")).collect();
    Ok(CosetGroup { table: compact, words })
}
