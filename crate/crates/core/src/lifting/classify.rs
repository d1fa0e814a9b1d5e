//! Kan-type fibration checks against finite families of subsimplex inclusions.

use std::fmt;
use std::sync::Arc;

use super::problem::{find_fiberwise_homotopy, Cylinder};
use crate::error::{Error, Result};
use crate::sset::{FinSSet, MapSearch, SSetMap, SimplexRef, SimplexWord, Subsimplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FibrationMode {
    Kan,
    TrivialKan,
    WeakKan,
    WeakTrivialKan,
}

impl FibrationMode {
    pub fn name(self) -> &'static str {
        match self {
            FibrationMode::Kan => "kan",
            FibrationMode::TrivialKan => "trivial_kan",
            FibrationMode::WeakKan => "weak_kan",
            FibrationMode::WeakTrivialKan => "weak_trivial_kan",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "kan" => Some(FibrationMode::Kan),
            "trivial_kan" | "trivial-kan" => Some(FibrationMode::TrivialKan),
            "weak_kan" | "weak-kan" => Some(FibrationMode::WeakKan),
            "weak_trivial_kan" | "weak-trivial-kan" => Some(FibrationMode::WeakTrivialKan),
            _ => None,
        }
    }

    fn is_weak(self) -> bool {
        matches!(self, FibrationMode::WeakKan | FibrationMode::WeakTrivialKan)
    }
}

/// Which subcomplex of `Δⁿ` a square is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Inclusion {
    Horn { n: usize, k: usize },
    Boundary { n: usize },
    Vertex { n: usize, v: usize },
}

impl Inclusion {
    pub fn subsimplex(self) -> Result<Subsimplex> {
        match self {
            Inclusion::Horn { n, k } => Subsimplex::horn(n, k),
            Inclusion::Boundary { n } => Subsimplex::boundary(n),
            Inclusion::Vertex { n, v } => Subsimplex::vertex(n, v),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Inclusion::Horn { n, .. } | Inclusion::Boundary { n } | Inclusion::Vertex { n, .. } => n,
        }
    }
}

impl fmt::Display for Inclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inclusion::Horn { n, k } => write!(f, "Λ^{n}_{k} ⊂ Δ^{n}"),
            Inclusion::Boundary { n } => write!(f, "∂Δ^{n} ⊂ Δ^{n}"),
            Inclusion::Vertex { n, v } => write!(f, "{{{v}}} ⊂ Δ^{n}"),
        }
    }
}

/// An unsolvable square: `top` gives the images in `X` of the maximal faces of the
/// subcomplex (listed by vertex set) and `bottom` the `n`-simplex of `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftWitness {
    pub inclusion: Inclusion,
    pub faces: Vec<u32>,
    pub top: Vec<SimplexWord>,
    pub bottom: SimplexWord,
}

impl fmt::Display for LiftWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<String> = self
            .faces
            .iter()
            .zip(&self.top)
            .map(|(m, w)| {
                let verts: String = (0..32).filter(|v| m >> v & 1 == 1).map(|v| v.to_string()).collect();
                format!("[{verts}]↦{w}")
            })
            .collect();
        write!(f, "no lift for {}: top {{{}}}, bottom {}", self.inclusion, faces.join(", "), self.bottom)
    }
}

#[derive(Debug, Clone)]
pub struct FibrationReport {
    pub mode: FibrationMode,
    pub max_dim: usize,
    pub passed: bool,
    pub squares: usize,
    pub weak_rescues: usize,
    pub witness: Option<LiftWitness>,
}

/// The inclusions tested in a mode, in canonical order.
pub fn test_family(mode: FibrationMode, d: usize) -> Vec<Inclusion> {
    let mut out = Vec::new();
    for n in 0..=d {
        if matches!(mode, FibrationMode::TrivialKan | FibrationMode::WeakTrivialKan) {
            out.push(Inclusion::Boundary { n });
        }
        if n >= 1 && mode != FibrationMode::TrivialKan {
            out.extend((0..=n).map(|k| Inclusion::Horn { n, k }));
        }
        if n >= 1 && mode.is_weak() {
            out.extend((0..=n).map(|v| Inclusion::Vertex { n, v }));
        }
    }
    out
}

/// Checks `p` against every square of the mode's family up to dimension `d`.
pub fn classify_sset_fibration(p: &SSetMap, mode: FibrationMode, d: usize) -> Result<FibrationReport> {
    p.dom().require_dim(d)?;
    p.cod().require_dim(d)?;
    let mut report = FibrationReport { mode, max_dim: d, passed: true, squares: 0, weak_rescues: 0, witness: None };
    for inc in test_family(mode, d) {
        let r = check_inclusion(p, inc, mode.is_weak())?;
        report.squares += r.squares;
        report.weak_rescues += r.weak_rescues;
        if let Some(w) = r.witness {
            report.passed = false;
            report.witness = Some(w);
            break;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default)]
pub struct InclusionCheck {
    pub squares: usize,
    pub weak_rescues: usize,
    pub witness: Option<LiftWitness>,
}

/// Checks all squares from one subsimplex inclusion into `p`.
pub fn check_inclusion(p: &SSetMap, inc: Inclusion, weak: bool) -> Result<InclusionCheck> {
    let sub = inc.subsimplex()?;
    check_subsimplex(p, &sub, inc, weak)
}

pub(crate) fn check_subsimplex(p: &SSetMap, sub: &Subsimplex, inc: Inclusion, weak: bool) -> Result<InclusionCheck> {
    let (x, y) = (p.dom(), p.cod());
    let n = sub.ambient;
    let masks = sub.maximal_masks();
    let xl = x.level(n)?;
    let yl = y.level(n)?;
    let x_idx = x.restriction_index(n, &masks)?;
    let y_idx = y.restriction_index(n, &masks)?;
    let p_pos: Vec<u32> = xl
        .simplices
        .iter()
        .map(|w| yl.position(&p.apply(w)).expect("image lies in the level") as u32)
        .collect();
    let refs: Vec<SimplexRef> = masks.iter().map(|&m| sub.simplex_with_mask(m).expect("maximal face")).collect();
    let mut out = InclusionCheck::default();
    let mut weak_ctx: Option<WeakContext> = None;
    let mut failure: Option<Result<LiftWitness>> = None;
    let search = MapSearch::new(sub.sset(), x)?;
    let mut hit = vec![false; yl.len()];
    search.run(|images| {
        let key: Vec<SimplexWord> = refs.iter().map(|r| images[r.dim()][r.index()]).collect();
        let ykey: Vec<SimplexWord> = key.iter().map(|w| p.apply(w)).collect();
        let ys = y_idx.get(&ykey);
        let xs = x_idx.get(&key);
        for &z in xs {
            hit[p_pos[z as usize] as usize] = true;
        }
        let mut ok = true;
        for &b in ys {
            out.squares += 1;
            if hit[b as usize] {
                continue;
            }
            if weak {
                let ctx = match &weak_ctx {
                    Some(c) => c,
                    None => match WeakContext::new(sub) {
                        Ok(c) => weak_ctx.insert(c),
                        Err(e) => {
                            failure = Some(Err(e));
                            ok = false;
                            break;
                        }
                    },
                };
                let a = SSetMap::new(sub.sset().clone(), x.clone(), images.to_vec()).expect("search yields maps");
                match weak_square(ctx, p, &a, yl.simplices[b as usize], &xl.simplices, &p_pos, b) {
                    Ok(true) => {
                        out.weak_rescues += 1;
                        continue;
                    }
                    Ok(false) => {}
                    Err(e) => {
                        failure = Some(Err(e));
                        ok = false;
                        break;
                    }
                }
            }
            failure = Some(Ok(LiftWitness { inclusion: inc, faces: masks.clone(), top: key.clone(), bottom: yl.simplices[b as usize] }));
            ok = false;
            break;
        }
        for &z in xs {
            hit[p_pos[z as usize] as usize] = false;
        }
        ok
    })?;
    match failure {
        Some(Ok(w)) => out.witness = Some(w),
        Some(Err(e)) => return Err(e),
        None => {}
    }
    Ok(out)
}

struct WeakContext {
    cyl: Cylinder,
    incl: SSetMap,
}

impl WeakContext {
    fn new(sub: &Subsimplex) -> Result<Self> {
        Ok(WeakContext { cyl: Cylinder::new(sub.sset())?, incl: sub.inclusion()? })
    }
}

/// Whether the square `(a, b)` has a weak solution.
fn weak_square(
    ctx: &WeakContext,
    p: &SSetMap,
    a: &SSetMap,
    b: SimplexWord,
    xs: &[SimplexWord],
    p_pos: &[u32],
    b_pos: u32,
) -> Result<bool> {
    let n = b.dim();
    let simplex = ctx.incl.cod().clone();
    let base = a.then(p)?;
    for (zi, z) in xs.iter().enumerate() {
        if p_pos[zi] != b_pos {
            continue;
        }
        let h = simplex_map(&simplex, p.dom(), *z, n)?;
        let hi = ctx.incl.then(&h)?;
        if find_fiberwise_homotopy(&ctx.cyl, p, a, &hi, &base)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The map `Δⁿ → X` classifying an `n`-simplex.
pub fn simplex_map(simplex: &Arc<FinSSet>, x: &Arc<FinSSet>, z: SimplexWord, n: usize) -> Result<SSetMap> {
    if z.dim() != n {
        return Err(Error::Invalid("simplex has the wrong dimension".into()));
    }
    let sub = Subsimplex::simplex(n)?;
    let images = (0..=n)
        .map(|k| {
            sub.sset()
                .nondegenerate(k)
                .map(|r| x.restrict(&z, sub.mask_of(r)))
                .collect()
        })
        .collect();
    SSetMap::new(simplex.clone(), x.clone(), images)
}
