//! Verification suites: the library invariants run as batch checks over the corpus.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::Instant;

use thiserror::Error;

use super::corpus::{self, CorpusEntry};
use super::format::{FormatError, Object};
use super::report::{Report, Verdict};
use crate::bisset::{d_star, d_star_agreement, nerve_bisset, nerve_bisset_map, reedy_check_bisset, sing, sing_map, BiSSetMap};
use crate::error::Result;
use crate::gpd::{classify_gpd_map, nerve, nerve_map, FinGroupoid, GpdFunctor};
use crate::lifting::{
    all_strict_solutions, classify_sset_fibration, jardine_criterion, solve_strict, weak_lift_space, FibrationMode,
    Inclusion, LiftingProblem,
};
use crate::sgpd::{
    chaotic_resolution_map, check_reedy, constant, constant_map, discrete, sgpd_fiber_product, FiberMode, SGpdMap,
    SimpGroupoid,
};
use crate::sset::{
    coproduct, enumerate_maps, faces_containing, homology, product, pushout, verify_identities, FinSSet, SSetMap,
    SimplexRef, Subsimplex, TupleSSet,
};

pub const SUITES: &[&str] = &[
    "dstar-lemma",
    "reedy-eq-injective",
    "nerve-bridge",
    "jardine",
    "main-theorem",
    "sing-limits",
    "levelwise-we",
    "weak-lift-space",
    "normal-forms",
];

/// Chaotic resolutions with more simplices than this in level `D` of row `D` of their
/// nerve are reported unchecked.
pub const SIZE_CAP: u64 = 100_000;

/// Lifting squares compared by the two solver orders.
pub const SQUARE_BUDGET: usize = 200;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?} (known: {list})", list = SUITES.join(", "))]
    Unknown(String),
    #[error(transparent)]
    Corpus(#[from] FormatError),
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub dim: usize,
    /// Instances added to the shipped corpus.
    pub extra: Vec<CorpusEntry>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { dim: 3, extra: Vec::new() }
    }
}

pub fn run_suite(id: &str, opts: &SuiteOptions) -> std::result::Result<Report, SuiteError> {
    let run: fn(&Corpus, usize, &mut Report) = match id {
        "dstar-lemma" => dstar_lemma,
        "reedy-eq-injective" => reedy_eq_injective,
        "nerve-bridge" => nerve_bridge,
        "jardine" => jardine,
        "main-theorem" => main_theorem,
        "sing-limits" => sing_limits,
        "levelwise-we" => levelwise_we,
        "weak-lift-space" => weak_lift,
        "normal-forms" => normal_forms,
        _ => return Err(SuiteError::Unknown(id.to_string())),
    };
    let start = Instant::now();
    let corpus = Corpus::load(&opts.extra)?;
    let mut report = Report::new(format!("verify-suite {id} --dim {}", opts.dim));
    report.info("dim", opts.dim);
    run(&corpus, opts.dim, &mut report);
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Default)]
struct Corpus {
    ssets: Vec<(String, Arc<FinSSet>)>,
    sset_maps: Vec<(String, SSetMap)>,
    groupoids: Vec<(String, Arc<FinGroupoid>)>,
    functors: Vec<(String, GpdFunctor)>,
    sgpds: Vec<(String, Arc<SimpGroupoid>)>,
    sgpd_maps: Vec<(String, SGpdMap)>,
    problems: Vec<(String, LiftingProblem)>,
}

impl Corpus {
    fn load(extra: &[CorpusEntry]) -> std::result::Result<Self, FormatError> {
        let mut c = Corpus::default();
        for e in corpus::entries()?.into_iter().chain(extra.iter().cloned()) {
            let name = e.name.rsplit('/').next().unwrap_or(&e.name).to_string();
            match e.object {
                Object::SSet(a) => c.ssets.push((name, a)),
                Object::SSetMap(f) => c.sset_maps.push((name, f)),
                Object::Groupoid(g) => c.groupoids.push((name, g)),
                Object::Functor(f) => c.functors.push((name, f)),
                Object::SGpd(x) => c.sgpds.push((name, x)),
                Object::SGpdMap(f) => c.sgpd_maps.push((name, f)),
                Object::Problem(p) => c.problems.push((name, p)),
            }
        }
        Ok(c)
    }

    fn small_functors(&self) -> impl Iterator<Item = &(String, GpdFunctor)> {
        self.functors.iter().filter(|(_, f)| f.dom().morphism_count() <= 4 && f.cod().morphism_count() <= 4)
    }
}

type Outcome = (Verdict, String, Option<String>);

fn record(r: &mut Report, name: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
    let name = name.into();
    match f() {
        Ok((v, detail, witness)) => r.check_with(name, v, detail, witness),
        Err(e) => r.check(name, Verdict::Fail, format!("error: {e}")),
    };
}

fn record_all(r: &mut Report, name: impl Into<String>, f: impl FnOnce() -> Result<Vec<(String, Outcome)>>) {
    let name = name.into();
    match f() {
        Ok(checks) => {
            for (n, (v, detail, witness)) in checks {
                r.check_with(format!("{name} {n}"), v, detail, witness);
            }
        }
        Err(e) => {
            r.check(name, Verdict::Fail, format!("error: {e}"));
        }
    }
}

fn pass_if(ok: bool, detail: String) -> Outcome {
    (Verdict::from_bool(ok), detail, None)
}

fn sat_pow(b: u64, e: usize) -> u64 {
    (0..e).fold(1u64, |acc, _| acc.saturating_mul(b))
}

/// The number of simplices in level `d` of row `d` of the nerve of the chaotic resolution
/// of `g`: a component with `k` objects and automorphism groups of order `a` contributes
/// `k(ka)^d (k(ka)^d a)^d`.
pub fn chaotic_size(g: &FinGroupoid, d: usize) -> u64 {
    let comp = g.components();
    let mut sizes: HashMap<usize, (u64, u64)> = HashMap::new();
    for x in g.objects() {
        let e = sizes.entry(comp[x as usize]).or_insert((0, g.hom(x, x).len() as u64));
        e.0 += 1;
    }
    sizes.values().fold(0u64, |acc, &(k, a)| {
        let objects = k.saturating_mul(sat_pow(k * a, d));
        let out = objects.saturating_mul(a);
        acc.saturating_add(objects.saturating_mul(sat_pow(out, d)))
    })
}

/// The larger chaotic size of the two ends, if it exceeds [`SIZE_CAP`].
fn oversized(f: &GpdFunctor, d: usize) -> Option<u64> {
    let s = chaotic_size(f.dom(), d).max(chaotic_size(f.cod(), d));
    (s > SIZE_CAP).then_some(s)
}

fn unchecked_size(size: u64) -> Outcome {
    (Verdict::Unchecked, format!("size: about {size} simplices in the top row level exceeds the cap {SIZE_CAP}"), None)
}

fn max_automorphisms(g: &FinGroupoid) -> usize {
    g.objects().map(|x| g.hom(x, x).len()).max().unwrap_or(0)
}

fn subsimplex_label(s: &Subsimplex) -> String {
    let faces: Vec<String> = s
        .maximal_masks()
        .iter()
        .map(|m| (0..32).filter(|v| m >> v & 1 == 1).map(|v| v.to_string()).collect())
        .collect();
    format!("{{{}}}", faces.join(","))
}

fn point() -> Result<Arc<SimpGroupoid>> {
    Ok(Arc::new(constant(&Arc::new(FinGroupoid::terminal()))?))
}

fn to_point(x: &Arc<SimpGroupoid>, pt: &Arc<SimpGroupoid>) -> Result<SGpdMap> {
    let v = SimplexRef::new(0, 0);
    SGpdMap::new(
        x.clone(),
        pt.clone(),
        SSetMap::constant(x.obj(), pt.obj(), v)?,
        SSetMap::constant(x.mor(), pt.mor(), v)?,
    )
}

/// `f` with its codomain replaced by the equal groupoid `cod`.
fn recod(f: &SGpdMap, cod: &Arc<SimpGroupoid>) -> Result<SGpdMap> {
    let on_obj = SSetMap::new(f.dom().obj().clone(), cod.obj().clone(), f.on_obj().images().to_vec())?;
    let on_mor = SSetMap::new(f.dom().mor().clone(), cod.mor().clone(), f.on_mor().images().to_vec())?;
    SGpdMap::new(f.dom().clone(), cod.clone(), on_obj, on_mor)
}

fn discrete_map(f: &SSetMap) -> Result<SGpdMap> {
    SGpdMap::new(Arc::new(discrete(f.dom())?), Arc::new(discrete(f.cod())?), f.clone(), f.clone())
}

fn nerve_of_map(p: &SGpdMap, d: usize) -> Result<BiSSetMap> {
    nerve_bisset_map(p, &nerve_bisset(p.dom(), d), &nerve_bisset(p.cod(), d))
}

fn functor(g: &Arc<FinGroupoid>, h: &Arc<FinGroupoid>, obj: &[u32], mor: &[u32]) -> Result<GpdFunctor> {
    GpdFunctor::new(g.clone(), h.clone(), obj.to_vec(), mor.to_vec())
}

/// Pairs of maps with a common codomain whose strict fiber products are small at `d`.
fn fiber_pairs(d: usize) -> Result<Vec<(String, SGpdMap, SGpdMap)>> {
    let t = Arc::new(FinGroupoid::terminal());
    let j = Arc::new(FinGroupoid::interval());
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let d2 = Arc::new(FinGroupoid::discrete(2));
    let z2pt = Arc::new(z2.disjoint_union(&t));
    let share = |q: SGpdMap, p: SGpdMap| -> Result<(SGpdMap, SGpdMap)> {
        let p = recod(&p, q.cod())?;
        Ok((q, p))
    };
    let mut out = Vec::new();
    let mut push = |name: &str, (q, p): (SGpdMap, SGpdMap)| out.push((name.to_string(), q, p));

    let pick = |x: u32| -> Result<SGpdMap> { constant_map(&GpdFunctor::point(&j, x)?) };
    push("const(pt→J at 0) × const(pt→J at 0)", share(pick(0)?, pick(0)?)?);
    push("const(pt→J at 0) × const(pt→J at 1)", share(pick(0)?, pick(1)?)?);
    push(
        "const(2→J) × const(id J)",
        share(constant_map(&functor(&d2, &j, &[0, 1], &[0, 3])?)?, constant_map(&GpdFunctor::identity(&j))?)?,
    );
    push(
        "const(Z/2+pt→Z/2) × const(pt→Z/2)",
        share(
            constant_map(&functor(&z2pt, &z2, &[0, 0], &[0, 1, 0])?)?,
            constant_map(&GpdFunctor::point(&z2, 0)?)?,
        )?,
    );
    push(
        "const(J→pt) × const(Z/2→pt)",
        share(constant_map(&GpdFunctor::to_terminal(&j))?, constant_map(&GpdFunctor::to_terminal(&z2))?)?,
    );
    push(
        "const(Z/2→pt) × const(Z/2→pt)",
        share(constant_map(&GpdFunctor::to_terminal(&z2))?, constant_map(&GpdFunctor::to_terminal(&z2))?)?,
    );
    let ez2 = chaotic_resolution_map(&GpdFunctor::to_terminal(&z2), d)?;
    let id = SGpdMap::identity(ez2.cod());
    push("E(Z/2→pt) × id", (ez2, id));
    let ept = || chaotic_resolution_map(&GpdFunctor::point(&z2, 0)?, d);
    push("E(pt→Z/2) × E(pt→Z/2)", share(ept()?, ept()?)?);
    push(
        "E(J→Z/2) × E(pt→Z/2)",
        share(chaotic_resolution_map(&functor(&j, &z2, &[0, 0], &[0, 1, 1, 0])?, d)?, ept()?)?,
    );
    let pt = point()?;
    let dj = Arc::new(discrete(Subsimplex::simplex(1)?.sset())?);
    let cj = Arc::new(constant(&j)?);
    push("disc(Δ¹)→pt × const(J)→pt", (to_point(&dj, &pt)?, to_point(&cj, &pt)?));
    let horn = discrete_map(&Subsimplex::horn(2, 1)?.inclusion()?)?;
    push("disc(Λ²₁⊂Δ²) × disc(Λ²₁⊂Δ²)", share(horn.clone(), horn)?);
    push(
        "disc(Λ²₀⊂Δ²) × disc(Λ²₂⊂Δ²)",
        share(discrete_map(&Subsimplex::horn(2, 0)?.inclusion()?)?, discrete_map(&Subsimplex::horn(2, 2)?.inclusion()?)?)?,
    );
    push(
        "disc(∂Δ¹⊂Δ¹) × disc({0}⊂Δ¹)",
        share(discrete_map(&Subsimplex::boundary(1)?.inclusion()?)?, discrete_map(&Subsimplex::vertex(1, 0)?.inclusion()?)?)?,
    );
    Ok(out)
}

fn dstar_lemma(_: &Corpus, dim: usize, r: &mut Report) {
    let h = dim + 1;
    let mut instances = 0usize;
    for n in 0..=dim {
        let subs = match Subsimplex::all_subcomplexes(n, false) {
            Ok(s) => s,
            Err(e) => {
                r.check(format!("subcomplexes of Δ^{n}"), Verdict::Fail, format!("error: {e}"));
                continue;
            }
        };
        for sub in subs {
            let name = format!("A={}⊆Δ^{n}", subsimplex_label(&sub));
            record_all(r, name, || {
                let a = sub.sset();
                let agree = d_star_agreement(a, h)?;
                let ds = d_star(a, Some(&sub.inclusion()?), h)?;
                let cmp = ds.comparison.expect("comparison requested");
                let mut acyclic: HashMap<SimplexRef, bool> = HashMap::new();
                let mut out = Vec::new();
                for m in 0..=h {
                    let iso = agree.row(m).check().iso;
                    let mono = cmp.row(m).check().mono;
                    let mut point = true;
                    for alpha in &a.level(m)?.simplices {
                        let ok = match acyclic.get(&alpha.base()) {
                            Some(&ok) => ok,
                            None => {
                                let ok = homology(&faces_containing(a, alpha)?.sset, 2)?.is_point();
                                acyclic.insert(alpha.base(), ok);
                                ok
                            }
                        };
                        point &= ok;
                    }
                    let detail = format!("fast≅generic {iso}, comparison mono {mono}, every C_α acyclic {point}");
                    out.push((format!("m={m}"), pass_if(iso && mono && point, detail)));
                }
                Ok(out)
            });
            instances += h + 1;
        }
    }
    r.info("instances (A, m)", instances);
}

type ReedyMaps = Vec<(String, Option<SGpdMap>, Option<u64>)>;

/// Every map in the Reedy comparison corpus, or its size when it is too large.
fn reedy_maps(c: &Corpus, dim: usize, r: &mut Report) -> ReedyMaps {
    let mut out: ReedyMaps = Vec::new();
    fn add(out: &mut ReedyMaps, name: String, m: Result<SGpdMap>, r: &mut Report) {
        match m {
            Ok(m) => out.push((name, Some(m), None)),
            Err(e) => {
                r.check(name, Verdict::Fail, format!("error: {e}"));
            }
        }
    }
    let builtin = || -> Result<Vec<(String, SSetMap)>> {
        let d0 = Subsimplex::simplex(0)?.sset().clone();
        let d1 = Subsimplex::simplex(1)?.sset().clone();
        Ok(vec![
            ("{0}⊂Δ¹".into(), Subsimplex::vertex(1, 0)?.inclusion()?),
            ("∂Δ²⊂Δ²".into(), Subsimplex::boundary(2)?.inclusion()?),
            ("Δ¹→Δ⁰".into(), SSetMap::constant(&d1, &d0, SimplexRef::new(0, 0))?),
            ("id Δ¹".into(), SSetMap::identity(&d1)),
        ])
    };
    match builtin() {
        Ok(maps) => {
            for (name, f) in maps.iter().chain(&c.sset_maps) {
                add(&mut out, format!("disc({name})"), discrete_map(f), r);
            }
        }
        Err(e) => {
            r.check("builtin inclusions", Verdict::Fail, format!("error: {e}"));
        }
    }
    for (name, f) in c.small_functors() {
        add(&mut out, format!("const({name})"), constant_map(f), r);
    }
    for (name, f) in &c.sgpd_maps {
        add(&mut out, name.clone(), Ok(f.clone()), r);
    }
    for (name, f) in &c.functors {
        let name = format!("E({name})");
        match oversized(f, dim) {
            Some(s) => out.push((name, None, Some(s))),
            None => add(&mut out, name, chaotic_resolution_map(f, dim), r),
        }
    }
    match fiber_pairs(dim) {
        Ok(pairs) => {
            for (name, q, p) in pairs {
                match sgpd_fiber_product(&q, &p, FiberMode::Strict) {
                    Ok(fp) => {
                        add(&mut out, format!("π₀[{name}]"), Ok(fp.projections.0), r);
                        add(&mut out, format!("π₁[{name}]"), Ok(fp.projections.1), r);
                    }
                    Err(e) => {
                        r.check(name, Verdict::Fail, format!("error: {e}"));
                    }
                }
            }
        }
        Err(e) => {
            r.check("fiber products", Verdict::Fail, format!("error: {e}"));
        }
    }
    out
}

fn reedy_eq_injective(c: &Corpus, dim: usize, r: &mut Report) {
    let maps = reedy_maps(c, dim, r);
    let mut checked = 0usize;
    for (name, p, size) in maps {
        let Some(p) = p else {
            let (v, d, w) = unchecked_size(size.unwrap_or(0));
            r.check_with(name, v, d, w);
            continue;
        };
        checked += 1;
        record_all(r, name, || {
            let g = check_reedy(&p, dim)?;
            let b = reedy_check_bisset(&nerve_of_map(&p, dim)?, dim)?;
            let mut out = Vec::new();
            for n in 0..=dim {
                let iso = g.levels[n].fibration;
                let kan = b.levels[n].report.passed;
                let witness = b.levels[n].report.witness.as_ref().map(|w| w.to_string());
                let detail = format!("groupoid gap isofibration {iso}, nerve gap Kan {kan}");
                out.push((format!("n={n}"), (Verdict::from_bool(iso == kan), detail, witness)));
            }
            Ok(out)
        });
    }
    r.info("maps compared", checked);
}

fn nerve_bridge(c: &Corpus, dim: usize, r: &mut Report) {
    for (name, f) in &c.functors {
        record(r, name.clone(), || {
            let iso = f.isofibration_witness().is_none();
            let kan = classify_sset_fibration(&nerve_map(f, dim)?, FibrationMode::Kan, dim)?;
            let detail = format!("isofibration {iso}, nerve Kan fibration {} ({} squares)", kan.passed, kan.squares);
            Ok((Verdict::from_bool(iso == kan.passed), detail, kan.witness.map(|w| w.to_string())))
        });
    }
    r.info("functors", c.functors.len());
    record(r, "Δ⁰ → N(J) fails at n=1", || {
        let f = GpdFunctor::point(&Arc::new(FinGroupoid::interval()), 0)?;
        let kan = classify_sset_fibration(&nerve_map(&f, dim)?, FibrationMode::Kan, dim)?;
        let at_one = kan.witness.as_ref().is_some_and(|w| w.inclusion.dim() == 1);
        let detail = match &kan.witness {
            Some(w) => format!("first failing square against {}", w.inclusion),
            None => "every square lifts".to_string(),
        };
        Ok((Verdict::from_bool(at_one), detail, kan.witness.map(|w| w.to_string())))
    });
}

fn jardine(c: &Corpus, dim: usize, r: &mut Report) {
    let top = dim.min(2);
    let mut gammas = Vec::new();
    for n in 1..=top {
        for k in 0..=n {
            gammas.push((Inclusion::Horn { n, k }, Subsimplex::horn(n, k)));
        }
    }
    for (name, f) in &c.functors {
        if f.isofibration_witness().is_some() {
            continue;
        }
        let name = format!("E({name})");
        if let Some(s) = oversized(f, dim) {
            let (v, d, w) = unchecked_size(s);
            r.check_with(name, v, d, w);
            continue;
        }
        record_all(r, name, || {
            let bf = nerve_of_map(&chaotic_resolution_map(f, dim)?, dim)?;
            let mut out = Vec::new();
            for (inc, sub) in &gammas {
                let gamma = sub.clone()?.inclusion()?;
                let rep = jardine_criterion(&bf, &gamma, dim)?;
                let (ok, detail) = match &rep.conclusion {
                    Some(c) => (
                        rep.factorization_mono && c.strict_holds(),
                        format!("hypotheses hold, {}/{} squares lift strictly", c.strict, c.squares),
                    ),
                    None => (false, "hypotheses fail".to_string()),
                };
                out.push((format!("γ={inc}"), pass_if(ok, detail)));
            }
            Ok(out)
        });
    }
    record(r, "control const(pt→J at 0): hypotheses fail", || {
        let p = constant_map(&GpdFunctor::point(&Arc::new(FinGroupoid::interval()), 0)?)?;
        let gamma = Subsimplex::horn(1, 0)?.inclusion()?;
        let rep = jardine_criterion(&nerve_of_map(&p, dim)?, &gamma, dim)?;
        let witness = rep.reedy.first_failure().and_then(|l| l.report.witness.as_ref()).map(|w| w.to_string());
        let detail = match rep.reedy.first_failure() {
            Some(l) => format!("Reedy condition fails at n={}", l.n),
            None => "Reedy condition holds".to_string(),
        };
        Ok((Verdict::from_bool(!rep.hypotheses_hold() && rep.conclusion.is_none()), detail, witness))
    });
}

fn main_theorem(c: &Corpus, dim: usize, r: &mut Report) {
    let mut instances = 0usize;
    for (name, f) in &c.functors {
        if f.isofibration_witness().is_some() || f.dom().morphism_count() > 4 {
            continue;
        }
        instances += 1;
        let name = format!("E({name})");
        if let Some(s) = oversized(f, dim) {
            let (v, d, w) = unchecked_size(s);
            r.check_with(name, v, d, w);
            continue;
        }
        record_all(r, name, || {
            let p = chaotic_resolution_map(f, dim)?;
            let reedy = check_reedy(&p, dim)?;
            let mut out = vec![(
                "Reedy".to_string(),
                pass_if(reedy.fibration(), format!("gap isofibrations at n≤{dim} {}", reedy.fibration())),
            )];
            let bf = nerve_of_map(&p, dim)?;
            for m in 0..=dim {
                let k = classify_sset_fibration(bf.row(m), FibrationMode::Kan, dim)?;
                let detail = format!("row {m} Kan through dimension {dim}: {} ({} squares)", k.passed, k.squares);
                out.push((format!("row m={m}"), (Verdict::from_bool(k.passed), detail, k.witness.map(|w| w.to_string()))));
            }
            let (_, _, s) = sing_map(&p, dim)?;
            let k = classify_sset_fibration(&s, FibrationMode::Kan, dim)?;
            let detail = format!("sing(p) Kan through dimension {dim}: {} ({} squares)", k.passed, k.squares);
            out.push(("sing".to_string(), (Verdict::from_bool(k.passed), detail, k.witness.map(|w| w.to_string()))));
            Ok(out)
        });
    }
    r.info("isofibrations with at most 4 morphisms in the domain", instances);
    let control = || -> Result<SGpdMap> { constant_map(&GpdFunctor::to_terminal(&Arc::new(FinGroupoid::interval()))) };
    record(r, "control const(J→pt): check_reedy fails at n=1", || {
        let rep = check_reedy(&control()?, dim)?;
        let first = rep.levels.iter().find(|l| !l.fibration);
        let detail = match first {
            Some(l) => format!("first non-isofibration gap at n={}", l.n),
            None => "every gap is an isofibration".to_string(),
        };
        let witness = first.and_then(|l| l.witness).map(|(x, f)| format!("object {x} of the gap target, morphism {f}"));
        Ok((Verdict::from_bool(first.is_some_and(|l| l.n == 1)), detail, witness))
    });
    record(r, "control const(J→pt): nerve gap fails at n=1 against Λ¹₀", || {
        let rep = reedy_check_bisset(&nerve_of_map(&control()?, dim)?, dim)?;
        let first = rep.first_failure();
        let w = first.and_then(|l| l.report.witness.clone());
        let ok = first.is_some_and(|l| l.n == 1) && w.as_ref().is_some_and(|w| w.inclusion == Inclusion::Horn { n: 1, k: 0 });
        let detail = match (first, &w) {
            (Some(l), Some(w)) => format!("first failure at n={} against {}", l.n, w.inclusion),
            _ => "every nerve gap is Kan".to_string(),
        };
        Ok((Verdict::from_bool(ok), detail, w.map(|w| w.to_string())))
    });
}

fn sing_limits(_: &Corpus, dim: usize, r: &mut Report) {
    let pairs = match fiber_pairs(dim) {
        Ok(p) => p,
        Err(e) => {
            r.check("fiber products", Verdict::Fail, format!("error: {e}"));
            return;
        }
    };
    r.info("fiber products", pairs.len());
    for (name, q, p) in pairs {
        record(r, name, || {
            let fp = sgpd_fiber_product(&q, &p, FiberMode::Strict)?;
            let sp = sing(&fp.groupoid, dim)?;
            let (_, _, sq) = sing_map(&q, dim)?;
            let (_, _, spp) = sing_map(&p, dim)?;
            let pb = TupleSSet::pullback_by_levels(&sq, &spp)?;
            let (_, _, a) = sing_map(&fp.projections.0, dim)?;
            let (_, _, b) = sing_map(&fp.projections.1, dim)?;
            let cmp = pb.pairing(&[a, b])?;
            let iso = cmp.check().iso && cmp.dom().same_as(&sp.sset);
            let detail = format!("sing(P) counts {:?}, pullback counts {:?}, comparison iso {iso}", sp.sset.counts(), pb.sset().counts());
            Ok(pass_if(iso, detail))
        });
    }
}

fn levelwise_we(c: &Corpus, dim: usize, r: &mut Report) {
    let top = dim + 1;
    for (name, f) in &c.functors {
        if !classify_gpd_map(f).equivalence {
            continue;
        }
        record(r, format!("const({name})"), || {
            let p = constant_map(f)?;
            let mut levelwise = true;
            for n in 0..=dim {
                levelwise &= classify_gpd_map(&p.level_functor(n)?).equivalence;
            }
            let hx = homology(&sing(p.dom(), top)?.sset, dim)?;
            let hy = homology(&sing(p.cod(), top)?.sset, dim)?;
            let detail = format!("levelwise equivalence {levelwise}; sing homology {hx} against {hy}");
            Ok(pass_if(levelwise && hx == hy, detail))
        });
    }
    record(r, "const(J→pt): sing homology of a point", || {
        let h = homology(&sing(&Arc::new(constant(&Arc::new(FinGroupoid::interval()))?), top)?.sset, dim)?;
        Ok(pass_if(h.is_point(), format!("{h}")))
    });
    for (name, g) in &c.groupoids {
        if g.morphism_count() > 4 {
            continue;
        }
        record(r, format!("sing(const({name})) against N({name})"), || {
            let hs = homology(&sing(&Arc::new(constant(g)?), top)?.sset, dim)?;
            let hn = homology(&*nerve(g, top)?, dim)?;
            Ok(pass_if(hs == hn, format!("{hs}")))
        });
    }
}

fn weak_lift(c: &Corpus, _: usize, r: &mut Report) {
    let incs = [("Λ²₁⊂Δ²", Subsimplex::horn(2, 1)), ("{0}⊂Δ¹", Subsimplex::vertex(1, 0))];
    for (name, f) in c.small_functors() {
        if f.isofibration_witness().is_some() || max_automorphisms(f.dom()).max(max_automorphisms(f.cod())) > 2 {
            continue;
        }
        record_all(r, format!("E({name})"), || {
            let p = chaotic_resolution_map(f, 2)?;
            let mut out = Vec::new();
            for (iname, sub) in &incs {
                let w = weak_lift_space(&sub.clone()?.inclusion()?, &p)?;
                let detail = format!(
                    "Ψ isofibration {}, surjective on objects {} ({} lifts over {} squares)",
                    w.flags.isofibration,
                    w.surjective_on_objects,
                    w.lifts.groupoid.object_count(),
                    w.squares.groupoid.object_count()
                );
                out.push((format!("i={iname}"), pass_if(w.flags.isofibration && w.surjective_on_objects, detail)));
            }
            Ok(out)
        });
    }
}

fn normal_forms(c: &Corpus, dim: usize, r: &mut Report) {
    let top = dim + 1;
    let mut ssets: Vec<(String, Result<Arc<FinSSet>>)> =
        c.ssets.iter().map(|(n, a)| (n.clone(), Ok(a.clone()))).collect();
    for (n, g) in &c.groupoids {
        if g.morphism_count() <= 4 {
            ssets.push((format!("N({n})"), nerve(g, top)));
        }
    }
    for (n, x) in &c.sgpds {
        ssets.push((format!("{n}.obj"), Ok(x.obj().clone())));
        ssets.push((format!("{n}.mor"), Ok(x.mor().clone())));
    }
    for (name, a) in ssets {
        record(r, format!("identities {name}"), || {
            let k = verify_identities(&*a?, top)?;
            Ok(pass_if(true, format!("{k} simplices checked through dimension {top}")))
        });
    }
    universal_probes(r);
    solver_cross_check(c, r);
}

fn simplex(n: usize) -> Result<Arc<FinSSet>> {
    Ok(Subsimplex::simplex(n)?.sset().clone())
}

fn universal_probes(r: &mut Report) {
    let shapes = || -> Result<Vec<(&'static str, Arc<FinSSet>)>> {
        Ok(vec![
            ("Δ¹", simplex(1)?),
            ("Λ²₁", Subsimplex::horn(2, 1)?.sset().clone()),
            ("∂Δ²", Subsimplex::boundary(2)?.sset().clone()),
        ])
    };
    let shapes = match shapes() {
        Ok(s) => s,
        Err(e) => {
            r.check("probe shapes", Verdict::Fail, format!("error: {e}"));
            return;
        }
    };
    // maps T → A × B correspond to pairs of maps
    for (an, a) in &shapes[..2] {
        for (bn, b) in &shapes {
            for (tn, t) in &shapes[..2] {
                record(r, format!("product {an}×{bn} probed by {tn}"), || {
                    let p = product(a, b)?;
                    let (p0, p1) = (p.projection(0)?, p.projection(1)?);
                    let maps = enumerate_maps(t, p.sset())?;
                    let pairs: BTreeSet<_> = maps
                        .iter()
                        .map(|m| Ok((m.then(&p0)?.images().to_vec(), m.then(&p1)?.images().to_vec())))
                        .collect::<Result<_>>()?;
                    let (na, nb) = (enumerate_maps(t, a)?.len(), enumerate_maps(t, b)?.len());
                    let ok = pairs.len() == maps.len() && maps.len() == na * nb;
                    Ok(pass_if(ok, format!("{} maps, {na}·{nb} pairs", maps.len())))
                });
            }
        }
    }
    // maps out of a pushout correspond to compatible pairs, and out of a coproduct to all pairs
    let targets = || -> Result<Vec<(&'static str, Arc<FinSSet>)>> {
        Ok(vec![
            ("Δ²", simplex(2)?),
            ("N(Z/2)", nerve(&Arc::new(FinGroupoid::cyclic(2)), 2)?),
            ("N(J)", nerve(&Arc::new(FinGroupoid::interval()), 2)?),
        ])
    };
    let spans = || -> Result<Vec<(&'static str, SSetMap, SSetMap)>> {
        let b1 = Subsimplex::boundary(1)?.inclusion()?;
        let h = Subsimplex::horn(2, 1)?.inclusion()?;
        let d0 = simplex(0)?;
        Ok(vec![
            ("Δ¹ ⊔_{∂Δ¹} Δ⁰", b1.clone(), SSetMap::constant(b1.dom(), &d0, SimplexRef::new(0, 0))?),
            ("Δ¹ ⊔_{∂Δ¹} Δ¹", b1.clone(), b1),
            ("Δ² ⊔_{Λ²₁} Δ²", h.clone(), h),
        ])
    };
    let (targets, spans) = match (targets(), spans()) {
        (Ok(t), Ok(s)) => (t, s),
        (Err(e), _) | (_, Err(e)) => {
            r.check("probe shapes", Verdict::Fail, format!("error: {e}"));
            return;
        }
    };
    for (sn, f, g) in &spans {
        for (xn, x) in &targets {
            record(r, format!("pushout {sn} probed by {xn}"), || {
                let po = pushout(f, g)?;
                let out = enumerate_maps(&po.object, x)?;
                let (us, vs) = (enumerate_maps(f.cod(), x)?, enumerate_maps(g.cod(), x)?);
                let mut compatible = 0usize;
                for u in &us {
                    let fu = f.then(u)?;
                    for v in vs.iter() {
                        if fu.agrees_with(&g.then(v)?) {
                            compatible += 1;
                        }
                    }
                }
                let restricted: BTreeSet<_> = out
                    .iter()
                    .map(|m| {
                        Ok((po.insertions[0].then(m)?.images().to_vec(), po.insertions[1].then(m)?.images().to_vec()))
                    })
                    .collect::<Result<_>>()?;
                let ok = out.len() == compatible && restricted.len() == out.len();
                Ok(pass_if(ok, format!("{} maps, {compatible} compatible pairs", out.len())))
            });
        }
    }
    for (an, a) in &shapes[..2] {
        for (xn, x) in &targets {
            record(r, format!("coproduct {an}⊔Δ⁰ probed by {xn}"), || {
                let s = coproduct(a, &simplex(0)?)?;
                let n = enumerate_maps(&s.object, x)?.len();
                let (na, nb) = (enumerate_maps(a, x)?.len(), enumerate_maps(&simplex(0)?, x)?.len());
                Ok(pass_if(n == na * nb, format!("{n} maps, {na}·{nb} pairs")))
            });
        }
    }
}

/// Squares from the corpus problems and from horn and boundary inclusions against small
/// nerve maps, each solved by the two search orders.
fn solver_cross_check(c: &Corpus, r: &mut Report) {
    let mut problems: Vec<(String, LiftingProblem)> = c.problems.clone();
    let gen = || -> Result<Vec<(String, LiftingProblem)>> {
        let j = Arc::new(FinGroupoid::interval());
        let z2 = Arc::new(FinGroupoid::cyclic(2));
        let ps = [
            ("N(pt→J)", nerve_map(&GpdFunctor::point(&j, 0)?, 2)?),
            ("N(J→pt)", nerve_map(&GpdFunctor::to_terminal(&j), 2)?),
            ("N(Z/2→pt)", nerve_map(&GpdFunctor::to_terminal(&z2), 2)?),
            ("N(pt→Z/2)", nerve_map(&GpdFunctor::point(&z2, 0)?, 2)?),
        ];
        let is = [
            ("{0}⊂Δ¹", Subsimplex::vertex(1, 0)?.inclusion()?),
            ("∂Δ¹⊂Δ¹", Subsimplex::boundary(1)?.inclusion()?),
            ("Λ²₁⊂Δ²", Subsimplex::horn(2, 1)?.inclusion()?),
            ("Λ²₀⊂Δ²", Subsimplex::horn(2, 0)?.inclusion()?),
        ];
        let mut out = Vec::new();
        for (pn, p) in &ps {
            for (iname, i) in &is {
                let gs = enumerate_maps(i.cod(), p.cod())?;
                for (fi, f) in enumerate_maps(i.dom(), p.dom())?.into_iter().enumerate() {
                    let fp = f.then(p)?;
                    for (gi, g) in gs.iter().enumerate() {
                        if i.then(g)?.agrees_with(&fp) {
                            out.push((format!("{iname} against {pn} #{fi}.{gi}"), LiftingProblem::new(i.clone(), p.clone(), f.clone(), g.clone())?));
                        }
                    }
                }
            }
        }
        Ok(out)
    };
    match gen() {
        Ok(g) => problems.extend(g),
        Err(e) => {
            r.check("generated squares", Verdict::Fail, format!("error: {e}"));
        }
    }
    problems.truncate(SQUARE_BUDGET);
    r.info("squares cross-checked", problems.len());
    for (name, prob) in problems {
        record(r, format!("square {name}"), || {
            let fwd = all_strict_solutions(&prob, false)?;
            let rev = all_strict_solutions(&prob, true)?;
            let same = fwd.len() == rev.len() && fwd.iter().zip(&rev).all(|(a, b)| a.images() == b.images());
            let first = solve_strict(&prob)?.is_some();
            Ok(pass_if(same && first == !fwd.is_empty(), format!("{} solutions in both orders {same}", fwd.len())))
        });
    }
}
