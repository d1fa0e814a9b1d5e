//! Command-line surface and dispatch.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use thiserror::Error;

use super::corpus::load_dir;
use super::format::{parse, parse_str, FormatError, Object};
use super::report::{Report, Verdict};
use super::suites::{run_suite, SuiteError, SuiteOptions};
use crate::bisset::{d_star, sing, sing_map};
use crate::gpd::{classify_gpd_map, fiber_products, nerve, nerve_map, GpdFunctor};
use crate::lifting::{classify_sset_fibration, solve_strict, solve_weak, verify_weak_solution, FibrationMode};
use crate::sgpd::{check_reedy, constant, sgpd_fiber_product, FiberMode, SGpdMap, SimpGroupoid};
use crate::sset::{homology, FinSSet, MapSearch, SSetMap, SimplexRef, Subsimplex};

/// Dimensions above this grow the chaotic and nerve constructions past interactive sizes.
pub const DEFAULT_DIM: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "ssx", version, about = "Exact checks on finite simplicial sets, groupoids and simplicial groupoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Dimension bound D. Costs grow exponentially: chaotic resolutions of Z/4 are already out
    /// of reach at D=3, and most checks above D=4 take minutes or more.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM)]
    pub dim: usize,
    /// check-kan: kan | trivial-kan | weak-kan | weak-trivial-kan; fiber-product: strict | lax;
    /// solve-lift: strict | weak.
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// dstar: the simplex Δⁿ the input is embedded in.
    #[arg(long, global = true)]
    pub ambient: Option<usize>,
    /// Write the machine-readable report here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// verify-suite: a directory of extra instance files.
    #[arg(long = "seed-corpus", global = true)]
    pub seed_corpus: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize an object file.
    Describe { file: PathBuf },
    /// Integral homology through --dim of an sset, the nerve of a groupoid, or sing of an sgpd.
    Homology { file: PathBuf },
    /// The diagonal of the nerve of a simplicial groupoid (or of a constant one on a groupoid).
    Sing { file: PathBuf },
    /// d* of a simplicial subset of Δⁿ, row by row, with the comparison into A ⊠ Δⁿ.
    Dstar { file: PathBuf },
    /// Kan-type lifting checks of an sset, sset map, functor (through its nerve) or sgpd map (through sing).
    CheckKan { file: PathBuf },
    /// Reedy gap conditions of a map of simplicial groupoids.
    CheckReedy { file: PathBuf },
    /// Strict or lax fiber product of two functors or two sgpd maps with a common codomain.
    FiberProduct { q: PathBuf, p: PathBuf },
    /// Solve a lifting problem strictly or weakly.
    SolveLift { file: PathBuf },
    /// Run a verification suite over the corpus.
    VerifySuite { id: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error(transparent)]
    Library(#[from] crate::Error),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    /// Every error is a usage or input error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

type CliResult<T> = Result<T, CliError>;

fn wrong_kind(cmd: &str, obj: &Object, expected: &str) -> CliError {
    CliError::Usage(format!("{cmd} expects {expected}, got {}", obj.kind()))
}

fn counts(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

impl Cli {
    fn echo(&self) -> String {
        let mut s = match &self.command {
            Command::Describe { file } => format!("describe {}", file.display()),
            Command::Homology { file } => format!("homology {}", file.display()),
            Command::Sing { file } => format!("sing {}", file.display()),
            Command::Dstar { file } => format!("dstar {}", file.display()),
            Command::CheckKan { file } => format!("check-kan {}", file.display()),
            Command::CheckReedy { file } => format!("check-reedy {}", file.display()),
            Command::FiberProduct { q, p } => format!("fiber-product {} {}", q.display(), p.display()),
            Command::SolveLift { file } => format!("solve-lift {}", file.display()),
            Command::VerifySuite { id } => format!("verify-suite {id}"),
        };
        s.push_str(&format!(" --dim {}", self.dim));
        if let Some(m) = &self.mode {
            s.push_str(&format!(" --mode {m}"));
        }
        if let Some(a) = self.ambient {
            s.push_str(&format!(" --ambient {a}"));
        }
        if let Some(d) = &self.seed_corpus {
            s.push_str(&format!(" --seed-corpus {}", d.display()));
        }
        s
    }

    fn check_flags(&self) -> CliResult<()> {
        let (mode_ok, ambient_ok, seed_ok) = match self.command {
            Command::CheckKan { .. } | Command::FiberProduct { .. } | Command::SolveLift { .. } => (true, false, false),
            Command::Dstar { .. } => (false, true, false),
            Command::VerifySuite { .. } => (false, false, true),
            _ => (false, false, false),
        };
        if self.mode.is_some() && !mode_ok {
            return Err(CliError::Usage("--mode does not apply to this command".into()));
        }
        if self.ambient.is_some() && !ambient_ok {
            return Err(CliError::Usage("--ambient applies only to dstar".into()));
        }
        if self.seed_corpus.is_some() && !seed_ok {
            return Err(CliError::Usage("--seed-corpus applies only to verify-suite".into()));
        }
        Ok(())
    }
}

/// Runs the command and returns its report; the caller prints it and writes `--out`.
pub fn dispatch(cli: &Cli) -> CliResult<Report> {
    cli.check_flags()?;
    let start = Instant::now();
    let d = cli.dim;
    let mut r = match &cli.command {
        Command::VerifySuite { id } => {
            let extra = match &cli.seed_corpus {
                Some(dir) => load_dir(dir)?,
                None => Vec::new(),
            };
            let mut r = run_suite(id, &SuiteOptions { dim: d, extra })?;
            r.command = cli.echo();
            return Ok(r);
        }
        Command::Describe { file } => describe(&parse(file)?)?,
        Command::Homology { file } => homology_cmd(&parse(file)?, d)?,
        Command::Sing { file } => sing_cmd(&parse(file)?, d)?,
        Command::Dstar { file } => dstar_cmd(&parse(file)?, cli.ambient, d)?,
        Command::CheckKan { file } => check_kan(&parse(file)?, cli.mode.as_deref(), d)?,
        Command::CheckReedy { file } => check_reedy_cmd(&parse(file)?, d)?,
        Command::FiberProduct { q, p } => fiber_product_cmd(&parse(q)?, &parse(p)?, cli.mode.as_deref())?,
        Command::SolveLift { file } => solve_lift(&parse(file)?, cli.mode.as_deref())?,
    };
    r.command = cli.echo();
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Runs `describe`, `homology`, `sing` or `check-kan` on an object given as file text.
/// Reads no clock, so it also runs where timing is unavailable.
pub fn run_text(command: &str, text: &str, dim: usize, mode: Option<&str>) -> CliResult<Report> {
    let obj = parse_str(text)?;
    let mut r = match command {
        "describe" => describe(&obj)?,
        "homology" => homology_cmd(&obj, dim)?,
        "sing" => sing_cmd(&obj, dim)?,
        "check-kan" => check_kan(&obj, mode, dim)?,
        other => return Err(CliError::Usage(format!("unknown command {other:?}"))),
    };
    r.command = format!("{command} --dim {dim}");
    Ok(r)
}

/// Writes the machine-readable report to `path`.
pub fn write_report(r: &Report, path: &Path) -> CliResult<()> {
    std::fs::write(path, r.to_json()).map_err(|source| CliError::Write { path: path.display().to_string(), source })
}

fn describe(obj: &Object) -> CliResult<Report> {
    let mut r = Report::new("");
    r.info("kind", obj.kind());
    match obj {
        Object::SSet(a) => {
            describe_sset(&mut r, "", a);
            let ok = a.check_identities();
            r.check("simplicial identities", Verdict::from_bool(ok.is_ok()), ok.err().map(|e| e.to_string()).unwrap_or_default());
        }
        Object::SSetMap(f) => {
            describe_sset(&mut r, "domain ", f.dom());
            describe_sset(&mut r, "codomain ", f.cod());
            let flags = f.check();
            r.info("monomorphism", flags.mono).info("isomorphism", flags.iso);
        }
        Object::Groupoid(g) => {
            let mut comps = g.components();
            comps.sort_unstable();
            comps.dedup();
            r.info("objects", g.object_count()).info("morphisms", g.morphism_count()).info("components", comps.len());
        }
        Object::Functor(f) => {
            r.info("domain", format!("{} objects, {} morphisms", f.dom().object_count(), f.dom().morphism_count()));
            r.info("codomain", format!("{} objects, {} morphisms", f.cod().object_count(), f.cod().morphism_count()));
            let flags = classify_gpd_map(f);
            r.info("isofibration", flags.isofibration)
                .info("cofibration", flags.cofibration)
                .info("equivalence", flags.equivalence)
                .info("trivial cofibration", flags.trivial_cofibration);
        }
        Object::SGpd(x) => {
            describe_sset(&mut r, "objects ", x.obj());
            describe_sset(&mut r, "morphisms ", x.mor());
            let ok = x.verify_axioms();
            r.check("groupoid axioms", Verdict::from_bool(ok.is_ok()), ok.err().map(|e| e.to_string()).unwrap_or_default());
        }
        Object::SGpdMap(p) => {
            describe_sset(&mut r, "domain objects ", p.dom().obj());
            describe_sset(&mut r, "codomain objects ", p.cod().obj());
        }
        Object::Problem(p) => {
            describe_sset(&mut r, "A ", p.i.dom());
            describe_sset(&mut r, "B ", p.i.cod());
            describe_sset(&mut r, "X ", p.p.dom());
            describe_sset(&mut r, "Y ", p.p.cod());
        }
    }
    Ok(r)
}

fn describe_sset(r: &mut Report, prefix: &str, a: &FinSSet) {
    r.info(format!("{prefix}nondegenerate counts"), counts(&a.counts()));
    if let Some(t) = a.truncation() {
        r.info(format!("{prefix}truncation"), t);
    }
}

fn homology_cmd(obj: &Object, d: usize) -> CliResult<Report> {
    let a = match obj {
        Object::SSet(a) => a.clone(),
        Object::Groupoid(g) => nerve(g, d + 1)?,
        Object::SGpd(x) => sing(x, d + 1)?.sset,
        o => return Err(wrong_kind("homology", o, "an sset, groupoid or sgpd")),
    };
    let h = homology(&a, d)?;
    let mut r = Report::new("");
    for (n, (rank, tors)) in h.ranks.iter().zip(&h.torsion).enumerate() {
        let t: Vec<String> = tors.iter().map(|q| format!("Z/{q}")).collect();
        r.info(format!("H{n}"), format!("rank {rank}, torsion [{}]", t.join(", ")));
    }
    r.info("profile", &h);
    Ok(r)
}

fn as_sgpd(cmd: &str, obj: &Object) -> CliResult<Arc<SimpGroupoid>> {
    match obj {
        Object::SGpd(x) => Ok(x.clone()),
        Object::Groupoid(g) => Ok(Arc::new(constant(g)?)),
        o => Err(wrong_kind(cmd, o, "an sgpd or groupoid")),
    }
}

fn sing_cmd(obj: &Object, d: usize) -> CliResult<Report> {
    let mut r = Report::new("");
    if let Object::SGpdMap(p) = obj {
        let (dx, dy, f) = sing_map(p, d)?;
        r.info("domain counts", counts(&dx.sset.counts())).info("codomain counts", counts(&dy.sset.counts()));
        let flags = f.check();
        r.info("monomorphism", flags.mono).info("isomorphism", flags.iso);
        return Ok(r);
    }
    let x = as_sgpd("sing", obj)?;
    let s = sing(&x, d)?;
    r.info("counts", counts(&s.sset.counts()));
    Ok(r)
}

/// Connected components of a simplicial set, by its vertices and edges.
fn components(a: &FinSSet) -> usize {
    let n = a.count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let edges = if a.counts().len() > 1 { a.count(1) } else { 0 };
    for e in 0..edges {
        let f = a.faces_of(SimplexRef::new(1, e));
        let (u, v) = (find(&mut parent, f[0].base().index()), find(&mut parent, f[1].base().index()));
        parent[u] = v;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

fn dstar_cmd(obj: &Object, ambient: Option<usize>, d: usize) -> CliResult<Report> {
    let Object::SSet(a) = obj else {
        return Err(wrong_kind("dstar", obj, "an sset"));
    };
    let n = ambient.unwrap_or_else(|| a.dim());
    let simplex = Subsimplex::simplex(n)?.sset().clone();
    let mut gamma = None;
    MapSearch::new(a, &simplex)?.run(|im| {
        let f = SSetMap::new(a.clone(), simplex.clone(), im.to_vec());
        match f {
            Ok(f) if f.check().mono => {
                gamma = Some(f);
                false
            }
            _ => true,
        }
    })?;
    let gamma = gamma.ok_or_else(|| CliError::Usage(format!("the input has no monomorphism into Δ^{n}")))?;
    let h = d.min(a.truncation().unwrap_or(d));
    let ds = d_star(a, Some(&gamma), h)?;
    let cmp = ds.comparison.expect("comparison requested");
    let mut r = Report::new("");
    r.info("ambient", format!("Δ^{n}"));
    for m in 0..=h {
        let row = ds.view.row(m)?;
        let edges = if row.counts().len() > 1 { row.count(1) } else { 0 };
        r.info(format!("row {m}"), format!("counts {}, components {}, edges {edges}", counts(&row.counts()), components(&row)));
        let mono = cmp.row(m).check().mono;
        r.check(format!("row {m} comparison into A ⊠ Δ^{n}"), Verdict::from_bool(mono), if mono { "mono" } else { "not mono" });
    }
    Ok(r)
}

fn parse_mode<T>(mode: Option<&str>, default: T, parse: impl Fn(&str) -> Option<T>, expected: &str) -> CliResult<T> {
    match mode {
        None => Ok(default),
        Some(m) => parse(m).ok_or_else(|| CliError::Usage(format!("unknown mode {m:?}; expected {expected}"))),
    }
}

fn check_kan(obj: &Object, mode: Option<&str>, d: usize) -> CliResult<Report> {
    let mode = parse_mode(mode, FibrationMode::Kan, FibrationMode::parse, "kan, trivial-kan, weak-kan or weak-trivial-kan")?;
    let p = match obj {
        Object::SSet(a) => SSetMap::constant(a, Subsimplex::simplex(0)?.sset(), SimplexRef::new(0, 0))?,
        Object::SSetMap(f) => f.clone(),
        Object::Functor(f) => nerve_map(f, d)?,
        Object::SGpdMap(p) => sing_map(p, d)?.2,
        o => return Err(wrong_kind("check-kan", o, "an sset, sset map, functor or sgpd map")),
    };
    let k = classify_sset_fibration(&p, mode, d)?;
    let mut r = Report::new("");
    r.info("squares", k.squares);
    if k.weak_rescues > 0 {
        r.info("weak rescues", k.weak_rescues);
    }
    let detail = format!("{} through dimension {d}", mode.name());
    r.check_with(mode.name(), Verdict::from_bool(k.passed), detail, k.witness.map(|w| w.to_string()));
    Ok(r)
}

fn check_reedy_cmd(obj: &Object, d: usize) -> CliResult<Report> {
    let Object::SGpdMap(p) = obj else {
        return Err(wrong_kind("check-reedy", obj, "an sgpd map"));
    };
    let rep = check_reedy(p, d)?;
    let mut r = Report::new("");
    for l in &rep.levels {
        let witness = l.witness.map(|(x, f)| format!("object {x} of the gap target, morphism {f} does not lift"));
        r.check_with(format!("n={} gap isofibration", l.n), Verdict::from_bool(l.fibration), "", witness);
    }
    r.info("cofibration", rep.cofibration()).info("objectwise cofibration", rep.objectwise_cofibration());
    Ok(r)
}

fn fiber_product_cmd(q: &Object, p: &Object, mode: Option<&str>) -> CliResult<Report> {
    let parse = |s: &str| match s {
        "strict" => Some(FiberMode::Strict),
        "lax" => Some(FiberMode::Lax),
        _ => None,
    };
    let mode = parse_mode(mode, FiberMode::Strict, parse, "strict or lax")?;
    let mut r = Report::new("");
    match (q, p) {
        (Object::Functor(q), Object::Functor(p)) => {
            let q = GpdFunctor::new(q.dom().clone(), p.cod().clone(), q.object_table().to_vec(), q.morphism_table().to_vec())?;
            let fp = fiber_products(&q, p)?;
            let g = if mode == FiberMode::Strict { &fp.strict } else { &fp.lax };
            r.info("objects", g.object_count()).info("morphisms", g.morphism_count());
            if classify_gpd_map(&q).isofibration || classify_gpd_map(p).isofibration {
                let eq = classify_gpd_map(&fp.comparison).equivalence;
                r.check("strict → lax comparison is an equivalence", Verdict::from_bool(eq), "one leg is an isofibration");
            }
        }
        (Object::SGpdMap(q), Object::SGpdMap(p)) => {
            let p = recod(p, q.cod())?;
            let fp = sgpd_fiber_product(q, &p, mode)?;
            r.info("object counts", counts(&fp.groupoid.obj().counts()));
            r.info("morphism counts", counts(&fp.groupoid.mor().counts()));
        }
        _ => return Err(CliError::Usage("fiber-product expects two functors or two sgpd maps".into())),
    }
    Ok(r)
}

fn recod(f: &SGpdMap, cod: &Arc<SimpGroupoid>) -> CliResult<SGpdMap> {
    if f.cod().obj() != cod.obj() || f.cod().mor() != cod.mor() {
        return Err(CliError::Usage("the two legs have different codomains".into()));
    }
    let on_obj = SSetMap::new(f.dom().obj().clone(), cod.obj().clone(), f.on_obj().images().to_vec())?;
    let on_mor = SSetMap::new(f.dom().mor().clone(), cod.mor().clone(), f.on_mor().images().to_vec())?;
    Ok(SGpdMap::new(f.dom().clone(), cod.clone(), on_obj, on_mor)?)
}

fn solve_lift(obj: &Object, mode: Option<&str>) -> CliResult<Report> {
    let Object::Problem(prob) = obj else {
        return Err(wrong_kind("solve-lift", obj, "a problem"));
    };
    let weak = parse_mode(mode, false, |s| matches!(s, "strict" | "weak").then_some(s == "weak"), "strict or weak")?;
    let mut r = Report::new("");
    if weak {
        match solve_weak(prob)? {
            Some(sol) => {
                let ok = verify_weak_solution(prob, &sol)?;
                r.check_with("weak lift", Verdict::from_bool(ok), "verified", Some(images(&sol.h)));
            }
            None => {
                r.check_with("weak lift", Verdict::Fail, "no lift up to fiberwise homotopy", Some("exhaustive search".into()));
            }
        }
    } else {
        match solve_strict(prob)? {
            Some(h) => {
                r.check_with("strict lift", Verdict::Pass, "", Some(images(&h)));
            }
            None => {
                r.check_with("strict lift", Verdict::Fail, "no strict lift", Some("exhaustive search".into()));
            }
        }
    }
    Ok(r)
}

fn images(h: &SSetMap) -> String {
    let parts: Vec<String> = h.images().iter().map(|l| l.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")).collect();
    format!("h = [{}]", parts.join(" | "))
}
