//! The `ssx/1` object file format.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::gpd::{FinGroupoid, GpdFunctor};
use crate::lifting::LiftingProblem;
use crate::sgpd::{SGpdMap, SimpGroupoid};
use crate::sset::{FinSSet, SSetMap, SimplexRef, SimplexWord, TupleSSet};

pub const FORMAT: &str = "ssx/1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("at {path}: {source}")]
    Invariant { path: String, source: Error },
}

type FResult<T> = std::result::Result<T, FormatError>;

fn schema(path: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Schema { path: path.into(), message: message.into() }
}

fn invariant(path: impl Into<String>) -> impl FnOnce(Error) -> FormatError {
    let path = path.into();
    move |source| FormatError::Invariant { path, source }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Sset,
    SsetMap,
    Groupoid,
    Functor,
    Sgpd,
    SgpdMap,
    Problem,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Sset => "sset",
            Kind::SsetMap => "sset-map",
            Kind::Groupoid => "groupoid",
            Kind::Functor => "functor",
            Kind::Sgpd => "sgpd",
            Kind::SgpdMap => "sgpd-map",
            Kind::Problem => "problem",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    format: String,
    kind: Kind,
    payload: serde_json::Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexRecord {
    pub faces: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetData {
    #[serde(default)]
    pub truncation: Option<usize>,
    pub dims: Vec<Vec<SimplexRecord>>,
}

/// Images of the nondegenerate simplices, by dimension.
pub type ImageData = Vec<Vec<String>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapData {
    pub dom: SSetData,
    pub cod: SSetData,
    pub images: ImageData,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismRecord {
    pub src: u32,
    pub tgt: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidData {
    pub objects: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub morphisms: Vec<MorphismRecord>,
    /// Triples `[g, f, g ∘ f]`.
    pub compose: Vec<[u32; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorData {
    pub dom: GroupoidData,
    pub cod: GroupoidData,
    pub objects: Vec<u32>,
    pub morphisms: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SGpdData {
    pub obj: SSetData,
    pub mor: SSetData,
    pub src: ImageData,
    pub tgt: ImageData,
    pub ident: ImageData,
    pub invert: ImageData,
    /// Images over the pullback of `tgt` and `src`, in its canonical order.
    pub comp: ImageData,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SGpdMapData {
    pub dom: SGpdData,
    pub cod: SGpdData,
    pub on_obj: ImageData,
    pub on_mor: ImageData,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemData {
    pub i: MapData,
    pub p: MapData,
    pub f: ImageData,
    pub g: ImageData,
}

/// A validated object read from a file.
#[derive(Debug, Clone)]
pub enum Object {
    SSet(Arc<FinSSet>),
    SSetMap(SSetMap),
    Groupoid(Arc<FinGroupoid>),
    Functor(GpdFunctor),
    SGpd(Arc<SimpGroupoid>),
    SGpdMap(SGpdMap),
    Problem(LiftingProblem),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::SSet(_) => Kind::Sset,
            Object::SSetMap(_) => Kind::SsetMap,
            Object::Groupoid(_) => Kind::Groupoid,
            Object::Functor(_) => Kind::Functor,
            Object::SGpd(_) => Kind::Sgpd,
            Object::SGpdMap(_) => Kind::SgpdMap,
            Object::Problem(_) => Kind::Problem,
        }
    }
}

pub fn format_word(w: &SimplexWord) -> String {
    w.to_string()
}

/// Parses `@d.i` optionally followed by ` s[i₁,…,i_r]` with decreasing indices.
pub fn parse_word(s: &str) -> std::result::Result<SimplexWord, String> {
    let s = s.trim();
    let (base, degens) = match s.split_once(' ') {
        Some((b, rest)) => (b, Some(rest.trim())),
        None => (s, None),
    };
    let body = base.strip_prefix('@').ok_or_else(|| format!("word {s:?} must start with '@'"))?;
    let (d, i) = body.split_once('.').ok_or_else(|| format!("word {s:?} lacks '.'"))?;
    let d: usize = d.parse().map_err(|_| format!("bad dimension in {s:?}"))?;
    let i: usize = i.parse().map_err(|_| format!("bad index in {s:?}"))?;
    let degens = match degens {
        None => Vec::new(),
        Some(r) => {
            let inner = r
                .strip_prefix("s[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| format!("degeneracies in {s:?} must read s[…]"))?;
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad degeneracy index in {s:?}")))
                .collect::<std::result::Result<Vec<_>, _>>()?
        }
    };
    SimplexWord::with_degeneracies(SimplexRef::new(d, i), &degens).map_err(|e| e.to_string())
}

fn words(data: &[String], path: &str) -> FResult<Vec<SimplexWord>> {
    data.iter()
        .enumerate()
        .map(|(k, s)| parse_word(s).map_err(|m| schema(format!("{path}[{k}]"), m)))
        .collect()
}

fn images_of(data: &ImageData, path: &str) -> FResult<Vec<Vec<SimplexWord>>> {
    data.iter().enumerate().map(|(n, l)| words(l, &format!("{path}[{n}]"))).collect()
}

fn image_data(m: &SSetMap) -> ImageData {
    m.images().iter().map(|l| l.iter().map(format_word).collect()).collect()
}

pub fn sset_data(a: &FinSSet) -> SSetData {
    let dims = (0..a.counts().len())
        .map(|n| {
            a.nondegenerate(n)
                .map(|x| SimplexRecord {
                    faces: a.faces_of(x).iter().map(format_word).collect(),
                    label: a.label(x).map(str::to_string),
                })
                .collect()
        })
        .collect();
    SSetData { truncation: a.truncation(), dims }
}

pub fn sset_from(data: &SSetData, path: &str) -> FResult<Arc<FinSSet>> {
    let mut faces = Vec::with_capacity(data.dims.len());
    let mut labels = Vec::with_capacity(data.dims.len());
    for (n, layer) in data.dims.iter().enumerate() {
        let mut fl = Vec::with_capacity(layer.len());
        for (x, r) in layer.iter().enumerate() {
            fl.push(words(&r.faces, &format!("{path}.dims[{n}][{x}].faces"))?);
        }
        faces.push(fl);
        labels.push(layer.iter().map(|r| r.label.clone()).collect());
    }
    let a = FinSSet::with_labels(faces, labels, data.truncation).map_err(invariant(path))?;
    a.check_identities().map_err(invariant(path))?;
    Ok(Arc::new(a))
}

fn map_from(dom: &Arc<FinSSet>, cod: &Arc<FinSSet>, data: &ImageData, path: &str) -> FResult<SSetMap> {
    SSetMap::new(dom.clone(), cod.clone(), images_of(data, path)?).map_err(invariant(path))
}

pub fn map_data(m: &SSetMap) -> MapData {
    MapData { dom: sset_data(m.dom()), cod: sset_data(m.cod()), images: image_data(m) }
}

fn map_with_ends(data: &MapData, path: &str) -> FResult<SSetMap> {
    let dom = sset_from(&data.dom, &format!("{path}.dom"))?;
    let cod = sset_from(&data.cod, &format!("{path}.cod"))?;
    map_from(&dom, &cod, &data.images, &format!("{path}.images"))
}

pub fn groupoid_data(g: &FinGroupoid) -> GroupoidData {
    let labels: Vec<String> = g.objects().map(|x| g.object_label(x).to_string()).collect();
    let default = labels.iter().enumerate().all(|(i, l)| *l == i.to_string());
    let morphisms = g.morphisms().map(|f| MorphismRecord { src: g.src(f), tgt: g.tgt(f) }).collect();
    let mut compose = Vec::new();
    for f in g.morphisms() {
        for gg in g.morphisms() {
            if let Some(h) = g.compose(gg, f) {
                compose.push([gg, f, h]);
            }
        }
    }
    GroupoidData { objects: g.object_count(), labels: (!default).then_some(labels), morphisms, compose }
}

pub fn groupoid_from(data: &GroupoidData, path: &str) -> FResult<Arc<FinGroupoid>> {
    let n = data.morphisms.len();
    let mut table: HashMap<(u32, u32), u32> = HashMap::new();
    for (k, &[g, f, h]) in data.compose.iter().enumerate() {
        if [g, f, h].iter().any(|&m| m as usize >= n) {
            return Err(schema(format!("{path}.compose[{k}]"), "morphism index out of range"));
        }
        if table.insert((g, f), h).is_some() {
            return Err(schema(format!("{path}.compose[{k}]"), format!("duplicate composite of ({g}, {f})")));
        }
    }
    for f in 0..n {
        for g in 0..n {
            if data.morphisms[g].src == data.morphisms[f].tgt && !table.contains_key(&(g as u32, f as u32)) {
                return Err(schema(format!("{path}.compose"), format!("missing composite of ({g}, {f})")));
            }
        }
    }
    let src = data.morphisms.iter().map(|m| m.src).collect();
    let tgt = data.morphisms.iter().map(|m| m.tgt).collect();
    let mut g = FinGroupoid::new(data.objects, src, tgt, |g, f| table[&(g, f)]).map_err(invariant(path))?;
    if let Some(l) = &data.labels {
        g = g.with_labels(l.clone()).map_err(invariant(format!("{path}.labels")))?;
    }
    Ok(Arc::new(g))
}

pub fn functor_data(f: &GpdFunctor) -> FunctorData {
    FunctorData {
        dom: groupoid_data(f.dom()),
        cod: groupoid_data(f.cod()),
        objects: f.object_table().to_vec(),
        morphisms: f.morphism_table().to_vec(),
    }
}

fn functor_from(data: &FunctorData, path: &str) -> FResult<GpdFunctor> {
    let dom = groupoid_from(&data.dom, &format!("{path}.dom"))?;
    let cod = groupoid_from(&data.cod, &format!("{path}.cod"))?;
    GpdFunctor::new(dom, cod, data.objects.clone(), data.morphisms.clone()).map_err(invariant(path))
}

pub fn sgpd_data(x: &SimpGroupoid) -> SGpdData {
    SGpdData {
        obj: sset_data(x.obj()),
        mor: sset_data(x.mor()),
        src: image_data(x.src()),
        tgt: image_data(x.tgt()),
        ident: image_data(x.ident()),
        invert: image_data(x.invert()),
        comp: image_data(x.comp()),
    }
}

pub fn sgpd_from(data: &SGpdData, path: &str) -> FResult<Arc<SimpGroupoid>> {
    let obj = sset_from(&data.obj, &format!("{path}.obj"))?;
    let mor = sset_from(&data.mor, &format!("{path}.mor"))?;
    let src = map_from(&mor, &obj, &data.src, &format!("{path}.src"))?;
    let tgt = map_from(&mor, &obj, &data.tgt, &format!("{path}.tgt"))?;
    let ident = map_from(&obj, &mor, &data.ident, &format!("{path}.ident"))?;
    let invert = map_from(&mor, &mor, &data.invert, &format!("{path}.invert"))?;
    let pairs = TupleSSet::pullback_by_levels(&tgt, &src).map_err(invariant(path))?;
    let cpath = format!("{path}.comp");
    let comp = map_from(pairs.sset(), &mor, &data.comp, &cpath)?;
    let table: HashMap<(SimplexWord, SimplexWord), SimplexWord> = pairs
        .sset()
        .all_nondegenerate()
        .map(|x| {
            let t = pairs.tuple(x);
            ((t[0], t[1]), comp.image_of(x))
        })
        .collect();
    let x = SimpGroupoid::new(obj, mor, src, tgt, ident, invert, |f, g| {
        table.get(&(*f, *g)).copied().ok_or_else(|| Error::Invalid(format!("no composite for ({f}, {g})")))
    })
    .map_err(invariant(path))?;
    Ok(Arc::new(x))
}

pub fn sgpd_map_data(p: &SGpdMap) -> SGpdMapData {
    SGpdMapData {
        dom: sgpd_data(p.dom()),
        cod: sgpd_data(p.cod()),
        on_obj: image_data(p.on_obj()),
        on_mor: image_data(p.on_mor()),
    }
}

fn sgpd_map_from(data: &SGpdMapData, path: &str) -> FResult<SGpdMap> {
    let dom = sgpd_from(&data.dom, &format!("{path}.dom"))?;
    let cod = sgpd_from(&data.cod, &format!("{path}.cod"))?;
    let on_obj = map_from(dom.obj(), cod.obj(), &data.on_obj, &format!("{path}.on_obj"))?;
    let on_mor = map_from(dom.mor(), cod.mor(), &data.on_mor, &format!("{path}.on_mor"))?;
    SGpdMap::new(dom, cod, on_obj, on_mor).map_err(invariant(path))
}

pub fn problem_data(prob: &LiftingProblem) -> ProblemData {
    ProblemData { i: map_data(&prob.i), p: map_data(&prob.p), f: image_data(&prob.f), g: image_data(&prob.g) }
}

fn problem_from(data: &ProblemData, path: &str) -> FResult<LiftingProblem> {
    let i = map_with_ends(&data.i, &format!("{path}.i"))?;
    let p = map_with_ends(&data.p, &format!("{path}.p"))?;
    let f = map_from(i.dom(), p.dom(), &data.f, &format!("{path}.f"))?;
    let g = map_from(i.cod(), p.cod(), &data.g, &format!("{path}.g"))?;
    LiftingProblem::new(i, p, f, g).map_err(invariant(path))
}

fn payload<T: DeserializeOwned>(v: serde_json::Value) -> FResult<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        schema(if path == "." { "payload".to_string() } else { format!("payload.{path}") }, e.into_inner().to_string())
    })
}

/// Parses and validates the text of an object file.
pub fn parse_str(text: &str) -> FResult<Object> {
    let mut de = serde_json::Deserializer::from_str(text);
    let env: Envelope = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            let text = inner.to_string();
            let suffix = format!(" at line {} column {}", inner.line(), inner.column());
            let message = text.strip_suffix(&suffix).unwrap_or(&text).to_string();
            FormatError::Syntax { line: inner.line(), column: inner.column(), message }
        } else {
            schema(path, inner.to_string())
        }
    })?;
    if env.format != FORMAT {
        return Err(schema("format", format!("unsupported format {:?}, expected {FORMAT:?}", env.format)));
    }
    let p = "payload";
    Ok(match env.kind {
        Kind::Sset => Object::SSet(sset_from(&payload(env.payload)?, p)?),
        Kind::SsetMap => Object::SSetMap(map_with_ends(&payload(env.payload)?, p)?),
        Kind::Groupoid => Object::Groupoid(groupoid_from(&payload(env.payload)?, p)?),
        Kind::Functor => Object::Functor(functor_from(&payload(env.payload)?, p)?),
        Kind::Sgpd => Object::SGpd(sgpd_from(&payload(env.payload)?, p)?),
        Kind::SgpdMap => Object::SGpdMap(sgpd_map_from(&payload(env.payload)?, p)?),
        Kind::Problem => Object::Problem(problem_from(&payload(env.payload)?, p)?),
    })
}

/// Serializes an object; the output ends with a newline.
pub fn to_string(obj: &Object) -> String {
    let payload = match obj {
        Object::SSet(a) => serde_json::to_value(sset_data(a)),
        Object::SSetMap(m) => serde_json::to_value(map_data(m)),
        Object::Groupoid(g) => serde_json::to_value(groupoid_data(g)),
        Object::Functor(f) => serde_json::to_value(functor_data(f)),
        Object::SGpd(x) => serde_json::to_value(sgpd_data(x)),
        Object::SGpdMap(p) => serde_json::to_value(sgpd_map_data(p)),
        Object::Problem(prob) => serde_json::to_value(problem_data(prob)),
    }
    .expect("payloads serialize");
    let env = Envelope { format: FORMAT.to_string(), kind: obj.kind(), payload };
    let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
    s.push('\n');
    s
}

pub fn parse(path: &Path) -> FResult<Object> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse_str(&text)
}

pub fn serialize(obj: &Object, path: &Path) -> FResult<()> {
    std::fs::write(path, to_string(obj)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgpd::{check_reedy, constant, SGpdMap};
    use crate::sset::Subsimplex;

    fn groupoid_text(table: &[Vec<u32>]) -> String {
        let n = table.len();
        let morphisms: Vec<_> = (0..n).map(|_| serde_json::json!({"src": 0, "tgt": 0})).collect();
        let mut compose = Vec::new();
        for (g, row) in table.iter().enumerate() {
            for (f, &gf) in row.iter().enumerate() {
                compose.push([g as u32, f as u32, gf]);
            }
        }
        let payload = serde_json::json!({"objects": 1, "morphisms": morphisms, "compose": compose});
        serde_json::json!({"format": FORMAT, "kind": "groupoid", "payload": payload}).to_string()
    }

    #[test]
    fn simplex_round_trips() {
        let d2 = Subsimplex::simplex(2).unwrap().sset().clone();
        let text = to_string(&Object::SSet(d2.clone()));
        let Object::SSet(back) = parse_str(&text).unwrap() else { panic!("wrong kind") };
        assert_eq!(*back, *d2);
        assert_eq!(to_string(&Object::SSet(back)), text);
    }

    #[test]
    fn non_associative_table_names_the_triple() {
        // a loop of order 5 in which every element is its own inverse
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = parse_str(&groupoid_text(&table)).unwrap_err();
        let FormatError::Invariant { path, source: Error::Axiom(msg) } = &err else { panic!("{err}") };
        assert_eq!(path, "payload");
        assert!(msg.contains("not associative at ("), "{msg}");
    }

    #[test]
    fn missing_composite_is_a_schema_error() {
        let mut text = groupoid_text(&[vec![0, 1], vec![1, 0]]);
        text = text.replace("[1,1,0]", "").replace(",]", "]");
        assert!(matches!(parse_str(&text), Err(FormatError::Schema { .. } | FormatError::Invariant { .. })));
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = parse_str("{\n  \"format\": \"ssx/1\",\n  \"kind\": ").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }), "{err}");
        let err = parse_str(r#"{"format": "ssx/1", "kind": "sset", "payload": {"dims": [[{"faces": 3}]]}}"#).unwrap_err();
        let FormatError::Schema { path, .. } = &err else { panic!("{err}") };
        assert_eq!(path, "payload.dims[0][0].faces");
    }

    #[test]
    fn constant_interval_file_fails_reedy_at_one() {
        let j = Arc::new(FinGroupoid::interval());
        let x = Arc::new(constant(&j).unwrap());
        let text = to_string(&Object::SGpd(x));
        let Object::SGpd(back) = parse_str(&text).unwrap() else { panic!("wrong kind") };
        let pt = Arc::new(constant(&Arc::new(FinGroupoid::terminal())).unwrap());
        let v = SimplexRef::new(0, 0);
        let p = SGpdMap::new(
            back.clone(),
            pt.clone(),
            SSetMap::constant(back.obj(), pt.obj(), v).unwrap(),
            SSetMap::constant(back.mor(), pt.mor(), v).unwrap(),
        )
        .unwrap();
        let r = check_reedy(&p, 2).unwrap();
        assert!(r.levels[0].fibration);
        assert!(!r.levels[1].fibration);
    }
}
