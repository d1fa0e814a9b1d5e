use std::path::PathBuf;
use std::sync::Arc;

use ssx_core::cli::corpus::{self, CorpusEntry};
use ssx_core::cli::format::{parse_str, to_string, Object};
use ssx_core::gpd::{nerve, nerve_map, FinGroupoid, GpdFunctor};
use ssx_core::lifting::LiftingProblem;
use ssx_core::sgpd::{constant, constant_map, SGpdMap};
use ssx_core::sset::{enumerate_maps, SSetMap, SimplexRef, Subsimplex};

fn functor(g: &Arc<FinGroupoid>, h: &Arc<FinGroupoid>, obj: &[u32], mor: &[u32]) -> GpdFunctor {
    GpdFunctor::new(g.clone(), h.clone(), obj.to_vec(), mor.to_vec()).unwrap()
}

/// Every corpus object, built from the library constructions.
fn constructions() -> Vec<(String, Object)> {
    let t = Arc::new(FinGroupoid::terminal());
    let d2 = Arc::new(FinGroupoid::discrete(2));
    let d3 = Arc::new(FinGroupoid::discrete(3));
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let z3 = Arc::new(FinGroupoid::cyclic(3));
    let z4 = Arc::new(FinGroupoid::cyclic(4));
    let k = Arc::new(FinGroupoid::klein());
    let j = Arc::new(FinGroupoid::interval());
    let c3 = Arc::new(FinGroupoid::chaotic(3));
    let z2pt = Arc::new(z2.disjoint_union(&t));
    let z2z2 = Arc::new(z2.disjoint_union(&z2));
    let groupoids = [
        ("terminal", &t),
        ("discrete2", &d2),
        ("discrete3", &d3),
        ("z2", &z2),
        ("z3", &z3),
        ("z4", &z4),
        ("klein", &k),
        ("interval", &j),
        ("chaotic3", &c3),
        ("z2_plus_point", &z2pt),
        ("z2_plus_z2", &z2z2),
    ];
    let mut out: Vec<(String, Object)> =
        groupoids.iter().map(|(n, g)| (format!("groupoid/{n}"), Object::Groupoid((*g).clone()))).collect();
    let to_t = GpdFunctor::to_terminal;
    let functors = [
        ("z2_to_terminal", to_t(&z2)),
        ("z3_to_terminal", to_t(&z3)),
        ("z4_to_terminal", to_t(&z4)),
        ("klein_to_terminal", to_t(&k)),
        ("interval_to_terminal", to_t(&j)),
        ("discrete2_to_terminal", to_t(&d2)),
        ("chaotic3_to_terminal", to_t(&c3)),
        ("z2_plus_point_to_terminal", to_t(&z2pt)),
        ("z4_to_z2", functor(&z4, &z2, &[0], &[0, 1, 0, 1])),
        ("klein_to_z2", functor(&k, &z2, &[0], &[0, 1, 0, 1])),
        ("z2_to_z4", functor(&z2, &z4, &[0], &[0, 2])),
        ("z2_to_klein", functor(&z2, &k, &[0], &[0, 1])),
        ("point_to_interval", GpdFunctor::point(&j, 0).unwrap()),
        ("point_to_z2", GpdFunctor::point(&z2, 0).unwrap()),
        ("discrete2_to_interval", functor(&d2, &j, &[0, 1], &[0, 3])),
        ("interval_identity", GpdFunctor::identity(&j)),
        ("interval_swap", functor(&j, &j, &[1, 0], &[3, 2, 1, 0])),
        ("z2_identity", GpdFunctor::identity(&z2)),
        ("z2_plus_point_to_z2", functor(&z2pt, &z2, &[0, 0], &[0, 1, 0])),
        ("z2_plus_z2_to_z2", functor(&z2z2, &z2, &[0, 0], &[0, 1, 0, 1])),
        ("interval_to_z2", functor(&j, &z2, &[0, 0], &[0, 1, 1, 0])),
        ("discrete2_to_z2", functor(&d2, &z2, &[0, 0], &[0, 0])),
        ("z3_squaring", functor(&z3, &z3, &[0], &[0, 2, 1])),
        ("z4_inversion", functor(&z4, &z4, &[0], &[0, 3, 2, 1])),
        ("discrete3_to_discrete2", functor(&d3, &d2, &[0, 0, 1], &[0, 0, 1])),
        ("point_to_discrete2", functor(&t, &d2, &[1], &[1])),
        ("interval_to_chaotic3", functor(&j, &c3, &[0, 1], &[0, 1, 3, 4])),
        ("z2_plus_point_to_interval", functor(&z2pt, &j, &[0, 1], &[0, 0, 3])),
    ];
    for (n, f) in &functors {
        out.push((format!("functor/{n}"), Object::Functor(f.clone())));
    }
    let subs = [
        ("delta0", Subsimplex::simplex(0)),
        ("delta1", Subsimplex::simplex(1)),
        ("delta2", Subsimplex::simplex(2)),
        ("delta3", Subsimplex::simplex(3)),
        ("boundary1", Subsimplex::boundary(1)),
        ("boundary2", Subsimplex::boundary(2)),
        ("horn2_0", Subsimplex::horn(2, 0)),
        ("horn2_1", Subsimplex::horn(2, 1)),
        ("horn3_1", Subsimplex::horn(3, 1)),
    ];
    for (n, s) in &subs {
        out.push((format!("sset/{n}"), Object::SSet(s.as_ref().unwrap().sset().clone())));
    }
    for (n, s) in [("horn2_1_in_delta2", Subsimplex::horn(2, 1)), ("boundary1_in_delta1", Subsimplex::boundary(1))] {
        out.push((format!("sset-map/{n}"), Object::SSetMap(s.unwrap().inclusion().unwrap())));
    }
    let cj = Arc::new(constant(&j).unwrap());
    let cz2 = Arc::new(constant(&z2).unwrap());
    out.push(("sgpd/constant_interval".into(), Object::SGpd(cj)));
    out.push(("sgpd/constant_z2".into(), Object::SGpd(cz2)));
    let neg: SGpdMap = constant_map(&to_t(&j)).unwrap();
    out.push(("sgpd-map/constant_interval_to_terminal".into(), Object::SGpdMap(neg)));
    out.push(("sgpd-map/constant_point_to_interval".into(), Object::SGpdMap(constant_map(&GpdFunctor::point(&j, 0).unwrap()).unwrap())));
    // Λ¹₀ against the nerve of the point inclusion into J
    let p = nerve_map(&GpdFunctor::point(&j, 0).unwrap(), 2).unwrap();
    let i = Subsimplex::horn(1, 0).unwrap().inclusion().unwrap();
    let f = SSetMap::constant(i.dom(), p.dom(), SimplexRef::new(0, 0)).unwrap();
    let nj = nerve(&j, 2).unwrap();
    let g = enumerate_maps(i.cod(), &nj)
        .unwrap()
        .into_iter()
        .find(|g| {
            let w = g.images()[1][0];
            !w.is_degenerate() && i.then(g).unwrap().agrees_with(&f.then(&p).unwrap())
        })
        .unwrap();
    let g = SSetMap::new(i.cod().clone(), p.cod().clone(), g.images().to_vec()).unwrap();
    out.push(("problem/horn1_0_into_point_in_interval".into(), Object::Problem(LiftingProblem::new(i, p, f, g).unwrap())));
    out
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[test]
#[ignore]
fn regenerate_corpus() {
    for (name, obj) in constructions() {
        let path = corpus_dir().join(format!("{name}.json"));
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(path, to_string(&obj)).unwrap();
    }
}

#[test]
fn corpus_files_match_constructions() {
    let built = constructions();
    let shipped: Vec<CorpusEntry> = corpus::entries().unwrap();
    assert_eq!(built.len(), shipped.len());
    for (name, obj) in &built {
        let entry = shipped.iter().find(|e| e.name == *name).unwrap_or_else(|| panic!("{name} not shipped"));
        assert_eq!(to_string(&entry.object), to_string(obj), "{name}");
    }
}

#[test]
fn corpus_files_round_trip_byte_identically() {
    for (name, text) in corpus::FILES {
        let obj = parse_str(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(to_string(&obj), *text, "{name}");
    }
}
