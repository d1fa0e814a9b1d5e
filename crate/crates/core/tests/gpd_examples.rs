use std::sync::Arc;

use ssx_core::gpd::*;
use ssx_core::sset::*;

fn padded(counts: Vec<usize>, d: usize) -> Vec<usize> {
    let mut c = counts;
    c.resize(d + 1, 0);
    c
}

#[test]
fn classify_examples() {
    let j = Arc::new(FinGroupoid::interval());
    let t = classify_gpd_map(&GpdFunctor::to_terminal(&j));
    assert!(t.isofibration);
    let incl = GpdFunctor::point(&j, 0).unwrap();
    let f = classify_gpd_map(&incl);
    assert!(!f.isofibration);
    assert!(f.trivial_cofibration);
    assert_eq!(f.trivial_cofibration, f.cofibration && f.equivalence);
    // the missing lift is the isomorphism 1 → 0
    let (x, m) = incl.isofibration_witness().unwrap();
    assert_eq!(x, 0);
    assert_eq!((j.src(m), j.tgt(m)), (1, 0));
}

#[test]
fn nerve_examples() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    assert_eq!(padded(nerve(&z2, 3).unwrap().counts(), 3), vec![1, 1, 1, 1]);
    let j = Arc::new(FinGroupoid::interval());
    assert_eq!(padded(nerve(&j, 3).unwrap().counts(), 3), vec![2, 2, 2, 2]);
    let d = Arc::new(FinGroupoid::discrete(2));
    assert_eq!(padded(nerve(&d, 3).unwrap().counts(), 3), vec![2, 0, 0, 0]);
}

/// The nerve rebuilt independently from all composable strings via the keyed builder.
struct Strings(Arc<FinGroupoid>);

impl KeyedLevels for Strings {
    type Key = NerveString;
    fn level(&self, n: usize) -> Vec<NerveString> {
        let g = &self.0;
        let mut out: Vec<NerveString> = g.objects().map(|x| (x, Vec::new())).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for (x, s) in &out {
                let end = s.last().map_or(*x, |&f| g.tgt(f));
                for f in g.morphisms().filter(|&f| g.src(f) == end) {
                    let mut t = s.clone();
                    t.push(f);
                    next.push((*x, t));
                }
            }
            out = next;
        }
        out
    }
    fn face(&self, _n: usize, k: &NerveString, i: usize) -> NerveString {
        face_string(&self.0, k, i)
    }
    fn degen(&self, _n: usize, k: &NerveString, i: usize) -> NerveString {
        degen_string(&self.0, k, i)
    }
}

#[test]
fn nerve_matches_keyed_construction() {
    for g in [FinGroupoid::cyclic(2), FinGroupoid::interval(), FinGroupoid::cyclic(3), FinGroupoid::klein()] {
        let g = Arc::new(g);
        let direct = Nerve::build(&g, 3).unwrap();
        let keyed = from_keys(&Strings(g.clone()), 3, Some(3), true).unwrap();
        assert_eq!(padded(direct.sset.counts(), 3), padded(keyed.sset.counts(), 3));
        for n in 0..=3 {
            for s in keyed.level_keys(n) {
                let w = direct.word_of(s).unwrap();
                assert_eq!(direct.string_of(&w), *s);
            }
        }
        verify_identities(&direct.sset, 3).unwrap();
    }
}

#[test]
fn fundamental_groupoid_examples() {
    let d1 = builtin_complex(BuiltinKind::Simplex, 1, None).unwrap();
    let p = fundamental_groupoid(&d1).unwrap();
    assert_eq!((p.objects, p.generators.len(), p.nontrivial_relations()), (2, 1, 0));
    let q = p.quotient(QUOTIENT_CAP).unwrap();
    assert!(classify_gpd_map(&GpdFunctor::to_terminal(&q.groupoid)).equivalence);

    // circle: one vertex, one edge, free
    let pt = Arc::new(builtin_complex(BuiltinKind::Simplex, 0, None).unwrap());
    let d1 = Arc::new(d1);
    let v0 = SSetMap::constant(&pt, &d1, SimplexRef::new(0, 0)).unwrap();
    let v1 = SSetMap::constant(&pt, &d1, SimplexRef::new(0, 1)).unwrap();
    let circle = coequalizer(&v0, &v1).unwrap().object;
    let p = fundamental_groupoid(&circle).unwrap();
    assert_eq!((p.objects, p.generators.len()), (1, 1));
    assert!(p.is_free());
    assert!(p.quotient(QUOTIENT_CAP).is_err());

    // Π₁ of the nerve of J recovers J
    let j = Arc::new(FinGroupoid::interval());
    let p = fundamental_groupoid(&nerve(&j, 2).unwrap()).unwrap();
    let q = p.quotient(QUOTIENT_CAP).unwrap();
    assert_eq!(q.groupoid.morphism_count(), 4);
    let isos = enumerate_functors(&q.groupoid, &j)
        .into_iter()
        .filter(|f| f.is_injective_on_objects() && f.is_fully_faithful() && f.is_essentially_surjective())
        .count();
    assert!(isos > 0);
}

#[test]
fn fundamental_groupoid_of_group_nerves() {
    for (g, order) in [(FinGroupoid::cyclic(2), 2), (FinGroupoid::cyclic(3), 3), (FinGroupoid::klein(), 4)] {
        let g = Arc::new(g);
        let q = fundamental_groupoid(&nerve(&g, 2).unwrap()).unwrap().quotient(QUOTIENT_CAP).unwrap();
        assert_eq!(q.groupoid.morphism_count(), order);
    }
}

#[test]
fn fiber_product_examples() {
    let j = Arc::new(FinGroupoid::interval());
    let a = GpdFunctor::point(&j, 0).unwrap();
    let b = GpdFunctor::point(&j, 1).unwrap();
    let fp = fiber_products(&a, &b).unwrap();
    assert_eq!(fp.strict.object_count(), 0);
    assert_eq!((fp.lax.object_count(), fp.lax.morphism_count()), (1, 1));

    let id = GpdFunctor::identity(&j);
    let fp = fiber_products(&a, &id).unwrap();
    let c = classify_gpd_map(&fp.comparison);
    assert!(c.equivalence && c.cofibration);
    // an equivalence, not an isomorphism: the lax product also has the object (pt, 1, 0 → 1)
    assert_eq!((fp.strict.object_count(), fp.lax.object_count()), (1, 2));

    let to_pt = GpdFunctor::to_terminal(&j);
    let pt = Arc::new(FinGroupoid::terminal());
    let fp = fiber_products(&GpdFunctor::identity(&pt), &to_pt).unwrap();
    assert!(classify_gpd_map(&fp.comparison).equivalence);
    assert!(fp.comparison.is_fully_faithful());
}

#[test]
fn functor_groupoid_examples() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let pt = Arc::new(FinGroupoid::terminal());
    let fg = functor_groupoid(&pt, &z2).unwrap();
    assert_eq!((fg.groupoid.object_count(), fg.groupoid.morphism_count()), (1, 2));

    let j = Arc::new(FinGroupoid::interval());
    let fg = functor_groupoid(&j, &z2).unwrap();
    assert_eq!(fg.groupoid.object_count(), 2);
    assert!(fg.groupoid.is_connected(0, 1));

    let d2 = Arc::new(FinGroupoid::discrete(2));
    let fg = functor_groupoid(&d2, &j).unwrap();
    let jj = j.product(&j);
    assert_eq!(fg.groupoid.object_count(), jj.object_count());
    assert_eq!(fg.groupoid.morphism_count(), jj.morphism_count());
}
