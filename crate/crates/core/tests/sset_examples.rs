use std::sync::Arc;

use ssx_core::sset::*;

fn arc(a: FinSSet) -> Arc<FinSSet> {
    Arc::new(a)
}

fn simplex(n: usize) -> Arc<FinSSet> {
    arc(builtin_complex(BuiltinKind::Simplex, n, None).unwrap())
}

fn boundary(n: usize) -> Arc<FinSSet> {
    arc(builtin_complex(BuiltinKind::Boundary, n, None).unwrap())
}

fn horn(n: usize, k: usize) -> Arc<FinSSet> {
    arc(builtin_complex(BuiltinKind::Horn, n, Some(k)).unwrap())
}

/// Level-join oracle: the product as pairs of simplices of equal dimension, with
/// faces and degeneracies taken componentwise.
struct LevelJoin(Arc<FinSSet>, Arc<FinSSet>);

impl KeyedLevels for LevelJoin {
    type Key = (SimplexWord, SimplexWord);
    fn level(&self, n: usize) -> Vec<Self::Key> {
        let a = self.0.level(n).unwrap();
        let b = self.1.level(n).unwrap();
        let mut out = Vec::new();
        for x in &a.simplices {
            for y in &b.simplices {
                out.push((*x, *y));
            }
        }
        out
    }
    fn face(&self, _n: usize, k: &Self::Key, i: usize) -> Self::Key {
        (self.0.face(&k.0, i).unwrap(), self.1.face(&k.1, i).unwrap())
    }
    fn degen(&self, _n: usize, k: &Self::Key, i: usize) -> Self::Key {
        (k.0.degen(i).unwrap(), k.1.degen(i).unwrap())
    }
}

fn oracle_product_counts(a: &Arc<FinSSet>, b: &Arc<FinSSet>) -> Vec<usize> {
    let top = a.dim() + b.dim();
    let k = from_keys(&LevelJoin(a.clone(), b.clone()), top, None, true).unwrap();
    k.sset.counts()
}

#[test]
fn product_counts_match_level_join() {
    let cases = [(simplex(1), simplex(1)), (boundary(1), simplex(1)), (horn(2, 1), simplex(1)), (simplex(2), simplex(1))];
    for (a, b) in cases {
        let p = product(&a, &b).unwrap();
        assert_eq!(p.sset().counts(), oracle_product_counts(&a, &b));
    }
    assert_eq!(product(&simplex(1), &simplex(1)).unwrap().sset().counts(), vec![4, 5, 2]);
    // two disjoint copies of Δ¹
    assert_eq!(product(&boundary(1), &simplex(1)).unwrap().sset().counts(), vec![4, 2]);
}

#[test]
fn product_with_point_is_isomorphic() {
    let a = horn(2, 1);
    let p = product(&a, &simplex(0)).unwrap();
    let pr = p.projection(0).unwrap();
    assert!(pr.check().iso);
}

#[test]
fn coequalizer_gives_circle() {
    let pt = simplex(0);
    let d1 = simplex(1);
    let v0 = SSetMap::constant(&pt, &d1, SimplexRef::new(0, 0)).unwrap();
    let v1 = SSetMap::constant(&pt, &d1, SimplexRef::new(0, 1)).unwrap();
    let c = coequalizer(&v0, &v1).unwrap();
    assert_eq!(c.object.counts(), vec![1, 1]);
    let h = homology(&c.object, 2).unwrap();
    assert_eq!(h.ranks, vec![1, 1, 0]);
    assert!(!check_sset(&c.object).unwrap().nonsingular);
}

#[test]
fn coproduct_of_points() {
    let c = coproduct(&simplex(0), &simplex(0)).unwrap();
    assert_eq!(c.object.counts(), vec![2]);
}

#[test]
fn horn_as_coequalizer() {
    let pt = simplex(0);
    let sum = coproduct(&simplex(1), &simplex(1)).unwrap();
    let v = |i: usize| SSetMap::constant(&pt, &sum.object, SimplexRef::new(0, i)).unwrap();
    // vertex 0 of the first edge and vertex 0 of the second
    let c = coequalizer(&v(0), &v(2)).unwrap();
    let h = horn(2, 0);
    let isos: Vec<_> = enumerate_maps(&c.object, &h).unwrap().into_iter().filter(|m| m.check().iso).collect();
    assert!(!isos.is_empty());
}

#[test]
fn pushout_rejects_non_mono_legs() {
    let b = boundary(1);
    let pt = simplex(0);
    let collapse = SSetMap::constant(&b, &pt, SimplexRef::new(0, 0)).unwrap();
    assert!(matches!(pushout(&collapse, &collapse), Err(ssx_core::Error::NotMono(_))));
}

#[test]
fn pushout_of_boundary_and_points_is_circle() {
    let b = Subsimplex::boundary(1).unwrap();
    let incl = b.inclusion().unwrap();
    let pt = simplex(0);
    let collapse = SSetMap::constant(incl.dom(), &pt, SimplexRef::new(0, 0)).unwrap();
    let p = pushout(&incl, &collapse).unwrap();
    assert_eq!(p.object.counts(), vec![1, 1]);
}

#[test]
fn enumerate_maps_examples() {
    assert_eq!(enumerate_maps(&simplex(0), &simplex(2)).unwrap().len(), 3);
    // monotone maps [1] → [1]
    let oracle = (0..=1).flat_map(|a| (0..=1).map(move |b| (a, b))).filter(|(a, b)| a <= b).count();
    assert_eq!(enumerate_maps(&simplex(1), &simplex(1)).unwrap().len(), oracle);
    assert_eq!(enumerate_maps(&horn(2, 1), &simplex(0)).unwrap().len(), 1);
    // maps Δ^m → Δ^n are monotone maps [m] → [n]: C(m+n+1, m+1)
    assert_eq!(enumerate_maps(&simplex(2), &simplex(3)).unwrap().len(), 20);
}

#[test]
fn faces_containing_examples() {
    let b = boundary(2);
    let c = faces_containing(&b, &SimplexWord::nondegenerate(SimplexRef::new(0, 0))).unwrap();
    assert_eq!(c.sset.counts(), vec![3, 2]);
    let d = simplex(2);
    let c = faces_containing(&d, &SimplexWord::nondegenerate(SimplexRef::new(2, 0))).unwrap();
    assert_eq!(c.sset.counts(), vec![3, 3, 1]);
    let h = horn(2, 1);
    let c = faces_containing(&h, &SimplexWord::nondegenerate(SimplexRef::new(0, 1))).unwrap();
    assert_eq!(c.sset.counts(), h.counts());
}

#[test]
fn check_map_examples() {
    let b = Subsimplex::boundary(2).unwrap();
    let f = b.inclusion().unwrap().check();
    assert!(f.mono && !f.iso);
    let id = SSetMap::identity(&simplex(1)).check();
    assert!(id.mono && id.iso);
    let c = SSetMap::constant(&simplex(1), &simplex(0), SimplexRef::new(0, 0)).unwrap().check();
    assert!(!c.mono && !c.iso);
}

#[test]
fn check_sset_examples() {
    assert!(check_sset(&boundary(3)).unwrap().nonsingular);
    let p = product(&horn(3, 0), &simplex(1)).unwrap();
    assert!(check_sset(p.sset()).unwrap().nonsingular);
}

#[test]
fn homology_examples() {
    let h = homology(&simplex(0), 3).unwrap();
    assert_eq!(h, HomologyProfile::point(3));
    let h = homology(&boundary(3), 3).unwrap();
    assert_eq!(h.ranks, vec![1, 0, 1, 0]);
    assert!(h.torsion.iter().all(|t| t.is_empty()));
}

#[test]
fn normalize_word_examples() {
    let pt = simplex(0);
    let v = SimplexRef::new(0, 0);
    let w = normalize_word(&pt, v, &[Op::Degen(0)]).unwrap();
    assert_eq!(w.degeneracies(), vec![0]);
    let d2 = simplex(2);
    let e = SimplexRef::new(1, 0);
    // d1 s1 x = x
    assert_eq!(normalize_word(&d2, e, &[Op::Degen(1), Op::Face(1)]).unwrap(), SimplexWord::nondegenerate(e));
    // d0 s1 x = s0 d0 x
    let lhs = normalize_word(&d2, e, &[Op::Degen(1), Op::Face(0)]).unwrap();
    let rhs = normalize_word(&d2, e, &[Op::Face(0), Op::Degen(0)]).unwrap();
    assert_eq!(lhs, rhs);
    assert!(normalize_word(&d2, e, &[Op::Face(2)]).is_err());
}

#[test]
fn identities_hold_on_small_complexes() {
    for a in [simplex(3), boundary(3), horn(3, 1)] {
        assert!(verify_identities(&a, 4).unwrap() > 0);
    }
    let p = product(&simplex(1), &simplex(2)).unwrap();
    verify_identities(p.sset(), 4).unwrap();
}
