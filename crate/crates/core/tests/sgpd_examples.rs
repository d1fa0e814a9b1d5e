use std::sync::Arc;

use ssx_core::gpd::{classify_gpd_map, functor_groupoid, FinGroupoid, GpdFunctor};
use ssx_core::sgpd::{
    chaotic_resolution, check_reedy, constant, discrete, hom_groupoid, latching_object, matching_object,
    nat_iso_to_homotopy, sgpd_fiber_product, FiberMode, SGpdMap, SGpdNatIso, SimpGroupoid,
};
use ssx_core::bisset::sing_map;
use ssx_core::sset::{keyed_map, SSetMap, SimplexRef, SimplexWord, Subsimplex, TupleSSet};

fn point() -> Arc<SimpGroupoid> {
    Arc::new(constant(&Arc::new(FinGroupoid::terminal())).unwrap())
}

fn to_point(x: &Arc<SimpGroupoid>, pt: &Arc<SimpGroupoid>) -> SGpdMap {
    let v = SimplexRef::new(0, 0);
    SGpdMap::new(
        x.clone(),
        pt.clone(),
        SSetMap::constant(x.obj(), pt.obj(), v).unwrap(),
        SSetMap::constant(x.mor(), pt.mor(), v).unwrap(),
    )
    .unwrap()
}

/// The map from the point picking the object `x` of a constant simplicial groupoid.
fn pick(pt: &Arc<SimpGroupoid>, g: &Arc<FinGroupoid>, c: &Arc<SimpGroupoid>, x: u32) -> SGpdMap {
    SGpdMap::new(
        pt.clone(),
        c.clone(),
        SSetMap::constant(pt.obj(), c.obj(), SimplexRef::new(0, x as usize)).unwrap(),
        SSetMap::constant(pt.mor(), c.mor(), SimplexRef::new(0, g.ident(x) as usize)).unwrap(),
    )
    .unwrap()
}

fn simplex(n: usize) -> Arc<ssx_core::sset::FinSSet> {
    Subsimplex::simplex(n).unwrap().sset().clone()
}

#[test]
fn discrete_has_identity_structure() {
    let a = simplex(1);
    let x = discrete(&a).unwrap();
    assert_eq!(**x.obj(), *a);
    assert_eq!(**x.mor(), *a);
    for m in [x.src(), x.tgt(), x.ident(), x.invert()] {
        assert!(m.agrees_with(&SSetMap::identity(&a)));
    }
}

#[test]
fn constant_levels_are_the_groupoid() {
    let j = Arc::new(FinGroupoid::interval());
    let x = constant(&j).unwrap();
    for n in 0..3 {
        let l = x.level(n).unwrap();
        assert_eq!((l.object_count(), l.morphism_count()), (2, 4));
        assert_eq!(l.hom(0, 1).len(), 1);
    }
}

#[test]
fn chaotic_resolution_levels_are_functor_groupoids() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let x = chaotic_resolution(&z2, 3).unwrap().groupoid;
    let l1 = x.level(1).unwrap();
    assert_eq!(l1.object_count(), 2);
    for a in l1.objects() {
        for b in l1.objects() {
            assert_eq!(l1.hom(a, b).len(), 2);
        }
    }
    // independent route: enumerated functors from the chaotic groupoid and their isos
    for g in [FinGroupoid::cyclic(2), FinGroupoid::interval(), FinGroupoid::discrete(2)] {
        let g = Arc::new(g);
        let x = chaotic_resolution(&g, 2).unwrap().groupoid;
        for n in 0..=2 {
            let e = Arc::new(FinGroupoid::chaotic(n + 1));
            let fg = functor_groupoid(&e, &g).unwrap();
            let l = x.level(n).unwrap();
            assert_eq!(
                (l.object_count(), l.morphism_count()),
                (fg.groupoid.object_count(), fg.groupoid.morphism_count()),
                "level {n}"
            );
        }
    }
}

#[test]
fn rows_of_discrete_and_constant() {
    let a = Subsimplex::horn(2, 1).unwrap().sset().clone();
    let x = discrete(&a).unwrap();
    for m in 0..4 {
        assert_eq!(*x.row(m).unwrap(), *a, "row {m}");
    }
    let z2 = constant(&Arc::new(FinGroupoid::cyclic(2))).unwrap();
    assert_eq!(z2.row(2).unwrap().counts(), vec![4]);
    let j = constant(&Arc::new(FinGroupoid::interval())).unwrap();
    assert_eq!(j.row(3).unwrap().counts(), vec![16]);
}

#[test]
fn low_rows_are_obj_and_mor() {
    let x = chaotic_resolution(&Arc::new(FinGroupoid::cyclic(2)), 3).unwrap().groupoid;
    assert_eq!(*x.row(0).unwrap(), **x.obj());
    assert_eq!(*x.row(1).unwrap(), **x.mor());
}

#[test]
fn row_two_is_the_pullback() {
    for g in [FinGroupoid::cyclic(2), FinGroupoid::interval()] {
        let x = chaotic_resolution(&Arc::new(g), 2).unwrap().groupoid;
        let p = TupleSSet::pullback(x.tgt(), x.src()).unwrap();
        let r = x.row_keyed(2).unwrap();
        let ml = |k: usize| x.mor().level(k).unwrap();
        let cmp = SSetMap::from_fn(&r.sset, p.sset(), |s| {
            let key = r.key(s);
            let ws: Vec<SimplexWord> = key.iter().map(|&f| ml(s.dim()).simplices[f as usize]).collect();
            Ok(p.word_of(&ws).unwrap())
        })
        .unwrap();
        assert!(cmp.check().iso);
        assert_eq!(r.sset.counts(), p.sset().counts());
    }
}

#[test]
fn horizontal_faces_satisfy_simplicial_identities() {
    let x = chaotic_resolution(&Arc::new(FinGroupoid::interval()), 2).unwrap().groupoid;
    for m in 2..4 {
        for j in 1..=m {
            for i in 0..j {
                let lhs = x.hface(m, j).unwrap().then(&x.hface(m - 1, i).unwrap()).unwrap();
                let rhs = x.hface(m, i).unwrap().then(&x.hface(m - 1, j - 1).unwrap()).unwrap();
                assert!(lhs.agrees_with(&rhs), "m={m} i={i} j={j}");
            }
        }
    }
    for m in 0..3 {
        for i in 0..=m {
            let round = x.hdegen(m, i).unwrap().then(&x.hface(m + 1, i).unwrap()).unwrap();
            assert!(round.agrees_with(&SSetMap::identity(&x.row(m).unwrap())));
        }
    }
}

#[test]
fn hom_groupoid_examples() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let x = chaotic_resolution(&z2, 3).unwrap().groupoid;
    let h = hom_groupoid(&simplex(0), &x).unwrap();
    let l0 = x.level(0).unwrap();
    assert_eq!(
        (h.groupoid.object_count(), h.groupoid.morphism_count()),
        (l0.object_count(), l0.morphism_count())
    );
    assert_eq!(h.groupoid.object_count(), x.row(0).unwrap().count(0));

    let j = Arc::new(FinGroupoid::interval());
    let c = constant(&j).unwrap();
    let h = hom_groupoid(Subsimplex::boundary(1).unwrap().sset(), &c).unwrap();
    let jj = j.product(&j);
    assert_eq!(
        (h.groupoid.object_count(), h.groupoid.morphism_count()),
        (jj.object_count(), jj.morphism_count())
    );

    let a = Subsimplex::horn(2, 0).unwrap().sset().clone();
    let h = hom_groupoid(&simplex(1), &discrete(&a).unwrap()).unwrap();
    let edges = a.level(1).unwrap().len();
    assert_eq!((h.groupoid.object_count(), h.groupoid.morphism_count()), (edges, edges));
}

#[test]
fn matching_object_examples() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let x = chaotic_resolution(&z2, 3).unwrap().groupoid;
    let m0 = matching_object(&x, 0).unwrap();
    assert_eq!((m0.hom.groupoid.object_count(), m0.hom.groupoid.morphism_count()), (1, 1));
    let m1 = matching_object(&x, 1).unwrap();
    assert_eq!((m1.hom.groupoid.object_count(), m1.hom.groupoid.morphism_count()), (1, 4));
    // the endpoint restriction is surjective on objects and an isofibration, not faithful
    let f = classify_gpd_map(&m1.restriction);
    assert!(f.isofibration && !f.equivalence);
    assert!(m1.restriction.is_essentially_surjective());

    let j = Arc::new(FinGroupoid::interval());
    let c = constant(&j).unwrap();
    let m1 = matching_object(&c, 1).unwrap();
    assert_eq!((m1.hom.groupoid.object_count(), m1.hom.groupoid.morphism_count()), (4, 16));
    // the comparison is the diagonal
    let r = &m1.restriction;
    assert!(r.is_injective_on_objects());
    assert_eq!(r.dom().object_count(), 2);
}

#[test]
fn latching_object_examples() {
    let l = latching_object(&discrete(&simplex(0)).unwrap(), 1).unwrap();
    assert_eq!((l.objects.len(), l.morphisms.len()), (1, 1));
    let j = constant(&Arc::new(FinGroupoid::interval())).unwrap();
    let l = latching_object(&j, 1).unwrap();
    assert_eq!((l.objects.len(), l.morphisms.len()), (2, 4));
    let d2 = simplex(2);
    let l = latching_object(&discrete(&d2).unwrap(), 2).unwrap();
    // level 2 of the 2-simplex has C(5,2) = 10 simplices, one of them nondegenerate
    assert_eq!(d2.level(2).unwrap().len(), 10);
    assert_eq!(l.objects.len(), 9);
}

#[test]
fn reedy_examples() {
    let pt = point();
    // any map of discrete simplicial groupoids
    let a = Arc::new(discrete(&Subsimplex::horn(2, 1).unwrap().sset().clone()).unwrap());
    let b = Arc::new(discrete(&simplex(2)).unwrap());
    let inc = Subsimplex::horn(2, 1).unwrap().inclusion().unwrap();
    let p = SGpdMap::new(a.clone(), b.clone(), inc.clone(), inc).unwrap();
    let r = check_reedy(&p, 3).unwrap();
    assert!(r.fibration());
    assert!(r.cofibration() && r.objectwise_cofibration());

    let j = Arc::new(constant(&Arc::new(FinGroupoid::interval())).unwrap());
    let r = check_reedy(&to_point(&j, &pt), 2).unwrap();
    assert!(r.levels[0].fibration);
    assert!(!r.levels[1].fibration);
    assert!(r.levels[1].witness.is_some());

    let x = chaotic_resolution(&Arc::new(FinGroupoid::cyclic(2)), 3).unwrap().groupoid;
    let r = check_reedy(&to_point(&x, &pt), 3).unwrap();
    assert!(r.fibration(), "{r:?}");
    assert_eq!(r.cofibration(), r.objectwise_cofibration());
}

#[test]
fn fiber_product_examples() {
    let pt = point();
    let g = Arc::new(FinGroupoid::interval());
    let c = Arc::new(constant(&g).unwrap());
    let (p0, p1) = (pick(&pt, &g, &c, 0), pick(&pt, &g, &c, 1));
    let s = sgpd_fiber_product(&p0, &p1, FiberMode::Strict).unwrap();
    assert!(s.groupoid.obj().is_empty());
    let l = sgpd_fiber_product(&p0, &p1, FiberMode::Lax).unwrap();
    for n in 0..3 {
        let lev = l.groupoid.level(n).unwrap();
        let f = GpdFunctor::to_terminal(&lev);
        assert!(classify_gpd_map(&f).equivalence, "level {n}");
    }

    // p = identity returns the domain of q
    let x = chaotic_resolution(&Arc::new(FinGroupoid::cyclic(2)), 2).unwrap().groupoid;
    let q = to_point(&x, &pt);
    let s = sgpd_fiber_product(&q, &SGpdMap::identity(&pt), FiberMode::Strict).unwrap();
    assert_eq!(s.groupoid.obj().counts(), x.obj().counts());
    assert_eq!(s.groupoid.mor().counts(), x.mor().counts());
    assert!(s.projections.0.on_mor().check().iso);

    // discrete legs give the pullback of simplicial sets
    let h = Subsimplex::horn(2, 0).unwrap();
    let a = Arc::new(discrete(h.sset()).unwrap());
    let b = Arc::new(discrete(&simplex(2)).unwrap());
    let inc = h.inclusion().unwrap();
    let q = SGpdMap::new(a.clone(), b.clone(), inc.clone(), inc.clone()).unwrap();
    let s = sgpd_fiber_product(&q, &q, FiberMode::Strict).unwrap();
    let pb = TupleSSet::pullback(&inc, &inc).unwrap();
    assert_eq!(s.groupoid.obj().counts(), pb.sset().counts());
}

#[test]
fn raw_data_with_a_broken_unit_is_rejected() {
    let a = simplex(0);
    let two = Arc::new(ssx_core::sset::FinSSet::new(vec![vec![vec![], vec![]]], None).unwrap());
    let v = SimplexRef::new(0, 0);
    let src = SSetMap::constant(&two, &a, v).unwrap();
    let ident = SSetMap::constant(&a, &two, v).unwrap();
    let err = SimpGroupoid::new(a.clone(), two.clone(), src.clone(), src, ident, SSetMap::identity(&two), |_, g| Ok(*g))
        .unwrap_err();
    assert!(err.to_string().contains("unit"), "{err}");
}

#[test]
fn keyed_maps_are_checked() {
    let x = chaotic_resolution(&Arc::new(FinGroupoid::cyclic(2)), 1).unwrap();
    let m = keyed_map(&x.mor, &x.obj, |_, k| Ok(k.0.clone())).unwrap();
    assert!(m.agrees_with(x.groupoid.src()));
}

fn connecting(pt: &Arc<SimpGroupoid>, j: &Arc<FinGroupoid>, c: &Arc<SimpGroupoid>, a: u32, b: u32) -> SGpdNatIso {
    let f = j.hom(a, b)[0];
    let comp = SSetMap::constant(pt.obj(), c.mor(), SimplexRef::new(0, f as usize)).unwrap();
    SGpdNatIso::new(pick(pt, j, c, a), pick(pt, j, c, b), comp).unwrap()
}

#[test]
fn identity_iso_gives_constant_homotopy() {
    let j = Arc::new(FinGroupoid::interval());
    let c = Arc::new(constant(&j).unwrap());
    let x = chaotic_resolution(&Arc::new(FinGroupoid::cyclic(2)), 3).unwrap().groupoid;
    let f = to_point(&x, &point());
    let h = nat_iso_to_homotopy(&SGpdNatIso::identity(&f).unwrap(), 2).unwrap();
    let (_, _, sf) = sing_map(&f, 2).unwrap();
    assert!(h.map.agrees_with(&h.cylinder.projection.then(&sf).unwrap()));
    let g = SGpdMap::identity(&c);
    let h = nat_iso_to_homotopy(&SGpdNatIso::identity(&g).unwrap(), 2).unwrap();
    assert!(h.map.agrees_with(&h.cylinder.projection));
}

#[test]
fn connecting_iso_gives_homotopy_between_vertices() {
    let pt = point();
    let j = Arc::new(FinGroupoid::interval());
    let c = Arc::new(constant(&j).unwrap());
    let alpha = connecting(&pt, &j, &c, 0, 1);
    let h = nat_iso_to_homotopy(&alpha, 2).unwrap();
    let (e0, e1) = (h.end(0).unwrap(), h.end(1).unwrap());
    assert!(e0.agrees_with(&sing_map(alpha.src(), 2).unwrap().2));
    assert!(e1.agrees_with(&sing_map(alpha.tgt(), 2).unwrap().2));
    assert!(!e0.agrees_with(&e1));
    // the edge of the cylinder over the vertex is the nondegenerate edge 0 → 1
    let edge = h.map.images()[1][0];
    assert!(!edge.is_degenerate());
}

#[test]
fn composite_homotopies_chain() {
    let pt = point();
    let j = Arc::new(FinGroupoid::interval());
    let c = Arc::new(constant(&j).unwrap());
    let (alpha, beta) = (connecting(&pt, &j, &c, 0, 1), connecting(&pt, &j, &c, 1, 0));
    let (ha, hb) = (nat_iso_to_homotopy(&alpha, 2).unwrap(), nat_iso_to_homotopy(&beta, 2).unwrap());
    assert!(ha.end(1).unwrap().agrees_with(&hb.end(0).unwrap()));
    let hab = nat_iso_to_homotopy(&alpha.then(&beta).unwrap(), 2).unwrap();
    assert!(hab.end(0).unwrap().agrees_with(&ha.end(0).unwrap()));
    assert!(hab.end(1).unwrap().agrees_with(&hb.end(1).unwrap()));
    // the composite is the identity of the first vertex inclusion
    assert!(hab.map.agrees_with(&hab.cylinder.projection.then(&ha.end(0).unwrap()).unwrap()));
}
