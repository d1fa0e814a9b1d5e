use std::sync::Arc;

use ssx_core::bisset::{nerve_bisset, nerve_bisset_map};
use ssx_core::gpd::{FinGroupoid, GpdFunctor};
use ssx_core::lifting::{
    jardine_criterion, strictify_lift, weak_lift_space, GpdLiftingProblem, LaxLift,
};
use ssx_core::sgpd::{chaotic_resolution_map, constant_map, hom_groupoid, SGpdMap};
use ssx_core::sset::{enumerate_maps, SSetMap, Subsimplex};
use ssx_core::Error;

fn to_terminal(g: FinGroupoid, d: usize) -> SGpdMap {
    chaotic_resolution_map(&GpdFunctor::to_terminal(&Arc::new(g)), d).unwrap()
}

/// Every lax lift `(h, β)` over the point, with `γ` forced to be an identity.
fn lax_lifts(i: &SSetMap, p: &SGpdMap) -> Vec<(GpdLiftingProblem, LaxLift)> {
    let (x, y) = (p.dom(), p.cod());
    let hb = hom_groupoid(i.cod(), x).unwrap();
    let ha = hom_groupoid(i.dom(), x).unwrap();
    let mut out = Vec::new();
    for h in &hb.objects {
        let hi = i.then(h).unwrap();
        for beta in &ha.morphisms {
            if !beta.then(x.tgt()).unwrap().agrees_with(&hi) {
                continue;
            }
            let f = beta.then(x.src()).unwrap();
            let g = h.then(p.on_obj()).unwrap();
            let gamma = g.then(y.ident()).unwrap();
            let prob = GpdLiftingProblem::new(i.clone(), p.clone(), f, g).unwrap();
            out.push((prob, LaxLift { h: h.clone(), beta: beta.clone(), gamma }));
        }
    }
    out
}

#[test]
fn strictify_every_lax_lift_through_a_chaotic_resolution() {
    let p = to_terminal(FinGroupoid::cyclic(2), 2);
    for i in [Subsimplex::vertex(1, 0).unwrap(), Subsimplex::boundary(1).unwrap(), Subsimplex::horn(2, 1).unwrap()] {
        let i = i.inclusion().unwrap();
        let lifts = lax_lifts(&i, &p);
        assert!(!lifts.is_empty());
        for (prob, lax) in &lifts {
            let s = strictify_lift(prob, lax).unwrap();
            assert!(i.then(&s.h).unwrap().agrees_with(&prob.f));
            assert!(s.theta.then(p.dom().tgt()).unwrap().agrees_with(&lax.h));
            assert!(i.then(&s.theta).unwrap().agrees_with(&lax.beta));
        }
    }
}

#[test]
fn strictify_identity_lax_lift_returns_the_lift() {
    let p = to_terminal(FinGroupoid::interval(), 2);
    let i = Subsimplex::vertex(1, 1).unwrap().inclusion().unwrap();
    for (prob, lax) in lax_lifts(&i, &p) {
        let identity = i.then(&lax.h).unwrap().then(p.dom().ident()).unwrap();
        if lax.beta.agrees_with(&identity) {
            let s = strictify_lift(&prob, &lax).unwrap();
            assert!(s.h.then(p.on_obj()).unwrap().agrees_with(&prob.g));
        }
    }
}

#[test]
fn strictify_requires_a_reedy_fibration() {
    let j = Arc::new(FinGroupoid::interval());
    let p = constant_map(&GpdFunctor::point(&j, 0).unwrap()).unwrap();
    let (x, y) = (p.dom(), p.cod());
    let empty = Subsimplex::generated(0, &[]).unwrap();
    let i = empty.inclusion().unwrap();
    let f = enumerate_maps(i.dom(), x.obj()).unwrap().remove(0);
    let one = enumerate_maps(i.cod(), y.obj()).unwrap().into_iter().find(|g| g.images()[0][0].base().index() == 1).unwrap();
    let h = enumerate_maps(i.cod(), x.obj()).unwrap().remove(0);
    let beta = enumerate_maps(i.dom(), x.mor()).unwrap().remove(0);
    // the unique morphism 1 → 0 of the interval
    let gamma = enumerate_maps(i.cod(), y.mor())
        .unwrap()
        .into_iter()
        .find(|m| m.then(y.src()).unwrap().agrees_with(&one) && !m.then(y.tgt()).unwrap().agrees_with(&one))
        .unwrap();
    let prob = GpdLiftingProblem::new(i, p.clone(), f, one).unwrap();
    let err = strictify_lift(&prob, &LaxLift { h, beta, gamma }).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err:?}");
}

#[test]
fn weak_lift_space_over_chaotic_resolutions() {
    let cases = [
        to_terminal(FinGroupoid::cyclic(2), 2),
        to_terminal(FinGroupoid::interval(), 2),
        chaotic_resolution_map(&GpdFunctor::identity(&Arc::new(FinGroupoid::interval())), 2).unwrap(),
    ];
    for p in &cases {
        for i in [Subsimplex::vertex(1, 0).unwrap(), Subsimplex::horn(2, 1).unwrap()] {
            let w = weak_lift_space(&i.inclusion().unwrap(), p).unwrap();
            assert!(w.flags.isofibration);
            assert!(w.surjective_on_objects);
        }
    }
}

#[test]
fn weak_lift_space_counts_for_the_interval() {
    // X = chaotic resolution of J over the point, i = {0} ⊂ Δ¹: lifts are (H, h) with h|₀ = H₁
    let p = to_terminal(FinGroupoid::interval(), 2);
    let i = Subsimplex::vertex(1, 0).unwrap().inclusion().unwrap();
    let w = weak_lift_space(&i, &p).unwrap();
    let x = p.dom();
    let (ha, hb) = (hom_groupoid(i.dom(), x).unwrap(), hom_groupoid(i.cod(), x).unwrap());
    // over the point every homotopy is fiberwise; homotopies of a vertex are morphisms of X₀
    assert_eq!(w.homotopies.object_count(), ha.groupoid.morphism_count());
    let expected: usize = hb.objects.iter().map(|h| {
        let v = i.then(h).unwrap();
        ha.morphisms.iter().filter(|m| m.then(x.tgt()).unwrap().agrees_with(&v)).count()
    }).sum();
    assert_eq!(w.lifts.groupoid.object_count(), expected);
    assert_eq!(w.squares.groupoid.object_count(), ha.groupoid.object_count());
}

#[test]
fn jardine_for_the_nerve_of_a_chaotic_resolution() {
    let p = to_terminal(FinGroupoid::cyclic(2), 2);
    let f = nerve_bisset_map(&p, &nerve_bisset(p.dom(), 2), &nerve_bisset(p.cod(), 2)).unwrap();
    for (n, k) in [(1, 0), (1, 1), (2, 1), (2, 0)] {
        let gamma = Subsimplex::horn(n, k).unwrap().inclusion().unwrap();
        let r = jardine_criterion(&f, &gamma, 2).unwrap();
        assert!(r.hypotheses_hold());
        assert!(r.factorization_mono);
        let c = r.conclusion.unwrap();
        assert!(c.squares > 0);
        assert!(c.strict_holds(), "Λ^{n}_{k}: {}/{}", c.strict, c.squares);
    }
}

#[test]
fn jardine_flags_the_constant_interval() {
    let j = Arc::new(FinGroupoid::interval());
    let p = constant_map(&GpdFunctor::point(&j, 0).unwrap()).unwrap();
    let f = nerve_bisset_map(&p, &nerve_bisset(p.dom(), 2), &nerve_bisset(p.cod(), 2)).unwrap();
    let gamma = Subsimplex::horn(1, 0).unwrap().inclusion().unwrap();
    let r = jardine_criterion(&f, &gamma, 2).unwrap();
    assert!(!r.hypotheses_hold());
    assert!(r.conclusion.is_none());
}
