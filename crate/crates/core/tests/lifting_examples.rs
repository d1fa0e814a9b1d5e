use std::sync::Arc;

use ssx_core::gpd::*;
use ssx_core::lifting::*;
use ssx_core::sset::*;

fn simplex(n: usize) -> Arc<FinSSet> {
    Arc::new(builtin_complex(BuiltinKind::Simplex, n, None).unwrap())
}

#[test]
fn point_into_nerve_of_interval_is_not_kan() {
    let j = Arc::new(FinGroupoid::interval());
    let f = GpdFunctor::point(&j, 0).unwrap();
    let p = nerve_map(&f, 3).unwrap();
    let r = classify_sset_fibration(&p, FibrationMode::Kan, 3).unwrap();
    assert!(!r.passed);
    let w = r.witness.unwrap();
    assert_eq!(w.inclusion, Inclusion::Horn { n: 1, k: 0 });
    assert!(!w.bottom.is_degenerate());
    let weak = classify_sset_fibration(&p, FibrationMode::WeakKan, 3).unwrap();
    assert!(!weak.passed);
}

#[test]
fn identity_passes_all_modes() {
    let j = Arc::new(FinGroupoid::interval());
    let n = nerve(&j, 3).unwrap();
    let id = SSetMap::identity(&n);
    for mode in [FibrationMode::Kan, FibrationMode::TrivialKan, FibrationMode::WeakKan, FibrationMode::WeakTrivialKan] {
        assert!(classify_sset_fibration(&id, mode, 3).unwrap().passed, "{mode:?}");
    }
}

#[test]
fn nerve_bridge_small() {
    let j = Arc::new(FinGroupoid::interval());
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let z4 = Arc::new(FinGroupoid::cyclic(4));
    let mut functors = vec![
        GpdFunctor::to_terminal(&j),
        GpdFunctor::to_terminal(&z2),
        GpdFunctor::point(&j, 1).unwrap(),
        GpdFunctor::point(&z2, 0).unwrap(),
        GpdFunctor::identity(&j),
    ];
    // Z/4 → Z/2 reduction (surjective) and Z/2 → Z/4 inclusion (not)
    functors.push(GpdFunctor::new(z4.clone(), z2.clone(), vec![0], vec![0, 1, 0, 1]).unwrap());
    functors.push(GpdFunctor::new(z2.clone(), z4.clone(), vec![0], vec![0, 2]).unwrap());
    for f in functors {
        let iso = classify_gpd_map(&f).isofibration;
        let kan = classify_sset_fibration(&nerve_map(&f, 3).unwrap(), FibrationMode::Kan, 3).unwrap().passed;
        assert_eq!(iso, kan);
    }
}

#[test]
fn solve_strict_examples() {
    // p an isomorphism: the solution is p⁻¹ ∘ g
    let h = Subsimplex::horn(2, 1).unwrap();
    let i = h.inclusion().unwrap();
    let d2 = i.cod().clone();
    let p = SSetMap::identity(&d2);
    let g = SSetMap::identity(&d2);
    let f = i.clone();
    let prob = LiftingProblem::new(i.clone(), p.clone(), f, g.clone()).unwrap();
    let sol = solve_strict(&prob).unwrap().unwrap();
    assert_eq!(sol, p.inverse().unwrap().then(&g).unwrap().then(&SSetMap::identity(&d2)).unwrap());

    // inner horn into a Kan complex over a point
    let j = Arc::new(FinGroupoid::interval());
    let x = nerve(&j, 3).unwrap();
    let pt = simplex(0);
    let to_pt = SSetMap::constant(&x, &pt, SimplexRef::new(0, 0)).unwrap();
    let maps = enumerate_maps(i.dom(), &x).unwrap();
    let g = SSetMap::constant(i.cod(), &pt, SimplexRef::new(0, 0)).unwrap();
    for f in maps {
        let prob = LiftingProblem::new(i.clone(), to_pt.clone(), f, g.clone()).unwrap();
        let strict = solve_strict(&prob).unwrap();
        assert!(strict.is_some());
        let weak = solve_weak(&prob).unwrap().unwrap();
        assert!(verify_weak_solution(&prob, &weak).unwrap());
    }
}

#[test]
fn interval_horn_problem_has_no_solution() {
    let j = Arc::new(FinGroupoid::interval());
    let nj = Nerve::build(&j, 1).unwrap();
    let pt = simplex(0);
    let p = SSetMap::constant(&pt, &nj.sset, SimplexRef::new(0, 0)).unwrap();
    let horn = Subsimplex::horn(1, 0).unwrap();
    let i = horn.inclusion().unwrap();
    let f = SSetMap::constant(i.dom(), &pt, SimplexRef::new(0, 0)).unwrap();
    // the nonconstant edge 0 → 1
    let e = nj.word_of(&(0, vec![1])).unwrap();
    let g = simplex_map(i.cod(), &nj.sset, e, 1).unwrap();
    let prob = LiftingProblem::new(i, p, f, g).unwrap();
    assert!(solve_strict(&prob).unwrap().is_none());
    assert!(solve_weak(&prob).unwrap().is_none());
}
