use std::sync::Arc;

use proptest::prelude::*;
use ssx_core::bisset::{diag, exterior, nerve_bisset, nerve_bisset_map, reedy_check_bisset};
use ssx_core::cli::format::{parse_str, to_string, Object};
use ssx_core::gpd::{classify_gpd_map, enumerate_functors, fiber_products, nerve_map, FinGroupoid, GpdFunctor};
use ssx_core::lifting::{classify_sset_fibration, solve_strict, solve_weak, all_strict_solutions, FibrationMode, LiftingProblem};
use ssx_core::sgpd::{check_reedy, constant_map};
use ssx_core::sset::{
    enumerate_maps, faces_containing, homology, normalize_word, product, FinSSet, Monotone, Op, SSetMap, SimplexRef,
    SimplexWord, Subsimplex,
};

fn subcomplex(n: usize, pick: usize) -> Subsimplex {
    let all = Subsimplex::all_subcomplexes(n, false).unwrap();
    all[pick % all.len()].clone()
}

fn nondegenerate(a: &FinSSet, pick: usize) -> SimplexRef {
    let all: Vec<SimplexRef> = a.all_nondegenerate().collect();
    all[pick % all.len()]
}

fn groupoids() -> Vec<Arc<FinGroupoid>> {
    let t = FinGroupoid::terminal();
    let z2 = FinGroupoid::cyclic(2);
    vec![
        Arc::new(t.clone()),
        Arc::new(FinGroupoid::discrete(2)),
        Arc::new(z2.clone()),
        Arc::new(FinGroupoid::cyclic(3)),
        Arc::new(FinGroupoid::interval()),
        Arc::new(z2.disjoint_union(&t)),
    ]
}

/// The functor with the given picks, if any functor exists between the chosen groupoids.
fn some_functor(g: usize, h: usize, pick: usize) -> Option<GpdFunctor> {
    let gs = groupoids();
    let (g, h) = (&gs[g % gs.len()], &gs[h % gs.len()]);
    let all = enumerate_functors(g, h);
    (!all.is_empty()).then(|| all[pick % all.len()].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_the_composite_operator(
        n in 0usize..=3,
        pick in any::<usize>(),
        x in any::<usize>(),
        raw in proptest::collection::vec((any::<bool>(), any::<usize>()), 0..7),
    ) {
        let sub = subcomplex(n, pick);
        let a = sub.sset();
        let x = nondegenerate(a, x);
        let mut theta: Vec<u8> = (0..=x.dim() as u8).collect();
        let mut ops = Vec::new();
        for (face, i) in raw {
            let k = theta.len() - 1;
            if face && k >= 1 {
                let i = i % (k + 1);
                ops.push(Op::Face(i));
                theta = (0..k).map(|j| theta[if j < i { j } else { j + 1 }]).collect();
            } else if k < 4 {
                let i = i % (k + 1);
                ops.push(Op::Degen(i));
                theta = (0..=k + 1).map(|j| theta[if j <= i { j } else { j - 1 }]).collect();
            }
        }
        let w = normalize_word(a, x, &ops).unwrap();
        let expected = a.apply(&SimplexWord::nondegenerate(x), &Monotone::new(theta, x.dim()).unwrap()).unwrap();
        prop_assert_eq!(w, expected);
    }

    #[test]
    fn faces_containing_is_monotone(n in 0usize..=3, pick in any::<usize>(), x in any::<usize>(), mask in any::<u32>()) {
        let sub = subcomplex(n, pick);
        let a = sub.sset();
        let x = nondegenerate(a, x);
        let full = (1u32 << (x.dim() + 1)) - 1;
        let m = (mask % full) + 1;
        let beta = a.restrict(&SimplexWord::nondegenerate(x), m);
        let ca = faces_containing(a, &SimplexWord::nondegenerate(x)).unwrap();
        let cb = faces_containing(a, &beta).unwrap();
        prop_assert!(ca.members().is_subset(&cb.members()));
        prop_assert!(homology(&ca.sset, 2).unwrap().is_point());
        prop_assert!(homology(&cb.sset, 2).unwrap().is_point());
    }

    #[test]
    fn maps_into_a_product_are_pairs(p in any::<usize>(), q in any::<usize>(), k in 0usize..=2) {
        let (a, b) = (subcomplex(2, p), subcomplex(1, q));
        let (a, b) = (a.sset(), b.sset());
        let ab = product(a, b).unwrap();
        let t = Subsimplex::simplex(k).unwrap().sset().clone();
        let n = enumerate_maps(&t, ab.sset()).unwrap().len();
        prop_assert_eq!(n, enumerate_maps(&t, a).unwrap().len() * enumerate_maps(&t, b).unwrap().len());
    }

    #[test]
    fn diagonal_of_exterior_counts(p in any::<usize>(), q in any::<usize>()) {
        let (a, b) = (subcomplex(2, p), subcomplex(1, q));
        let (a, b) = (a.sset(), b.sset());
        let d = 2;
        let dg = diag(&exterior(a, b, d).unwrap(), d).unwrap();
        let pd = product(a, b).unwrap().sset().truncate(d);
        prop_assert_eq!(dg.sset.counts(), pd.counts());
        prop_assert_eq!(homology(&dg.sset, 1).unwrap(), homology(&pd, 1).unwrap());
    }

    #[test]
    fn functor_classification(g in 0usize..6, h in 0usize..6, pick in any::<usize>()) {
        let Some(f) = some_functor(g, h, pick) else { return Ok(()) };
        let flags = classify_gpd_map(&f);
        prop_assert_eq!(flags.trivial_cofibration, flags.cofibration && flags.equivalence);
        let kan = classify_sset_fibration(&nerve_map(&f, 3).unwrap(), FibrationMode::Kan, 3).unwrap();
        prop_assert_eq!(kan.passed, flags.isofibration);
        prop_assert_eq!(kan.witness.is_none(), kan.passed);
        let text = to_string(&Object::Functor(f.clone()));
        prop_assert_eq!(to_string(&parse_str(&text).unwrap()), text);
    }

    #[test]
    fn lax_comparison(g in 0usize..6, k in 0usize..6, h in 0usize..6, a in any::<usize>(), b in any::<usize>()) {
        let (Some(q), Some(p)) = (some_functor(k, h, a), some_functor(g, h, b)) else { return Ok(()) };
        let fp = fiber_products(&q, &p).unwrap();
        prop_assert!(fp.comparison.is_fully_faithful());
        if classify_gpd_map(&p).isofibration {
            prop_assert!(classify_gpd_map(&fp.comparison).equivalence);
        }
    }

    #[test]
    fn constant_maps_reedy(g in 0usize..6, h in 0usize..6, pick in any::<usize>()) {
        let Some(f) = some_functor(g, h, pick) else { return Ok(()) };
        let p = constant_map(&f).unwrap();
        let r = check_reedy(&p, 2).unwrap();
        prop_assert_eq!(r.cofibration(), r.objectwise_cofibration());
        let bf = nerve_bisset_map(&p, &nerve_bisset(p.dom(), 2), &nerve_bisset(p.cod(), 2)).unwrap();
        let b = reedy_check_bisset(&bf, 2).unwrap();
        for n in 0..=2 {
            prop_assert_eq!(r.levels[n].fibration, b.levels[n].report.passed, "level {}", n);
        }
    }

    #[test]
    fn weak_lifting_subsumes_strict(g in 0usize..6, h in 0usize..6, pick in any::<usize>(), inc in 0usize..3, sq in any::<usize>()) {
        let Some(fun) = some_functor(g, h, pick) else { return Ok(()) };
        let p = nerve_map(&fun, 2).unwrap();
        let i = match inc {
            0 => Subsimplex::vertex(1, 0),
            1 => Subsimplex::boundary(1),
            _ => Subsimplex::horn(2, 1),
        }
        .unwrap()
        .inclusion()
        .unwrap();
        let mut squares: Vec<(SSetMap, SSetMap)> = Vec::new();
        for f in enumerate_maps(i.dom(), p.dom()).unwrap() {
            let fp = f.then(&p).unwrap();
            for g in enumerate_maps(i.cod(), p.cod()).unwrap() {
                if i.then(&g).unwrap().agrees_with(&fp) {
                    squares.push((f.clone(), g));
                }
            }
        }
        if squares.is_empty() {
            return Ok(());
        }
        let (f, g) = squares.swap_remove(sq % squares.len());
        let prob = LiftingProblem::new(i, p, f, g).unwrap();
        let strict = solve_strict(&prob).unwrap();
        if strict.is_some() {
            prop_assert!(solve_weak(&prob).unwrap().is_some());
        }
        let (fwd, rev) = (all_strict_solutions(&prob, false).unwrap(), all_strict_solutions(&prob, true).unwrap());
        prop_assert_eq!(fwd.len(), rev.len());
        prop_assert_eq!(strict.is_some(), !fwd.is_empty());
    }

    #[test]
    fn sset_files_round_trip(n in 0usize..=3, pick in any::<usize>()) {
        let sub = subcomplex(n, pick);
        let text = to_string(&Object::SSet(sub.sset().clone()));
        let Object::SSet(back) = parse_str(&text).unwrap() else { panic!("wrong kind") };
        prop_assert_eq!(&*back, &**sub.sset());
    }
}
