use std::sync::Arc;

use ssx_core::bisset::{
    d_star, d_star_agreement, d_star_fast, diag, exterior, exterior_map, nerve_bisset, nerve_bisset_map,
    reedy_check_bisset, sing, sing_map, BiSSetMap, BiSSetView,
};
use ssx_core::gpd::{nerve, FinGroupoid};
use ssx_core::sgpd::{chaotic_resolution, constant, discrete, sgpd_fiber_product, FiberMode, SGpdMap, SimpGroupoid};
use ssx_core::sset::{
    enumerate_maps, faces_containing, homology, product, FinSSet, MapSearch, SSetMap, SimplexRef, SimplexWord,
    Subsimplex, TupleSSet,
};

fn simplex(n: usize) -> Arc<FinSSet> {
    Subsimplex::simplex(n).unwrap().sset().clone()
}

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

fn subsimplices(n: usize) -> Vec<Subsimplex> {
    Subsimplex::all_subcomplexes(n, false).unwrap()
}

#[test]
fn nerve_rows() {
    let a = Subsimplex::boundary(2).unwrap().sset().clone();
    let v = nerve_bisset(&Arc::new(discrete(&a).unwrap()), 3);
    for m in 0..=3 {
        assert_eq!(*v.row(m).unwrap(), *a);
    }
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let v = nerve_bisset(&Arc::new(constant(&z2).unwrap()), 4);
    for m in 0..=4 {
        assert_eq!(v.row(m).unwrap().counts(), vec![1 << m]);
    }
    v.check_identities().unwrap();
    let x = chaotic_resolution(&z2, 2).unwrap().groupoid;
    let v = nerve_bisset(&x, 3);
    assert_eq!(*v.row(0).unwrap(), **x.obj());
    assert_eq!(*v.row(1).unwrap(), **x.mor());
    v.check_identities().unwrap();
}

#[test]
fn diagonal_of_exterior_is_product() {
    let pairs = [(simplex(1), simplex(1)), (simplex(2), simplex(1)), (Subsimplex::horn(2, 1).unwrap().sset().clone(), simplex(1))];
    for (a, b) in pairs {
        let d = 3;
        let dg = diag(&exterior(&a, &b, d).unwrap(), d).unwrap();
        let p = product(&a, &b).unwrap();
        let pd = p.sset().truncate(d);
        assert_eq!(dg.sset.counts(), pd.counts());
        // a diagonal n-simplex is a word in the copy of B indexed by an n-simplex of A
        let la: Vec<_> = (0..=d).map(|n| a.level(n).unwrap()).collect();
        let cmp = SSetMap::from_fn(&dg.sset, p.sset(), |x| {
            let w = dg.key(x);
            let (k, idx) = (w.base().dim(), w.base().index());
            let per = b.count(k);
            let bw = SimplexWord::from_repeats(SimplexRef::new(k, idx % per), w.dim(), w.repeats()).unwrap();
            let aw = la[x.dim()].simplices[idx / per];
            Ok(p.word_of(&[aw, bw]).unwrap())
        })
        .unwrap();
        assert!(cmp.check().mono);
        assert_eq!(cmp.dom().counts(), pd.counts());
        assert_eq!(homology(&dg.sset, 2).unwrap(), homology(&pd, 2).unwrap());
    }
}

#[test]
fn diagonal_of_constant_nerve_is_classical_nerve() {
    let j = Arc::new(FinGroupoid::interval());
    let dg = diag(&nerve_bisset(&Arc::new(constant(&j).unwrap()), 3), 3).unwrap();
    let n = nerve(&j, 3).unwrap();
    assert_eq!(dg.sset.counts(), n.counts());
    assert_eq!(dg.sset.truncation(), n.truncation());
}

#[test]
fn sing_examples() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let s = sing(&Arc::new(constant(&z2).unwrap()), 3).unwrap();
    assert_eq!(s.sset.counts(), vec![1, 1, 1, 1]);
    let a = Subsimplex::boundary(2).unwrap().sset().clone();
    let s = sing(&Arc::new(discrete(&a).unwrap()), 3).unwrap();
    assert_eq!(s.sset.counts(), a.counts());
    assert_eq!(*s.sset, a.truncate(3));
}

#[test]
fn exterior_rows_count_simplices() {
    let v = exterior(&simplex(1), &simplex(1), 2).unwrap();
    assert_eq!(v.row(1).unwrap().counts(), vec![6, 3]);
    let v = exterior(&simplex(0), &simplex(2), 3).unwrap();
    for m in 0..=3 {
        assert_eq!(*v.row(m).unwrap(), *simplex(2));
    }
    v.check_identities().unwrap();
}

#[test]
fn d_star_of_simplex_is_bisimplex() {
    let d2 = simplex(2);
    let ds = d_star(&d2, Some(&SSetMap::identity(&d2)), 3).unwrap();
    let cmp = ds.comparison.unwrap();
    for m in 0..=3 {
        assert!(cmp.row(m).check().iso);
        let copies = d2.level(m).unwrap().len();
        assert_eq!(ds.view.row(m).unwrap().counts(), vec![3 * copies, 3 * copies, copies]);
    }
}

#[test]
fn d_star_of_horn_row_zero() {
    let horn = Subsimplex::horn(2, 1).unwrap();
    let gamma = horn.inclusion().unwrap();
    let ds = d_star(horn.sset(), Some(&gamma), 2).unwrap();
    let r0 = ds.view.row(0).unwrap();
    assert_eq!(r0.count(1), 4);
    assert_eq!(r0.count(0), 2 + 3 + 2);
    for m in 0..=2 {
        assert!(ds.comparison.as_ref().unwrap().row(m).check().mono);
    }
}

#[test]
fn d_star_rejects_non_mono() {
    let d1 = simplex(1);
    let c = SSetMap::constant(&d1, &simplex(0), SimplexRef::new(0, 0)).unwrap();
    assert!(d_star(&d1, Some(&c), 1).is_err());
}

#[test]
fn column_lemma() {
    for n in 0..=3 {
        for sub in subsimplices(n) {
            let a = sub.sset();
            let gamma = sub.inclusion().unwrap();
            let h = a.dim().min(2) + 1;
            let ds = d_star(a, Some(&gamma), h).unwrap();
            for m in 0..=h {
                for alpha in &a.level(m).unwrap().simplices {
                    let c = faces_containing(a, alpha).unwrap();
                    assert!(homology(&c.sset, 2).unwrap().is_point(), "C_{alpha} in {:?}", sub.maximal_masks());
                }
                assert!(ds.comparison.as_ref().unwrap().row(m).check().mono);
            }
        }
    }
}

#[test]
fn two_constructions_of_d_star_agree() {
    for n in 0..=3 {
        for sub in subsimplices(n) {
            let a = sub.sset();
            let h = 4;
            let f = d_star_agreement(a, h).unwrap();
            for m in 0..=h {
                assert!(f.row(m).check().iso, "row {m} of {:?}", sub.maximal_masks());
            }
        }
    }
}

/// Counts families of row maps `d*A → V` on rows `0..=h` that commute with horizontal faces
/// and degeneracies.
fn count_row_families(src: &Arc<BiSSetView>, v: &Arc<BiSSetView>, h: usize) -> usize {
    fn rec(src: &Arc<BiSSetView>, v: &Arc<BiSSetView>, h: usize, prev: Option<&SSetMap>, m: usize) -> usize {
        if m > h {
            return 1;
        }
        let (rs, rv) = (src.row(m).unwrap(), v.row(m).unwrap());
        let mut search = MapSearch::new(&rs, &rv).unwrap();
        if let Some(p) = prev {
            for i in 0..=m {
                let via = v.hface(m, i).unwrap();
                let target = src.hface(m, i).unwrap().then(p).unwrap();
                search.over(&via, &target);
            }
            for i in 0..m {
                let s = src.hdegen(m - 1, i).unwrap();
                let img = p.then(&v.hdegen(m - 1, i).unwrap()).unwrap();
                if search.fix_along(&s, &img).is_err() {
                    return 0;
                }
            }
        }
        let mut total = 0;
        for f in search.all().unwrap() {
            total += rec(src, v, h, Some(&f), m + 1);
        }
        total
    }
    rec(src, v, h, None, 0)
}

#[test]
fn adjunction_probe() {
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let targets: Vec<(&str, Box<dyn Fn(usize) -> Arc<BiSSetView>>)> = vec![
        ("nerve of Z/2", Box::new(move |h| nerve_bisset(&Arc::new(constant(&z2).unwrap()), h))),
        ("Δ¹ ⊠ Δ⁰", Box::new(|h| exterior(&simplex(1), &simplex(0), h).unwrap())),
    ];
    let sources = [
        simplex(1),
        simplex(2),
        Subsimplex::horn(2, 1).unwrap().sset().clone(),
        Subsimplex::boundary(2).unwrap().sset().clone(),
    ];
    for a in &sources {
        let h = a.dim() + 1;
        let ds = d_star_fast(a, h).unwrap();
        for (name, v) in &targets {
            let v = v(h);
            let families = count_row_families(&ds, &v, h);
            let dv = diag(&v, h).unwrap();
            let direct = enumerate_maps(a, &dv.sset).unwrap().len();
            assert_eq!(families, direct, "{name} from a set with counts {:?}", a.counts());
        }
    }
}

#[test]
fn sing_preserves_strict_fiber_products() {
    let pt = point();
    let j = Arc::new(FinGroupoid::interval());
    let z2 = Arc::new(FinGroupoid::cyclic(2));
    let cj = Arc::new(constant(&j).unwrap());
    let ch = chaotic_resolution(&z2, 2).unwrap().groupoid;
    let d = 2;
    let fp = sgpd_fiber_product(&to_point(&cj, &pt), &to_point(&ch, &pt), FiberMode::Strict).unwrap();
    let sp = sing(&fp.groupoid, d).unwrap();
    let (_, _, q) = sing_map(&to_point(&cj, &pt), d).unwrap();
    let (_, _, p) = sing_map(&to_point(&ch, &pt), d).unwrap();
    let pb = TupleSSet::pullback_by_levels(&q, &p).unwrap();
    let (_, _, a) = sing_map(&fp.projections.0, d).unwrap();
    let (_, _, b) = sing_map(&fp.projections.1, d).unwrap();
    let cmp = pb.pairing(&[a, b]).unwrap();
    assert_eq!(cmp.dom().counts(), sp.sset.counts());
    assert!(cmp.check().iso);
}

#[test]
fn reedy_examples() {
    // Δ⁰ ⊠ B has discrete columns, so every such map passes
    let horn = Subsimplex::horn(2, 1).unwrap();
    let f = exterior_map(&SSetMap::identity(&simplex(0)), &horn.inclusion().unwrap(), 2).unwrap();
    assert!(reedy_check_bisset(&f, 2).unwrap().passed());
    // column 0 of Λ²₁ ⊠ Δ⁰ → Δ² ⊠ Δ⁰ is the horn inclusion itself
    let f = exterior_map(&horn.inclusion().unwrap(), &SSetMap::identity(&simplex(0)), 2).unwrap();
    let r = reedy_check_bisset(&f, 2).unwrap();
    assert_eq!(r.levels.len(), 3);
    assert_eq!(r.first_failure().unwrap().n, 0);
    assert!(r.first_failure().unwrap().report.witness.is_some());
    // constant J → pt fails at level 1 where the diagonal N(J) → N(J) × N(J) is not Kan
    let pt = point();
    let cj = Arc::new(constant(&Arc::new(FinGroupoid::interval())).unwrap());
    let f = nerve_bisset_map(&to_point(&cj, &pt), &nerve_bisset(&cj, 2), &nerve_bisset(&pt, 2)).unwrap();
    assert_eq!(reedy_check_bisset(&f, 2).unwrap().first_failure().unwrap().n, 1);
    // nerve of a Reedy fibration of simplicial groupoids
    let ch = chaotic_resolution(&Arc::new(FinGroupoid::cyclic(2)), 2).unwrap().groupoid;
    let p = to_point(&ch, &pt);
    let (bx, by) = (nerve_bisset(&ch, 2), nerve_bisset(&pt, 2));
    let f = nerve_bisset_map(&p, &bx, &by).unwrap();
    assert!(reedy_check_bisset(&f, 2).unwrap().passed());
    let id = BiSSetMap::identity(&bx).unwrap();
    assert!(reedy_check_bisset(&id, 2).unwrap().passed());
}
