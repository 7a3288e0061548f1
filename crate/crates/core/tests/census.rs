use std::sync::Arc;

use artin_epi_core::catalog::Catalog;
use artin_epi_core::classification::{
    brute_oracle, classify_rank2, classify_small, f4_census, h3_procedure, lift_search, orbit_count, staged_search,
    zinde_census, Classification, LiftCase, Quotient, SearchContext, SearchSpec,
};
use artin_epi_core::maps::{center_obstruction_rank2, Canonicalizer};
use artin_epi_core::{build_graph, build_group, CoxeterGraph, Elem, Family, FiniteCoxeterGroup, GeneratorMap, DEFAULT_ELEMENT_LIMIT};

fn group(f: Family, r: usize, m: Option<u32>) -> Arc<FiniteCoxeterGroup> {
    Arc::new(build_group(&build_graph(f, r, m).unwrap(), DEFAULT_ELEMENT_LIMIT).unwrap())
}

fn small_targets() -> Vec<Arc<FiniteCoxeterGroup>> {
    let mut out: Vec<_> = (1..=4).map(|r| group(Family::A, r, None)).collect();
    out.push(group(Family::B, 3, None));
    out.push(group(Family::B, 4, None));
    out.push(group(Family::D, 4, None));
    out.push(group(Family::H3, 3, None));
    out.extend((3..=12).map(|m| group(Family::I2, 2, Some(m))));
    out
}

fn raw(source: &CoxeterGraph, target: &Arc<FiniteCoxeterGroup>) -> Vec<Vec<Elem>> {
    let ctx = SearchContext::new(target.clone());
    let mut tuples = staged_search(&ctx, &SearchSpec::new(source.clone(), Quotient::Raw)).unwrap().tuples_by_node();
    tuples.sort();
    tuples
}

#[test]
fn raw_search_equals_brute_force() {
    for g in small_targets() {
        let source = g.graph();
        assert_eq!(raw(source, &g), brute_oracle(source, &g).unwrap(), "{}", source.label());
    }
}

#[test]
fn raw_search_equals_brute_force_across_types() {
    let pairs = [
        (build_graph(Family::A, 3, None).unwrap(), group(Family::B, 3, None)),
        (build_graph(Family::B, 3, None).unwrap(), group(Family::A, 3, None)),
        (build_graph(Family::H3, 3, None).unwrap(), group(Family::A, 4, None)),
        (build_graph(Family::I2, 2, Some(5)).unwrap(), group(Family::H3, 3, None)),
    ];
    for (source, target) in pairs {
        assert_eq!(raw(&source, &target), brute_oracle(&source, &target).unwrap(), "{} to {}", source.label(), target.graph().label());
    }
}

#[test]
fn conjugacy_quotient_counts_orbits() {
    for g in small_targets() {
        let ctx = SearchContext::new(g.clone());
        let mut spec = SearchSpec::new(g.graph().clone(), Quotient::UpToConjugacy);
        spec.check_generation = true;
        let result = staged_search(&ctx, &spec).unwrap();
        let brute = brute_oracle(g.graph(), &g).unwrap();
        let mut canon = Canonicalizer::new(g.clone());
        assert_eq!(result.final_tuples().len(), orbit_count(&mut canon, &brute), "{}", g.graph().label());

        let flags = result.generating.clone().unwrap();
        for (t, flag) in result.tuples_by_node().into_iter().zip(flags) {
            let map = GeneratorMap::new(g.graph().clone(), g.clone(), t).unwrap();
            assert!(map.is_homomorphism());
            assert_eq!(flag, map.is_surjective());
        }
    }
}

fn extraordinary_names(c: &Classification) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = c.extraordinary().map(|e| e.matches.clone()).collect();
    out.iter_mut().for_each(|m| m.sort());
    out.sort();
    out
}

#[test]
fn rank_two_classification() {
    for m in 3..=16 {
        let c = classify_rank2(m).unwrap();
        assert!(c.involution_check, "I2({m})");
        let names = extraordinary_names(&c);
        if m % 4 == 0 {
            assert_eq!(names, [["nu1"], ["nu2"]], "I2({m})");
            let g = group(Family::I2, 2, Some(m));
            let catalog = Catalog::new(g);
            for n in ["nu1", "nu2"] {
                assert!(center_obstruction_rank2(&catalog.map_named(n).unwrap()).unwrap().is_contradiction(), "I2({m}) {n}");
            }
        } else {
            assert!(names.is_empty(), "I2({m})");
        }
        for e in c.extraordinary() {
            assert!(!e.all_involutions);
        }
    }
}

#[test]
fn small_classifications() {
    let cases: [(Family, usize, &[&[&str]]); 5] = [
        (Family::A, 3, &[&["artin_exc1"], &["artin_exc2"]]),
        (Family::B, 3, &[&["nu1"], &["nu2"]]),
        (Family::B, 4, &[&["nu1"]]),
        (Family::D, 4, &[]),
        (Family::H3, 3, &[&["nu1", "nu2"]]),
    ];
    for (f, r, expected) in cases {
        let g = group(f, r, None);
        let c = classify_small(&g).unwrap();
        assert!(c.involution_check && c.declared_automorphisms_complete, "{f:?}{r}");
        assert_eq!(extraordinary_names(&c), expected, "{f:?}{r}");
        for e in c.extraordinary() {
            let map = GeneratorMap::new(g.graph().clone(), g.clone(), e.representative().to_vec()).unwrap();
            assert!(map.is_epimorphism() && !map.all_involutions());
        }
    }
}

#[test]
fn symmetric_quotient_counts() {
    for (f, n, classes) in [(Family::B, 3, 1), (Family::B, 4, 3), (Family::B, 5, 1), (Family::B, 6, 2), (Family::D, 6, 2)] {
        assert_eq!(zinde_census(f, n).unwrap().classes, classes, "{f:?}{n}");
    }
    assert_eq!(zinde_census(Family::D, 4).unwrap().joint_classes, Some(3));
    assert!(zinde_census(Family::A, 4).is_err());
}

#[test]
fn lifts_of_symmetric_quotients_are_empty() {
    for case in LiftCase::ALL {
        assert!(lift_search(case).unwrap().is_empty(), "{}", case.name());
    }
    let b6 = lift_search(LiftCase::B6Zeta6).unwrap();
    assert_eq!(b6.x_sizes, [56; 5]);
    assert_eq!(b6.y_sizes, [224, 192, 64, 0]);
}

#[test]
fn f4_and_h3_searches() {
    let f4 = f4_census(&SearchContext::new(group(Family::F4, 4, None))).unwrap();
    assert_eq!(
        (f4.classes, f4.classes_order_ge3, f4.pairs, f4.triples, f4.quadruples, f4.generating),
        (25, 17, 53, 513, 441, 0)
    );
    let h3 = h3_procedure().unwrap();
    assert_eq!((h3.c2, h3.x1, h3.x2, h3.y, h3.all_generate), (3, 16, 10, 2, true));
    let mut matches: Vec<_> = h3.matches.into_iter().flatten().collect();
    matches.sort();
    assert_eq!(matches, ["nu1", "nu2"]);
}

#[cfg(feature = "parallel")]
#[test]
fn results_do_not_depend_on_thread_count() {
    let g = group(Family::F4, 4, None);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let ctx = SearchContext::new(g.clone());
            let mut spec = SearchSpec::new(g.graph().clone(), Quotient::UpToConjugacy);
            spec.check_generation = true;
            (staged_search(&ctx, &spec).unwrap(), classify_small(&group(Family::B, 4, None)).unwrap().epimorphism_classes)
        })
    };
    let base = run(1);
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    for threads in [4, max] {
        assert_eq!(run(threads), base, "{threads} threads");
    }
}
