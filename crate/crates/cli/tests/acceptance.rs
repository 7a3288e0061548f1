//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.
//! Set `ARTIN_EPI_ACCEPTANCE_E7=1` to include the optional E7 census.

use std::sync::Arc;
use std::time::{Duration, Instant};

use artin_epi_core::catalog::{Catalog, CatalogEntry};
use artin_epi_core::classification::{
    brute_oracle, classify_rank2, classify_small, f4_census, h3_procedure, lift_search, staged_search, xj_census,
    zinde_census, Classification, LiftCase, Quotient, SearchContext, SearchSpec,
};
use artin_epi_core::maps::center_obstruction_rank2;
use artin_epi_core::reproduce::reproduce;
use artin_epi_core::wall::{
    braid_obstruction, compatibility_check, parse_equation, total_offset, u_table, wall_table, WorkedExample,
};
use artin_epi_core::{
    build_graph, build_group, build_group_with_backend, ArtinWord, Backend, Error, Family, FiniteCoxeterGroup,
    GeneratorMap, DEFAULT_ELEMENT_LIMIT,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn group(f: Family, r: usize, m: Option<u32>) -> Arc<FiniteCoxeterGroup> {
    Arc::new(build_group(&build_graph(f, r, m).unwrap(), DEFAULT_ELEMENT_LIMIT).unwrap())
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn all(parts: Vec<(bool, String)>) -> Outcome {
    let pass = parts.iter().all(|(p, _)| *p);
    let detail = parts
        .into_iter()
        .map(|(p, d)| if p { d } else { format!("[FAIL] {d}") })
        .collect::<Vec<_>>()
        .join("; ");
    Outcome::new(pass, detail)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let b6 = lift_search(LiftCase::B6Zeta6).unwrap();
    let b41 = lift_search(LiftCase::B4Zeta41).unwrap();
    let b42 = lift_search(LiftCase::B4Zeta42).unwrap();
    let elapsed = start.elapsed();
    all(vec![
        (b6.x_sizes == [56; 5], format!("B6 |X_i| = {:?}", b6.x_sizes)),
        (b6.y_sizes == [224, 192, 64, 0], format!("B6 |Y_3..Y_6| = {:?}", b6.y_sizes)),
        (b6.is_empty(), format!("B6 epimorphisms = {}", b6.epimorphisms)),
        (b41.is_empty() && b42.is_empty(), format!("B4 epimorphisms = {}, {}", b41.epimorphisms, b42.epimorphisms)),
        (elapsed < Duration::from_secs(60), "runtime under 60 s".into()),
    ])
}

fn criterion_2() -> Outcome {
    let counts: Vec<usize> =
        [LiftCase::D6Zeta6, LiftCase::D4Zeta41, LiftCase::D4Zeta42].map(|c| lift_search(c).unwrap().epimorphisms).into();
    Outcome::new(counts == [0, 0, 0], format!("D6-zeta6, D4-zeta4_1, D4-zeta4_2 epimorphisms = {counts:?}"))
}

fn criterion_3() -> Outcome {
    let h3 = h3_procedure().unwrap();
    let mut names: Vec<String> = h3.matches.iter().flatten().cloned().collect();
    names.sort();
    all(vec![
        ((h3.c2, h3.x1, h3.x2, h3.y) == (3, 16, 10, 2), format!("(C2, X1, X2, Y) = {:?}", (h3.c2, h3.x1, h3.x2, h3.y))),
        (h3.all_generate, format!("all X2 triples generate: {}", h3.all_generate)),
        (names == ["nu1", "nu2"] && h3.matches.iter().all(Option::is_some), format!("Y conjugate to {names:?}")),
    ])
}

fn xj(f: Family, r: usize, order: &[usize]) -> (usize, Vec<usize>) {
    let ctx = SearchContext::new(group(f, r, None));
    let census = xj_census(&ctx, order).unwrap();
    (ctx.classes().len(), census.counts())
}

fn criterion_4() -> Outcome {
    let f4 = f4_census(&SearchContext::new(group(Family::F4, 4, None))).unwrap();
    let f4_counts = (f4.classes, f4.classes_order_ge3, f4.pairs, f4.triples, f4.quadruples, f4.generating);
    // Placement orders are chosen so each stage is one of the listed X_J.
    let h4 = xj(Family::H4, 4, &[3, 1, 0, 2]);
    let (e6_classes, c) = xj(Family::E6, 6, &[0, 1, 5, 3]);
    // Stage 2 is X_{1,2}, which has no listed value.
    let e6 = (e6_classes, vec![c[0], c[2], c[3]]);
    let mut parts = vec![
        (f4_counts == (25, 17, 53, 513, 441, 0), format!("F4 (classes, ge3, pairs, triples, quads, gen) = {f4_counts:?}")),
        (h4 == (34, vec![8, 6, 6, 0]), format!("H4 classes {}, X-counts {:?} (expected 34; 8, 6, 6, 0)", h4.0, h4.1)),
        (e6 == (25, vec![8, 11, 0]), format!("E6 classes {}, X-counts {:?} (expected 25; 8, 11, 0)", e6.0, e6.1)),
    ];
    if std::env::var("ARTIN_EPI_ACCEPTANCE_E7").is_ok_and(|v| v == "1") {
        let ctx = SearchContext::new(group(Family::E7, 7, None));
        let x1 = xj_census(&ctx, &[0]).unwrap().counts();
        let rest = xj_census(&ctx, &[1, 2, 4, 6, 0]).unwrap().counts();
        let e7 = (ctx.classes().len(), x1[0], rest[3], rest[4]);
        parts.push((e7 == (60, 25, 840, 0), format!("E7 (classes, X_1, X_2357, X_12357) = {e7:?}")));
    } else {
        parts.push((true, "E7 optional, not run".into()));
    }
    let e8 = build_group(&build_graph(Family::E8, 8, None).unwrap(), DEFAULT_ELEMENT_LIMIT);
    parts.push((matches!(e8, Err(Error::OrderExceedsLimit { .. })), "E8 refused".into()));
    all(parts)
}

fn criterion_5() -> Outcome {
    let count = |f, n| zinde_census(f, n).unwrap();
    let b: Vec<usize> = [3, 4, 5, 6].map(|n| count(Family::B, n).classes).into();
    let d6 = count(Family::D, 6).classes;
    let d4 = count(Family::D, 4).joint_classes;

    let catalog = Catalog::new(group(Family::B, 6, None));
    let eta = catalog.map_named("eta").unwrap();
    let zeta = catalog.map_named("zeta6").unwrap();
    let sym = Catalog::new(catalog.sym().unwrap());
    let alpha = sym.automorphism_named("alpha_sym6").unwrap();
    let composed: Vec<_> = eta.images().iter().map(|&x| alpha.apply(x)).collect();
    let Ok(CatalogEntry::Elements(r)) = sym.get("r_sym6") else { panic!("r_sym6 lists elements") };
    all(vec![
        (b == [1, 3, 1, 2], format!("zinde(B, 3..6) = {b:?}")),
        (d6 == 2, format!("zinde(D,6) = {d6}")),
        (d4 == Some(3), format!("zinde(D,4) up to diagram automorphism = {d4:?}")),
        (composed == zeta.images() && r == zeta.images(), "alpha o eta = zeta6 via r-words".into()),
    ])
}

fn extraordinary_names(c: &Classification) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = c.extraordinary().map(|e| e.matches.clone()).collect();
    out.iter_mut().for_each(|m| m.sort());
    out.sort();
    out
}

fn criterion_6() -> Outcome {
    let mut with = Vec::new();
    let mut ok = true;
    for m in 3..=16 {
        let c = classify_rank2(m).unwrap();
        let names = extraordinary_names(&c);
        if !names.is_empty() {
            with.push(m);
        }
        let want: Vec<Vec<String>> =
            if m % 4 == 0 { vec![vec!["nu1".into()], vec!["nu2".into()]] } else { Vec::new() };
        ok &= names == want;
        if m % 4 == 0 {
            let catalog = Catalog::new(group(Family::I2, 2, Some(m)));
            for n in ["nu1", "nu2"] {
                ok &= center_obstruction_rank2(&catalog.map_named(n).unwrap()).unwrap().is_contradiction();
            }
        }
    }
    Outcome::new(ok && with == [4, 8, 12, 16], format!("extraordinary for m in {with:?}, two classes each, center obstruction contradicts"))
}

fn contradicts(nu: &GeneratorMap) -> bool {
    let g = nu.target();
    let n = g.rank();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.graph().m(a, b) >= 3)
        .any(|e| braid_obstruction(nu, e, None, None).unwrap().is_contradiction())
}

fn criterion_7() -> Outcome {
    let mut cases: Vec<(Family, usize, Option<u32>, &str, bool)> = Vec::new();
    cases.extend((3..=6).map(|n| (Family::B, n, None, "nu1", true)));
    cases.extend([3, 5].map(|n| (Family::B, n, None, "nu2", true)));
    for n in [5, 7] {
        cases.extend(["nu1", "nu2"].map(|nu| (Family::D, n, None, nu, true)));
    }
    cases.extend(["nu1", "nu2"].map(|nu| (Family::H3, 3, None, nu, true)));
    for (f, r, m) in [
        (Family::A, 3, None),
        (Family::B, 3, None),
        (Family::B, 4, None),
        (Family::D, 4, None),
        (Family::D, 5, None),
        (Family::H3, 3, None),
        (Family::F4, 4, None),
        (Family::I2, 2, Some(8)),
    ] {
        cases.push((f, r, m, "standard", false));
    }
    let wrong: Vec<String> = cases
        .iter()
        .filter(|&&(f, r, m, nu, want)| contradicts(&Catalog::new(group(f, r, m)).map_named(nu).unwrap()) != want)
        .map(|&(f, r, m, nu, _)| format!("{} {nu}", build_graph(f, r, m).unwrap().label()))
        .collect();

    let mut entries = (0, 0);
    let mut sums = true;
    for case in WorkedExample::ALL {
        let rep = reproduce(case).unwrap();
        entries.0 += rep.table_matches();
        entries.1 += rep.tables.len();
        let sum = parse_equation(&rep.sum, case.letters(), rep.report.probe.len()).unwrap();
        sums &= rep.all_match() && rep.computed_sum == Some(sum);
    }
    all(vec![
        (wrong.is_empty(), format!("{} verdicts, wrong: {wrong:?}", cases.len())),
        (entries.0 == entries.1 && entries.1 == 54, format!("table entries {}/{}", entries.0, entries.1)),
        (sums, "equations and summed contradictions are rows".into()),
    ])
}

fn isomorphic(a: &FiniteCoxeterGroup, b: &FiniteCoxeterGroup) -> bool {
    a.order() == b.order()
        && a.elements().all(|x| (0..a.rank()).all(|i| a.mul(x, a.generator(i)) == b.mul(x, b.generator(i))))
        && a.conjugacy_classes() == b.conjugacy_classes()
}

fn criterion_8() -> Outcome {
    let backend = |f, r, m, k| build_group_with_backend(&build_graph(f, r, m).unwrap(), DEFAULT_ELEMENT_LIMIT, k).unwrap();
    let backends = [(Family::B, 4), (Family::D, 5), (Family::A, 4)]
        .iter()
        .all(|&(f, r)| isomorphic(&backend(f, r, None, Backend::RootPerm), &backend(f, r, None, Backend::SignedPerm)))
        && (3..=6).all(|m| isomorphic(&backend(Family::I2, 2, Some(m), Backend::RootPerm), &backend(Family::I2, 2, Some(m), Backend::Dihedral)));

    let types = [(Family::A, 4, None), (Family::B, 5, None), (Family::D, 5, None), (Family::H3, 3, None), (Family::F4, 4, None), (Family::H4, 4, None), (Family::I2, 2, Some(8))];
    let groups: Vec<_> = types.iter().map(|&(f, r, m)| group(f, r, m)).collect();
    let lengths = groups[..5].iter().all(|g| g.elements().all(|x| g.inversion_count(x) == Some(g.length(x))));

    let mut rng = StdRng::seed_from_u64(0);
    let mut words = 0;
    let mut walls = true;
    for g in &groups {
        for _ in 0..200 {
            let len = rng.gen_range(0..=24);
            let w = ArtinWord::from_letters((0..len).map(|_| (rng.gen_range(0..g.rank()), if rng.gen() { 1 } else { -1 })).collect());
            let v = ArtinWord::from_letters((0..8).map(|_| (rng.gen_range(0..g.rank()), 1)).collect());
            let x = g.word_element(&w.letters().iter().map(|&(i, _)| i).collect::<Vec<_>>());
            let y = g.word_element(&v.letters().iter().map(|&(i, _)| i).collect::<Vec<_>>());
            walls &= compatibility_check(&w, g).unwrap()
                && total_offset(&w, g).unwrap() == w.exponent_sum()
                && wall_table(&w.concat(&v), g).unwrap() == wall_table(&w, g).unwrap().compose(&wall_table(&v, g).unwrap())
                && u_table(g, g.mul(x, y)) == u_table(g, x).compose(&u_table(g, y));
            words += 1;
        }
    }

    let mut oracle = 0;
    let mut oracle_ok = true;
    let mut targets: Vec<_> = (1..=4).map(|r| group(Family::A, r, None)).collect();
    targets.extend([group(Family::B, 3, None), group(Family::B, 4, None), group(Family::D, 4, None), group(Family::H3, 3, None)]);
    targets.extend((3..=12).map(|m| group(Family::I2, 2, Some(m))));
    for t in &targets {
        let ctx = SearchContext::new(t.clone());
        let mut found = staged_search(&ctx, &SearchSpec::new(t.graph().clone(), Quotient::Raw)).unwrap().tuples_by_node();
        found.sort();
        oracle_ok &= found == brute_oracle(t.graph(), t).unwrap();
        oracle += 1;
    }

    let f4 = group(Family::F4, 4, None);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let ctx = SearchContext::new(f4.clone());
            staged_search(&ctx, &SearchSpec::new(f4.graph().clone(), Quotient::UpToConjugacy)).unwrap()
        })
    };
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    let base = run(1);
    let determinism = run(4) == base && run(max) == base;

    all(vec![
        (backends, "backend isomorphisms".into()),
        (lengths, "length = inversion count".into()),
        (walls, format!("u/U homomorphism, compatibility, offset conservation on {words} words")),
        (oracle_ok, format!("staged search = brute oracle on {oracle} targets")),
        (determinism, format!("identical census with 1, 4, {max} threads")),
    ])
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    for m in 3..=16 {
        let c = classify_small(&group(Family::I2, 2, Some(m))).unwrap();
        let names = extraordinary_names(&c);
        let want = if m % 4 == 0 { vec![vec!["nu1".to_string()], vec!["nu2".to_string()]] } else { Vec::new() };
        if names != want {
            parts.push((false, format!("I2({m}) {names:?}")));
        }
    }
    let listed: [(Family, usize, &[&[&str]]); 5] = [
        (Family::B, 3, &[&["nu1"], &["nu2"]]),
        (Family::B, 4, &[&["nu1"]]),
        (Family::D, 4, &[]),
        (Family::A, 3, &[&["artin_exc1"], &["artin_exc2"]]),
        (Family::H3, 3, &[&["nu1", "nu2"]]),
    ];
    for (f, r, want) in listed {
        let c = classify_small(&group(f, r, None)).unwrap();
        let names = extraordinary_names(&c);
        let pass = names == want && c.involution_check && c.declared_automorphisms_complete;
        parts.push((pass, format!("{} {names:?}", build_graph(f, r, None).unwrap().label())));
    }
    let zinde = zinde_census(Family::B, 4).unwrap();
    let named: Vec<&str> = zinde.matches.iter().flatten().map(String::as_str).collect();
    parts.push((
        named.contains(&"zeta4_1") && named.contains(&"zeta4_2"),
        format!("B4 to Sym4 exceptions {named:?}"),
    ));
    all(parts)
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 9] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9];
    let mut failed = Vec::new();
    for (k, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = c();
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {} ({:.1} s)", k + 1, out.detail, start.elapsed().as_secs_f64());
        if !out.pass {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
