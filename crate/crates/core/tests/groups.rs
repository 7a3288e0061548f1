use artin_epi_core::wall::{u_table, u_table_from_roots};
use artin_epi_core::{build_graph, build_group, build_group_with_backend, Backend, Family, FiniteCoxeterGroup, DEFAULT_ELEMENT_LIMIT};
use proptest::prelude::*;

fn with(f: Family, r: usize, m: Option<u32>, backend: Backend) -> FiniteCoxeterGroup {
    build_group_with_backend(&build_graph(f, r, m).unwrap(), DEFAULT_ELEMENT_LIMIT, backend).unwrap()
}

fn group(f: Family, r: usize, m: Option<u32>) -> FiniteCoxeterGroup {
    build_group(&build_graph(f, r, m).unwrap(), DEFAULT_ELEMENT_LIMIT).unwrap()
}

/// Both enumerations number elements by breadth-first search on the same
/// Cayley graph, so an isomorphism is the identity on indices.
fn assert_isomorphic(a: &FiniteCoxeterGroup, b: &FiniteCoxeterGroup) {
    assert_eq!(a.order(), b.order());
    assert_eq!(a.lengths(), b.lengths());
    for x in a.elements() {
        for i in 0..a.rank() {
            assert_eq!(a.mul(x, a.generator(i)), b.mul(x, b.generator(i)));
            assert_eq!(a.mul(a.generator(i), x), b.mul(b.generator(i), x));
        }
        assert_eq!(a.inv(x), b.inv(x));
        assert_eq!(a.element_order(x), b.element_order(x));
    }
    assert_eq!(a.reflections(), b.reflections());
    assert_eq!(a.longest_element(), b.longest_element());
    assert_eq!(a.conjugacy_classes(), b.conjugacy_classes());
}

#[test]
fn signed_and_root_backends_agree() {
    for (f, r) in [(Family::A, 3), (Family::A, 4), (Family::B, 3), (Family::B, 4), (Family::D, 4), (Family::D, 5)] {
        assert_isomorphic(&with(f, r, None, Backend::RootPerm), &with(f, r, None, Backend::SignedPerm));
    }
}

#[test]
fn dihedral_and_root_backends_agree() {
    // Exact roots exist for m ≤ 6 only; larger m use the dihedral backend alone.
    for m in 3..=6 {
        assert_isomorphic(&with(Family::I2, 2, Some(m), Backend::RootPerm), &with(Family::I2, 2, Some(m), Backend::Dihedral));
    }
}

#[test]
fn length_equals_inversion_count() {
    for (f, r, m) in [
        (Family::A, 4, None),
        (Family::B, 4, None),
        (Family::D, 5, None),
        (Family::H3, 3, None),
        (Family::F4, 4, None),
        (Family::H4, 4, None),
        (Family::I2, 2, Some(5)),
    ] {
        let g = with(f, r, m, Backend::RootPerm);
        for x in g.elements() {
            assert_eq!(g.inversion_count(x), Some(g.length(x)), "{f:?}{r} element {x}");
        }
    }
}

#[test]
fn orders_and_reflection_counts() {
    for (f, r, m) in [
        (Family::A, 5, None),
        (Family::B, 5, None),
        (Family::D, 6, None),
        (Family::H3, 3, None),
        (Family::H4, 4, None),
        (Family::F4, 4, None),
        (Family::E6, 6, None),
        (Family::I2, 2, Some(16)),
    ] {
        let graph = build_graph(f, r, m).unwrap();
        let g = group(f, r, m);
        assert_eq!(g.order() as u128, graph.group_order());
        assert_eq!(g.reflections().len(), graph.reflection_count());
        assert_eq!(g.length(g.longest_element()), graph.reflection_count());
        let classes = g.conjugacy_classes();
        assert_eq!(classes.class_sizes.iter().sum::<usize>(), g.order());
    }
}

#[test]
fn u_from_words_matches_u_from_roots() {
    for (f, r) in [(Family::B, 3), (Family::D, 4), (Family::H3, 3)] {
        let g = group(f, r, None);
        for x in g.elements() {
            assert_eq!(Some(u_table(&g, x)), u_table_from_roots(&g, x));
        }
    }
}

fn types() -> impl Strategy<Value = (Family, usize, Option<u32>)> {
    prop_oneof![
        Just((Family::A, 4, None)),
        Just((Family::B, 4, None)),
        Just((Family::D, 5, None)),
        Just((Family::H3, 3, None)),
        Just((Family::F4, 4, None)),
        Just((Family::I2, 2, Some(8))),
    ]
}

proptest! {
    #[test]
    fn u_is_a_homomorphism(t in types(), a in proptest::collection::vec(0usize..6, 0..12), b in proptest::collection::vec(0usize..6, 0..12)) {
        let (f, r, m) = t;
        let g = group(f, r, m);
        let a: Vec<usize> = a.into_iter().map(|i| i % r).collect();
        let b: Vec<usize> = b.into_iter().map(|i| i % r).collect();
        let (x, y) = (g.word_element(&a), g.word_element(&b));
        prop_assert_eq!(u_table(&g, g.mul(x, y)), u_table(&g, x).compose(&u_table(&g, y)));
    }

    #[test]
    fn words_multiply(t in types(), a in proptest::collection::vec(0usize..6, 0..16), b in proptest::collection::vec(0usize..6, 0..16)) {
        let (f, r, m) = t;
        let g = group(f, r, m);
        let a: Vec<usize> = a.into_iter().map(|i| i % r).collect();
        let b: Vec<usize> = b.into_iter().map(|i| i % r).collect();
        let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(g.word_element(&ab), g.mul(g.word_element(&a), g.word_element(&b)));
        let x = g.word_element(&ab);
        prop_assert_eq!(g.sign(x), if ab.len().is_multiple_of(2) { 1 } else { -1 });
        prop_assert_eq!(g.word_element(&g.reduced_word(x)), x);
    }
}
