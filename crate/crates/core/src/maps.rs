//! Homomorphisms from an Artin group into an enumerated finite group, given by
//! generator images, and automorphisms of the target.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::error::Error;
use crate::graph::CoxeterGraph;
use crate::group::{ConjugacyClassTable, Elem, FiniteCoxeterGroup};
use crate::words::{alternating, ArtinWord};

/// `[x, y⟩^m` evaluated in `group`.
pub fn alternating_product(group: &FiniteCoxeterGroup, x: Elem, y: Elem, m: usize) -> Elem {
    group.product(&alternating(x, y, m))
}

/// Whether `[x, y⟩^m = [y, x⟩^m`.
pub fn braid_relation_holds(group: &FiniteCoxeterGroup, x: Elem, y: Elem, m: u32) -> bool {
    match m {
        2 => group.commute(x, y),
        3 => group.mul(group.mul(x, y), x) == group.mul(group.mul(y, x), y),
        _ => alternating_product(group, x, y, m as usize) == alternating_product(group, y, x, m as usize),
    }
}

#[derive(Clone)]
pub struct GeneratorMap {
    source: CoxeterGraph,
    target: Arc<FiniteCoxeterGroup>,
    images: Vec<Elem>,
}

impl fmt::Debug for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorMap")
            .field("source", &self.source.label())
            .field("target", &self.target.graph().label())
            .field("images", &self.images)
            .finish()
    }
}

impl PartialEq for GeneratorMap {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && Arc::ptr_eq(&self.target, &other.target) && self.images == other.images
    }
}

impl GeneratorMap {
    pub fn new(source: CoxeterGraph, target: Arc<FiniteCoxeterGroup>, images: Vec<Elem>) -> Result<Self, Error> {
        if images.len() != source.rank() {
            return Err(Error::PreconditionViolated(alloc::format!(
                "{} images for rank {}",
                images.len(),
                source.rank()
            )));
        }
        if let Some(x) = images.iter().find(|x| x.index() >= target.order()) {
            return Err(Error::PreconditionViolated(alloc::format!("element {x} not in target")));
        }
        Ok(Self { source, target, images })
    }

    /// The standard epimorphism `μ: σ_i ↦ s_i`.
    pub fn standard(group: &Arc<FiniteCoxeterGroup>) -> Self {
        Self { source: group.graph().clone(), target: group.clone(), images: group.generators().to_vec() }
    }

    pub fn source(&self) -> &CoxeterGraph {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteCoxeterGroup> {
        &self.target
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn image(&self, i: usize) -> Elem {
        self.images[i]
    }

    pub fn with_images(&self, images: Vec<Elem>) -> Self {
        Self { source: self.source.clone(), target: self.target.clone(), images }
    }

    pub fn evaluate(&self, word: &ArtinWord) -> Result<Elem, Error> {
        word.check_rank(self.images.len())?;
        let g = &self.target;
        Ok(word.letters().iter().fold(Elem::IDENTITY, |acc, &(i, e)| {
            let x = self.images[i];
            g.mul(acc, if e > 0 { x } else { g.inv(x) })
        }))
    }

    /// Pairs `(i, j)`, `i < j`, whose Artin relation fails.
    pub fn check_artin_relations(&self) -> Vec<(usize, usize)> {
        let n = self.images.len();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !braid_relation_holds(&self.target, self.images[i], self.images[j], self.source.m(i, j)) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    pub fn is_homomorphism(&self) -> bool {
        self.check_artin_relations().is_empty()
    }

    pub fn generated_subgroup(&self) -> Vec<Elem> {
        self.target.generated_subgroup(&self.images)
    }

    pub fn is_surjective(&self) -> bool {
        self.target.generates(&self.images)
    }

    pub fn is_epimorphism(&self) -> bool {
        self.is_homomorphism() && self.is_surjective()
    }

    pub fn all_involutions(&self) -> bool {
        self.images.iter().all(|&x| self.target.is_involution(x))
    }

    /// `Conj_w ∘ self`.
    pub fn conjugated(&self, w: Elem) -> Self {
        self.with_images(self.images.iter().map(|&x| self.target.conj(w, x)).collect())
    }

    /// `α ∘ self`.
    pub fn composed(&self, alpha: &Automorphism) -> Result<Self, Error> {
        if !Arc::ptr_eq(&self.target, &alpha.group) {
            return Err(Error::IncompatibleMaps);
        }
        Ok(self.with_images(self.images.iter().map(|&x| alpha.apply(x)).collect()))
    }

    /// Sorted element orders of the images.
    pub fn order_multiset(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.images.iter().map(|&x| self.target.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    /// Image tuple rendered as reduced words, e.g. `s1s2s3`.
    pub fn image_words(&self) -> Vec<String> {
        self.images.iter().map(|&x| element_word(&self.target, x)).collect()
    }
}

/// `s_{i_1}⋯s_{i_k}` for the lexicographically least reduced word, `1` for
/// the identity.
pub fn element_word(group: &FiniteCoxeterGroup, x: Elem) -> String {
    use core::fmt::Write;
    let w = group.reduced_word(x);
    if w.is_empty() {
        return String::from("1");
    }
    let mut out = String::new();
    for i in w {
        let _ = write!(out, "s{}", i + 1);
    }
    out
}

fn check_compatible(a: &GeneratorMap, b: &GeneratorMap) -> Result<(), Error> {
    if a.source != b.source || !Arc::ptr_eq(&a.target, &b.target) {
        return Err(Error::IncompatibleMaps);
    }
    Ok(())
}

/// Some `w` with `Conj_w ∘ a = b`, the least such by index.
pub fn conjugacy_between(a: &GeneratorMap, b: &GeneratorMap) -> Result<Option<Elem>, Error> {
    check_compatible(a, b)?;
    let g = &a.target;
    Ok(g.elements().find(|&w| a.images.iter().zip(&b.images).all(|(&x, &y)| g.conj(w, x) == y)))
}

/// Canonical forms of image tuples under simultaneous conjugation.
pub struct Canonicalizer {
    group: Arc<FiniteCoxeterGroup>,
    classes: ConjugacyClassTable,
    centralizers: HashMap<u32, Vec<Elem>>,
}

impl Canonicalizer {
    pub fn new(group: Arc<FiniteCoxeterGroup>) -> Self {
        let classes = group.conjugacy_classes();
        Self { group, classes, centralizers: HashMap::new() }
    }

    /// Reuses a class table already computed for `group`.
    pub fn with_classes(group: Arc<FiniteCoxeterGroup>, classes: ConjugacyClassTable) -> Self {
        Self { group, classes, centralizers: HashMap::new() }
    }

    pub fn group(&self) -> &Arc<FiniteCoxeterGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassTable {
        &self.classes
    }

    /// Centralizer of a class representative, cached.
    pub fn rep_centralizer(&mut self, rep: Elem) -> &[Elem] {
        let group = &self.group;
        self.centralizers.entry(rep.0).or_insert_with(|| group.centralizer(&[rep]))
    }

    /// The index-least tuple in the conjugation orbit of `tuple`, with a
    /// conjugator `w` such that `w · tuple · w⁻¹` is that tuple.
    pub fn canonical(&mut self, tuple: &[Elem]) -> (Vec<Elem>, Elem) {
        let Some(&first) = tuple.first() else { return (Vec::new(), Elem::IDENTITY) };
        let rep = self.classes.class_reps[self.classes.class_index(first)];
        let g0 = self.group.inv(self.classes.conjugator(first));
        let group = self.group.clone();
        let cent = self.rep_centralizer(rep);
        let mut best: Option<(Vec<Elem>, Elem)> = None;
        for &c in cent {
            let w = group.mul(c, g0);
            let cand: Vec<Elem> = tuple.iter().map(|&x| group.conj(w, x)).collect();
            if best.as_ref().is_none_or(|(b, _)| cand < *b) {
                best = Some((cand, w));
            }
        }
        best.expect("centralizer contains the identity")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutLabel {
    Inner(Elem),
    /// Node permutation (0-based images).
    Diagram(Vec<usize>),
    Named(String),
}

impl fmt::Display for AutLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutLabel::Inner(w) => write!(f, "inner({w})"),
            AutLabel::Diagram(p) => {
                write!(f, "diagram(")?;
                for (k, i) in p.iter().enumerate() {
                    write!(f, "{}{}", if k > 0 { "," } else { "" }, i + 1)?;
                }
                write!(f, ")")
            }
            AutLabel::Named(n) => write!(f, "{n}"),
        }
    }
}

/// A verified automorphism of an enumerated Coxeter group.
#[derive(Clone)]
pub struct Automorphism {
    group: Arc<FiniteCoxeterGroup>,
    generator_images: Vec<Elem>,
    table: Vec<u32>,
    label: AutLabel,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Automorphism").field("label", &self.label).field("images", &self.generator_images).finish()
    }
}

impl Automorphism {
    /// Checks that `s_i ↦ images[i]` respects the Coxeter relations and is
    /// onto, then tabulates it on every element.
    pub fn from_generator_images(
        group: &Arc<FiniteCoxeterGroup>,
        images: Vec<Elem>,
        label: AutLabel,
    ) -> Result<Self, Error> {
        let g = group.as_ref();
        let n = g.rank();
        if images.len() != n {
            return Err(Error::NotAnAutomorphism(alloc::format!("{} images for rank {n}", images.len())));
        }
        for i in 0..n {
            if !g.is_involution(images[i]) {
                return Err(Error::NotAnAutomorphism(alloc::format!("image of s{} is not an involution", i + 1)));
            }
            for j in i + 1..n {
                let m = g.graph().m(i, j);
                if g.element_order(g.mul(images[i], images[j])) != m {
                    return Err(Error::NotAnAutomorphism(alloc::format!(
                        "order of s{}s{} image is not {m}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if !g.generates(&images) {
            return Err(Error::NotAnAutomorphism("images do not generate".into()));
        }
        let mut table = vec![0u32; g.order()];
        for x in g.elements().skip(1) {
            let (i, y) = g
                .generators()
                .iter()
                .enumerate()
                .map(|(i, &s)| (i, g.mul(x, s)))
                .find(|&(_, y)| g.length(y) < g.length(x))
                .expect("right descent");
            table[x.index()] = g.mul(Elem(table[y.index()]), images[i]).0;
        }
        Ok(Self { group: group.clone(), generator_images: images, table, label })
    }

    pub fn inner(group: &Arc<FiniteCoxeterGroup>, w: Elem) -> Self {
        let images = group.generators().iter().map(|&s| group.conj(w, s)).collect();
        let table = group.elements().map(|x| group.conj(w, x).0).collect();
        Self { group: group.clone(), generator_images: images, table, label: AutLabel::Inner(w) }
    }

    pub fn label(&self) -> &AutLabel {
        &self.label
    }

    pub fn group(&self) -> &Arc<FiniteCoxeterGroup> {
        &self.group
    }

    pub fn generator_images(&self) -> &[Elem] {
        &self.generator_images
    }

    pub fn apply(&self, x: Elem) -> Elem {
        Elem(self.table[x.index()])
    }

    /// Whether this automorphism equals conjugation by some element.
    pub fn inner_witness(&self) -> Option<Elem> {
        let g = &self.group;
        g.elements()
            .find(|&w| g.generators().iter().zip(&self.generator_images).all(|(&s, &t)| g.conj(w, s) == t))
    }
}

/// Node permutations preserving the Coxeter matrix, identity excluded.
pub fn diagram_automorphisms(graph: &CoxeterGraph) -> Vec<Vec<usize>> {
    let n = graph.rank();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let identity = p.iter().enumerate().all(|(i, &x)| i == x);
        if !identity && (0..n).all(|i| (0..n).all(|j| graph.m(i, j) == graph.m(p[i], p[j]))) {
            out.push(p.to_vec());
        }
    });
    out.sort();
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Diagram automorphism `s_i ↦ s_{π(i)}` as a group automorphism.
pub fn diagram_automorphism(group: &Arc<FiniteCoxeterGroup>, perm: &[usize]) -> Result<Automorphism, Error> {
    let images = perm.iter().map(|&j| group.generator(j)).collect();
    Automorphism::from_generator_images(group, images, AutLabel::Diagram(perm.to_vec()))
}

/// Every automorphism of a small group, found by exhausting generator images.
pub fn all_automorphisms(group: &Arc<FiniteCoxeterGroup>) -> Result<Vec<Automorphism>, Error> {
    if group.order().pow(group.rank() as u32) > 1 << 24 {
        return Err(Error::InstanceTooLarge(group.graph().label()));
    }
    let involutions: Vec<Elem> = group.elements().filter(|&x| group.is_involution(x)).collect();
    let n = group.rank();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(
        group: &Arc<FiniteCoxeterGroup>,
        involutions: &[Elem],
        current: &mut Vec<Elem>,
        out: &mut Vec<Automorphism>,
    ) {
        let k = current.len();
        if k == group.rank() {
            if let Ok(a) = Automorphism::from_generator_images(group, current.clone(), AutLabel::Named("exhaustive".into())) {
                out.push(a);
            }
            return;
        }
        for &t in involutions {
            if (0..k).all(|j| group.element_order(group.mul(current[j], t)) == group.graph().m(j, k)) {
                current.push(t);
                rec(group, involutions, current, out);
                current.pop();
            }
        }
    }
    rec(group, &involutions, &mut current, &mut out);
    Ok(out)
}

/// Result of an equivalence search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceChain {
    /// Labels of the automorphisms applied, first to last; conjugations are implicit.
    pub steps: Vec<AutLabel>,
}

/// Searches for `α` in the monoid generated by `auts` and all inner
/// automorphisms with `α ∘ a = b`, breadth-first over canonical forms.
pub fn equivalence_between(
    a: &GeneratorMap,
    b: &GeneratorMap,
    auts: &[Automorphism],
    canon: &mut Canonicalizer,
) -> Result<Option<EquivalenceChain>, Error> {
    check_compatible(a, b)?;
    if !Arc::ptr_eq(canon.group(), &a.target) || auts.iter().any(|x| !Arc::ptr_eq(&x.group, &a.target)) {
        return Err(Error::IncompatibleMaps);
    }
    let (start, _) = canon.canonical(&a.images);
    let (goal, _) = canon.canonical(&b.images);
    let mut parent: HashMap<Vec<Elem>, Option<(Vec<Elem>, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            let mut steps = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, k))) = parent.get(&node).cloned() {
                steps.push(auts[k].label.clone());
                node = prev;
            }
            steps.reverse();
            return Ok(Some(EquivalenceChain { steps }));
        }
        for (k, alpha) in auts.iter().enumerate() {
            let image: Vec<Elem> = cur.iter().map(|&x| alpha.apply(x)).collect();
            let (next, _) = canon.canonical(&image);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), k)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Checks `μ(Ψ(σ_i)) = α(s_i)` for every generator.
pub fn verify_intertwining(psi: &[ArtinWord], alpha: &Automorphism) -> Result<bool, Error> {
    let g = &alpha.group;
    if psi.len() != g.rank() {
        return Err(Error::PreconditionViolated("one word per generator".into()));
    }
    let mu = GeneratorMap::standard(g);
    for (i, w) in psi.iter().enumerate() {
        if mu.evaluate(w)? != alpha.generator_images[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterVerdict {
    /// `ν(Δ) ≠ δ`, contradicting that `Φ(Δ) = Δ^{±1}` because the center of
    /// the Artin group is generated by `Δ`; that fact is assumed, not checked.
    Contradiction { nu_delta: Elem, delta: Elem },
    Undecided { nu_delta: Elem, delta: Elem },
}

impl CenterVerdict {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, CenterVerdict::Contradiction { .. })
    }
}

/// The center argument for rank two with `m ≡ 0 (mod 4)`.
pub fn center_obstruction_rank2(nu: &GeneratorMap) -> Result<CenterVerdict, Error> {
    let g = nu.target();
    let m = nu.source().dihedral_m().filter(|m| m % 4 == 0).ok_or_else(|| {
        Error::PreconditionViolated("needs I2(m) with m divisible by 4".into())
    })?;
    if g.graph() != nu.source() || !nu.is_epimorphism() {
        return Err(Error::PreconditionViolated("needs an epimorphism onto W(I2(m))".into()));
    }
    let delta_word = crate::words::alternating_word(0, 1, m as usize);
    let nu_delta = nu.evaluate(&delta_word)?;
    let delta = GeneratorMap::standard(g).evaluate(&delta_word)?;
    Ok(if delta != Elem::IDENTITY && nu_delta != delta && nu_delta != g.inv(delta) {
        CenterVerdict::Contradiction { nu_delta, delta }
    } else {
        CenterVerdict::Undecided { nu_delta, delta }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Family};
    use crate::group::build_group;

    fn group(family: Family, rank: usize, m: Option<u32>) -> Arc<FiniteCoxeterGroup> {
        Arc::new(build_group(&build_graph(family, rank, m).unwrap(), 1 << 24).unwrap())
    }

    #[test]
    fn evaluation() {
        let g = group(Family::I2, 2, Some(4));
        let mu = GeneratorMap::standard(&g);
        assert_eq!(mu.evaluate(&ArtinWord::new()).unwrap(), Elem::IDENTITY);
        let delta = mu.evaluate(&crate::words::alternating_word(0, 1, 4)).unwrap();
        assert_eq!(delta, g.longest_element());
        assert!(mu.evaluate(&ArtinWord::generator(2)).is_err());
    }

    #[test]
    fn relations_in_i2_6() {
        let g = group(Family::I2, 2, Some(6));
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        let m = GeneratorMap::new(g.graph().clone(), g.clone(), vec![s1, g.mul(s2, s1)]).unwrap();
        assert_eq!(m.check_artin_relations(), vec![(0, 1)]);
        assert!(GeneratorMap::standard(&g).is_epimorphism());
    }

    #[test]
    fn trivial_map_is_not_surjective() {
        let g = group(Family::B, 3, None);
        let m = GeneratorMap::new(g.graph().clone(), g.clone(), vec![Elem::IDENTITY; 3]).unwrap();
        assert!(m.is_homomorphism());
        assert_eq!(m.generated_subgroup(), vec![Elem::IDENTITY]);
        assert!(!m.is_surjective());
    }

    #[test]
    fn canonical_forms_agree_on_orbits() {
        let g = group(Family::B, 3, None);
        let mut canon = Canonicalizer::new(g.clone());
        let mu = GeneratorMap::standard(&g);
        let (c0, w0) = canon.canonical(mu.images());
        assert_eq!(mu.conjugated(w0).images(), &c0[..]);
        for w in g.elements().step_by(5) {
            let (c, _) = canon.canonical(mu.conjugated(w).images());
            assert_eq!(c, c0);
            assert_eq!(conjugacy_between(&mu, &mu.conjugated(w)).unwrap().map(|v| mu.conjugated(v)), Some(mu.conjugated(w)));
        }
    }

    #[test]
    fn automorphisms_of_dihedral_groups() {
        let g = group(Family::I2, 2, Some(8));
        let all = all_automorphisms(&g).unwrap();
        // |Aut(D_8)| = m·φ(m) = 8·4
        assert_eq!(all.len(), 32);
        let inner = all.iter().filter(|a| a.inner_witness().is_some()).count();
        assert_eq!(inner, 8);
    }

    #[test]
    fn diagram_symmetries() {
        let d4 = build_graph(Family::D, 4, None).unwrap();
        assert_eq!(diagram_automorphisms(&d4).len(), 5);
        let b3 = build_graph(Family::B, 3, None).unwrap();
        assert!(diagram_automorphisms(&b3).is_empty());
        let e6 = build_graph(Family::E6, 6, None).unwrap();
        assert_eq!(diagram_automorphisms(&e6), vec![vec![5, 1, 4, 3, 2, 0]]);
    }

    #[test]
    fn not_an_automorphism() {
        let g = group(Family::B, 3, None);
        let s = g.generators().to_vec();
        assert!(Automorphism::from_generator_images(&g, vec![s[0], s[0], s[2]], AutLabel::Named("x".into())).is_err());
    }

    #[test]
    fn equivalence_via_inner_only() {
        let g = group(Family::B, 3, None);
        let mut canon = Canonicalizer::new(g.clone());
        let mu = GeneratorMap::standard(&g);
        let w = g.word_element(&[0, 1, 2, 1]);
        let chain = equivalence_between(&mu, &mu.conjugated(w), &[], &mut canon).unwrap();
        assert_eq!(chain, Some(EquivalenceChain { steps: vec![] }));
    }
}
