//! Exhaustive searches for homomorphisms `A(Γ) → G` into enumerated groups,
//! node by node, optionally up to simultaneous conjugation.
//!
//! In conjugacy mode every stage keeps one tuple per orbit: the candidates
//! for the next node are reduced to orbit representatives of the pointwise
//! stabilizer `C_G(x_1, …, x_{k−1})`, which counts orbits of partial tuples
//! exactly.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::catalog::Catalog;
use crate::error::Error;
use crate::graph::{build_graph, CoxeterGraph, Family};
use crate::group::{build_group, ConjugacyClassTable, Elem, FiniteCoxeterGroup, DEFAULT_ELEMENT_LIMIT};
use crate::maps::{all_automorphisms, braid_relation_holds, AutLabel, Automorphism, Canonicalizer};
use crate::par;
use crate::signed::SignedModel;

/// A group with its conjugacy classes, shared by searches.
pub struct SearchContext {
    group: Arc<FiniteCoxeterGroup>,
    classes: ConjugacyClassTable,
    members: Vec<Vec<Elem>>,
}

impl SearchContext {
    pub fn new(group: Arc<FiniteCoxeterGroup>) -> Self {
        let classes = group.conjugacy_classes();
        let mut members = vec![Vec::new(); classes.len()];
        for x in group.elements() {
            members[classes.class_index(x)].push(x);
        }
        Self { group, classes, members }
    }

    /// For raw searches that use neither class filters nor the quotient.
    pub fn without_classes(group: Arc<FiniteCoxeterGroup>) -> Self {
        let classes =
            ConjugacyClassTable { class_reps: Vec::new(), class_sizes: Vec::new(), class_of: Vec::new(), conjugators: Vec::new() };
        Self { group, classes, members: Vec::new() }
    }

    fn has_classes(&self) -> bool {
        !self.classes.is_empty()
    }

    pub fn group(&self) -> &Arc<FiniteCoxeterGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassTable {
        &self.classes
    }

    pub fn class_members(&self, class: usize) -> &[Elem] {
        &self.members[class]
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Quotient {
    Raw,
    UpToConjugacy,
}

/// Conditions on the image of one node, beyond the Artin relations.
#[derive(Clone, Debug, Default)]
pub struct NodeFilter {
    pub min_order: Option<u32>,
    pub sign: Option<i8>,
    /// Must be conjugate to the image of this (earlier) node.
    pub conjugate_to: Option<usize>,
    pub nontrivial: bool,
    /// Candidates are drawn from this list only.
    pub restrict: Option<Vec<Elem>>,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub source: CoxeterGraph,
    /// Nodes in placement order; nodes not listed are ignored.
    pub order: Vec<usize>,
    /// Indexed by node.
    pub filters: Vec<NodeFilter>,
    /// `⟨x_i⟩ ≠ ⟨x_j⟩` for distinct placed nodes.
    pub strong_injective: bool,
    pub quotient: Quotient,
    /// Record whether each final tuple generates the target.
    pub check_generation: bool,
}

impl SearchSpec {
    /// All nodes in the default order, no filters.
    pub fn new(source: CoxeterGraph, quotient: Quotient) -> Self {
        let order = default_order(&source);
        let filters = vec![NodeFilter::default(); source.rank()];
        Self { source, order, filters, strong_injective: false, quotient, check_generation: false }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.source.rank();
        let mut seen = vec![false; n];
        for (k, &v) in self.order.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::PreconditionViolated(alloc::format!("bad node order {:?}", self.order)));
            }
            seen[v] = true;
            if let Some(j) = self.filters[v].conjugate_to {
                if !self.order[..k].contains(&j) {
                    return Err(Error::PreconditionViolated(alloc::format!(
                        "node {} must follow node {}",
                        v + 1,
                        j + 1
                    )));
                }
            }
        }
        if self.filters.len() != n {
            return Err(Error::PreconditionViolated("one filter per node".into()));
        }
        Ok(())
    }
}

/// Repeatedly picks the unplaced node with the most placed neighbours, ties
/// by index, starting from node 1.
pub fn default_order(graph: &CoxeterGraph) -> Vec<usize> {
    let n = graph.rank();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (graph.neighbors(v).filter(|&u| placed[u]).count(), core::cmp::Reverse(v)))
            .expect("unplaced node");
        placed[next] = true;
        order.push(next);
    }
    order
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageResult {
    pub node: usize,
    pub count: usize,
    /// Tuples in placement order.
    pub tuples: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub order: Vec<usize>,
    pub quotient: Quotient,
    pub stages: Vec<StageResult>,
    /// One flag per final tuple, when requested.
    pub generating: Option<Vec<bool>>,
}

impl CensusResult {
    pub fn counts(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.count).collect()
    }

    pub fn final_tuples(&self) -> &[Vec<Elem>] {
        self.stages.last().map(|s| s.tuples.as_slice()).unwrap_or(&[])
    }

    pub fn generating_count(&self) -> Option<usize> {
        self.generating.as_ref().map(|g| g.iter().filter(|&&b| b).count())
    }

    /// Final tuples rewritten in node order (node `v` at position `v`), for
    /// complete placement orders.
    pub fn tuples_by_node(&self) -> Vec<Vec<Elem>> {
        let n = self.order.len();
        self.final_tuples()
            .iter()
            .map(|t| {
                let mut out = vec![Elem::IDENTITY; n];
                for (k, &v) in self.order.iter().enumerate() {
                    out[v] = t[k];
                }
                out
            })
            .collect()
    }
}

fn same_cyclic_subgroup(g: &FiniteCoxeterGroup, x: Elem, y: Elem) -> bool {
    if g.element_order(x) != g.element_order(y) {
        return false;
    }
    let mut p = x;
    for _ in 0..g.element_order(x) {
        if p == y {
            return true;
        }
        p = g.mul(p, x);
    }
    false
}

struct Partial {
    tuple: Vec<Elem>,
    stabilizer: Vec<Elem>,
}

/// Runs the staged search.
pub fn staged_search(ctx: &SearchContext, spec: &SearchSpec) -> Result<CensusResult, Error> {
    spec.validate()?;
    let needs_classes = spec.quotient == Quotient::UpToConjugacy || spec.filters.iter().any(|f| f.conjugate_to.is_some());
    if needs_classes && !ctx.has_classes() {
        return Err(Error::PreconditionViolated("search needs conjugacy classes".into()));
    }
    let g = ctx.group.as_ref();
    let mut stages = Vec::with_capacity(spec.order.len());
    let mut parents = vec![Partial { tuple: Vec::new(), stabilizer: Vec::new() }];
    for (k, &node) in spec.order.iter().enumerate() {
        let filter = &spec.filters[node];
        let placed = &spec.order[..k];
        let extend = |parent: &Partial| -> Vec<Partial> {
            let accept = |c: Elem| -> bool {
                if filter.nontrivial && c == Elem::IDENTITY {
                    return false;
                }
                if filter.min_order.is_some_and(|m| g.element_order(c) < m) {
                    return false;
                }
                if filter.sign.is_some_and(|s| g.sign(c) != s) {
                    return false;
                }
                placed.iter().zip(&parent.tuple).all(|(&u, &x)| {
                    braid_relation_holds(g, x, c, spec.source.m(u, node))
                        && !(spec.strong_injective && same_cyclic_subgroup(g, x, c))
                })
            };
            let pool: &[Elem];
            let all: Vec<Elem>;
            if let Some(r) = &filter.restrict {
                pool = r;
            } else if let Some(j) = filter.conjugate_to {
                let pos = placed.iter().position(|&u| u == j).expect("validated");
                pool = ctx.class_members(ctx.classes.class_index(parent.tuple[pos]));
            } else if k == 0 && spec.quotient == Quotient::UpToConjugacy {
                pool = &ctx.classes.class_reps;
            } else {
                all = g.elements().collect();
                pool = &all;
            }
            let candidates: Vec<Elem> = pool.iter().copied().filter(|&c| accept(c)).collect();
            match spec.quotient {
                Quotient::Raw => candidates
                    .into_iter()
                    .map(|c| {
                        let mut tuple = parent.tuple.clone();
                        tuple.push(c);
                        Partial { tuple, stabilizer: Vec::new() }
                    })
                    .collect(),
                Quotient::UpToConjugacy if k == 0 => candidates
                    .into_iter()
                    .filter(|&c| ctx.classes.class_reps[ctx.classes.class_index(c)] == c)
                    .map(|c| Partial { tuple: vec![c], stabilizer: g.centralizer(&[c]) })
                    .collect(),
                Quotient::UpToConjugacy => {
                    let mut candidates = candidates;
                    candidates.sort();
                    orbit_representatives(g, &parent.stabilizer, &candidates)
                        .into_iter()
                        .map(|c| {
                            let mut tuple = parent.tuple.clone();
                            tuple.push(c);
                            Partial { tuple, stabilizer: g.centralizer_in(&parent.stabilizer, c) }
                        })
                        .collect()
                }
            }
        };
        let children: Vec<Partial> = par::map_ordered(&parents, extend).into_iter().flatten().collect();
        stages.push(StageResult { node, count: children.len(), tuples: children.iter().map(|p| p.tuple.clone()).collect() });
        parents = children;
    }
    let generating = spec.check_generation.then(|| {
        let finals: Vec<Vec<Elem>> = stages.last().map(|s| s.tuples.clone()).unwrap_or_default();
        par::map_ordered(&finals, |t| g.generates(t))
    });
    Ok(CensusResult { order: spec.order.clone(), quotient: spec.quotient, stages, generating })
}

/// Least element of each orbit of `stabilizer` (acting by conjugation) on
/// the sorted, conjugation-stable list `candidates`.
fn orbit_representatives(g: &FiniteCoxeterGroup, stabilizer: &[Elem], candidates: &[Elem]) -> Vec<Elem> {
    if stabilizer.len() <= 1 {
        return candidates.to_vec();
    }
    let mut seen: HashSet<Elem> = HashSet::with_capacity(candidates.len());
    let mut reps = Vec::new();
    for &c in candidates {
        if seen.contains(&c) {
            continue;
        }
        reps.push(c);
        for &s in stabilizer {
            seen.insert(g.conj(s, c));
        }
    }
    reps
}

/// Every homomorphism tuple, by plain nested loops over the target with the
/// relations checked as soon as both ends are placed. Tuples are in node
/// order, sorted.
pub fn brute_oracle(source: &CoxeterGraph, target: &FiniteCoxeterGroup) -> Result<Vec<Vec<Elem>>, Error> {
    const LIMIT: usize = 400;
    if target.order() > LIMIT {
        return Err(Error::InstanceTooLarge(alloc::format!("oracle target of order {} exceeds {LIMIT}", target.order())));
    }
    let n = source.rank();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(source: &CoxeterGraph, g: &FiniteCoxeterGroup, current: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let k = current.len();
        if k == source.rank() {
            out.push(current.clone());
            return;
        }
        for y in g.elements() {
            if (0..k).all(|j| braid_relation_holds(g, current[j], y, source.m(j, k))) {
                current.push(y);
                rec(source, g, current, out);
                current.pop();
            }
        }
    }
    rec(source, target, &mut current, &mut out);
    Ok(out)
}

/// Largest final tuple set that [`reverify_final`] checks.
pub const REVERIFY_LIMIT: usize = 100_000;

/// Checks that the final representatives of an up-to-conjugacy census lie in
/// pairwise distinct simultaneous-conjugation orbits. `None` when the census
/// is raw or too large to check.
pub fn reverify_final(ctx: &SearchContext, result: &CensusResult) -> Option<bool> {
    let tuples = result.final_tuples();
    if result.quotient != Quotient::UpToConjugacy || !ctx.has_classes() || tuples.len() > REVERIFY_LIMIT {
        return None;
    }
    let mut canon = Canonicalizer::with_classes(ctx.group.clone(), ctx.classes.clone());
    Some(orbit_count(&mut canon, tuples) == tuples.len())
}

/// Number of simultaneous-conjugation orbits on a set of tuples.
pub fn orbit_count(canon: &mut Canonicalizer, tuples: &[Vec<Elem>]) -> usize {
    let forms: HashSet<Vec<Elem>> = tuples.iter().map(|t| canon.canonical(t).0).collect();
    forms.len()
}

fn group_for(family: Family, rank: usize, m: Option<u32>) -> Result<Arc<FiniteCoxeterGroup>, Error> {
    Ok(Arc::new(build_group(&build_graph(family, rank, m)?, DEFAULT_ELEMENT_LIMIT)?))
}

/// The `X_J` filters: every image in one conjugacy class of elements of
/// order at least 3 and sign `−1`, strong injectivity, and the relations
/// inside `J`. `order` lists `J` (0-based) in placement order; stage `k`
/// counts `X_{order[..=k]}`.
pub fn xj_spec(graph: &CoxeterGraph, order: &[usize]) -> SearchSpec {
    let mut spec = SearchSpec::new(graph.clone(), Quotient::UpToConjugacy);
    spec.order = order.to_vec();
    spec.strong_injective = true;
    if let Some(&first) = order.first() {
        spec.filters[first] = NodeFilter { min_order: Some(3), sign: Some(-1), ..Default::default() };
        for &v in &order[1..] {
            spec.filters[v] = NodeFilter { conjugate_to: Some(first), ..Default::default() };
        }
    }
    spec
}

/// Placement orders whose stage counts give the `X_J` statistics.
pub fn xj_default_order(family: Family) -> Option<Vec<usize>> {
    Some(match family {
        Family::H4 => vec![3, 1, 0, 2],
        Family::E6 => vec![0, 1, 5, 3],
        Family::E7 => vec![1, 2, 4, 6, 0],
        _ => return None,
    })
}

pub fn xj_census(ctx: &SearchContext, order: &[usize]) -> Result<CensusResult, Error> {
    staged_search(ctx, &xj_spec(ctx.group.graph(), order))
}

/// Stage counts for `F_4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F4Census {
    pub classes: usize,
    pub classes_order_ge3: usize,
    pub pairs: usize,
    pub triples: usize,
    pub quadruples: usize,
    pub generating: usize,
    pub census: CensusResult,
}

/// `x_1` of order at least 3 up to conjugacy; `x_2` conjugate to `x_1`;
/// `x_3 ≠ 1`; `x_4` conjugate to `x_3`; Artin relations throughout.
pub fn f4_census(ctx: &SearchContext) -> Result<F4Census, Error> {
    let graph = ctx.group.graph();
    if graph.family() != Family::F4 {
        return Err(Error::TypeMismatch("F4 census needs W(F4)".into()));
    }
    let mut spec = SearchSpec::new(graph.clone(), Quotient::UpToConjugacy);
    spec.order = vec![0, 1, 2, 3];
    spec.filters[0].min_order = Some(3);
    spec.filters[1].conjugate_to = Some(0);
    spec.filters[2].nontrivial = true;
    spec.filters[3].conjugate_to = Some(2);
    spec.check_generation = true;
    let census = staged_search(ctx, &spec)?;
    let c = census.counts();
    Ok(F4Census {
        classes: ctx.classes.len(),
        classes_order_ge3: c[0],
        pairs: c[1],
        triples: c[2],
        quadruples: c[3],
        generating: census.generating_count().unwrap_or(0),
        census,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum LiftCase {
    B6Zeta6,
    B4Zeta41,
    B4Zeta42,
    D6Zeta6,
    D4Zeta41,
    D4Zeta42,
}

impl LiftCase {
    pub const ALL: [LiftCase; 6] =
        [LiftCase::B6Zeta6, LiftCase::B4Zeta41, LiftCase::B4Zeta42, LiftCase::D6Zeta6, LiftCase::D4Zeta41, LiftCase::D4Zeta42];

    pub fn name(self) -> &'static str {
        match self {
            LiftCase::B6Zeta6 => "B6-zeta6",
            LiftCase::B4Zeta41 => "B4-zeta4_1",
            LiftCase::B4Zeta42 => "B4-zeta4_2",
            LiftCase::D6Zeta6 => "D6-zeta6",
            LiftCase::D4Zeta41 => "D4-zeta4_1",
            LiftCase::D4Zeta42 => "D4-zeta4_2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }

    fn parts(self) -> (Family, usize, &'static str) {
        match self {
            LiftCase::B6Zeta6 => (Family::B, 6, "zeta6"),
            LiftCase::B4Zeta41 => (Family::B, 4, "zeta4_1"),
            LiftCase::B4Zeta42 => (Family::B, 4, "zeta4_2"),
            LiftCase::D6Zeta6 => (Family::D, 6, "zeta6"),
            LiftCase::D4Zeta41 => (Family::D, 4, "zeta4_1"),
            LiftCase::D4Zeta42 => (Family::D, 4, "zeta4_2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSearch {
    /// 0-based nodes with `ζ(σ_i) ≠ 1`, in search order.
    pub nodes: Vec<usize>,
    /// `|X_i|` per node of `nodes`.
    pub x_sizes: Vec<usize>,
    /// `|Y|` for tuples over the first 2, 3, … nodes of `nodes`.
    pub y_sizes: Vec<usize>,
    /// Full tuples after also placing the nodes with `ζ(σ_i) = 1` (images in
    /// the kernel).
    pub complete: usize,
    /// Full tuples generating `W`.
    pub epimorphisms: usize,
}

impl LiftSearch {
    /// No epimorphism `φ` with `p ∘ φ = ζ` and non-involution images exists.
    pub fn is_empty(&self) -> bool {
        self.epimorphisms == 0
    }
}

/// Tuples `(t_i)` with `t_i ∈ X_i = {x r_i : x ∈ K, order(x r_i) ≠ 2}`, where
/// `K` is the kernel of `p: W → Sym_n` and `r_i` the pure permutation with
/// `p(r_i) = ζ(σ_i)`, subject to the Artin relations. Nodes with `ζ(σ_i) = 1`
/// (node 1 in type `B`) are placed last, with images in `K`.
pub fn lift_search(case: LiftCase) -> Result<LiftSearch, Error> {
    let (family, n, zeta_name) = case.parts();
    let group = group_for(family, n, None)?;
    lift_search_in(&group, zeta_name)
}

pub fn lift_search_in(group: &Arc<FiniteCoxeterGroup>, zeta_name: &str) -> Result<LiftSearch, Error> {
    let catalog = Catalog::new(group.clone());
    let zeta = catalog.map_named(zeta_name)?;
    let sym = zeta.target();
    let sym_model = SignedModel::new(sym)?;
    let model = SignedModel::new(group)?;
    let kernel = model.kernel();
    let graph = group.graph();
    let (nodes, rest): (Vec<usize>, Vec<usize>) = (0..graph.rank()).partition(|&i| zeta.image(i) != Elem::IDENTITY);
    let mut spec = SearchSpec::new(graph.clone(), Quotient::Raw);
    spec.order = nodes.iter().chain(&rest).copied().collect();
    spec.check_generation = true;
    let mut x_sizes = Vec::new();
    for &i in &nodes {
        let r = model.permutation_element(&sym_model.project_p(zeta.image(i)))?;
        let mut xs: Vec<Elem> =
            kernel.iter().map(|&x| group.mul(x, r)).filter(|&t| group.element_order(t) != 2).collect();
        xs.sort();
        x_sizes.push(xs.len());
        spec.filters[i].restrict = Some(xs);
    }
    for &i in &rest {
        spec.filters[i].restrict = Some(kernel.clone());
    }
    let ctx = SearchContext::without_classes(group.clone());
    let census = staged_search(&ctx, &spec)?;
    let counts = census.counts();
    Ok(LiftSearch {
        y_sizes: counts[1..nodes.len()].to_vec(),
        nodes,
        x_sizes,
        complete: *counts.last().unwrap_or(&0),
        epimorphisms: census.generating_count().unwrap_or(0),
    })
}

#[derive(Clone, Debug)]
pub struct H3Procedure {
    pub c2: usize,
    pub x1: usize,
    pub x2: usize,
    pub y: usize,
    pub all_generate: bool,
    /// Representatives of `Y`.
    pub representatives: Vec<Vec<Elem>>,
    /// Catalog names matching each representative up to conjugacy.
    pub matches: Vec<Option<String>>,
}

/// `C_2`: class representatives of sign `−1` and order other than 2;
/// `X_1`: pairs `(t_1, t_2)`, `t_1 ∈ C_2`, `t_1 ≠ t_2`, with the 5-braid
/// relation; `X_2`: triples extending `X_1` with `t_1 t_3 = t_3 t_1` and the
/// 3-braid relation on `t_2, t_3`; `Y`: conjugacy classes of `X_2`.
pub fn h3_procedure() -> Result<H3Procedure, Error> {
    let group = group_for(Family::H3, 3, None)?;
    let g = group.as_ref();
    let classes = g.conjugacy_classes();
    let c2: Vec<Elem> =
        classes.class_reps.iter().copied().filter(|&x| g.sign(x) == -1 && g.element_order(x) != 2).collect();
    let mut x1 = Vec::new();
    for &t1 in &c2 {
        for t2 in g.elements() {
            if t1 != t2 && braid_relation_holds(g, t1, t2, 5) {
                x1.push((t1, t2));
            }
        }
    }
    let mut x2 = Vec::new();
    for &(t1, t2) in &x1 {
        for t3 in g.elements() {
            if g.commute(t1, t3) && braid_relation_holds(g, t2, t3, 3) {
                x2.push(vec![t1, t2, t3]);
            }
        }
    }
    let all_generate = x2.iter().all(|t| g.generates(t));
    let mut canon = Canonicalizer::new(group.clone());
    let mut forms: Vec<Vec<Elem>> = x2.iter().map(|t| canon.canonical(t).0).collect();
    forms.sort();
    forms.dedup();
    let catalog = Catalog::new(group.clone());
    let named: Vec<(&str, Vec<Elem>)> = ["nu1", "nu2"]
        .into_iter()
        .map(|n| Ok((n, canon.canonical(catalog.map_named(n)?.images()).0)))
        .collect::<Result<_, Error>>()?;
    let matches = forms
        .iter()
        .map(|f| named.iter().find(|(_, c)| c == f).map(|(n, _)| n.to_string()))
        .collect();
    Ok(H3Procedure {
        c2: c2.len(),
        x1: x1.len(),
        x2: x2.len(),
        y: forms.len(),
        all_generate,
        representatives: forms,
        matches,
    })
}

/// One class of epimorphisms up to the action of `Aut(W)`.
#[derive(Clone, Debug)]
pub struct EquivalenceClass {
    /// Canonical forms of the conjugacy classes it contains.
    pub conjugacy_classes: Vec<Vec<Elem>>,
    pub ordinary: bool,
    pub all_involutions: bool,
    /// Catalog maps lying in this class.
    pub matches: Vec<String>,
}

impl EquivalenceClass {
    pub fn representative(&self) -> &[Elem] {
        &self.conjugacy_classes[0]
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub label: String,
    pub epimorphism_classes: usize,
    /// `|Out(W)|`, from the census itself.
    pub outer_automorphisms: usize,
    pub classes: Vec<EquivalenceClass>,
    /// Every all-involution epimorphism class is the ordinary class.
    pub involution_check: bool,
    /// The catalog's declared automorphisms reach every ordinary conjugacy class.
    pub declared_automorphisms_complete: bool,
}

impl Classification {
    pub fn extraordinary(&self) -> impl Iterator<Item = &EquivalenceClass> {
        self.classes.iter().filter(|c| !c.ordinary)
    }
}

/// Groups epimorphism conjugacy classes into `Aut(W)`-orbits. `Aut(W)` is
/// read off the census: the tuples of involutions with pair orders exactly
/// `m_{ij}` are the automorphisms, one per outer class.
fn classify_epimorphisms(
    group: &Arc<FiniteCoxeterGroup>,
    tuples: Vec<Vec<Elem>>,
    canon: &mut Canonicalizer,
    catalog_names: &[&str],
) -> Result<Classification, Error> {
    let g = group.as_ref();
    let graph = g.graph();
    let n = graph.rank();
    let mut forms: Vec<Vec<Elem>> = tuples.iter().map(|t| canon.canonical(t).0).collect();
    forms.sort();
    forms.dedup();
    let is_coxeter_tuple = |t: &[Elem]| {
        t.iter().all(|&x| g.is_involution(x))
            && (0..n).all(|i| (i + 1..n).all(|j| g.element_order(g.mul(t[i], t[j])) == graph.m(i, j)))
    };
    let outer: Vec<Automorphism> = forms
        .iter()
        .filter(|t| is_coxeter_tuple(t))
        .map(|t| Automorphism::from_generator_images(group, t.clone(), AutLabel::Named("census".into())))
        .collect::<Result<_, _>>()?;
    let index: HashMap<Vec<Elem>, usize> = forms.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect();
    let mut class_of = vec![usize::MAX; forms.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..forms.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![start];
        class_of[start] = c;
        let mut head = 0;
        while head < members.len() {
            let f = forms[members[head]].clone();
            for a in &outer {
                let image: Vec<Elem> = f.iter().map(|&x| a.apply(x)).collect();
                let k = index[&canon.canonical(&image).0];
                if class_of[k] == usize::MAX {
                    class_of[k] = c;
                    members.push(k);
                }
            }
            head += 1;
        }
        members.sort();
        classes.push(members);
    }
    let mu = canon.canonical(g.generators()).0;
    let ordinary_class = class_of[index[&mu]];
    let catalog = Catalog::new(group.clone());
    let mut matches: Vec<Vec<String>> = vec![Vec::new(); classes.len()];
    for &name in catalog_names {
        if let Ok(map) = catalog.map_named(name) {
            if let Some(&k) = index.get(&canon.canonical(map.images()).0) {
                matches[class_of[k]].push(name.to_string());
            }
        }
    }
    let all_inv = |t: &[Elem]| t.iter().all(|&x| g.is_involution(x));
    let involution_check = forms.iter().enumerate().all(|(k, f)| !all_inv(f) || class_of[k] == ordinary_class);
    let declared = crate::catalog::aut_generators(group)?;
    let mut reach: HashSet<Vec<Elem>> = HashSet::new();
    reach.insert(mu.clone());
    let mut queue = vec![mu];
    while let Some(f) = queue.pop() {
        for a in &declared {
            let image: Vec<Elem> = f.iter().map(|&x| a.apply(x)).collect();
            let c = canon.canonical(&image).0;
            if reach.insert(c.clone()) {
                queue.push(c);
            }
        }
    }
    let declared_automorphisms_complete = classes[ordinary_class].iter().all(|&k| reach.contains(&forms[k]));
    let out = classes
        .iter()
        .zip(matches)
        .enumerate()
        .map(|(c, (members, matches))| EquivalenceClass {
            conjugacy_classes: members.iter().map(|&k| forms[k].clone()).collect(),
            ordinary: c == ordinary_class,
            all_involutions: members.iter().all(|&k| all_inv(&forms[k])),
            matches,
        })
        .collect();
    Ok(Classification {
        label: graph.label(),
        epimorphism_classes: forms.len(),
        outer_automorphisms: outer.len(),
        classes: out,
        involution_check,
        declared_automorphisms_complete,
    })
}

const MATCH_NAMES: &[&str] = &["nu1", "nu2", "artin_exc1", "artin_exc2"];

/// Epimorphisms `A(I2(m)) → W(I2(m))` by brute force over all pairs, up to
/// the exhaustively computed `Aut(W)`.
pub fn classify_rank2(m: u32) -> Result<Classification, Error> {
    let group = group_for(Family::I2, 2, Some(m))?;
    let g = group.as_ref();
    let mut tuples = Vec::new();
    for x in g.elements() {
        for y in g.elements() {
            if braid_relation_holds(g, x, y, m) && g.generates(&[x, y]) {
                tuples.push(vec![x, y]);
            }
        }
    }
    let mut canon = Canonicalizer::new(group.clone());
    let mut result = classify_epimorphisms(&group, tuples, &mut canon, MATCH_NAMES)?;
    let auts = all_automorphisms(&group)?;
    let inner = auts.iter().filter(|a| a.inner_witness().is_some()).count();
    if auts.len() != result.outer_automorphisms * inner {
        return Err(Error::PreconditionViolated("automorphism count disagrees with the census".into()));
    }
    result.label = alloc::format!("I2({m})");
    Ok(result)
}

/// Bound on `|W|` for [`classify_small`].
pub const SMALL_ORDER_LIMIT: usize = 5000;

/// All epimorphisms `A → W` up to conjugacy, grouped by `Aut(W)`.
pub fn classify_small(group: &Arc<FiniteCoxeterGroup>) -> Result<Classification, Error> {
    if group.order() > SMALL_ORDER_LIMIT {
        return Err(Error::OrderExceedsLimit { order: group.order() as u128, limit: SMALL_ORDER_LIMIT as u128 });
    }
    let ctx = SearchContext::new(group.clone());
    let mut spec = SearchSpec::new(group.graph().clone(), Quotient::UpToConjugacy);
    spec.check_generation = true;
    let census = staged_search(&ctx, &spec)?;
    let flags = census.generating.clone().unwrap_or_default();
    let tuples: Vec<Vec<Elem>> =
        census.tuples_by_node().into_iter().zip(flags).filter(|(_, gen)| *gen).map(|(t, _)| t).collect();
    let mut canon = Canonicalizer::new(group.clone());
    classify_epimorphisms(group, tuples, &mut canon, MATCH_NAMES)
}

#[derive(Clone, Debug)]
pub struct ZindeCensus {
    pub family: Family,
    pub n: usize,
    /// Conjugacy classes of epimorphisms `A → Sym_n`.
    pub classes: usize,
    /// Classes up to conjugacy and diagram automorphisms permuting nodes
    /// `1, 2, 4`; only for `D_4`.
    pub joint_classes: Option<usize>,
    pub representatives: Vec<Vec<Elem>>,
    /// Catalog names matching each representative.
    pub matches: Vec<Option<String>>,
}

/// Epimorphisms from `A(B_n)` or `A(D_n)` onto `Sym_n`, up to conjugacy.
pub fn zinde_census(family: Family, n: usize) -> Result<ZindeCensus, Error> {
    if !matches!(family, Family::B | Family::D) || !(3..=6).contains(&n) || (family == Family::D && n < 4) {
        return Err(Error::PreconditionViolated(alloc::format!("zinde census needs B_n or D_n with n ≤ 6, got {}{n}", family.name())));
    }
    let w = group_for(family, n, None)?;
    let catalog = Catalog::new(w.clone());
    let sym = catalog.sym()?;
    let ctx = SearchContext::new(sym.clone());
    let mut spec = SearchSpec::new(w.graph().clone(), Quotient::UpToConjugacy);
    spec.check_generation = true;
    let census = staged_search(&ctx, &spec)?;
    let flags = census.generating.clone().unwrap_or_default();
    let mut canon = Canonicalizer::new(sym.clone());
    let mut reps: Vec<Vec<Elem>> = census
        .tuples_by_node()
        .into_iter()
        .zip(flags)
        .filter(|(_, g)| *g)
        .map(|(t, _)| canon.canonical(&t).0)
        .collect();
    reps.sort();
    reps.dedup();
    let named: Vec<(&str, Vec<Elem>)> = ["eta", "zeta4_1", "zeta4_2", "zeta6"]
        .into_iter()
        .filter_map(|name| catalog.map_named(name).ok().map(|m| (name, canon.canonical(m.images()).0)))
        .collect();
    let matches = reps.iter().map(|r| named.iter().find(|(_, c)| c == r).map(|(n, _)| n.to_string())).collect();
    let joint_classes = (family == Family::D && n == 4).then(|| {
        let perms: [[usize; 3]; 6] = [[0, 1, 3], [0, 3, 1], [1, 0, 3], [1, 3, 0], [3, 0, 1], [3, 1, 0]];
        let mut joint: HashSet<Vec<Elem>> = HashSet::new();
        for r in &reps {
            let best = perms
                .iter()
                .map(|p| {
                    let mut t = r.clone();
                    for (k, &src) in [0usize, 1, 3].iter().enumerate() {
                        t[p[k]] = r[src];
                    }
                    canon.canonical(&t).0
                })
                .min()
                .expect("six permutations");
            joint.insert(best);
        }
        joint.len()
    });
    Ok(ZindeCensus { family, n, classes: reps.len(), joint_classes, representatives: reps, matches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_rank_one_search() {
        let sym2 = group_for(Family::A, 1, None).unwrap();
        let ctx = SearchContext::new(sym2.clone());
        let spec = SearchSpec::new(sym2.graph().clone(), Quotient::Raw);
        let r = staged_search(&ctx, &spec).unwrap();
        assert_eq!(r.counts(), vec![2]);
    }

    #[test]
    fn default_order_follows_edges() {
        let d5 = build_graph(Family::D, 5, None).unwrap();
        assert_eq!(default_order(&d5), vec![0, 2, 1, 3, 4]);
    }

    #[test]
    fn raw_search_matches_oracle() {
        for (f, r, m) in [(Family::I2, 2, Some(4)), (Family::A, 2, None), (Family::B, 3, None)] {
            let g = group_for(f, r, m).unwrap();
            let ctx = SearchContext::new(g.clone());
            let spec = SearchSpec::new(g.graph().clone(), Quotient::Raw);
            let mut staged = staged_search(&ctx, &spec).unwrap().tuples_by_node();
            staged.sort();
            assert_eq!(staged, brute_oracle(g.graph(), &g).unwrap());
            let conj = staged_search(&ctx, &SearchSpec::new(g.graph().clone(), Quotient::UpToConjugacy)).unwrap();
            let mut canon = Canonicalizer::new(g.clone());
            assert_eq!(conj.final_tuples().len(), orbit_count(&mut canon, &staged));
        }
    }

    #[test]
    fn h3_counts() {
        let h = h3_procedure().unwrap();
        assert_eq!((h.c2, h.x1, h.x2, h.y), (3, 16, 10, 2));
        assert!(h.all_generate);
        let mut names: Vec<_> = h.matches.iter().map(|m| m.clone().unwrap()).collect();
        names.sort();
        assert_eq!(names, vec!["nu1", "nu2"]);
    }

    #[test]
    fn rank2_classes() {
        assert_eq!(classify_rank2(5).unwrap().extraordinary().count(), 0);
        assert_eq!(classify_rank2(6).unwrap().extraordinary().count(), 0);
        let r = classify_rank2(8).unwrap();
        let extra: Vec<_> = r.extraordinary().collect();
        assert_eq!(extra.len(), 2);
        for c in &extra {
            assert_eq!(c.matches.len(), 1);
            assert!(!c.all_involutions);
        }
        assert!(r.involution_check);
    }

    #[test]
    fn zinde_small() {
        assert_eq!(zinde_census(Family::B, 3).unwrap().classes, 1);
        let b4 = zinde_census(Family::B, 4).unwrap();
        assert_eq!(b4.classes, 3);
        assert!(b4.matches.iter().all(|m| m.is_some()));
    }

    #[test]
    fn b4_lifts_are_empty() {
        for case in [LiftCase::B4Zeta41, LiftCase::B4Zeta42] {
            let r = lift_search(case).unwrap();
            assert!(r.is_empty(), "{case:?} {r:?}");
        }
    }

    #[test]
    fn b3_classification() {
        let g = group_for(Family::B, 3, None).unwrap();
        let c = classify_small(&g).unwrap();
        let mut extra: Vec<Vec<String>> = c.extraordinary().map(|e| e.matches.clone()).collect();
        extra.sort();
        assert_eq!(extra, vec![vec!["nu1".to_string()], vec!["nu2".to_string()]]);
        assert!(c.involution_check);
        assert!(c.declared_automorphisms_complete);
    }
}
