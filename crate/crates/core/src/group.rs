//! Fully enumerated finite Coxeter groups.
//!
//! Elements are numbered by a breadth-first search from the identity that
//! right-multiplies by `s_1, …, s_n` in order. The resulting numbering sorts
//! elements by length, then by their lexicographically least reduced word,
//! and does not depend on the backend.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::element::{Backend, Dihedral, GroupElement, RootPerm, SignedPerm};
use crate::error::Error;
use crate::graph::{CoxeterGraph, Family};
use crate::par;
use crate::roots::RootSystem;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ELEMENT_LIMIT: u128 = 10_000_000;

/// Index of an element in its group's enumeration.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Backend-specific element data.
#[derive(Clone)]
pub enum ElementStore {
    /// `images[x * N + p]` is the image of positive root `p` under element `x`.
    RootPerm { roots: RootSystem, images: Vec<u8> },
    Dihedral { m: u32, elems: Vec<Dihedral> },
    SignedPerm { generators: Vec<SignedPerm>, elems: Vec<SignedPerm> },
}

impl ElementStore {
    fn len(&self) -> usize {
        match self {
            ElementStore::RootPerm { roots, images } => images.len() / roots.positive_count(),
            ElementStore::Dihedral { elems, .. } => elems.len(),
            ElementStore::SignedPerm { elems, .. } => elems.len(),
        }
    }

    fn backend(&self) -> Backend {
        match self {
            ElementStore::RootPerm { .. } => Backend::RootPerm,
            ElementStore::Dihedral { .. } => Backend::Dihedral,
            ElementStore::SignedPerm { .. } => Backend::SignedPerm,
        }
    }
}

/// Conjugacy classes with `(length, index)`-minimal representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassTable {
    pub class_reps: Vec<Elem>,
    pub class_sizes: Vec<usize>,
    pub class_of: Vec<u32>,
    /// `conjugators[x]` is some `g` with `g · rep · g⁻¹ = x`.
    pub conjugators: Vec<u32>,
}

impl ConjugacyClassTable {
    pub fn len(&self) -> usize {
        self.class_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_reps.is_empty()
    }

    pub fn class_index(&self, x: Elem) -> usize {
        self.class_of[x.index()] as usize
    }

    pub fn same_class(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x.index()] == self.class_of[y.index()]
    }

    /// Some `g` with `g · rep(x) · g⁻¹ = x`.
    pub fn conjugator(&self, x: Elem) -> Elem {
        Elem(self.conjugators[x.index()])
    }

    pub fn members(&self, class: usize) -> Vec<Elem> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == class)
            .map(|(i, _)| Elem(i as u32))
            .collect()
    }
}

pub struct FiniteCoxeterGroup {
    graph: CoxeterGraph,
    store: ElementStore,
    index: HashMap<u64, u32>,
    lengths: Vec<u16>,
    inverses: Vec<u32>,
    orders: Vec<u8>,
    generators: Vec<Elem>,
    reflections: Vec<Elem>,
    reflection_pos: HashMap<u32, u32>,
    /// Positive root index of each reflection (root-permutation backend only).
    reflection_roots: Option<Vec<u8>>,
    longest: Elem,
}

impl fmt::Debug for FiniteCoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCoxeterGroup")
            .field("type", &self.graph.label())
            .field("backend", &self.backend())
            .field("order", &self.order())
            .field("reflections", &self.reflections.len())
            .finish()
    }
}

/// Builds the group with the default backend for its type: dihedral for
/// `I2(m)`, root permutations otherwise.
pub fn build_group(graph: &CoxeterGraph, element_limit: u128) -> Result<FiniteCoxeterGroup, Error> {
    let backend = if graph.family() == Family::I2 {
        Backend::Dihedral
    } else {
        Backend::RootPerm
    };
    build_group_with_backend(graph, element_limit, backend)
}

pub fn build_group_with_backend(
    graph: &CoxeterGraph,
    element_limit: u128,
    backend: Backend,
) -> Result<FiniteCoxeterGroup, Error> {
    let order = graph.group_order();
    if order > element_limit || order > u32::MAX as u128 {
        return Err(Error::OrderExceedsLimit { order, limit: element_limit });
    }
    let (store, lengths) = match backend {
        Backend::RootPerm => enumerate_roots(graph)?,
        Backend::Dihedral => {
            let m = graph.dihedral_m().ok_or(Error::BackendUnavailable("dihedral"))?;
            let gens = [Dihedral::generator(m, 0), Dihedral::generator(m, 1)];
            let (elems, lengths) = enumerate_values(Dihedral::identity(m), &gens, |a, b| a.compose(b));
            (ElementStore::Dihedral { m, elems }, lengths)
        }
        Backend::SignedPerm => {
            let gens = signed_generators(graph)?;
            let n = gens[0].degree();
            let (elems, lengths) = enumerate_values(SignedPerm::identity(n), &gens, |a, b| a.compose(b));
            (ElementStore::SignedPerm { generators: gens, elems }, lengths)
        }
    };
    FiniteCoxeterGroup::assemble(graph.clone(), store, Some(lengths))
}

/// Signed-permutation images of the simple reflections for types `A`, `B`, `D`.
///
/// `A_{n-1}`: `s_i = (i, i+1)` on `n` points. `B_n`: `s_1 = c_1` flips the first
/// coordinate and `s_i = (i−1, i)`. `D_n`: `s_1 = (1,1,0,…,0)·(1,2)` and
/// `s_i = (i−1, i)`.
pub fn signed_generators(graph: &CoxeterGraph) -> Result<Vec<SignedPerm>, Error> {
    let r = graph.rank();
    Ok(match graph.family() {
        Family::A => (0..r).map(|i| SignedPerm::transposition(r + 1, i, i + 1)).collect(),
        Family::B => {
            let mut g = vec![SignedPerm::flips(r, 1)];
            g.extend((1..r).map(|i| SignedPerm::transposition(r, i - 1, i)));
            g
        }
        Family::D => {
            let mut g = vec![SignedPerm::new(&swap01(r), 0b11)?];
            g.extend((1..r).map(|i| SignedPerm::transposition(r, i - 1, i)));
            g
        }
        _ => return Err(Error::BackendUnavailable("signed-perm")),
    })
}

fn swap01(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(0, 1);
    p
}

fn enumerate_values<T, F>(identity: T, gens: &[T], mul: F) -> (Vec<T>, Vec<u16>)
where
    T: Clone + Eq + core::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elems = vec![identity.clone()];
    let mut lengths = vec![0u16];
    let mut seen: HashMap<T, u32> = HashMap::new();
    seen.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        for g in gens {
            let y = mul(&x, g);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), elems.len() as u32);
                elems.push(y);
                lengths.push(lengths[head] + 1);
            }
        }
        head += 1;
    }
    (elems, lengths)
}

fn pack_key(parts: impl Iterator<Item = usize>) -> u64 {
    parts.enumerate().fold(0u64, |k, (i, r)| k | ((r as u64) << (8 * i)))
}

fn enumerate_roots(graph: &CoxeterGraph) -> Result<(ElementStore, Vec<u16>), Error> {
    let roots = RootSystem::new(graph)?;
    let n = roots.positive_count();
    let rank = graph.rank();
    let expected = graph.group_order() as usize;
    let mut images: Vec<u8> = Vec::with_capacity(expected * n);
    images.extend(0..n as u8);
    let mut lengths: Vec<u16> = Vec::with_capacity(expected);
    lengths.push(0);
    let mut seen: HashMap<u64, u32> = HashMap::with_capacity(expected);
    seen.insert(pack_key(0..rank), 0);
    let apply = |row: &[u8], r: usize| -> usize {
        if r < n {
            row[r] as usize
        } else {
            let img = row[r - n] as usize;
            if img < n {
                img + n
            } else {
                img - n
            }
        }
    };
    let mut head = 0usize;
    let mut scratch = vec![0u8; n];
    while head < lengths.len() {
        for i in 0..rank {
            let gi = &roots.generator_images()[i];
            let row = &images[head * n..(head + 1) * n];
            // (x·s_i)(α_j) = x(s_i(α_j))
            let key = pack_key((0..rank).map(|j| apply(row, gi[j] as usize)));
            if seen.contains_key(&key) {
                continue;
            }
            for p in 0..n {
                scratch[p] = apply(row, gi[p] as usize) as u8;
            }
            seen.insert(key, lengths.len() as u32);
            images.extend_from_slice(&scratch);
            lengths.push(lengths[head] + 1);
        }
        head += 1;
    }
    Ok((ElementStore::RootPerm { roots, images }, lengths))
}

impl FiniteCoxeterGroup {
    /// Rebuilds a group from a stored element list, recomputing all derived
    /// tables. `lengths` may be omitted; they are then recomputed by
    /// breadth-first search.
    pub fn from_store(graph: &CoxeterGraph, store: ElementStore, lengths: Option<Vec<u16>>) -> Result<Self, Error> {
        Self::assemble(graph.clone(), store, lengths)
    }

    fn assemble(graph: CoxeterGraph, store: ElementStore, lengths: Option<Vec<u16>>) -> Result<Self, Error> {
        let count = store.len();
        if count as u128 != graph.group_order() {
            return Err(Error::PreconditionViolated(alloc::format!(
                "enumerated {count} elements, expected {}",
                graph.group_order()
            )));
        }
        let mut group = FiniteCoxeterGroup {
            graph,
            store,
            index: HashMap::with_capacity(count),
            lengths: Vec::new(),
            inverses: Vec::new(),
            orders: Vec::new(),
            generators: Vec::new(),
            reflections: Vec::new(),
            reflection_pos: HashMap::new(),
            reflection_roots: None,
            longest: Elem(0),
        };
        for x in 0..count as u32 {
            if group.index.insert(group.key_of(x), x).is_some() {
                return Err(Error::PreconditionViolated("duplicate element".into()));
            }
        }
        if group.key_of(0) != group.identity_key() {
            return Err(Error::PreconditionViolated("element 0 is not the identity".into()));
        }
        let rank = group.graph.rank();
        group.generators = (0..rank)
            .map(|i| {
                let k = group.generator_key(i);
                group.index.get(&k).map(|&x| Elem(x))
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::PreconditionViolated("generator missing".into()))?;

        group.lengths = match lengths {
            Some(l) if l.len() == count => l,
            Some(_) => return Err(Error::PreconditionViolated("length table size".into())),
            None => group.bfs_lengths(),
        };
        group.inverses = (0..count as u32).map(|x| group.compute_inverse(x)).collect();
        group.orders = (0..count as u32).map(|x| group.compute_order(Elem(x))).collect();
        group.longest = Elem((count - 1) as u32);
        group.build_reflections()?;
        Ok(group)
    }

    fn identity_key(&self) -> u64 {
        match &self.store {
            ElementStore::RootPerm { .. } => pack_key(0..self.graph.rank()),
            ElementStore::Dihedral { m, .. } => dihedral_key(&Dihedral::identity(*m)),
            ElementStore::SignedPerm { generators, .. } => SignedPerm::identity(generators[0].degree()).key(),
        }
    }

    fn generator_key(&self, i: usize) -> u64 {
        match &self.store {
            ElementStore::RootPerm { roots, .. } => {
                let gi = &roots.generator_images()[i];
                pack_key((0..self.graph.rank()).map(|j| gi[j] as usize))
            }
            ElementStore::Dihedral { m, .. } => dihedral_key(&Dihedral::generator(*m, i)),
            ElementStore::SignedPerm { generators, .. } => generators[i].key(),
        }
    }

    fn key_of(&self, x: u32) -> u64 {
        match &self.store {
            ElementStore::RootPerm { roots, images } => {
                let n = roots.positive_count();
                let row = &images[x as usize * n..];
                pack_key((0..self.graph.rank()).map(|j| row[j] as usize))
            }
            ElementStore::Dihedral { elems, .. } => dihedral_key(&elems[x as usize]),
            ElementStore::SignedPerm { elems, .. } => elems[x as usize].key(),
        }
    }

    fn bfs_lengths(&self) -> Vec<u16> {
        let count = self.order();
        let mut lengths = vec![u16::MAX; count];
        lengths[0] = 0;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &g in &self.generators {
                let y = self.mul(Elem(x), g).0;
                if lengths[y as usize] == u16::MAX {
                    lengths[y as usize] = lengths[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        lengths
    }

    fn compute_inverse(&self, x: u32) -> u32 {
        let key = match &self.store {
            ElementStore::RootPerm { roots, images } => {
                let n = roots.positive_count();
                let rank = self.graph.rank();
                let row = &images[x as usize * n..(x as usize + 1) * n];
                let mut parts = [0usize; 16];
                for (p, &img) in row.iter().enumerate() {
                    let img = img as usize;
                    if img < rank {
                        parts[img] = p;
                    } else if img >= n && img - n < rank {
                        parts[img - n] = p + n;
                    }
                }
                pack_key(parts[..rank].iter().copied())
            }
            ElementStore::Dihedral { elems, .. } => dihedral_key(&elems[x as usize].inverse()),
            ElementStore::SignedPerm { elems, .. } => elems[x as usize].inverse().key(),
        };
        self.index[&key]
    }

    fn compute_order(&self, x: Elem) -> u8 {
        let mut p = x;
        let mut k = 1u8;
        while p != Elem::IDENTITY {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    fn build_reflections(&mut self) -> Result<(), Error> {
        let root_store = matches!(self.store, ElementStore::RootPerm { .. });
        let mut roots_of: HashMap<u32, u8> = HashMap::new();
        let mut queue: VecDeque<Elem> = VecDeque::new();
        for (i, &s) in self.generators.iter().enumerate() {
            if !roots_of.contains_key(&s.0) {
                roots_of.insert(s.0, i as u8);
                queue.push_back(s);
            }
        }
        while let Some(t) = queue.pop_front() {
            for (i, &s) in self.generators.iter().enumerate() {
                let u = self.mul(s, self.mul(t, s));
                if !roots_of.contains_key(&u.0) {
                    let root = if root_store {
                        let ElementStore::RootPerm { roots, .. } = &self.store else { unreachable!() };
                        let r = roots.reflect_index(i, roots_of[&t.0] as usize);
                        (r % roots.positive_count()) as u8
                    } else {
                        0
                    };
                    roots_of.insert(u.0, root);
                    queue.push_back(u);
                }
            }
        }
        let mut refl: Vec<Elem> = roots_of.keys().map(|&x| Elem(x)).collect();
        refl.sort();
        if refl.len() != self.graph.reflection_count() {
            return Err(Error::PreconditionViolated("reflection count".into()));
        }
        self.reflection_pos = refl.iter().enumerate().map(|(k, t)| (t.0, k as u32)).collect();
        if root_store {
            self.reflection_roots = Some(refl.iter().map(|t| roots_of[&t.0]).collect());
        }
        self.reflections = refl;
        Ok(())
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn backend(&self) -> Backend {
        self.store.backend()
    }

    pub fn store(&self) -> &ElementStore {
        &self.store
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order() as u32).map(Elem)
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Elem {
        self.generators[i]
    }

    pub fn lengths(&self) -> &[u16] {
        &self.lengths
    }

    pub fn length(&self, x: Elem) -> usize {
        self.lengths[x.index()] as usize
    }

    /// `(−1)^{ℓ(x)}`.
    pub fn sign(&self, x: Elem) -> i8 {
        if self.lengths[x.index()].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        self.orders[x.index()] as u32
    }

    pub fn is_involution(&self, x: Elem) -> bool {
        self.orders[x.index()] == 2
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let key = match &self.store {
            ElementStore::RootPerm { roots, images } => {
                let n = roots.positive_count();
                let rx = &images[x.index() * n..(x.index() + 1) * n];
                let ry = &images[y.index() * n..];
                pack_key((0..self.graph.rank()).map(|j| {
                    let r = ry[j] as usize;
                    if r < n {
                        rx[r] as usize
                    } else {
                        let img = rx[r - n] as usize;
                        if img < n {
                            img + n
                        } else {
                            img - n
                        }
                    }
                }))
            }
            ElementStore::Dihedral { elems, .. } => dihedral_key(&elems[x.index()].compose(&elems[y.index()])),
            ElementStore::SignedPerm { elems, .. } => elems[x.index()].compose(&elems[y.index()]).key(),
        };
        Elem(self.index[&key])
    }

    pub fn inv(&self, x: Elem) -> Elem {
        Elem(self.inverses[x.index()])
    }

    /// `g·x·g⁻¹`.
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: Elem, k: u32) -> Elem {
        (0..k).fold(Elem::IDENTITY, |acc, _| self.mul(acc, x))
    }

    pub fn commute(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Product `s_{i_1} ⋯ s_{i_k}` for 0-based generator indices.
    pub fn word_element(&self, word: &[usize]) -> Elem {
        word.iter().fold(Elem::IDENTITY, |acc, &i| self.mul(acc, self.generators[i]))
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(Elem::IDENTITY, |acc, &x| self.mul(acc, x))
    }

    /// The lexicographically least reduced word of `x` (0-based letters).
    pub fn reduced_word(&self, x: Elem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(x));
        let mut cur = x;
        while cur != Elem::IDENTITY {
            let l = self.length(cur);
            let (i, next) = self
                .generators
                .iter()
                .enumerate()
                .map(|(i, &s)| (i, self.mul(s, cur)))
                .find(|&(_, y)| self.length(y) < l)
                .expect("non-identity element has a left descent");
            word.push(i);
            cur = next;
        }
        word
    }

    /// The backend value of an element.
    pub fn element(&self, x: Elem) -> GroupElement {
        match &self.store {
            ElementStore::RootPerm { roots, images } => {
                let n = roots.positive_count();
                GroupElement::RootPerm(RootPerm::from_images(images[x.index() * n..(x.index() + 1) * n].to_vec()))
            }
            ElementStore::Dihedral { elems, .. } => GroupElement::Dihedral(elems[x.index()]),
            ElementStore::SignedPerm { elems, .. } => GroupElement::SignedPerm(elems[x.index()]),
        }
    }

    /// Index of a backend value, if it belongs to this group.
    pub fn index_of(&self, value: &GroupElement) -> Result<Option<Elem>, Error> {
        let key = match (&self.store, value) {
            (ElementStore::RootPerm { roots, .. }, GroupElement::RootPerm(p)) => {
                if p.positive_count() != roots.positive_count() {
                    return Err(Error::BackendMismatch);
                }
                pack_key((0..self.graph.rank()).map(|j| p.images()[j] as usize))
            }
            (ElementStore::Dihedral { m, .. }, GroupElement::Dihedral(d)) if d.m == *m => dihedral_key(d),
            (ElementStore::SignedPerm { generators, .. }, GroupElement::SignedPerm(s))
                if s.degree() == generators[0].degree() =>
            {
                s.key()
            }
            _ => return Err(Error::BackendMismatch),
        };
        let found = self.index.get(&key).map(|&x| Elem(x));
        // The key only records simple-root images; confirm the full value.
        Ok(found.filter(|&x| &self.element(x) == value))
    }

    /// Number of positive roots sent to negative roots. Only defined for the
    /// root-permutation backend.
    pub fn inversion_count(&self, x: Elem) -> Option<usize> {
        match &self.store {
            ElementStore::RootPerm { roots, images } => {
                let n = roots.positive_count();
                Some(images[x.index() * n..(x.index() + 1) * n].iter().filter(|&&r| r as usize >= n).count())
            }
            _ => None,
        }
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        match &self.store {
            ElementStore::RootPerm { roots, .. } => Some(roots),
            _ => None,
        }
    }

    /// Image of root `r` under `x` (root-permutation backend only).
    pub fn apply_to_root(&self, x: Elem, r: usize) -> Option<usize> {
        match &self.store {
            ElementStore::RootPerm { roots, images } => {
                let n = roots.positive_count();
                Some(RootPerm::from_images(images[x.index() * n..(x.index() + 1) * n].to_vec()).apply(r))
            }
            _ => None,
        }
    }

    /// The reflections `T`, ordered by element index.
    pub fn reflections(&self) -> &[Elem] {
        &self.reflections
    }

    /// Position of `t` in [`Self::reflections`].
    pub fn reflection_index(&self, t: Elem) -> Option<usize> {
        self.reflection_pos.get(&t.0).map(|&k| k as usize)
    }

    /// Positive root belonging to the `k`-th reflection.
    pub fn reflection_root(&self, k: usize) -> Option<usize> {
        self.reflection_roots.as_ref().map(|r| r[k] as usize)
    }

    pub fn positive_count(&self) -> usize {
        self.reflections.len()
    }

    pub fn longest_element(&self) -> Elem {
        self.longest
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClassTable {
        let count = self.order();
        let mut class_of = vec![u32::MAX; count];
        let mut conjugators = vec![0u32; count];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut queue = Vec::new();
        for x in 0..count {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(Elem(x as u32));
            class_of[x] = c;
            queue.clear();
            queue.push(Elem(x as u32));
            let mut size = 0;
            while let Some(y) = queue.pop() {
                size += 1;
                for &s in &self.generators {
                    let z = self.conj(s, y);
                    if class_of[z.index()] == u32::MAX {
                        class_of[z.index()] = c;
                        conjugators[z.index()] = self.mul(s, Elem(conjugators[y.index()])).0;
                        queue.push(z);
                    }
                }
            }
            sizes.push(size);
        }
        ConjugacyClassTable { class_reps: reps, class_sizes: sizes, class_of, conjugators }
    }

    /// All `w` commuting with every element of `xs`, ascending.
    pub fn centralizer(&self, xs: &[Elem]) -> Vec<Elem> {
        par::filter_range(self.order() as u32, |w| xs.iter().all(|&x| self.commute(Elem(w), x)))
            .into_iter()
            .map(Elem)
            .collect()
    }

    /// Elements of `within` commuting with `x`.
    pub fn centralizer_in(&self, within: &[Elem], x: Elem) -> Vec<Elem> {
        within.iter().copied().filter(|&w| self.commute(w, x)).collect()
    }

    /// Subgroup generated by `gens`, ascending.
    pub fn generated_subgroup(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen: HashSet<u32> = HashSet::new();
        seen.insert(0);
        let mut out = vec![Elem::IDENTITY];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y.0) {
                    out.push(y);
                }
            }
            head += 1;
        }
        out.sort();
        out
    }

    /// Whether `gens` generate the whole group. Stops as soon as the closure
    /// exceeds half the group order.
    pub fn generates(&self, gens: &[Elem]) -> bool {
        let half = self.order() / 2;
        let mut seen: HashSet<u32> = HashSet::new();
        seen.insert(0);
        let mut queue = vec![Elem::IDENTITY];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y.0) {
                    if seen.len() > half {
                        return true;
                    }
                    queue.push(y);
                }
            }
            head += 1;
        }
        seen.len() == self.order()
    }
}

fn dihedral_key(d: &Dihedral) -> u64 {
    (d.k as u64) << 1 | d.flip as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn group(family: Family, rank: usize) -> FiniteCoxeterGroup {
        build_group(&build_graph(family, rank, None).unwrap(), DEFAULT_ELEMENT_LIMIT).unwrap()
    }

    #[test]
    fn dihedral_order() {
        let g = build_group(&build_graph(Family::I2, 2, Some(4)).unwrap(), 100).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.reflections().len(), 4);
        let d = g.longest_element();
        assert_eq!(g.length(d), 4);
        assert_eq!(d, g.word_element(&[0, 1, 0, 1]));
    }

    #[test]
    fn h3_order_and_reflections() {
        let g = group(Family::H3, 3);
        assert_eq!(g.order(), 120);
        assert_eq!(g.reflections().len(), 15);
        for &t in g.reflections() {
            assert_eq!(g.element_order(t), 2);
            assert_eq!(g.sign(t), -1);
        }
    }

    #[test]
    fn e8_is_refused() {
        let e8 = build_graph(Family::E8, 8, None).unwrap();
        match build_group(&e8, 10_000_000) {
            Err(Error::OrderExceedsLimit { order, .. }) => assert_eq!(order, 696_729_600),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn order_of_generators_and_products() {
        let g = build_group(&build_graph(Family::I2, 2, Some(4)).unwrap(), 100).unwrap();
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        assert_eq!(g.element_order(s1), 2);
        assert_eq!(g.element_order(g.mul(s1, s2)), 4);
        assert_eq!(g.mul(s1, g.identity()), s1);
    }

    #[test]
    fn b3_reflections_and_longest() {
        let g = group(Family::B, 3);
        assert_eq!(g.reflections().len(), 9);
        let d = g.longest_element();
        assert_eq!(g.length(d), 9);
        assert_eq!(g.sign(d), -1);
        assert_eq!(g.element_order(d), 2);
        // δ = (s1 s2 s3)^3
        let c = g.word_element(&[0, 1, 2]);
        assert_eq!(g.pow(c, 3), d);
    }

    #[test]
    fn classes_of_small_types() {
        let s3 = build_group(&build_graph(Family::I2, 2, Some(3)).unwrap(), 100).unwrap();
        assert_eq!(s3.conjugacy_classes().len(), 3);
        let f4 = group(Family::F4, 4);
        let classes = f4.conjugacy_classes();
        assert_eq!(classes.len(), 25);
        assert_eq!(classes.class_sizes.iter().sum::<usize>(), 1152);
        for x in f4.elements() {
            let rep = classes.class_reps[classes.class_index(x)];
            assert_eq!(f4.conj(classes.conjugator(x), rep), x);
        }
        for (k, &rep) in classes.class_reps.iter().enumerate() {
            assert_eq!(1152 % classes.class_sizes[k], 0);
            assert_eq!(f4.centralizer(&[rep]).len() * classes.class_sizes[k], 1152);
        }
    }

    #[test]
    fn reduced_words_are_lex_least() {
        let g = group(Family::A, 3);
        for x in g.elements() {
            let w = g.reduced_word(x);
            assert_eq!(w.len(), g.length(x));
            assert_eq!(g.word_element(&w), x);
        }
        // s2 s1 s3 s2 is not lex least for its element; s1? check the longest
        assert_eq!(g.reduced_word(g.longest_element()), vec![0, 1, 0, 2, 1, 0]);
    }
}
