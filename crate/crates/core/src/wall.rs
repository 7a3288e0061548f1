//! Wall crossing. `W` acts on `{±1} × T` by
//! `u_i(ε, t) = (ε, s_i t s_i)` for `t ≠ s_i` and `(−ε, t)` for `t = s_i`,
//! and the Artin group lifts this to `Z × T` by
//! `U_i(k, t) = (k, s_i t s_i)` resp. `(k + 1, t)`. A lifted action commutes
//! with the shift in `k`, so it is determined by its values on `{0} × T`,
//! the wall table.
//!
//! Composition: `U(g h) = U(g) ∘ U(h)`, the rightmost letter acting first.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::gf2::Gf2System;
use crate::graph::Family;
use crate::group::{Elem, FiniteCoxeterGroup};
use crate::maps::GeneratorMap;
use crate::words::{alternating, ArtinWord};

/// `u(w)` restricted to `{+1} × T`: entry `t` is `(flipped, w t w⁻¹)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTable {
    entries: Vec<(bool, u32)>,
}

impl UTable {
    pub fn identity(size: usize) -> Self {
        Self { entries: (0..size as u32).map(|t| (false, t)).collect() }
    }

    pub fn generator(group: &FiniteCoxeterGroup, i: usize) -> Self {
        let s = group.generator(i);
        let entries = group
            .reflections()
            .iter()
            .map(|&t| {
                let image = group.conj(s, t);
                (t == s, group.reflection_index(image).expect("conjugate of a reflection") as u32)
            })
            .collect();
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(ε, t) ↦ (ε′, t′)` with `ε = ±1` and `t` a reflection index.
    pub fn apply(&self, eps: i8, t: usize) -> (i8, usize) {
        let (flip, image) = self.entries[t];
        (if flip { -eps } else { eps }, image as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UTable) -> UTable {
        let entries = other
            .entries
            .iter()
            .map(|&(f1, t1)| {
                let (f2, t2) = self.entries[t1 as usize];
                (f1 ^ f2, t2)
            })
            .collect();
        UTable { entries }
    }
}

/// `u(w)` by composing generator tables along the least reduced word of `w`.
pub fn u_table(group: &FiniteCoxeterGroup, w: Elem) -> UTable {
    let gens: Vec<UTable> = (0..group.rank()).map(|i| UTable::generator(group, i)).collect();
    group
        .reduced_word(w)
        .iter()
        .fold(UTable::identity(group.positive_count()), |acc, &i| acc.compose(&gens[i]))
}

/// `u(w)` read off the action on roots, identifying `(ε, t)` with `ε α_t`.
/// Only available for the root-permutation backend.
pub fn u_table_from_roots(group: &FiniteCoxeterGroup, w: Elem) -> Option<UTable> {
    let roots = group.root_system()?;
    let n = group.positive_count();
    let mut by_root = vec![0u32; n];
    for k in 0..n {
        by_root[group.reflection_root(k)?] = k as u32;
    }
    let entries = (0..n)
        .map(|k| {
            let image = group.apply_to_root(w, group.reflection_root(k)?)?;
            let (flip, positive) = if image < n { (false, image) } else { (true, roots.negation(image)) };
            Some((flip, by_root[positive]))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(UTable { entries })
}

/// `U(g)` on `{0} × T`: entry `t` is `(k_t, t′)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WallTable {
    entries: Vec<(i64, u32)>,
}

impl WallTable {
    pub fn identity(size: usize) -> Self {
        Self { entries: (0..size as u32).map(|t| (0, t)).collect() }
    }

    /// `U_i` or, for `exponent = −1`, its inverse.
    pub fn generator(group: &FiniteCoxeterGroup, i: usize, exponent: i8) -> Self {
        let u = UTable::generator(group, i);
        let step = if exponent < 0 { -1 } else { 1 };
        Self { entries: u.entries.iter().map(|&(hit, image)| (if hit { step } else { 0 }, image)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(i64, u32)] {
        &self.entries
    }

    /// `U(g)(0, t)`.
    pub fn entry(&self, t: usize) -> (i64, usize) {
        let (k, image) = self.entries[t];
        (k, image as usize)
    }

    /// `U(g)(k, t) = (k + k_t, t′)`.
    pub fn apply(&self, k: i64, t: usize) -> (i64, usize) {
        let (dk, image) = self.entry(t);
        (k + dk, image)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WallTable) -> WallTable {
        let entries = other
            .entries
            .iter()
            .map(|&(k1, t1)| {
                let (k2, t2) = self.entries[t1 as usize];
                (k1 + k2, t2)
            })
            .collect();
        WallTable { entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(t, &(k, image))| k == 0 && image as usize == t)
    }

    pub fn total_offset(&self) -> i64 {
        self.entries.iter().map(|&(k, _)| k).sum()
    }
}

/// `U(word)` on `{0} × T`.
pub fn wall_table(word: &ArtinWord, group: &FiniteCoxeterGroup) -> Result<WallTable, Error> {
    word.check_rank(group.rank())?;
    let mut cache: BTreeMap<(usize, i8), WallTable> = BTreeMap::new();
    let mut acc = WallTable::identity(group.positive_count());
    for &(g, e) in word.letters() {
        let table = cache.entry((g, e)).or_insert_with(|| WallTable::generator(group, g, e));
        acc = acc.compose(table);
    }
    Ok(acc)
}

/// Whether `U(word)` reduces to `u(μ(word))` under `k ↦ (−1)^k`.
pub fn compatibility_check(word: &ArtinWord, group: &FiniteCoxeterGroup) -> Result<bool, Error> {
    let table = wall_table(word, group)?;
    let mu = group.product(&word.letters().iter().map(|&(g, _)| group.generator(g)).collect::<Vec<_>>());
    let u = u_table(group, mu);
    Ok((0..table.len()).all(|t| {
        let (k, image) = table.entry(t);
        u.apply(1, t) == (if k.rem_euclid(2) == 1 { -1 } else { 1 }, image)
    }))
}

/// Sum of the offsets of `U(word)` over `T`.
pub fn total_offset(word: &ArtinWord, group: &FiniteCoxeterGroup) -> Result<i64, Error> {
    Ok(wall_table(word, group)?.total_offset())
}

/// `constant + 2 · Σ coefficient · x_id`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicOffset {
    pub constant: i64,
    pub unknowns: BTreeMap<u32, i64>,
}

impl SymbolicOffset {
    pub fn constant(c: i64) -> Self {
        Self { constant: c, unknowns: BTreeMap::new() }
    }

    pub fn with_unknown(c: i64, id: u32) -> Self {
        let mut unknowns = BTreeMap::new();
        unknowns.insert(id, 1);
        Self { constant: c, unknowns }
    }

    pub fn add(&self, other: &SymbolicOffset) -> SymbolicOffset {
        let mut out = self.clone();
        out.constant += other.constant;
        for (&id, &c) in &other.unknowns {
            *out.unknowns.entry(id).or_insert(0) += c;
        }
        out.unknowns.retain(|_, c| *c != 0);
        out
    }

    pub fn evaluate(&self, assignment: &[i64]) -> i64 {
        self.constant + 2 * self.unknowns.iter().map(|(&id, &c)| c * assignment[id as usize]).sum::<i64>()
    }
}

/// A lifted table on a probe set `P ⊆ T`, with symbolic offsets. Entry `k`
/// belongs to the probe reflection `P[k]` and points at a probe position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicWallTable {
    entries: Vec<(SymbolicOffset, u32)>,
}

impl SymbolicWallTable {
    pub fn identity(size: usize) -> Self {
        Self { entries: (0..size as u32).map(|k| (SymbolicOffset::default(), k)).collect() }
    }

    pub fn entries(&self) -> &[(SymbolicOffset, u32)] {
        &self.entries
    }

    pub fn compose(&self, other: &SymbolicWallTable) -> SymbolicWallTable {
        let entries = other
            .entries
            .iter()
            .map(|(o1, t1)| {
                let (o2, t2) = &self.entries[*t1 as usize];
                (o1.add(o2), *t2)
            })
            .collect();
        SymbolicWallTable { entries }
    }
}

/// Halved offset equations `Σ coefficient · x = rhs`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntLinearSystem {
    pub unknowns: usize,
    pub rows: Vec<(BTreeMap<u32, i64>, i64)>,
}

impl IntLinearSystem {
    pub fn gf2(&self) -> Gf2System {
        let mut s = Gf2System::new(self.unknowns);
        for (coeffs, rhs) in &self.rows {
            let support: Vec<usize> = coeffs.iter().filter(|(_, c)| *c % 2 != 0).map(|(&id, _)| id as usize).collect();
            s.push(&support, rhs.rem_euclid(2) == 1);
        }
        s
    }

    /// Integer sum of the listed rows.
    pub fn combine(&self, rows: &[usize]) -> (BTreeMap<u32, i64>, i64) {
        let mut coeffs = BTreeMap::new();
        let mut rhs = 0;
        for &r in rows {
            for (&id, &c) in &self.rows[r].0 {
                *coeffs.entry(id).or_insert(0) += c;
            }
            rhs += self.rows[r].1;
        }
        coeffs.retain(|_, c: &mut i64| *c != 0);
        (coeffs, rhs)
    }

    pub fn contains_row(&self, coeffs: &BTreeMap<u32, i64>, rhs: i64) -> bool {
        self.rows.iter().any(|(c, r)| (c == coeffs && *r == rhs) || (negated(c) == *coeffs && -*r == rhs))
    }

    pub fn satisfied_by(&self, assignment: &[i64]) -> bool {
        self.rows.iter().all(|(c, r)| c.iter().map(|(&id, &k)| k * assignment[id as usize]).sum::<i64>() == *r)
    }
}

fn negated(c: &BTreeMap<u32, i64>) -> BTreeMap<u32, i64> {
    c.iter().map(|(&k, &v)| (k, -v)).collect()
}

/// Writes `Σ c_j x_j = rhs` with unknown `j` named by `name(j)`, factoring out
/// a common 2 when every coefficient is even.
pub fn format_equation(coeffs: &BTreeMap<u32, i64>, rhs: i64, name: &dyn Fn(u32) -> String) -> String {
    let even = !coeffs.is_empty() && coeffs.values().all(|c| c % 2 == 0);
    let div = if even { 2 } else { 1 };
    let mut body = String::new();
    for (k, (&id, &c)) in coeffs.iter().enumerate() {
        let c = c / div;
        let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        body.push_str(&alloc::format!("{sign}{mag}{}", name(id)));
    }
    if body.is_empty() {
        body.push('0');
    }
    if even {
        alloc::format!("2({body}) = {rhs}")
    } else {
        alloc::format!("{body} = {rhs}")
    }
}

/// Outcome of [`braid_obstruction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// The listed rows sum to an equation with even coefficients and odd
    /// right-hand side: no lift exists.
    Contradiction { certificate: Vec<usize> },
    /// The system is solvable mod 2; the assignment is evidence only.
    Undecided { witness: Vec<bool> },
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    /// 0-based edge `(a, b)`.
    pub edge: (usize, usize),
    pub m: u32,
    pub probe: Vec<Elem>,
    pub lifts: (ArtinWord, ArtinWord),
    /// Unknown `j · |P| + k` belongs to generator `j ∈ {a, b}` and probe `P[k]`.
    pub system: IntLinearSystem,
    pub verdict: ObstructionVerdict,
}

impl ObstructionReport {
    pub fn is_contradiction(&self) -> bool {
        matches!(self.verdict, ObstructionVerdict::Contradiction { .. })
    }

    /// The combined contradictory equation, if any.
    pub fn combined(&self) -> Option<(BTreeMap<u32, i64>, i64)> {
        match &self.verdict {
            ObstructionVerdict::Contradiction { certificate } => Some(self.system.combine(certificate)),
            ObstructionVerdict::Undecided { .. } => None,
        }
    }

    /// Names unknowns `letters[j]` followed by the 1-based probe position.
    pub fn unknown_name(&self, id: u32, letters: [char; 2]) -> String {
        let p = self.probe.len() as u32;
        alloc::format!("{}{}", letters[(id / p) as usize], id % p + 1)
    }
}

/// Searches for a mod-2 contradiction to the existence of an endomorphism
/// `Φ` of the Artin group with `μ ∘ Φ = nu`, using the braid relation on
/// the edge `(a, b)`. `probe` defaults to all of `T`; `lifts` default to
/// the least reduced words of `nu(σ_a)`, `nu(σ_b)`.
///
/// An entry `(k, r')` of a lift's table becomes `(2x + (k mod 2), r')`: the
/// even part of `k` is absorbed into the unknown `x`.
pub fn braid_obstruction(
    nu: &GeneratorMap,
    edge: (usize, usize),
    probe: Option<&[Elem]>,
    lifts: Option<(ArtinWord, ArtinWord)>,
) -> Result<ObstructionReport, Error> {
    let group = nu.target();
    let graph = nu.source();
    let rank = graph.rank();
    let (a, b) = edge;
    if a >= rank || b >= rank || a == b {
        return Err(Error::IndexOutOfRange { index: a.max(b), rank });
    }
    if graph != group.graph() {
        return Err(Error::TypeMismatch("obstruction needs a map from A(Γ) onto W(Γ)".into()));
    }
    if !nu.check_artin_relations().is_empty() {
        return Err(Error::PreconditionViolated("map does not satisfy the Artin relations".into()));
    }
    let m = graph.m(a, b);
    let probe: Vec<Elem> = probe.map(|p| p.to_vec()).unwrap_or_else(|| group.reflections().to_vec());
    let mut position = BTreeMap::new();
    for (k, &r) in probe.iter().enumerate() {
        if group.reflection_index(r).is_none() || position.insert(r, k as u32).is_some() {
            return Err(Error::PreconditionViolated("probe must list distinct reflections".into()));
        }
    }
    let lifts = lifts.unwrap_or_else(|| {
        (ArtinWord::positive(&group.reduced_word(nu.image(a))), ArtinWord::positive(&group.reduced_word(nu.image(b))))
    });
    let mu = GeneratorMap::standard(group);
    let p = probe.len() as u32;
    let mut symbolic = Vec::with_capacity(2);
    for (j, (generator, lift)) in [(a, &lifts.0), (b, &lifts.1)].into_iter().enumerate() {
        if mu.evaluate(lift)? != nu.image(generator) {
            return Err(Error::LiftMismatch { generator });
        }
        let table = wall_table(lift, group)?;
        let mut entries = Vec::with_capacity(probe.len());
        for (k, &r) in probe.iter().enumerate() {
            let t = group.reflection_index(r).expect("checked");
            let (offset, image) = table.entry(t);
            let image = group.reflections()[image];
            let target = *position.get(&image).ok_or(Error::ProbeNotClosed { generator })?;
            entries.push((SymbolicOffset::with_unknown(offset.rem_euclid(2), j as u32 * p + k as u32), target));
        }
        symbolic.push(SymbolicWallTable { entries });
    }
    let side = |first: usize, second: usize| {
        alternating(first, second, m as usize)
            .iter()
            .fold(SymbolicWallTable::identity(probe.len()), |acc, &j| acc.compose(&symbolic[j]))
    };
    let left = side(0, 1);
    let right = side(1, 0);
    let mut system = IntLinearSystem { unknowns: 2 * probe.len(), rows: Vec::with_capacity(probe.len()) };
    for (k, ((lo, lt), (ro, rt))) in left.entries.iter().zip(&right.entries).enumerate() {
        if lt != rt || (ro.constant - lo.constant).rem_euclid(2) != 0 {
            return Err(Error::ParityClash { probe: k });
        }
        let coeffs = lo.add(&SymbolicOffset { constant: 0, unknowns: negated(&ro.unknowns) }).unknowns;
        system.rows.push((coeffs, (ro.constant - lo.constant) / 2));
    }
    let outcome = system.gf2().solve();
    let verdict = match (outcome.certificate, outcome.solution) {
        (Some(certificate), _) => ObstructionVerdict::Contradiction { certificate },
        (None, Some(witness)) => ObstructionVerdict::Undecided { witness },
        (None, None) => unreachable!("elimination yields a certificate or a solution"),
    };
    Ok(ObstructionReport { edge, m, probe, lifts, system, verdict })
}

/// The worked examples with explicit probe lists and lifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WorkedExample {
    B,
    D,
    H3Nu1,
    H3Nu2,
}

impl WorkedExample {
    pub const ALL: [WorkedExample; 4] = [WorkedExample::B, WorkedExample::D, WorkedExample::H3Nu1, WorkedExample::H3Nu2];

    pub fn name(self) -> &'static str {
        match self {
            WorkedExample::B => "B",
            WorkedExample::D => "D",
            WorkedExample::H3Nu1 => "H3-nu1",
            WorkedExample::H3Nu2 => "H3-nu2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }

    pub fn family(self) -> Family {
        match self {
            WorkedExample::B => Family::B,
            WorkedExample::D => Family::D,
            _ => Family::H3,
        }
    }

    /// Names of the unknowns for `σ_2` and `σ_3`.
    pub fn letters(self) -> [char; 2] {
        match self {
            WorkedExample::B | WorkedExample::D => ['a', 'b'],
            _ => ['b', 'c'],
        }
    }

    /// Expected `U(τ_2)(0, r_i)` and `U(τ_3)(0, r_i)` as `(offset, j)` with `r_j`
    /// 1-based.
    pub fn reference_tables(self) -> [&'static [(i64, usize)]; 2] {
        match self {
            WorkedExample::B => [&reference::B_TAU2, &reference::B_TAU3],
            WorkedExample::D => [&reference::D_TAU2, &reference::D_TAU3],
            _ => [&reference::H3_TAU2, &reference::H3_TAU3],
        }
    }

    /// The selected offset equations and their sum.
    pub fn reference_equations(self) -> (&'static [&'static str], &'static str) {
        match self {
            WorkedExample::B => (&reference::B_EQUATIONS, reference::B_SUM),
            WorkedExample::D => (&reference::D_EQUATIONS, reference::D_SUM),
            WorkedExample::H3Nu1 => (&reference::H3_NU1_EQUATIONS, reference::H3_NU1_SUM),
            WorkedExample::H3Nu2 => (&reference::H3_NU2_EQUATIONS, reference::H3_NU2_SUM),
        }
    }
}

impl fmt::Display for WorkedExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reference tables and equations for the worked examples.
pub mod reference {
    pub const B_TAU2: [(i64, usize); 6] = [(1, 4), (0, 3), (0, 5), (0, 1), (0, 6), (0, 2)];
    pub const B_TAU3: [(i64, usize); 6] = [(0, 2), (1, 4), (1, 6), (0, 5), (1, 1), (0, 3)];
    pub const D_TAU2: [(i64, usize); 6] = [(2, 6), (1, 4), (1, 2), (1, 5), (1, 3), (1, 1)];
    pub const D_TAU3: [(i64, usize); 6] = [(2, 5), (1, 1), (2, 4), (1, 3), (1, 6), (2, 2)];
    pub const H3_TAU2: [(i64, usize); 15] = [
        (0, 12),
        (1, 5),
        (1, 9),
        (0, 15),
        (1, 11),
        (0, 4),
        (0, 8),
        (1, 6),
        (0, 13),
        (0, 3),
        (0, 1),
        (1, 2),
        (0, 14),
        (0, 10),
        (0, 7),
    ];
    pub const H3_TAU3: [(i64, usize); 15] = [
        (1, 8),
        (0, 10),
        (0, 2),
        (1, 5),
        (0, 12),
        (0, 7),
        (1, 3),
        (0, 11),
        (0, 1),
        (0, 6),
        (0, 14),
        (0, 15),
        (0, 4),
        (0, 9),
        (0, 13),
    ];

    pub const B_EQUATIONS: [&str; 4] =
        ["a2-a4+a6-b1-b2+b3=0", "a1+a3-a6-b2-b3+b5=0", "a2+a4-a5+b1-b4-b6=0", "-a1+a3+a5-b4-b5+b6=1"];
    pub const B_SUM: &str = "2a2+2a3-2b2-2b4=1";
    pub const D_EQUATIONS: [&str; 4] =
        ["a1+a2-a5-b1-b3+b6=0", "-a1+a2+a3-b2+b4-b6=-1", "-a3+a4+a6-b2-b4+b5=0", "a4+a5-a6-b1+b3-b5=0"];
    pub const D_SUM: &str = "2a2+2a4-2b1-2b2=-1";
    pub const H3_NU1_EQUATIONS: [&str; 6] = [
        "b2-b10+b12-c2-c3+c5=-1",
        "b5-b12+b14-c2-c5+c11=0",
        "b5+b6-b7+c4-c6-c8=-1",
        "b7+b8-b11-c1+c6-c8=0",
        "b2-b6+b10+c3-c4-c10=0",
        "b8+b11-b14+c1-c10-c11=-1",
    ];
    pub const H3_NU1_SUM: &str = "2b2+2b5+2b8-2c2-2c8-2c10=-3";
    pub const H3_NU2_EQUATIONS: [&str; 6] = [
        "b2-b7+b15-c2+c4-c13=0",
        "b2+b4-b15-c4+c6-c12=0",
        "b7-b10+b12-c7+c13-c14=0",
        "b3+b8-b9-c2-c8+c10=-1",
        "-b3+b8+b10-c7-c10+c14=0",
        "-b4+b9+b12-c6+c8-c12=0",
    ];
    pub const H3_NU2_SUM: &str = "2b2+2b8+2b12-2c2-2c7-2c12=-1";
}

/// Parses `a2-a4+a6-b1=0` style equations; `letters[j]` selects generator
/// `j` and the number is the 1-based probe position. Unknown ids follow
/// [`ObstructionReport`].
pub fn parse_equation(text: &str, letters: [char; 2], probe_len: usize) -> Result<(BTreeMap<u32, i64>, i64), Error> {
    let bad = || Error::PreconditionViolated(alloc::format!("cannot parse equation {text}"));
    let (lhs, rhs) = text.split_once('=').ok_or_else(bad)?;
    let rhs: i64 = rhs.trim().parse().map_err(|_| bad())?;
    let mut coeffs = BTreeMap::new();
    let lhs: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = lhs.as_str();
    while !rest.is_empty() {
        let (sign, tail) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let digits = tail.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
        let scale: i64 = if digits == 0 { 1 } else { tail[..digits].parse().map_err(|_| bad())? };
        let tail = &tail[digits..];
        let letter = tail.chars().next().ok_or_else(bad)?;
        let j = letters.iter().position(|&l| l == letter).ok_or_else(bad)?;
        let tail = &tail[letter.len_utf8()..];
        let end = tail.find(|c: char| !c.is_ascii_digit()).unwrap_or(tail.len());
        let k: usize = tail[..end].parse().map_err(|_| bad())?;
        if k == 0 || k > probe_len {
            return Err(bad());
        }
        *coeffs.entry((j * probe_len + k - 1) as u32).or_insert(0) += sign * scale;
        rest = &tail[end..];
    }
    coeffs.retain(|_, c: &mut i64| *c != 0);
    Ok((coeffs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Catalog, CatalogEntry};
    use crate::graph::build_graph;
    use crate::group::{build_group, DEFAULT_ELEMENT_LIMIT};
    use alloc::sync::Arc;

    fn group(f: Family, r: usize) -> Arc<FiniteCoxeterGroup> {
        Arc::new(build_group(&build_graph(f, r, None).unwrap(), DEFAULT_ELEMENT_LIMIT).unwrap())
    }

    #[test]
    fn generator_flips_its_own_wall() {
        let g = group(Family::B, 3);
        for i in 0..3 {
            let t = g.reflection_index(g.generator(i)).unwrap();
            assert_eq!(u_table(&g, g.generator(i)).apply(1, t), (-1, t));
        }
        assert_eq!(u_table(&g, g.identity()), UTable::identity(9));
    }

    #[test]
    fn u_matches_root_action() {
        let g = group(Family::F4, 4);
        for w in g.elements().step_by(37) {
            assert_eq!(Some(u_table(&g, w)), u_table_from_roots(&g, w));
        }
    }

    #[test]
    fn example_entries() {
        let b = group(Family::B, 3);
        let t = wall_table(&ArtinWord::positive(&[0, 1]), &b).unwrap();
        let r1 = b.reflection_index(b.word_element(&[1])).unwrap();
        let r4 = b.reflection_index(b.word_element(&[0, 1, 0])).unwrap();
        assert_eq!(t.entry(r1), (1, r4));
        let h = group(Family::H3, 3);
        let t = wall_table(&ArtinWord::positive(&[2, 1, 0]), &h).unwrap();
        let s3 = h.reflection_index(h.generator(2)).unwrap();
        let s2 = h.reflection_index(h.generator(1)).unwrap();
        assert_eq!(t.entry(s3), (0, s2));
    }

    #[test]
    fn delta_offsets_are_all_one() {
        for (f, r) in [(Family::D, 5), (Family::B, 4), (Family::H3, 3)] {
            let g = group(f, r);
            let delta = crate::catalog::delta_word(&g);
            let t = wall_table(&delta, &g).unwrap();
            let d = g.longest_element();
            for k in 0..t.len() {
                let r = g.reflections()[k];
                assert_eq!(t.entry(k), (1, g.reflection_index(g.conj(d, r)).unwrap()));
            }
            assert_eq!(t.total_offset(), g.positive_count() as i64);
        }
    }

    #[test]
    fn equation_parsing() {
        let (c, r) = parse_equation("2a2+2a3-2b2-2b4=1", ['a', 'b'], 6).unwrap();
        assert_eq!(r, 1);
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(1, 2), (2, 2), (7, -2), (9, -2)]);
        assert!(parse_equation("a7=0", ['a', 'b'], 6).is_err());
    }

    fn recorded_report(case: WorkedExample, rank: usize, nu_name: &str) -> ObstructionReport {
        let g = group(case.family(), rank);
        let cat = Catalog::new(g.clone());
        let nu = cat.map_named(nu_name).unwrap();
        let probe_name = match case {
            WorkedExample::B => "probe_b",
            WorkedExample::D => "probe_d",
            _ => "probe_h3",
        };
        let CatalogEntry::Elements(probe) = cat.get(probe_name).unwrap() else { unreachable!() };
        let lifts = cat.taus(&probe_name.replace("probe", "tau")).unwrap();
        braid_obstruction(&nu, (1, 2), Some(&probe), Some(lifts)).unwrap()
    }

    #[test]
    fn b3_reproduces_reference_system() {
        let report = recorded_report(WorkedExample::B, 3, "nu1");
        assert!(report.is_contradiction());
        let (eqs, sum) = WorkedExample::B.reference_equations();
        for e in eqs {
            let (c, r) = parse_equation(e, ['a', 'b'], 6).unwrap();
            assert!(report.system.contains_row(&c, r), "{e}");
        }
        let (c, r) = parse_equation(sum, ['a', 'b'], 6).unwrap();
        let gf = report.system.gf2();
        let support: Vec<usize> = c.iter().filter(|(_, v)| *v % 2 != 0).map(|(&k, _)| k as usize).collect();
        assert!(support.is_empty() && r % 2 != 0);
        assert!(!gf.solve().is_consistent());
    }

    #[test]
    fn ordinary_map_is_never_obstructed() {
        for (f, r) in [(Family::B, 3), (Family::H3, 3), (Family::A, 3)] {
            let g = group(f, r);
            let mu = GeneratorMap::standard(&g);
            for a in 0..r {
                for b in a + 1..r {
                    assert!(!braid_obstruction(&mu, (a, b), None, None).unwrap().is_contradiction());
                }
            }
        }
    }
}
