//! Named maps, automorphisms, words and reflection lists.
//!
//! Generator indices in the word literals below are 1-based, matching the
//! usual node labels; they are converted on use.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{build_graph, CoxeterGraph, Family};
use crate::group::{build_group, Elem, FiniteCoxeterGroup};
use crate::maps::{AutLabel, Automorphism, GeneratorMap};
use crate::signed::{parse_cycles, SignedModel};
use crate::words::{alternating_word, ArtinWord};

/// Every name accepted by [`Catalog::get`].
pub const NAMES: &[&str] = &[
    "standard",
    "sign",
    "eta",
    "zeta4_1",
    "zeta4_2",
    "zeta6",
    "nu1",
    "nu2",
    "artin_exc1",
    "artin_exc2",
    "alpha0",
    "alpha1",
    "alpha_h3",
    "alpha_sym6",
    "r_sym6",
    "psi0",
    "psi1",
    "delta_word",
    "c_elements",
    "u_elements",
    "probe_b",
    "probe_d",
    "probe_h3",
    "tau_b",
    "tau_d",
    "tau_h3",
];

/// Words in `s_2, …, s_6` whose images in `Sym_6` are `ζ_6(σ_1), …, ζ_6(σ_6)`.
pub const SYM6_R_WORDS: [&[usize]; 6] = [
    &[],
    &[2, 4, 6],
    &[2, 3, 2, 5, 4, 3, 2, 6, 5],
    &[3, 2, 4, 3, 6],
    &[2, 5, 4, 6, 5],
    &[2, 3, 2, 4, 3, 2, 6],
];

const ZETA6_B: [&str; 6] = ["1", "(1,2)(3,4)(5,6)", "(1,5)(2,3)(4,6)", "(1,3)(2,4)(5,6)", "(1,2)(3,5)(4,6)", "(1,4)(2,3)(5,6)"];
const ZETA6_D: [&str; 6] = [
    "(1,2)(3,4)(5,6)",
    "(1,2)(3,4)(5,6)",
    "(2,3)(1,5)(4,6)",
    "(3,1)(2,4)(5,6)",
    "(1,2)(3,5)(4,6)",
    "(2,3)(1,4)(5,6)",
];
const ZETA4_B: [[&str; 4]; 2] = [["1", "(1,2,3,4)", "(2,1,3,4)", "(1,2,3,4)"], ["1", "(1,2,3,4)", "(2,1,3,4)", "(4,3,2,1)"]];
const ZETA4_D: [[&str; 4]; 2] =
    [["(1,2,3,4)", "(1,2,3,4)", "(2,1,3,4)", "(1,2,3,4)"], ["(1,2,3,4)", "(1,2,3,4)", "(2,1,3,4)", "(4,3,2,1)"]];
const ARTIN_EXCEPTIONS: [[&str; 3]; 2] = [["(1,2,3,4)", "(2,1,3,4)", "(1,2,3,4)"], ["(1,2,3,4)", "(2,1,3,4)", "(4,3,2,1)"]];

const H3_NU1: [&[usize]; 3] = [&[1, 2, 3], &[2, 1, 2, 3, 2], &[3, 2, 1]];
const H3_NU2: [&[usize]; 3] = [
    &[1, 2, 1, 2, 3, 2, 1, 2, 3],
    &[2, 1, 2, 3, 2, 1, 2, 1, 3, 2, 1, 2, 3],
    &[2, 3, 2, 1, 2, 1, 3, 2, 1],
];
const H3_ALPHA: [&[usize]; 3] = [&[1, 2, 3, 2, 1], &[2, 1, 2, 3, 2, 1, 2], &[1, 2, 1, 2, 1]];

const PROBE_B: [&[usize]; 6] = [&[2], &[2, 3, 2], &[3], &[1, 2, 1], &[1, 2, 3, 2, 1], &[2, 1, 2, 3, 2, 1, 2]];
const PROBE_D: [&[usize]; 6] = [&[1], &[3, 1, 3], &[2, 3, 1, 3, 2], &[3], &[2, 3, 2], &[2]];
const PROBE_H3: [&[usize]; 15] = [
    &[1],
    &[2],
    &[3],
    &[1, 2, 1],
    &[2, 3, 2],
    &[2, 1, 2],
    &[1, 2, 3, 2, 1],
    &[3, 2, 1, 2, 3],
    &[1, 2, 1, 2, 1],
    &[1, 3, 2, 1, 2, 3, 1],
    &[2, 1, 2, 3, 2, 1, 2],
    &[2, 1, 3, 2, 1, 2, 3, 1, 2],
    &[1, 2, 1, 2, 3, 2, 1, 2, 1],
    &[1, 2, 1, 3, 2, 1, 2, 3, 1, 2, 1],
    &[2, 1, 2, 1, 3, 2, 1, 2, 3, 1, 2, 1, 2],
];

/// An entry of the catalog.
#[derive(Clone, Debug)]
pub enum CatalogEntry {
    Map(GeneratorMap),
    Automorphism(Automorphism),
    Word(ArtinWord),
    /// One word per generator, defining an endomorphism of the Artin group.
    Endomorphism(Vec<ArtinWord>),
    Elements(Vec<Elem>),
}

fn zero_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|&i| i - 1).collect()
}

/// Element `s_{i_1} ⋯ s_{i_k}` from a 1-based word.
pub fn word_element(group: &FiniteCoxeterGroup, word: &[usize]) -> Elem {
    group.word_element(&zero_based(word))
}

/// Positive Artin word from 1-based indices.
pub fn artin(word: &[usize]) -> ArtinWord {
    ArtinWord::positive(&zero_based(word))
}

/// `c_1 = s_1`, `c_i = s_i ⋯ s_2 s_1 s_2 ⋯ s_i` (1-based `i`), in type `B`.
pub fn c_element(group: &FiniteCoxeterGroup, i: usize) -> Elem {
    let mut word: Vec<usize> = (2..=i).rev().collect();
    word.push(1);
    word.extend(2..=i);
    word_element(group, &word)
}

/// `u_1 = δ`, `u_i = s_i ⋯ s_2 u_1 s_2 ⋯ s_i` (1-based `i`), in type `D`.
pub fn u_element(group: &FiniteCoxeterGroup, i: usize) -> Elem {
    let left = word_element(group, &(2..=i).rev().collect::<Vec<_>>());
    let right = word_element(group, &(2..=i).collect::<Vec<_>>());
    group.product(&[left, group.longest_element(), right])
}

/// The positive lift `Δ` of the longest element: `[σ_1, σ_2⟩^m` for `I2(m)`,
/// `(σ_1 ⋯ σ_n)^n` for `B_n`, `(σ_1σ_2)(σ_3σ_1σ_2σ_3) ⋯ (σ_n ⋯ σ_3σ_1σ_2σ_3 ⋯ σ_n)`
/// for `D_n`, and the least reduced word of the longest element otherwise.
pub fn delta_word(group: &FiniteCoxeterGroup) -> ArtinWord {
    let graph = group.graph();
    let n = graph.rank();
    match graph.family() {
        Family::I2 => alternating_word(0, 1, graph.dihedral_m().unwrap_or(2) as usize),
        Family::B => ArtinWord::positive(&(0..n).collect::<Vec<_>>()).power(n),
        Family::D => {
            let mut word = vec![1, 2];
            for k in 3..=n {
                word.extend((3..=k).rev());
                word.extend([1, 2]);
                word.extend(3..=k);
            }
            artin(&word)
        }
        _ => ArtinWord::positive(&group.reduced_word(group.longest_element())),
    }
}

fn parse_images(model: &SignedModel, cycles: &[&str]) -> Result<Vec<Elem>, Error> {
    cycles.iter().map(|c| model.permutation_element(&parse_cycles(c, model.degree())?)).collect()
}

fn sym_group(n: usize) -> Result<Arc<FiniteCoxeterGroup>, Error> {
    let graph = build_graph(Family::A, n - 1, None)?;
    Ok(Arc::new(build_group(&graph, crate::group::DEFAULT_ELEMENT_LIMIT)?))
}

/// Named objects for one Coxeter group `W` and, where needed, `Sym_n`.
pub struct Catalog {
    group: Arc<FiniteCoxeterGroup>,
    sym: Option<Arc<FiniteCoxeterGroup>>,
}

impl Catalog {
    /// For types `B_n` and `D_n` with `n ≤ 8`, `Sym_n` (as `A_{n−1}`) is built
    /// once here so that every map into it shares one target.
    pub fn new(group: Arc<FiniteCoxeterGroup>) -> Self {
        let n = group.rank();
        let sym = match group.graph().family() {
            Family::B | Family::D if n <= 8 => sym_group(n).ok(),
            _ => None,
        };
        Self { group, sym }
    }

    pub fn with_sym(group: Arc<FiniteCoxeterGroup>, sym: Arc<FiniteCoxeterGroup>) -> Self {
        Self { group, sym: Some(sym) }
    }

    pub fn group(&self) -> &Arc<FiniteCoxeterGroup> {
        &self.group
    }

    fn graph(&self) -> &CoxeterGraph {
        self.group.graph()
    }

    fn family(&self) -> Family {
        self.graph().family()
    }

    fn rank(&self) -> usize {
        self.graph().rank()
    }

    fn mismatch(&self, name: &str) -> Error {
        Error::TypeMismatch(alloc::format!("{name} for {}", self.graph().label()))
    }

    /// `Sym_n` for the natural projection of `B_n`/`D_n`.
    pub fn sym(&self) -> Result<Arc<FiniteCoxeterGroup>, Error> {
        let n = self.rank();
        if let Some(s) = &self.sym {
            if s.graph().family() == Family::A && s.rank() + 1 == n {
                return Ok(s.clone());
            }
            return Err(Error::TypeMismatch("Sym_n target has the wrong degree".into()));
        }
        sym_group(n)
    }

    fn w(&self, word: &[usize]) -> Elem {
        word_element(&self.group, word)
    }

    fn map(&self, images: Vec<Elem>) -> Result<GeneratorMap, Error> {
        GeneratorMap::new(self.graph().clone(), self.group.clone(), images)
    }

    /// Names valid for this type.
    pub fn names(&self) -> Vec<&'static str> {
        NAMES.iter().copied().filter(|n| self.get(n).is_ok()).collect()
    }

    pub fn get(&self, name: &str) -> Result<CatalogEntry, Error> {
        let family = self.family();
        let n = self.rank();
        let g = &self.group;
        Ok(match name {
            "standard" => CatalogEntry::Map(GeneratorMap::standard(g)),
            "sign" => {
                let a1 = Arc::new(build_group(&build_graph(Family::A, 1, None)?, 2)?);
                let s = a1.generator(0);
                CatalogEntry::Map(GeneratorMap::new(self.graph().clone(), a1, vec![s; n])?)
            }
            "eta" | "zeta4_1" | "zeta4_2" | "zeta6" => CatalogEntry::Map(self.sym_map(name)?),
            "nu1" | "nu2" => CatalogEntry::Map(self.nu(name)?),
            "artin_exc1" | "artin_exc2" => {
                if family != Family::A || n != 3 {
                    return Err(self.mismatch(name));
                }
                let model = SignedModel::new(g)?;
                let k = if name == "artin_exc1" { 0 } else { 1 };
                CatalogEntry::Map(self.map(parse_images(&model, &ARTIN_EXCEPTIONS[k])?)?)
            }
            "alpha0" | "alpha1" | "alpha_h3" | "alpha_sym6" => CatalogEntry::Automorphism(self.automorphism(name)?),
            "r_sym6" => {
                if family != Family::A || n != 5 {
                    return Err(self.mismatch(name));
                }
                CatalogEntry::Elements(SYM6_R_WORDS.iter().map(|w| self.w(&sym_word(w))).collect())
            }
            "psi0" | "psi1" => {
                if family != Family::B || (name == "psi1" && n % 2 == 1) {
                    return Err(self.mismatch(name));
                }
                let delta = delta_word(g);
                let words = (0..n)
                    .map(|i| {
                        let prefix = if (name == "psi0") == (i > 0) { delta.clone() } else { ArtinWord::new() };
                        prefix.concat(&ArtinWord::generator(i))
                    })
                    .collect();
                CatalogEntry::Endomorphism(words)
            }
            "delta_word" => CatalogEntry::Word(delta_word(g)),
            "c_elements" => {
                if family != Family::B {
                    return Err(self.mismatch(name));
                }
                CatalogEntry::Elements((1..=n).map(|i| c_element(g, i)).collect())
            }
            "u_elements" => {
                if family != Family::D || n.is_multiple_of(2) {
                    return Err(self.mismatch(name));
                }
                CatalogEntry::Elements((1..=n).map(|i| u_element(g, i)).collect())
            }
            "probe_b" | "probe_d" | "probe_h3" => CatalogEntry::Elements(self.probe(name)?),
            "tau_b" | "tau_d" | "tau_h3" => {
                let (t2, t3) = self.taus(name)?;
                CatalogEntry::Endomorphism(vec![t2, t3])
            }
            _ => return Err(Error::UnknownName(name.to_string())),
        })
    }

    pub fn map_named(&self, name: &str) -> Result<GeneratorMap, Error> {
        match self.get(name)? {
            CatalogEntry::Map(m) => Ok(m),
            _ => Err(Error::TypeMismatch(alloc::format!("{name} is not a map"))),
        }
    }

    pub fn automorphism_named(&self, name: &str) -> Result<Automorphism, Error> {
        match self.get(name)? {
            CatalogEntry::Automorphism(a) => Ok(a),
            _ => Err(Error::TypeMismatch(alloc::format!("{name} is not an automorphism"))),
        }
    }

    fn sym_map(&self, name: &str) -> Result<GeneratorMap, Error> {
        let family = self.family();
        let n = self.rank();
        if !matches!(family, Family::B | Family::D) {
            return Err(self.mismatch(name));
        }
        let sym = self.sym()?;
        let model = SignedModel::new(&sym)?;
        let cycles: Vec<String> = match (name, family, n) {
            ("eta", Family::B, _) => {
                let mut v = vec![String::from("1")];
                v.extend((2..=n).map(|i| alloc::format!("({},{})", i - 1, i)));
                v
            }
            ("eta", Family::D, _) => {
                let mut v = vec![String::from("(1,2)")];
                v.extend((2..=n).map(|i| alloc::format!("({},{})", (i - 1).max(1), i.max(2))));
                v
            }
            ("zeta4_1", Family::B, 4) => ZETA4_B[0].iter().map(|s| s.to_string()).collect(),
            ("zeta4_2", Family::B, 4) => ZETA4_B[1].iter().map(|s| s.to_string()).collect(),
            ("zeta4_1", Family::D, 4) => ZETA4_D[0].iter().map(|s| s.to_string()).collect(),
            ("zeta4_2", Family::D, 4) => ZETA4_D[1].iter().map(|s| s.to_string()).collect(),
            ("zeta6", Family::B, 6) => ZETA6_B.iter().map(|s| s.to_string()).collect(),
            ("zeta6", Family::D, 6) => ZETA6_D.iter().map(|s| s.to_string()).collect(),
            _ => return Err(self.mismatch(name)),
        };
        let refs: Vec<&str> = cycles.iter().map(|s| s.as_str()).collect();
        GeneratorMap::new(self.graph().clone(), sym, parse_images(&model, &refs)?)
    }

    fn nu(&self, name: &str) -> Result<GeneratorMap, Error> {
        let g = &self.group;
        let n = self.rank();
        let second = name == "nu2";
        let images = match self.family() {
            Family::I2 => {
                let m = self.graph().dihedral_m().unwrap_or(0);
                if !m.is_multiple_of(4) {
                    return Err(self.mismatch(name));
                }
                if second {
                    vec![self.w(&[1, 2]), self.w(&[2])]
                } else {
                    vec![self.w(&[1]), self.w(&[2, 1])]
                }
            }
            Family::B => {
                if second && n.is_multiple_of(2) {
                    return Err(self.mismatch(name));
                }
                let first = if second { g.longest_element() } else { c_element(g, 1) };
                let mut v = vec![first];
                v.extend((2..=n).map(|i| g.mul(c_element(g, i - 1), g.generator(i - 1))));
                v
            }
            Family::D => {
                if n.is_multiple_of(2) {
                    return Err(self.mismatch(name));
                }
                let delta = g.longest_element();
                let s2 = g.generator(1);
                let first = if second { g.mul(delta, s2) } else { g.mul(s2, delta) };
                let mut v = vec![first];
                v.extend((2..=n).map(|i| g.mul(u_element(g, i), g.generator(i - 1))));
                v
            }
            Family::H3 => {
                let words = if second { H3_NU2 } else { H3_NU1 };
                words.iter().map(|w| self.w(w)).collect()
            }
            _ => return Err(self.mismatch(name)),
        };
        self.map(images)
    }

    fn automorphism(&self, name: &str) -> Result<Automorphism, Error> {
        let g = &self.group;
        let n = self.rank();
        let family = self.family();
        let images: Vec<Elem> = match name {
            "alpha0" if family == Family::B => {
                let d = g.longest_element();
                (0..n).map(|i| if i == 0 { g.generator(0) } else { g.mul(d, g.generator(i)) }).collect()
            }
            "alpha1" if family == Family::B && n.is_multiple_of(2) => {
                let d = g.longest_element();
                (0..n).map(|i| if i == 0 { g.mul(d, g.generator(0)) } else { g.generator(i) }).collect()
            }
            // w0 is central and even here, so every generator can be twisted.
            "alpha1" if family == Family::D && n.is_multiple_of(2) => {
                let d = g.longest_element();
                (0..n).map(|i| g.mul(d, g.generator(i))).collect()
            }
            "alpha_h3" if family == Family::H3 => H3_ALPHA.iter().map(|w| self.w(w)).collect(),
            "alpha_sym6" if family == Family::A && n == 5 => {
                SYM6_R_WORDS[1..].iter().map(|w| self.w(&sym_word(w))).collect()
            }
            _ => return Err(self.mismatch(name)),
        };
        Automorphism::from_generator_images(g, images, AutLabel::Named(name.to_string()))
    }

    fn probe(&self, name: &str) -> Result<Vec<Elem>, Error> {
        let words: &[&[usize]] = match (name, self.family()) {
            ("probe_b", Family::B) if self.rank() >= 3 => &PROBE_B,
            ("probe_d", Family::D) if self.rank() >= 3 => &PROBE_D,
            ("probe_h3", Family::H3) => &PROBE_H3,
            _ => return Err(self.mismatch(name)),
        };
        Ok(words.iter().map(|w| self.w(w)).collect())
    }

    /// Lifts `(τ_2, τ_3)` of `ν(σ_2)`, `ν(σ_3)` used with the probe lists.
    pub fn taus(&self, name: &str) -> Result<(ArtinWord, ArtinWord), Error> {
        Ok(match (name, self.family()) {
            ("tau_b", Family::B) if self.rank() >= 3 => (artin(&[1, 2]), artin(&[2, 1, 2, 3])),
            ("tau_d", Family::D) if self.rank() >= 3 => {
                let delta = delta_word(&self.group);
                let t2 = artin(&[2]).concat(&delta);
                let t3 = artin(&[3, 2]).concat(&delta).concat(&artin(&[2]));
                (t2, t3)
            }
            ("tau_h3", Family::H3) => (artin(&[2, 1, 2, 3, 2]), artin(&[3, 2, 1])),
            _ => return Err(self.mismatch(name)),
        })
    }
}

/// Rewrites a word in `s_2, …, s_6` as a 1-based word in the generators of `A_5`.
fn sym_word(word: &[usize]) -> Vec<usize> {
    word.iter().map(|&i| i - 1).collect()
}

/// The non-inner automorphisms declared to generate `Aut(W)` together with
/// the inner ones: `α_0` (and `α_1` for even rank) in type `B`, `α_1` and the
/// diagram automorphisms in type `D` of even rank, the explicit
/// outer automorphism for `H_3`, every automorphism for `I2(m)`, and the
/// diagram automorphisms in all other types. For `H_4`, `F_4` and `E_n` this
/// list is not known to be complete.
pub fn aut_generators(group: &Arc<FiniteCoxeterGroup>) -> Result<Vec<Automorphism>, Error> {
    let catalog = Catalog::new(group.clone());
    let family = group.graph().family();
    let n = group.rank();
    let mut out = Vec::new();
    match family {
        Family::B => {
            out.push(catalog.automorphism("alpha0")?);
            if n.is_multiple_of(2) {
                out.push(catalog.automorphism("alpha1")?);
            }
        }
        Family::D if n.is_multiple_of(2) => out.push(catalog.automorphism("alpha1")?),
        Family::H3 => out.push(catalog.automorphism("alpha_h3")?),
        Family::I2 => return crate::maps::all_automorphisms(group),
        _ => {}
    }
    if family != Family::D || n.is_multiple_of(2) {
        for perm in crate::maps::diagram_automorphisms(group.graph()) {
            out.push(crate::maps::diagram_automorphism(group, &perm)?);
        }
    }
    Ok(out)
}
