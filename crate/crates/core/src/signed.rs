//! The semidirect model `(Z/2)^n ⋊ Sym_n` of types `A`, `B` and `D`.
//!
//! Every element of an enumerated group of these types is paired with its
//! signed permutation, independently of the group's own backend. Type
//! `A_{n-1}` groups serve as `Sym_n` and carry no signs.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::element::SignedPerm;
use crate::error::Error;
use crate::graph::Family;
use crate::group::{signed_generators, Elem, FiniteCoxeterGroup};

pub struct SignedModel {
    family: Family,
    degree: usize,
    values: Vec<SignedPerm>,
    lookup: HashMap<u64, u32>,
}

impl SignedModel {
    pub fn new(group: &FiniteCoxeterGroup) -> Result<Self, Error> {
        let gens = signed_generators(group.graph())?;
        let degree = gens[0].degree();
        let mut values = vec![SignedPerm::identity(degree); group.order()];
        for x in group.elements().skip(1) {
            // Elements are numbered by length, so a right descent is already filled in.
            let (i, y) = group
                .generators()
                .iter()
                .enumerate()
                .map(|(i, &s)| (i, group.mul(x, s)))
                .find(|&(_, y)| group.length(y) < group.length(x))
                .expect("non-identity element has a right descent");
            values[x.index()] = values[y.index()].compose(&gens[i]);
        }
        let lookup: HashMap<u64, u32> = values.iter().enumerate().map(|(k, v)| (v.key(), k as u32)).collect();
        if lookup.len() != values.len() {
            return Err(Error::PreconditionViolated("signed model is not faithful".into()));
        }
        Ok(Self { family: group.graph().family(), degree, values, lookup })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn value(&self, x: Elem) -> SignedPerm {
        self.values[x.index()]
    }

    pub fn element(&self, v: &SignedPerm) -> Option<Elem> {
        if v.degree() != self.degree {
            return None;
        }
        self.lookup.get(&v.key()).map(|&x| Elem(x))
    }

    /// `p(x)`: the permutation part, as 0-based images.
    pub fn project_p(&self, x: Elem) -> Vec<usize> {
        self.values[x.index()].permutation().iter().map(|&p| p as usize).collect()
    }

    /// `[a_1, …, a_n]` with `x = c_1^{a_1} ⋯ c_n^{a_n}`.
    pub fn c_coordinates(&self, x: Elem) -> Result<Vec<u8>, Error> {
        let v = self.values[x.index()];
        if !v.is_pure_flip() {
            return Err(Error::NotInKernel);
        }
        Ok((0..self.degree).map(|j| ((v.signs() >> j) & 1) as u8).collect())
    }

    /// Kernel elements of `p`: all sign vectors for `B`, even-weight ones for `D`.
    pub fn kernel(&self) -> Vec<Elem> {
        let mut out: Vec<Elem> = (0u32..1 << self.degree)
            .filter_map(|signs| self.element(&SignedPerm::flips(self.degree, signs as u16)))
            .collect();
        out.sort();
        out
    }

    /// The pure permutation with 0-based images `perm`.
    pub fn permutation_element(&self, perm: &[usize]) -> Result<Elem, Error> {
        let v = SignedPerm::new(perm, 0)?;
        self.element(&v).ok_or_else(|| Error::InvalidPermutation(alloc::format!("{perm:?}")))
    }

    /// The kernel element `c_1^{a_1} ⋯ c_n^{a_n}`.
    pub fn flip_element(&self, bits: &[u8]) -> Result<Elem, Error> {
        let signs = bits.iter().enumerate().fold(0u16, |acc, (j, &b)| acc | (((b & 1) as u16) << j));
        self.element(&SignedPerm::flips(self.degree, signs)).ok_or(Error::NotInKernel)
    }
}

/// Maps every element of `W(D_n)` to its image in `W(B_n)`.
pub fn embed_d_into_b(d: &SignedModel, b: &SignedModel) -> Result<Vec<Elem>, Error> {
    if d.family != Family::D || b.family != Family::B || d.degree != b.degree {
        return Err(Error::TypeMismatch("embedding needs D_n and B_n".into()));
    }
    d.values
        .iter()
        .map(|v| b.element(v).ok_or(Error::PreconditionViolated("image outside B_n".into())))
        .collect()
}

/// Parses cycle notation such as `(1,2,3,4)` or `(1,2)(3,4)` into 0-based
/// images on `n` points; `1` or the empty string is the identity. The cycle
/// `(a,b,c)` sends `a ↦ b ↦ c ↦ a`.
pub fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>, Error> {
    let mut perm: Vec<usize> = (0..n).collect();
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" || trimmed == "()" {
        return Ok(perm);
    }
    let bad = || Error::InvalidPermutation(String::from(text));
    let mut rest = trimmed;
    let mut moved = vec![false; n];
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let points = rest[..close]
            .split(',')
            .map(|p| p.trim().parse::<usize>().ok().filter(|&k| k >= 1 && k <= n).map(|k| k - 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        for (k, &p) in points.iter().enumerate() {
            if moved[p] {
                return Err(bad());
            }
            moved[p] = true;
            perm[p] = points[(k + 1) % points.len()];
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(perm)
}
