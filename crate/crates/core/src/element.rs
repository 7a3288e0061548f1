//! Backend-specific group element values.
//!
//! Products are compositions of maps: `x·y` applies `y` first.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Largest number of points supported by [`SignedPerm`].
pub const MAX_SIGNED_POINTS: usize = 12;

/// Which realisation a group's elements use.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Permutations of an exactly constructed root system.
    RootPerm,
    /// Rotation index mod `m` and a flip bit, for `I2(m)`.
    Dihedral,
    /// `(Z/2)^n ⋊ Sym_n`, for types `A`, `B` and `D`.
    SignedPerm,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::RootPerm => "root-perm",
            Backend::Dihedral => "dihedral",
            Backend::SignedPerm => "signed-perm",
        }
    }
}

/// A permutation of the roots commuting with negation, stored as the images
/// of the positive roots. Image values `≥ N` denote negative roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootPerm {
    images: Box<[u8]>,
}

impl RootPerm {
    pub fn identity(positive_count: usize) -> Self {
        Self { images: (0..positive_count as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        Self { images: images.into_boxed_slice() }
    }

    pub fn positive_count(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of an arbitrary root index.
    pub fn apply(&self, r: usize) -> usize {
        let n = self.images.len();
        if r < n {
            self.images[r] as usize
        } else {
            let img = self.images[r - n] as usize;
            if img < n {
                img + n
            } else {
                img - n
            }
        }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self { images: rhs.images.iter().map(|&r| self.apply(r as usize) as u8).collect() }
    }

    pub fn inverse(&self) -> Self {
        let n = self.images.len();
        let mut out = alloc::vec![0u8; n];
        for (p, &img) in self.images.iter().enumerate() {
            let img = img as usize;
            if img < n {
                out[img] = p as u8;
            } else {
                out[img - n] = (p + n) as u8;
            }
        }
        Self { images: out.into_boxed_slice() }
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self) -> usize {
        let n = self.images.len();
        self.images.iter().filter(|&&r| r as usize >= n).count()
    }
}

/// `r^k · f^flip` in the dihedral group of order `2m`, with `s_1 = f` and
/// `s_2 = r·f`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dihedral {
    pub m: u32,
    pub k: u32,
    pub flip: bool,
}

impl Dihedral {
    pub fn identity(m: u32) -> Self {
        Self { m, k: 0, flip: false }
    }

    pub fn generator(m: u32, i: usize) -> Self {
        Self { m, k: if i == 0 { 0 } else { 1 }, flip: true }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let k2 = if self.flip { (self.m - rhs.k) % self.m } else { rhs.k };
        Self { m: self.m, k: (self.k + k2) % self.m, flip: self.flip ^ rhs.flip }
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            Self { m: self.m, k: (self.m - self.k) % self.m, flip: false }
        }
    }

    /// Closed-form word length with respect to `{s_1, s_2}`.
    pub fn length(&self) -> usize {
        let (m, k) = (self.m as usize, self.k as usize);
        if self.flip {
            // r^k f = (s_2 s_1)^{k-1} s_2 = (s_1 s_2)^{m-k} s_1
            if k == 0 {
                1
            } else {
                (2 * k - 1).min(2 * (m - k) + 1)
            }
        } else {
            2 * k.min(m - k)
        }
    }
}

/// `v·π` with `π ∈ Sym_n` and `v ∈ (Z/2)^n`, acting on signed unit vectors by
/// `e_j ↦ (−1)^{v_{π(j)}} e_{π(j)}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    n: u8,
    perm: [u8; MAX_SIGNED_POINTS],
    signs: u16,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_SIGNED_POINTS);
        let mut perm = [0u8; MAX_SIGNED_POINTS];
        for (j, p) in perm.iter_mut().enumerate() {
            *p = j as u8;
        }
        Self { n: n as u8, perm, signs: 0 }
    }

    /// Builds `v·π` from a 0-based image list `π` and sign bits `v`.
    pub fn new(perm: &[usize], signs: u16) -> Result<Self, Error> {
        let n = perm.len();
        if n > MAX_SIGNED_POINTS {
            return Err(Error::InvalidPermutation(alloc::format!("{n} points")));
        }
        let mut out = Self::identity(n);
        let mut seen = 0u32;
        for (j, &p) in perm.iter().enumerate() {
            if p >= n || seen & (1 << p) != 0 {
                return Err(Error::InvalidPermutation(alloc::format!("{perm:?}")));
            }
            seen |= 1 << p;
            out.perm[j] = p as u8;
        }
        out.signs = signs & ((1u32 << n) - 1) as u16;
        Ok(out)
    }

    /// A pure sign change `v` (identity permutation).
    pub fn flips(n: usize, signs: u16) -> Self {
        let mut out = Self::identity(n);
        out.signs = signs & ((1u32 << n) - 1) as u16;
        out
    }

    /// The transposition of 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut out = Self::identity(n);
        out.perm.swap(a, b);
        out
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// The underlying permutation `π` as 0-based images.
    pub fn permutation(&self) -> &[u8] {
        &self.perm[..self.n as usize]
    }

    /// The bit vector `v`, bit `j` for coordinate `j`.
    pub fn signs(&self) -> u16 {
        self.signs
    }

    pub fn is_pure_flip(&self) -> bool {
        self.permutation().iter().enumerate().all(|(j, &p)| p as usize == j)
    }

    /// `(v·π)(w·ρ) = (v + π·w)·(πρ)` where `(π·w)_{π(j)} = w_j`.
    pub fn compose(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n as usize;
        let mut out = Self::identity(n);
        let mut moved = 0u16;
        for j in 0..n {
            out.perm[j] = self.perm[rhs.perm[j] as usize];
            if rhs.signs & (1 << j) != 0 {
                moved |= 1 << self.perm[j];
            }
        }
        out.signs = self.signs ^ moved;
        out
    }

    pub fn inverse(&self) -> Self {
        // (v·π)^{-1} = π^{-1} v = (π^{-1}·v)·π^{-1}
        let n = self.n as usize;
        let mut out = Self::identity(n);
        let mut signs = 0u16;
        for j in 0..n {
            let p = self.perm[j] as usize;
            out.perm[p] = j as u8;
            if self.signs & (1 << p) != 0 {
                signs |= 1 << j;
            }
        }
        out.signs = signs;
        out
    }

    pub fn key(&self) -> u64 {
        let mut key = self.signs as u64;
        for j in 0..self.n as usize {
            key |= (self.perm[j] as u64) << (16 + 4 * j);
        }
        key
    }
}

/// A group element tagged with its backend.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    RootPerm(RootPerm),
    Dihedral(Dihedral),
    SignedPerm(SignedPerm),
}

impl GroupElement {
    pub fn backend(&self) -> Backend {
        match self {
            GroupElement::RootPerm(_) => Backend::RootPerm,
            GroupElement::Dihedral(_) => Backend::Dihedral,
            GroupElement::SignedPerm(_) => Backend::SignedPerm,
        }
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(match (self, rhs) {
            (GroupElement::RootPerm(a), GroupElement::RootPerm(b))
                if a.positive_count() == b.positive_count() =>
            {
                GroupElement::RootPerm(a.compose(b))
            }
            (GroupElement::Dihedral(a), GroupElement::Dihedral(b)) if a.m == b.m => {
                GroupElement::Dihedral(a.compose(b))
            }
            (GroupElement::SignedPerm(a), GroupElement::SignedPerm(b)) if a.n == b.n => {
                GroupElement::SignedPerm(a.compose(b))
            }
            _ => return Err(Error::BackendMismatch),
        })
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::RootPerm(a) => GroupElement::RootPerm(a.inverse()),
            GroupElement::Dihedral(a) => GroupElement::Dihedral(a.inverse()),
            GroupElement::SignedPerm(a) => GroupElement::SignedPerm(a.inverse()),
        }
    }

    /// `g·x·g⁻¹`.
    pub fn conjugate(g: &Self, x: &Self) -> Result<Self, Error> {
        g.multiply(x)?.multiply(&g.inverse())
    }

    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::RootPerm(a) => GroupElement::RootPerm(RootPerm::identity(a.positive_count())),
            GroupElement::Dihedral(a) => GroupElement::Dihedral(Dihedral::identity(a.m)),
            GroupElement::SignedPerm(a) => GroupElement::SignedPerm(SignedPerm::identity(a.degree())),
        }
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn order(&self) -> u32 {
        let id = self.identity_like();
        let mut power = self.clone();
        let mut k = 1;
        while power != id {
            power = power.multiply(self).expect("same backend");
            k += 1;
        }
        k
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.n as usize {
            let bit = (self.signs >> j) & 1;
            write!(f, "{}{bit}", if j > 0 { "," } else { "" })?;
        }
        write!(f, "]·(")?;
        for j in 0..self.n as usize {
            write!(f, "{}{}", if j > 0 { " " } else { "" }, self.perm[j] + 1)?;
        }
        write!(f, ")")
    }
}
