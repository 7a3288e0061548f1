//! Words in the standard generators of an Artin group.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A word in `σ_1, …, σ_n`. Letters are `(generator, exponent)` with 0-based
/// generator indices and exponent `±1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    letters: Vec<(usize, i8)>,
}

impl ArtinWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<(usize, i8)>) -> Self {
        assert!(letters.iter().all(|&(_, e)| e == 1 || e == -1), "exponents must be ±1");
        Self { letters }
    }

    /// The positive word `σ_{i_1} ⋯ σ_{i_k}` for 0-based indices.
    pub fn positive(gens: &[usize]) -> Self {
        Self { letters: gens.iter().map(|&g| (g, 1)).collect() }
    }

    pub fn generator(i: usize) -> Self {
        Self::positive(&[i])
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &ArtinWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn power(&self, k: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Self { letters }
    }

    /// Sum of the exponents.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), Error> {
        match self.letters.iter().find(|&&(g, _)| g >= rank) {
            Some(&(g, _)) => Err(Error::IndexOutOfRange { index: g, rank }),
            None => Ok(()),
        }
    }
}

/// `[a, b⟩^m`: `(ab)^{m/2}` for even `m`, `(ab)^{(m−1)/2} a` for odd `m`.
pub fn alternating_word(a: usize, b: usize, m: usize) -> ArtinWord {
    ArtinWord::positive(&alternating(a, b, m))
}

/// The letters of `[a, b⟩^m` for any copyable alphabet.
pub fn alternating<T: Copy>(a: T, b: T, m: usize) -> Vec<T> {
    (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

/// Written as space-separated 1-based indices, negative for inverse letters,
/// e.g. `1 2 -1`.
impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            let sep = if k > 0 { " " } else { "" };
            let sign = if e < 0 { "-" } else { "" };
            write!(f, "{sep}{sign}{}", g + 1)?;
        }
        Ok(())
    }
}

impl FromStr for ArtinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::new());
        }
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let v: i64 = t.parse().map_err(|_| Error::PreconditionViolated(String::from(t)))?;
                if v == 0 {
                    return Err(Error::PreconditionViolated(String::from(t)));
                }
                Ok(((v.unsigned_abs() - 1) as usize, if v > 0 { 1 } else { -1 }))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { letters })
    }
}
