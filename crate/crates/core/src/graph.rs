//! Coxeter graphs of the irreducible spherical types.
//!
//! Node labels (1-based in prose, 0-based in code):
//!
//! * `A_n`: chain `1 – 2 – … – n`.
//! * `B_n`: `1 =4= 2 – 3 – … – n`.
//! * `D_n`: `1` and `2` both joined to `3`, then chain `3 – … – n`.
//! * `I2(m)`: one edge labelled `m`.
//! * `H3`, `H4`: `1 =5= 2 – 3 (– 4)`.
//! * `F4`: `1 – 2 =4= 3 – 4`.
//! * `E6`, `E7`, `E8`: chain `1 – 3 – 4 – 5 – …` with `2` attached to `4`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::I2 => "I2",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    /// Rank of an exceptional family, `None` for the infinite series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::I2 => Some(2),
            Family::H3 => Some(3),
            Family::H4 | Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::A | Family::B | Family::D => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "D" => Family::D,
            "I2" | "I" => Family::I2,
            "H3" => Family::H3,
            "H4" => Family::H4,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            _ => return Err(Error::UnknownFamily),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    family: Family,
    rank: usize,
    /// Edge label for `I2(m)`; zero otherwise.
    m: u32,
    matrix: Vec<Vec<u32>>,
}

impl CoxeterGraph {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The dihedral parameter of `I2(m)`, if this is such a graph.
    pub fn dihedral_m(&self) -> Option<u32> {
        (self.family == Family::I2).then_some(self.m)
    }

    /// `m_{i,j}` with 0-based node indices.
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// Nodes joined to `i` by an edge (`m ≥ 3`).
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| j != i && self.matrix[i][j] >= 3)
    }

    /// Short label such as `B4`, `I2(8)`, `E6`.
    pub fn label(&self) -> alloc::string::String {
        use alloc::format;
        match self.family {
            Family::I2 => format!("I2({})", self.m),
            Family::A | Family::B | Family::D => format!("{}{}", self.family, self.rank),
            f => format!("{f}"),
        }
    }

    /// Order of the Coxeter group, as the product of its degrees.
    pub fn group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::I2 => 2 * self.m as u128,
            Family::H3 => 120,
            Family::H4 => 14_400,
            Family::F4 => 1_152,
            Family::E6 => 51_840,
            Family::E7 => 2_903_040,
            Family::E8 => 696_729_600,
        }
    }

    /// Number of reflections (positive roots).
    pub fn reflection_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::I2 => self.m as usize,
            Family::H3 => 15,
            Family::H4 => 60,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }

    /// Builds a graph from an arbitrary symmetric matrix. Used for parabolic
    /// sub-diagrams and tests; no finiteness check is made.
    pub fn from_matrix(family: Family, matrix: Vec<Vec<u32>>) -> Result<Self, Error> {
        let rank = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank || row[i] != 1 {
                return Err(Error::InvalidMatrix);
            }
            for (j, &mij) in row.iter().enumerate() {
                if i != j && (mij < 2 || matrix[j][i] != mij) {
                    return Err(Error::InvalidMatrix);
                }
            }
        }
        let m = if family == Family::I2 { matrix[0][1] } else { 0 };
        Ok(Self { family, rank, m, matrix })
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Builds the Coxeter graph of the given type. `m` is only read for `I2`.
///
/// `D_3` is accepted and yields the `D` labelling of `A_3` (middle node `3`).
pub fn build_graph(family: Family, rank: usize, m: Option<u32>) -> Result<CoxeterGraph, Error> {
    if let Some(r) = family.fixed_rank() {
        if rank != r {
            return Err(Error::RankOutOfRange { family, rank });
        }
    }
    let min_rank = match family {
        Family::A => 1,
        Family::B => 2,
        Family::D => 3,
        _ => rank,
    };
    if rank < min_rank || rank > 16 {
        return Err(Error::RankOutOfRange { family, rank });
    }
    let mut mat = vec![vec![2u32; rank]; rank];
    for (i, row) in mat.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut edge = |i: usize, j: usize, label: u32| {
        mat[i][j] = label;
        mat[j][i] = label;
    };
    let mut dihedral = 0;
    match family {
        Family::A => (1..rank).for_each(|i| edge(i - 1, i, 3)),
        Family::B => {
            edge(0, 1, 4);
            (2..rank).for_each(|i| edge(i - 1, i, 3));
        }
        Family::D => {
            edge(0, 2, 3);
            edge(1, 2, 3);
            (3..rank).for_each(|i| edge(i - 1, i, 3));
        }
        Family::I2 => {
            let m = m.ok_or(Error::RankOutOfRange { family, rank })?;
            if m < 3 {
                return Err(Error::RankOutOfRange { family, rank });
            }
            dihedral = m;
            edge(0, 1, m);
        }
        Family::H3 | Family::H4 => {
            edge(0, 1, 5);
            (2..rank).for_each(|i| edge(i - 1, i, 3));
        }
        Family::F4 => {
            edge(0, 1, 3);
            edge(1, 2, 4);
            edge(2, 3, 3);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            edge(0, 2, 3);
            edge(1, 3, 3);
            (3..rank).for_each(|i| edge(i - 1, i, 3));
        }
    }
    Ok(CoxeterGraph { family, rank, m: dihedral, matrix: mat })
}
