//! Linear algebra over GF(2) with bit-packed rows.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(bits: usize) -> Self {
        BitRow(vec![0; bits.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| 64 * k + b)
        })
    }
}

/// A system `A x = b` over GF(2).
#[derive(Clone, Debug, Default)]
pub struct Gf2System {
    columns: usize,
    rows: Vec<(BitRow, bool)>,
}

/// Result of eliminating a [`Gf2System`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Outcome {
    pub rank: usize,
    /// Indices of rows summing to `0 = 1`, when the system is inconsistent.
    pub certificate: Option<Vec<usize>>,
    /// A particular solution (free variables zero), when consistent.
    pub solution: Option<Vec<bool>>,
}

impl Gf2Outcome {
    pub fn is_consistent(&self) -> bool {
        self.certificate.is_none()
    }
}

impl Gf2System {
    pub fn new(columns: usize) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds the equation `Σ_{j ∈ support} x_j = rhs`. Repeated indices cancel.
    pub fn push(&mut self, support: &[usize], rhs: bool) {
        let mut row = BitRow::zeros(self.columns);
        for &j in support {
            assert!(j < self.columns, "column {j} out of range");
            row.flip(j);
        }
        self.rows.push((row, rhs));
    }

    /// Adds an equation from integer coefficients reduced mod 2.
    pub fn push_integer(&mut self, coefficients: &[i64], rhs: i64) {
        let support: Vec<usize> = coefficients.iter().enumerate().filter(|(_, &c)| c % 2 != 0).map(|(j, _)| j).collect();
        self.push(&support, rhs % 2 != 0);
    }

    pub fn solve(&self) -> Gf2Outcome {
        let n = self.rows.len();
        // Each working row carries which original rows it is the sum of.
        let mut work: Vec<(BitRow, bool, BitRow)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(k, (r, b))| {
                let mut origin = BitRow::zeros(n);
                origin.set(k);
                (r.clone(), *b, origin)
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next = 0;
        for col in 0..self.columns {
            let Some(p) = (next..n).find(|&k| work[k].0.get(col)) else { continue };
            work.swap(next, p);
            let pivot = work[next].clone();
            for (k, row) in work.iter_mut().enumerate() {
                if k != next && row.0.get(col) {
                    row.0.xor(&pivot.0);
                    row.1 ^= pivot.1;
                    row.2.xor(&pivot.2);
                }
            }
            pivots.push((next, col));
            next += 1;
        }
        let rank = pivots.len();
        if let Some(bad) = work[rank..].iter().find(|r| r.1) {
            debug_assert!(bad.0.is_zero());
            return Gf2Outcome { rank, certificate: Some(bad.2.ones().collect()), solution: None };
        }
        let mut solution = vec![false; self.columns];
        for &(row, col) in &pivots {
            solution[col] = work[row].1;
        }
        Gf2Outcome { rank, certificate: None, solution: Some(solution) }
    }

    /// Whether the equation `Σ_{j ∈ support} x_j = rhs` is a GF(2) combination
    /// of the rows of this system. An inconsistent system implies everything.
    pub fn implies(&self, support: &[usize], rhs: bool) -> bool {
        let mut probe = Gf2System::new(self.columns);
        probe.push(support, rhs);
        let (mut target, mut b) = probe.rows.pop().expect("just pushed");
        let (basis, inconsistent) = self.echelon();
        if inconsistent {
            return true;
        }
        for (row, rb, col) in &basis {
            if target.get(*col) {
                target.xor(row);
                b ^= rb;
            }
        }
        target.is_zero() && !b
    }

    /// Reduced echelon rows `(row, rhs, pivot column)` and whether `0 = 1` lies
    /// in the row space.
    fn echelon(&self) -> (Vec<(BitRow, bool, usize)>, bool) {
        let mut work: Vec<(BitRow, bool)> = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.columns {
            let Some(p) = (next..work.len()).find(|&k| work[k].0.get(col)) else { continue };
            work.swap(next, p);
            let pivot = work[next].clone();
            for (k, row) in work.iter_mut().enumerate() {
                if k != next && row.0.get(col) {
                    row.0.xor(&pivot.0);
                    row.1 ^= pivot.1;
                }
            }
            pivots.push(col);
            next += 1;
        }
        let inconsistent = work[next..].iter().any(|r| r.1);
        let basis = work.into_iter().zip(pivots).map(|((r, b), c)| (r, b, c)).collect();
        (basis, inconsistent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inconsistent_system_has_certificate() {
        let mut s = Gf2System::new(3);
        s.push(&[0, 1], false);
        s.push(&[1, 2], false);
        s.push(&[0, 2], true);
        let out = s.solve();
        assert!(!out.is_consistent());
        let mut cert = out.certificate.unwrap();
        cert.sort();
        assert_eq!(cert, vec![0, 1, 2]);
    }

    #[test]
    fn consistent_system_solution() {
        let mut s = Gf2System::new(4);
        s.push(&[0, 1], true);
        s.push(&[1, 2, 3], false);
        s.push(&[3], true);
        let out = s.solve();
        assert_eq!(out.rank, 3);
        let x = out.solution.unwrap();
        assert!(x[0] ^ x[1]);
        assert!(!(x[1] ^ x[2] ^ x[3]));
        assert!(x[3]);
    }

    #[test]
    fn implication() {
        let mut s = Gf2System::new(3);
        s.push(&[0, 1], true);
        s.push(&[1, 2], false);
        assert!(s.implies(&[0, 2], true));
        assert!(!s.implies(&[0, 2], false));
        assert!(!s.implies(&[0], true));
        assert!(s.implies(&[], false));
    }

    #[test]
    fn wide_rows() {
        let mut s = Gf2System::new(200);
        s.push(&[3, 150], true);
        s.push(&[150, 199], true);
        assert!(s.implies(&[3, 199], false));
        s.push(&[3, 199], true);
        assert!(!s.solve().is_consistent());
    }

    proptest! {
        #[test]
        fn solutions_satisfy_rows(rows in proptest::collection::vec((proptest::collection::vec(0usize..10, 0..6), any::<bool>()), 1..12)) {
            let mut s = Gf2System::new(10);
            for (supp, b) in &rows {
                s.push(supp, *b);
            }
            let out = s.solve();
            match (&out.solution, &out.certificate) {
                (Some(x), None) => {
                    for (supp, b) in &rows {
                        let v = supp.iter().fold(false, |acc, &j| acc ^ x[j]);
                        prop_assert_eq!(v, *b);
                    }
                }
                (None, Some(cert)) => {
                    let mut acc = [0u8; 10];
                    let mut rhs = false;
                    for &k in cert {
                        for &j in &rows[k].0 { acc[j] ^= 1; }
                        rhs ^= rows[k].1;
                    }
                    prop_assert!(acc.iter().all(|&v| v == 0));
                    prop_assert!(rhs);
                }
                _ => prop_assert!(false),
            }
        }
    }
}
