//! Root systems realised exactly over `Z[φ]`.
//!
//! Roots are written in the basis of simple roots. A simple reflection acts by
//! `s_i(α_j) = α_j − a_{ij} α_i` for a Cartan-type matrix `a` with
//! `a_{ij} a_{ji} = 4 cos²(π / m_{ij})`. Labels 3, 4 and 6 give integer
//! entries; label 5 uses `a_{ij} = a_{ji} = −φ`.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::Error;
use crate::graph::CoxeterGraph;
use crate::scalar::ExactScalar;

/// A root index: positives are `0..N`, the negative of root `i` is `i + N`.
pub type RootIndex = u8;

#[derive(Clone, Debug)]
pub struct RootSystem {
    roots: Vec<Vec<ExactScalar>>,
    positive_count: usize,
    /// `generator_images[i][p]` is the image of positive root `p` under `s_i`.
    generator_images: Vec<Vec<RootIndex>>,
}

fn cartan_entry(m: u32, upper: bool) -> Result<ExactScalar, Error> {
    Ok(match m {
        2 => ExactScalar::ZERO,
        3 => ExactScalar::int(-1),
        4 => ExactScalar::int(if upper { -1 } else { -2 }),
        5 => -ExactScalar::PHI,
        6 => ExactScalar::int(if upper { -1 } else { -3 }),
        _ => return Err(Error::BackendUnavailable("root-permutation")),
    })
}

impl RootSystem {
    pub fn new(graph: &CoxeterGraph) -> Result<Self, Error> {
        let n = graph.rank();
        let cartan = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Ok(ExactScalar::int(2)) } else { cartan_entry(graph.m(i, j), i < j) })
                    .collect::<Result<Vec<_>, Error>>()
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let reflect = |i: usize, v: &[ExactScalar]| -> Vec<ExactScalar> {
            let mut pairing = ExactScalar::ZERO;
            for j in 0..n {
                pairing = pairing + cartan[i][j] * v[j];
            }
            let mut out = v.to_vec();
            out[i] = out[i] - pairing;
            out
        };

        let mut positives: Vec<Vec<ExactScalar>> = (0..n)
            .map(|i| {
                let mut e = vec![ExactScalar::ZERO; n];
                e[i] = ExactScalar::ONE;
                e
            })
            .collect();
        let mut lookup: HashMap<Vec<ExactScalar>, usize> =
            positives.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut head = 0;
        while head < positives.len() {
            let beta = positives[head].clone();
            for i in 0..n {
                if head == i {
                    continue;
                }
                let image = reflect(i, &beta);
                if !image.iter().all(|c| c.signum() >= 0) {
                    return Err(Error::InvalidMatrix);
                }
                if !lookup.contains_key(&image) {
                    lookup.insert(image.clone(), positives.len());
                    positives.push(image);
                }
            }
            head += 1;
            if positives.len() > 127 {
                return Err(Error::BackendUnavailable("root-permutation"));
            }
        }
        let positive_count = positives.len();
        if positive_count != graph.reflection_count() {
            return Err(Error::InvalidMatrix);
        }

        let mut generator_images = Vec::with_capacity(n);
        for i in 0..n {
            let images = (0..positive_count)
                .map(|p| {
                    if p == i {
                        (i + positive_count) as RootIndex
                    } else {
                        lookup[&reflect(i, &positives[p])] as RootIndex
                    }
                })
                .collect();
            generator_images.push(images);
        }

        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|v| v.iter().map(|&c| -c).collect()));
        Ok(Self { roots, positive_count, generator_images })
    }

    pub fn rank(&self) -> usize {
        self.generator_images.len()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    /// All roots, positives first.
    pub fn roots(&self) -> &[Vec<ExactScalar>] {
        &self.roots
    }

    pub fn negation(&self, r: usize) -> usize {
        if r < self.positive_count {
            r + self.positive_count
        } else {
            r - self.positive_count
        }
    }

    /// Root indices of the simple roots; they are always `0..rank`.
    pub fn simple_indices(&self) -> core::ops::Range<usize> {
        0..self.rank()
    }

    pub fn generator_images(&self) -> &[Vec<RootIndex>] {
        &self.generator_images
    }

    /// Image of an arbitrary root index under `s_i`.
    pub fn reflect_index(&self, i: usize, r: usize) -> usize {
        let n = self.positive_count;
        if r < n {
            self.generator_images[i][r] as usize
        } else {
            self.negation(self.generator_images[i][r - n] as usize)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Family};

    #[test]
    fn positive_counts() {
        let cases = [
            (Family::A, 4, 10),
            (Family::B, 3, 9),
            (Family::B, 5, 25),
            (Family::D, 5, 20),
            (Family::H3, 3, 15),
            (Family::H4, 4, 60),
            (Family::F4, 4, 24),
            (Family::E6, 6, 36),
            (Family::E7, 7, 63),
            (Family::E8, 8, 120),
        ];
        for (family, rank, expected) in cases {
            let g = build_graph(family, rank, None).unwrap();
            let rs = RootSystem::new(&g).unwrap();
            assert_eq!(rs.positive_count(), expected, "{family:?}{rank}");
            assert_eq!(rs.roots().len(), 2 * expected);
        }
    }

    #[test]
    fn closed_under_simple_reflections() {
        let g = build_graph(Family::H3, 3, None).unwrap();
        let rs = RootSystem::new(&g).unwrap();
        for i in 0..3 {
            let mut seen = vec![false; rs.roots().len()];
            for r in 0..rs.roots().len() {
                let img = rs.reflect_index(i, r);
                assert!(!seen[img]);
                seen[img] = true;
                assert_eq!(rs.reflect_index(i, img), r);
                assert_eq!(rs.reflect_index(i, rs.negation(r)), rs.negation(img));
            }
        }
    }

    #[test]
    fn unsupported_labels_are_refused() {
        let g = build_graph(Family::I2, 2, Some(7)).unwrap();
        assert!(matches!(RootSystem::new(&g), Err(Error::BackendUnavailable(_))));
    }
}
