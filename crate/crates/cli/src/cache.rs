//! Versioned binary cache of enumerated groups.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! magic        8 bytes  "AEPGRP\r\n"
//! version      u32      FORMAT_VERSION
//! backend      u8       0 = root permutations, 1 = dihedral
//! rank         u32
//! matrix       rank*rank u32, the Coxeter matrix
//! count        u64      number of elements
//! payload      backend specific, see below
//! lengths      count u16
//! checksum     32 bytes SHA-256 of everything before it
//! ```
//!
//! Root permutations: `positive_count` as u32, then `count * positive_count`
//! bytes of positive-root images. Dihedral: `m` as u32, then per element
//! `k` as u32 and `flip` as u8.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use artin_epi_core::group::ElementStore;
use artin_epi_core::roots::RootSystem;
use artin_epi_core::{CoxeterGraph, Dihedral, FiniteCoxeterGroup};
use sha2::{Digest, Sha256};

use crate::report::hex;

pub const MAGIC: [u8; 8] = *b"AEPGRP\r\n";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("not a group cache file")]
    BadMagic,
    #[error("cache format version {0}, expected {FORMAT_VERSION}")]
    Version(u32),
    #[error("cache file is truncated")]
    Truncated,
    #[error("cache checksum mismatch")]
    Checksum,
    #[error("cache holds a different Coxeter matrix")]
    WrongGraph,
    #[error("backend not supported by the cache")]
    Unsupported,
    #[error(transparent)]
    Core(#[from] artin_epi_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn file_name(graph: &CoxeterGraph) -> String {
    let label: String = graph.label().chars().filter(|c| c.is_ascii_alphanumeric()).collect();
    format!("{label}.wgc")
}

/// Serializes a group, or `None` for backends the format does not cover.
pub fn encode(group: &FiniteCoxeterGroup) -> Option<Vec<u8>> {
    let graph = group.graph();
    let mut out = Vec::new();
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    let tag = match group.store() {
        ElementStore::RootPerm { .. } => 0u8,
        ElementStore::Dihedral { .. } => 1u8,
        ElementStore::SignedPerm { .. } => return None,
    };
    out.push(tag);
    out.extend_from_slice(&(graph.rank() as u32).to_le_bytes());
    for row in graph.matrix() {
        for &m in row {
            out.extend_from_slice(&m.to_le_bytes());
        }
    }
    out.extend_from_slice(&(group.order() as u64).to_le_bytes());
    match group.store() {
        ElementStore::RootPerm { roots, images } => {
            out.extend_from_slice(&(roots.positive_count() as u32).to_le_bytes());
            out.extend_from_slice(images);
        }
        ElementStore::Dihedral { m, elems } => {
            out.extend_from_slice(&m.to_le_bytes());
            for e in elems {
                out.extend_from_slice(&e.k.to_le_bytes());
                out.push(e.flip as u8);
            }
        }
        ElementStore::SignedPerm { .. } => unreachable!(),
    }
    for &l in group.lengths() {
        out.extend_from_slice(&l.to_le_bytes());
    }
    let sum = Sha256::digest(&out);
    out.extend_from_slice(&sum);
    Some(out)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], CacheError> {
        let end = self.pos.checked_add(n).ok_or(CacheError::Truncated)?;
        let s = self.bytes.get(self.pos..end).ok_or(CacheError::Truncated)?;
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32, CacheError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Result<u64, CacheError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }
}

/// Restores a group written by [`encode`] for the given graph.
pub fn decode(bytes: &[u8], graph: &CoxeterGraph) -> Result<FiniteCoxeterGroup, CacheError> {
    if bytes.len() < MAGIC.len() || bytes[..MAGIC.len()] != MAGIC {
        return Err(CacheError::BadMagic);
    }
    if bytes.len() < MAGIC.len() + 4 + 32 {
        return Err(CacheError::Truncated);
    }
    let mut r = Reader { bytes: &bytes[..bytes.len() - 32], pos: MAGIC.len() };
    let version = r.u32()?;
    if version != FORMAT_VERSION {
        return Err(CacheError::Version(version));
    }
    if Sha256::digest(r.bytes).as_slice() != &bytes[bytes.len() - 32..] {
        return Err(CacheError::Checksum);
    }
    let tag = r.take(1)?[0];
    let rank = r.u32()? as usize;
    if rank != graph.rank() {
        return Err(CacheError::WrongGraph);
    }
    for row in graph.matrix() {
        for &m in row {
            if r.u32()? != m {
                return Err(CacheError::WrongGraph);
            }
        }
    }
    let count = usize::try_from(r.u64()?).map_err(|_| CacheError::Truncated)?;
    let store = match tag {
        0 => {
            let roots = RootSystem::new(graph)?;
            let n = r.u32()? as usize;
            if n != roots.positive_count() {
                return Err(CacheError::WrongGraph);
            }
            let images = r.take(count.checked_mul(n).ok_or(CacheError::Truncated)?)?.to_vec();
            ElementStore::RootPerm { roots, images }
        }
        1 => {
            let m = r.u32()?;
            let mut elems = Vec::with_capacity(count);
            for _ in 0..count {
                let k = r.u32()?;
                let flip = r.take(1)?[0] != 0;
                elems.push(Dihedral { m, k, flip });
            }
            ElementStore::Dihedral { m, elems }
        }
        _ => return Err(CacheError::Unsupported),
    };
    let lengths: Vec<u16> =
        r.take(count.checked_mul(2).ok_or(CacheError::Truncated)?)?.chunks_exact(2).map(|c| u16::from_le_bytes([c[0], c[1]])).collect();
    if r.pos != r.bytes.len() {
        return Err(CacheError::Truncated);
    }
    Ok(FiniteCoxeterGroup::from_store(graph, store, Some(lengths))?)
}

/// Outcome of a cache lookup.
#[derive(Clone, Debug)]
pub struct CacheEntry {
    pub path: PathBuf,
    pub sha256: String,
    pub hit: bool,
}

/// Loads the group from `dir`, or builds it with `build` and stores it.
/// Unreadable or stale files are rebuilt and replaced.
pub fn load_or_build(
    dir: &Path,
    graph: &CoxeterGraph,
    build: impl FnOnce() -> Result<FiniteCoxeterGroup, artin_epi_core::Error>,
) -> Result<(FiniteCoxeterGroup, Option<CacheEntry>), CacheError> {
    let path = dir.join(file_name(graph));
    if let Ok(bytes) = fs::read(&path) {
        match decode(&bytes, graph) {
            Ok(group) => {
                let sha256 = hex(&Sha256::digest(&bytes));
                return Ok((group, Some(CacheEntry { path, sha256, hit: true })));
            }
            Err(e) => eprintln!("warning: ignoring group cache {}: {e}", path.display()),
        }
    }
    let group = build()?;
    let Some(bytes) = encode(&group) else { return Ok((group, None)) };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(&bytes)?;
    tmp.persist(&path).map_err(|e| e.error)?;
    let sha256 = hex(&Sha256::digest(&bytes));
    Ok((group, Some(CacheEntry { path, sha256, hit: false })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use artin_epi_core::{build_graph, build_group, Family, DEFAULT_ELEMENT_LIMIT};

    fn group(f: Family, r: usize, m: Option<u32>) -> (CoxeterGraph, FiniteCoxeterGroup) {
        let g = build_graph(f, r, m).unwrap();
        let w = build_group(&g, DEFAULT_ELEMENT_LIMIT).unwrap();
        (g, w)
    }

    #[test]
    fn round_trip() {
        for (f, r, m) in [(Family::B, 3, None), (Family::H3, 3, None), (Family::I2, 2, Some(7))] {
            let (g, w) = group(f, r, m);
            let bytes = encode(&w).unwrap();
            let back = decode(&bytes, &g).unwrap();
            assert_eq!(back.order(), w.order());
            assert_eq!(back.lengths(), w.lengths());
            let x = w.word_element(&[0, 1, 0]);
            assert_eq!(back.reduced_word(x), w.reduced_word(x));
        }
    }

    #[test]
    fn rejects_corruption() {
        let (g, w) = group(Family::A, 3, None);
        let mut bytes = encode(&w).unwrap();
        let mid = bytes.len() / 2;
        bytes[mid] ^= 1;
        assert!(matches!(decode(&bytes, &g), Err(CacheError::Checksum)));
        let mut bytes = encode(&w).unwrap();
        bytes[8] = 9;
        assert!(matches!(decode(&bytes, &g), Err(CacheError::Version(9))));
        assert!(matches!(decode(b"nonsense", &g), Err(CacheError::BadMagic)));
        let (other, _) = group(Family::B, 3, None);
        assert!(matches!(decode(&encode(&w).unwrap(), &other), Err(CacheError::WrongGraph)));
    }

    #[test]
    fn load_or_build_writes_then_hits() {
        let dir = tempfile::tempdir().unwrap();
        let g = build_graph(Family::B, 4, None).unwrap();
        let build = || build_group(&g, DEFAULT_ELEMENT_LIMIT);
        let (_, first) = load_or_build(dir.path(), &g, build).unwrap();
        let (w, second) = load_or_build(dir.path(), &g, build).unwrap();
        let (first, second) = (first.unwrap(), second.unwrap());
        assert!(!first.hit && second.hit);
        assert_eq!(first.sha256, second.sha256);
        assert_eq!(w.order(), 384);
    }
}
