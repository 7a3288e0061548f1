//! Finite Coxeter groups, epimorphisms from Artin groups onto them, and the
//! wall-crossing obstruction for lifting such maps.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod classification;
pub mod element;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod group;
pub mod maps;
mod par;
pub mod reproduce;
pub mod roots;
pub mod scalar;
pub mod signed;
pub mod wall;
pub mod words;

pub use element::{Backend, Dihedral, GroupElement, RootPerm, SignedPerm};
pub use error::Error;
pub use graph::{build_graph, CoxeterGraph, Family};
pub use group::{build_group, build_group_with_backend, ConjugacyClassTable, Elem, FiniteCoxeterGroup, DEFAULT_ELEMENT_LIMIT};
pub use scalar::ExactScalar;
pub use maps::{Automorphism, GeneratorMap};
pub use words::{alternating_word, ArtinWord};
