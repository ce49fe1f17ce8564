//! Exact computations with Chevalley bases, involutions and Klein four
//! symmetry groups of simple Lie algebras.
//!
//! All arithmetic is over `Q` or `Q(i)`; every automorphism, fixed subalgebra
//! and real-form label is certified by an exact check before it is returned.

// Structure-constant and Cartan-matrix loops index several arrays in step.
#![allow(clippy::needless_range_loop)]

pub mod autgrp;
pub mod casebook;
pub mod chevalley;
pub mod crit;
pub mod error;
pub mod fixpoint;
pub mod linalg;
pub mod realform;
pub mod rootsys;
pub mod serde_q;

pub use chevalley::{build_chevalley, AlgebraElement, ChevalleyAlgebra, CompactFormBasis};
pub use error::{LieError, Result};
pub use linalg::{Q, QI};
pub use rootsys::{build_root_system, Letter, Root, RootSystem, TypeLabel};
