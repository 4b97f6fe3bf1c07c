//! Atomized semilattices over a finite set of constants.
//!
//! A semilattice generated by constants `C` is described by a set of atoms,
//! each atom given by the set of constants above it. Order queries, full
//! crossing of duples, freest-model construction, redundancy reduction and
//! subdirect decomposition all reduce to set operations on those atoms. The
//! [`oracle`] module provides an independent congruence-closure check of the
//! same order for small `C`.

pub mod atom;
pub mod constants;
pub mod crossing;
pub mod cset;
pub mod decompose;
pub mod error;
pub mod formats;
pub mod guard;
pub mod model;
pub mod oracle;
pub mod redundancy;
pub mod theory;

pub use atom::{Atom, Duple, Term};
pub use constants::ConstantTable;
pub use crossing::{freest_model, full_cross, full_cross_batch, full_cross_omega};
pub use cset::CSet;
pub use decompose::{factor_project, subdirect_factors, verify_subdirect, Factor};
pub use error::{Error, ParseError, Result};
pub use guard::Guards;
pub use model::Model;
pub use oracle::{congruence_closure, oracle_equiv, OrderOracle, Verdict};
pub use redundancy::{
    is_redundant, is_weakly_redundant, non_redundant_atoms, omega, pinning, reduce_atomization,
    reduce_atomization_traced, PinningInfo, Reduction, Redundancy,
};
pub use theory::Theory;
