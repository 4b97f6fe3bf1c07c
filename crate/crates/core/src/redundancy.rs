//! Compatible atoms, pinning duples, redundancy and atomization reduction.
//!
//! Over a finite constant set every atom has a pinning term, so redundancy
//! and weak redundancy coincide; both predicates are still computed by their
//! own route so that the coincidence can be checked rather than assumed.

use std::mem::size_of;

use crate::atom::{Atom, Duple, Term};
use crate::constants::ConstantTable;
use crate::cset::CSet;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::model::Model;

/// The pinning term of an atom and the duples it pins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinningInfo {
    pub atom: Atom,
    /// Join of the constants outside the atom's segment; absent for the zero
    /// atom.
    pub pinning_term: Option<Term>,
    /// `(c, pinning_term)` for each constant `c` in the atom's segment.
    pub pinning_duples: Vec<Duple>,
}

pub fn pinning(table: &ConstantTable, phi: &Atom) -> PinningInfo {
    assert_eq!(phi.universe(), table.len(), "atom bound to another table");
    let outside = phi.ucs().complement();
    let pinning_term = Term::new(outside).ok();
    let pinning_duples = match &pinning_term {
        Some(t) => phi
            .ucs()
            .iter()
            .map(|c| Duple {
                left: Term::constant(table.len(), c),
                right: t.clone(),
            })
            .collect(),
        None => Vec::new(),
    };
    PinningInfo {
        atom: phi.clone(),
        pinning_term,
        pinning_duples,
    }
}

/// All atoms compatible with the model, in canonical order.
pub fn omega(model: &Model, guards: &Guards) -> Result<Vec<Atom>> {
    let n = model.universe();
    guards.check_omega(n, size_of::<Atom>())?;
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let phi = Atom::new(CSet::from_mask(n, mask)).expect("nonzero mask");
        if model.is_compatible(&phi) {
            out.push(phi);
        }
    }
    out.sort_unstable_by(|a, b| a.ucs().canonical_cmp(b.ucs()));
    Ok(out)
}

/// Redundancy classification of the compatible atoms of one model.
#[derive(Clone, Debug)]
pub struct Redundancy {
    table: std::sync::Arc<ConstantTable>,
    omega: Vec<Atom>,
}

impl Redundancy {
    pub fn new(model: &Model, guards: &Guards) -> Result<Redundancy> {
        Ok(Redundancy {
            table: model.shared_table().clone(),
            omega: omega(model, guards)?,
        })
    }

    pub fn omega(&self) -> &[Atom] {
        &self.omega
    }

    pub fn contains(&self, phi: &Atom) -> bool {
        self.omega
            .binary_search_by(|a| a.ucs().canonical_cmp(phi.ucs()))
            .is_ok()
    }

    fn require_compatible(&self, phi: &Atom) -> Result<()> {
        if phi.universe() != self.table.len() {
            return Err(Error::TableMismatch);
        }
        if !self.contains(phi) {
            return Err(Error::NotCompatible(phi.display(&self.table)));
        }
        Ok(())
    }

    /// `phi` is the union of compatible atoms other than itself.
    pub fn is_redundant(&self, phi: &Atom) -> Result<bool> {
        self.require_compatible(phi)?;
        let mut union = CSet::empty(self.table.len());
        for psi in &self.omega {
            if psi != phi && psi.ucs().is_subset(phi.ucs()) {
                union.union_with(psi.ucs());
            }
        }
        Ok(&union == phi.ucs())
    }

    /// Every pinning duple of `phi` is discriminated by another compatible
    /// atom. The zero atom has no pinning term; each of its constants must
    /// instead lie above some other compatible atom.
    pub fn is_weakly_redundant(&self, phi: &Atom) -> Result<bool> {
        self.require_compatible(phi)?;
        let info = pinning(&self.table, phi);
        let others = || self.omega.iter().filter(move |psi| *psi != phi);
        if info.pinning_term.is_none() {
            return Ok(phi
                .ucs()
                .iter()
                .all(|c| others().any(|psi| psi.ucs().contains(c))));
        }
        Ok(info
            .pinning_duples
            .iter()
            .all(|d| others().any(|psi| psi.is_below(&d.left) && !psi.is_below(&d.right))))
    }

    fn select(&self, keep: impl Fn(&Atom) -> bool) -> Vec<Atom> {
        self.omega.iter().filter(|a| keep(a)).cloned().collect()
    }

    pub fn redundant(&self) -> Vec<Atom> {
        self.select(|a| self.is_redundant(a).unwrap_or(false))
    }

    pub fn non_redundant(&self) -> Vec<Atom> {
        self.select(|a| !self.is_redundant(a).unwrap_or(true))
    }

    pub fn weakly_redundant(&self) -> Vec<Atom> {
        self.select(|a| self.is_weakly_redundant(a).unwrap_or(false))
    }

    pub fn non_weakly_redundant(&self) -> Vec<Atom> {
        self.select(|a| !self.is_weakly_redundant(a).unwrap_or(true))
    }
}

pub fn is_redundant(model: &Model, phi: &Atom, guards: &Guards) -> Result<bool> {
    Redundancy::new(model, guards)?.is_redundant(phi)
}

pub fn is_weakly_redundant(model: &Model, phi: &Atom, guards: &Guards) -> Result<bool> {
    Redundancy::new(model, guards)?.is_weakly_redundant(phi)
}

/// The compatible atoms that are not joins of other compatible atoms. They
/// atomize the model and belong to every atomization of it.
pub fn non_redundant_atoms(model: &Model, guards: &Guards) -> Result<Vec<Atom>> {
    Ok(Redundancy::new(model, guards)?.non_redundant())
}

/// Result of [`reduce_atomization_traced`]: the reduced model and the atoms
/// removed, in removal order.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub model: Model,
    pub removed: Vec<Atom>,
}

/// Removes every atom that is the union of strictly narrower atoms still in
/// the atomization. The theory is unchanged.
pub fn reduce_atomization(model: &Model) -> Model {
    reduce_atomization_traced(model).model
}

pub fn reduce_atomization_traced(model: &Model) -> Reduction {
    let n = model.universe();
    let mut atoms = model.atoms().to_vec();
    atoms.sort_by(Atom::widest_first);
    let mut removed = Vec::new();
    loop {
        let before = removed.len();
        let mut i = 0;
        while i < atoms.len() {
            let phi = &atoms[i];
            let mut union = CSet::empty(n);
            for psi in &atoms {
                if psi.ucs().is_proper_subset(phi.ucs()) {
                    union.union_with(psi.ucs());
                }
            }
            if &union == phi.ucs() {
                removed.push(atoms.remove(i));
            } else {
                i += 1;
            }
        }
        if removed.len() == before {
            break;
        }
    }
    Reduction {
        model: Model::from_parts(model.shared_table().clone(), atoms),
        removed,
    }
}
