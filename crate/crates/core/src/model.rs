//! Atomized semilattices.
//!
//! A [`Model`] is a constant table together with a set of atoms. Every order
//! query reduces to set tests on the atoms: an atom lies below a term when its
//! upper constant segment meets the term's constants, and `s <= t` holds when
//! every atom below `s` is also below `t`.

use std::sync::Arc;

use crate::atom::{Atom, Duple, Term};
use crate::constants::ConstantTable;
use crate::cset::CSet;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::theory::Theory;

#[derive(Clone, Debug)]
pub struct Model {
    table: Arc<ConstantTable>,
    /// Sorted by [`CSet::canonical_cmp`] and deduplicated.
    atoms: Vec<Atom>,
}

impl PartialEq for Model {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms && self.table == other.table
    }
}

impl Eq for Model {}

impl Model {
    /// Builds a model from an atom set.
    ///
    /// If some constant has no atom below it, the zero atom is added when
    /// `auto_zero` is set; otherwise the uncovered constants are reported.
    pub fn new<I>(table: impl Into<Arc<ConstantTable>>, atoms: I, auto_zero: bool) -> Result<Model>
    where
        I: IntoIterator<Item = Atom>,
    {
        let table = table.into();
        let n = table.len();
        let mut list = Vec::new();
        let mut covered = CSet::empty(n);
        for atom in atoms {
            if atom.universe() != n {
                return Err(Error::TableMismatch);
            }
            covered.union_with(atom.ucs());
            list.push(atom);
        }
        if !covered.is_full() {
            if !auto_zero {
                let missing = covered
                    .complement()
                    .iter()
                    .map(|i| table.name(i).to_owned())
                    .collect();
                return Err(Error::Uncovered(missing));
            }
            list.push(Atom::zero(n));
        }
        Ok(Model::from_parts(table, list))
    }

    /// The freest model over the table, atomized by one singleton atom per
    /// constant.
    pub fn freest(table: impl Into<Arc<ConstantTable>>) -> Model {
        let table = table.into();
        let n = table.len();
        let atoms = (0..n).map(|c| Atom::singleton(n, c)).collect();
        Model::from_parts(table, atoms)
    }

    /// Canonicalizes an atom list that already satisfies the axioms.
    pub(crate) fn from_parts(table: Arc<ConstantTable>, mut atoms: Vec<Atom>) -> Model {
        atoms.sort_unstable_by(|a, b| a.ucs().canonical_cmp(b.ucs()));
        atoms.dedup();
        debug_assert!(!atoms.is_empty());
        Model { table, atoms }
    }

    pub fn table(&self) -> &ConstantTable {
        &self.table
    }

    pub fn shared_table(&self) -> &Arc<ConstantTable> {
        &self.table
    }

    pub fn universe(&self) -> usize {
        self.table.len()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn contains_atom(&self, atom: &Atom) -> bool {
        self.atoms
            .binary_search_by(|a| a.ucs().canonical_cmp(atom.ucs()))
            .is_ok()
    }

    pub fn with_atoms(&self, atoms: impl IntoIterator<Item = Atom>) -> Result<Model> {
        Model::new(self.table.clone(), atoms, false)
    }

    /// Atoms below `t`.
    pub fn lower_segment(&self, t: &Term) -> Vec<Atom> {
        self.atoms
            .iter()
            .filter(|a| a.is_below(t))
            .cloned()
            .collect()
    }

    /// `s <= t`: no atom lies below `s` without lying below `t`.
    pub fn term_le(&self, s: &Term, t: &Term) -> bool {
        !self.atoms.iter().any(|a| a.is_below(s) && !a.is_below(t))
    }

    pub fn satisfies(&self, r: &Duple) -> bool {
        self.term_le(&r.left, &r.right)
    }

    /// Atoms below the left term but not the right one: the witnesses that
    /// the duple is negative.
    pub fn discriminant(&self, r: &Duple) -> Vec<Atom> {
        self.atoms
            .iter()
            .filter(|a| a.is_below(&r.left) && !a.is_below(&r.right))
            .cloned()
            .collect()
    }

    /// Constants below the element named by `t`.
    pub fn closure(&self, t: &CSet) -> CSet {
        let mut escaping = CSet::empty(self.universe());
        for a in &self.atoms {
            if a.ucs().is_disjoint(t) {
                escaping.union_with(a.ucs());
            }
        }
        escaping.complement()
    }

    /// Whether adding `phi` leaves the positive theory unchanged.
    ///
    /// Only the pinning duples `(c, T)` with `c` in the segment of `phi` and
    /// `T` the join of the constants outside it need checking: any duple
    /// `phi` discriminates has its right side below `T`.
    pub fn is_compatible(&self, phi: &Atom) -> bool {
        if phi.is_zero() {
            return true;
        }
        let pinning = phi.ucs().complement();
        phi.ucs().is_disjoint(&self.closure(&pinning))
    }

    /// The model atomized by the union of both atom sets.
    pub fn sum(&self, other: &Model) -> Result<Model> {
        if self.table != other.table {
            return Err(Error::TableMismatch);
        }
        let atoms = self.atoms.iter().chain(&other.atoms).cloned().collect();
        Ok(Model::from_parts(self.table.clone(), atoms))
    }

    /// A model is trivial when every duple is positive, i.e. when the zero
    /// atom is its only atom.
    pub fn is_trivial(&self) -> bool {
        self.atoms.iter().all(Atom::is_zero)
    }

    pub fn positive_theory(&self, guards: &Guards) -> Result<Theory> {
        Theory::of_model(self, guards)
    }

    /// Every duple negative in `other` is negative in `self`.
    pub fn is_freer_or_as_free(&self, other: &Model, guards: &Guards) -> Result<bool> {
        if self.table != other.table {
            return Err(Error::TableMismatch);
        }
        let mine = self.positive_theory(guards)?;
        let theirs = other.positive_theory(guards)?;
        Ok(mine.is_subtheory_of(&theirs))
    }

    /// Space-separated `{a,b}` listing of the atoms.
    pub fn describe(&self) -> String {
        self.atoms
            .iter()
            .map(|a| a.display(&self.table))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
