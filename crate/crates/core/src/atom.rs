//! Atoms, terms and duples.
//!
//! An atom is identified by its upper constant segment: the set of constants
//! it lies below. A term is identified by the set of constants it mentions.
//! Both are nonempty [`CSet`]s; they are distinct types so that no operation
//! can place a term below an atom.

use std::cmp::Ordering;

use crate::constants::ConstantTable;
use crate::cset::CSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Atom(CSet);

impl Atom {
    pub fn new(ucs: CSet) -> Result<Self> {
        if ucs.is_empty() {
            return Err(Error::EmptySet("atom"));
        }
        Ok(Atom(ucs))
    }

    /// The zero atom: its upper constant segment is every constant, so it
    /// lies below every element.
    pub fn zero(universe: usize) -> Self {
        assert!(universe > 0);
        Atom(CSet::full(universe))
    }

    pub fn singleton(universe: usize, constant: usize) -> Self {
        Atom(CSet::singleton(universe, constant))
    }

    pub fn from_names<'a>(
        table: &ConstantTable,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        Self::new(table.set_of(names)?)
    }

    /// Upper constant segment.
    #[inline]
    pub fn ucs(&self) -> &CSet {
        &self.0
    }

    pub fn into_ucs(self) -> CSet {
        self.0
    }

    pub fn universe(&self) -> usize {
        self.0.universe()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_full()
    }

    pub fn join(&self, other: &Atom) -> Atom {
        Atom(self.0.union(&other.0))
    }

    /// Joins a nonempty list of atoms.
    pub fn join_all<'a, I>(atoms: I) -> Result<Atom>
    where
        I: IntoIterator<Item = &'a Atom>,
    {
        let mut iter = atoms.into_iter();
        let first = iter.next().ok_or(Error::EmptyJoin)?;
        let mut ucs = first.0.clone();
        for atom in iter {
            if atom.universe() != ucs.universe() {
                return Err(Error::TableMismatch);
            }
            ucs.union_with(&atom.0);
        }
        Ok(Atom(ucs))
    }

    /// `self` is wider than `other`: its upper constant segment strictly
    /// contains the other's.
    pub fn is_wider_than(&self, other: &Atom) -> bool {
        other.0.is_proper_subset(&self.0)
    }

    /// The atom lies below the element named by `term`.
    #[inline]
    pub fn is_below(&self, term: &Term) -> bool {
        self.0.intersects(&term.0)
    }

    /// Widest first: larger segments before smaller, ties lexicographic.
    pub fn widest_first(&self, other: &Atom) -> Ordering {
        other
            .0
            .len()
            .cmp(&self.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub fn display(&self, table: &ConstantTable) -> String {
        table.format_set(&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Term(CSet);

impl Term {
    pub fn new(constants: CSet) -> Result<Self> {
        if constants.is_empty() {
            return Err(Error::EmptySet("term"));
        }
        Ok(Term(constants))
    }

    pub fn constant(universe: usize, constant: usize) -> Self {
        Term(CSet::singleton(universe, constant))
    }

    /// Term for a nonzero membership mask.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(mask != 0, "term mask must be nonzero");
        Term(CSet::from_mask(universe, mask))
    }

    pub fn from_names<'a>(
        table: &ConstantTable,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        Self::new(table.set_of(names)?)
    }

    /// Constants mentioned by the term.
    #[inline]
    pub fn constants(&self) -> &CSet {
        &self.0
    }

    pub fn universe(&self) -> usize {
        self.0.universe()
    }

    pub fn join(&self, other: &Term) -> Term {
        Term(self.0.union(&other.0))
    }

    pub fn display(&self, table: &ConstantTable) -> String {
        table.format_join(&self.0)
    }
}

/// An ordered pair of terms, read as the claim `left <= right`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Duple {
    pub left: Term,
    pub right: Term,
}

impl Duple {
    pub fn new(left: Term, right: Term) -> Result<Self> {
        if left.universe() != right.universe() {
            return Err(Error::TableMismatch);
        }
        Ok(Duple { left, right })
    }

    pub fn universe(&self) -> usize {
        self.left.universe()
    }

    pub fn reversed(&self) -> Duple {
        Duple {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn display(&self, table: &ConstantTable) -> String {
        format!(
            "{} <= {}",
            self.left.display(table),
            self.right.display(table)
        )
    }
}
