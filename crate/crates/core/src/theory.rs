//! Exhaustive positive theories over small constant sets.
//!
//! Terms over `n` constants are the nonzero masks `1..2^n`. A semilattice
//! order generated by constants is fixed by its closure map
//! `t -> {c : c <= t}`, because `s <= t` holds exactly when every constant of
//! `s` is below `t`. [`Theory`] stores that map, one word per term, instead of
//! the `(2^n - 1)^2` duple signs.

use crate::atom::{Duple, Term};
use crate::error::Result;
use crate::guard::{Guards, HARD_LIMIT};
use crate::model::Model;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Theory {
    universe: usize,
    /// Indexed by term mask; entry 0 is unused.
    closure: Vec<u64>,
}

impl Theory {
    /// Builds a theory from a closure map given per term mask.
    ///
    /// Panics if `universe` exceeds the enumeration hard limit.
    pub fn from_closure(universe: usize, mut closure: impl FnMut(u64) -> u64) -> Theory {
        assert!(universe <= HARD_LIMIT);
        let count = 1usize << universe;
        let mut table = vec![0u64; count];
        for (mask, slot) in table.iter_mut().enumerate().skip(1) {
            *slot = closure(mask as u64);
        }
        Theory {
            universe,
            closure: table,
        }
    }

    /// The positive theory of a model.
    ///
    /// Each atom is recorded at the largest term it avoids (the complement of
    /// its segment); a superset-OR sweep then gives, for every term, the union
    /// of segments disjoint from it. Those constants are exactly the ones not
    /// below the term. Runs in `O(|A| + n 2^n)`.
    pub fn of_model(model: &Model, guards: &Guards) -> Result<Theory> {
        let n = model.universe();
        guards.check_enumeration("theory enumeration", n)?;
        let full = full_mask(n);
        let mut escaping = vec![0u64; 1usize << n];
        for atom in model.atoms() {
            let ucs = atom.ucs().to_mask().expect("guarded universe fits a word");
            escaping[(full & !ucs) as usize] |= ucs;
        }
        for bit in 0..n {
            let b = 1usize << bit;
            for mask in 0..escaping.len() {
                if mask & b == 0 {
                    escaping[mask] |= escaping[mask | b];
                }
            }
        }
        let mut closure = escaping;
        for entry in closure.iter_mut() {
            *entry = full & !*entry;
        }
        closure[0] = 0;
        Ok(Theory {
            universe: n,
            closure,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Constants below the term with the given mask.
    pub fn closure_mask(&self, term: u64) -> u64 {
        self.closure[term as usize]
    }

    #[inline]
    pub fn le_mask(&self, s: u64, t: u64) -> bool {
        s & !self.closure[t as usize] == 0
    }

    pub fn is_positive(&self, r: &Duple) -> bool {
        let s = r.left.constants().to_mask().expect("term within universe");
        let t = r.right.constants().to_mask().expect("term within universe");
        self.le_mask(s, t)
    }

    pub fn positives(&self) -> Vec<Duple> {
        self.duples_where(true)
    }

    pub fn negatives(&self) -> Vec<Duple> {
        self.duples_where(false)
    }

    pub fn positive_count(&self) -> usize {
        let count = 1u64 << self.universe;
        (1..count)
            .map(|s| (1..count).filter(|&t| self.le_mask(s, t)).count())
            .sum()
    }

    fn duples_where(&self, positive: bool) -> Vec<Duple> {
        let order = lex_masks(self.universe);
        let mut out = Vec::new();
        for &s in &order {
            for &t in &order {
                if self.le_mask(s, t) == positive {
                    out.push(self.duple(s, t));
                }
            }
        }
        out
    }

    fn duple(&self, s: u64, t: u64) -> Duple {
        Duple {
            left: Term::from_mask(self.universe, s),
            right: Term::from_mask(self.universe, t),
        }
    }

    /// Every positive duple of `self` is positive in `other`.
    pub fn is_subtheory_of(&self, other: &Theory) -> bool {
        assert_eq!(self.universe, other.universe);
        self.closure
            .iter()
            .zip(&other.closure)
            .all(|(a, b)| a & !b == 0)
    }

    /// The duples positive in both theories.
    pub fn intersection(&self, other: &Theory) -> Theory {
        assert_eq!(self.universe, other.universe);
        Theory {
            universe: self.universe,
            closure: self
                .closure
                .iter()
                .zip(&other.closure)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// The lexicographically first duple on which the two theories disagree.
    pub fn first_difference(&self, other: &Theory) -> Option<Duple> {
        assert_eq!(self.universe, other.universe);
        let order = lex_masks(self.universe);
        for &s in &order {
            for &t in &order {
                if self.le_mask(s, t) != other.le_mask(s, t) {
                    return Some(self.duple(s, t));
                }
            }
        }
        None
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Nonzero masks over `n` constants in lexicographic order of their member
/// lists: `{0}, {0,1}, {0,1,2}, ..., {0,2}, ..., {1}, ...`.
pub fn lex_masks(n: usize) -> Vec<u64> {
    assert!(n <= HARD_LIMIT);
    let mut out = Vec::with_capacity((1usize << n).saturating_sub(1));
    fn descend(prefix: u64, next: usize, n: usize, out: &mut Vec<u64>) {
        for c in next..n {
            let mask = prefix | 1 << c;
            out.push(mask);
            descend(mask, c + 1, n, out);
        }
    }
    descend(0, 0, n, &mut out);
    out
}

/// All terms over `n` constants, in mask order.
pub fn all_terms(n: usize) -> impl Iterator<Item = Term> {
    assert!(n <= HARD_LIMIT);
    (1u64..1 << n).map(move |m| Term::from_mask(n, m))
}
