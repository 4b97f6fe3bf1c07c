//! Brute-force ground truth for finitely presented semilattices.
//!
//! The free semilattice over `C` is the set of nonempty subsets of `C` under
//! union. A presentation `R` of duples `l <= r` becomes the congruence
//! generated by the pairs `(r, l + r)`; this module computes it by naive
//! union-find closure over all `2^|C| - 1` subsets and answers order queries
//! on the quotient. It shares no code with the atom-based engine beyond the
//! input and output types.

use std::sync::Arc;

use crate::atom::{Atom, Duple, Term};
use crate::constants::ConstantTable;
use crate::cset::CSet;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::model::Model;
use crate::theory::{full_mask, lex_masks, Theory};

struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
            rank: vec![0; size],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if self.rank[ra as usize] < self.rank[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo as usize] = hi;
        if self.rank[lo as usize] == self.rank[hi as usize] {
            self.rank[hi as usize] += 1;
        }
        true
    }
}

/// The quotient of the free semilattice by a congruence, as a class map.
#[derive(Clone, Debug)]
pub struct OrderOracle {
    table: Arc<ConstantTable>,
    /// Class representative per term mask: the lexicographically smallest
    /// member of the class. Entry 0 is unused.
    class_of: Vec<u32>,
}

fn mask_of(set: &CSet) -> u32 {
    set.to_mask().expect("guarded universe fits a word") as u32
}

/// Closes the presentation `duples` into a congruence on the free
/// semilattice over `table`.
pub fn congruence_closure(
    table: impl Into<Arc<ConstantTable>>,
    duples: &[Duple],
    guards: &Guards,
) -> Result<OrderOracle> {
    let table = table.into();
    let n = table.len();
    guards.check_oracle(n)?;
    let size = 1usize << n;
    let mut uf = UnionFind::new(size);

    // `work` holds merges that actually joined two classes. Translating each
    // of them by every u closes the whole equivalence, because any pair in it
    // is a chain of such merges.
    let mut work: Vec<(u32, u32)> = Vec::new();
    for r in duples {
        if r.universe() != n {
            return Err(Error::TableMismatch);
        }
        let left = mask_of(r.left.constants());
        let right = mask_of(r.right.constants());
        if uf.union(right, left | right) {
            work.push((right, left | right));
        }
    }
    while let Some((s, t)) = work.pop() {
        for u in 1..size as u32 {
            let (su, tu) = (s | u, t | u);
            if uf.union(su, tu) {
                work.push((su, tu));
            }
        }
    }

    let mut best: Vec<Option<u32>> = vec![None; size];
    for mask in lex_masks(n) {
        let root = uf.find(mask as u32) as usize;
        if best[root].is_none() {
            best[root] = Some(mask as u32);
        }
    }
    let mut class_of = vec![0u32; size];
    for (mask, slot) in class_of.iter_mut().enumerate().skip(1) {
        let root = uf.find(mask as u32) as usize;
        *slot = best[root].expect("every root owns its own mask");
    }
    Ok(OrderOracle { table, class_of })
}

impl OrderOracle {
    pub fn table(&self) -> &ConstantTable {
        &self.table
    }

    pub fn universe(&self) -> usize {
        self.table.len()
    }

    /// Representative of the class of `t`.
    pub fn class_of(&self, t: &Term) -> Term {
        let rep = self.class_of[mask_of(t.constants()) as usize];
        Term::from_mask(self.universe(), rep as u64)
    }

    pub fn same_class(&self, s: &Term, t: &Term) -> bool {
        self.class_of[mask_of(s.constants()) as usize]
            == self.class_of[mask_of(t.constants()) as usize]
    }

    /// `s <= t` in the quotient: `s + t` and `t` name the same element.
    pub fn le(&self, s: &Term, t: &Term) -> bool {
        self.le_mask(mask_of(s.constants()) as u64, mask_of(t.constants()) as u64)
    }

    #[inline]
    pub fn le_mask(&self, s: u64, t: u64) -> bool {
        self.class_of[(s | t) as usize] == self.class_of[t as usize]
    }

    /// Number of distinct elements of the quotient.
    pub fn class_count(&self) -> usize {
        let mut reps: Vec<u32> = self.class_of[1..].to_vec();
        reps.sort_unstable();
        reps.dedup();
        reps.len()
    }

    pub fn theory(&self) -> Theory {
        let n = self.universe();
        Theory::from_closure(n, |t| {
            (0..n)
                .filter(|&c| self.le_mask(1 << c, t))
                .fold(0u64, |acc, c| acc | 1 << c)
        })
    }

    /// An atomization of the quotient built from the oracle alone: for each
    /// element `t`, the atom above exactly the constants not below `t`. Every
    /// such atom is compatible, and the one for `t` discriminates every
    /// negative duple with right side `t`.
    pub fn atomize(&self) -> Model {
        let n = self.universe();
        let full = full_mask(n);
        let mut atoms = Vec::new();
        for t in 1..(1u64 << n) {
            let below = (0..n)
                .filter(|&c| self.le_mask(1 << c, t))
                .fold(0u64, |acc, c| acc | 1 << c);
            let above = full & !below;
            if above != 0 {
                atoms.push(Atom::new(CSet::from_mask(n, above)).expect("nonzero"));
            }
        }
        Model::new(self.table.clone(), atoms, true).expect("zero atom covers the table")
    }
}

/// Where a model and an oracle disagree on `duple`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub duple: Duple,
    pub model_says: bool,
    pub oracle_says: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pairs_checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn agrees(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares the model order with the oracle on every pair of terms, scanning
/// duples in lexicographic order and stopping at the first disagreement.
pub fn oracle_equiv(model: &Model, oracle: &OrderOracle, guards: &Guards) -> Result<Verdict> {
    if model.table() != oracle.table() {
        return Err(Error::TableMismatch);
    }
    let n = model.universe();
    guards.check_oracle(n)?;
    let theory = Theory::of_model(model, &Guards::uniform(n.max(guards.enumeration)))?;
    let order = lex_masks(n);
    let mut checked = 0u64;
    for &s in &order {
        for &t in &order {
            checked += 1;
            let model_says = theory.le_mask(s, t);
            let oracle_says = oracle.le_mask(s, t);
            if model_says != oracle_says {
                return Ok(Verdict {
                    pairs_checked: checked,
                    counterexample: Some(Counterexample {
                        duple: Duple {
                            left: Term::from_mask(n, s),
                            right: Term::from_mask(n, t),
                        },
                        model_says,
                        oracle_says,
                    }),
                });
            }
        }
    }
    Ok(Verdict {
        pairs_checked: checked,
        counterexample: None,
    })
}
