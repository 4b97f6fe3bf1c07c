#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use slt_core::{freest_model, Atom, CSet, ConstantTable, Duple, Model, Term};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn table(n: usize) -> Arc<ConstantTable> {
    Arc::new(ConstantTable::numbered(n).unwrap())
}

pub fn term(rng: &mut impl Rng, n: usize) -> Term {
    Term::from_mask(n, rng.gen_range(1..1u64 << n))
}

pub fn duple(rng: &mut impl Rng, n: usize) -> Duple {
    Duple::new(term(rng, n), term(rng, n)).unwrap()
}

pub fn duples(rng: &mut impl Rng, n: usize, max: usize) -> Vec<Duple> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| duple(rng, n)).collect()
}

pub fn atom(rng: &mut impl Rng, n: usize) -> Atom {
    Atom::new(CSet::from_mask(n, rng.gen_range(1..1u64 << n))).unwrap()
}

/// A model given directly by random atoms, zero atom added when needed.
pub fn atom_model(rng: &mut impl Rng, n: usize) -> Model {
    let k = rng.gen_range(1..=2 * n);
    Model::new(table(n), (0..k).map(|_| atom(rng, n)), true).unwrap()
}

/// A freest model of random duples.
pub fn presented_model(rng: &mut impl Rng, n: usize) -> (Vec<Duple>, Model) {
    let r = duples(rng, n, 8);
    let m = freest_model(table(n), &r).unwrap();
    (r, m)
}

pub fn names(t: &ConstantTable, set: &[&str]) -> Term {
    Term::from_names(t, set.iter().copied()).unwrap()
}

pub fn le(t: &ConstantTable, l: &[&str], r: &[&str]) -> Duple {
    Duple::new(names(t, l), names(t, r)).unwrap()
}
