#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use slt_core::{freest_model, Atom, CSet, ConstantTable, Duple, Model, Term};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Runs the command line in-process; returns (exit code, stdout, stderr).
pub fn slt(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("slt").chain(args.iter().copied());
    let code = slt_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

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

pub fn atom_model(rng: &mut impl Rng, n: usize) -> Model {
    let k = rng.gen_range(1..=2 * n);
    Model::new(table(n), (0..k).map(|_| atom(rng, n)), true).unwrap()
}

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
