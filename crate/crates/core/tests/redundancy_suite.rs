mod common;

use common::*;
use slt_core::{
    congruence_closure, non_redundant_atoms, omega, reduce_atomization_traced, Guards, Model,
    Redundancy, Theory,
};

fn theory(m: &Model) -> Theory {
    Theory::of_model(m, &Guards::default()).unwrap()
}

fn random_models() -> Vec<Model> {
    let mut rng = rng(21);
    let mut out = Vec::new();
    for i in 0..100 {
        let n = 1 + i % 5;
        if i % 2 == 0 {
            out.push(presented_model(&mut rng, n).1);
        } else {
            out.push(atom_model(&mut rng, n));
        }
    }
    out
}

#[test]
fn omega_splits_into_redundant_and_non_redundant() {
    let g = Guards::default();
    for m in random_models() {
        let a = Redundancy::new(&m, &g).unwrap();
        let r = a.redundant();
        let nr = a.non_redundant();
        assert_eq!(r.len() + nr.len(), a.omega().len());
        assert!(r.iter().all(|x| !nr.contains(x)));
        assert_eq!(r, a.weakly_redundant(), "{}", m.describe());
        assert_eq!(nr, a.non_weakly_redundant(), "{}", m.describe());
    }
}

#[test]
fn model_atoms_are_compatible() {
    let g = Guards::default();
    for m in random_models() {
        let a = Redundancy::new(&m, &g).unwrap();
        assert!(m.atoms().iter().all(|x| a.contains(x)));
        assert!(a.omega().iter().all(|x| m.is_compatible(x)));
    }
}

#[test]
fn non_redundant_atoms_atomize_the_model() {
    let g = Guards::default();
    for m in random_models() {
        let nr = non_redundant_atoms(&m, &g).unwrap();
        let rebuilt = Model::new(m.shared_table().clone(), nr, false).unwrap();
        assert_eq!(theory(&rebuilt), theory(&m));
    }
}

#[test]
fn reduction_preserves_the_theory_at_every_step() {
    for m in random_models() {
        let expected = theory(&m);
        let trace = reduce_atomization_traced(&m);
        let mut atoms = m.atoms().to_vec();
        for gone in &trace.removed {
            atoms.retain(|a| a != gone);
            let step = Model::new(m.shared_table().clone(), atoms.clone(), false).unwrap();
            assert_eq!(theory(&step), expected);
        }
        assert_eq!(theory(&trace.model), expected);
    }
}

#[test]
fn reduction_reaches_the_non_redundant_atoms() {
    let g = Guards::default();
    for m in random_models() {
        let reduced = reduce_atomization_traced(&m).model;
        let nr = non_redundant_atoms(&m, &g).unwrap();
        for x in &nr {
            assert!(
                reduced.contains_atom(x),
                "{} misses {x:?}",
                reduced.describe()
            );
        }
    }
}

#[test]
fn non_weakly_redundant_atoms_lie_in_every_atomization() {
    let g = Guards::default();
    for m in random_models() {
        let nwr = Redundancy::new(&m, &g).unwrap().non_weakly_redundant();
        let full = Model::new(m.shared_table().clone(), omega(&m, &g).unwrap(), false).unwrap();
        let reduced = reduce_atomization_traced(&m).model;
        let oracle =
            congruence_closure(m.shared_table().clone(), &theory(&m).positives(), &g).unwrap();
        let constructive = oracle.atomize();
        for atomization in [&m, &full, &reduced, &constructive] {
            assert_eq!(theory(atomization), theory(&m));
            for x in &nwr {
                assert!(atomization.contains_atom(x));
            }
        }
    }
}

#[test]
fn redundancy_can_be_read_from_any_atomization() {
    let g = Guards::default();
    for m in random_models() {
        let reduced = reduce_atomization_traced(&m).model;
        let here = Redundancy::new(&m, &g).unwrap();
        let there = Redundancy::new(&reduced, &g).unwrap();
        assert_eq!(here.omega(), there.omega());
        assert_eq!(here.non_redundant(), there.non_redundant());
    }
}
