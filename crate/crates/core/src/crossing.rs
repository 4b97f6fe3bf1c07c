//! Full crossing: forcing a duple to become positive in the freest way.
//!
//! Crossing `r = (l, r)` in a model atomized by `A` removes the atoms that
//! discriminate `r` and replaces each of them by its joins with every atom
//! below the right-hand term. The result is the freest model of the old
//! positive theory plus `r`.

use crate::atom::{Atom, Duple};
use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::model::Model;
use crate::redundancy::omega;

use std::sync::Arc;

fn check_binding(model: &Model, r: &Duple) -> Result<()> {
    if r.universe() != model.universe() {
        return Err(Error::TableMismatch);
    }
    Ok(())
}

/// Crosses one duple into the model.
pub fn full_cross(model: &Model, r: &Duple) -> Result<Model> {
    check_binding(model, r)?;
    let (discriminating, kept): (Vec<&Atom>, Vec<&Atom>) = model
        .atoms()
        .iter()
        .partition(|a| a.is_below(&r.left) && !a.is_below(&r.right));
    if discriminating.is_empty() {
        return Ok(model.clone());
    }
    let below_right: Vec<&Atom> = model
        .atoms()
        .iter()
        .filter(|a| a.is_below(&r.right))
        .collect();
    debug_assert!(!below_right.is_empty(), "every term has an atom below it");

    let mut atoms: Vec<Atom> =
        Vec::with_capacity(kept.len() + discriminating.len() * below_right.len());
    atoms.extend(kept.into_iter().cloned());
    for h in &discriminating {
        for b in &below_right {
            atoms.push(h.join(b));
        }
    }
    Ok(Model::from_parts(model.shared_table().clone(), atoms))
}

/// Crosses the duples one after another, in list order.
pub fn full_cross_batch(model: &Model, duples: &[Duple]) -> Result<Model> {
    let mut current = model.clone();
    for r in duples {
        current = full_cross(&current, r)?;
    }
    Ok(current)
}

/// Crosses a set of duples through the full atomization: the compatible
/// atoms of the model minus every one that discriminates some duple.
pub fn full_cross_omega(model: &Model, duples: &[Duple], guards: &Guards) -> Result<Model> {
    for r in duples {
        check_binding(model, r)?;
    }
    let atoms = omega(model, guards)?
        .into_iter()
        .filter(|a| {
            !duples
                .iter()
                .any(|r| a.is_below(&r.left) && !a.is_below(&r.right))
        })
        .collect();
    // The zero atom is compatible and never discriminates, so it survives.
    Ok(Model::from_parts(model.shared_table().clone(), atoms))
}

/// The freest model over the table satisfying every duple.
pub fn freest_model(table: impl Into<Arc<ConstantTable>>, duples: &[Duple]) -> Result<Model> {
    full_cross_batch(&Model::freest(table), duples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::Term;
    use crate::cset::CSet;
    use crate::theory::all_terms;
    use proptest::prelude::*;

    fn abc() -> Arc<ConstantTable> {
        Arc::new(ConstantTable::new(["a", "b", "c"]).unwrap())
    }

    fn atom(t: &ConstantTable, names: &[&str]) -> Atom {
        Atom::from_names(t, names.iter().copied()).unwrap()
    }

    fn duple(t: &ConstantTable, l: &[&str], r: &[&str]) -> Duple {
        Duple::new(
            Term::from_names(t, l.iter().copied()).unwrap(),
            Term::from_names(t, r.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    fn atom_set(m: &Model) -> Vec<Atom> {
        m.atoms().to_vec()
    }

    #[test]
    fn crossing_walkthrough() {
        let t = abc();
        let freest = Model::freest(t.clone());
        let once = full_cross(&freest, &duple(&t, &["a"], &["b"])).unwrap();
        assert_eq!(
            atom_set(&once),
            vec![atom(&t, &["b"]), atom(&t, &["c"]), atom(&t, &["a", "b"])]
        );
        let twice = full_cross(&once, &duple(&t, &["b"], &["a"])).unwrap();
        assert_eq!(
            atom_set(&twice),
            vec![atom(&t, &["c"]), atom(&t, &["a", "b"])]
        );
    }

    #[test]
    fn positive_duple_is_noop() {
        let t = abc();
        let m = Model::freest(t.clone());
        assert_eq!(full_cross(&m, &duple(&t, &["a"], &["a", "b"])).unwrap(), m);
        assert_eq!(full_cross(&m, &duple(&t, &["c"], &["c"])).unwrap(), m);
    }

    #[test]
    fn batch_examples() {
        let t = abc();
        let m = Model::freest(t.clone());
        assert_eq!(full_cross_batch(&m, &[]).unwrap(), m);

        let g = Guards::default();
        let ab = duple(&t, &["a"], &["b"]);
        let ba = duple(&t, &["b"], &["a"]);
        let x = full_cross_batch(&m, &[ab.clone(), ba.clone()]).unwrap();
        let y = full_cross_batch(&m, &[ba, ab]).unwrap();
        assert_eq!(
            x.positive_theory(&g).unwrap(),
            y.positive_theory(&g).unwrap()
        );

        let chain =
            full_cross_batch(&m, &[duple(&t, &["a"], &["b"]), duple(&t, &["b"], &["c"])]).unwrap();
        assert!(chain.satisfies(&duple(&t, &["a"], &["c"])));
        assert!(!chain.satisfies(&duple(&t, &["c"], &["a"])));
    }

    #[test]
    fn omega_route_examples() {
        let g = Guards::default();
        let t = abc();
        let m = Model::freest(t.clone());
        assert_eq!(
            full_cross_omega(&m, &[], &g)
                .unwrap()
                .positive_theory(&g)
                .unwrap(),
            m.positive_theory(&g).unwrap()
        );

        let ab2 = Arc::new(ConstantTable::new(["a", "b"]).unwrap());
        let r = duple(&ab2, &["a"], &["b"]);
        let f2 = Model::freest(ab2.clone());
        let via_omega = full_cross_omega(&f2, std::slice::from_ref(&r), &g).unwrap();
        assert_eq!(
            atom_set(&via_omega),
            vec![atom(&ab2, &["b"]), atom(&ab2, &["a", "b"])]
        );
        assert_eq!(
            via_omega.positive_theory(&g).unwrap(),
            full_cross(&f2, &r).unwrap().positive_theory(&g).unwrap()
        );

        let rs = [duple(&t, &["a"], &["b"]), duple(&t, &["b"], &["a"])];
        assert_eq!(
            full_cross_omega(&m, &rs, &g)
                .unwrap()
                .positive_theory(&g)
                .unwrap(),
            full_cross_batch(&m, &rs)
                .unwrap()
                .positive_theory(&g)
                .unwrap()
        );
    }

    #[test]
    fn freest_model_examples() {
        let t = abc();
        assert_eq!(
            atom_set(&freest_model(t.clone(), &[]).unwrap()),
            vec![atom(&t, &["a"]), atom(&t, &["b"]), atom(&t, &["c"])]
        );
        assert_eq!(
            atom_set(&freest_model(t.clone(), &[duple(&t, &["a"], &["b"])]).unwrap()),
            vec![atom(&t, &["b"]), atom(&t, &["c"]), atom(&t, &["a", "b"])]
        );
        let ab = Arc::new(ConstantTable::new(["a", "b"]).unwrap());
        let all = [duple(&ab, &["a"], &["b"]), duple(&ab, &["b"], &["a"])];
        assert_eq!(
            atom_set(&freest_model(ab.clone(), &all).unwrap()),
            vec![Atom::zero(2)]
        );
    }

    #[test]
    fn assertion_over_join_matches_hand_computation() {
        let t = abc();
        let m = freest_model(t.clone(), &[duple(&t, &["a", "b"], &["c"])]).unwrap();
        assert_eq!(
            atom_set(&m),
            vec![
                atom(&t, &["c"]),
                atom(&t, &["a", "c"]),
                atom(&t, &["b", "c"])
            ]
        );
    }

    #[test]
    fn table_mismatch_rejected() {
        let t = abc();
        let other = Arc::new(ConstantTable::new(["a", "b"]).unwrap());
        let r = duple(&other, &["a"], &["b"]);
        assert_eq!(full_cross(&Model::freest(t), &r), Err(Error::TableMismatch));
    }

    fn arb_model(n: usize) -> impl Strategy<Value = Model> {
        proptest::collection::vec(1u64..(1 << n), 1..8).prop_map(move |masks| {
            let t = Arc::new(ConstantTable::numbered(n).unwrap());
            let atoms = masks
                .into_iter()
                .map(|m| Atom::new(CSet::from_mask(n, m)).unwrap());
            Model::new(t, atoms, true).unwrap()
        })
    }

    fn arb_duple(n: usize) -> impl Strategy<Value = Duple> {
        (1u64..(1 << n), 1u64..(1 << n)).prop_map(move |(l, r)| {
            Duple::new(Term::from_mask(n, l), Term::from_mask(n, r)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn crossing_laws(m in arb_model(5), r in arb_duple(5)) {
            let crossed = full_cross(&m, &r).unwrap();
            prop_assert!(crossed.satisfies(&r));
            prop_assert!(crossed.discriminant(&r).is_empty());

            let h = m.discriminant(&r).len();
            let b = m.lower_segment(&r.right).len();
            prop_assert!(crossed.atoms().len() <= m.atoms().len() - h + h * b);

            let n = 5;
            for s in all_terms(n) {
                for t in all_terms(n) {
                    let before = m.term_le(&s, &t);
                    let after = crossed.term_le(&s, &t);
                    // conservative
                    prop_assert!(!before || after);
                    if !before && after {
                        prop_assert!(m.term_le(&s, &t.join(&r.left)));
                        prop_assert!(m.term_le(&r.right, &t));
                    }
                }
            }
        }
    }
}
