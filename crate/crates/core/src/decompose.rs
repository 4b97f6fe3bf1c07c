//! Subdirect decomposition into two-element semilattices.
//!
//! Every atom other than the zero atom indexes one factor. A term maps to 1
//! in the factor of `phi` when `phi` lies below it, else to 0; the tuple of
//! these bits over all factors determines the element.

use crate::atom::{Atom, Term};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::model::Model;
use crate::theory::{lex_masks, Theory};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    atom: Atom,
}

impl Factor {
    pub fn new(atom: Atom) -> Result<Factor> {
        if atom.is_zero() {
            return Err(Error::TrivialModel);
        }
        Ok(Factor { atom })
    }

    pub fn atom(&self) -> &Atom {
        &self.atom
    }

    /// The value of `t` in this two-element factor.
    pub fn project(&self, t: &Term) -> bool {
        self.atom.is_below(t)
    }
}

pub fn factor_project(f: &Factor, t: &Term) -> bool {
    f.project(t)
}

/// One factor per atom other than the zero atom.
pub fn subdirect_factors(model: &Model) -> Result<Vec<Factor>> {
    if model.is_trivial() {
        return Err(Error::TrivialModel);
    }
    Ok(model
        .atoms()
        .iter()
        .filter(|a| !a.is_zero())
        .map(|a| Factor { atom: a.clone() })
        .collect())
}

/// The factor tuple of `t`, as a bit string in factor order.
pub fn tuple_of(factors: &[Factor], t: &Term) -> Vec<bool> {
    factors.iter().map(|f| f.project(t)).collect()
}

/// Checks that the tuple map is an order embedding: tuples coincide exactly
/// on identified elements, and componentwise order is the model order.
pub fn verify_subdirect(model: &Model, guards: &Guards) -> Result<bool> {
    let n = model.universe();
    let theory = Theory::of_model(model, guards)?;
    // A trivial model is the empty product: every tuple is empty.
    let factors = if model.is_trivial() {
        Vec::new()
    } else {
        subdirect_factors(model)?
    };
    let terms = lex_masks(n);
    let tuples: Vec<Vec<bool>> = terms
        .iter()
        .map(|&m| tuple_of(&factors, &Term::from_mask(n, m)))
        .collect();
    for (i, &s) in terms.iter().enumerate() {
        for (j, &t) in terms.iter().enumerate() {
            let le = theory.le_mask(s, t);
            let ge = theory.le_mask(t, s);
            let tuple_le = tuples[i].iter().zip(&tuples[j]).all(|(a, b)| !a | b);
            if tuple_le != le || (tuples[i] == tuples[j]) != (le && ge) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::ConstantTable;
    use std::sync::Arc;

    fn abc() -> Arc<ConstantTable> {
        Arc::new(ConstantTable::new(["a", "b", "c"]).unwrap())
    }

    fn atom(t: &ConstantTable, names: &[&str]) -> Atom {
        Atom::from_names(t, names.iter().copied()).unwrap()
    }

    fn term(t: &ConstantTable, names: &[&str]) -> Term {
        Term::from_names(t, names.iter().copied()).unwrap()
    }

    #[test]
    fn factor_counts() {
        let t = abc();
        assert_eq!(
            subdirect_factors(&Model::freest(t.clone())).unwrap().len(),
            3
        );
        let m = Model::new(t.clone(), [atom(&t, &["c"]), atom(&t, &["a", "b"])], false).unwrap();
        assert_eq!(subdirect_factors(&m).unwrap().len(), 2);
        let with_zero = Model::new(
            t.clone(),
            [atom(&t, &["c"]), atom(&t, &["a", "b"]), Atom::zero(3)],
            false,
        )
        .unwrap();
        assert_eq!(subdirect_factors(&with_zero).unwrap().len(), 2);
    }

    #[test]
    fn trivial_model_rejected() {
        let t = abc();
        let z = Model::new(t, [Atom::zero(3)], false).unwrap();
        assert_eq!(subdirect_factors(&z), Err(Error::TrivialModel));
        assert!(verify_subdirect(&z, &Guards::default()).unwrap());
        assert_eq!(Factor::new(Atom::zero(3)), Err(Error::TrivialModel));
    }

    #[test]
    fn projections() {
        let t = abc();
        let fc = Factor::new(atom(&t, &["c"])).unwrap();
        assert!(factor_project(&fc, &term(&t, &["c"])));
        assert!(!factor_project(&fc, &term(&t, &["a", "b"])));
        let fab = Factor::new(atom(&t, &["a", "b"])).unwrap();
        assert!(factor_project(&fab, &term(&t, &["a", "c"])));
    }

    #[test]
    fn verify_examples() {
        let g = Guards::default();
        let t = abc();
        assert!(verify_subdirect(&Model::freest(t.clone()), &g).unwrap());
        let m = Model::new(t.clone(), [atom(&t, &["c"]), atom(&t, &["a", "b"])], false).unwrap();
        assert!(verify_subdirect(&m, &g).unwrap());
        let factors = subdirect_factors(&m).unwrap();
        assert_eq!(tuple_of(&factors, &term(&t, &["a"])), vec![false, true]);
        assert_eq!(tuple_of(&factors, &term(&t, &["b"])), vec![false, true]);
    }

    #[test]
    fn every_factor_is_surjective() {
        let t = abc();
        let m = Model::new(
            t.clone(),
            [atom(&t, &["c"]), atom(&t, &["a", "b"]), atom(&t, &["b"])],
            false,
        )
        .unwrap();
        for f in subdirect_factors(&m).unwrap() {
            let values: Vec<bool> = crate::theory::all_terms(3).map(|x| f.project(&x)).collect();
            assert!(values.contains(&true) && values.contains(&false));
        }
    }
}
