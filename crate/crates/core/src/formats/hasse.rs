//! Hasse diagrams of model elements in DOT.

use std::fmt::Write;

use crate::atom::Term;
use crate::error::Result;
use crate::guard::Guards;
use crate::model::Model;
use crate::theory::{lex_masks, Theory};

/// Distinct elements of a model and the covering relation between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    /// Smallest term naming each element (by size, then lexicographic), in
    /// that same order.
    pub nodes: Vec<Term>,
    /// `(lower, upper)` node indices where `upper` covers `lower`.
    pub edges: Vec<(usize, usize)>,
    closures: Vec<u64>,
}

impl HasseDiagram {
    pub fn of(model: &Model, guards: &Guards) -> Result<HasseDiagram> {
        let n = model.universe();
        let theory = Theory::of_model(model, guards)?;
        // Two terms name the same element exactly when their closures agree.
        let mut masks = lex_masks(n);
        masks.sort_by_key(|m| m.count_ones());
        let mut seen = std::collections::HashMap::new();
        let mut nodes = Vec::new();
        let mut closures = Vec::new();
        for m in masks {
            let cl = theory.closure_mask(m);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(cl) {
                e.insert(nodes.len());
                nodes.push(Term::from_mask(n, m));
                closures.push(cl);
            }
        }
        let below = |i: usize, j: usize| i != j && closures[i] & !closures[j] == 0;
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in 0..nodes.len() {
                if below(i, j) && !(0..nodes.len()).any(|k| below(i, k) && below(k, j)) {
                    edges.push((i, j));
                }
            }
        }
        Ok(HasseDiagram {
            nodes,
            edges,
            closures,
        })
    }

    /// Strict order between nodes.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        i != j && self.closures[i] & !self.closures[j] == 0
    }

    pub fn to_dot(&self, model: &Model) -> String {
        let table = model.table();
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let label = t.display(table);
            let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        }
        for (i, j) in &self.edges {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn hasse_dot(model: &Model, guards: &Guards) -> Result<String> {
    Ok(HasseDiagram::of(model, guards)?.to_dot(model))
}
