//! Model serializations.
//!
//! Text style lists atoms as `atom {a,b}` lines in canonical order (size,
//! then lexicographic). It carries no constant declaration, so reading it
//! back needs the table. Structured style is a JSON document with the
//! constants in table order and each atom as an array of names in table
//! order; it is self-contained.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::atom::Atom;
use crate::constants::ConstantTable;
use crate::cset::CSet;
use crate::error::{Error, ParseError, Result};
use crate::formats::problem::{lex_line, logical_lines, Tok};
use crate::model::Model;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Text,
    Structured,
}

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    constants: Vec<String>,
    atoms: Vec<Vec<String>>,
}

pub fn serialize_model(model: &Model, style: Style) -> String {
    let table = model.table();
    match style {
        Style::Text => model
            .atoms()
            .iter()
            .map(|a| format!("atom {}\n", a.display(table)))
            .collect(),
        Style::Structured => {
            let doc = ModelDoc {
                constants: table.names().to_vec(),
                atoms: model
                    .atoms()
                    .iter()
                    .map(|a| a.ucs().iter().map(|i| table.name(i).to_owned()).collect())
                    .collect(),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            out.push('\n');
            out
        }
    }
}

/// Reads `atom {..}` lines against a known table.
pub fn parse_model_text(text: &str, table: &Arc<ConstantTable>) -> Result<Model> {
    let mut atoms = Vec::new();
    for (line_no, content) in logical_lines(text) {
        let toks = lex_line(content, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let err = |col: usize, msg: &str| Error::from(ParseError::new(line_no, col, msg));
        let end_col = content.chars().count() + 1;
        let col_at = |i: usize| toks.get(i).map_or(end_col, |t| t.0);
        match &toks[0].1 {
            Tok::Name(k) if k == "atom" => {}
            _ => return Err(err(toks[0].0, "expected 'atom {...}'")),
        }
        if toks.get(1).map(|t| &t.1) != Some(&Tok::LBrace) {
            return Err(err(col_at(1), "expected '{'"));
        }
        let mut set = CSet::empty(table.len());
        let mut i = 2;
        loop {
            match toks.get(i) {
                Some((col, Tok::Name(name))) => {
                    let idx = table.index_of(name).ok_or_else(|| {
                        Error::from(ParseError::new(
                            line_no,
                            *col,
                            format!("undeclared constant '{name}'"),
                        ))
                    })?;
                    set.insert(idx);
                    i += 1;
                }
                Some((_, Tok::RBrace)) if set.is_empty() => {
                    return Err(err(col_at(i), "atom must name at least one constant"))
                }
                _ => return Err(err(col_at(i), "expected a constant name")),
            }
            match toks.get(i) {
                Some((_, Tok::Comma)) => i += 1,
                Some((_, Tok::RBrace)) => {
                    i += 1;
                    break;
                }
                _ => return Err(err(col_at(i), "expected ',' or '}'")),
            }
        }
        if i != toks.len() {
            return Err(err(col_at(i), "unexpected trailing input"));
        }
        atoms.push(Atom::new(set)?);
    }
    Model::new(table.clone(), atoms, false)
}

/// Reads the JSON document written by [`Style::Structured`].
pub fn parse_model_structured(text: &str) -> Result<Model> {
    let doc: ModelDoc = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    let table = Arc::new(ConstantTable::new(doc.constants)?);
    let atoms = doc
        .atoms
        .iter()
        .map(|names| Atom::from_names(&table, names.iter().map(String::as_str)))
        .collect::<Result<Vec<_>>>()?;
    Model::new(table, atoms, false)
}

/// Reads either style. Text input needs `table`; structured input, when a
/// table is given, is rebound to it by constant name.
pub fn parse_model(text: &str, table: Option<&Arc<ConstantTable>>) -> Result<Model> {
    if text.trim_start().starts_with('{') {
        let model = parse_model_structured(text)?;
        return match table {
            Some(t) => rebind(&model, t),
            None => Ok(model),
        };
    }
    match table {
        Some(t) => parse_model_text(text, t),
        None => Err(ParseError::new(1, 1, "text-style model needs a constant table").into()),
    }
}

/// The same atoms expressed over another table with the same constant names.
pub fn rebind(model: &Model, table: &Arc<ConstantTable>) -> Result<Model> {
    let from = model.table();
    if from.len() != table.len() || from.names().iter().any(|n| table.index_of(n).is_none()) {
        return Err(Error::TableMismatch);
    }
    let atoms = model
        .atoms()
        .iter()
        .map(|a| Atom::from_names(table, a.ucs().iter().map(|i| from.name(i))))
        .collect::<Result<Vec<_>>>()?;
    Model::new(table.clone(), atoms, false)
}
