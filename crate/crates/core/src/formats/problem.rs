//! The `.slt` problem language.
//!
//! ```text
//! # comment
//! constants: a b c
//! assert: a + b <= c
//! query: a <= c
//! ```
//!
//! `constants:` appears exactly once, before any `assert:` or `query:` line.
//! Names match `[A-Za-z_][A-Za-z0-9_]*`; a term is names joined by `+`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::atom::{Duple, Term};
use crate::constants::ConstantTable;
use crate::cset::CSet;
use crate::error::{Error, ParseError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub table: Arc<ConstantTable>,
    /// Deduplicated, in first-occurrence order.
    pub assertions: Vec<Duple>,
    pub queries: Vec<Duple>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Name(String),
    Plus,
    Le,
    Colon,
    LBrace,
    RBrace,
    Comma,
}

/// A token with its 1-based column.
pub(crate) type Spanned = (usize, Tok);

pub(crate) fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits one line (comment already removed) into tokens.
pub(crate) fn lex_line(line: &str, line_no: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((col, Tok::Plus));
                i += 1;
            }
            ':' => {
                out.push((col, Tok::Colon));
                i += 1;
            }
            '{' => {
                out.push((col, Tok::LBrace));
                i += 1;
            }
            '}' => {
                out.push((col, Tok::RBrace));
                i += 1;
            }
            ',' => {
                out.push((col, Tok::Comma));
                i += 1;
            }
            '<' if chars.get(i + 1) == Some(&'=') => {
                out.push((col, Tok::Le));
                i += 2;
            }
            c if is_name_start(c) => {
                let start = i;
                while i < chars.len() && is_name_char(chars[i]) {
                    i += 1;
                }
                out.push((col, Tok::Name(chars[start..i].iter().collect())));
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("unexpected character '{other}'"),
                ))
            }
        }
    }
    Ok(out)
}

/// Yields `(line_no, content)` for each line with comments and line endings
/// stripped.
pub(crate) fn logical_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().map(|(i, raw)| {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        (i + 1, content)
    })
}

struct LineParser<'a> {
    line: usize,
    toks: &'a [Spanned],
    pos: usize,
    end_col: usize,
}

impl LineParser<'_> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end_col, |t| t.0)
    }

    fn error(&self, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, col, msg)
    }

    fn term(&mut self, table: &ConstantTable) -> Result<Term, ParseError> {
        let mut set = CSet::empty(table.len());
        loop {
            match self.peek().cloned() {
                Some((col, Tok::Name(name))) => {
                    let idx = table
                        .index_of(&name)
                        .ok_or_else(|| self.error(col, format!("undeclared constant '{name}'")))?;
                    set.insert(idx);
                    self.pos += 1;
                }
                _ => return Err(self.error(self.col(), "empty term")),
            }
            match self.peek() {
                Some((_, Tok::Plus)) => self.pos += 1,
                _ => break,
            }
        }
        Ok(Term::new(set).expect("at least one name was read"))
    }

    fn duple(&mut self, table: &ConstantTable) -> Result<Duple, ParseError> {
        let left = self.term(table)?;
        match self.peek() {
            Some((_, Tok::Le)) => self.pos += 1,
            _ => return Err(self.error(self.col(), "expected '<='")),
        }
        let right = self.term(table)?;
        self.finish()?;
        Ok(Duple { left, right })
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some((col, _)) => Err(self.error(*col, "unexpected trailing input")),
        }
    }
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut table: Option<Arc<ConstantTable>> = None;
    let mut assertions = Vec::new();
    let mut seen = HashSet::new();
    let mut queries = Vec::new();

    for (line_no, content) in logical_lines(text) {
        let toks = lex_line(content, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let keyword = match (&toks[0], toks.get(1)) {
            ((_, Tok::Name(k)), Some((_, Tok::Colon))) => k.as_str(),
            ((col, _), _) => {
                return Err(ParseError::new(
                    line_no,
                    *col,
                    "expected 'constants:', 'assert:' or 'query:'",
                )
                .into())
            }
        };
        let mut p = LineParser {
            line: line_no,
            toks: &toks,
            pos: 2,
            end_col: content.chars().count() + 1,
        };
        match keyword {
            "constants" => {
                if table.is_some() {
                    return Err(p
                        .error(toks[0].0, "duplicate 'constants:' declaration")
                        .into());
                }
                let mut names = Vec::new();
                let mut declared = HashSet::new();
                while let Some((col, tok)) = p.peek().cloned() {
                    let Tok::Name(name) = tok else {
                        return Err(p.error(col, "expected a constant name").into());
                    };
                    if !declared.insert(name.clone()) {
                        return Err(p.error(col, format!("duplicate constant '{name}'")).into());
                    }
                    names.push(name);
                    p.pos += 1;
                }
                if names.is_empty() {
                    return Err(p
                        .error(p.col(), "'constants:' needs at least one name")
                        .into());
                }
                table = Some(Arc::new(ConstantTable::new(names)?));
            }
            "assert" | "query" => {
                let Some(t) = table.as_ref() else {
                    return Err(p
                        .error(toks[0].0, format!("'{keyword}:' before 'constants:'"))
                        .into());
                };
                let d = p.duple(t)?;
                if keyword == "query" {
                    queries.push(d);
                } else if seen.insert(d.clone()) {
                    assertions.push(d);
                }
            }
            _ => {
                return Err(p
                    .error(toks[0].0, "expected 'constants:', 'assert:' or 'query:'")
                    .into())
            }
        }
    }

    let table = table
        .ok_or_else(|| Error::from(ParseError::new(1, 1, "missing 'constants:' declaration")))?;
    Ok(Problem {
        table,
        assertions,
        queries,
    })
}

/// Writes a problem back in `.slt` form; [`parse_problem`] reads it back to
/// an equal value.
pub fn serialize_problem(problem: &Problem) -> String {
    let t = &problem.table;
    let mut out = format!("constants: {}\n", t.names().join(" "));
    for d in &problem.assertions {
        out.push_str(&format!("assert: {}\n", d.display(t)));
    }
    for d in &problem.queries {
        out.push_str(&format!("query: {}\n", d.display(t)));
    }
    out
}
