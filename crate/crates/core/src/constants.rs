use std::collections::HashMap;
use std::fmt;

use crate::cset::CSet;
use crate::error::{Error, Result};

/// Interned constant names. Index `i` is the `i`-th name in declaration order;
/// the table fixes the universe every set, atom and term is bound to.
#[derive(Clone)]
pub struct ConstantTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl ConstantTable {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = ConstantTable {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for (pos, name) in names.into_iter().enumerate() {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::EmptyConstantName(pos));
            }
            if table.index.contains_key(&name) {
                return Err(Error::DuplicateConstant(name));
            }
            table.index.insert(name.clone(), pos);
            table.names.push(name);
        }
        if table.names.is_empty() {
            return Err(Error::EmptyTable);
        }
        Ok(table)
    }

    /// `n` constants named `c0..c{n-1}`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("c{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownConstant(name.to_owned()))
    }

    /// The set of the named constants.
    pub fn set_of<'a, I>(&self, names: I) -> Result<CSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = CSet::empty(self.len());
        for name in names {
            set.insert(self.lookup(name)?);
        }
        Ok(set)
    }

    pub fn full_set(&self) -> CSet {
        CSet::full(self.len())
    }

    /// Renders a set as `{a,b}`.
    pub fn format_set(&self, set: &CSet) -> String {
        let mut out = String::from("{");
        for (k, i) in set.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.name(i));
        }
        out.push('}');
        out
    }

    /// Renders a set as the join `a + b`.
    pub fn format_join(&self, set: &CSet) -> String {
        set.iter()
            .map(|i| self.name(i))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl PartialEq for ConstantTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for ConstantTable {}

impl fmt::Debug for ConstantTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("ConstantTable").field(&self.names).finish()
    }
}
