//! JSON documents: group specifications, character tables and the
//! bundled tables.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::charmod::{CharacterTable, ClassFunction};
use crate::cyclotomic::{Cyclotomic, CyclotomicRepr};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Permutation, Subgroup, DEFAULT_ORDER_CAP};

/// A group given by permutation generators in cycle notation, by a Cayley
/// table (`table[i][j]` = index of `g_i g_j`), or by the name of a bundled table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GroupSpec {
    Bundled {
        bundled: String,
    },
    Generators {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        generators: Vec<String>,
    },
    Table {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        table: Vec<Vec<usize>>,
    },
}

/// An element: a permutation in cycle notation or an index into a Cayley table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Cycles(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CharacterEntry {
    pub name: String,
    pub values: Vec<CyclotomicRepr>,
}

/// A character table with one representative per conjugacy class and one
/// value per class for each irreducible character, trivial character first.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TableDocument {
    pub name: String,
    pub group: GroupSpec,
    pub classes: Vec<ElementRef>,
    pub characters: Vec<CharacterEntry>,
}

pub const BUNDLED: &[(&str, &str)] = &[
    ("C1", include_str!("../data/tables/C1.json")),
    ("C2", include_str!("../data/tables/C2.json")),
    ("C3", include_str!("../data/tables/C3.json")),
    ("C4", include_str!("../data/tables/C4.json")),
    ("C5", include_str!("../data/tables/C5.json")),
    ("C6", include_str!("../data/tables/C6.json")),
    ("C7", include_str!("../data/tables/C7.json")),
    ("C8", include_str!("../data/tables/C8.json")),
    ("C9", include_str!("../data/tables/C9.json")),
    ("C10", include_str!("../data/tables/C10.json")),
    ("C11", include_str!("../data/tables/C11.json")),
    ("C12", include_str!("../data/tables/C12.json")),
    ("S3", include_str!("../data/tables/S3.json")),
    ("S4", include_str!("../data/tables/S4.json")),
    ("D8", include_str!("../data/tables/D8.json")),
    ("Q8", include_str!("../data/tables/Q8.json")),
    ("A4", include_str!("../data/tables/A4.json")),
    ("C2xC2", include_str!("../data/tables/C2xC2.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

pub fn bundled_document(name: &str) -> Result<TableDocument> {
    let text = BUNDLED
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Schema(format!("no bundled table named {name:?} (have {})", bundled_names().join(", "))))?;
    serde_json::from_str(text).map_err(|e| Error::Schema(format!("bundled table {name}: {e}")))
}

/// A bundled table bound to a freshly built copy of its group.
pub fn bundled_table(name: &str) -> Result<CharacterTable> {
    bundled_document(name)?.load()
}

/// Builds the group; bundled specs also return their table.
pub fn load_group(spec: &GroupSpec) -> Result<(Arc<FiniteGroup>, Option<CharacterTable>)> {
    load_group_named(spec, "G")
}

/// As [`load_group`], naming an unnamed group `default`.
pub fn load_group_named(spec: &GroupSpec, default: &str) -> Result<(Arc<FiniteGroup>, Option<CharacterTable>)> {
    match spec {
        GroupSpec::Bundled { bundled } => {
            let t = bundled_table(bundled)?;
            Ok((t.group().ambient().clone(), Some(t)))
        }
        GroupSpec::Generators { name, generators } => {
            let perms = generators.iter().map(|s| Permutation::parse_cycles(s)).collect::<Result<Vec<_>>>()?;
            let g = FiniteGroup::from_permutations(name.as_deref().unwrap_or(default), &perms, DEFAULT_ORDER_CAP)?;
            Ok((g, None))
        }
        GroupSpec::Table { name, table } => Ok((FiniteGroup::from_table(name.as_deref().unwrap_or(default), table)?, None)),
    }
}

pub fn resolve_element(g: &FiniteGroup, e: &ElementRef) -> Result<Elem> {
    match e {
        ElementRef::Index(i) => {
            if g.permutation(g.identity()).is_some() {
                return Err(Error::Schema("permutation groups take elements in cycle notation".into()));
            }
            if *i >= g.order() {
                return Err(Error::Schema(format!("element index {i} out of range")));
            }
            Ok(*i as Elem)
        }
        ElementRef::Cycles(s) => {
            let p = Permutation::parse_cycles(s)?;
            g.find_permutation(&p).ok_or_else(|| Error::Schema(format!("{s} is not an element of the group")))
        }
    }
}

fn element_ref(g: &FiniteGroup, e: Elem) -> ElementRef {
    match g.permutation(e) {
        Some(p) => ElementRef::Cycles(p.to_string()),
        None => ElementRef::Index(e as usize),
    }
}

impl TableDocument {
    /// Builds the document's own group and binds the table to it.
    pub fn load(&self) -> Result<CharacterTable> {
        let (g, _) = match &self.group {
            GroupSpec::Bundled { bundled } => {
                let t = bundled_table(bundled)?;
                (t.group().ambient().clone(), ())
            }
            spec => (load_group_named(spec, &self.name)?.0, ()),
        };
        self.bind(&g)
    }

    /// Binds the table to `g` through its class representatives and validates it.
    pub fn bind(&self, g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
        let full = Subgroup::full(g);
        let ncl = full.conjugacy_classes().len();
        if self.classes.len() != ncl {
            return Err(Error::CharacterTable(format!("{} class representatives for {} classes", self.classes.len(), ncl)));
        }
        let mut order = vec![usize::MAX; ncl];
        for (j, e) in self.classes.iter().enumerate() {
            let k = full.class_index(resolve_element(g, e)?);
            if order[k] != usize::MAX {
                return Err(Error::CharacterTable(format!("representatives {} and {} are conjugate", order[k], j)));
            }
            order[k] = j;
        }
        let mut irr = Vec::new();
        let mut names = Vec::new();
        for c in &self.characters {
            if c.values.len() != ncl {
                return Err(Error::CharacterTable(format!("character {} has {} values", c.name, c.values.len())));
            }
            let vals: Vec<Cyclotomic> = c.values.iter().map(CyclotomicRepr::to_cyclotomic).collect::<Result<_>>()?;
            irr.push(ClassFunction::new(&full, order.iter().map(|&j| vals[j].clone()).collect())?);
            names.push(c.name.clone());
        }
        CharacterTable::new(irr, names)
    }

    /// Canonical document for a table: classes in internal order, values in
    /// canonical cyclotomic form.
    pub fn from_table(name: &str, group: GroupSpec, table: &CharacterTable) -> TableDocument {
        let full = table.group();
        let amb = full.ambient();
        let cc = full.conjugacy_classes();
        TableDocument {
            name: name.to_string(),
            group,
            classes: (0..cc.len()).map(|i| element_ref(amb, cc.rep(i))).collect(),
            characters: table
                .irr()
                .iter()
                .zip(table.names())
                .map(|(chi, n)| CharacterEntry {
                    name: n.clone(),
                    values: chi.values().iter().map(CyclotomicRepr::from_cyclotomic).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_tables_validate() {
        for name in bundled_names() {
            let t = bundled_table(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            let degrees: i64 = t.degrees().iter().map(|d| d * d).sum();
            assert_eq!(degrees as usize, t.group().order(), "{name}");
        }
    }

    #[test]
    fn canonical_round_trip() {
        for name in bundled_names() {
            let doc = bundled_document(name).unwrap();
            let t = doc.load().unwrap();
            let canon = TableDocument::from_table(name, doc.group.clone(), &t);
            let text = serde_json::to_string(&canon).unwrap();
            let back: TableDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, canon);
            let again = TableDocument::from_table(name, back.group.clone(), &back.load().unwrap());
            assert_eq!(again, canon);
        }
    }

    #[test]
    fn rejects_bad_binding() {
        let mut doc = bundled_document("S3").unwrap();
        doc.classes[1] = ElementRef::Cycles("(1,3)".into());
        doc.classes[2] = ElementRef::Cycles("(2,3)".into());
        assert!(matches!(doc.load(), Err(Error::CharacterTable(_))));
        let mut doc = bundled_document("S3").unwrap();
        doc.characters[2].values[2] = CyclotomicRepr::Int(1);
        assert!(doc.load().is_err());
    }

    #[test]
    fn cayley_table_groups() {
        let spec: GroupSpec = serde_json::from_str(r#"{"table": [[0,1],[1,0]]}"#).unwrap();
        let (g, _) = load_group(&spec).unwrap();
        let doc = TableDocument {
            name: "C2".into(),
            group: spec,
            classes: vec![ElementRef::Index(0), ElementRef::Index(1)],
            characters: vec![
                CharacterEntry { name: "1".into(), values: vec![CyclotomicRepr::Int(1), CyclotomicRepr::Int(1)] },
                CharacterEntry { name: "s".into(), values: vec![CyclotomicRepr::Int(1), CyclotomicRepr::Int(-1)] },
            ],
        };
        assert_eq!(doc.bind(&g).unwrap().len(), 2);
    }
}
