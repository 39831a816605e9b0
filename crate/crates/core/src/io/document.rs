//! Algebra presentations as TOML documents.
//!
//! ```toml
//! name = "heisenberg"
//! kind = "lie"
//! basis = ["x", "y", "z"]
//!
//! [[brackets]]
//! left = "x"
//! right = "y"
//! terms = [["z", "1"]]
//! ```
//!
//! Brackets that are not listed are zero. Coefficients are strings holding
//! an integer or a fraction `p/q`. An `lm` document also lists
//! `module_basis`, the right action as `[[action]]` entries
//! (`[module, algebra] = terms`) and the structure map as `[[delta]]`
//! entries (`delta(module) = terms`).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linear::{LinearMap, Vector};
use crate::lm::{lm_from_leibniz, LmLieAlgebra};
use crate::right_module::RightModule;
use crate::scalar::{format_rational, parse_rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Leibniz,
    Lie,
    Lm,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Leibniz => "leibniz",
            Kind::Lie => "lie",
            Kind::Lm => "lm",
        })
    }
}

/// `(label, coefficient)` pairs.
pub type Terms = Vec<(String, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Terms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub module: String,
    pub algebra: String,
    pub terms: Terms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaEntry {
    pub module: String,
    pub terms: Terms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub name: String,
    pub kind: Kind,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub module_basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub action: Vec<ActionEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub delta: Vec<DeltaEntry>,
}

/// Reads and validates a document.
pub fn parse_input(path: impl AsRef<Path>) -> Result<InputDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_str(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_str(text: &str) -> Result<InputDocument> {
    let doc: InputDocument = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.validate()?;
    Ok(doc)
}

fn terms_of(v: &Vector, names: &[String]) -> Terms {
    v.iter()
        .map(|(i, c)| (names[*i].clone(), format_rational(c)))
        .collect()
}

fn index(labels: &[String]) -> HashMap<&str, usize> {
    labels
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect()
}

fn unique(labels: &[String], field: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() {
            return Err(Error::Validation(format!("{field}: empty label")));
        }
        if !seen.insert(l) {
            return Err(Error::Validation(format!(
                "{field}: duplicate label \"{l}\""
            )));
        }
    }
    Ok(())
}

fn lookup(labels: &HashMap<&str, usize>, label: &str, field: &str) -> Result<usize> {
    labels
        .get(label)
        .copied()
        .ok_or_else(|| Error::Validation(format!("{field}: unknown label \"{label}\"")))
}

fn vector(labels: &HashMap<&str, usize>, terms: &Terms, field: &str) -> Result<Vector> {
    let mut out = Vector::zero();
    for (k, (label, coeff)) in terms.iter().enumerate() {
        let field = format!("{field}.terms[{k}]");
        let i = lookup(labels, label, &field)?;
        let c = parse_rational(coeff)
            .map_err(|_| Error::Validation(format!("{field}: malformed rational \"{coeff}\"")))?;
        out.add_term(i, c);
    }
    Ok(out)
}

impl InputDocument {
    pub fn from_algebra(name: &str, kind: Kind, g: &Algebra) -> Self {
        let names = g.names();
        Self {
            name: name.to_string(),
            kind,
            basis: names.to_vec(),
            module_basis: Vec::new(),
            brackets: g
                .entries()
                .map(|(i, j, v)| BracketEntry {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    terms: terms_of(v, names),
                })
                .collect(),
            action: Vec::new(),
            delta: Vec::new(),
        }
    }

    pub fn from_lm(name: &str, a: &LmLieAlgebra) -> Self {
        let mut doc = Self::from_algebra(name, Kind::Lm, a.g());
        let g_names = a.g().names();
        let m_names = a.module().names();
        doc.module_basis = m_names.to_vec();
        doc.action = a
            .module()
            .entries()
            .map(|(v, i, w)| ActionEntry {
                module: m_names[v].clone(),
                algebra: g_names[i].clone(),
                terms: terms_of(w, m_names),
            })
            .collect();
        doc.delta = (0..a.module().dim())
            .filter(|&v| !a.delta().column(v).is_zero())
            .map(|v| DeltaEntry {
                module: m_names[v].clone(),
                terms: terms_of(a.delta().column(v), g_names),
            })
            .collect();
        doc
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("documents always serialize")
    }

    /// Checks labels, coefficients and kind-specific fields.
    pub fn validate(&self) -> Result<()> {
        unique(&self.basis, "basis")?;
        unique(&self.module_basis, "module_basis")?;
        if self.kind != Kind::Lm
            && (!self.module_basis.is_empty() || !self.action.is_empty() || !self.delta.is_empty())
        {
            return Err(Error::Validation(format!(
                "module_basis, action and delta are only allowed in lm documents, not {}",
                self.kind
            )));
        }
        self.algebra()?;
        if self.kind == Kind::Lm {
            self.lm_parts()?;
        }
        Ok(())
    }

    /// The bracket table.
    pub fn algebra(&self) -> Result<Algebra> {
        let labels = index(&self.basis);
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (k, b) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{k}]");
            let i = lookup(&labels, &b.left, &format!("{field}.left"))?;
            let j = lookup(&labels, &b.right, &format!("{field}.right"))?;
            if !seen.insert((i, j)) {
                return Err(Error::Validation(format!(
                    "{field}: bracket [{}, {}] is given twice",
                    b.left, b.right
                )));
            }
            entries.push((i, j, vector(&labels, &b.terms, &field)?));
        }
        Algebra::from_entries(self.basis.clone(), entries)
    }

    /// Builds the parts of an `lm` document without checking any axiom.
    pub fn lm_parts(&self) -> Result<LmLieAlgebra> {
        let g = self.algebra()?;
        let g_labels = index(&self.basis);
        let m_labels = index(&self.module_basis);
        let mut seen = BTreeSet::new();
        let mut entries = Vec::new();
        for (k, a) in self.action.iter().enumerate() {
            let field = format!("action[{k}]");
            let v = lookup(&m_labels, &a.module, &format!("{field}.module"))?;
            let i = lookup(&g_labels, &a.algebra, &format!("{field}.algebra"))?;
            if !seen.insert((v, i)) {
                return Err(Error::Validation(format!(
                    "{field}: action [{}, {}] is given twice",
                    a.module, a.algebra
                )));
            }
            entries.push((v, i, vector(&m_labels, &a.terms, &field)?));
        }
        let module = RightModule::from_entries(self.module_basis.clone(), g.dim(), entries)?;
        let mut columns = vec![Vector::zero(); self.module_basis.len()];
        let mut seen = BTreeSet::new();
        for (k, d) in self.delta.iter().enumerate() {
            let field = format!("delta[{k}]");
            let v = lookup(&m_labels, &d.module, &format!("{field}.module"))?;
            if !seen.insert(v) {
                return Err(Error::Validation(format!(
                    "{field}: delta({}) is given twice",
                    d.module
                )));
            }
            columns[v] = vector(&g_labels, &d.terms, &field)?;
        }
        let delta = LinearMap::from_columns(g.dim(), columns);
        LmLieAlgebra::from_parts_unchecked(g, module, delta)
    }

    /// The Lie algebra in LM the document describes: the structure map of
    /// a Leibniz algebra onto its liezation, `(g -> g)` with the identity
    /// for a Lie algebra, or the explicit data of an `lm` document.
    pub fn lm_algebra(&self) -> Result<LmLieAlgebra> {
        match self.kind {
            Kind::Leibniz => lm_from_leibniz(&self.algebra()?),
            Kind::Lie => LmLieAlgebra::identity(&self.algebra()?),
            Kind::Lm => {
                let parts = self.lm_parts()?;
                LmLieAlgebra::new(
                    parts.g().clone(),
                    parts.module().clone(),
                    parts.delta().clone(),
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const HEISENBERG: &str = r#"
name = "heisenberg"
kind = "lie"
basis = ["x", "y", "z"]

[[brackets]]
left = "x"
right = "y"
terms = [["z", "1"]]

[[brackets]]
left = "y"
right = "x"
terms = [["z", "-1"]]
"#;

    #[test]
    fn heisenberg_document() {
        let doc = parse_str(HEISENBERG).unwrap();
        assert_eq!(doc.kind, Kind::Lie);
        assert_eq!(doc.algebra().unwrap(), catalog::heisenberg());
    }

    #[test]
    fn unknown_label_is_named() {
        let text = HEISENBERG.replace("[[\"z\", \"1\"]]", "[[\"w\", \"1\"]]");
        match parse_str(&text) {
            Err(Error::Validation(msg)) => assert!(msg.contains("\"w\""), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_brackets_is_abelian() {
        let doc =
            parse_str("name = \"a\"\nkind = \"lie\"\nbasis = [\"p\", \"q\"]\nbrackets = []\n")
                .unwrap();
        assert!(doc.algebra().unwrap().is_abelian());
    }

    #[test]
    fn malformed_inputs() {
        let decimal = HEISENBERG.replace("\"-1\"", "\"-0.5\"");
        assert!(
            matches!(parse_str(&decimal), Err(Error::Validation(m)) if m.contains("malformed rational"))
        );
        let dup = HEISENBERG.replace("[\"x\", \"y\", \"z\"]", "[\"x\", \"y\", \"x\"]");
        assert!(matches!(parse_str(&dup), Err(Error::Validation(m)) if m.contains("duplicate")));
        let float = HEISENBERG.replace("\"-1\"", "-1.0");
        assert!(matches!(parse_str(&float), Err(Error::Parse(_))));
        let stray = format!("{HEISENBERG}\nmodule_basis = [\"m\"]\n");
        assert!(parse_str(&stray).is_err());
    }

    #[test]
    fn roundtrip() {
        let docs = [
            InputDocument::from_algebra("sl2", Kind::Lie, &catalog::sl2()),
            InputDocument::from_algebra("square", Kind::Leibniz, &catalog::leibniz_square()),
            InputDocument::from_lm("sl2-standard", &catalog::sl2_standard_lm()),
            InputDocument::from_lm("heisenberg-adjoint", &catalog::heisenberg_adjoint()),
        ];
        for doc in docs {
            let again = parse_str(&doc.to_toml()).unwrap();
            assert_eq!(again, doc);
        }
        let doc = InputDocument::from_lm("h", &catalog::heisenberg_adjoint());
        assert_eq!(doc.lm_algebra().unwrap(), catalog::heisenberg_adjoint());
    }
}
