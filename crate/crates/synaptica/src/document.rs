//! JSON workspace files.
//!
//! A file holds one document object or an array of them. Every document has a
//! `kind` tag and an optional `label`; elements of finite structures are
//! referred to by their string labels.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;
use serde_json::Value;

use synaptica_core::{EffectTable, FinitePoset, FnElement, MvTable, SymMatrix};

pub const KINDS: [&str; 7] = [
    "poset",
    "ortholattice",
    "effect_algebra",
    "mv_algebra",
    "sym_matrix",
    "function_algebra",
    "state",
];

/// Problems that make a file unusable (exit status 2).
#[derive(Debug, Clone, PartialEq)]
pub enum LoadError {
    Io(String),
    Parse(String),
    UnknownKind(String),
    Schema { document: String, message: String },
    DuplicateLabel(String),
    UnknownLabel(String),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(m) => write!(f, "cannot read file: {m}"),
            LoadError::Parse(m) => write!(f, "malformed document: {m}"),
            LoadError::UnknownKind(k) => write!(f, "unknown kind {k:?}"),
            LoadError::Schema { document, message } => write!(f, "{document}: {message}"),
            LoadError::DuplicateLabel(l) => write!(f, "label {l:?} is used twice"),
            LoadError::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
        }
    }
}

impl std::error::Error for LoadError {}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetBody {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrtholatticeBody {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
    pub perp: Vec<[String; 2]>,
    pub zero: String,
    pub one: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EffectAlgebraBody {
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    #[serde(default)]
    pub osum: Vec<[String; 3]>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MvAlgebraBody {
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    pub plus: Vec<[String; 3]>,
    pub perp: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymMatrixBody {
    pub n: usize,
    pub entries: Vec<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionAlgebraBody {
    pub points: Vec<String>,
    #[serde(default)]
    pub values: serde_json::Map<String, Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateBody {
    pub over: String,
    pub table: Option<serde_json::Map<String, Value>>,
    pub vector: Option<Vec<f64>>,
    pub density: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Poset(PosetBody),
    Ortholattice(OrtholatticeBody),
    EffectAlgebra(EffectAlgebraBody),
    MvAlgebra(MvAlgebraBody),
    SymMatrix(SymMatrixBody),
    FunctionAlgebra(FunctionAlgebraBody),
    State(StateBody),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Poset(_) => "poset",
            Body::Ortholattice(_) => "ortholattice",
            Body::EffectAlgebra(_) => "effect_algebra",
            Body::MvAlgebra(_) => "mv_algebra",
            Body::SymMatrix(_) => "sym_matrix",
            Body::FunctionAlgebra(_) => "function_algebra",
            Body::State(_) => "state",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    /// The declared label, or `#i` for the i-th unlabeled document.
    pub label: String,
    pub body: Body,
}

/// The values a state document assigns.
#[derive(Debug, Clone, PartialEq)]
pub enum StateValues {
    Table(Vec<f64>),
    Vector(Vec<f64>),
    Density(Vec<f64>),
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub documents: Vec<Document>,
}

/// Parses a file's text into documents, checking kinds and label uniqueness.
pub fn parse(text: &str) -> Result<Workspace, LoadError> {
    let value: Value = serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
    let items = match value {
        Value::Array(items) => items,
        v @ Value::Object(_) => vec![v],
        _ => {
            return Err(LoadError::Parse(
                "expected an object or an array of objects".into(),
            ))
        }
    };
    let mut documents = Vec::with_capacity(items.len());
    let mut seen = BTreeSet::new();
    for (i, mut item) in items.into_iter().enumerate() {
        let Value::Object(map) = &mut item else {
            return Err(LoadError::Parse(format!("document {i} is not an object")));
        };
        let kind = match map.get("kind") {
            Some(Value::String(k)) => k.clone(),
            Some(_) => {
                return Err(LoadError::Parse(format!(
                    "document {i}: kind must be a string"
                )))
            }
            None => return Err(LoadError::Parse(format!("document {i}: missing kind"))),
        };
        if !KINDS.contains(&kind.as_str()) {
            return Err(LoadError::UnknownKind(kind));
        }
        let label = match map.remove("label") {
            None => format!("#{i}"),
            Some(Value::String(l)) => l,
            Some(_) => {
                return Err(LoadError::Parse(format!(
                    "document {i}: label must be a string"
                )))
            }
        };
        let body: Body = serde_json::from_value(item).map_err(|e| LoadError::Schema {
            document: label.clone(),
            message: e.to_string(),
        })?;
        if !seen.insert(label.clone()) {
            return Err(LoadError::DuplicateLabel(label));
        }
        if let Body::FunctionAlgebra(f) = &body {
            for key in f.values.keys() {
                if !seen.insert(key.clone()) {
                    return Err(LoadError::DuplicateLabel(key.clone()));
                }
            }
        }
        documents.push(Document { label, body });
    }
    Ok(Workspace { documents })
}

pub fn load(path: &std::path::Path) -> Result<Workspace, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn schema(document: &str, message: impl Into<String>) -> LoadError {
    LoadError::Schema {
        document: document.to_string(),
        message: message.into(),
    }
}

/// Element labels with index lookup; rejects duplicates.
#[derive(Debug, Clone)]
pub struct Labels {
    document: String,
    names: Vec<String>,
}

impl Labels {
    pub fn new(document: &str, names: &[String]) -> Result<Self, LoadError> {
        if names.is_empty() {
            return Err(schema(document, "no elements"));
        }
        for (i, l) in names.iter().enumerate() {
            if names[..i].contains(l) {
                return Err(schema(document, format!("element {l:?} is listed twice")));
            }
        }
        Ok(Labels {
            document: document.to_string(),
            names: names.to_vec(),
        })
    }

    pub fn index(&self, name: &str) -> Result<usize, LoadError> {
        self.names
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| schema(&self.document, format!("unknown element {name:?}")))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    fn pairs(&self, pairs: &[[String; 2]]) -> Result<Vec<(usize, usize)>, LoadError> {
        pairs
            .iter()
            .map(|[a, b]| Ok((self.index(a)?, self.index(b)?)))
            .collect()
    }

    fn triples(&self, triples: &[[String; 3]]) -> Result<Vec<(usize, usize, usize)>, LoadError> {
        triples
            .iter()
            .map(|[a, b, c]| Ok((self.index(a)?, self.index(b)?, self.index(c)?)))
            .collect()
    }

    /// A total map given as `[x, f(x)]` pairs.
    fn map(&self, what: &str, pairs: &[[String; 2]]) -> Result<Vec<usize>, LoadError> {
        let mut out = vec![None; self.len()];
        for (a, b) in self.pairs(pairs)? {
            match out[a] {
                Some(prev) if prev != b => {
                    return Err(schema(
                        &self.document,
                        format!("{what} of {:?} given twice", self.names[a]),
                    ))
                }
                _ => out[a] = Some(b),
            }
        }
        out.iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    schema(
                        &self.document,
                        format!("{what} of {:?} missing", self.names[i]),
                    )
                })
            })
            .collect()
    }
}

/// The order relation as a raw closed relation: generating pairs plus
/// reflexive-transitive closure. Antisymmetry is left to the checker.
pub fn poset_parts(
    label: &str,
    elements: &[String],
    leq: &[[String; 2]],
) -> Result<(Labels, Vec<(usize, usize)>), LoadError> {
    let labels = Labels::new(label, elements)?;
    let pairs = labels.pairs(leq)?;
    Ok((labels, pairs))
}

pub fn build_poset(
    labels: &Labels,
    pairs: &[(usize, usize)],
) -> synaptica_core::Result<FinitePoset> {
    FinitePoset::from_pairs(labels.len(), pairs)?.with_labels(labels.names().to_vec())
}

pub struct OrtholatticeParts {
    pub labels: Labels,
    pub pairs: Vec<(usize, usize)>,
    pub perp: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

pub fn ortholattice_parts(
    label: &str,
    body: &OrtholatticeBody,
) -> Result<OrtholatticeParts, LoadError> {
    let (labels, pairs) = poset_parts(label, &body.elements, &body.leq)?;
    let perp = labels.map("orthocomplement", &body.perp)?;
    let zero = labels.index(&body.zero)?;
    let one = labels.index(&body.one)?;
    Ok(OrtholatticeParts {
        labels,
        pairs,
        perp,
        zero,
        one,
    })
}

pub fn effect_table(
    label: &str,
    body: &EffectAlgebraBody,
) -> Result<(Labels, EffectTable), LoadError> {
    let labels = Labels::new(label, &body.elements)?;
    let triples = labels.triples(&body.osum)?;
    let table = EffectTable::from_triples(
        labels.names().to_vec(),
        labels.index(&body.zero)?,
        labels.index(&body.one)?,
        &triples,
    )
    .map_err(|e| schema(label, e.to_string()))?;
    Ok((labels, table))
}

pub fn mv_table(label: &str, body: &MvAlgebraBody) -> Result<(Labels, MvTable), LoadError> {
    let labels = Labels::new(label, &body.elements)?;
    let n = labels.len();
    let mut plus = vec![None; n * n];
    for (x, y, z) in labels.triples(&body.plus)? {
        match plus[x * n + y] {
            Some(prev) if prev != z => {
                return Err(schema(
                    label,
                    format!(
                        "sum of {:?} and {:?} given twice",
                        labels.name(x),
                        labels.name(y)
                    ),
                ))
            }
            _ => plus[x * n + y] = Some(z),
        }
    }
    if let Some(i) = plus.iter().position(Option::is_none) {
        return Err(schema(
            label,
            format!(
                "sum of {:?} and {:?} missing",
                labels.name(i / n),
                labels.name(i % n)
            ),
        ));
    }
    let table = MvTable {
        labels: labels.names().to_vec(),
        zero: labels.index(&body.zero)?,
        one: labels.index(&body.one)?,
        plus: plus.into_iter().map(Option::unwrap).collect(),
        perp: labels.map("complement", &body.perp)?,
    };
    Ok((labels, table))
}

/// Shape checks only; symmetry is a law, checked by the caller.
pub fn sym_entries(label: &str, body: &SymMatrixBody) -> Result<(), LoadError> {
    if body.n == 0 {
        return Err(schema(label, "n must be positive"));
    }
    if body.entries.len() != body.n * body.n {
        return Err(schema(
            label,
            format!(
                "expected {} entries, found {}",
                body.n * body.n,
                body.entries.len()
            ),
        ));
    }
    Ok(())
}

pub fn sym_matrix(
    label: &str,
    body: &SymMatrixBody,
) -> Result<synaptica_core::Result<SymMatrix>, LoadError> {
    sym_entries(label, body)?;
    Ok(SymMatrix::new(body.n, body.entries.clone()))
}

/// The named elements of a function algebra, in file order.
pub fn functions(
    label: &str,
    body: &FunctionAlgebraBody,
) -> Result<Vec<(String, FnElement)>, LoadError> {
    Labels::new(label, &body.points)?;
    let n = body.points.len();
    if n > 16 {
        return Err(schema(label, "at most 16 points are supported"));
    }
    body.values
        .iter()
        .map(|(name, v)| {
            let values: Vec<f64> = serde_json::from_value(v.clone())
                .map_err(|e| schema(label, format!("{name}: {e}")))?;
            if values.len() != n {
                return Err(schema(
                    label,
                    format!("{name}: expected {n} values, found {}", values.len()),
                ));
            }
            Ok((name.clone(), FnElement::new(values)))
        })
        .collect()
}

pub fn state_values(
    label: &str,
    body: &StateBody,
    target: &Labels,
) -> Result<StateValues, LoadError> {
    match (&body.table, &body.vector, &body.density) {
        (Some(table), None, None) => {
            let mut out = vec![None; target.len()];
            for (k, v) in table {
                let i = target.index(k)?;
                out[i] = Some(
                    v.as_f64()
                        .ok_or_else(|| schema(label, format!("{k}: not a number")))?,
                );
            }
            out.iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| schema(label, format!("no value for {:?}", target.name(i))))
                })
                .collect::<Result<_, _>>()
                .map(StateValues::Table)
        }
        (None, Some(v), None) => Ok(StateValues::Vector(v.clone())),
        (None, None, Some(d)) => Ok(StateValues::Density(d.clone())),
        _ => Err(schema(
            label,
            "exactly one of table, vector or density is required",
        )),
    }
}

impl Workspace {
    pub fn get(&self, label: &str) -> Result<&Document, LoadError> {
        self.documents
            .iter()
            .find(|d| d.label == label)
            .ok_or_else(|| LoadError::UnknownLabel(label.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_and_array() {
        let one = parse(r#"{"kind":"sym_matrix","label":"a","n":1,"entries":[2.0]}"#).unwrap();
        assert_eq!(one.documents.len(), 1);
        let two = parse(
            r#"[{"kind":"sym_matrix","n":1,"entries":[2.0]},{"kind":"poset","elements":["x"]}]"#,
        )
        .unwrap();
        assert_eq!(two.documents[1].label, "#1");
    }

    #[test]
    fn load_errors() {
        assert!(matches!(parse("{"), Err(LoadError::Parse(_))));
        assert!(matches!(
            parse(r#"{"kind":"group"}"#),
            Err(LoadError::UnknownKind(_))
        ));
        assert!(matches!(
            parse(r#"{"kind":"poset"}"#),
            Err(LoadError::Schema { .. })
        ));
        let dup = r#"[{"kind":"poset","label":"p","elements":["x"]},{"kind":"poset","label":"p","elements":["y"]}]"#;
        assert_eq!(
            parse(dup).unwrap_err(),
            LoadError::DuplicateLabel("p".into())
        );
    }

    #[test]
    fn tables_resolve_labels() {
        let ws = parse(
            r#"{"kind":"effect_algebra","label":"c","elements":["0","h","1"],"zero":"0","one":"1",
                "osum":[["0","0","0"],["0","h","h"],["h","0","h"],["0","1","1"],["1","0","1"],["h","h","1"]]}"#,
        )
        .unwrap();
        let Body::EffectAlgebra(b) = &ws.documents[0].body else {
            panic!()
        };
        let (_, t) = effect_table("c", b).unwrap();
        assert_eq!(t.get(1, 1), Some(2));
        assert!(t.first_violation().is_none());
    }
}
