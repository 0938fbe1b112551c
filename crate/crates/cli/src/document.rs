//! The JSON manifold document: parsing, lowering to a validated
//! [`ManifoldSpec`] plus fields, and serialization back.

use std::collections::BTreeMap;

use kenmotsu_core::{FrameTensor, ManifoldSpec, Monomial, Rational, RingElement, VectorField};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct DocumentError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDocument {
    pub name: String,
    pub dimension: usize,
    #[serde(default)]
    pub structure_constants: Vec<BracketEntry>,
    pub metric: MetricDoc,
    pub phi: Vec<Vec<String>>,
    pub xi: usize,
    #[serde(default)]
    pub fields: BTreeMap<String, FieldDoc>,
}

/// `[e_i, e_j]` has `e_k` component `value`; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MetricDoc {
    Named(String),
    Matrix(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub components: Vec<ComponentDoc>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub declared_gradient: bool,
}

/// A component is a list of terms, or an expression such as
/// `"y1*exp(y5) - 1/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentDoc {
    Terms(Vec<TermDoc>),
    Expr(String),
}

/// `coeff · Π y_i^monomial[y_i] · exp(exp_weight · y_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monomial: BTreeMap<String, u32>,
    #[serde(default, skip_serializing_if = "is_zero_i64")]
    pub exp_weight: i64,
}

fn is_zero_i64(v: &i64) -> bool {
    *v == 0
}

/// A validated manifold with its named fields, sorted by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedManifold {
    pub spec: ManifoldSpec,
    pub fields: Vec<VectorField>,
}

impl LoadedManifold {
    pub fn field(&self, name: &str) -> Option<&VectorField> {
        self.fields.iter().find(|f| f.name() == name)
    }

    pub fn field_names(&self) -> Vec<&str> {
        self.fields.iter().map(VectorField::name).collect()
    }
}

fn rational(path: &str, s: &str) -> Result<Rational, DocumentError> {
    s.parse().map_err(|_| err(path, format!("cannot parse {s:?} as a rational")))
}

fn matrix(path: &str, m: &[Vec<String>], dim: usize) -> Result<FrameTensor<Rational>, DocumentError> {
    if m.len() != dim {
        return Err(err(path, format!("expected {dim} rows, found {}", m.len())));
    }
    let mut t = FrameTensor::zeros(dim, 2);
    for (r, row) in m.iter().enumerate() {
        if row.len() != dim {
            return Err(err(
                format!("{path}[{r}]"),
                format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        for (c, s) in row.iter().enumerate() {
            t[[r, c]] = rational(&format!("{path}[{r}][{c}]"), s)?;
        }
    }
    Ok(t)
}

pub fn parse_document(text: &str) -> Result<ManifoldDocument, DocumentError> {
    serde_json::from_str(text).map_err(|e| err("$", e.to_string()))
}

/// Parses and validates a document in one step.
pub fn parse_manifold(text: &str) -> Result<LoadedManifold, DocumentError> {
    parse_document(text)?.lower()
}

impl ManifoldDocument {
    pub fn lower(&self) -> Result<LoadedManifold, DocumentError> {
        let dim = self.dimension;
        if dim < 3 || dim.is_multiple_of(2) {
            return Err(err("dimension", format!("must be odd and at least 3, found {dim}")));
        }
        let mut c = FrameTensor::zeros(dim, 3);
        let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for (n, e) in self.structure_constants.iter().enumerate() {
            let path = format!("structure_constants[{n}]");
            for (label, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
                if v == 0 || v > dim {
                    return Err(err(format!("{path}.{label}"), format!("index {v} outside 1..={dim}")));
                }
            }
            let v = rational(&format!("{path}.value"), &e.value)?;
            let (i, j, k) = (e.i - 1, e.j - 1, e.k - 1);
            if i == j {
                if v.is_zero() {
                    continue;
                }
                return Err(err(path, format!("[e{0}, e{0}] must vanish", e.i)));
            }
            let key = (i.min(j), i.max(j), k);
            let signed = if i < j { v.clone() } else { -&v };
            if let Some(&prev) = seen.get(&key) {
                let earlier = &c[[key.0, key.1, k]];
                if *earlier != signed {
                    return Err(err(
                        path,
                        format!("conflicts with structure_constants[{prev}] under antisymmetry"),
                    ));
                }
            }
            seen.insert(key, n);
            c[[key.0, key.1, k]] = signed.clone();
            c[[key.1, key.0, k]] = -&signed;
        }
        let metric = match &self.metric {
            MetricDoc::Named(s) if s == "identity" => FrameTensor::identity(dim),
            MetricDoc::Named(s) => {
                return Err(err("metric", format!("expected \"identity\" or a matrix, found {s:?}")))
            }
            MetricDoc::Matrix(m) => matrix("metric", m, dim)?,
        };
        let phi = matrix("phi", &self.phi, dim)?;
        if self.xi == 0 || self.xi > dim {
            return Err(err("xi", format!("index {} outside 1..={dim}", self.xi)));
        }
        let spec = ManifoldSpec::new(self.name.clone(), c, metric, phi, self.xi - 1)
            .map_err(|e| err("$", e.to_string()))?;
        let mut fields = Vec::with_capacity(self.fields.len());
        for (name, f) in &self.fields {
            let path = format!("fields.{name}");
            if f.components.len() != dim {
                return Err(err(
                    format!("{path}.components"),
                    format!("expected {dim} components, found {}", f.components.len()),
                ));
            }
            let comps = f
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| component(&format!("{path}.components[{i}]"), c, dim))
                .collect::<Result<Vec<_>, _>>()?;
            let field = VectorField::new(&spec, name.clone(), comps)
                .map_err(|e| err(&path, e.to_string()))?
                .with_declared_gradient(f.declared_gradient);
            fields.push(field);
        }
        Ok(LoadedManifold { spec, fields })
    }
}

fn component(path: &str, c: &ComponentDoc, dim: usize) -> Result<RingElement, DocumentError> {
    match c {
        ComponentDoc::Expr(s) => RingElement::parse(dim, s).map_err(|e| err(path, e.to_string())),
        ComponentDoc::Terms(terms) => {
            let mut acc = RingElement::zero(dim);
            for (t, term) in terms.iter().enumerate() {
                let tp = format!("{path}[{t}]");
                let coeff = rational(&format!("{tp}.coeff"), &term.coeff)?;
                let mut exps = vec![0u32; dim];
                for (var, &e) in &term.monomial {
                    let idx = var
                        .strip_prefix('y')
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|&i| (1..=dim).contains(&i))
                        .ok_or_else(|| err(format!("{tp}.monomial"), format!("unknown coordinate {var:?}")))?;
                    exps[idx - 1] = e;
                }
                let m = Monomial {
                    exps,
                    exp_weight: term.exp_weight,
                };
                acc = &acc + &RingElement::term(dim, coeff, m);
            }
            Ok(acc)
        }
    }
}

fn matrix_strings(t: &FrameTensor<Rational>) -> Vec<Vec<String>> {
    let n = t.dim();
    (0..n)
        .map(|i| (0..n).map(|j| t[[i, j]].to_string()).collect())
        .collect()
}

/// The document describing `spec` and `fields`; `lower` inverts it.
pub fn to_document(spec: &ManifoldSpec, fields: &[VectorField]) -> ManifoldDocument {
    let dim = spec.dim();
    let c = spec.brackets();
    let mut structure_constants = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in 0..dim {
                let v = &c[[i, j, k]];
                if !v.is_zero() {
                    structure_constants.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        value: v.to_string(),
                    });
                }
            }
        }
    }
    let metric = if spec.is_orthonormal() {
        MetricDoc::Named("identity".into())
    } else {
        MetricDoc::Matrix(matrix_strings(spec.metric()))
    };
    let fields = fields
        .iter()
        .map(|f| {
            let components = f
                .components()
                .iter()
                .map(|r| {
                    ComponentDoc::Terms(
                        r.terms()
                            .map(|(m, c)| TermDoc {
                                coeff: c.to_string(),
                                monomial: m
                                    .exps
                                    .iter()
                                    .enumerate()
                                    .filter(|(_, &e)| e > 0)
                                    .map(|(i, &e)| (format!("y{}", i + 1), e))
                                    .collect(),
                                exp_weight: m.exp_weight,
                            })
                            .collect(),
                    )
                })
                .collect();
            (
                f.name().to_string(),
                FieldDoc {
                    components,
                    declared_gradient: f.declared_gradient(),
                },
            )
        })
        .collect();
    ManifoldDocument {
        name: spec.name().to_string(),
        dimension: dim,
        structure_constants,
        metric,
        phi: matrix_strings(spec.phi()),
        xi: spec.xi() + 1,
        fields,
    }
}
