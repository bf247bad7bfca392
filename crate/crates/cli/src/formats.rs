//! JSON file formats. Every rational is a string `"p/q"` (or `"p"`), so
//! reading a written file gives back the same object exactly.

use std::sync::Arc;

use cliffweyl_core::cartan::{CartanMatrix, ExtensionSpec};
use cliffweyl_core::clifford::{Blade, Multivector};
use cliffweyl_core::exactform::{Isometry, QVector, QuadSpace};
use cliffweyl_core::matrix::RatMatrix;
use cliffweyl_core::paravector::Report;
use cliffweyl_core::rational;
use cliffweyl_core::vahlen::CliffMat2;
use cliffweyl_core::Rational;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::CliError;

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

pub fn rat_to_string(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rational, CliError> {
    rational::parse(s).ok_or_else(|| malformed(format!("not a rational: {s:?}")))
}

fn rows_to_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(rat_to_string).collect()).collect()
}

fn parse_rows(rows: &[Vec<String>], n: usize, what: &str) -> Result<RatMatrix, CliError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(malformed(format!("{what} must be {n}×{n}")));
    }
    let parsed = rows.iter().map(|r| r.iter().map(|s| parse_rat(s)).collect()).collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(RatMatrix::from_rows(parsed)?)
}

fn vector_to_strings(v: &QVector) -> Vec<String> {
    v.coords().iter().map(rat_to_string).collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct QuadSpaceFile {
    pub dim: usize,
    pub gram: Vec<Vec<String>>,
}

impl QuadSpaceFile {
    pub fn from_space(s: &QuadSpace) -> Self {
        QuadSpaceFile {
            dim: s.dim(),
            gram: rows_to_strings(s.gram()),
        }
    }

    pub fn to_space(&self) -> Result<QuadSpace, CliError> {
        Ok(QuadSpace::new(parse_rows(&self.gram, self.dim, "gram")?)?)
    }
}

/// Blade keys are comma-joined ascending 0-based generator indices; written
/// in blade order.
pub fn terms_to_json(x: &Multivector) -> Map<String, Value> {
    x.terms()
        .map(|(b, c)| {
            let key = b.indices().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            (key, Value::String(rat_to_string(c)))
        })
        .collect()
}

pub fn terms_from_json(space: &Arc<QuadSpace>, terms: &Map<String, Value>) -> Result<Multivector, CliError> {
    let mut out = Vec::with_capacity(terms.len());
    for (k, v) in terms {
        let indices = if k.is_empty() {
            Vec::new()
        } else {
            k.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| malformed(format!("bad blade key {k:?}")))).collect::<Result<Vec<_>, _>>()?
        };
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(malformed(format!("blade key {k:?} is not strictly ascending")));
        }
        let b = Blade::from_indices(&indices).ok_or_else(|| malformed(format!("bad blade key {k:?}")))?;
        let c = v.as_str().ok_or_else(|| malformed(format!("coefficient of {k:?} must be a string")))?;
        out.push((b, parse_rat(c)?));
    }
    Ok(Multivector::from_terms(space, out)?)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MultivectorFile {
    pub space: QuadSpaceFile,
    pub terms: Map<String, Value>,
}

impl MultivectorFile {
    pub fn from_multivector(x: &Multivector) -> Self {
        MultivectorFile {
            space: QuadSpaceFile::from_space(x.space()),
            terms: terms_to_json(x),
        }
    }

    pub fn to_multivector(&self) -> Result<Multivector, CliError> {
        terms_from_json(&Arc::new(self.space.to_space()?), &self.terms)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CliffMat2File {
    pub space: QuadSpaceFile,
    pub a: Map<String, Value>,
    pub b: Map<String, Value>,
    pub c: Map<String, Value>,
    pub d: Map<String, Value>,
}

impl CliffMat2File {
    pub fn from_matrix(m: &CliffMat2) -> Self {
        CliffMat2File {
            space: QuadSpaceFile::from_space(m.space()),
            a: terms_to_json(&m.a),
            b: terms_to_json(&m.b),
            c: terms_to_json(&m.c),
            d: terms_to_json(&m.d),
        }
    }

    pub fn to_matrix(&self) -> Result<CliffMat2, CliError> {
        let s = Arc::new(self.space.to_space()?);
        Ok(CliffMat2::new(
            terms_from_json(&s, &self.a)?,
            terms_from_json(&s, &self.b)?,
            terms_from_json(&s, &self.c)?,
            terms_from_json(&s, &self.d)?,
        )?)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CartanFile {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl CartanFile {
    pub fn from_cartan(c: &CartanMatrix) -> Self {
        CartanFile {
            labels: c.labels().to_vec(),
            entries: c.entries().to_vec(),
        }
    }

    pub fn to_cartan(&self) -> Result<CartanMatrix, CliError> {
        Ok(CartanMatrix::new(self.labels.clone(), self.entries.clone())?)
    }
}

/// Simple roots are in the coordinates `(α₁, …, α_n, f₁, f₂)` of `W`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    #[serde(rename = "type")]
    pub name: String,
    pub cartan: CartanFile,
    pub gram: QuadSpaceFile,
    pub simple_roots: Vec<Vec<String>>,
    pub theta: Vec<i64>,
    pub m: i64,
}

impl ExtensionFile {
    pub fn from_extension(e: &ExtensionSpec) -> Self {
        ExtensionFile {
            name: e.name(),
            cartan: CartanFile::from_cartan(&e.cartan),
            gram: QuadSpaceFile::from_space(&e.space),
            simple_roots: e.simple_roots.iter().map(vector_to_strings).collect(),
            theta: e.theta.clone(),
            m: e.m,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct IsometryFile {
    pub dim: usize,
    pub matrix: Vec<Vec<String>>,
}

impl IsometryFile {
    pub fn from_isometry(g: &Isometry) -> Self {
        IsometryFile {
            dim: g.dim(),
            matrix: rows_to_strings(g.matrix()),
        }
    }

    pub fn to_isometry(&self, space: &QuadSpace) -> Result<Isometry, CliError> {
        Ok(Isometry::new(space, parse_rows(&self.matrix, self.dim, "matrix")?)?)
    }
}

pub fn vector_json(v: &QVector) -> Value {
    Value::Array(vector_to_strings(v).into_iter().map(Value::String).collect())
}

pub fn report_json(r: &Report) -> Value {
    let mut m = Map::new();
    for c in &r.checks {
        m.insert(c.name.clone(), serde_json::json!({ "pass": c.pass, "witness": c.witness }));
    }
    Value::Object(m)
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}
