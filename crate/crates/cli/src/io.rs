//! On-disk formats: JSON matrix and vector files (single object or array of
//! objects) and JSON-lines report streams. Complex entries are `[re, im]`
//! pairs in row-major order; floats round-trip bit-exactly through the
//! shortest-decimal representation.

use anyhow::{bail, Context, Result};
use entroq::matfun::HermitianMatrix;
use entroq::{Complex64, DMatrix};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    /// Row-major `[re, im]` pairs, `dim * dim` of them.
    pub entries: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl MatrixFile {
    pub fn from_matrix(m: &HermitianMatrix, label: Option<String>) -> Self {
        let dim = m.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let v = m.entry(a, b);
                entries.push([v.re, v.im]);
            }
        }
        Self { dim, entries, label }
    }

    pub fn to_matrix(&self) -> Result<HermitianMatrix> {
        if self.entries.len() != self.dim * self.dim {
            bail!(
                "matrix file has {} entries, expected {}",
                self.entries.len(),
                self.dim * self.dim
            );
        }
        let m = DMatrix::from_fn(self.dim, self.dim, |a, b| {
            let [re, im] = self.entries[a * self.dim + b];
            Complex64::new(re, im)
        });
        // Accept hand-authored files with asymmetry up to 1e-10, then
        // symmetrize before handing over to the stricter library check.
        for a in 0..self.dim {
            for b in a..self.dim {
                let delta = (m[(a, b)] - m[(b, a)].conj()).norm();
                if delta > 1e-10 {
                    bail!("matrix file not Hermitian at ({a}, {b}): asymmetry {delta:e}");
                }
            }
        }
        let sym = (&m + m.adjoint()).scale(0.5);
        HermitianMatrix::new(sym).context("matrix file failed validation")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorFile {
    pub values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

impl VectorFile {
    /// Whether the values form a probability vector (explicit kind wins,
    /// otherwise inferred from nonnegativity and normalization).
    pub fn is_probability(&self) -> bool {
        match self.kind.as_deref() {
            Some("probability") => true,
            Some(_) => false,
            None => {
                let sum: f64 = self.values.iter().sum();
                self.values.iter().all(|&v| v >= -1e-12) && (sum - 1.0).abs() <= 1e-10
            }
        }
    }
}

/// Contents of an input file: a batch of matrices or a batch of vectors.
#[derive(Debug, Clone)]
pub enum InputData {
    Matrices(Vec<MatrixFile>),
    Vectors(Vec<VectorFile>),
}

impl InputData {
    pub fn len(&self) -> usize {
        match self {
            InputData::Matrices(v) => v.len(),
            InputData::Vectors(v) => v.len(),
        }
    }
}

pub fn read_input(path: &Path) -> Result<InputData> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("invalid JSON in {}", path.display()))?;
    let items: Vec<serde_json::Value> = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    if items.is_empty() {
        bail!("{} contains no records", path.display());
    }
    if items[0].get("entries").is_some() {
        let mut out = Vec::with_capacity(items.len());
        for (i, item) in items.into_iter().enumerate() {
            out.push(
                serde_json::from_value::<MatrixFile>(item)
                    .with_context(|| format!("record {i} of {}", path.display()))?,
            );
        }
        Ok(InputData::Matrices(out))
    } else if items[0].get("values").is_some() {
        let mut out = Vec::with_capacity(items.len());
        for (i, item) in items.into_iter().enumerate() {
            out.push(
                serde_json::from_value::<VectorFile>(item)
                    .with_context(|| format!("record {i} of {}", path.display()))?,
            );
        }
        Ok(InputData::Vectors(out))
    } else {
        bail!(
            "{} is neither a matrix file (entries) nor a vector file (values)",
            path.display()
        );
    }
}

/// Write a batch as a single object (one record) or an array (several).
pub fn write_batch<T: Serialize>(path: &Path, records: &[T]) -> Result<()> {
    let text = if records.len() == 1 {
        serde_json::to_string(&records[0])?
    } else {
        serde_json::to_string(records)?
    };
    std::fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))
}
