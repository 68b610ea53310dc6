//! JSON input documents.
//!
//! Bits are 0/1 integers, most significant coordinate first in the order
//! `(μ_1, λ_1, ..., μ_g, λ_g)`.

use serde::{Deserialize, Serialize};
use stiefel_core::gf2::Gf2Vector;
use stiefel_core::heegaard::{HeegaardSplitting, Severity};
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{path}: {message}")]
    Field { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Other(String),
}

impl InputError {
    pub fn field(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Field { path: path.into(), message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDocument {
    pub schema_version: String,
    pub genus: usize,
    pub k_second_rows: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifyRequest {
    pub manifold: ManifoldDocument,
    pub a_star: Vec<i64>,
    #[serde(default)]
    pub run_oracle: bool,
}

/// Converts a 0/1 array, naming `path` in any error.
pub fn parse_bits(bits: &[i64], expected_len: usize, path: &str) -> Result<Gf2Vector, InputError> {
    if bits.len() != expected_len {
        return Err(InputError::field(
            path,
            format!("has length {}, expected {expected_len}", bits.len()),
        ));
    }
    let mut v = Gf2Vector::zeros(expected_len);
    for (i, &b) in bits.iter().enumerate() {
        match b {
            0 => {}
            1 => v.set(i, true),
            other => {
                return Err(InputError::field(format!("{path}[{i}]"), format!("{other} is not 0 or 1")))
            }
        }
    }
    Ok(v)
}

pub fn bits_of(v: &Gf2Vector) -> Vec<u8> {
    v.to_bits()
}

impl ManifoldDocument {
    pub fn from_splitting(s: &HeegaardSplitting) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            genus: s.genus(),
            k_second_rows: s
                .k_second()
                .basis()
                .iter()
                .map(|v| v.iter().map(i64::from).collect())
                .collect(),
            label: Some(s.label().to_string()),
        }
    }

    /// Checks the schema and builds the splitting. `prefix` is prepended to
    /// field paths in error messages. Structural problems with the kernel
    /// itself (such as dependent rows) are left to [`HeegaardSplitting::validate`].
    pub fn to_splitting(&self, prefix: &str) -> Result<HeegaardSplitting, InputError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(InputError::field(
                format!("{prefix}schema_version"),
                format!("unsupported version {:?}, expected {SCHEMA_VERSION:?}", self.schema_version),
            ));
        }
        if self.k_second_rows.len() != self.genus {
            return Err(InputError::field(
                format!("{prefix}k_second_rows"),
                format!("has {} rows, expected genus = {}", self.k_second_rows.len(), self.genus),
            ));
        }
        let rows = self
            .k_second_rows
            .iter()
            .enumerate()
            .map(|(i, r)| parse_bits(r, 2 * self.genus, &format!("{prefix}k_second_rows[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let label = self.label.clone().unwrap_or_default();
        HeegaardSplitting::from_attaching_classes(self.genus, &rows, label)
            .map_err(|e| InputError::Other(e.to_string()))
    }
}

/// Error diagnostics of a parsed splitting, rendered as strings.
pub fn splitting_errors(s: &HeegaardSplitting) -> Vec<String> {
    s.validate()
        .into_iter()
        .filter(|d| d.severity == Severity::Error)
        .map(|d| d.to_string())
        .collect()
}

pub fn splitting_warnings(s: &HeegaardSplitting) -> Vec<String> {
    s.validate()
        .into_iter()
        .filter(|d| d.severity == Severity::Warning)
        .map(|d| d.to_string())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDocument {
    pub n: usize,
    pub weights: Vec<i64>,
    #[serde(default)]
    pub sign: i64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use stiefel_core::catalog;

    #[test]
    fn catalog_round_trip() {
        for name in ["s3_g0", "rp3", "sum_s1xs2(3)", "lens(5,2)"] {
            let s = catalog(name).unwrap();
            let doc = ManifoldDocument::from_splitting(&s);
            let back = doc.to_splitting("").unwrap();
            assert_eq!(back.k_second(), s.k_second());
        }
    }

    #[test]
    fn errors_name_the_field() {
        let doc = ManifoldDocument {
            schema_version: "1".into(),
            genus: 1,
            k_second_rows: vec![vec![1, 0, 1]],
            label: None,
        };
        let err = doc.to_splitting("").unwrap_err().to_string();
        assert!(err.contains("k_second_rows[0]"), "{err}");

        let doc = ManifoldDocument { k_second_rows: vec![vec![1, 2]], ..doc };
        assert!(doc.to_splitting("manifold.").unwrap_err().to_string().contains("manifold.k_second_rows[0][1]"));

        let doc = ManifoldDocument { schema_version: "2".into(), ..doc };
        assert!(doc.to_splitting("").unwrap_err().to_string().contains("schema_version"));
    }
}
