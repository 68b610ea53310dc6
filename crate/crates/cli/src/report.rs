//! Serialized reports. Field order is fixed by the struct definitions, so
//! equal inputs give byte-identical output.

use serde::Serialize;
use sha2::{Digest, Sha256};
use stiefel_core::framing::{FramingCertificate, ObstructionWitness};
use stiefel_core::gf2::Gf2Vector;
use stiefel_core::heegaard::BasisChain;

pub const TOOL_VERSION: &str = concat!("stiefel ", env!("CARGO_PKG_VERSION"));

/// `sha256:<hex>` of the given bytes.
pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Obstructed,
    Invalid,
}

/// Name of standard basis vector `i` of `H_1(F)`: `mu1`, `lambda1`, ...
pub fn basis_name(i: usize) -> String {
    if i.is_multiple_of(2) {
        format!("mu{}", i / 2 + 1)
    } else {
        format!("lambda{}", i / 2 + 1)
    }
}

fn bits(v: &Gf2Vector) -> Vec<u8> {
    v.to_bits()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainPayload {
    pub k: usize,
    pub h: usize,
    pub alphas: Vec<Vec<u8>>,
    pub betas: Vec<Vec<u8>>,
    pub gammas: Vec<Vec<u8>>,
    pub deltas: Vec<Vec<u8>>,
}

impl From<&BasisChain> for ChainPayload {
    fn from(c: &BasisChain) -> Self {
        let conv = |vs: &[Gf2Vector]| vs.iter().map(bits).collect();
        Self {
            k: c.k,
            h: c.h,
            alphas: conv(&c.alphas),
            betas: conv(&c.betas),
            gammas: conv(&c.gammas),
            deltas: conv(&c.deltas),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrectionsPayload {
    pub c_prime: Vec<u8>,
    pub c_second: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptEntry {
    pub basis: String,
    pub vector: Vec<u8>,
    pub b_star: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificatePayload {
    pub a_star: Vec<u8>,
    pub w2_restriction: Vec<u8>,
    pub chain: ChainPayload,
    pub corrections: CorrectionsPayload,
    pub transcript: Vec<TranscriptEntry>,
    /// Result of the independent re-check of the transcript.
    pub verified: bool,
}

impl CertificatePayload {
    pub fn new(cert: &FramingCertificate, verified: bool) -> Self {
        Self {
            a_star: bits(cert.descriptor.a_star()),
            // every α is in the kernel of A_* once certified
            w2_restriction: vec![0; cert.chain.k],
            chain: ChainPayload::from(&cert.chain),
            corrections: CorrectionsPayload {
                c_prime: bits(&cert.corrections.c_prime),
                c_second: bits(&cert.corrections.c_second),
            },
            transcript: cert
                .transcript
                .iter()
                .enumerate()
                .map(|(i, (e, value))| TranscriptEntry {
                    basis: basis_name(i),
                    vector: bits(e),
                    b_star: u8::from(*value),
                })
                .collect(),
            verified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPayload {
    pub alpha: Vec<u8>,
    pub a_star_value: u8,
}

impl From<&ObstructionWitness> for WitnessPayload {
    fn from(w: &ObstructionWitness) -> Self {
        Self { alpha: bits(&w.alpha), a_star_value: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub input_digest: String,
    pub verdict: Verdict,
    pub genus: usize,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h2_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificatePayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub tool_version: String,
    pub input_digest: String,
    pub genus: usize,
    pub label: String,
    pub h1_dim: usize,
    pub h2_dim: usize,
    pub h2_basis: Vec<Vec<u8>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MulticurveReport {
    pub genus: usize,
    pub class: Vec<u8>,
    pub components: Vec<String>,
    pub bands: Vec<[usize; 2]>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleReport {
    pub n: usize,
    pub weights: Vec<u8>,
    pub sign: u8,
    pub w1: Vec<u8>,
    pub total_space_orientable: bool,
    pub isomorphic_to_normal_bundle: bool,
    pub isomorphic_after_sign_flip: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_names() {
        assert_eq!(basis_name(0), "mu1");
        assert_eq!(basis_name(1), "lambda1");
        assert_eq!(basis_name(4), "mu3");
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
