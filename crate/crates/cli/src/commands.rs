//! Command implementations. Each returns the text to print and the exit
//! code; file I/O stays in the binary.

use serde::Serialize;
use serde_json::Value;
use stiefel_core::bundles::{
    is_isomorphic, normal_bundle_cocycle, total_space_orientable, w1_class, LineBundleCocycle,
    SurfaceHandleDecomposition,
};
use stiefel_core::framing::{
    certify as run_certify, solvable_bruteforce, verify_certificate, BundleDescriptor, Certification,
    DEFAULT_ORACLE_BOUND,
};
use stiefel_core::gf2::Gf2Vector;
use stiefel_core::heegaard::{catalog, CATALOG_NAMES};
use stiefel_core::surface::{represent_simple, verify_multicurve};

use crate::document::{
    parse_bits, splitting_errors, splitting_warnings, BundleDocument, CertifyRequest, InputError,
    ManifoldDocument,
};
use crate::exit_codes;
use crate::report::{
    digest, BundleReport, CertificatePayload, HomologyReport, MulticurveReport, Report, Verdict,
    WitnessPayload, TOOL_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub(crate) fn json<T: Serialize>(code: i32, value: &T) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("reports serialize");
        stdout.push('\n');
        Self { code, stdout, stderr: String::new() }
    }

    fn text(code: i32, stdout: String) -> Self {
        Self { code, stdout, stderr: String::new() }
    }

    pub fn input_error(e: impl std::fmt::Display) -> Self {
        Self { code: exit_codes::INPUT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn canonical_digest<T: Serialize>(value: &T) -> String {
    digest(serde_json::to_string(value).expect("documents serialize").as_bytes())
}

fn parse_value(input: &str) -> Result<Value, InputError> {
    serde_json::from_str(input).map_err(|e| InputError::Json(e.to_string()))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, InputError> {
    serde_json::from_value(v).map_err(|e| InputError::Json(e.to_string()))
}

fn is_request(v: &Value) -> bool {
    v.as_object().is_some_and(|o| o.contains_key("manifold"))
}

/// `homology`: mod-2 Betti numbers of the presented manifold. Accepts a
/// manifold document or a certify request.
pub fn homology(input: &str) -> Outcome {
    let (doc, prefix) = match parse_value(input).and_then(|v| {
        if is_request(&v) {
            from_value::<CertifyRequest>(v).map(|r| (r.manifold, "manifold."))
        } else {
            from_value::<ManifoldDocument>(v).map(|d| (d, ""))
        }
    }) {
        Ok(x) => x,
        Err(e) => return Outcome::input_error(e),
    };
    let s = match doc.to_splitting(prefix) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let errors = splitting_errors(&s);
    if !errors.is_empty() {
        return Outcome::input_error(format!("{prefix}k_second_rows: {}", errors.join("; ")));
    }
    let (h1, _) = s.h1().expect("validated");
    let (h2, basis) = s.h2().expect("validated");
    Outcome::json(
        exit_codes::SUCCESS,
        &HomologyReport {
            tool_version: TOOL_VERSION.to_string(),
            input_digest: canonical_digest(&doc),
            genus: s.genus(),
            label: s.label().to_string(),
            h1_dim: h1,
            h2_dim: h2,
            h2_basis: basis.basis().iter().map(Gf2Vector::to_bits).collect(),
            diagnostics: splitting_warnings(&s),
        },
    )
}

fn build_request(input: &str, a_star_flag: Option<&str>, oracle: bool) -> Result<CertifyRequest, InputError> {
    let v = parse_value(input)?;
    let mut request = if is_request(&v) {
        let r: CertifyRequest = from_value(v)?;
        if a_star_flag.is_some() {
            return Err(InputError::Other(
                "a_star is given both in the request and by --a-star".into(),
            ));
        }
        r
    } else {
        let manifold: ManifoldDocument = from_value(v)?;
        let flag = a_star_flag.ok_or_else(|| {
            InputError::Other("input is a manifold document; pass the descriptor with --a-star".into())
        })?;
        let bits: Gf2Vector = flag
            .parse()
            .map_err(|e| InputError::field("--a-star", format!("{e}")))?;
        CertifyRequest { manifold, a_star: bits.iter().map(i64::from).collect(), run_oracle: false }
    };
    request.run_oracle |= oracle;
    Ok(request)
}

/// `certify`: exit 0 with a certificate, 2 with an obstruction witness,
/// 1 on invalid input, 3 when the oracle disagrees.
pub fn certify(input: &str, a_star_flag: Option<&str>, oracle: bool) -> Outcome {
    let request = match build_request(input, a_star_flag, oracle) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let prefix = if a_star_flag.is_some() { "" } else { "manifold." };
    let s = match request.manifold.to_splitting(prefix) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let a_path = if a_star_flag.is_some() { "--a-star" } else { "a_star" };
    let a_star = match parse_bits(&request.a_star, 2 * s.genus(), a_path) {
        Ok(v) => v,
        Err(e) => return Outcome::input_error(e),
    };
    if request.run_oracle && s.genus() > DEFAULT_ORACLE_BOUND {
        return Outcome::input_error(format!(
            "--oracle supports genus <= {DEFAULT_ORACLE_BOUND}, got {}",
            s.genus()
        ));
    }

    let mut report = Report {
        tool_version: TOOL_VERSION.to_string(),
        input_digest: canonical_digest(&request),
        verdict: Verdict::Invalid,
        genus: s.genus(),
        label: s.label().to_string(),
        h1_dim: None,
        h2_dim: None,
        certificate: None,
        witness: None,
        oracle_agreement: None,
        diagnostics: s.validate().iter().map(ToString::to_string).collect(),
    };
    if !splitting_errors(&s).is_empty() {
        let mut out = Outcome::json(exit_codes::INPUT_ERROR, &report);
        out.stderr = format!("error: invalid splitting: {}\n", splitting_errors(&s).join("; "));
        return out;
    }
    report.h1_dim = Some(s.h1().expect("validated").0);
    report.h2_dim = Some(s.h2().expect("validated").0);

    let d = BundleDescriptor::new(a_star);
    let outcome = match run_certify(&s, &d) {
        Ok(o) => o,
        Err(e) => {
            // only reachable on an internal inconsistency
            let mut out = Outcome::json(exit_codes::ORACLE_DISAGREEMENT, &report);
            out.stderr = format!("error: {e}\n");
            return out;
        }
    };
    let mut code = match &outcome {
        Certification::Certified(cert) => {
            let verified = verify_certificate(cert);
            report.verdict = Verdict::Certified;
            report.certificate = Some(CertificatePayload::new(cert, verified));
            if verified {
                exit_codes::SUCCESS
            } else {
                exit_codes::ORACLE_DISAGREEMENT
            }
        }
        Certification::Obstructed(w) => {
            report.verdict = Verdict::Obstructed;
            report.witness = Some(WitnessPayload::from(w));
            exit_codes::OBSTRUCTED
        }
    };
    if request.run_oracle {
        let brute = solvable_bruteforce(&s, &d, DEFAULT_ORACLE_BOUND).expect("genus checked above");
        let agree = brute.solvable == outcome.is_certified();
        report.oracle_agreement = Some(agree);
        if !agree {
            code = exit_codes::ORACLE_DISAGREEMENT;
        }
    }
    let mut out = Outcome::json(code, &report);
    if code == exit_codes::ORACLE_DISAGREEMENT {
        out.stderr = "error: internal inconsistency between certificate and oracle\n".into();
    }
    out
}

pub fn catalog_list() -> Outcome {
    let mut s = String::new();
    for name in CATALOG_NAMES {
        s.push_str(name);
        s.push('\n');
    }
    Outcome::text(exit_codes::SUCCESS, s)
}

pub fn catalog_get(name: &str) -> Outcome {
    match catalog(name) {
        Ok(s) => Outcome::json(exit_codes::SUCCESS, &ManifoldDocument::from_splitting(&s)),
        Err(e) => Outcome::input_error(e),
    }
}

/// `represent`: a connected simple curve in the given class.
pub fn represent(genus: usize, class: &str) -> Outcome {
    let alpha: Gf2Vector = match class.parse() {
        Ok(v) => v,
        Err(e) => return Outcome::input_error(format!("--class: {e}")),
    };
    let curve = match represent_simple(genus, &alpha) {
        Ok(c) => c,
        Err(e) => return Outcome::input_error(format!("--class: {e}")),
    };
    let verified = verify_multicurve(&curve);
    let report = MulticurveReport {
        genus,
        class: alpha.to_bits(),
        components: curve.components.iter().map(ToString::to_string).collect(),
        bands: curve.bands.iter().map(|&(a, b)| [a, b]).collect(),
        verified,
        note: curve
            .is_empty()
            .then(|| "zero class: represented by the empty multicurve (a circle bounding a disk)".to_string()),
    };
    if !verified {
        let mut out = Outcome::json(exit_codes::ORACLE_DISAGREEMENT, &report);
        out.stderr = "error: constructed multicurve failed verification\n".into();
        return out;
    }
    Outcome::json(exit_codes::SUCCESS, &report)
}

fn parse_bundle(input: &str) -> Result<LineBundleCocycle, InputError> {
    let doc: BundleDocument = from_value(parse_value(input)?)?;
    let decomposition = SurfaceHandleDecomposition::cross_caps(doc.n)
        .map_err(|e| InputError::field("n", e.to_string()))?;
    let weights = parse_bits(&doc.weights, doc.n, "weights")?;
    let sign = match doc.sign {
        0 => false,
        1 => true,
        other => return Err(InputError::field("sign", format!("{other} is not 0 or 1"))),
    };
    LineBundleCocycle::new(decomposition, weights, sign).map_err(|e| InputError::Other(e.to_string()))
}

/// `bundle classify` over `{n, weights, sign}`.
pub fn bundle_classify(input: &str) -> Outcome {
    let b = match parse_bundle(input) {
        Ok(b) => b,
        Err(e) => return Outcome::input_error(e),
    };
    let normal = normal_bundle_cocycle(b.n(), false).expect("n >= 1");
    let flipped = b.with_two_handle_sign(!b.two_handle_sign());
    Outcome::json(
        exit_codes::SUCCESS,
        &BundleReport {
            n: b.n(),
            weights: b.fiber_weights().to_bits(),
            sign: u8::from(b.two_handle_sign()),
            w1: w1_class(&b).to_bits(),
            total_space_orientable: total_space_orientable(&b),
            isomorphic_to_normal_bundle: is_isomorphic(&b, &normal).expect("same n"),
            isomorphic_after_sign_flip: is_isomorphic(&b, &flipped).expect("same n"),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp3() -> String {
        catalog_get("rp3").stdout
    }

    #[test]
    fn homology_of_catalog_entries() {
        let out = homology(&rp3());
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!((v["h1_dim"].as_u64(), v["h2_dim"].as_u64()), (Some(1), Some(1)));
    }

    #[test]
    fn malformed_row_is_an_input_error() {
        let out = homology(r#"{"schema_version":"1","genus":1,"k_second_rows":[[1,0,0]]}"#);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("k_second_rows[0]"), "{}", out.stderr);
    }

    #[test]
    fn certify_flag_and_request_forms_agree() {
        let via_flag = certify(&rp3(), Some("01"), false);
        let request = format!(r#"{{"manifold":{},"a_star":[0,1]}}"#, rp3());
        let via_request = certify(&request, None, false);
        assert_eq!(via_flag.code, 0);
        assert_eq!(via_flag.stdout, via_request.stdout);
    }

    #[test]
    fn certify_exit_codes() {
        assert_eq!(certify(&rp3(), Some("10"), true).code, 2);
        assert_eq!(certify(&rp3(), Some("1"), false).code, 1);
        assert_eq!(certify(&rp3(), None, false).code, 1);
        let dependent = r#"{"schema_version":"1","genus":2,"k_second_rows":[[1,0,0,0],[1,0,0,0]]}"#;
        let out = certify(dependent, Some("0000"), false);
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("\"invalid\""));
    }

    #[test]
    fn represent_outputs() {
        let out = represent(2, "1110");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("Desing(1)") && out.stdout.contains("Mu(2)"));
        assert!(represent(1, "00").stdout.contains("empty multicurve"));
        assert_eq!(represent(2, "11").code, 1);
    }

    #[test]
    fn bundle_outputs() {
        let out = bundle_classify(r#"{"n":2,"weights":[1,1],"sign":1}"#);
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["total_space_orientable"], true);
        assert_eq!(v["isomorphic_after_sign_flip"], true);
        assert_eq!(bundle_classify(r#"{"n":0,"weights":[]}"#).code, 1);
        assert_eq!(bundle_classify(r#"{"n":1,"weights":[1],"sign":3}"#).code, 1);
    }
}
