//! Triviality of oriented rank-3 bundles over a Heegaard-split 3-manifold.
//!
//! A bundle enters only through the functional `A_*: H_1(F; Z_2) -> Z_2`
//! induced by the change-of-basis map between the two handlebody frames.
//! Changing the frames by maps `C': M' -> SO(3)` and `C'': M'' -> SO(3)`
//! replaces `A_*` by
//!
//! ```text
//! B_* = C''_* ∘ i''_* + A_* + C'_* ∘ i'_*
//! ```
//!
//! and the bundle is trivial exactly when some choice makes `B_*` vanish.
//! [`certify`] either builds such a choice from the basis chain or returns a
//! class in `K' ∩ K''` on which `A_*` is nonzero, i.e. a witness for `w_2 ≠ 0`.
//!
//! Functionals on `H_1(M')` and `H_1(M'')` are written in the coordinates
//! of the quotient maps returned by [`HeegaardSplitting::induced_maps`].

use rayon::prelude::*;
use thiserror::Error;

use crate::gf2::{Gf2Error, Gf2Matrix, Gf2Vector};
use crate::heegaard::{BasisChain, HeegaardError, HeegaardSplitting};

/// Largest genus accepted by [`solvable_bruteforce`] by default.
pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// Searches over fewer pairs than this run on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FramingError {
    #[error(transparent)]
    Splitting(#[from] HeegaardError),
    #[error("{what} has dimension {found}, expected {expected}")]
    DimensionMismatch { what: &'static str, expected: usize, found: usize },
    #[error("w2 does not vanish: A_*({}) = 1", .0.alpha)]
    ObstructionNonzero(ObstructionWitness),
    #[error("images of the chain do not form a basis of {0}")]
    BasisDegenerate(&'static str),
    #[error("B_* does not vanish on basis vector {0}")]
    TranscriptNonzero(Gf2Vector),
    #[error("genus {genus} exceeds the exhaustive-search bound {bound}")]
    GenusAboveBound { genus: usize, bound: usize },
}

impl From<Gf2Error> for FramingError {
    fn from(e: Gf2Error) -> Self {
        Self::Splitting(HeegaardError::Gf2(e))
    }
}

/// The functional `A_*`, stored as the vector `a` with `A_*(v) = a · v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleDescriptor {
    a_star: Gf2Vector,
}

impl BundleDescriptor {
    pub fn new(a_star: Gf2Vector) -> Self {
        Self { a_star }
    }

    pub fn zero(genus: usize) -> Self {
        Self { a_star: Gf2Vector::zeros(2 * genus) }
    }

    pub fn a_star(&self) -> &Gf2Vector {
        &self.a_star
    }

    pub fn evaluate(&self, v: &Gf2Vector) -> bool {
        self.a_star.dot(v)
    }
}

/// Functionals `C'_*` on `H_1(M')` and `C''_*` on `H_1(M'')`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorrectionPair {
    pub c_prime: Gf2Vector,
    pub c_second: Gf2Vector,
}

impl CorrectionPair {
    pub fn zero(genus: usize) -> Self {
        Self { c_prime: Gf2Vector::zeros(genus), c_second: Gf2Vector::zeros(genus) }
    }
}

/// A class in `K' ∩ K''` on which `A_*` takes the value 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObstructionWitness {
    pub alpha: Gf2Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramingCertificate {
    pub splitting: HeegaardSplitting,
    pub descriptor: BundleDescriptor,
    pub chain: BasisChain,
    pub corrections: CorrectionPair,
    /// `(e_i, B_*(e_i))` for every standard basis vector of `H_1(F)`.
    pub transcript: Vec<(Gf2Vector, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    Certified(Box<FramingCertificate>),
    Obstructed(ObstructionWitness),
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified(_))
    }
}

fn check_descriptor(s: &HeegaardSplitting, d: &BundleDescriptor) -> Result<(), FramingError> {
    let expected = 2 * s.genus();
    if d.a_star.dim() != expected {
        return Err(FramingError::DimensionMismatch {
            what: "a_star",
            expected,
            found: d.a_star.dim(),
        });
    }
    Ok(())
}

/// `A_*` evaluated on each α of the basis chain. All zeros iff `w_2 = 0`.
pub fn w2_restriction(s: &HeegaardSplitting, d: &BundleDescriptor) -> Result<Vec<bool>, FramingError> {
    check_descriptor(s, d)?;
    let chain = s.basis_chain()?;
    Ok(chain.alphas.iter().map(|a| d.evaluate(a)).collect())
}

/// Solves `P c = values` where the rows of `P` are the images `image_rows`.
fn functional_from_values(
    image_rows: Vec<Gf2Vector>,
    values: &[bool],
    g: usize,
    space: &'static str,
) -> Result<Gf2Vector, FramingError> {
    let p = Gf2Matrix::from_rows(image_rows, g)?;
    let inv = p.inverse().ok_or(FramingError::BasisDegenerate(space))?;
    Ok(inv.mul_vec(&Gf2Vector::from_bools(values))?)
}

/// Builds `C'_*`, `C''_*` from the basis chain:
///
/// ```text
/// C'_*(γ'_j) = A_*(γ_j)    C'_*(δ'_j) = A_*(δ_j)
/// C''_*(β''_j) = A_*(β_j)  C''_*(δ''_j) = 0
/// ```
///
/// The images `{γ', δ'}` and `{β'', δ''}` are checked to be bases.
pub fn construct_corrections(
    s: &HeegaardSplitting,
    d: &BundleDescriptor,
) -> Result<CorrectionPair, FramingError> {
    check_descriptor(s, d)?;
    let chain = s.basis_chain()?;
    corrections_for_chain(s, d, &chain)
}

fn corrections_for_chain(
    s: &HeegaardSplitting,
    d: &BundleDescriptor,
    chain: &BasisChain,
) -> Result<CorrectionPair, FramingError> {
    if let Some(alpha) = chain.alphas.iter().find(|a| d.evaluate(a)) {
        return Err(FramingError::ObstructionNonzero(ObstructionWitness { alpha: alpha.clone() }));
    }
    let g = s.genus();
    let (i_prime, i_second) = s.induced_maps()?;

    let mut images = Vec::with_capacity(g);
    let mut values = Vec::with_capacity(g);
    for v in chain.gammas.iter().chain(&chain.deltas) {
        images.push(i_prime.mul_vec(v)?);
        values.push(d.evaluate(v));
    }
    let c_prime = functional_from_values(images, &values, g, "H_1(M')")?;

    let mut images = Vec::with_capacity(g);
    let mut values = Vec::with_capacity(g);
    for v in &chain.betas {
        images.push(i_second.mul_vec(v)?);
        values.push(d.evaluate(v));
    }
    for v in &chain.deltas {
        images.push(i_second.mul_vec(v)?);
        values.push(false);
    }
    let c_second = functional_from_values(images, &values, g, "H_1(M'')")?;

    Ok(CorrectionPair { c_prime, c_second })
}

/// `B_*` on the standard basis: entry `i` is
/// `c'' · i''_*(e_i) + a · e_i + c' · i'_*(e_i)`.
pub fn b_star(
    s: &HeegaardSplitting,
    d: &BundleDescriptor,
    c: &CorrectionPair,
) -> Result<Gf2Vector, FramingError> {
    check_descriptor(s, d)?;
    let g = s.genus();
    for (what, v) in [("c_prime", &c.c_prime), ("c_second", &c.c_second)] {
        if v.dim() != g {
            return Err(FramingError::DimensionMismatch { what, expected: g, found: v.dim() });
        }
    }
    let (i_prime, i_second) = s.induced_maps()?;
    // (C|F)_* = C_* ∘ i_*, so as a covector it is i_*^T c
    let mut b = d.a_star.clone();
    b.add_assign(&i_prime.transpose().mul_vec(&c.c_prime)?);
    b.add_assign(&i_second.transpose().mul_vec(&c.c_second)?);
    Ok(b)
}

/// Runs the full construction.
pub fn certify(s: &HeegaardSplitting, d: &BundleDescriptor) -> Result<Certification, FramingError> {
    check_descriptor(s, d)?;
    let chain = s.basis_chain()?;
    let corrections = match corrections_for_chain(s, d, &chain) {
        Ok(c) => c,
        Err(FramingError::ObstructionNonzero(w)) => return Ok(Certification::Obstructed(w)),
        Err(e) => return Err(e),
    };
    let b = b_star(s, d, &corrections)?;
    let n = 2 * s.genus();
    let transcript: Vec<(Gf2Vector, bool)> =
        (0..n).map(|i| (Gf2Vector::unit(n, i), b.get(i))).collect();
    if let Some((e, _)) = transcript.iter().find(|(_, value)| *value) {
        return Err(FramingError::TranscriptNonzero(e.clone()));
    }
    Ok(Certification::Certified(Box::new(FramingCertificate {
        splitting: s.clone(),
        descriptor: d.clone(),
        chain,
        corrections,
        transcript,
    })))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceOutcome {
    pub solvable: bool,
    /// The first solution in enumeration order.
    pub witness_pair: Option<CorrectionPair>,
}

/// Exhaustive search over all `2^g × 2^g` correction pairs.
///
/// Pairs are enumerated lexicographically with `c_prime` major and the
/// first coordinate most significant. The search is split across threads;
/// the reported pair is the minimum solving index regardless of schedule.
pub fn solvable_bruteforce(
    s: &HeegaardSplitting,
    d: &BundleDescriptor,
    bound: usize,
) -> Result<BruteForceOutcome, FramingError> {
    check_descriptor(s, d)?;
    let g = s.genus();
    if g > bound || g > 16 {
        return Err(FramingError::GenusAboveBound { genus: g, bound: bound.min(16) });
    }
    let (i_prime, i_second) = s.induced_maps()?;
    // table[c] = the covector i_*^T c as a 2g-bit mask
    let table = |m: &Gf2Matrix| -> Vec<u64> {
        let rows: Vec<u64> = m.rows().iter().map(Gf2Vector::to_mask).collect();
        (0..1u64 << g)
            .map(|c| {
                (0..g)
                    .filter(|&j| (c >> (g - 1 - j)) & 1 == 1)
                    .fold(0u64, |acc, j| acc ^ rows[j])
            })
            .collect()
    };
    let lp = table(&i_prime);
    let ls = table(&i_second);
    let a = d.a_star.to_mask();
    let total = 1usize << (2 * g);
    let solves = |&idx: &usize| a ^ lp[idx >> g] ^ ls[idx & ((1 << g) - 1)] == 0;
    let found = if total <= PARALLEL_THRESHOLD {
        (0..total).find(solves)
    } else {
        (0..total).into_par_iter().find_first(solves)
    };
    Ok(match found {
        Some(idx) => BruteForceOutcome {
            solvable: true,
            witness_pair: Some(CorrectionPair {
                c_prime: Gf2Vector::from_mask(g, (idx >> g) as u64),
                c_second: Gf2Vector::from_mask(g, (idx & ((1 << g) - 1)) as u64),
            }),
        },
        None => BruteForceOutcome { solvable: false, witness_pair: None },
    })
}

/// Re-checks a certificate without the elimination routines used to build
/// it: the inclusion-induced maps are recomputed from the raw kernel bases
/// with plain boolean arithmetic and `B_*` is evaluated on every basis
/// vector.
pub fn verify_certificate(cert: &FramingCertificate) -> bool {
    let s = &cert.splitting;
    let g = s.genus();
    let n = 2 * g;
    if cert.descriptor.a_star.dim() != n
        || cert.corrections.c_prime.dim() != g
        || cert.corrections.c_second.dim() != g
        || cert.transcript.len() != n
    {
        return false;
    }
    let as_bools = |v: &Gf2Vector| v.iter().collect::<Vec<bool>>();
    let Some(ip) = naive::quotient_rows(n, s.k_prime().basis().iter().map(as_bools).collect()) else {
        return false;
    };
    let Some(is) = naive::quotient_rows(n, s.k_second().basis().iter().map(as_bools).collect())
    else {
        return false;
    };
    if ip.len() != g || is.len() != g {
        return false;
    }
    let a = as_bools(&cert.descriptor.a_star);
    let cp = as_bools(&cert.corrections.c_prime);
    let cs = as_bools(&cert.corrections.c_second);
    for (i, (e, value)) in cert.transcript.iter().enumerate() {
        if *value || e.dim() != n || e.weight() != 1 || !e.get(i) {
            return false;
        }
        let mut b = a[i];
        for j in 0..g {
            b ^= cp[j] & ip[j][i];
            b ^= cs[j] & is[j][i];
        }
        if b {
            return false;
        }
    }
    true
}

mod naive {
    /// Rows of the annihilator of `span(gens)` in the non-pivot coordinates,
    /// using a fresh Gauss–Jordan pass over `Vec<bool>` rows. Returns `None`
    /// if a generator has the wrong length.
    pub(super) fn quotient_rows(n: usize, mut gens: Vec<Vec<bool>>) -> Option<Vec<Vec<bool>>> {
        if gens.iter().any(|r| r.len() != n) {
            return None;
        }
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(found) = (r..gens.len()).find(|&i| gens[i][col]) else { continue };
            gens.swap(r, found);
            for i in 0..gens.len() {
                if i != r && gens[i][col] {
                    let pivot_row = gens[r].clone();
                    for (x, b) in gens[i].iter_mut().zip(pivot_row) {
                        *x ^= b;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        gens.truncate(r);
        let rows = (0..n)
            .filter(|j| !pivots.contains(j))
            .map(|j| {
                let mut row = vec![false; n];
                row[j] = true;
                for (g, &p) in gens.iter().zip(&pivots) {
                    if g[j] {
                        row[p] = true;
                    }
                }
                row
            })
            .collect();
        Some(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heegaard::catalog;

    fn bits(b: &[u8]) -> Gf2Vector {
        Gf2Vector::from_bits(b).unwrap()
    }

    fn desc(b: &[u8]) -> BundleDescriptor {
        BundleDescriptor::new(bits(b))
    }

    #[test]
    fn w2_examples() {
        let s3 = catalog("s3_g1").unwrap();
        assert!(w2_restriction(&s3, &desc(&[1, 1])).unwrap().is_empty());
        let rp3 = catalog("rp3").unwrap();
        assert_eq!(w2_restriction(&rp3, &desc(&[0, 1])).unwrap(), vec![false]);
        assert_eq!(w2_restriction(&rp3, &desc(&[1, 0])).unwrap(), vec![true]);
        assert!(matches!(
            w2_restriction(&rp3, &desc(&[1, 0, 0])),
            Err(FramingError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn s3_trace() {
        let s3 = catalog("s3_g1").unwrap();
        let d = desc(&[1, 0]);
        let c = construct_corrections(&s3, &d).unwrap();
        assert_eq!(c.c_prime, bits(&[0]));
        assert_eq!(c.c_second, bits(&[1]));
        assert_eq!(b_star(&s3, &d, &c).unwrap(), bits(&[0, 0]));
        // without correction B_* = A_*
        assert_eq!(b_star(&s3, &d, &CorrectionPair::zero(1)).unwrap(), bits(&[1, 0]));
    }

    #[test]
    fn rp3_trace() {
        let rp3 = catalog("rp3").unwrap();
        let d = desc(&[0, 1]);
        let c = construct_corrections(&rp3, &d).unwrap();
        assert_eq!(c.c_prime, bits(&[1]));
        assert_eq!(c.c_second, bits(&[0]));
        assert_eq!(b_star(&rp3, &d, &c).unwrap(), bits(&[0, 0]));

        match construct_corrections(&rp3, &desc(&[1, 0])) {
            Err(FramingError::ObstructionNonzero(w)) => assert_eq!(w.alpha, bits(&[1, 0])),
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn b_star_of_zero_data_is_zero() {
        let s = catalog("sum_rp3(2)").unwrap();
        assert!(b_star(&s, &BundleDescriptor::zero(2), &CorrectionPair::zero(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn certify_examples() {
        let s3 = catalog("s3_g1").unwrap();
        for mask in 0..4 {
            let d = BundleDescriptor::new(Gf2Vector::from_mask(2, mask));
            match certify(&s3, &d).unwrap() {
                Certification::Certified(cert) => assert!(verify_certificate(&cert)),
                Certification::Obstructed(_) => panic!("S3 has no obstruction"),
            }
        }
        let rp3 = catalog("rp3").unwrap();
        assert_eq!(
            certify(&rp3, &desc(&[1, 0])).unwrap(),
            Certification::Obstructed(ObstructionWitness { alpha: bits(&[1, 0]) })
        );
        let s = catalog("sum_s1xs2(2)").unwrap();
        let Certification::Certified(cert) = certify(&s, &BundleDescriptor::zero(2)).unwrap() else {
            panic!("zero descriptor must certify");
        };
        assert_eq!(cert.corrections, CorrectionPair::zero(2));
        assert!(cert.transcript.iter().all(|(_, v)| !v));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let s3 = catalog("s3_g1").unwrap();
        let Certification::Certified(mut cert) = certify(&s3, &desc(&[1, 0])).unwrap() else {
            unreachable!()
        };
        assert!(verify_certificate(&cert));
        cert.corrections.c_second = bits(&[0]);
        assert!(!verify_certificate(&cert));
    }

    #[test]
    fn bruteforce_examples() {
        let s3 = catalog("s3_g1").unwrap();
        let d = desc(&[1, 0]);
        let out = solvable_bruteforce(&s3, &d, DEFAULT_ORACLE_BOUND).unwrap();
        assert!(out.solvable);
        let pair = out.witness_pair.unwrap();
        assert!(b_star(&s3, &d, &pair).unwrap().is_zero());

        let rp3 = catalog("rp3").unwrap();
        let out = solvable_bruteforce(&rp3, &desc(&[1, 0]), DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(out, BruteForceOutcome { solvable: false, witness_pair: None });

        let s = catalog("sum_rp3(3)").unwrap();
        let out = solvable_bruteforce(&s, &BundleDescriptor::zero(3), DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(out.witness_pair, Some(CorrectionPair::zero(3)));

        let big = HeegaardSplitting::random(9, 0);
        assert!(matches!(
            solvable_bruteforce(&big, &BundleDescriptor::zero(9), DEFAULT_ORACLE_BOUND),
            Err(FramingError::GenusAboveBound { genus: 9, .. })
        ));
    }

    #[test]
    fn invalid_splitting_is_rejected() {
        let bad = HeegaardSplitting::from_attaching_classes(1, &[bits(&[1, 0]), bits(&[0, 1])], "bad")
            .unwrap();
        assert!(matches!(certify(&bad, &desc(&[0, 0])), Err(FramingError::Splitting(_))));
    }
}
