//! Heegaard splittings at the level of mod-2 homology.
//!
//! A splitting `M = M' ∪ M''` of genus `g` is recorded by the kernels of the
//! inclusion-induced maps `H_1(F) -> H_1(M')` and `H_1(F) -> H_1(M'')`,
//! both subspaces of `Z_2^{2g}` in the ordered basis `(μ_1, λ_1, ..., μ_g, λ_g)`.
//! The first kernel is normalized to `span{μ_1, ..., μ_g}`.

use std::fmt;

use thiserror::Error;

use crate::gf2::{quotient_map, Gf2Error, Gf2Matrix, Gf2Subspace, Gf2Vector, SymplecticSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeegaardError {
    #[error("invalid splitting: {0}")]
    Invalid(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
    #[error("degenerate lens parameters ({p},{q}): both even")]
    DegenerateLens { p: u64, q: u64 },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    fn error(message: impl Into<String>) -> Self {
        Self { severity: Severity::Error, message: message.into() }
    }

    fn warning(message: impl Into<String>) -> Self {
        Self { severity: Severity::Warning, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegaardSplitting {
    genus: usize,
    k_prime: Gf2Subspace,
    k_second: Gf2Subspace,
    label: String,
}

impl HeegaardSplitting {
    /// Builds a splitting whose second kernel is spanned by the given
    /// attaching-curve classes. The result is not validated.
    pub fn from_attaching_classes(
        genus: usize,
        classes: &[Gf2Vector],
        label: impl Into<String>,
    ) -> Result<Self, HeegaardError> {
        let k_second = Gf2Subspace::span(2 * genus, classes)?;
        Ok(Self::from_parts(genus, meridian_span(genus), k_second, label))
    }

    /// Assembles a splitting from raw kernels without any checks.
    pub fn from_parts(
        genus: usize,
        k_prime: Gf2Subspace,
        k_second: Gf2Subspace,
        label: impl Into<String>,
    ) -> Self {
        Self { genus, k_prime, k_second, label: label.into() }
    }

    /// A valid splitting with `K'' = T(span{μ_i})` for a seed-determined
    /// symplectic `T`.
    pub fn random(genus: usize, seed: u64) -> Self {
        let space = SymplecticSpace::new(genus);
        let t = space.random_symplectic(seed);
        let images: Vec<Gf2Vector> = (0..genus).map(|i| t.column(2 * i)).collect();
        Self::from_attaching_classes(genus, &images, format!("random(g={genus},seed={seed})"))
            .expect("images have the ambient dimension")
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn k_prime(&self) -> &Gf2Subspace {
        &self.k_prime
    }

    pub fn k_second(&self) -> &Gf2Subspace {
        &self.k_second
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Structural diagnostics. Isotropy failures are warnings only.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let ambient = 2 * self.genus;
        let mut out = Vec::new();
        for (name, k) in [("k_prime", &self.k_prime), ("k_second", &self.k_second)] {
            if k.ambient_dim() != ambient {
                out.push(Diagnostic::error(format!(
                    "{name} has ambient dimension {} != 2g = {ambient}",
                    k.ambient_dim()
                )));
            } else if k.dim() != self.genus {
                out.push(Diagnostic::error(format!(
                    "{name} has dimension {} != g = {}",
                    k.dim(),
                    self.genus
                )));
            }
        }
        if out.is_empty() {
            let space = SymplecticSpace::new(self.genus);
            for (name, k) in [("k_prime", &self.k_prime), ("k_second", &self.k_second)] {
                if !space.is_isotropic(k).unwrap_or(false) {
                    out.push(Diagnostic::warning(format!(
                        "{name} is not isotropic for the intersection form"
                    )));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().iter().all(|d| d.severity != Severity::Error)
    }

    fn ensure_valid(&self) -> Result<(), HeegaardError> {
        match self.validate().into_iter().find(|d| d.severity == Severity::Error) {
            Some(d) => Err(HeegaardError::Invalid(d.message)),
            None => Ok(()),
        }
    }

    /// `K' + K''`.
    pub fn kernel_sum(&self) -> Result<Gf2Subspace, HeegaardError> {
        self.ensure_valid()?;
        Ok(self.k_prime.sum(&self.k_second)?)
    }

    /// `dim H_1(M; Z_2) = 2g - dim(K' + K'')` together with the quotient map
    /// `H_1(F) -> H_1(M)`.
    pub fn h1(&self) -> Result<(usize, Gf2Matrix), HeegaardError> {
        let sum = self.kernel_sum()?;
        let q = quotient_map(2 * self.genus, &sum)?;
        Ok((q.nrows(), q))
    }

    /// `H_2(M; Z_2) ≅ K' ∩ K''` via the Mayer–Vietoris boundary map.
    pub fn h2(&self) -> Result<(usize, Gf2Subspace), HeegaardError> {
        self.ensure_valid()?;
        let cap = self.k_prime.intersection(&self.k_second)?;
        Ok((cap.dim(), cap))
    }

    /// Matrices of `i'_*` and `i''_*`, each `g × 2g`.
    pub fn induced_maps(&self) -> Result<(Gf2Matrix, Gf2Matrix), HeegaardError> {
        self.ensure_valid()?;
        let n = 2 * self.genus;
        Ok((quotient_map(n, &self.k_prime)?, quotient_map(n, &self.k_second)?))
    }

    /// The nested bases α ⊂ α∪β = K', α∪γ = K'', completed by δ.
    pub fn basis_chain(&self) -> Result<BasisChain, HeegaardError> {
        self.ensure_valid()?;
        let n = 2 * self.genus;
        let cap = self.k_prime.intersection(&self.k_second)?;
        let betas = cap.extend_basis(&self.k_prime)?;
        let gammas = cap.extend_basis(&self.k_second)?;
        let mut so_far: Vec<Gf2Vector> = cap.basis().to_vec();
        so_far.extend(betas.iter().cloned());
        so_far.extend(gammas.iter().cloned());
        let partial = Gf2Subspace::span(n, &so_far)?;
        if partial.dim() != so_far.len() {
            return Err(HeegaardError::Invalid(
                "alphas, betas and gammas are linearly dependent".into(),
            ));
        }
        let deltas = partial.extend_basis(&Gf2Subspace::full(n))?;
        Ok(BasisChain {
            k: cap.dim(),
            h: betas.len(),
            alphas: cap.basis().to_vec(),
            betas,
            gammas,
            deltas,
        })
    }

    /// Connected sum: `a`'s coordinates first, then `b`'s.
    pub fn connected_sum(&self, other: &Self) -> Result<Self, HeegaardError> {
        self.ensure_valid()?;
        other.ensure_valid()?;
        let g = self.genus + other.genus;
        let n = 2 * g;
        let mut classes: Vec<Gf2Vector> =
            self.k_second.basis().iter().map(|v| v.embed(n, 0)).collect();
        classes.extend(other.k_second.basis().iter().map(|v| v.embed(n, 2 * self.genus)));
        Self::from_attaching_classes(g, &classes, format!("{}#{}", self.label, other.label))
    }
}

fn meridian_span(genus: usize) -> Gf2Subspace {
    let space = SymplecticSpace::new(genus);
    let mus: Vec<Gf2Vector> = (1..=genus).map(|i| space.mu(i)).collect();
    Gf2Subspace::span(2 * genus, &mus).expect("meridians have the ambient dimension")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChain {
    pub k: usize,
    pub h: usize,
    pub alphas: Vec<Gf2Vector>,
    pub betas: Vec<Gf2Vector>,
    pub gammas: Vec<Gf2Vector>,
    pub deltas: Vec<Gf2Vector>,
}

impl BasisChain {
    /// All `2g` vectors in the order α, β, γ, δ.
    pub fn all(&self) -> impl Iterator<Item = &Gf2Vector> {
        self.alphas.iter().chain(&self.betas).chain(&self.gammas).chain(&self.deltas)
    }
}

/// Names accepted by [`catalog`]. Parameterized entries are listed with
/// their argument placeholders.
pub const CATALOG_NAMES: &[&str] =
    &["s3_g0", "s3_g1", "rp3", "s1xs2", "lens(p,q)", "sum_s1xs2(n)", "sum_rp3(n)"];

fn parse_args(name: &str, prefix: &str) -> Option<Vec<u64>> {
    let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

fn genus_one(class: [u8; 2], label: &str) -> HeegaardSplitting {
    let v = Gf2Vector::from_bits(&class).expect("0/1 literal");
    HeegaardSplitting::from_attaching_classes(1, &[v], label).expect("genus-one class")
}

fn lens(p: u64, q: u64) -> Result<HeegaardSplitting, HeegaardError> {
    if p.is_multiple_of(2) && q.is_multiple_of(2) {
        return Err(HeegaardError::DegenerateLens { p, q });
    }
    Ok(genus_one([(q % 2) as u8, (p % 2) as u8], &format!("lens({p},{q})")))
}

fn repeated_sum(base: &HeegaardSplitting, n: u64, label: String) -> HeegaardSplitting {
    let mut acc = catalog("s3_g0").expect("builtin");
    for _ in 0..n {
        acc = acc.connected_sum(base).expect("catalog entries are valid");
    }
    acc.with_label(label)
}

/// Worked-example splittings.
///
/// `lens(p,q)` takes `K'' = span{(q mod 2) μ_1 + (p mod 2) λ_1}`, the mod-2
/// class of the attaching curve; both parameters even is rejected.
pub fn catalog(name: &str) -> Result<HeegaardSplitting, HeegaardError> {
    let name = name.trim();
    match name {
        "s3_g0" => return HeegaardSplitting::from_attaching_classes(0, &[], "s3_g0"),
        "s3_g1" => return Ok(genus_one([0, 1], "s3_g1")),
        "rp3" => return Ok(genus_one([1, 0], "rp3")),
        "s1xs2" => return Ok(genus_one([1, 0], "s1xs2")),
        _ => {}
    }
    let unknown = || HeegaardError::UnknownName(name.to_string());
    if let Some(args) = parse_args(name, "lens") {
        let [p, q] = args[..] else { return Err(unknown()) };
        return lens(p, q);
    }
    for (prefix, base) in [("sum_s1xs2", "s1xs2"), ("sum_rp3", "rp3")] {
        if let Some(args) = parse_args(name, prefix) {
            let [n] = args[..] else { return Err(unknown()) };
            let base = catalog(base)?;
            return Ok(repeated_sum(&base, n, format!("{prefix}({n})")));
        }
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(b: &[u8]) -> Gf2Vector {
        Gf2Vector::from_bits(b).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(genus_one([0, 1], "s3").validate().is_empty());
        assert!(genus_one([1, 0], "rp3").validate().is_empty());

        let too_big =
            HeegaardSplitting::from_attaching_classes(1, &[bits(&[1, 0]), bits(&[0, 1])], "x")
                .unwrap();
        let diags = too_big.validate();
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Error);
        assert!(diags[0].message.contains("dimension 2 != g = 1"), "{}", diags[0]);
        assert!(too_big.h1().is_err());

        let mismatch =
            HeegaardSplitting::from_parts(1, meridian_span(1), Gf2Subspace::zero(4), "x");
        assert!(mismatch.validate()[0].message.contains("ambient"));
    }

    #[test]
    fn non_isotropic_kernel_is_only_a_warning() {
        let g2 = HeegaardSplitting::from_attaching_classes(
            2,
            &[bits(&[1, 0, 0, 0]), bits(&[0, 1, 0, 0])],
            "handle",
        )
        .unwrap();
        let diags = g2.validate();
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Warning);
        assert!(g2.is_valid());
    }

    #[test]
    fn homology_examples() {
        assert_eq!(catalog("s3_g1").unwrap().h1().unwrap().0, 0);
        assert_eq!(catalog("rp3").unwrap().h1().unwrap().0, 1);
        assert_eq!(catalog("s1xs2").unwrap().h1().unwrap().0, 1);
        assert_eq!(catalog("s3_g1").unwrap().h2().unwrap().0, 0);
        let (k, basis) = catalog("rp3").unwrap().h2().unwrap();
        assert_eq!(k, 1);
        assert_eq!(basis.basis(), &[bits(&[1, 0])]);
    }

    #[test]
    fn basis_chain_examples() {
        let s3 = catalog("s3_g1").unwrap().basis_chain().unwrap();
        assert_eq!((s3.k, s3.h), (0, 1));
        assert_eq!(s3.betas, vec![bits(&[1, 0])]);
        assert_eq!(s3.gammas, vec![bits(&[0, 1])]);
        assert!(s3.deltas.is_empty());

        let rp3 = catalog("rp3").unwrap().basis_chain().unwrap();
        assert_eq!((rp3.k, rp3.h), (1, 0));
        assert_eq!(rp3.alphas, vec![bits(&[1, 0])]);
        assert_eq!(rp3.deltas, vec![bits(&[0, 1])]);

        let g0 = catalog("s3_g0").unwrap().basis_chain().unwrap();
        assert_eq!(g0.all().count(), 0);
    }

    #[test]
    fn induced_map_examples() {
        let (ip, is) = catalog("s3_g1").unwrap().induced_maps().unwrap();
        assert_eq!(ip, Gf2Matrix::from_bits(&[&[0, 1]]).unwrap());
        assert_eq!(is, Gf2Matrix::from_bits(&[&[1, 0]]).unwrap());
        let s = HeegaardSplitting::random(3, 5);
        let (ip, is) = s.induced_maps().unwrap();
        assert_eq!((ip.rank(), is.rank()), (3, 3));
        assert_eq!(&ip.kernel(), s.k_prime());
        assert_eq!(&is.kernel(), s.k_second());
    }

    #[test]
    fn connected_sum_examples() {
        let s3 = catalog("s3_g1").unwrap();
        let two = s3.connected_sum(&s3).unwrap();
        assert_eq!(two.genus(), 2);
        assert_eq!(
            two.k_second(),
            &Gf2Subspace::span(4, &[bits(&[0, 1, 0, 0]), bits(&[0, 0, 0, 1])]).unwrap()
        );
        assert_eq!(two.h1().unwrap().0, 0);

        let rp3 = catalog("rp3").unwrap();
        let same = rp3.connected_sum(&catalog("s3_g0").unwrap()).unwrap();
        assert_eq!(same.k_second(), rp3.k_second());

        let s = catalog("sum_s1xs2(2)").unwrap();
        assert_eq!((s.h1().unwrap().0, s.h2().unwrap().0), (2, 2));
    }

    #[test]
    fn catalog_examples() {
        let l31 = catalog("lens(3,1)").unwrap();
        assert_eq!(l31.k_second().basis(), &[bits(&[1, 1])]);
        assert_eq!(l31.h1().unwrap().0, 0);
        let l41 = catalog("lens(4,1)").unwrap();
        assert_eq!(l41.k_second().basis(), &[bits(&[1, 0])]);
        assert_eq!(l41.h1().unwrap().0, 1);
        assert_eq!(catalog("rp3").unwrap().k_second(), catalog("lens(2,1)").unwrap().k_second());
        assert_eq!(catalog("lens(6,2)"), Err(HeegaardError::DegenerateLens { p: 6, q: 2 }));
        assert!(matches!(catalog("lens(3)"), Err(HeegaardError::UnknownName(_))));
        assert!(matches!(catalog("poincare"), Err(HeegaardError::UnknownName(_))));
        assert_eq!(catalog("sum_rp3(3)").unwrap().h1().unwrap().0, 3);
        assert_eq!(catalog("sum_s1xs2(0)").unwrap().genus(), 0);
    }

    #[test]
    fn random_splittings_are_valid_and_isotropic() {
        for g in 0..=6 {
            for seed in 0..20 {
                let s = HeegaardSplitting::random(g, seed);
                assert!(s.validate().is_empty(), "g={g} seed={seed}");
            }
        }
    }
}
