//! Framing certificates for oriented rank-3 vector bundles over closed
//! orientable 3-manifolds given by Heegaard splittings.
//!
//! - [`gf2`]: exact linear algebra over the two-element field.
//! - [`surface`]: standard curves on the genus-g surface and simple-curve
//!   representatives of mod-2 homology classes.
//! - [`heegaard`]: splittings, their mod-2 homology and the basis chain.
//! - [`framing`]: the `w_2` obstruction, correction functionals and
//!   certificates, with an exhaustive oracle.
//! - [`bundles`]: line-bundle cocycles over `#_n RP^2`.
//! - [`quatframe`]: the quaternionic frame field on `S^3`, generic over the
//!   float type.
//!
//! ```
//! use stiefel_core::{catalog, certify, BundleDescriptor, Certification, Gf2Vector};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let rp3 = catalog("rp3")?;
//! let d = BundleDescriptor::new("01".parse::<Gf2Vector>()?);
//! match certify(&rp3, &d)? {
//!     Certification::Certified(cert) => assert_eq!(cert.corrections.c_prime.to_bits(), vec![1]),
//!     Certification::Obstructed(w) => panic!("unexpected witness {}", w.alpha),
//! }
//! # Ok(())
//! # }
//! ```

pub mod bundles;
pub mod framing;
pub mod gf2;
pub mod heegaard;
pub mod quatframe;
pub mod scalar;
pub mod surface;

pub use framing::{certify, BundleDescriptor, Certification, CorrectionPair, FramingCertificate};
pub use gf2::{Gf2Matrix, Gf2Subspace, Gf2Vector, SymplecticSpace};
pub use heegaard::{catalog, HeegaardSplitting};
pub use scalar::Real;

pub type Quaternion64 = quatframe::Quaternion<f64>;
pub type Quaternion32 = quatframe::Quaternion<f32>;
pub type Frame3f64 = quatframe::Frame3<f64>;
pub type Frame3f32 = quatframe::Frame3<f32>;
