//! Line bundles over the non-orientable surface `#_n RP^2`, described by
//! gluing signs on a handle decomposition with one 0-handle, `n` half-twisted
//! 1-handles and one 2-handle.
//!
//! Cutting along the 1-handle cocores leaves a disk over which every bundle
//! is trivial, so a bundle is a sign per cocore plus a sign on the 2-handle
//! attaching circle. With a single 0-cell there are no coboundaries on the
//! 1-cells, and the 2-cell's attaching word `a_1 a_1 ... a_n a_n` passes
//! each 1-handle twice; the weight vector is therefore the cellular `w_1`
//! and the 2-handle sign never matters.

use thiserror::Error;

use crate::gf2::Gf2Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("n = 0: orientable surfaces have a trivial normal bundle")]
    Orientable,
    #[error("expected {expected} fiber weights, found {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("cross-cap counts differ: {0} vs {1}")]
    CrossCapMismatch(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneHandle {
    pub half_twisted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceHandleDecomposition {
    one_handles: Vec<OneHandle>,
}

impl SurfaceHandleDecomposition {
    /// The standard decomposition of `#_n RP^2`; each 0∪1-handle pair is a
    /// Möbius strip.
    pub fn cross_caps(n: usize) -> Result<Self, BundleError> {
        if n == 0 {
            return Err(BundleError::Orientable);
        }
        Ok(Self { one_handles: vec![OneHandle { half_twisted: true }; n] })
    }

    pub fn n(&self) -> usize {
        self.one_handles.len()
    }

    pub fn one_handles(&self) -> &[OneHandle] {
        &self.one_handles
    }
}

pub fn base_twist_weights(d: &SurfaceHandleDecomposition) -> Gf2Vector {
    Gf2Vector::from_bools(&d.one_handles.iter().map(|h| h.half_twisted).collect::<Vec<_>>())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleCocycle {
    decomposition: SurfaceHandleDecomposition,
    /// Bit `j` set means the fiber over cocore `j` is glued by `-1`.
    fiber_weights: Gf2Vector,
    two_handle_sign: bool,
}

impl LineBundleCocycle {
    pub fn new(
        decomposition: SurfaceHandleDecomposition,
        fiber_weights: Gf2Vector,
        two_handle_sign: bool,
    ) -> Result<Self, BundleError> {
        if fiber_weights.dim() != decomposition.n() {
            return Err(BundleError::WeightCount {
                expected: decomposition.n(),
                found: fiber_weights.dim(),
            });
        }
        Ok(Self { decomposition, fiber_weights, two_handle_sign })
    }

    pub fn decomposition(&self) -> &SurfaceHandleDecomposition {
        &self.decomposition
    }

    pub fn fiber_weights(&self) -> &Gf2Vector {
        &self.fiber_weights
    }

    pub fn two_handle_sign(&self) -> bool {
        self.two_handle_sign
    }

    pub fn n(&self) -> usize {
        self.decomposition.n()
    }

    pub fn with_two_handle_sign(&self, sign: bool) -> Self {
        Self { two_handle_sign: sign, ..self.clone() }
    }
}

/// The fiber twist must cancel the base twist over every 1-handle.
pub fn total_space_orientable(b: &LineBundleCocycle) -> bool {
    b.fiber_weights == base_twist_weights(&b.decomposition)
}

/// The normal bundle of `#_n RP^2` in an orientable 3-manifold: every
/// cocore glued by `-1` in both factors.
pub fn normal_bundle_cocycle(n: usize, sign: bool) -> Result<LineBundleCocycle, BundleError> {
    let d = SurfaceHandleDecomposition::cross_caps(n)?;
    let weights = base_twist_weights(&d);
    LineBundleCocycle::new(d, weights, sign)
}

pub fn w1_class(b: &LineBundleCocycle) -> Gf2Vector {
    b.fiber_weights.clone()
}

pub fn is_isomorphic(a: &LineBundleCocycle, b: &LineBundleCocycle) -> Result<bool, BundleError> {
    if a.n() != b.n() {
        return Err(BundleError::CrossCapMismatch(a.n(), b.n()));
    }
    Ok(w1_class(a) == w1_class(b))
}
