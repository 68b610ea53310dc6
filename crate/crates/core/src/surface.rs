//! Standard curves on the closed orientable genus-g surface and the
//! representation of mod-2 homology classes by a single simple closed curve.
//!
//! Curves are modelled through the intersection table of the standard
//! model: on handle `i` the meridian `μ_i` and longitude `λ_i` meet once,
//! and `Desing(i)` is the simple curve obtained by resolving that crossing.
//! Curves on distinct handles are disjoint.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::gf2::Gf2Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("curve {curve} has handle index outside 1..={genus}")]
    IndexOutOfRange { curve: StandardCurve, genus: usize },
    #[error("class has dimension {found}, expected {expected} for genus {genus}")]
    DimensionMismatch { genus: usize, expected: usize, found: usize },
}

/// A standard simple closed curve. Handle indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StandardCurve {
    Mu(usize),
    Lambda(usize),
    /// Resolution of the single crossing of `Mu(i)` and `Lambda(i)`.
    Desing(usize),
}

impl StandardCurve {
    pub fn handle(&self) -> usize {
        match *self {
            Self::Mu(i) | Self::Lambda(i) | Self::Desing(i) => i,
        }
    }

    fn check(&self, genus: usize) -> Result<(), SurfaceError> {
        let i = self.handle();
        if i >= 1 && i <= genus {
            Ok(())
        } else {
            Err(SurfaceError::IndexOutOfRange { curve: *self, genus })
        }
    }
}

impl fmt::Display for StandardCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Mu(i) => write!(f, "Mu({i})"),
            Self::Lambda(i) => write!(f, "Lambda({i})"),
            Self::Desing(i) => write!(f, "Desing({i})"),
        }
    }
}

/// Homology class of a standard curve in `Z_2^{2g}`.
pub fn class_of(genus: usize, c: StandardCurve) -> Result<Gf2Vector, SurfaceError> {
    c.check(genus)?;
    let mut v = Gf2Vector::zeros(2 * genus);
    let i = c.handle() - 1;
    match c {
        StandardCurve::Mu(_) => v.set(2 * i, true),
        StandardCurve::Lambda(_) => v.set(2 * i + 1, true),
        StandardCurve::Desing(_) => {
            v.set(2 * i, true);
            v.set(2 * i + 1, true);
        }
    }
    Ok(v)
}

/// Number of intersection points in the standard model.
pub fn geometric_intersection(
    genus: usize,
    a: StandardCurve,
    b: StandardCurve,
) -> Result<usize, SurfaceError> {
    use StandardCurve::*;
    a.check(genus)?;
    b.check(genus)?;
    if a.handle() != b.handle() {
        return Ok(0);
    }
    Ok(match (a, b) {
        // parallel pushoffs
        (Mu(_), Mu(_)) | (Lambda(_), Lambda(_)) | (Desing(_), Desing(_)) => 0,
        _ => 1,
    })
}

/// A disjoint union of standard curves joined by bands into one simple
/// closed curve.
///
/// The zero class is represented by the empty multicurve; geometrically this
/// stands for a circle bounding a disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multicurve {
    pub genus: usize,
    pub components: Vec<StandardCurve>,
    /// Unordered pairs of component indices, stored as `(lo, hi)`.
    pub bands: Vec<(usize, usize)>,
    pub homology_class: Gf2Vector,
}

impl Multicurve {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Represents `alpha` by a connected simple closed curve.
///
/// Each handle contributes `Desing(i)` when both `μ_i` and `λ_i` occur in
/// `alpha`, or the single curve that occurs. Components are then joined in
/// order by a path of bands.
pub fn represent_simple(genus: usize, alpha: &Gf2Vector) -> Result<Multicurve, SurfaceError> {
    if alpha.dim() != 2 * genus {
        return Err(SurfaceError::DimensionMismatch {
            genus,
            expected: 2 * genus,
            found: alpha.dim(),
        });
    }
    let components: Vec<StandardCurve> = (1..=genus)
        .filter_map(|i| match (alpha.get(2 * i - 2), alpha.get(2 * i - 1)) {
            (true, true) => Some(StandardCurve::Desing(i)),
            (true, false) => Some(StandardCurve::Mu(i)),
            (false, true) => Some(StandardCurve::Lambda(i)),
            (false, false) => None,
        })
        .collect();
    let bands = (1..components.len()).map(|k| (k - 1, k)).collect();
    Ok(Multicurve { genus, components, bands, homology_class: alpha.clone() })
}

/// Checks the three multicurve invariants: pairwise disjoint components,
/// bands forming a spanning tree, and the recorded class equal to the sum
/// of component classes.
pub fn verify_multicurve(c: &Multicurve) -> bool {
    let n = c.components.len();
    let mut sum = Gf2Vector::zeros(2 * c.genus);
    if c.homology_class.dim() != sum.dim() {
        return false;
    }
    for (k, &a) in c.components.iter().enumerate() {
        let Ok(class) = class_of(c.genus, a) else {
            return false;
        };
        sum.add_assign(&class);
        for &b in &c.components[k + 1..] {
            if geometric_intersection(c.genus, a, b) != Ok(0) {
                return false;
            }
        }
    }
    if sum != c.homology_class {
        return false;
    }
    bands_form_tree(n, &c.bands)
}

fn bands_form_tree(n: usize, bands: &[(usize, usize)]) -> bool {
    if n == 0 {
        return bands.is_empty();
    }
    if bands.len() != n - 1 {
        return false;
    }
    let mut seen = BTreeSet::new();
    for &(a, b) in bands {
        let key = (a.min(b), a.max(b));
        if a == b || a >= n || b >= n || !seen.insert(key) {
            return false;
        }
    }
    // n - 1 distinct edges form a tree iff they connect every vertex
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut merged = 0;
    for &(a, b) in bands {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            merged += 1;
        }
    }
    merged == n - 1
}

#[cfg(test)]
mod tests {
    use super::StandardCurve::*;
    use super::*;

    fn bits(b: &[u8]) -> Gf2Vector {
        Gf2Vector::from_bits(b).unwrap()
    }

    #[test]
    fn class_of_examples() {
        assert_eq!(class_of(2, Mu(1)).unwrap(), bits(&[1, 0, 0, 0]));
        assert_eq!(class_of(1, Desing(1)).unwrap(), bits(&[1, 1]));
        assert_eq!(class_of(2, Lambda(2)).unwrap(), bits(&[0, 0, 0, 1]));
        assert!(class_of(1, Mu(2)).is_err());
        assert!(class_of(1, Mu(0)).is_err());
    }

    #[test]
    fn desing_class_is_sum() {
        for g in 1..5 {
            for i in 1..=g {
                let sum = &class_of(g, Mu(i)).unwrap() + &class_of(g, Lambda(i)).unwrap();
                assert_eq!(class_of(g, Desing(i)).unwrap(), sum);
            }
        }
    }

    #[test]
    fn intersection_table() {
        assert_eq!(geometric_intersection(2, Mu(1), Lambda(1)), Ok(1));
        assert_eq!(geometric_intersection(2, Mu(1), Lambda(2)), Ok(0));
        assert_eq!(geometric_intersection(2, Desing(1), Mu(2)), Ok(0));
        assert_eq!(geometric_intersection(2, Desing(1), Mu(1)), Ok(1));
        assert_eq!(geometric_intersection(2, Lambda(1), Desing(1)), Ok(1));
        assert_eq!(geometric_intersection(2, Desing(2), Desing(2)), Ok(0));
        assert_eq!(geometric_intersection(2, Mu(2), Mu(2)), Ok(0));
        assert!(geometric_intersection(1, Mu(1), Mu(2)).is_err());
    }

    #[test]
    fn represent_examples() {
        let zero = represent_simple(2, &Gf2Vector::zeros(4)).unwrap();
        assert!(zero.is_empty() && zero.bands.is_empty());
        assert!(verify_multicurve(&zero));

        let c = represent_simple(1, &bits(&[1, 1])).unwrap();
        assert_eq!(c.components, vec![Desing(1)]);
        assert!(c.bands.is_empty());

        let c = represent_simple(2, &bits(&[1, 1, 1, 0])).unwrap();
        assert_eq!(c.components, vec![Desing(1), Mu(2)]);
        assert_eq!(c.bands, vec![(0, 1)]);
        assert!(verify_multicurve(&c));

        assert!(matches!(
            represent_simple(2, &bits(&[1, 1])),
            Err(SurfaceError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn verify_rejects_bad_multicurves() {
        let crossing = Multicurve {
            genus: 1,
            components: vec![Mu(1), Lambda(1)],
            bands: vec![(0, 1)],
            homology_class: bits(&[1, 1]),
        };
        assert!(!verify_multicurve(&crossing));

        let disconnected = Multicurve {
            genus: 2,
            components: vec![Mu(1), Mu(2)],
            bands: vec![],
            homology_class: bits(&[1, 0, 1, 0]),
        };
        assert!(!verify_multicurve(&disconnected));

        let wrong_class = Multicurve { homology_class: bits(&[1, 0, 0, 0]), bands: vec![(0, 1)], ..disconnected.clone() };
        assert!(!verify_multicurve(&wrong_class));

        let cyclic = Multicurve {
            genus: 3,
            components: vec![Mu(1), Mu(2), Mu(3)],
            bands: vec![(0, 1), (1, 0)],
            homology_class: bits(&[1, 0, 1, 0, 1, 0]),
        };
        assert!(!verify_multicurve(&cyclic));
    }

    #[test]
    fn exhaustive_small_genus() {
        for g in 0..=3usize {
            for mask in 0..1u64 << (2 * g) {
                let alpha = Gf2Vector::from_mask(2 * g, mask);
                let c = represent_simple(g, &alpha).unwrap();
                assert!(verify_multicurve(&c), "g={g} alpha={alpha}");
                let mut sum = Gf2Vector::zeros(2 * g);
                for &k in &c.components {
                    sum.add_assign(&class_of(g, k).unwrap());
                }
                assert_eq!(sum, alpha);
                assert_eq!(represent_simple(g, &alpha).unwrap(), c);
            }
        }
    }
}
