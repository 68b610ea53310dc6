//! The left-invariant orthonormal frame on the unit sphere `S^3 ⊂ H`.
//!
//! At `x = x1 + x2 i + x3 j + x4 k` the frame is `(i x, j x, k x)`:
//!
//! ```text
//! u1 = (-x2,  x1, -x4,  x3)
//! u2 = (-x3,  x4,  x1, -x2)
//! u3 = (-x4, -x3,  x2,  x1)
//! ```
//!
//! The fields are linear in `x`, so `u(-x) = -u(x)`; since the differential
//! of the antipodal map is `-id`, the frame descends to `RP^3`.
//!
//! Orientation convention: `det[x, u1, u2, u3] = +1`.

use std::ops::{Mul, Neg};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::scalar::Real;

/// Default tolerance for frame checks.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Tolerance on `| |x| - 1 |` for points fed to [`frame_at`]; raised to
/// `16 * epsilon` for scalar types too coarse to resolve it.
pub const UNIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum FrameError {
    #[error("point has norm {0}, not 1")]
    NotUnit(f64),
    #[error("vectors are degenerate: Gram determinant {0}")]
    DegenerateFrame(f64),
}

pub type Vec4<T> = [T; 4];

/// `x1 + x2 i + x3 j + x4 k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion<T> {
    pub x1: T,
    pub x2: T,
    pub x3: T,
    pub x4: T,
}

impl<T: Real> Quaternion<T> {
    pub fn new(x1: T, x2: T, x3: T, x4: T) -> Self {
        Self { x1, x2, x3, x4 }
    }

    pub fn from_array(a: Vec4<T>) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> Vec4<T> {
        [self.x1, self.x2, self.x3, self.x4]
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn norm(self) -> T {
        norm(&self.to_array())
    }
}

/// Hamilton product.
pub fn qmul<T: Real>(p: Quaternion<T>, q: Quaternion<T>) -> Quaternion<T> {
    Quaternion {
        x1: p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3 - p.x4 * q.x4,
        x2: p.x1 * q.x2 + p.x2 * q.x1 + p.x3 * q.x4 - p.x4 * q.x3,
        x3: p.x1 * q.x3 - p.x2 * q.x4 + p.x3 * q.x1 + p.x4 * q.x2,
        x4: p.x1 * q.x4 + p.x2 * q.x3 - p.x3 * q.x2 + p.x4 * q.x1,
    }
}

impl<T: Real> Mul for Quaternion<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        qmul(self, rhs)
    }
}

impl<T: Real> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.x1, -self.x2, -self.x3, -self.x4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Frame3<T> {
    pub u1: Vec4<T>,
    pub u2: Vec4<T>,
    pub u3: Vec4<T>,
}

impl<T: Real> Frame3<T> {
    pub fn vectors(&self) -> [Vec4<T>; 3] {
        [self.u1, self.u2, self.u3]
    }

    pub fn neg(&self) -> Self {
        Self { u1: scale(&self.u1, -T::one()), u2: scale(&self.u2, -T::one()), u3: scale(&self.u3, -T::one()) }
    }

    /// Largest absolute componentwise difference.
    pub fn max_deviation(&self, other: &Self) -> T {
        self.vectors()
            .iter()
            .zip(other.vectors().iter())
            .flat_map(|(a, b)| a.iter().zip(b.iter()).map(|(&p, &q)| (p - q).abs()))
            .fold(T::zero(), T::max)
    }
}

pub fn dot<T: Real>(a: &Vec4<T>, b: &Vec4<T>) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&p, &q)| acc + p * q)
}

pub fn norm<T: Real>(a: &Vec4<T>) -> T {
    dot(a, a).sqrt()
}

fn scale<T: Real>(a: &Vec4<T>, s: T) -> Vec4<T> {
    a.map(|c| c * s)
}

fn sub_scaled<T: Real>(a: &Vec4<T>, b: &Vec4<T>, s: T) -> Vec4<T> {
    [a[0] - s * b[0], a[1] - s * b[1], a[2] - s * b[2], a[3] - s * b[3]]
}

/// The three linear fields evaluated at `x`, with no unit-norm check.
pub fn linear_fields<T: Real>(x: &Vec4<T>) -> Frame3<T> {
    let [x1, x2, x3, x4] = *x;
    Frame3 {
        u1: [-x2, x1, -x4, x3],
        u2: [-x3, x4, x1, -x2],
        u3: [-x4, -x3, x2, x1],
    }
}

/// The same frame computed as `(i x, j x, k x)`.
pub fn frame_by_left_multiplication<T: Real>(x: &Vec4<T>) -> Frame3<T> {
    let q = Quaternion::from_array(*x);
    Frame3 {
        u1: (Quaternion::i() * q).to_array(),
        u2: (Quaternion::j() * q).to_array(),
        u3: (Quaternion::k() * q).to_array(),
    }
}

fn check_unit<T: Real>(x: &Vec4<T>) -> Result<(), FrameError> {
    let n = norm(x);
    let tol = T::lit(UNIT_TOL).max(T::epsilon() * T::lit(16.0));
    if (n - T::one()).abs() <= tol {
        Ok(())
    } else {
        Err(FrameError::NotUnit(n.to_f64_lossy()))
    }
}

pub fn frame_at<T: Real>(x: &Vec4<T>) -> Result<Frame3<T>, FrameError> {
    check_unit(x)?;
    Ok(linear_fields(x))
}

fn det3<T: Real>(m: [[T; 3]; 3]) -> T {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Determinant of the 4×4 matrix with the given columns (cofactor expansion
/// along the first row).
pub fn det4<T: Real>(cols: [Vec4<T>; 4]) -> T {
    let mut det = T::zero();
    for skip in 0..4 {
        let mut minor = [[T::zero(); 3]; 3];
        for (r, row) in minor.iter_mut().enumerate() {
            let mut c = 0;
            for (k, col) in cols.iter().enumerate() {
                if k != skip {
                    row[c] = col[r + 1];
                    c += 1;
                }
            }
        }
        let term = cols[skip][0] * det3(minor);
        det = if skip % 2 == 0 { det + term } else { det - term };
    }
    det
}

#[derive(Debug, Clone, PartialEq)]
pub enum FrameIssue {
    NotUnit { norm: f64 },
    NotOrthonormal { i: usize, j: usize, deviation: f64 },
    NotTangent { i: usize, deviation: f64 },
    WrongOrientation { determinant: f64 },
}

/// Outcome of [`check_frame`]. Measurements are always filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameCheck<T> {
    pub frame: Frame3<T>,
    pub max_orthonormal_deviation: T,
    pub max_tangency_deviation: T,
    pub determinant: T,
    pub issues: Vec<FrameIssue>,
}

impl<T> FrameCheck<T> {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks orthonormality, tangency and orientation of the frame at `x`.
pub fn check_frame<T: Real>(x: &Vec4<T>, tol: T) -> FrameCheck<T> {
    let mut issues = Vec::new();
    if let Err(FrameError::NotUnit(n)) = check_unit(x) {
        issues.push(FrameIssue::NotUnit { norm: n });
    }
    let frame = linear_fields(x);
    let us = frame.vectors();
    let mut max_on = T::zero();
    for i in 0..3 {
        for j in i..3 {
            let target = if i == j { T::one() } else { T::zero() };
            let dev = (dot(&us[i], &us[j]) - target).abs();
            max_on = max_on.max(dev);
            if dev > tol {
                issues.push(FrameIssue::NotOrthonormal { i: i + 1, j: j + 1, deviation: dev.to_f64_lossy() });
            }
        }
    }
    let mut max_tan = T::zero();
    for (i, u) in us.iter().enumerate() {
        let dev = dot(u, x).abs();
        max_tan = max_tan.max(dev);
        if dev > tol {
            issues.push(FrameIssue::NotTangent { i: i + 1, deviation: dev.to_f64_lossy() });
        }
    }
    let determinant = det4([*x, us[0], us[1], us[2]]);
    if (determinant - T::one()).abs() > tol {
        issues.push(FrameIssue::WrongOrientation { determinant: determinant.to_f64_lossy() });
    }
    FrameCheck {
        frame,
        max_orthonormal_deviation: max_on,
        max_tangency_deviation: max_tan,
        determinant,
        issues,
    }
}

/// Whether `field(-x) = -field(x)` within `tol`.
pub fn antipodal_check_with<T: Real, F>(field: F, x: &Vec4<T>, tol: T) -> bool
where
    F: Fn(&Vec4<T>) -> Frame3<T>,
{
    let minus_x = scale(x, -T::one());
    field(&minus_x).max_deviation(&field(x).neg()) <= tol
}

pub fn antipodal_check<T: Real>(x: &Vec4<T>, tol: T) -> bool {
    antipodal_check_with(linear_fields, x, tol)
}

/// Modified Gram–Schmidt. Fails when the Gram determinant of the inputs is
/// at most `tol`.
pub fn gram_schmidt<T: Real>(v1: &Vec4<T>, v2: &Vec4<T>, v3: &Vec4<T>, tol: T) -> Result<Frame3<T>, FrameError> {
    let vs = [v1, v2, v3];
    let mut gram = [[T::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            gram[i][j] = dot(vs[i], vs[j]);
        }
    }
    let g = det3(gram);
    if g <= tol {
        return Err(FrameError::DegenerateFrame(g.to_f64_lossy()));
    }
    let u1 = scale(v1, T::one() / norm(v1));
    let w2 = sub_scaled(v2, &u1, dot(v2, &u1));
    let u2 = scale(&w2, T::one() / norm(&w2));
    let w3 = sub_scaled(v3, &u1, dot(v3, &u1));
    let w3 = sub_scaled(&w3, &u2, dot(&w3, &u2));
    let u3 = scale(&w3, T::one() / norm(&w3));
    Ok(Frame3 { u1, u2, u3 })
}

/// `count` points uniformly distributed on `S^3`, normalized Gaussian
/// samples from a ChaCha8 stream seeded with `seed`.
pub fn random_unit_points<T: Real>(count: usize, seed: u64) -> Vec<Vec4<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n < 1e-6 {
            continue;
        }
        out.push(v.map(|c| T::lit(c / n)));
    }
    out
}
