//! Exact linear algebra over the two-element field.
//!
//! Vectors and matrix rows are bit-packed into `u64` words so that row
//! operations are word-parallel XORs. Coordinate `i` lives in word `i / 64`
//! at bit `i % 64`.
//!
//! Subspaces are kept in reduced row-echelon form with pivots taken at the
//! lowest set coordinate, so equal subspaces have bit-identical bases.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

const WORD_BITS: usize = 64;
/// Selects the even coordinates (the μ slots) within a word.
const EVEN_MASK: u64 = 0x5555_5555_5555_5555;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid bit value {0} (expected 0 or 1)")]
    InvalidBit(u64),
    #[error("invalid bit character {0:?}")]
    InvalidBitChar(char),
    #[error("partial subspace is not contained in the target subspace")]
    NotContained,
}

fn words_for(dim: usize) -> usize {
    dim.div_ceil(WORD_BITS)
}

/// An element of `Z_2^dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    words: Vec<u64>,
    dim: usize,
}

impl Gf2Vector {
    pub fn zeros(dim: usize) -> Self {
        Self { words: vec![0; words_for(dim)], dim }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.set(i, true);
        v
    }

    /// Builds a vector from 0/1 entries, coordinate 0 first.
    pub fn from_bits<B: Copy + Into<u64>>(bits: &[B]) -> Result<Self, Gf2Error> {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            match b.into() {
                0 => {}
                1 => v.set(i, true),
                other => return Err(Gf2Error::InvalidBit(other)),
            }
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Builds a vector whose coordinate `i` is bit `dim - 1 - i` of `mask`,
    /// i.e. coordinate 0 is the most significant bit.
    pub fn from_mask(dim: usize, mask: u64) -> Self {
        assert!(dim <= 64, "from_mask supports at most 64 coordinates");
        let mut v = Self::zeros(dim);
        for i in 0..dim {
            v.set(i, (mask >> (dim - 1 - i)) & 1 == 1);
        }
        v
    }

    /// Inverse of [`Gf2Vector::from_mask`].
    pub fn to_mask(&self) -> u64 {
        assert!(self.dim <= 64, "to_mask supports at most 64 coordinates");
        (0..self.dim).fold(0u64, |acc, i| (acc << 1) | u64::from(self.get(i)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim, "coordinate {i} out of range (dim={})", self.dim);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "coordinate {i} out of range (dim={})", self.dim);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set coordinate; the pivot of this vector in echelon form.
    pub fn leading_index(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// In-place addition.
    ///
    /// # Panics
    /// Panics if the dimensions differ.
    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Gf2Error> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// Standard dot product `sum_i a_i b_i`.
    ///
    /// # Panics
    /// Panics if the dimensions differ.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn try_dot(&self, other: &Self) -> Result<bool, Gf2Error> {
        check_dim(self.dim, other.dim)?;
        Ok(self.dot(other))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.dim).map(move |i| self.get(i))
    }

    /// Entries as 0/1 bytes, coordinate 0 first.
    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.get(i)).collect()
    }

    /// Copies this vector into a larger ambient space starting at `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Self {
        assert!(offset + self.dim <= dim, "embedding does not fit");
        let mut out = Self::zeros(dim);
        for i in self.support() {
            out.set(offset + i, true);
        }
        out
    }

    /// Exchanges coordinates `2i` and `2i + 1` for every `i`.
    fn swap_pairs(&self) -> Self {
        debug_assert!(self.dim.is_multiple_of(2));
        let words = self
            .words
            .iter()
            .map(|&w| ((w & EVEN_MASK) << 1) | ((w >> 1) & EVEN_MASK))
            .collect();
        Self { words, dim: self.dim }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<(), Gf2Error> {
    if expected == found {
        Ok(())
    } else {
        Err(Gf2Error::DimensionMismatch { expected, found })
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Gf2Vector {
    type Err = Gf2Error;

    /// Parses strings such as `"1101"`; commas and whitespace are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::new();
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                ',' | ' ' | '\t' => {}
                other => return Err(Gf2Error::InvalidBitChar(other)),
            }
        }
        Ok(Self::from_bools(&bits))
    }
}

impl std::ops::Add for &Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: Self) -> Gf2Vector {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

/// Reduces `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot column of each surviving row (strictly increasing).
fn rref_in_place(rows: &mut Vec<Gf2Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.add_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

/// Dense matrix over `Z_2` with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows: vec![Gf2Vector::zeros(cols); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(), cols: n }
    }

    pub fn from_rows(rows: Vec<Gf2Vector>, cols: usize) -> Result<Self, Gf2Error> {
        for r in &rows {
            check_dim(cols, r.dim())?;
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Gf2Vector], rows: usize) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            check_dim(rows, c.dim())?;
            for i in c.support() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    /// Convenience constructor from nested 0/1 rows; `cols` is taken from
    /// the first row (0 when there are no rows).
    pub fn from_bits(rows: &[&[u8]]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| Gf2Vector::from_bits(r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows, cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector::from_bools(&self.rows.iter().map(|r| r.get(j)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// Row rank by elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// `self * v`.
    pub fn mul_vec(&self, v: &Gf2Vector) -> Result<Gf2Vector, Gf2Error> {
        check_dim(self.cols, v.dim())?;
        Ok(Gf2Vector::from_bools(
            &self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>(),
        ))
    }

    /// `self * rhs`; each output row is the XOR of the rows of `rhs`
    /// selected by the corresponding row of `self`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Gf2Error> {
        check_dim(self.cols, rhs.nrows())?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = Gf2Vector::zeros(rhs.cols);
                for k in r.support() {
                    acc.add_assign(&rhs.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Self { rows, cols: rhs.cols })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, Gf2Error> {
        check_dim(self.cols, other.cols)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { rows, cols: self.cols })
    }

    /// The null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Gf2Subspace {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = Gf2Vector::unit(self.cols, free);
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect::<Vec<_>>();
        Gf2Subspace::span(self.cols, &basis).expect("kernel vectors have matching dimension")
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.rows.len();
        if n != self.cols {
            return None;
        }
        // Augment [A | I] and reduce.
        let mut rows: Vec<Gf2Vector> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut aug = r.embed(2 * n, 0);
                aug.set(n + i, true);
                aug
            })
            .collect();
        let pivots = rref_in_place(&mut rows, n);
        if pivots.len() != n {
            return None;
        }
        let inv = rows
            .iter()
            .map(|r| Gf2Vector::from_bools(&(n..2 * n).map(|j| r.get(j)).collect::<Vec<_>>()))
            .collect();
        Some(Self { rows: inv, cols: n })
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.rows.len(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

pub fn rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Gf2Matrix) -> Gf2Subspace {
    m.kernel()
}

/// A linear subspace of `Z_2^ambient_dim`, stored as a basis in reduced
/// row-echelon form with strictly increasing pivots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Subspace {
    ambient_dim: usize,
    basis: Vec<Gf2Vector>,
    pivots: Vec<usize>,
}

impl Gf2Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| Gf2Vector::unit(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of `vectors`, echelonized. Dependent and zero vectors are
    /// allowed.
    pub fn span(ambient_dim: usize, vectors: &[Gf2Vector]) -> Result<Self, Gf2Error> {
        for v in vectors {
            check_dim(ambient_dim, v.dim())?;
        }
        let mut rows = vectors.to_vec();
        let pivots = rref_in_place(&mut rows, ambient_dim);
        Ok(Self { ambient_dim, basis: rows, pivots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Gf2Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon basis; the result is zero iff `v`
    /// lies in the subspace.
    fn reduce(&self, v: &Gf2Vector) -> Gf2Vector {
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.add_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, v: &Gf2Vector) -> bool {
        v.dim() == self.ambient_dim && self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// `a + b`: the row space of both bases stacked.
    pub fn sum(&self, other: &Self) -> Result<Self, Gf2Error> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &all)
    }

    /// `a ∩ b`, computed as the common kernel of both annihilator matrices.
    pub fn intersection(&self, other: &Self) -> Result<Self, Gf2Error> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let stacked = quotient_map(self.ambient_dim, self)?
            .vstack(&quotient_map(other.ambient_dim, other)?)?;
        Ok(stacked.kernel())
    }

    /// Vectors that extend this subspace's basis to a basis of `target`.
    ///
    /// Candidates are the echelon basis vectors of `target`, tried in order
    /// of increasing pivot; a candidate is kept when it is not already in
    /// the span built so far.
    pub fn extend_basis(&self, target: &Self) -> Result<Vec<Gf2Vector>, Gf2Error> {
        check_dim(target.ambient_dim, self.ambient_dim)?;
        if !self.is_subspace_of(target) {
            return Err(Gf2Error::NotContained);
        }
        let mut current = self.clone();
        let mut added = Vec::with_capacity(target.dim() - self.dim());
        for candidate in &target.basis {
            if !current.contains(candidate) {
                current = current.sum(&Self::span(self.ambient_dim, std::slice::from_ref(candidate))?)?;
                added.push(candidate.clone());
            }
        }
        Ok(added)
    }
}

impl fmt::Debug for Gf2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}} < Z2^{}", self.ambient_dim)
    }
}

pub fn subspace_intersection(a: &Gf2Subspace, b: &Gf2Subspace) -> Result<Gf2Subspace, Gf2Error> {
    a.intersection(b)
}

pub fn subspace_sum(a: &Gf2Subspace, b: &Gf2Subspace) -> Result<Gf2Subspace, Gf2Error> {
    a.sum(b)
}

pub fn extend_basis(partial: &Gf2Subspace, target: &Gf2Subspace) -> Result<Vec<Gf2Vector>, Gf2Error> {
    partial.extend_basis(target)
}

/// Matrix of the projection `Z_2^ambient_dim -> Z_2^ambient_dim / kernel`.
///
/// The quotient is coordinatized by the non-pivot columns `j` of the
/// kernel's echelon basis: row `j` is the functional dual to `e_j` that
/// vanishes on the kernel, namely `e_j + sum_p b_p[j] e_p` over the kernel
/// basis vectors `b_p` with pivot `p`. Rows appear in increasing `j`.
pub fn quotient_map(ambient_dim: usize, kernel: &Gf2Subspace) -> Result<Gf2Matrix, Gf2Error> {
    check_dim(ambient_dim, kernel.ambient_dim)?;
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &kernel.pivots {
        is_pivot[p] = true;
    }
    let rows = (0..ambient_dim)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut row = Gf2Vector::unit(ambient_dim, j);
            for (b, &p) in kernel.basis.iter().zip(&kernel.pivots) {
                if b.get(j) {
                    row.set(p, true);
                }
            }
            row
        })
        .collect();
    Ok(Gf2Matrix { rows, cols: ambient_dim })
}

/// `Z_2^{2g}` with the mod-2 intersection form in the ordered basis
/// `(μ_1, λ_1, ..., μ_g, λ_g)`: `J(μ_i, λ_i) = J(λ_i, μ_i) = 1`, all other
/// pairings zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    genus: usize,
}

impl SymplecticSpace {
    pub fn new(genus: usize) -> Self {
        Self { genus }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn mu(&self, i: usize) -> Gf2Vector {
        assert!(i >= 1 && i <= self.genus, "handle index {i} out of range");
        Gf2Vector::unit(self.dim(), 2 * (i - 1))
    }

    pub fn lambda(&self, i: usize) -> Gf2Vector {
        assert!(i >= 1 && i <= self.genus, "handle index {i} out of range");
        Gf2Vector::unit(self.dim(), 2 * (i - 1) + 1)
    }

    pub fn form_matrix(&self) -> Gf2Matrix {
        let n = self.dim();
        let mut j = Gf2Matrix::zeros(n, n);
        for i in 0..self.genus {
            j.set(2 * i, 2 * i + 1, true);
            j.set(2 * i + 1, 2 * i, true);
        }
        j
    }

    /// `a^T J b`.
    pub fn pairing(&self, a: &Gf2Vector, b: &Gf2Vector) -> Result<bool, Gf2Error> {
        check_dim(self.dim(), a.dim())?;
        check_dim(self.dim(), b.dim())?;
        Ok(a.dot(&b.swap_pairs()))
    }

    pub fn is_isotropic(&self, sub: &Gf2Subspace) -> Result<bool, Gf2Error> {
        check_dim(self.dim(), sub.ambient_dim())?;
        let basis = sub.basis();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if self.pairing(a, b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The transvection `v -> v + J(v, w) w`.
    pub fn transvect(&self, v: &Gf2Vector, w: &Gf2Vector) -> Result<Gf2Vector, Gf2Error> {
        let mut out = v.clone();
        if self.pairing(v, w)? {
            out.add_assign(w);
        }
        Ok(out)
    }

    /// Matrix of the composite `T_{w_m} ∘ ... ∘ T_{w_1}` (the first listed
    /// transvection is applied first).
    pub fn transvection_product(&self, ws: &[Gf2Vector]) -> Result<Gf2Matrix, Gf2Error> {
        let n = self.dim();
        let mut images = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = Gf2Vector::unit(n, j);
            for w in ws {
                v = self.transvect(&v, w)?;
            }
            images.push(v);
        }
        Gf2Matrix::from_columns(&images, n)
    }

    /// A seed-determined symplectic matrix built from `4 * dim` random
    /// transvections drawn from a ChaCha8 stream.
    pub fn random_symplectic(&self, seed: u64) -> Gf2Matrix {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ws: Vec<Gf2Vector> = (0..4 * n)
            .map(|_| Gf2Vector::from_bools(&(0..n).map(|_| rng.random::<bool>()).collect::<Vec<_>>()))
            .collect();
        self.transvection_product(&ws)
            .expect("transvection vectors have the ambient dimension")
    }

    /// Whether `t^T J t = J`.
    pub fn preserves_form(&self, t: &Gf2Matrix) -> bool {
        let j = self.form_matrix();
        t.transpose()
            .mul(&j)
            .and_then(|tj| tj.mul(t))
            .is_ok_and(|m| m == j)
    }
}

pub fn symplectic_pairing(s: &SymplecticSpace, a: &Gf2Vector, b: &Gf2Vector) -> Result<bool, Gf2Error> {
    s.pairing(a, b)
}

pub fn is_isotropic(s: &SymplecticSpace, sub: &Gf2Subspace) -> Result<bool, Gf2Error> {
    s.is_isotropic(sub)
}

pub fn random_symplectic(s: &SymplecticSpace, seed: u64) -> Gf2Matrix {
    s.random_symplectic(seed)
}
