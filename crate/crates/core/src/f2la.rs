// Copyright 2026 The coherent-shield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact linear algebra over GF(2).
//!
//! Vectors are bit-packed into `u64` words, bit `i` of the vector living in
//! bit `i % 64` of word `i / 64`. Index 0 is the leftmost character of the
//! textual form, so `"1000"` is the first unit vector.
//!
//! Row reduction always pivots on the leftmost available column and takes
//! the lowest-indexed row holding a one there, so every derived basis (duals,
//! coset transversals, solutions) is reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Upper bound on the number of elements an enumerating operation may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap(pub u64);

impl EnumCap {
    pub const DEFAULT: EnumCap = EnumCap(1 << 28);

    /// Fails unless `2^log2` elements fit under the cap.
    pub fn admit(self, log2: usize) -> Result<()> {
        if log2 >= 64 || (1u64 << log2) > self.0 {
            return Err(Error::CapExceeded { log2_required: log2 as u32, cap: self.0 });
        }
        Ok(())
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self { len, words: vec![!0; words_for(len)] };
        v.clear_tail();
        v
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    /// Builds a vector of length `len` from the low bits of `mask` (bit `i` of
    /// the mask becomes entry `i`). Requires `len <= 64`.
    pub fn from_u64(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_u64 needs len <= 64");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask;
            v.clear_tail();
        }
        v
    }

    /// Low 64 entries as a mask; the inverse of [`BinaryVector::from_u64`].
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "index {index} out of bounds for length {}", self.len);
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    pub fn try_get(&self, index: usize) -> Result<bool> {
        if index >= self.len {
            return Err(Error::IndexOutOfBounds { index, len: self.len });
        }
        Ok(self.get(index))
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "index {index} out of bounds for length {}", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of bounds for length {}", self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_len(&self, other: &Self) {
        assert_eq!(self.len, other.len, "vector length mismatch");
    }

    /// Parity of the standard inner product.
    pub fn dot(&self, other: &Self) -> bool {
        self.check_len(other);
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones & 1 == 1
    }

    /// Size of the intersection of supports, i.e. the integer inner product.
    pub fn overlap(&self, other: &Self) -> usize {
        self.check_len(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        self.check_len(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `w_H(self ⊕ other)` without allocating.
    pub fn xor_weight(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words.iter().zip(&other.words).map(|(a, b)| (a ^ b).count_ones() as usize).sum()
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &Self) -> Self {
        self.check_len(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Self { len: self.len, words }
    }

    pub fn or(&self, other: &Self) -> Self {
        self.check_len(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Self { len: self.len, words }
    }

    pub fn complement(&self) -> Self {
        let mut out = Self { len: self.len, words: self.words.iter().map(|w| !w).collect() };
        out.clear_tail();
        out
    }

    /// True when `supp(self) ⊆ supp(other)`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_len(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Indices of the one-bits, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.support().next()
    }

    /// Entries at `indices`, in that order.
    pub fn restrict(&self, indices: &[usize]) -> Self {
        let mut out = Self::zeros(indices.len());
        for (j, &i) in indices.iter().enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }

    /// Places `self` into a vector of length `len` at the given positions.
    pub fn embed(&self, len: usize, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.len);
        let mut out = Self::zeros(len);
        for i in self.support() {
            out.set(positions[i], true);
        }
        out
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in self.support() {
            out.set(i, true);
        }
        for i in other.support() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Kronecker product: entry `i * other.len() + j` is `self[i] & other[j]`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len * other.len);
        for i in self.support() {
            for j in other.support() {
                out.set(i * other.len + j, true);
            }
        }
        out
    }

    /// Splits into `(self[..at], self[at..])`.
    pub fn split_at(&self, at: usize) -> (Self, Self) {
        assert!(at <= self.len);
        let left = Self::from_indices(at, self.support().filter(|&i| i < at));
        let right = Self::from_indices(self.len - at, self.support().filter(|&i| i >= at).map(|i| i - at));
        (left, right)
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(Error::InvalidBit { position: i, found: other }),
            }
        }
        Ok(v)
    }
}

/// Lexicographic order on the textual form; shorter vectors sort first.
impl Ord for BinaryVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let first = diff.trailing_zeros();
                    return if (a >> first) & 1 == 1 { Ordering::Greater } else { Ordering::Less };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BinaryVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A matrix over GF(2), stored as rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BinaryVector>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<BinaryVector>,
    pub pivots: Vec<usize>,
    /// For each reduced row, which original rows were summed to produce it.
    pub combos: Vec<BinaryVector>,
    /// Combinations of original rows that sum to zero (a basis of the left kernel).
    pub dependencies: Vec<BinaryVector>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the echelon rows. Returns the remainder and the
    /// set of reduced rows that were added.
    pub fn reduce(&self, v: &BinaryVector) -> (BinaryVector, Vec<usize>) {
        let mut r = v.clone();
        let mut used = Vec::new();
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if r.get(p) {
                r.xor_assign(row);
                used.push(i);
            }
        }
        (r, used)
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coefficients over the original rows expressing `v`, if it lies in the span.
    pub fn solve(&self, v: &BinaryVector) -> Option<BinaryVector> {
        let (rem, used) = self.reduce(v);
        if !rem.is_zero() {
            return None;
        }
        let width = self.combos.first().or(self.dependencies.first()).map(|c| c.len()).unwrap_or(0);
        let mut coeffs = BinaryVector::zeros(width);
        for i in used {
            coeffs.xor_assign(&self.combos[i]);
        }
        Some(coeffs)
    }
}

impl BinaryMatrix {
    pub fn new(cols: usize, rows: Vec<BinaryVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { cols, rows })
    }

    pub fn empty(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: n, rows: (0..n).map(|i| BinaryVector::unit(n, i)).collect() }
    }

    /// Parses rows given as bitstrings; all must share a length.
    pub fn from_strs(cols: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows.iter().map(|s| s.parse()).collect::<Result<Vec<BinaryVector>>>()?;
        Self::new(cols, rows)
    }

    /// Generator matrix of the `[m, m-1, 2]` even-weight code: rows `e_j + e_{j+1}`.
    pub fn single_parity_check(m: usize) -> Self {
        let rows = (0..m.saturating_sub(1)).map(|j| BinaryVector::from_indices(m, [j, j + 1])).collect();
        Self { cols: m, rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BinaryVector> {
        self.rows
    }

    pub fn push_row(&mut self, row: BinaryVector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: row.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Full reduced row echelon form with row-combination tracking.
    pub fn echelon(&self) -> Echelon {
        let r = self.rows.len();
        let mut work: Vec<(BinaryVector, BinaryVector)> =
            self.rows.iter().enumerate().map(|(i, row)| (row.clone(), BinaryVector::unit(r, i))).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == work.len() {
                break;
            }
            let Some(found) = (rank..work.len()).find(|&i| work[i].0.get(col)) else {
                continue;
            };
            work.swap(rank, found);
            let (pivot_row, pivot_combo) = work[rank].clone();
            for (i, (row, combo)) in work.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                    combo.xor_assign(&pivot_combo);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let dependencies = work[rank..].iter().map(|(_, c)| c.clone()).collect();
        work.truncate(rank);
        let (rows, combos) = work.into_iter().unzip();
        Echelon { rows, pivots, combos, dependencies }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the row space in reduced echelon form.
    pub fn reduced_basis(&self) -> BinaryMatrix {
        BinaryMatrix { cols: self.cols, rows: self.echelon().rows }
    }

    /// Basis of `{x : M x^T = 0}`, one vector per non-pivot column.
    pub fn dual_basis(&self) -> BinaryMatrix {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BinaryVector::unit(self.cols, free);
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BinaryMatrix { cols: self.cols, rows }
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.echelon().contains(v)
    }

    /// True when both matrices span the same row space.
    pub fn span_eq(&self, other: &BinaryMatrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let a = self.echelon();
        let b = other.echelon();
        a.rows == b.rows
    }

    /// True when every row of `self` lies in the row space of `other`.
    pub fn span_within(&self, other: &BinaryMatrix) -> bool {
        let ech = other.echelon();
        self.cols == other.cols && self.rows.iter().all(|r| ech.contains(r))
    }

    /// True when every row of `self` is orthogonal to every row of `other`.
    pub fn orthogonal_to(&self, other: &BinaryMatrix) -> bool {
        self.rows.iter().all(|a| other.rows.iter().all(|b| !a.dot(b)))
    }

    /// Columns at `indices`, in that order.
    pub fn select_columns(&self, indices: &[usize]) -> BinaryMatrix {
        BinaryMatrix { cols: indices.len(), rows: self.rows.iter().map(|r| r.restrict(indices)).collect() }
    }

    /// Basis of `{v in rowspace : supp(v) ⊆ mask}`.
    pub fn subspace_supported_on(&self, mask: &BinaryVector) -> BinaryMatrix {
        assert_eq!(mask.len(), self.cols);
        // Outside columns first: rows whose pivot falls inside the mask vanish outside it.
        let outside: Vec<usize> = mask.complement().support().collect();
        let inside: Vec<usize> = mask.support().collect();
        let order: Vec<usize> = outside.iter().chain(&inside).copied().collect();
        let permuted = self.select_columns(&order);
        let ech = permuted.echelon();
        let rows = ech
            .rows
            .iter()
            .zip(&ech.pivots)
            .filter(|(_, &p)| p >= outside.len())
            .map(|(row, _)| row.embed(self.cols, &order))
            .collect();
        BinaryMatrix { cols: self.cols, rows }
    }

    /// Rows of `self` (taken from its reduced basis, in pivot order) that
    /// extend a basis of `sub` to a basis of `sub + self`.
    pub fn extend_basis(sub: &BinaryMatrix, sup: &BinaryMatrix) -> BinaryMatrix {
        let mut acc = sub.reduced_basis();
        let mut added = Vec::new();
        for row in sup.reduced_basis().rows {
            let ech = acc.echelon();
            if !ech.contains(&row) {
                acc.rows.push(row.clone());
                added.push(row);
            }
        }
        BinaryMatrix { cols: sup.cols, rows: added }
    }

    /// General Kronecker product; row `i * other.rows + j` is `self[i] ⊗ other[j]`.
    pub fn kron(&self, other: &BinaryMatrix) -> BinaryMatrix {
        let rows = self.rows.iter().flat_map(|a| other.rows.iter().map(move |b| a.kron(b))).collect();
        BinaryMatrix { cols: self.cols * other.cols, rows }
    }

    /// `[self | other]`; both must have the same number of rows.
    pub fn hstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.rows.len() != other.rows.len() {
            return Err(Error::LengthMismatch { expected: self.rows.len(), found: other.rows.len() });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect();
        Ok(BinaryMatrix { cols: self.cols + other.cols, rows })
    }

    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.cols });
        }
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(BinaryMatrix { cols: self.cols, rows })
    }

    /// All `2^rank` codewords of the row space, in Gray-code order over the
    /// reduced basis. The first codeword is zero.
    pub fn codewords(&self, cap: EnumCap) -> Result<Codewords> {
        let basis = self.echelon().rows;
        cap.admit(basis.len())?;
        Ok(Codewords::new(basis, BinaryVector::zeros(self.cols)))
    }

    /// One representative for each coset of the row space in `F_2^cols`,
    /// namely every vector supported on the non-pivot columns. Starts with zero.
    pub fn coset_representatives(&self, cap: EnumCap) -> Result<Codewords> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<BinaryVector> =
            (0..self.cols).filter(|&c| !is_pivot[c]).map(|c| BinaryVector::unit(self.cols, c)).collect();
        cap.admit(basis.len())?;
        Ok(Codewords::new(basis, BinaryVector::zeros(self.cols)))
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Gray-code walk over `offset + span(basis)`.
#[derive(Debug, Clone)]
pub struct Codewords {
    basis: Vec<BinaryVector>,
    current: BinaryVector,
    step: u64,
    total: u64,
}

impl Codewords {
    fn new(basis: Vec<BinaryVector>, offset: BinaryVector) -> Self {
        let total = 1u64 << basis.len();
        Self { basis, current: offset, step: 0, total }
    }

    /// Walk over the coset `offset + span(basis)` where `basis` rows are
    /// assumed independent.
    pub fn coset(basis: &BinaryMatrix, offset: BinaryVector, cap: EnumCap) -> Result<Self> {
        let rows = basis.echelon().rows;
        cap.admit(rows.len())?;
        Ok(Self::new(rows, offset))
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for Codewords {
    type Item = BinaryVector;

    fn next(&mut self) -> Option<BinaryVector> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let bit = self.step.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[bit]);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords {}
