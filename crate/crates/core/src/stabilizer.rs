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

//! Signed Pauli operators and stabilizer groups.
//!
//! A [`SignedPauli`] `(a, b, ε)` stands for `ε · E(a, b)` where
//! `E(a, b) = i^{a·b mod 4} X^a Z^b`. With this convention every `E(a, b)`
//! is Hermitian and squares to the identity, so elements of a stabilizer
//! group carry a real sign only.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{BinaryMatrix, BinaryVector, Echelon, EnumCap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    x: BinaryVector,
    z: BinaryVector,
    sign: Sign,
}

impl SignedPauli {
    pub fn new(x: BinaryVector, z: BinaryVector, sign: Sign) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch { expected: x.len(), found: z.len() });
        }
        Ok(Self { x, z, sign })
    }

    pub fn identity(n: usize) -> Self {
        Self { x: BinaryVector::zeros(n), z: BinaryVector::zeros(n), sign: Sign::Plus }
    }

    pub fn pure_x(x: BinaryVector, sign: Sign) -> Self {
        let n = x.len();
        Self { x, z: BinaryVector::zeros(n), sign }
    }

    pub fn pure_z(z: BinaryVector, sign: Sign) -> Self {
        let n = z.len();
        Self { x: BinaryVector::zeros(n), z, sign }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BinaryVector {
        &self.x
    }

    pub fn z(&self) -> &BinaryVector {
        &self.z
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x.len() - self.x.complement().and(&self.z.complement()).weight()
    }

    /// `[a | b]` as a single vector of length `2n`.
    pub fn symplectic(&self) -> BinaryVector {
        self.x.concat(&self.z)
    }

    pub fn commutes_with(&self, other: &SignedPauli) -> Result<bool> {
        Ok(!symplectic_inner(self, other)?)
    }

    /// `ε · D(a, b)` written as a tensor string like `-XYZI`.
    pub fn label(&self) -> String {
        let mut s = String::with_capacity(self.n() + 1);
        s.push(self.sign.symbol());
        for i in 0..self.n() {
            s.push(match (self.x.get(i), self.z.get(i)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            });
        }
        s
    }
}

impl fmt::Debug for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} X:{} Z:{}", self.sign.symbol(), self.x, self.z)
    }
}

/// `a d^T + b c^T mod 2`; true means the operators anticommute.
pub fn symplectic_inner(p: &SignedPauli, q: &SignedPauli) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::LengthMismatch { expected: p.n(), found: q.n() });
    }
    Ok(p.x.dot(&q.z) ^ p.z.dot(&q.x))
}

/// `E(a,b) E(c,d) = i^k E(a⊕c, b⊕d)`; returns `k mod 4` and the new components.
///
/// `D(a,b) D(c,d) = (-1)^{b·c} D(a⊕c, b⊕d)`, and the `E` prefactors contribute
/// `ab + cd - (a⊕c)(b⊕d)` quarter turns.
pub fn product_phase(p: &SignedPauli, q: &SignedPauli) -> Result<(u8, BinaryVector, BinaryVector)> {
    if p.n() != q.n() {
        return Err(Error::LengthMismatch { expected: p.n(), found: q.n() });
    }
    let x = p.x.xor(&q.x);
    let z = p.z.xor(&q.z);
    let quarter = p.x.overlap(&p.z) as i64 + q.x.overlap(&q.z) as i64 + 2 * p.z.overlap(&q.x) as i64
        - x.overlap(&z) as i64
        + 2 * (p.sign.is_minus() as i64 + q.sign.is_minus() as i64);
    Ok((quarter.rem_euclid(4) as u8, x, z))
}

/// Product of two Paulis whose result has a real sign.
pub fn multiply(p: &SignedPauli, q: &SignedPauli) -> Result<SignedPauli> {
    let (k, x, z) = product_phase(p, q)?;
    match k {
        0 => Ok(SignedPauli { x, z, sign: Sign::Plus }),
        2 => Ok(SignedPauli { x, z, sign: Sign::Minus }),
        _ => Err(Error::NonRealPhase),
    }
}

/// A group element together with the generators that produce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub pauli: SignedPauli,
    pub selector: BinaryVector,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub generator_count: usize,
    pub rank: usize,
    /// Pairs of generator indices that anticommute.
    pub anticommuting: Vec<(usize, usize)>,
    pub independent: bool,
    pub pass: bool,
}

impl ValidationReport {
    pub fn describe_failure(&self) -> Option<String> {
        if self.pass {
            return None;
        }
        let mut parts = Vec::new();
        if let Some(&(i, j)) = self.anticommuting.first() {
            parts.push(format!("generators {i} and {j} anticommute"));
        }
        if !self.independent {
            parts.push(format!("generators are dependent (rank {} < {})", self.rank, self.generator_count));
        }
        Some(parts.join("; "))
    }
}

/// `r` signed Pauli generators on `n` qubits.
#[derive(Clone, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<SignedPauli>,
}

impl fmt::Debug for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerGroup").field("n", &self.n).field("generators", &self.generators).finish()
    }
}

impl StabilizerGroup {
    /// Checks lengths only; see [`StabilizerGroup::validate`] for the group axioms.
    pub fn new(n: usize, generators: Vec<SignedPauli>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::LengthMismatch { expected: n, found: g.n() });
        }
        Ok(Self { n, generators })
    }

    /// Builds the group and rejects it unless it validates.
    pub fn validated(n: usize, generators: Vec<SignedPauli>) -> Result<Self> {
        let g = Self::new(n, generators)?;
        let report = g.validate();
        match report.describe_failure() {
            None => Ok(g),
            Some(why) => Err(Error::Validation(why)),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SignedPauli] {
        &self.generators
    }

    pub fn r(&self) -> usize {
        self.generators.len()
    }

    /// Number of logical qubits, `n - r`.
    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut anticommuting = Vec::new();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if symplectic_inner(&self.generators[i], &self.generators[j]).unwrap_or(true) {
                    anticommuting.push((i, j));
                }
            }
        }
        let rank = self.symplectic_matrix().rank();
        let independent = rank == self.generators.len();
        ValidationReport {
            generator_count: self.generators.len(),
            rank,
            pass: anticommuting.is_empty() && independent,
            anticommuting,
            independent,
        }
    }

    /// The `r x n` matrix of X-components.
    pub fn x_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::new(self.n, self.generators.iter().map(|g| g.x.clone()).collect()).expect("lengths checked")
    }

    /// The `r x n` matrix of Z-components.
    pub fn z_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::new(self.n, self.generators.iter().map(|g| g.z.clone()).collect()).expect("lengths checked")
    }

    /// The `r x 2n` matrix `[A | B]`.
    pub fn symplectic_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::new(2 * self.n, self.generators.iter().map(|g| g.symplectic()).collect())
            .expect("lengths checked")
    }

    /// Ordered product of the generators selected by `selector`.
    pub fn element(&self, selector: &BinaryVector) -> Result<GroupElement> {
        if selector.len() != self.generators.len() {
            return Err(Error::LengthMismatch { expected: self.generators.len(), found: selector.len() });
        }
        let mut acc = SignedPauli::identity(self.n);
        for i in selector.support() {
            acc = multiply(&acc, &self.generators[i])?;
        }
        Ok(GroupElement { pauli: acc, selector: selector.clone() })
    }

    /// Lazily walks all `2^r` elements (Gray-code order over the generators).
    pub fn elements(&self, cap: EnumCap) -> Result<impl Iterator<Item = Result<GroupElement>> + '_> {
        let selectors = BinaryMatrix::identity(self.generators.len()).codewords(cap)?;
        Ok(selectors.map(move |s| self.element(&s)))
    }

    /// Some element whose X-component is `a`, if one exists.
    pub fn element_with_x(&self, a: &BinaryVector) -> Result<Option<GroupElement>> {
        let ech = self.x_matrix().echelon();
        match ech.solve(a) {
            None => Ok(None),
            Some(sel) => self.element(&sel).map(Some),
        }
    }

    /// Generators rewritten as `[A | B ; 0 | C]` with `A` of full row rank,
    /// signs carried through the row operations.
    pub fn normal_form(&self) -> Result<NormalForm> {
        let ech: Echelon = self.x_matrix().echelon();
        let mut x_rows = Vec::with_capacity(ech.rank());
        for combo in &ech.combos {
            x_rows.push(self.element(combo)?.pauli);
        }
        let mut z_rows = Vec::with_capacity(ech.dependencies.len());
        for combo in &ech.dependencies {
            let el = self.element(combo)?;
            if !el.pauli.x.is_zero() {
                return Err(Error::NormalFormFailure("dependency row kept an X-component".into()));
            }
            z_rows.push(el.pauli);
        }
        Ok(NormalForm { n: self.n, x_rows, z_rows })
    }

    /// Basis of `{z : ε_z E(0, z) ∈ S}` with the sign of each basis element.
    pub fn pure_z_subgroup(&self) -> Result<PureZSubgroup> {
        let nf = self.normal_form()?;
        let rows: Vec<BinaryVector> = nf.z_rows.iter().map(|p| p.z.clone()).collect();
        let signs = nf.z_rows.iter().map(|p| p.sign).collect();
        let basis = BinaryMatrix::new(self.n, rows).expect("lengths checked");
        let echelon = basis.echelon();
        Ok(PureZSubgroup { basis, signs, echelon })
    }

    /// Some `y` with `sign(z) = (-1)^{y·z}` on every pure-Z stabilizer.
    pub fn character_vector_z(&self) -> Result<BinaryVector> {
        Ok(self.pure_z_subgroup()?.character_vector())
    }

    /// True when `y1` and `y2` induce the same signs on the pure-Z stabilizers.
    pub fn characters_equivalent(&self, y1: &BinaryVector, y2: &BinaryVector) -> Result<bool> {
        let pz = self.pure_z_subgroup()?;
        let diff = y1.xor(y2);
        Ok(pz.basis.rows().iter().all(|z| !z.dot(&diff)))
    }

    /// Whether `(x, z)` lies in the row space of `[A | B]` (sign ignored).
    pub fn contains_up_to_sign(&self, p: &SignedPauli) -> bool {
        self.symplectic_matrix().contains(&p.symplectic())
    }
}

/// Output of [`StabilizerGroup::normal_form`].
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub n: usize,
    /// `r - l` rows with linearly independent X-components.
    pub x_rows: Vec<SignedPauli>,
    /// `l` pure-Z rows.
    pub z_rows: Vec<SignedPauli>,
}

/// Pure-Z part of a stabilizer group.
#[derive(Debug, Clone)]
pub struct PureZSubgroup {
    basis: BinaryMatrix,
    signs: Vec<Sign>,
    echelon: Echelon,
}

impl PureZSubgroup {
    pub fn basis(&self) -> &BinaryMatrix {
        &self.basis
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn dim(&self) -> usize {
        self.basis.row_count()
    }

    pub fn contains(&self, z: &BinaryVector) -> bool {
        self.echelon.contains(z)
    }

    /// Sign of `E(0, z)` in the group, or `None` if it is not a stabilizer.
    /// Pure-Z Paulis multiply without phase, so signs compose as a character.
    pub fn sign_of(&self, z: &BinaryVector) -> Option<Sign> {
        let coeffs = self.echelon.solve(z)?;
        Some(coeffs.support().fold(Sign::Plus, |acc, i| acc * self.signs[i]))
    }

    /// Solves `z_j · y = [sign_j = -1]` for all basis rows; free coordinates are zero.
    pub fn character_vector(&self) -> BinaryVector {
        let n = self.basis.col_count();
        let augmented: Vec<BinaryVector> = self
            .basis
            .rows()
            .iter()
            .zip(&self.signs)
            .map(|(z, s)| z.concat(&BinaryVector::from_bits(&[s.is_minus()])))
            .collect();
        let ech = BinaryMatrix::new(n + 1, augmented).expect("lengths").echelon();
        let mut y = BinaryVector::zeros(n);
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            debug_assert!(p < n, "independent rows never pivot on the sign column");
            if row.get(n) {
                y.set(p, true);
            }
        }
        y
    }
}
