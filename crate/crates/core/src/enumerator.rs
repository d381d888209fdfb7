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

//! Weight enumerators, the MacWilliams transform, trigonometric evaluation
//! of signed enumerators and the weight divisibility criteria.
//!
//! Every trigonometric routine takes the tan argument `phi` directly.
//! [`level_to_angle`] maps a level `l` to `2π / 2^l`.

use std::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{BinaryMatrix, BinaryVector, Codewords, EnumCap};

/// Below this `|cos phi|` the tan form is treated as a pole.
pub const POLE_EPS: f64 = 1e-12;

/// `2π / 2^l`.
pub fn level_to_angle(l: u32) -> f64 {
    2.0 * PI / 2f64.powi(l as i32)
}

/// Exact weight distribution `A_0..A_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightEnumerator {
    m: usize,
    #[serde(serialize_with = "serialize_big")]
    coeffs: Vec<BigUint>,
}

fn serialize_big<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

impl WeightEnumerator {
    pub fn zero(m: usize) -> Self {
        Self { m, coeffs: vec![BigUint::zero(); m + 1] }
    }

    pub fn from_coeffs(m: usize, coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.len() != m + 1 {
            return Err(Error::LengthMismatch { expected: m + 1, found: coeffs.len() });
        }
        Ok(Self { m, coeffs })
    }

    /// Convenience for tests and small literals.
    pub fn from_u64s(m: usize, coeffs: &[u64]) -> Result<Self> {
        Self::from_coeffs(m, coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Counts every vector yielded by `words`.
    pub fn from_words(m: usize, words: impl IntoIterator<Item = BinaryVector>) -> Self {
        let mut counts = vec![0u64; m + 1];
        for w in words {
            counts[w.weight()] += 1;
        }
        Self { m, coeffs: counts.into_iter().map(BigUint::from).collect() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coefficient(&self, w: usize) -> &BigUint {
        &self.coeffs[w]
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Weights with a non-zero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(w, _)| w)
    }

    fn add_weight(&mut self, w: usize) {
        self.coeffs[w] += 1u32;
    }
}

/// Exhaustive weight enumerator of the row space of `basis`.
pub fn weight_enumerator(basis: &BinaryMatrix, cap: EnumCap) -> Result<WeightEnumerator> {
    Ok(WeightEnumerator::from_words(basis.col_count(), basis.codewords(cap)?))
}

/// `K_j(i) = Σ_s (-1)^s C(i, s) C(m - i, j - s)`.
pub fn krawtchouk(m: usize, j: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j.min(i) {
        if j - s > m - i {
            continue;
        }
        let term = BigInt::from(binomial(i, s) * binomial(m - i, j - s));
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

/// Dual enumerator `A'_j = (1/|C|) Σ_i A_i K_j(i)` where `dual_size = 2^m / |C|`.
pub fn macwilliams(p: &WeightEnumerator, dual_size: &BigUint) -> Result<WeightEnumerator> {
    let size = p.total();
    let full = BigUint::one() << p.m;
    if &size * dual_size != full {
        return Err(Error::InconsistentSize(format!(
            "|C| = {size} and dual size {dual_size} do not multiply to 2^{}",
            p.m
        )));
    }
    let size = BigInt::from(size);
    let mut out = Vec::with_capacity(p.m + 1);
    for j in 0..=p.m {
        let mut acc = BigInt::zero();
        for (i, a) in p.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc += BigInt::from(a.clone()) * krawtchouk(p.m, j, i);
            }
        }
        if !(&acc % &size).is_zero() || acc < BigInt::zero() {
            return Err(Error::InconsistentSize(format!("coefficient {j} is not a non-negative integer")));
        }
        out.push((acc / &size).to_biguint().expect("checked non-negative"));
    }
    Ok(WeightEnumerator { m: p.m, coeffs: out })
}

/// Weight distributions split by the sign of each word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedEnumeratorPair {
    pub plus: WeightEnumerator,
    pub minus: WeightEnumerator,
}

impl SignedEnumeratorPair {
    pub fn m(&self) -> usize {
        self.plus.m
    }

    /// Words `v ⊕ offset` for `v` in the row space of `basis`, signed by `(-1)^{y·v}`.
    ///
    /// With `offset = 0` this is the signed enumerator of the code itself.
    pub fn from_coset(basis: &BinaryMatrix, y: &BinaryVector, offset: &BinaryVector, cap: EnumCap) -> Result<Self> {
        let m = basis.col_count();
        for len in [y.len(), offset.len()] {
            if len != m {
                return Err(Error::LengthMismatch { expected: m, found: len });
            }
        }
        let mut plus = WeightEnumerator::zero(m);
        let mut minus = WeightEnumerator::zero(m);
        for v in basis.codewords(cap)? {
            let w = v.xor(offset).weight();
            if v.dot(y) {
                minus.add_weight(w);
            } else {
                plus.add_weight(w);
            }
        }
        Ok(Self { plus, minus })
    }

    pub fn from_code(basis: &BinaryMatrix, y: &BinaryVector, cap: EnumCap) -> Result<Self> {
        Self::from_coset(basis, y, &BinaryVector::zeros(basis.col_count()), cap)
    }

    /// Trivial signs.
    pub fn unsigned(p: WeightEnumerator) -> Self {
        let m = p.m;
        Self { plus: p, minus: WeightEnumerator::zero(m) }
    }

    /// `plus_w - minus_w` as floating point.
    fn net(&self) -> Vec<f64> {
        self.plus
            .coeffs
            .iter()
            .zip(&self.minus.coeffs)
            .map(|(p, q)| (BigInt::from(p.clone()) - BigInt::from(q.clone())).to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Neumaier-compensated sum of complex terms.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Compensated {
    re: (f64, f64),
    im: (f64, f64),
}

impl Compensated {
    pub(crate) fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    pub(crate) fn value(self) -> Complex64 {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

fn neumaier(acc: &mut (f64, f64), x: f64) {
    let (sum, comp) = *acc;
    let t = sum + x;
    let c = if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
    *acc = (t, comp + c);
}

/// `i^w`.
fn i_pow(w: usize) -> Complex64 {
    match w % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn check_pole(phi: f64) -> Result<()> {
    if phi.cos().abs() < POLE_EPS {
        Err(Error::PoleAtPi2(phi))
    } else {
        Ok(())
    }
}

/// `Σ_w (plus_w - minus_w) (i tan phi)^w`.
pub fn eval_trig(p: &SignedEnumeratorPair, phi: f64) -> Result<Complex64> {
    check_pole(phi)?;
    let t = phi.tan();
    let mut acc = Compensated::default();
    for (w, c) in p.net().into_iter().enumerate() {
        if c != 0.0 {
            acc.add(i_pow(w) * (c * t.powi(w as i32)));
        }
    }
    Ok(acc.value())
}

/// `cos^m(phi) · eval_trig`, i.e. `Σ_w (plus_w - minus_w) (i sin phi)^w cos^{m-w} phi`.
///
/// Defined for every `phi`; comparing it with 1 is the same as comparing
/// `eval_trig` with `sec^m phi` wherever the latter exists.
pub fn eval_trig_normalized(p: &SignedEnumeratorPair, phi: f64) -> Complex64 {
    let (s, c) = phi.sin_cos();
    let m = p.m();
    let mut acc = Compensated::default();
    for (w, n) in p.net().into_iter().enumerate() {
        if n != 0.0 {
            acc.add(i_pow(w) * (n * s.powi(w as i32) * c.powi((m - w) as i32)));
        }
    }
    acc.value()
}

/// `(i sin phi)^w cos^{m-w} phi` for `w = 0..=m`.
pub(crate) fn normalized_terms(m: usize, phi: f64) -> Vec<Complex64> {
    let (s, c) = phi.sin_cos();
    (0..=m).map(|w| i_pow(w) * (s.powi(w as i32) * c.powi((m - w) as i32))).collect()
}

/// True when `2^l` divides `value`.
pub fn divisible_by_pow2(value: i64, l: u32) -> bool {
    if l >= 63 {
        value == 0
    } else {
        value % (1i64 << l) == 0
    }
}

fn require_even(c: &BinaryMatrix) -> Result<()> {
    // Weight parity is linear, so even basis rows give an even code.
    match c.rows().iter().find(|r| r.weight() % 2 == 1) {
        Some(r) => Err(Error::OddWeightCodeword(r.to_string())),
        None => Ok(()),
    }
}

/// First word `w` of `offset ⊕ C⊥` with `2^l ∤ (m - 2 w_H(w))`.
fn first_bad_word(dual: &BinaryMatrix, offset: BinaryVector, l: u32, cap: EnumCap) -> Result<Option<BinaryVector>> {
    let m = dual.col_count() as i64;
    Ok(Codewords::coset(dual, offset, cap)?.find(|w| !divisible_by_pow2(m - 2 * w.weight() as i64, l)))
}

/// A witness against the criterion of [`corollary1_divisibility`], if any.
///
/// `y` encodes the character `v ↦ (-1)^{y·v}` on `C`. When it is trivial
/// on `C` the search runs over `C⊥`; otherwise over `B⊥ \ C⊥ = y ⊕ C⊥`.
pub fn divisibility_witness(c: &BinaryMatrix, y: &BinaryVector, l: u32, cap: EnumCap) -> Result<Option<BinaryVector>> {
    require_even(c)?;
    if y.len() != c.col_count() {
        return Err(Error::LengthMismatch { expected: c.col_count(), found: y.len() });
    }
    let dual = c.dual_basis();
    let trivial = c.rows().iter().all(|v| !v.dot(y));
    let offset = if trivial { BinaryVector::zeros(c.col_count()) } else { y.clone() };
    first_bad_word(&dual, offset, l, cap)
}

/// `2^l | (m - 2 w_H(w))` for every `w ∈ C⊥`.
pub fn lemma1_divisibility(c: &BinaryMatrix, l: u32, cap: EnumCap) -> Result<bool> {
    require_even(c)?;
    Ok(first_bad_word(&c.dual_basis(), BinaryVector::zeros(c.col_count()), l, cap)?.is_none())
}

/// Signed version: with `B` the kernel of the character inside `C`, checks
/// `B⊥ \ C⊥`, falling back to [`lemma1_divisibility`] for trivial signs.
pub fn corollary1_divisibility(c: &BinaryMatrix, y: &BinaryVector, l: u32, cap: EnumCap) -> Result<bool> {
    Ok(divisibility_witness(c, y, l, cap)?.is_none())
}

/// Signed sum over the even-weight code of length `m` with `w_H(y) = wy`:
/// `cos(phi (m - 2 wy)) sec^m phi`.
pub fn closed_form_even(m: usize, wy: usize, phi: f64) -> Result<Complex64> {
    check_pole(phi)?;
    Ok(closed_form_even_normalized(m, wy, phi) / phi.cos().powi(m as i32))
}

/// Signed sum over the odd-weight vectors of length `m`:
/// `i sin(phi (m - 2 wy)) sec^m phi`. Covers `y = 0` and `y = 1` as well.
pub fn closed_form_odd(m: usize, wy: usize, phi: f64) -> Result<Complex64> {
    check_pole(phi)?;
    Ok(closed_form_odd_normalized(m, wy, phi) / phi.cos().powi(m as i32))
}

/// [`closed_form_even`] multiplied through by `cos^m phi`.
pub fn closed_form_even_normalized(m: usize, wy: usize, phi: f64) -> Complex64 {
    Complex64::new((phi * (m as f64 - 2.0 * wy as f64)).cos(), 0.0)
}

/// [`closed_form_odd`] multiplied through by `cos^m phi`.
pub fn closed_form_odd_normalized(m: usize, wy: usize, phi: f64) -> Complex64 {
    Complex64::new(0.0, (phi * (m as f64 - 2.0 * wy as f64)).sin())
}
