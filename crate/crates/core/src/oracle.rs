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

//! Dense statevector ground truth for small codes.
//!
//! Basis index bit `n - 1 - q` holds qubit `q`, so the ket `|q_0 q_1 ...⟩`
//! reads left to right like a [`BinaryVector`].

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::f2la::{BinaryVector, EnumCap};
use crate::stabilizer::{SignedPauli, StabilizerGroup};

/// Largest supported qubit count.
pub const MAX_QUBITS: usize = 22;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

fn check_qubits(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        Err(Error::CapExceeded { log2_required: n as u32, cap: 1 << MAX_QUBITS })
    } else {
        Ok(())
    }
}

fn index_of(v: &BinaryVector) -> usize {
    let n = v.len();
    v.support().fold(0usize, |acc, q| acc | 1 << (n - 1 - q))
}

impl StateVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self { n, amps: vec![Complex64::new(0.0, 0.0); 1 << n] })
    }

    pub fn basis(v: &BinaryVector) -> Result<Self> {
        let mut s = Self::zeros(v.len())?;
        s.amps[index_of(v)] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_qubits(n)?;
        if amps.len() != 1 << n {
            return Err(Error::LengthMismatch { expected: 1 << n, found: amps.len() });
        }
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, v: &BinaryVector) -> Complex64 {
        self.amps[index_of(v)]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) {
        let norm = self.norm();
        if norm > 0.0 {
            self.amps.par_iter_mut().for_each(|a| *a /= norm);
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    fn axpy(&mut self, alpha: Complex64, other: &StateVector) {
        self.amps.par_iter_mut().zip(&other.amps).for_each(|(a, b)| *a += alpha * b);
    }

    /// Basis states with non-negligible amplitude, as bitstrings.
    pub fn support(&self, eps: f64) -> Vec<(BinaryVector, Complex64)> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > eps)
            .map(|(i, &a)| {
                let v = BinaryVector::from_indices(self.n, (0..self.n).filter(|q| i >> (self.n - 1 - q) & 1 == 1));
                (v, a)
            })
            .collect()
    }
}

/// `(1/√|C₂|) Σ_x (-1)^{x·u} |vG ⊕ x ⊕ y⟩`.
pub fn encode(c: &CssCode, v: &BinaryVector) -> Result<StateVector> {
    check_qubits(c.n())?;
    let terms = c.codeword_terms(v, EnumCap(1 << MAX_QUBITS))?;
    let mut s = StateVector::zeros(c.n())?;
    let amp = 1.0 / (terms.len() as f64).sqrt();
    for (ket, sign) in terms {
        s.amps[index_of(&ket)] += Complex64::new(amp * sign.value() as f64, 0.0);
    }
    Ok(s)
}

/// `exp(iθZ)^{⊗n}`: multiplies the amplitude of `|v⟩` by `exp(iθ(n - 2 w_H(v)))`.
pub fn apply_transversal_z(psi: &StateVector, theta: f64) -> StateVector {
    let n = psi.n as i64;
    let amps = psi
        .amps
        .par_iter()
        .enumerate()
        .map(|(i, &a)| a * Complex64::from_polar(1.0, theta * (n - 2 * i.count_ones() as i64) as f64))
        .collect();
    StateVector { n: psi.n, amps }
}

/// `ε E(a, b) |ψ⟩` using `E(a,b)|v⟩ = i^{a·b} (-1)^{b·v} |v ⊕ a⟩`.
pub fn apply_pauli(psi: &StateVector, p: &SignedPauli) -> Result<StateVector> {
    if p.n() != psi.n {
        return Err(Error::LengthMismatch { expected: psi.n, found: p.n() });
    }
    let a = index_of(p.x());
    let b = index_of(p.z());
    let phase = Complex64::i().powu((p.x().overlap(p.z()) % 4) as u32) * p.sign().value() as f64;
    let amps = (0..psi.amps.len())
        .into_par_iter()
        .map(|target| {
            let v = target ^ a;
            let s = if (b & v).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            psi.amps[v] * phase * s
        })
        .collect();
    Ok(StateVector { n: psi.n, amps })
}

/// `Π (I + g)/2 |ψ⟩` over the generators.
pub fn project(psi: &StateVector, s: &StabilizerGroup) -> Result<StateVector> {
    let mut cur = psi.clone();
    for g in s.generators() {
        let moved = apply_pauli(&cur, g)?;
        cur.amps.par_iter_mut().zip(&moved.amps).for_each(|(a, b)| *a = (*a + b) * 0.5);
    }
    Ok(cur)
}

/// Orthonormal basis of the code space.
///
/// CSS codes use the encoding map. Other codes project seeded random states
/// and orthonormalize.
pub fn code_basis(s: &StabilizerGroup, seed: u64) -> Result<Vec<StateVector>> {
    check_qubits(s.n())?;
    if let Some(c) = CssCode::from_stabilizer_group(s)? {
        return (0..1u64 << c.k())
            .map(|i| encode(&c, &BinaryVector::from_indices(c.k(), (0..c.k()).filter(|j| i >> j & 1 == 1))))
            .collect();
    }
    let dim = 1usize << s.k();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut basis: Vec<StateVector> = Vec::with_capacity(dim);
    let mut attempts = 0;
    while basis.len() < dim {
        attempts += 1;
        if attempts > 4 * dim + 16 {
            return Err(Error::Validation("could not span the code space".into()));
        }
        let amps = (0..1usize << s.n())
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let mut v = project(&StateVector { n: s.n(), amps }, s)?;
        for _ in 0..2 {
            for b in &basis {
                let c = b.inner(&v);
                v.axpy(-c, b);
            }
        }
        if v.norm() > 1e-6 {
            v.normalize();
            basis.push(v);
        }
    }
    Ok(basis)
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    /// Seed for the random states used on non-CSS codes.
    pub seed: u64,
    /// Required `|⟨ψ|U|ψ⟩|` is at least `1 - fidelity_tolerance`.
    pub fidelity_tolerance: f64,
    /// Largest allowed `‖(I - Π) U ψ‖` for preservation.
    pub leakage_tolerance: f64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { seed: 0x5eed, fidelity_tolerance: 1e-10, leakage_tolerance: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaResult {
    pub theta: f64,
    /// Largest `‖(I - Π) U ψ_i‖` over the basis.
    pub leakage: f64,
    pub preserved: bool,
    /// Smallest `|⟨ψ_i|U|ψ_i⟩|`.
    pub min_fidelity: f64,
    /// Largest deviation of `⟨ψ_i|U|ψ_j⟩` from `λ δ_ij`.
    pub logical_deviation: f64,
    /// `arg λ`, the shared phase when the action is trivial.
    pub phase: Option<f64>,
    pub invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub results: Vec<ThetaResult>,
}

impl InvarianceReport {
    /// Code space preserved at every angle.
    pub fn preserved_all(&self) -> bool {
        self.results.iter().all(|r| r.preserved)
    }

    /// Trivial logical action, up to global phase, at every angle.
    pub fn invariant_all(&self) -> bool {
        self.results.iter().all(|r| r.invariant)
    }

    pub fn min_fidelity(&self) -> f64 {
        self.results.iter().map(|r| r.min_fidelity).fold(f64::INFINITY, f64::min)
    }
}

/// Applies `exp(iθZ)^{⊗n}` to a basis of the code space for each `θ`.
pub fn invariance_up_to_phase(s: &StabilizerGroup, thetas: &[f64], opts: &OracleOptions) -> Result<InvarianceReport> {
    let basis = code_basis(s, opts.seed)?;
    let mut results = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let rotated: Vec<StateVector> = basis.iter().map(|b| apply_transversal_z(b, theta)).collect();
        let mut leakage = 0.0f64;
        for r in &rotated {
            let mut diff = project(r, s)?;
            diff.axpy(Complex64::new(-1.0, 0.0), r);
            leakage = leakage.max(diff.norm());
        }
        let lambda = basis[0].inner(&rotated[0]);
        let mut min_fidelity = f64::INFINITY;
        let mut deviation = 0.0f64;
        for (i, bi) in basis.iter().enumerate() {
            for (j, rj) in rotated.iter().enumerate() {
                let lij = bi.inner(rj);
                if i == j {
                    min_fidelity = min_fidelity.min(lij.norm());
                    deviation = deviation.max((lij - lambda).norm());
                } else {
                    deviation = deviation.max(lij.norm());
                }
            }
        }
        let preserved = leakage <= opts.leakage_tolerance;
        let invariant =
            preserved && min_fidelity >= 1.0 - opts.fidelity_tolerance && deviation <= opts.leakage_tolerance;
        results.push(ThetaResult {
            theta,
            leakage,
            preserved,
            min_fidelity,
            logical_deviation: deviation,
            phase: invariant.then(|| lambda.arg()),
            invariant,
        });
    }
    Ok(InvarianceReport { n: s.n(), k: s.k(), seed: opts.seed, results })
}

/// `π / 2^l` for `l = 1..=8` together with three angles that are not
/// rational multiples of `π`.
pub fn default_theta_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (1..=8).map(|l| std::f64::consts::PI / 2f64.powi(l)).collect();
    grid.extend([0.3, std::f64::consts::FRAC_1_SQRT_2, 1.0 / std::f64::consts::E]);
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn bits(s: &str) -> BinaryVector {
        s.parse().unwrap()
    }

    fn css(s: &StabilizerGroup) -> CssCode {
        CssCode::from_stabilizer_group(s).unwrap().unwrap()
    }

    #[test]
    fn encode_examples() {
        let psi = encode(&css(&catalog::five_one_two()), &bits("0")).unwrap();
        let support = psi.support(1e-12);
        assert_eq!(support.len(), 2);
        for (ket, a) in support {
            assert!(["01011", "10101"].contains(&ket.to_string().as_str()));
            assert!((a - FRAC_1_SQRT_2).norm() < 1e-15);
        }

        let dr = css(&catalog::dual_rail());
        let zero = encode(&dr, &bits("0")).unwrap();
        let one = encode(&dr, &bits("1")).unwrap();
        let kets: Vec<String> = [zero, one].iter().map(|s| s.support(1e-12)[0].0.to_string()).collect();
        let mut sorted = kets.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["01", "10"]);

        let shor = encode(&css(&catalog::shor16()), &bits("0")).unwrap();
        let support = shor.support(1e-12);
        assert_eq!(support.len(), 8);
        assert!(support.iter().all(|(k, a)| k.weight() == 8 && (a.re - 1.0 / 8f64.sqrt()).abs() < 1e-15));
    }

    #[test]
    fn transversal_z_examples() {
        let zero = StateVector::basis(&BinaryVector::zeros(3)).unwrap();
        let out = apply_transversal_z(&zero, 0.4);
        assert!((out.amplitude(&BinaryVector::zeros(3)) - Complex64::from_polar(1.0, 1.2)).norm() < 1e-15);
        assert_eq!(apply_transversal_z(&zero, 0.0), zero);
        let pair = encode(&css(&catalog::dual_rail()), &bits("0")).unwrap();
        let bell =
            StateVector::from_amplitudes(2, vec![0.0.into(), FRAC_1_SQRT_2.into(), FRAC_1_SQRT_2.into(), 0.0.into()])
                .unwrap();
        for th in [0.1, 1.3, 2.9] {
            assert!((apply_transversal_z(&bell, th).inner(&bell) - 1.0).norm() < 1e-15);
            assert!((apply_transversal_z(&pair, th).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn rotation_composes_and_preserves_norm() {
        let s = code_basis(&catalog::five_one_three(), 3).unwrap().remove(0);
        for (a, b) in [(0.2, 0.5), (1.1, -0.4)] {
            let two = apply_transversal_z(&apply_transversal_z(&s, a), b);
            let one = apply_transversal_z(&s, a + b);
            let diff: f64 =
                two.amplitudes().iter().zip(one.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            assert!(diff < 1e-12);
            assert!((two.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn projector_fixes_code_states() {
        let s = catalog::five_one_three();
        let basis = code_basis(&s, 9).unwrap();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            for g in s.generators() {
                let gb = apply_pauli(b, g).unwrap();
                assert!((gb.inner(b) - 1.0).norm() < 1e-12);
            }
        }
        assert!(basis[0].inner(&basis[1]).norm() < 1e-12);
    }

    #[test]
    fn invariance_examples() {
        let opts = OracleOptions::default();
        let r = invariance_up_to_phase(&catalog::shor16(), &[PI / 4.0, PI / 8.0, 0.3], &opts).unwrap();
        assert!(r.invariant_all());
        assert!(r.min_fidelity() >= 1.0 - 1e-10);
        assert!(r.results.iter().all(|t| t.phase.unwrap().abs() < 1e-12));

        let r = invariance_up_to_phase(&catalog::five_one_two(), &[0.3, 1.7], &opts).unwrap();
        assert!(r.invariant_all());
        for t in &r.results {
            let want = Complex64::from_polar(1.0, t.theta * (5.0 - 6.0)).arg();
            assert!((t.phase.unwrap() - want).abs() < 1e-12);
        }

        let r = invariance_up_to_phase(&catalog::qrm16(), &[PI / 8.0, PI / 16.0, 0.3], &opts).unwrap();
        assert!(r.results[0].preserved && r.results[1].preserved);
        assert!(!r.results[2].preserved);
        assert!(r.results[2].min_fidelity < 1.0 - 1e-3);
    }

    #[test]
    fn qubit_cap() {
        assert!(matches!(StateVector::zeros(23), Err(Error::CapExceeded { .. })));
    }
}
