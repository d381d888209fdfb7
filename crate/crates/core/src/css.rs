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

//! Signed CSS codes, their computational-basis codewords and the
//! constant-excitation property.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{BinaryMatrix, BinaryVector, EnumCap};
use crate::oblivious::{theorem3_check, CheckOptions};
use crate::report::{CheckEntry, CheckReport};
use crate::stabilizer::{Sign, SignedPauli, StabilizerGroup};

/// `CSS(X, C₂; Z, C₁⊥)` with Z signs `(-1)^{y·z}` and X signs `(-1)^{u·x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssCode {
    n: usize,
    c2: BinaryMatrix,
    c1_perp: BinaryMatrix,
    y: BinaryVector,
    u: BinaryVector,
    coset_gens: BinaryMatrix,
}

impl CssCode {
    /// `c2` and `c1_perp` must have independent rows and be mutually orthogonal.
    pub fn new(c2: BinaryMatrix, c1_perp: BinaryMatrix, y: BinaryVector, u: BinaryVector) -> Result<Self> {
        let n = c2.col_count();
        for len in [c1_perp.col_count(), y.len(), u.len()] {
            if len != n {
                return Err(Error::LengthMismatch { expected: n, found: len });
            }
        }
        if !c2.orthogonal_to(&c1_perp) {
            return Err(Error::InvalidCss("C₂ is not contained in C₁".into()));
        }
        for (name, m) in [("X", &c2), ("Z", &c1_perp)] {
            if m.rank() != m.row_count() {
                return Err(Error::InvalidCss(format!("{name} generators are dependent")));
            }
        }
        let c1 = c1_perp.dual_basis();
        let coset_gens = BinaryMatrix::extend_basis(&c2, &c1);
        Ok(Self { n, c2, c1_perp, y, u, coset_gens })
    }

    /// Recognizes a stabilizer group whose generators are each pure X or pure Z.
    pub fn from_stabilizer_group(s: &StabilizerGroup) -> Result<Option<Self>> {
        let n = s.n();
        let mut xs = Vec::new();
        let mut zs = Vec::new();
        for g in s.generators() {
            match (g.x().is_zero(), g.z().is_zero()) {
                (_, true) if !g.x().is_zero() => xs.push(g.clone()),
                (true, false) => zs.push(g.clone()),
                _ => return Ok(None),
            }
        }
        let solve = |gens: &[SignedPauli], pick: fn(&SignedPauli) -> &BinaryVector| {
            let rows: Vec<BinaryVector> =
                gens.iter().map(|g| pick(g).concat(&BinaryVector::from_bits(&[g.sign().is_minus()]))).collect();
            let ech = BinaryMatrix::new(n + 1, rows).expect("lengths").echelon();
            let mut v = BinaryVector::zeros(n);
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if p == n {
                    return None;
                }
                if row.get(n) {
                    v.set(p, true);
                }
            }
            Some(v)
        };
        let Some(u) = solve(&xs, SignedPauli::x) else { return Ok(None) };
        let Some(y) = solve(&zs, SignedPauli::z) else { return Ok(None) };
        let c2 = BinaryMatrix::new(n, xs.iter().map(|g| g.x().clone()).collect()).expect("lengths");
        let c1_perp = BinaryMatrix::new(n, zs.iter().map(|g| g.z().clone()).collect()).expect("lengths");
        Self::new(c2, c1_perp, y, u).map(Some)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.coset_gens.row_count()
    }

    pub fn c2(&self) -> &BinaryMatrix {
        &self.c2
    }

    pub fn c1_perp(&self) -> &BinaryMatrix {
        &self.c1_perp
    }

    pub fn y(&self) -> &BinaryVector {
        &self.y
    }

    pub fn u(&self) -> &BinaryVector {
        &self.u
    }

    /// Rows of `G_{C₁/C₂}`, obtained by extending a basis of `C₂` to `C₁`.
    pub fn coset_gens(&self) -> &BinaryMatrix {
        &self.coset_gens
    }

    pub fn with_y(&self, y: BinaryVector) -> Result<Self> {
        Self::new(self.c2.clone(), self.c1_perp.clone(), y, self.u.clone())
    }

    pub fn to_stabilizer_group(&self) -> Result<StabilizerGroup> {
        let mut gens = Vec::with_capacity(self.c2.row_count() + self.c1_perp.row_count());
        for x in self.c2.rows() {
            gens.push(SignedPauli::pure_x(x.clone(), Sign::from_parity(x.dot(&self.u))));
        }
        for z in self.c1_perp.rows() {
            gens.push(SignedPauli::pure_z(z.clone(), Sign::from_parity(z.dot(&self.y))));
        }
        StabilizerGroup::validated(self.n, gens).map_err(|e| Error::InvalidCss(e.to_string()))
    }

    /// `vG`, the coset shift for logical basis state `v`.
    pub fn logical_shift(&self, v: &BinaryVector) -> Result<BinaryVector> {
        if v.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), found: v.len() });
        }
        let mut acc = BinaryVector::zeros(self.n);
        for i in v.support() {
            acc.xor_assign(self.coset_gens.row(i));
        }
        Ok(acc)
    }

    /// Kets `vG ⊕ x ⊕ y` for `x ∈ C₂` with their signs `(-1)^{x·u}`.
    pub fn codeword_terms(&self, v: &BinaryVector, cap: EnumCap) -> Result<Vec<(BinaryVector, Sign)>> {
        let shift = self.logical_shift(v)?.xor(&self.y);
        Ok(self.c2.codewords(cap)?.map(|x| (x.xor(&shift), Sign::from_parity(x.dot(&self.u)))).collect())
    }

    pub fn codeword_profile(&self, v: &BinaryVector, cap: EnumCap) -> Result<CodewordProfile> {
        let shift = self.logical_shift(v)?.xor(&self.y);
        let mut weights = BTreeMap::new();
        for x in self.c2.codewords(cap)? {
            *weights.entry(x.xor_weight(&shift)).or_insert(0u64) += 1;
        }
        Ok(CodewordProfile { logical_v: v.to_string(), weights })
    }

    pub fn constant_excitation_check(&self, cap: EnumCap) -> Result<ConstantExcitationReport> {
        cap.admit(self.k() + self.c2.rank())?;
        let mut per_coset = Vec::new();
        for v in BinaryMatrix::identity(self.k()).codewords(cap)? {
            per_coset.push(self.codeword_profile(&v, cap)?);
        }
        per_coset.sort_by(|a, b| a.logical_v.cmp(&b.logical_v));
        let constants: Vec<Option<usize>> = per_coset.iter().map(CodewordProfile::constant).collect();
        let is_ce = constants.iter().all(Option::is_some);
        let constant = constants.first().copied().flatten();
        let equal = is_ce && constants.iter().all(|c| *c == constant);
        Ok(ConstantExcitationReport {
            is_ce,
            weights_equal_across_cosets: equal,
            constant: equal.then_some(constant).flatten(),
            per_coset,
        })
    }
}

/// Weight multiset `{w_H(vG ⊕ x ⊕ y) : x ∈ C₂}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodewordProfile {
    pub logical_v: String,
    pub weights: BTreeMap<usize, u64>,
}

impl CodewordProfile {
    pub fn constant(&self) -> Option<usize> {
        if self.weights.len() == 1 {
            self.weights.keys().next().copied()
        } else {
            None
        }
    }

    pub fn size(&self) -> u64 {
        self.weights.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantExcitationReport {
    pub is_ce: bool,
    pub weights_equal_across_cosets: bool,
    /// The shared weight, when every coset has the same one.
    pub constant: Option<usize>,
    pub per_coset: Vec<CodewordProfile>,
}

/// True when some single-qubit Pauli commutes with `s` without lying in it.
pub fn has_weight_one_logical(s: &StabilizerGroup) -> bool {
    let n = s.n();
    let sm = s.symplectic_matrix();
    let ech = sm.echelon();
    for q in 0..n {
        for (x, z) in [(true, false), (false, true), (true, true)] {
            let mut xv = BinaryVector::zeros(n);
            let mut zv = BinaryVector::zeros(n);
            xv.set(q, x);
            zv.set(q, z);
            let p = SignedPauli::new(xv, zv, Sign::Plus).expect("lengths");
            let commutes = s.generators().iter().all(|g| g.commutes_with(&p).expect("lengths"));
            if commutes && !ech.contains(&p.symplectic()) {
                return true;
            }
        }
    }
    false
}

/// Cross-checks the structural criterion against constant excitation.
pub fn css_theorem3_equiv(c: &CssCode, opts: &CheckOptions) -> Result<CheckReport> {
    let s = c.to_stabilizer_group()?;
    let t3 = theorem3_check(&s, opts)?;
    let ce = c.constant_excitation_check(opts.cap)?;
    let detecting = c.k() > 0 && !has_weight_one_logical(&s);
    let mut report = CheckReport::new("css_theorem3_equiv").param("error_detecting", detecting);
    report.push(CheckEntry::new("agreement", t3.passed() == ce.is_ce));
    if t3.passed() != ce.is_ce {
        report.anomalies.push(format!("theorem3 verdict {} but constant excitation {}", t3.passed(), ce.is_ce));
    }
    if detecting && ce.is_ce {
        let equal = ce.weights_equal_across_cosets;
        report.push(CheckEntry::new("equal-constants", equal));
        if !equal {
            report.anomalies.push("error-detecting constant-excitation code with differing coset weights".into());
        }
    }
    report = report.param("theorem3", t3.passed()).param("constant_excitation", ce.is_ce);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn bits(s: &str) -> BinaryVector {
        s.parse().unwrap()
    }

    fn five_one_two() -> CssCode {
        CssCode::from_stabilizer_group(&catalog::five_one_two()).unwrap().unwrap()
    }

    #[test]
    fn to_stabilizer_group_examples() {
        let c = CssCode::new(
            BinaryMatrix::from_strs(5, &["11110"]).unwrap(),
            BinaryMatrix::from_strs(5, &["11000", "00110", "00001"]).unwrap(),
            bits("10101"),
            BinaryVector::zeros(5),
        )
        .unwrap();
        let s = c.to_stabilizer_group().unwrap();
        let signs: Vec<Sign> = s.generators()[1..].iter().map(|g| g.sign()).collect();
        assert_eq!(signs, vec![Sign::Minus; 3]);

        let qrm = CssCode::from_stabilizer_group(&catalog::qrm16()).unwrap().unwrap();
        assert!(qrm.to_stabilizer_group().unwrap().generators().iter().all(|g| g.sign() == Sign::Plus));
        assert_eq!(qrm.k(), 4);

        let same = BinaryMatrix::from_strs(2, &["11"]).unwrap();
        let c = CssCode::new(same.clone(), same, BinaryVector::zeros(2), BinaryVector::zeros(2)).unwrap();
        assert_eq!(c.k(), 0);
        assert!(c.to_stabilizer_group().unwrap().validate().pass);

        let bad = CssCode::new(
            BinaryMatrix::from_strs(2, &["10"]).unwrap(),
            BinaryMatrix::from_strs(2, &["11"]).unwrap(),
            BinaryVector::zeros(2),
            BinaryVector::zeros(2),
        );
        assert!(matches!(bad, Err(Error::InvalidCss(_))));
        assert!(CssCode::from_stabilizer_group(&catalog::five_one_three()).unwrap().is_none());
    }

    #[test]
    fn profile_examples() {
        let shor = CssCode::from_stabilizer_group(&catalog::shor16()).unwrap().unwrap();
        for v in ["0", "1"] {
            let p = shor.codeword_profile(&bits(v), EnumCap::DEFAULT).unwrap();
            assert_eq!(p.weights, BTreeMap::from([(8, 8)]));
        }

        let c = five_one_two();
        assert_eq!(c.coset_gens().row(0).to_string(), "11000");
        let zero: Vec<String> =
            c.codeword_terms(&bits("0"), EnumCap::DEFAULT).unwrap().iter().map(|(k, _)| k.to_string()).collect();
        let mut zero = zero;
        zero.sort();
        assert_eq!(zero, vec!["01011", "10101"]);
        let mut one: Vec<String> =
            c.codeword_terms(&bits("1"), EnumCap::DEFAULT).unwrap().iter().map(|(k, _)| k.to_string()).collect();
        one.sort();
        assert_eq!(one, vec!["01101", "10011"]);
        assert_eq!(c.codeword_profile(&bits("1"), EnumCap::DEFAULT).unwrap().weights, BTreeMap::from([(3, 2)]));
    }

    #[test]
    fn constant_excitation_examples() {
        let shor = CssCode::from_stabilizer_group(&catalog::shor16()).unwrap().unwrap();
        let r = shor.constant_excitation_check(EnumCap::DEFAULT).unwrap();
        assert!(r.is_ce && r.weights_equal_across_cosets);
        assert_eq!(r.constant, Some(8));

        let r = five_one_two().constant_excitation_check(EnumCap::DEFAULT).unwrap();
        assert!(r.is_ce);
        assert_eq!(r.constant, Some(3));

        let qrm = CssCode::from_stabilizer_group(&catalog::qrm16()).unwrap().unwrap();
        let r = qrm.constant_excitation_check(EnumCap::DEFAULT).unwrap();
        assert!(!r.is_ce);
        assert_eq!(r.per_coset[0].weights, BTreeMap::from([(0, 1), (16, 1)]));
    }

    #[test]
    fn equivalence_on_examples() {
        let opts = CheckOptions::default();
        for s in [catalog::shor16(), catalog::qrm16(), catalog::five_one_two(), catalog::dual_rail()] {
            let c = CssCode::from_stabilizer_group(&s).unwrap().unwrap();
            let r = css_theorem3_equiv(&c, &opts).unwrap();
            assert!(r.passed() && r.anomalies.is_empty(), "{r:?}");
        }
    }

    #[test]
    fn padded_code_with_distance_one() {
        // [[5,1,2]] plus two padding qubits fixed to |1⟩ and |0⟩: CE holds and d = 1.
        let base = five_one_two();
        let pad = |v: &BinaryVector, extra: &[bool]| v.concat(&BinaryVector::from_bits(extra));
        let c2 = BinaryMatrix::new(7, base.c2().rows().iter().map(|r| pad(r, &[false, false])).collect()).unwrap();
        let mut zs: Vec<BinaryVector> = base.c1_perp().rows().iter().map(|r| pad(r, &[false, false])).collect();
        zs.push(BinaryVector::unit(7, 5));
        zs.push(BinaryVector::unit(7, 6));
        let c =
            CssCode::new(c2, BinaryMatrix::new(7, zs).unwrap(), pad(base.y(), &[true, false]), BinaryVector::zeros(7))
                .unwrap();
        let r = css_theorem3_equiv(&c, &CheckOptions::default()).unwrap();
        assert!(r.passed() && r.anomalies.is_empty());
        assert!(c.constant_excitation_check(EnumCap::DEFAULT).unwrap().is_ce);
    }

    fn random_css(seed: u64) -> CssCode {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=8);
        let c1_dim = rng.gen_range(1..=n);
        let c1 = BinaryMatrix::new(
            n,
            (0..c1_dim).map(|_| BinaryVector::from_u64(n, rng.gen::<u64>() & ((1 << n) - 1))).collect(),
        )
        .unwrap()
        .reduced_basis();
        let c2_rows = c1.rows().iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let c2 = BinaryMatrix::new(n, c2_rows).unwrap();
        let y = BinaryVector::from_u64(n, rng.gen::<u64>() & ((1 << n) - 1));
        CssCode::new(c2, c1.dual_basis(), y, BinaryVector::zeros(n)).unwrap()
    }

    proptest! {
        #[test]
        fn ce_verdict_is_invariant_under_c1_shift(seed in any::<u64>(), pick in any::<u64>()) {
            let c = random_css(seed);
            let c1 = c.c1_perp().dual_basis();
            let shift = c1.codewords(EnumCap::DEFAULT).unwrap().nth((pick % (1 << c1.row_count())) as usize).unwrap();
            let moved = c.with_y(c.y().xor(&shift)).unwrap();
            let a = c.constant_excitation_check(EnumCap::DEFAULT).unwrap();
            let b = moved.constant_excitation_check(EnumCap::DEFAULT).unwrap();
            prop_assert_eq!(a.is_ce, b.is_ce);
            prop_assert!(moved.to_stabilizer_group().unwrap().validate().pass);
        }

        #[test]
        fn equivalence_on_random_codes(seed in any::<u64>()) {
            let c = random_css(seed);
            let r = css_theorem3_equiv(&c, &CheckOptions::default()).unwrap();
            prop_assert!(r.anomalies.is_empty(), "{:?}", r);
        }
    }
}
