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

//! Oblivious code constructions and brute-force minimum distance.
//!
//! Lifted codes place the `M` copies of seed qubit `i` at indices
//! `i*M .. i*M + M`, matching [`BinaryVector::kron`].

use rayon::prelude::*;
use serde::Serialize;

use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::f2la::{BinaryMatrix, BinaryVector, Echelon};
use crate::stabilizer::{Sign, SignedPauli, StabilizerGroup};

/// `[1, 0, 1, 0, ...]` of length `m`.
pub fn alternating_block(m: usize) -> BinaryVector {
    BinaryVector::from_indices(m, (0..m).step_by(2))
}

fn check_blocks(m: usize, blocks: &[BinaryVector]) -> Result<()> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::OddM(m));
    }
    for (i, b) in blocks.iter().enumerate() {
        if b.len() != m {
            return Err(Error::LengthMismatch { expected: m, found: b.len() });
        }
        if b.weight() != m / 2 {
            return Err(Error::BadYWeight { block: i, weight: b.weight(), expected: m / 2 });
        }
    }
    Ok(())
}

fn concat_all(parts: &[BinaryVector]) -> BinaryVector {
    parts.iter().fold(BinaryVector::zeros(0), |acc, p| acc.concat(p))
}

/// `CSS(X, A₂ ⊗ 1_M; Z, A₁⊥ ⊗ e₁ + I_t ⊗ W)` with `W` the even-weight code of length `M`.
///
/// `y_blocks` defaults to [`alternating_block`] on every block.
pub fn construct_css_product(
    a1: &BinaryMatrix,
    a2: &BinaryMatrix,
    m: usize,
    y_blocks: Option<Vec<BinaryVector>>,
) -> Result<CssCode> {
    let t = a1.col_count();
    if a2.col_count() != t {
        return Err(Error::LengthMismatch { expected: t, found: a2.col_count() });
    }
    if m < 2 || m % 2 == 1 {
        return Err(Error::OddM(m));
    }
    if !a2.span_within(a1) {
        return Err(Error::ContainmentViolated);
    }
    let blocks = y_blocks.unwrap_or_else(|| vec![alternating_block(m); t]);
    if blocks.len() != t {
        return Err(Error::LengthMismatch { expected: t, found: blocks.len() });
    }
    check_blocks(m, &blocks)?;
    let ones = BinaryMatrix::new(m, vec![BinaryVector::ones(m)]).expect("lengths");
    let e1 = BinaryMatrix::new(m, vec![BinaryVector::unit(m, 0)]).expect("lengths");
    let c2 = a2.reduced_basis().kron(&ones);
    let c1_perp = a1
        .dual_basis()
        .kron(&e1)
        .vstack(&BinaryMatrix::identity(t).kron(&BinaryMatrix::single_parity_check(m)))
        .expect("lengths");
    CssCode::new(c2, c1_perp, concat_all(&blocks), BinaryVector::zeros(t * m))
}

/// The `[[4L², 1, 2L]]` Shor code from `A₁ = F_2^{2L}`, `A₂` the even-weight code, `M = 2L`.
pub fn shor_family(l: usize) -> Result<CssCode> {
    if l == 0 {
        return Err(Error::OddM(0));
    }
    let m = 2 * l;
    construct_css_product(&BinaryMatrix::identity(m), &BinaryMatrix::single_parity_check(m), m, None)
}

/// Inputs to [`construct_stabilizer_lift`].
#[derive(Debug, Clone)]
pub struct ConstructionSpec {
    pub seed: StabilizerGroup,
    pub m: usize,
    /// One block of length `M` and weight `M/2` per seed qubit.
    pub y_blocks: Vec<BinaryVector>,
    /// Sign of the weight-1 Z stabilizer on each padding qubit.
    pub padding_signs: Vec<Sign>,
}

impl ConstructionSpec {
    pub fn new(seed: StabilizerGroup, m: usize) -> Self {
        let y_blocks = vec![alternating_block(m); seed.n()];
        Self { seed, m, y_blocks, padding_signs: Vec::new() }
    }

    pub fn with_y_blocks(mut self, blocks: Vec<BinaryVector>) -> Self {
        self.y_blocks = blocks;
        self
    }

    /// `s` padding qubits with the default sign `-1`.
    pub fn with_padding(mut self, s: usize) -> Self {
        self.padding_signs = vec![Sign::Minus; s];
        self
    }

    pub fn output_qubits(&self) -> usize {
        self.seed.n() * self.m + self.padding_signs.len()
    }
}

/// `[A⊗1_M | B⊗e₁ ; 0 | C⊗e₁ ; 0 | I_n⊗W]` with seed signs on the first two
/// blocks and `(-1)^{y_i·w}` on the third, followed by padding.
pub fn construct_stabilizer_lift(spec: &ConstructionSpec) -> Result<StabilizerGroup> {
    let n = spec.seed.n();
    let m = spec.m;
    if spec.y_blocks.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: spec.y_blocks.len() });
    }
    check_blocks(m, &spec.y_blocks)?;
    let nf = spec.seed.normal_form()?;
    let ones = BinaryVector::ones(m);
    let e1 = BinaryVector::unit(m, 0);
    let total = spec.output_qubits();
    let pad = |v: BinaryVector| v.concat(&BinaryVector::zeros(spec.padding_signs.len()));
    let mut gens = Vec::new();
    for row in nf.x_rows.iter().chain(&nf.z_rows) {
        let x = pad(row.x().kron(&ones));
        let z = pad(row.z().kron(&e1));
        gens.push(SignedPauli::new(x, z, row.sign())?);
    }
    let w = BinaryMatrix::single_parity_check(m);
    for (i, block) in spec.y_blocks.iter().enumerate() {
        for wr in w.rows() {
            let z = pad(BinaryVector::unit(n, i).kron(wr));
            gens.push(SignedPauli::pure_z(z, Sign::from_parity(wr.dot(block))));
        }
    }
    for (j, &sign) in spec.padding_signs.iter().enumerate() {
        gens.push(SignedPauli::pure_z(BinaryVector::unit(total, n * m + j), sign));
    }
    StabilizerGroup::validated(total, gens).map_err(|e| Error::NormalFormFailure(e.to_string()))
}

/// Options for [`min_distance`].
#[derive(Debug, Clone, Copy)]
pub struct DistanceOptions {
    /// Stop after this weight; a miss yields [`Error::DistanceBoundOnly`].
    pub max_weight: Option<usize>,
    /// Maximum number of Pauli patterns to examine.
    pub budget: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        Self { max_weight: None, budget: 1 << 33 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub d: usize,
    /// A weight-`d` element of the normalizer outside the group.
    #[serde(serialize_with = "serialize_pauli")]
    pub witness: SignedPauli,
    pub patterns_searched: u64,
}

fn serialize_pauli<S: serde::Serializer>(p: &SignedPauli, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.label())
}

/// `C(n, w) 3^w`, saturating.
fn pattern_count(n: usize, w: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..w {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c.saturating_mul(3u128.pow(w as u32)).min(u64::MAX as u128) as u64
}

struct Search<'a> {
    n: usize,
    words: usize,
    /// Syndrome of Pauli `p` (0 = X, 1 = Z, 2 = Y) on qubit `q` at `(3q + p) * words`.
    columns: Vec<u64>,
    group: &'a Echelon,
}

impl Search<'_> {
    fn column(&self, q: usize, p: usize) -> &[u64] {
        let at = (3 * q + p) * self.words;
        &self.columns[at..at + self.words]
    }

    fn pauli(&self, qubits: &[usize], paulis: &[usize]) -> SignedPauli {
        let mut x = BinaryVector::zeros(self.n);
        let mut z = BinaryVector::zeros(self.n);
        for (&q, &p) in qubits.iter().zip(paulis) {
            if p != 1 {
                x.set(q, true);
            }
            if p != 0 {
                z.set(q, true);
            }
        }
        SignedPauli::new(x, z, Sign::Plus).expect("lengths")
    }

    /// First logical operator of weight `w` whose smallest qubit is `first`, in
    /// lexicographic order of (qubits, Paulis).
    fn subtree(&self, first: usize, w: usize) -> Option<SignedPauli> {
        let mut qubits = vec![0usize; w];
        let mut paulis = vec![0usize; w];
        let mut syndromes = vec![0u64; (w + 1) * self.words];
        qubits[0] = first;
        self.descend(0, w, &mut qubits, &mut paulis, &mut syndromes)
    }

    fn descend(
        &self,
        depth: usize,
        w: usize,
        qubits: &mut [usize],
        paulis: &mut [usize],
        syndromes: &mut [u64],
    ) -> Option<SignedPauli> {
        let wd = self.words;
        let start = if depth == 0 { qubits[0] } else { qubits[depth - 1] + 1 };
        let end = if depth == 0 { qubits[0] + 1 } else { self.n - (w - depth - 1) };
        for q in start..end {
            qubits[depth] = q;
            for p in 0..3 {
                paulis[depth] = p;
                let (prev, next) = syndromes.split_at_mut((depth + 1) * wd);
                let prev = &prev[depth * wd..];
                let col = self.column(q, p);
                for i in 0..wd {
                    next[i] = prev[i] ^ col[i];
                }
                if depth + 1 == w {
                    if next[..wd].iter().all(|&s| s == 0) {
                        let cand = self.pauli(qubits, paulis);
                        if !self.group.contains(&cand.symplectic()) {
                            return Some(cand);
                        }
                    }
                } else if let Some(found) = self.descend(depth + 1, w, qubits, paulis, syndromes) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Minimum weight of a Pauli commuting with `s` but not in it (signs ignored).
pub fn min_distance(s: &StabilizerGroup, opts: &DistanceOptions) -> Result<DistanceResult> {
    let n = s.n();
    if s.r() >= n {
        return Err(Error::NoLogicalQubits);
    }
    let r = s.r();
    let words = r.div_ceil(64).max(1);
    let mut columns = vec![0u64; 3 * n * words];
    for (g, gen) in s.generators().iter().enumerate() {
        for q in 0..n {
            let (gx, gz) = (gen.x().get(q), gen.z().get(q));
            // X_q anticommutes with Z-type support, Z_q with X-type, Y_q with either but not both.
            for (p, hit) in [(0, gz), (1, gx), (2, gx ^ gz)] {
                if hit {
                    columns[(3 * q + p) * words + g / 64] |= 1u64 << (g % 64);
                }
            }
        }
    }
    let group = s.symplectic_matrix().echelon();
    let search = Search { n, words, columns, group: &group };
    let limit = opts.max_weight.unwrap_or(n).min(n);
    let mut searched = 0u64;
    for w in 1..=limit {
        let count = pattern_count(n, w);
        if searched.saturating_add(count) > opts.budget {
            return Err(Error::DistanceBoundOnly { lower_bound: w });
        }
        let found: Vec<Option<SignedPauli>> =
            (0..=n - w).into_par_iter().map(|first| search.subtree(first, w)).collect();
        searched += count;
        if let Some(witness) = found.into_iter().flatten().next() {
            return Ok(DistanceResult { d: w, witness, patterns_searched: searched });
        }
    }
    Err(Error::DistanceBoundOnly { lower_bound: limit + 1 })
}

/// True when `p` commutes with every generator and is not in the group.
pub fn is_logical(s: &StabilizerGroup, p: &SignedPauli) -> Result<bool> {
    for g in s.generators() {
        if !g.commutes_with(p)? {
            return Ok(false);
        }
    }
    Ok(!s.contains_up_to_sign(p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem4Report {
    pub m: usize,
    pub seed_distance: usize,
    pub lifted_distance: usize,
    pub holds: bool,
}

/// `d(seed) ≤ d(lifted) ≤ M · d(seed)`.
pub fn theorem4_bound_check(
    seed: &StabilizerGroup,
    lifted: &StabilizerGroup,
    m: usize,
    opts: &DistanceOptions,
) -> Result<Theorem4Report> {
    let d = min_distance(seed, opts)?.d;
    let upper = m * d;
    let lifted_opts = DistanceOptions { max_weight: Some(opts.max_weight.map_or(upper, |w| w.min(upper))), ..*opts };
    let (lifted_distance, holds) = match min_distance(lifted, &lifted_opts) {
        Ok(r) => (r.d, d <= r.d && r.d <= upper),
        Err(Error::DistanceBoundOnly { lower_bound }) if lower_bound > upper => (lower_bound, false),
        Err(e) => return Err(e),
    };
    Ok(Theorem4Report { m, seed_distance: d, lifted_distance, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::f2la::EnumCap;
    use crate::oblivious::{gamma_decomposition, theorem3_check, CheckOptions};
    use rand::{Rng, SeedableRng};

    #[test]
    fn shor_family_parameters() {
        for (l, n) in [(1, 4), (2, 16), (3, 36)] {
            let c = shor_family(l).unwrap();
            assert_eq!(c.n(), n);
            assert_eq!(c.k(), 1);
            let s = c.to_stabilizer_group().unwrap();
            assert!(theorem3_check(&s, &CheckOptions::default()).unwrap().passed());
        }
        let s = shor_family(2).unwrap().to_stabilizer_group().unwrap();
        assert_eq!(min_distance(&s, &DistanceOptions::default()).unwrap().d, 4);
        let s = shor_family(1).unwrap().to_stabilizer_group().unwrap();
        assert_eq!(min_distance(&s, &DistanceOptions::default()).unwrap().d, 2);
    }

    #[test]
    fn product_contract() {
        let a1 = BinaryMatrix::from_strs(3, &["110", "011"]).unwrap();
        let a2 = BinaryMatrix::from_strs(3, &["101"]).unwrap();
        let c = construct_css_product(&a1, &a2, 2, None).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(c.n(), 6);
        let c = construct_css_product(&a1, &a1, 4, None).unwrap();
        assert_eq!(c.k(), 0);
        assert!(c.to_stabilizer_group().unwrap().validate().pass);

        let outside = BinaryMatrix::from_strs(3, &["100"]).unwrap();
        assert_eq!(construct_css_product(&a1, &outside, 2, None), Err(Error::ContainmentViolated));
        assert_eq!(construct_css_product(&a1, &a2, 3, None), Err(Error::OddM(3)));
        let heavy = vec!["11".parse().unwrap(); 3];
        assert!(matches!(construct_css_product(&a1, &a2, 2, Some(heavy)), Err(Error::BadYWeight { .. })));
    }

    #[test]
    fn five_one_three_lift() {
        let seed = catalog::five_one_three();
        assert_eq!(min_distance(&seed, &DistanceOptions::default()).unwrap().d, 3);
        let lifted = construct_stabilizer_lift(&ConstructionSpec::new(seed.clone(), 2)).unwrap();
        assert_eq!((lifted.n(), lifted.k()), (10, 1));
        // The I₅ ⊗ [1,1] rows carry sign -1 under the default blocks.
        let pairs: Vec<&SignedPauli> = lifted
            .generators()
            .iter()
            .filter(|g| g.x().is_zero() && g.z().weight() == 2 && g.z().to_u64().trailing_zeros() % 2 == 0)
            .filter(|g| g.z().to_u64() == 0b11 << g.z().to_u64().trailing_zeros())
            .collect();
        assert_eq!(pairs.len(), 5);
        assert!(pairs.iter().all(|g| g.sign() == Sign::Minus));
        let r = min_distance(&lifted, &DistanceOptions::default()).unwrap();
        assert_eq!(r.d, 4);
        assert!(is_logical(&lifted, &r.witness).unwrap());
        let (x, z) = catalog::five_one_three_lift_witness();
        let w = SignedPauli::new(x, z, Sign::Plus).unwrap();
        assert_eq!(w.weight(), 4);
        assert!(is_logical(&lifted, &w).unwrap());
        assert!(theorem3_check(&lifted, &CheckOptions::default()).unwrap().passed());
        let t4 = theorem4_bound_check(&seed, &lifted, 2, &DistanceOptions::default()).unwrap();
        assert_eq!((t4.seed_distance, t4.lifted_distance), (3, 4));
        assert!(t4.holds);
    }

    #[test]
    fn dual_rail_and_padding_lifts() {
        let lifted = construct_stabilizer_lift(&ConstructionSpec::new(catalog::dual_rail(), 2)).unwrap();
        assert_eq!(lifted.n(), 4);
        assert!(theorem3_check(&lifted, &CheckOptions::default()).unwrap().passed());

        let spec = ConstructionSpec::new(catalog::five_one_two(), 2).with_padding(2);
        let padded = construct_stabilizer_lift(&spec).unwrap();
        assert_eq!((padded.n(), padded.k()), (12, 1));
        let d = gamma_decomposition(&padded).unwrap();
        assert!(d.outside.contains(&10) && d.outside.contains(&11));
        assert!(theorem3_check(&padded, &CheckOptions::default()).unwrap().passed());
    }

    #[test]
    fn distance_errors_and_limits() {
        let full = StabilizerGroup::new(1, vec![SignedPauli::pure_z("1".parse().unwrap(), Sign::Plus)]).unwrap();
        assert_eq!(min_distance(&full, &DistanceOptions::default()), Err(Error::NoLogicalQubits));
        let shor = catalog::shor16();
        let limited = DistanceOptions { max_weight: Some(3), ..Default::default() };
        assert_eq!(min_distance(&shor, &limited), Err(Error::DistanceBoundOnly { lower_bound: 4 }));
        let tight = DistanceOptions { max_weight: None, budget: 100 };
        assert_eq!(min_distance(&shor, &tight), Err(Error::DistanceBoundOnly { lower_bound: 2 }));
    }

    /// Exhaustive oracle over all 4^n Paulis.
    fn brute_distance(s: &StabilizerGroup) -> usize {
        let n = s.n();
        let mut best = usize::MAX;
        for xm in 0u64..(1 << n) {
            for zm in 0u64..(1 << n) {
                let p =
                    SignedPauli::new(BinaryVector::from_u64(n, xm), BinaryVector::from_u64(n, zm), Sign::Plus).unwrap();
                if p.weight() > 0 && p.weight() < best && is_logical(s, &p).unwrap() {
                    best = p.weight();
                }
            }
        }
        best
    }

    #[test]
    fn distance_matches_exhaustive_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(2..=5);
            let r = rng.gen_range(1..n);
            let s = catalog::random_stabilizer_group(&mut rng, n, r);
            assert_eq!(min_distance(&s, &DistanceOptions::default()).unwrap().d, brute_distance(&s), "{s:?}");
        }
    }

    #[test]
    fn lifts_of_random_seeds_satisfy_bounds() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..12 {
            let n = rng.gen_range(2..=4);
            let r = rng.gen_range(1..n);
            let seed = catalog::random_stabilizer_group(&mut rng, n, r);
            for m in [2, 4] {
                let lifted = construct_stabilizer_lift(&ConstructionSpec::new(seed.clone(), m)).unwrap();
                assert!(lifted.validate().pass);
                assert!(theorem3_check(&lifted, &CheckOptions::default()).unwrap().passed());
                let t4 = theorem4_bound_check(&seed, &lifted, m, &DistanceOptions::default()).unwrap();
                assert!(t4.holds, "{t4:?} {seed:?}");
            }
        }
    }

    #[test]
    fn m2_css_lift_is_dual_rail() {
        // Each codeword ket, read per block, uses only |01⟩ and |10⟩.
        let seed = CssCode::from_stabilizer_group(&catalog::five_one_two()).unwrap().unwrap();
        let a1 = seed.c1_perp().dual_basis();
        let c = construct_css_product(&a1, seed.c2(), 2, None).unwrap();
        for v in ["0", "1"] {
            for (ket, _) in c.codeword_terms(&v.parse().unwrap(), EnumCap::DEFAULT).unwrap() {
                for i in 0..5 {
                    assert_ne!(ket.get(2 * i), ket.get(2 * i + 1));
                }
            }
        }
    }
}
