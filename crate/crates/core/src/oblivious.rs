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

//! Decision procedures for preservation of the code space under transversal
//! Z rotations: the per-angle trigonometric conditions, the transversal T
//! necessary conditions, the weight-2 component graph and the structural
//! criterion for every angle at once.
//!
//! All per-stabilizer checks iterate one representative per distinct
//! non-zero X-component, since the conditions depend on `a` only.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerator::{divisibility_witness, normalized_terms, Compensated};
use crate::error::{Error, Result};
use crate::f2la::{BinaryMatrix, BinaryVector, Echelon, EnumCap};
use crate::report::{CheckEntry, CheckReport, Witness};
use crate::stabilizer::{PureZSubgroup, Sign, StabilizerGroup};

/// Default numeric tolerance on normalized sums.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Default limit on the number of X-component representatives.
pub const DEFAULT_REPRESENTATIVE_CAP: EnumCap = EnumCap(1 << 20);

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Limit on enumerated words per representative.
    pub cap: EnumCap,
    pub representative_cap: EnumCap,
    pub tolerance: f64,
    /// Level `l` with `phi = 2π / 2^l`, enabling the exact divisibility route.
    pub level: Option<u32>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            cap: EnumCap::DEFAULT,
            representative_cap: DEFAULT_REPRESENTATIVE_CAP,
            tolerance: DEFAULT_TOLERANCE,
            level: None,
        }
    }
}

impl CheckOptions {
    pub fn with_level(mut self, level: u32) -> Self {
        self.level = Some(level);
        self
    }
}

/// `B(a)`: the pure-Z stabilizers supported inside `supp(a)`, restricted to it.
#[derive(Debug, Clone)]
pub struct SupportedZCode {
    pub a: BinaryVector,
    /// Qubit indices of `supp(a)`, in increasing order.
    pub support: Vec<usize>,
    /// Basis of `B(a)` over `F_2^{w_H(a)}`.
    pub basis: BinaryMatrix,
    /// `y` restricted to `supp(a)`; the sign of `v` is `(-1)^{y·v}`.
    pub y: BinaryVector,
}

impl SupportedZCode {
    pub fn m(&self) -> usize {
        self.support.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.row_count()
    }

    pub fn sign(&self, v: &BinaryVector) -> Sign {
        Sign::from_parity(v.dot(&self.y))
    }

    /// Lifts a vector on `supp(a)` back to all `n` qubits.
    pub fn embed(&self, v: &BinaryVector) -> BinaryVector {
        v.embed(self.a.len(), &self.support)
    }
}

/// Precomputed data shared by the checks.
pub(crate) struct Analysis<'a> {
    pub group: &'a StabilizerGroup,
    pub x_echelon: Echelon,
    pub pure_z: PureZSubgroup,
    pub y: BinaryVector,
}

impl<'a> Analysis<'a> {
    pub fn new(group: &'a StabilizerGroup) -> Result<Self> {
        let x_echelon = group.x_matrix().echelon();
        let pure_z = group.pure_z_subgroup()?;
        let y = pure_z.character_vector();
        Ok(Self { group, x_echelon, pure_z, y })
    }

    pub fn supported(&self, a: &BinaryVector) -> Result<SupportedZCode> {
        if a.is_zero() || !self.x_echelon.contains(a) {
            return Err(Error::NotAStabilizerX(a.to_string()));
        }
        let support: Vec<usize> = a.support().collect();
        let full = self.pure_z.basis().subspace_supported_on(a);
        let basis = full.select_columns(&support);
        let y = self.y.restrict(&support);
        debug_assert!(basis.rows().iter().all(|r| r.weight() % 2 == 0));
        Ok(SupportedZCode { a: a.clone(), support, basis, y })
    }

    /// Distinct non-zero X-components in increasing order.
    pub fn representatives(&self, cap: EnumCap) -> Result<Vec<BinaryVector>> {
        let basis = BinaryMatrix::new(self.group.n(), self.x_echelon.rows.clone()).expect("lengths");
        let mut reps: Vec<BinaryVector> = basis.codewords(cap)?.filter(|a| !a.is_zero()).collect();
        reps.sort();
        Ok(reps)
    }

    pub fn selector(&self, a: &BinaryVector) -> Option<String> {
        self.x_echelon.solve(a).map(|s| s.to_string())
    }

    fn reduction(&self) -> String {
        format!(
            "one representative per distinct non-zero X-component ({} of them)",
            (1u128 << self.x_echelon.rank()) - 1
        )
    }
}

/// `B(a)` for the X-component `a` of some stabilizer.
pub fn compute_b(s: &StabilizerGroup, a: &BinaryVector) -> Result<SupportedZCode> {
    if a.len() != s.n() {
        return Err(Error::LengthMismatch { expected: s.n(), found: a.len() });
    }
    Analysis::new(s)?.supported(a)
}

/// Signed sums `Σ_{v∈B} ε_v t^{w(v⊕ω)}` normalized by `cos^m phi`, for each `ω` in `shifts`.
fn normalized_coset_sums(
    words: &[(BinaryVector, bool)],
    terms: &[Complex64],
    shifts: &[BinaryVector],
) -> Vec<Complex64> {
    shifts
        .iter()
        .map(|omega| {
            let mut acc = Compensated::default();
            for (v, minus) in words {
                let t = terms[v.xor_weight(omega)];
                acc.add(if *minus { -t } else { t });
            }
            acc.value()
        })
        .collect()
}

fn signed_words(b: &SupportedZCode, cap: EnumCap) -> Result<Vec<(BinaryVector, bool)>> {
    Ok(b.basis
        .codewords(cap)?
        .map(|v| {
            let minus = v.dot(&b.y);
            (v, minus)
        })
        .collect())
}

fn theorem1_for(
    an: &Analysis<'_>,
    a: &BinaryVector,
    phi: f64,
    opts: &CheckOptions,
) -> Result<(Vec<CheckEntry>, Vec<String>)> {
    let b = an.supported(a)?;
    let m = b.m();
    let terms = normalized_terms(m, phi);
    let words = signed_words(&b, opts.cap)?;
    let selector = an.selector(a);
    let mut anomalies = Vec::new();

    let zero = BinaryVector::zeros(m);
    let identity = normalized_coset_sums(&words, &terms, std::slice::from_ref(&zero))[0];
    let residual = (identity - 1.0).norm();
    let numeric = residual <= opts.tolerance;
    let (exact, exact_witness) = match opts.level {
        Some(l) => {
            let w = divisibility_witness(&b.basis, &b.y, l, opts.cap)?;
            (Some(w.is_none()), w)
        }
        None => (None, None),
    };
    if let Some(e) = exact {
        if e != numeric {
            anomalies.push(format!(
                "representative {a}: numeric identity verdict {numeric} (residual {residual:e}) disagrees with divisibility verdict {e}"
            ));
        }
    }
    let witness = exact_witness
        .map(|w| Witness::DualWord { residue: m as i64 - 2 * w.weight() as i64, word: b.embed(&w).to_string() });
    let first = CheckEntry::new("identity", numeric && exact.unwrap_or(true))
        .representative(a, selector.clone())
        .residual(residual)
        .exact(exact)
        .witness(witness);

    let cosets = b.basis.coset_representatives(opts.cap)?;
    opts.cap.admit(m)?;
    let shifts: Vec<BinaryVector> = cosets.filter(|w| !w.is_zero()).collect();
    let sums = normalized_coset_sums(&words, &terms, &shifts);
    let mut worst = 0.0f64;
    let mut worst_omega = None;
    for (omega, s) in shifts.iter().zip(&sums) {
        let r = s.norm();
        if r > worst {
            worst = r;
            worst_omega = Some(omega);
        }
    }
    let pass = worst <= opts.tolerance;
    let witness = if pass {
        None
    } else {
        worst_omega.map(|o| Witness::Omega { omega: o.to_string(), embedded: b.embed(o).to_string() })
    };
    let second = CheckEntry::new("coset-zero", pass).representative(a, selector).residual(worst).witness(witness);
    Ok((vec![first, second], anomalies))
}

/// Both trigonometric conditions at tan argument `phi`, on normalized sums.
pub fn theorem1_check(s: &StabilizerGroup, phi: f64, opts: &CheckOptions) -> Result<CheckReport> {
    let an = Analysis::new(s)?;
    let reps = an.representatives(opts.representative_cap)?;
    let results: Vec<Result<(Vec<CheckEntry>, Vec<String>)>> =
        reps.par_iter().map(|a| theorem1_for(&an, a, phi, opts)).collect();
    let mut report = CheckReport::new("theorem1").param("phi", phi).param("tolerance", opts.tolerance);
    if let Some(l) = opts.level {
        report = report.param("level", l);
    }
    report.reduction = Some(an.reduction());
    for r in results {
        let (entries, anomalies) = r?;
        report.extend(entries);
        report.anomalies.extend(anomalies);
    }
    Ok(report)
}

/// Necessary conditions for transversal T: even `w_H(a)`, `B(a)⊥ ⊆ B(a)`,
/// and sign `i^{w_H(z)}` for every `z ∈ B(a)⊥`.
pub fn transversal_t_conditions(s: &StabilizerGroup, opts: &CheckOptions) -> Result<CheckReport> {
    let an = Analysis::new(s)?;
    let reps = an.representatives(opts.representative_cap)?;
    let mut report = CheckReport::new("transversal_t");
    report.reduction = Some(an.reduction());
    let per_rep: Vec<Result<Vec<CheckEntry>>> = reps
        .par_iter()
        .map(|a| {
            let b = an.supported(a)?;
            let sel = an.selector(a);
            let mut out = Vec::new();
            let w = b.m();
            let even = w % 2 == 0;
            out.push(
                CheckEntry::new("even-weight", even)
                    .representative(a, sel.clone())
                    .witness((!even).then(|| Witness::Support { a: a.to_string(), weight: w })),
            );
            let dual = b.basis.dual_basis();
            let inside = b.basis.echelon();
            let outside = dual.rows().iter().find(|z| !inside.contains(z));
            out.push(CheckEntry::new("self-dual", outside.is_none()).representative(a, sel.clone()).witness(
                outside.map(|z| Witness::ZWord {
                    word: b.embed(z).to_string(),
                    reason: "in B(a)⊥ but not in B(a)".into(),
                }),
            ));
            let mut bad = None;
            if outside.is_none() {
                for z in dual.codewords(opts.cap)? {
                    let wt = z.weight();
                    let want_minus = wt % 4 == 2;
                    if wt % 2 == 1 || b.sign(&z).is_minus() != want_minus {
                        bad = Some(z);
                        break;
                    }
                }
            }
            let sign_ok = outside.is_none() && bad.is_none();
            out.push(CheckEntry::new("sign-i-power", sign_ok).representative(a, sel).witness(bad.map(|z| {
                Witness::ZWord {
                    reason: format!("weight {} with sign {}", z.weight(), b.sign(&z).symbol()),
                    word: b.embed(&z).to_string(),
                }
            })));
            Ok(out)
        })
        .collect();
    for r in per_rep {
        report.extend(r?);
    }
    Ok(report)
}

/// Connected components of the weight-2 Z-stabilizer graph on `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    pub n: usize,
    /// Qubits covered by some X-component.
    pub gamma: Vec<usize>,
    /// Components in order of their smallest qubit; each is sorted.
    pub components: Vec<Vec<usize>>,
    /// Character vector used for the restrictions.
    pub y: String,
    pub y_restrictions: Vec<String>,
    /// Qubits outside `Γ`.
    pub outside: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    pub fn y_weights(&self) -> Vec<usize> {
        self.y_restrictions.iter().map(|s| s.bytes().filter(|&c| c == b'1').count()).collect()
    }

    /// Index of the component containing qubit `q`.
    pub fn component_of(&self, q: usize) -> Option<usize> {
        self.components.iter().position(|c| c.binary_search(&q).is_ok())
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

fn decompose(an: &Analysis<'_>) -> Result<ComponentDecomposition> {
    let n = an.group.n();
    let mut gamma_mask = BinaryVector::zeros(n);
    for row in &an.x_echelon.rows {
        gamma_mask = gamma_mask.or(row);
    }
    let gamma: Vec<usize> = gamma_mask.support().collect();
    let index_of = |q: usize| gamma.binary_search(&q).expect("qubit in gamma");
    let mut uf = UnionFind::new(gamma.len());
    let mut edge = vec![vec![false; gamma.len()]; gamma.len()];
    for (i, &p) in gamma.iter().enumerate() {
        for (j, &q) in gamma.iter().enumerate().skip(i + 1) {
            if an.pure_z.contains(&BinaryVector::from_indices(n, [p, q])) {
                uf.union(i, j);
                edge[i][j] = true;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, &q) in gamma.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(q);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    components.sort_by_key(|c| c[0]);

    for comp in &components {
        for (x, &p) in comp.iter().enumerate() {
            for &q in &comp[x + 1..] {
                if !edge[index_of(p)][index_of(q)] {
                    return Err(Error::LemmaViolation(format!("component {comp:?} is not complete: {p} and {q}")));
                }
            }
        }
        for (g, gen) in an.group.generators().iter().enumerate() {
            let restricted = gen.x().restrict(comp);
            if !(restricted.is_zero() || restricted.weight() == comp.len()) {
                return Err(Error::LemmaViolation(format!(
                    "generator {g} X-component is not constant on component {comp:?}"
                )));
            }
        }
    }
    let y_restrictions = components.iter().map(|c| an.y.restrict(c).to_string()).collect();
    let outside = gamma_mask.complement().support().collect();
    Ok(ComponentDecomposition { n, gamma, components, y: an.y.to_string(), y_restrictions, outside })
}

/// Builds the weight-2 Z-stabilizer graph on `Γ` and its components.
pub fn gamma_decomposition(s: &StabilizerGroup) -> Result<ComponentDecomposition> {
    decompose(&Analysis::new(s)?)
}

/// Structural criterion: every `supp(a)` is a union of whole components,
/// each of even size `N_k` with `w_H(y_k) = N_k / 2`.
pub fn theorem3_check(s: &StabilizerGroup, opts: &CheckOptions) -> Result<CheckReport> {
    let an = Analysis::new(s)?;
    let dec = decompose(&an)?;
    let reps = an.representatives(opts.representative_cap)?;
    let y_weights = dec.y_weights();
    let mut report = CheckReport::new("theorem3").param("components", dec.components.len());
    report.reduction = Some(an.reduction());
    for a in &reps {
        let sel = an.selector(a);
        let mut partial = None;
        let mut inside = Vec::new();
        for (k, comp) in dec.components.iter().enumerate() {
            let hit = comp.iter().filter(|&&q| a.get(q)).count();
            if hit == comp.len() {
                inside.push(k);
            } else if hit > 0 && partial.is_none() {
                partial = Some(k);
            }
        }
        let component_witness = |k: usize| Witness::Component {
            qubits: dec.components[k].clone(),
            size: dec.components[k].len(),
            y_weight: y_weights[k],
        };
        report.push(
            CheckEntry::new("support-union", partial.is_none())
                .representative(a, sel.clone())
                .witness(partial.map(component_witness)),
        );
        let bad = inside.iter().copied().find(|&k| {
            let nk = dec.components[k].len();
            nk % 2 == 1 || 2 * y_weights[k] != nk
        });
        report.push(
            CheckEntry::new("half-weight", bad.is_none()).representative(a, sel).witness(bad.map(component_witness)),
        );
    }
    Ok(report)
}

/// `P = C(s,2) + C(N-s,2)` and `Q = s (N - s)`: the positive and negative
/// weight-2 words on a component of size `N` with `w_H(y_k) = s`.
pub fn pq_counts(n: u64, s: u64) -> (u128, u128) {
    assert!(s <= n, "s must not exceed N");
    let c2 = |x: u64| (x as u128) * (x as u128).saturating_sub(1) / 2;
    (c2(s) + c2(n - s), (s as u128) * ((n - s) as u128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerator::level_to_angle;
    use crate::stabilizer::SignedPauli;
    use std::f64::consts::PI;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn compute_b_examples() {
        let shor = catalog::shor16();
        let a = BinaryVector::from_indices(16, 0..8);
        let b = compute_b(&shor, &a).unwrap();
        assert_eq!(b.m(), 8);
        assert_eq!(b.dim(), 6);
        let w4 = BinaryMatrix::single_parity_check(4);
        let blockdiag = BinaryMatrix::identity(2).kron(&w4);
        assert!(b.basis.span_eq(&blockdiag));
        assert_eq!(b.y.to_string(), catalog::shor16_y().restrict(&(0..8).collect::<Vec<_>>()).to_string());

        let qrm = catalog::qrm16();
        let b = compute_b(&qrm, &BinaryVector::ones(16)).unwrap();
        assert!(b.basis.span_eq(&catalog::reed_muller(2, 4)));
        assert!(b.y.is_zero());

        let dr = catalog::dual_rail();
        assert!(matches!(compute_b(&dr, &"10".parse().unwrap()), Err(Error::NotAStabilizerX(_))));
        assert!(matches!(compute_b(&shor, &BinaryVector::unit(16, 0)), Err(Error::NotAStabilizerX(_))));
    }

    #[test]
    fn angle_check_examples() {
        let qrm = catalog::qrm16();
        let r = theorem1_check(&qrm, PI / 8.0, &opts().with_level(4)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.anomalies.is_empty());
        assert!(r.max_residual().unwrap() < 1e-9);

        let shor = catalog::shor16();
        for l in 2..=6 {
            let r = theorem1_check(&shor, level_to_angle(l), &opts().with_level(l)).unwrap();
            assert!(r.passed(), "l={l} {r:?}");
            assert!(r.anomalies.is_empty());
        }

        let seed = catalog::five_one_three();
        let r = theorem1_check(&seed, PI / 4.0, &opts().with_level(3)).unwrap();
        assert!(!r.passed());
        assert!(r.first_witness().is_some());
        assert!(r.anomalies.is_empty());
    }

    #[test]
    fn qrm_fails_at_finer_angle() {
        // Preserved by the π/16 rotation but not the π/32 one.
        let qrm = catalog::qrm16();
        let r = theorem1_check(&qrm, level_to_angle(5), &opts().with_level(5)).unwrap();
        assert!(!r.passed());
        assert!(r.anomalies.is_empty());
    }

    #[test]
    fn transversal_t_examples() {
        let r = transversal_t_conditions(&catalog::qrm16(), &opts()).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = transversal_t_conditions(&catalog::shor16(), &opts()).unwrap();
        assert!(r.passed(), "{r:?}");

        let odd = StabilizerGroup::validated(
            3,
            vec![
                SignedPauli::pure_x("111".parse().unwrap(), Sign::Plus),
                SignedPauli::pure_z("110".parse().unwrap(), Sign::Plus),
            ],
        )
        .unwrap();
        let r = transversal_t_conditions(&odd, &opts()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.failures().next().unwrap().condition, "even-weight");
    }

    #[test]
    fn gamma_examples() {
        let d = gamma_decomposition(&catalog::shor16()).unwrap();
        assert_eq!(d.components, (0..4).map(|k| (4 * k..4 * k + 4).collect::<Vec<_>>()).collect::<Vec<_>>());
        assert_eq!(d.y_weights(), vec![2; 4]);
        assert!(d.outside.is_empty());

        let d = gamma_decomposition(&catalog::five_one_two()).unwrap();
        assert_eq!(d.components, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(d.y_weights(), vec![1, 1]);
        assert_eq!(d.outside, vec![4]);

        let d = gamma_decomposition(&catalog::qrm16()).unwrap();
        assert_eq!(d.components.len(), 16);
        assert!(d.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn structural_check_examples() {
        assert!(theorem3_check(&catalog::shor16(), &opts()).unwrap().passed());
        assert!(theorem3_check(&catalog::five_one_two(), &opts()).unwrap().passed());
        assert!(!theorem3_check(&catalog::qrm16(), &opts()).unwrap().passed());

        let positive = catalog::shor16();
        let gens = positive.generators().iter().map(|g| g.clone().with_sign(Sign::Plus)).collect();
        let positive = StabilizerGroup::validated(16, gens).unwrap();
        let r = theorem3_check(&positive, &opts()).unwrap();
        assert!(!r.passed());
        match r.first_witness().unwrap() {
            Witness::Component { size, y_weight, .. } => {
                assert_eq!(*size, 4);
                assert_eq!(*y_weight, 0);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn pq_examples_and_closed_form() {
        assert_eq!(pq_counts(4, 2), (2, 4));
        assert_eq!(pq_counts(4, 0), (6, 0));
        assert_eq!(pq_counts(2, 1), (0, 1));
        for n in 0..=64u64 {
            for s in 0..=n {
                let (p, q) = pq_counts(n, s);
                let lhs = 2 * (q as i128 - p as i128);
                let rhs = -(2 * s as i128 - n as i128).pow(2) + n as i128;
                assert_eq!(lhs, rhs, "N={n} s={s}");
            }
        }
    }

    #[test]
    fn coset_reduction_is_sound() {
        // Every ω in a coset gives the same |sum| as the chosen representative.
        for s in [catalog::five_one_two(), catalog::shor16(), catalog::five_one_three()] {
            let an = Analysis::new(&s).unwrap();
            for a in an.representatives(EnumCap::DEFAULT).unwrap() {
                let b = an.supported(&a).unwrap();
                if b.m() > 10 {
                    continue;
                }
                let words = signed_words(&b, EnumCap::DEFAULT).unwrap();
                for l in 2..=6 {
                    let terms = normalized_terms(b.m(), level_to_angle(l));
                    let all: Vec<BinaryVector> =
                        (0u64..(1 << b.m())).map(|x| BinaryVector::from_u64(b.m(), x)).collect();
                    let sums = normalized_coset_sums(&words, &terms, &all);
                    let ech = b.basis.echelon();
                    let reduced = |w: &BinaryVector| ech.reduce(w).0;
                    for (w, s) in all.iter().zip(&sums) {
                        let rep = reduced(w);
                        let idx = rep.to_u64() as usize;
                        assert!((s.norm() - sums[idx].norm()).abs() < 1e-12);
                    }
                }
            }
        }
    }
}
