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

//! Named codes used throughout the examples, tests and the CLI.

use rand::Rng;

use crate::css::CssCode;
use crate::f2la::{BinaryMatrix, BinaryVector};
use crate::stabilizer::{Sign, SignedPauli, StabilizerGroup};

/// Generator matrix of the Reed-Muller code RM(r, mu): one row per monomial
/// of degree at most `r`, evaluated on all points of `F_2^mu`.
pub fn reed_muller(r: usize, mu: usize) -> BinaryMatrix {
    let n = 1usize << mu;
    let mut rows = Vec::new();
    for mask in 0u32..(1 << mu) {
        if mask.count_ones() as usize > r {
            continue;
        }
        rows.push(BinaryVector::from_indices(n, (0..n).filter(|&x| (x as u32 & mask) == mask)));
    }
    BinaryMatrix::new(n, rows).expect("rows have length 2^mu")
}

fn bits(s: &str) -> BinaryVector {
    s.parse().expect("literal bitstring")
}

/// The [[16,1,4]] Shor code on a 4x4 grid (qubit `4k + j` is row `k`,
/// column `j`), with Z signs given by `y_k = 0110` on every row.
pub fn shor16() -> StabilizerGroup {
    let n = 16;
    let mut gens = Vec::new();
    for k in 0..3 {
        gens.push(SignedPauli::pure_x(BinaryVector::from_indices(n, 4 * k..4 * k + 8), Sign::Plus));
    }
    let y = shor16_y();
    for k in 0..4 {
        for j in 0..3 {
            let z = BinaryVector::from_indices(n, [4 * k + j, 4 * k + j + 1]);
            gens.push(SignedPauli::pure_z(z.clone(), Sign::from_parity(z.dot(&y))));
        }
    }
    StabilizerGroup::new(n, gens).expect("lengths")
}

/// `y` with `y_k = 0110` on each row of the Shor grid.
pub fn shor16_y() -> BinaryVector {
    BinaryVector::from_indices(16, (0..4).flat_map(|k| [4 * k + 1, 4 * k + 2]))
}

/// The [[16,4,2]] quantum Reed-Muller code: X from RM(0,4), Z from RM(2,4), all signs positive.
pub fn qrm16() -> StabilizerGroup {
    let mut gens = vec![SignedPauli::pure_x(BinaryVector::ones(16), Sign::Plus)];
    for z in reed_muller(2, 4).into_rows() {
        gens.push(SignedPauli::pure_z(z, Sign::Plus));
    }
    StabilizerGroup::new(16, gens).expect("lengths")
}

/// X part of the [[5,1,3]] seed code used by the lifting example.
pub const FIVE_ONE_THREE_A: [&str; 4] = ["10010", "01001", "10100", "01010"];
/// Z part of the [[5,1,3]] seed code.
pub const FIVE_ONE_THREE_B: [&str; 4] = ["01100", "00110", "00011", "10001"];

pub fn five_one_three() -> StabilizerGroup {
    let gens = FIVE_ONE_THREE_A
        .iter()
        .zip(FIVE_ONE_THREE_B.iter())
        .map(|(a, b)| SignedPauli::new(bits(a), bits(b), Sign::Plus).expect("lengths"))
        .collect();
    StabilizerGroup::new(5, gens).expect("lengths")
}

/// The [[5,1,2]] CSS code with character vector `y = 10101`.
pub fn five_one_two() -> StabilizerGroup {
    let y = five_one_two_y();
    let mut gens = vec![SignedPauli::pure_x(bits("11110"), Sign::Plus)];
    for z in ["11000", "00110", "00001"] {
        let z = bits(z);
        gens.push(SignedPauli::pure_z(z.clone(), Sign::from_parity(z.dot(&y))));
    }
    StabilizerGroup::new(5, gens).expect("lengths")
}

pub fn five_one_two_y() -> BinaryVector {
    bits("10101")
}

/// `⟨-Z₁Z₂⟩`.
pub fn dual_rail() -> StabilizerGroup {
    StabilizerGroup::new(2, vec![SignedPauli::pure_z(bits("11"), Sign::Minus)]).expect("lengths")
}

/// Weight-4 normalizer element of the [[10,1,4]] lift of [[5,1,3]],
/// as `(x, z)` over the interleaved qubit order `2i + j`.
pub fn five_one_three_lift_witness() -> (BinaryVector, BinaryVector) {
    (bits("1100000000"), bits("0010000010"))
}

fn random_vector(rng: &mut impl Rng, n: usize) -> BinaryVector {
    BinaryVector::from_indices(n, (0..n).filter(|_| rng.gen::<bool>()))
}

/// Random valid group with `r <= n` generators, built greedily from random
/// signed Paulis that commute with and are independent of those kept so far.
pub fn random_stabilizer_group(rng: &mut impl Rng, n: usize, r: usize) -> StabilizerGroup {
    assert!(r <= n, "at most n independent commuting generators");
    loop {
        let mut gens: Vec<SignedPauli> = Vec::with_capacity(r);
        for _ in 0..64 * (r + 1) {
            if gens.len() == r {
                break;
            }
            let p = SignedPauli::new(random_vector(rng, n), random_vector(rng, n), Sign::from_parity(rng.gen()))
                .expect("lengths");
            let mut next = gens.clone();
            next.push(p);
            if StabilizerGroup::new(n, next.clone()).expect("lengths").validate().pass {
                gens = next;
            }
        }
        if gens.len() == r {
            return StabilizerGroup::new(n, gens).expect("lengths");
        }
    }
}

/// Random CSS code with `rx` independent X rows and `rz` independent Z rows
/// drawn from the dual of the X span, plus random `y` and `u`.
pub fn random_css(rng: &mut impl Rng, n: usize, rx: usize, rz: usize) -> CssCode {
    assert!(rx + rz <= n, "too many generators");
    let pick = |rng: &mut _, within: Option<&BinaryMatrix>, count: usize| {
        let mut rows = BinaryMatrix::empty(n);
        while rows.row_count() < count {
            let v = match within {
                None => random_vector(rng, n),
                Some(basis) => basis
                    .rows()
                    .iter()
                    .filter(|_| Rng::gen::<bool>(rng))
                    .fold(BinaryVector::zeros(n), |acc, r| acc.xor(r)),
            };
            if !v.is_zero() && !rows.contains(&v) {
                rows.push_row(v).expect("lengths");
            }
        }
        rows
    };
    let c2 = pick(rng, None, rx);
    let c1_perp = pick(rng, Some(&c2.dual_basis()), rz);
    CssCode::new(c2, c1_perp, random_vector(rng, n), random_vector(rng, n)).expect("orthogonal by construction")
}
