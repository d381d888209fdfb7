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

//! The numeric angle check and the statevector agree at individual angles,
//! including angles that are not of the form 2 pi / 2^l.

use coherent_shield::catalog;
use coherent_shield::oblivious::{theorem1_check, CheckOptions};
use coherent_shield::oracle::{invariance_up_to_phase, OracleOptions};
use coherent_shield::stabilizer::StabilizerGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn agree(s: &StabilizerGroup, phi: f64) {
    let numeric = theorem1_check(s, phi, &CheckOptions::default()).unwrap().passed();
    let oracle = invariance_up_to_phase(s, &[phi / 2.0], &OracleOptions::default()).unwrap().preserved_all();
    assert_eq!(numeric, oracle, "phi = {phi} on {s:?}");
}

#[test]
fn catalog_codes_at_fixed_angles() {
    let angles = [std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_8, 0.3, 0.6, 1.0, 2.5];
    for s in
        [catalog::shor16(), catalog::qrm16(), catalog::five_one_three(), catalog::five_one_two(), catalog::dual_rail()]
    {
        for phi in angles {
            agree(&s, phi);
        }
    }
}

#[test]
fn qrm_is_angle_specific() {
    let s = catalog::qrm16();
    let opts = CheckOptions::default();
    assert!(theorem1_check(&s, std::f64::consts::FRAC_PI_8, &opts).unwrap().passed());
    assert!(!theorem1_check(&s, 0.3, &opts).unwrap().passed());
}

#[test]
fn random_codes_at_random_angles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=7);
        let r = rng.gen_range(1..n);
        let s = catalog::random_stabilizer_group(&mut rng, n, r);
        let phi = rng.gen_range(0.05..3.0);
        agree(&s, phi);
    }
}
