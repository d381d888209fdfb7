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

#![no_main]

use coherent_shield::f2la::BinaryVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(v) = data.parse::<BinaryVector>() {
        assert_eq!(v.to_string(), data);
        assert_eq!(v.len(), data.chars().count());
        assert_eq!(v.weight(), data.bytes().filter(|&b| b == b'1').count());
        assert_eq!(BinaryVector::from_indices(v.len(), v.support()), v);
    }
});
