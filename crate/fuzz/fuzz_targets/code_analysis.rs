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

use coherent_shield::codefile::parse_code_file;
use coherent_shield::oblivious::{gamma_decomposition, theorem3_check, CheckOptions};
use libfuzzer_sys::fuzz_target;

// Parsed codes are valid groups, so the structural analysis must not panic.
fuzz_target!(|data: &str| {
    let Ok(file) = parse_code_file(data) else { return };
    let Ok(group) = file.group() else { return };
    if group.n() > 12 {
        return;
    }
    let _ = group.normal_form();
    let _ = group.pure_z_subgroup();
    let _ = gamma_decomposition(&group);
    let _ = theorem3_check(&group, &CheckOptions::default());
    let _ = file.as_css();
});
