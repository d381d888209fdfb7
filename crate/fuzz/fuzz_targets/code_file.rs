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
use libfuzzer_sys::fuzz_target;

// Any accepted file must survive serialize -> parse unchanged.
fuzz_target!(|data: &str| {
    if let Ok(file) = parse_code_file(data) {
        let text = file.serialize();
        let again = parse_code_file(&text).expect("canonical text parses");
        assert_eq!(again, file);
        assert_eq!(again.serialize(), text);
    }
});
