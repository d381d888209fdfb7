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

//! Replays the checked-in fuzz corpus through the fuzz target properties on
//! the stable toolchain.

use std::fs;
use std::path::{Path, PathBuf};

use coherent_shield::codefile::parse_code_file;
use coherent_shield::f2la::BinaryVector;
use coherent_shield::oblivious::{theorem3_check, CheckOptions};

fn corpus(target: &str) -> Vec<(PathBuf, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(PathBuf, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = String::from_utf8_lossy(&fs::read(&p).unwrap()).into_owned();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "empty corpus {target}");
    out
}

#[test]
fn code_file_corpus_round_trips() {
    let mut accepted = 0;
    for (path, text) in corpus("code_file") {
        if let Ok(file) = parse_code_file(&text) {
            accepted += 1;
            let canonical = file.serialize();
            assert_eq!(parse_code_file(&canonical).unwrap(), file, "{}", path.display());
        }
    }
    assert!(accepted >= 5);
}

#[test]
fn bitstring_corpus_round_trips() {
    for (path, text) in corpus("bitstring") {
        if let Ok(v) = text.parse::<BinaryVector>() {
            assert_eq!(v.to_string(), text, "{}", path.display());
        }
    }
}

#[test]
fn code_analysis_corpus_runs() {
    for (path, text) in corpus("code_analysis") {
        let file = parse_code_file(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let group = file.group().unwrap();
        theorem3_check(&group, &CheckOptions::default()).unwrap();
    }
}
