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

use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index {index} out of bounds for length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("enumeration of 2^{log2_required} elements exceeds cap of {cap}")]
    CapExceeded { log2_required: u32, cap: u64 },

    #[error("invalid bit '{found}' at position {position}")]
    InvalidBit { position: usize, found: char },

    #[error("product of the given Paulis has an imaginary phase")]
    NonRealPhase,

    #[error("inconsistent code size: {0}")]
    InconsistentSize(String),

    #[error("angle {0} is too close to a pole of tan")]
    PoleAtPi2(f64),

    #[error("code contains an odd-weight codeword {0}")]
    OddWeightCodeword(String),

    #[error("no stabilizer has X-component {0}")]
    NotAStabilizerX(String),

    #[error("structural lemma violated: {0}")]
    LemmaViolation(String),

    #[error("invalid stabilizer group: {0}")]
    InvalidGroup(String),

    #[error("invalid CSS code: {0}")]
    InvalidCss(String),

    #[error("row space of A2 is not contained in A1")]
    ContainmentViolated,

    #[error("block length M = {0} must be even and at least 2")]
    OddM(usize),

    #[error("character block {block} has weight {weight}, expected {expected}")]
    BadYWeight { block: usize, weight: usize, expected: usize },

    #[error("could not bring the seed code into normal form: {0}")]
    NormalFormFailure(String),

    #[error("code has no logical qubits, distance is undefined")]
    NoLogicalQubits,

    #[error("distance search exhausted its budget; distance is at least {lower_bound}")]
    DistanceBoundOnly { lower_bound: usize },

    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
