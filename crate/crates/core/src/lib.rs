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

//! Analysis of stabilizer codes whose logical space is preserved by
//! transversal Z rotations.

pub mod catalog;
pub mod codefile;
pub mod construct;
pub mod css;
pub mod enumerator;
pub mod error;
pub mod f2la;
pub mod oblivious;
pub mod oracle;
pub mod report;
pub mod stabilizer;

pub use error::{Error, Result};
