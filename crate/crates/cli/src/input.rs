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

//! Loading code files and reading environment settings.

use std::path::Path;

use anyhow::{bail, Context};
use coherent_shield::codefile::{bundled, parse_code_file, CodeFile};
use coherent_shield::f2la::EnumCap;

pub const CAP_ENV: &str = "COHERENT_SHIELD_CAP";

/// Reads a code from a path, falling back to the bundled file of that name.
pub fn load(spec: &str) -> anyhow::Result<CodeFile> {
    let text = read(spec)?;
    parse_code_file(&text).with_context(|| format!("parsing {spec}"))
}

pub fn read(spec: &str) -> anyhow::Result<String> {
    let path = Path::new(spec);
    if path.exists() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {spec}"));
    }
    match bundled::get(spec) {
        Some(text) => Ok(text.to_string()),
        None => bail!("no such file or bundled code: {spec}"),
    }
}

/// Enumeration cap from the environment, written either as a count or as `2^k`.
pub fn env_cap() -> anyhow::Result<EnumCap> {
    match std::env::var(CAP_ENV) {
        Ok(v) => parse_cap(&v).with_context(|| format!("{CAP_ENV}={v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(EnumCap::DEFAULT),
        Err(e) => Err(e).context(CAP_ENV),
    }
}

fn parse_cap(v: &str) -> anyhow::Result<EnumCap> {
    let v = v.trim();
    if let Some(exp) = v.strip_prefix("2^") {
        let e: u32 = exp.parse()?;
        if e >= 64 {
            bail!("exponent must be below 64");
        }
        return Ok(EnumCap(1 << e));
    }
    Ok(EnumCap(v.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_forms() {
        assert_eq!(parse_cap("2^10").unwrap().0, 1024);
        assert_eq!(parse_cap(" 500 ").unwrap().0, 500);
        assert!(parse_cap("2^64").is_err());
        assert!(parse_cap("lots").is_err());
    }

    #[test]
    fn bundled_names_resolve() {
        assert!(load("shor16.code").is_ok());
        assert!(load("qrm16").is_ok());
        assert!(load("missing.code").is_err());
    }
}
