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

//! Line-oriented text format for codes.
//!
//! ```text
//! # optional leading comments are kept on serialization
//! code dualrail
//! n 2
//! kind css
//! zgen 11
//! y 10
//! u 00
//! ```
//!
//! Stabilizer files use `kind stab` and one `gen <+|-> X:<bits> Z:<bits>`
//! line per generator. Bitstrings have exactly `n` characters, qubit 0 first.

use std::fmt::Write as _;

use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::f2la::{BinaryMatrix, BinaryVector};
use crate::stabilizer::{Sign, SignedPauli, StabilizerGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeBody {
    Stabilizer(StabilizerGroup),
    Css(CssCode),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub name: String,
    /// Comment lines before the header, without the leading `#`.
    pub comments: Vec<String>,
    pub body: CodeBody,
}

impl CodeFile {
    pub fn stabilizer(name: impl Into<String>, s: StabilizerGroup) -> Self {
        Self { name: name.into(), comments: Vec::new(), body: CodeBody::Stabilizer(s) }
    }

    pub fn css(name: impl Into<String>, c: CssCode) -> Self {
        Self { name: name.into(), comments: Vec::new(), body: CodeBody::Css(c) }
    }

    pub fn with_comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn n(&self) -> usize {
        match &self.body {
            CodeBody::Stabilizer(s) => s.n(),
            CodeBody::Css(c) => c.n(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            CodeBody::Stabilizer(_) => "stab",
            CodeBody::Css(_) => "css",
        }
    }

    pub fn group(&self) -> Result<StabilizerGroup> {
        match &self.body {
            CodeBody::Stabilizer(s) => Ok(s.clone()),
            CodeBody::Css(c) => c.to_stabilizer_group(),
        }
    }

    /// The CSS view: the declared one, or one recognized from pure X/Z generators.
    pub fn as_css(&self) -> Result<Option<CssCode>> {
        match &self.body {
            CodeBody::Stabilizer(s) => CssCode::from_stabilizer_group(s),
            CodeBody::Css(c) => Ok(Some(c.clone())),
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                let _ = writeln!(out, "# {c}");
            }
        }
        let _ = writeln!(out, "code {}", self.name);
        let _ = writeln!(out, "n {}", self.n());
        let _ = writeln!(out, "kind {}", self.kind());
        match &self.body {
            CodeBody::Stabilizer(s) => {
                for g in s.generators() {
                    let _ = writeln!(out, "gen {g}");
                }
            }
            CodeBody::Css(c) => {
                for x in c.c2().rows() {
                    let _ = writeln!(out, "xgen {x}");
                }
                for z in c.c1_perp().rows() {
                    let _ = writeln!(out, "zgen {z}");
                }
                let _ = writeln!(out, "y {}", c.y());
                let _ = writeln!(out, "u {}", c.u());
            }
        }
        out
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Parser {
    line: usize,
}

impl Parser {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, column, message: message.into() }
    }

    fn bits(&self, tok: &Token<'_>, n: usize) -> Result<BinaryVector> {
        let v: BinaryVector = tok.text.parse().map_err(|e| match e {
            Error::InvalidBit { position, found } => {
                self.err(tok.column + position, format!("expected 0 or 1, found {found:?}"))
            }
            other => other,
        })?;
        if v.len() != n {
            return Err(self.err(tok.column, format!("bitstring has {} characters, expected {n}", v.len())));
        }
        Ok(v)
    }

    fn arity(&self, toks: &[Token<'_>], want: usize) -> Result<()> {
        match toks.get(want) {
            Some(extra) => Err(self.err(extra.column, format!("unexpected {:?}", extra.text))),
            None if toks.len() < want => {
                let last = &toks[toks.len() - 1];
                Err(self.err(
                    last.column + last.text.chars().count(),
                    format!("{} expects {} argument(s)", toks[0].text, want - 1),
                ))
            }
            None => Ok(()),
        }
    }
}

#[derive(Default)]
struct Draft {
    name: Option<String>,
    n: Option<usize>,
    css: Option<bool>,
    gens: Vec<SignedPauli>,
    xgens: Vec<BinaryVector>,
    zgens: Vec<BinaryVector>,
    y: Option<BinaryVector>,
    u: Option<BinaryVector>,
}

/// Parses and validates a code file.
pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let mut p = Parser { line: 0 };
    let mut d = Draft::default();
    let mut comments = Vec::new();
    let mut in_preamble = true;
    for (idx, raw) in text.lines().enumerate() {
        p.line = idx + 1;
        let trimmed = raw.trim();
        if let Some(rest) = trimmed.strip_prefix('#') {
            if in_preamble {
                comments.push(rest.strip_prefix(' ').unwrap_or(rest).trim_end().to_string());
            }
            continue;
        }
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        if toks.is_empty() {
            continue;
        }
        in_preamble = false;
        let key = &toks[0];
        let header_done = |p: &Parser| -> Result<(usize, bool)> {
            match (d.n, d.css) {
                (Some(n), Some(css)) => Ok((n, css)),
                _ => Err(p.err(key.column, format!("{:?} before the n and kind lines", key.text))),
            }
        };
        match key.text {
            "code" => {
                p.arity(&toks, 2)?;
                if d.name.is_some() {
                    return Err(p.err(key.column, "duplicate code line"));
                }
                d.name = Some(toks[1].text.to_string());
            }
            "n" => {
                p.arity(&toks, 2)?;
                if d.n.is_some() {
                    return Err(p.err(key.column, "duplicate n line"));
                }
                let n: usize =
                    toks[1].text.parse().map_err(|_| p.err(toks[1].column, "n must be a non-negative integer"))?;
                if n == 0 {
                    return Err(p.err(toks[1].column, "n must be positive"));
                }
                d.n = Some(n);
            }
            "kind" => {
                p.arity(&toks, 2)?;
                if d.css.is_some() {
                    return Err(p.err(key.column, "duplicate kind line"));
                }
                d.css = Some(match toks[1].text {
                    "css" => true,
                    "stab" => false,
                    other => return Err(p.err(toks[1].column, format!("unknown kind {other:?}, expected css or stab"))),
                });
            }
            "gen" => {
                let (n, css) = header_done(&p)?;
                if css {
                    return Err(p.err(key.column, "gen lines belong to kind stab"));
                }
                p.arity(&toks, 4)?;
                let sign = match toks[1].text {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(p.err(toks[1].column, format!("expected + or -, found {other:?}"))),
                };
                let part = |tok: &Token<'_>, prefix: &str| -> Result<BinaryVector> {
                    let Some(rest) = tok.text.strip_prefix(prefix) else {
                        return Err(p.err(tok.column, format!("expected {prefix}<bits>")));
                    };
                    p.bits(&Token { text: rest, column: tok.column + prefix.len() }, n)
                };
                let x = part(&toks[2], "X:")?;
                let z = part(&toks[3], "Z:")?;
                d.gens.push(SignedPauli::new(x, z, sign)?);
            }
            "xgen" | "zgen" | "y" | "u" => {
                let (n, css) = header_done(&p)?;
                if !css {
                    return Err(p.err(key.column, format!("{} lines belong to kind css", key.text)));
                }
                p.arity(&toks, 2)?;
                let v = p.bits(&toks[1], n)?;
                let slot = match key.text {
                    "xgen" => {
                        d.xgens.push(v);
                        continue;
                    }
                    "zgen" => {
                        d.zgens.push(v);
                        continue;
                    }
                    "y" => &mut d.y,
                    _ => &mut d.u,
                };
                if slot.is_some() {
                    return Err(p.err(key.column, format!("duplicate {} line", key.text)));
                }
                *slot = Some(v);
            }
            other => return Err(p.err(key.column, format!("unknown directive {other:?}"))),
        }
    }
    p.line += 1;
    let (Some(name), Some(n), Some(css)) = (d.name, d.n, d.css) else {
        return Err(p.err(1, "missing code, n or kind line"));
    };
    let body = if css {
        let c2 = BinaryMatrix::new(n, d.xgens)?;
        let c1_perp = BinaryMatrix::new(n, d.zgens)?;
        let y = d.y.unwrap_or_else(|| BinaryVector::zeros(n));
        let u = d.u.unwrap_or_else(|| BinaryVector::zeros(n));
        CodeBody::Css(CssCode::new(c2, c1_perp, y, u).map_err(|e| Error::Validation(e.to_string()))?)
    } else {
        CodeBody::Stabilizer(StabilizerGroup::validated(n, d.gens)?)
    };
    Ok(CodeFile { name, comments, body })
}

/// Canonical text of a code file.
pub fn serialize_code_file(f: &CodeFile) -> String {
    f.serialize()
}

/// Files shipped with the library.
pub mod bundled {
    pub const SHOR16: &str = include_str!("../codes/shor16.code");
    pub const QRM16: &str = include_str!("../codes/qrm16.code");
    pub const SEED513: &str = include_str!("../codes/seed513.code");
    pub const CODE512: &str = include_str!("../codes/code512.code");
    pub const DUALRAIL: &str = include_str!("../codes/dualrail.code");

    /// `(name, text)` for every bundled file.
    pub const ALL: [(&str, &str); 5] =
        [("shor16", SHOR16), ("qrm16", QRM16), ("seed513", SEED513), ("code512", CODE512), ("dualrail", DUALRAIL)];

    pub fn get(name: &str) -> Option<&'static str> {
        let stem = name.strip_suffix(".code").unwrap_or(name);
        ALL.iter().find(|(n, _)| *n == stem).map(|(_, t)| *t)
    }
}
