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

//! Subcommand bodies. Each prints its report and returns the verdict.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use coherent_shield::codefile::{parse_code_file, CodeFile};
use coherent_shield::construct::{
    construct_css_product, construct_stabilizer_lift, min_distance, ConstructionSpec, DistanceOptions,
};
use coherent_shield::enumerator::{level_to_angle, weight_enumerator, SignedEnumeratorPair};
use coherent_shield::f2la::{BinaryMatrix, BinaryVector, EnumCap};
use coherent_shield::oblivious::{theorem1_check, theorem3_check, transversal_t_conditions, CheckOptions};
use coherent_shield::oracle::{default_theta_grid, invariance_up_to_phase, OracleOptions};
use coherent_shield::report::{CheckReport, SCHEMA_VERSION};
use coherent_shield::stabilizer::StabilizerGroup;
use coherent_shield::Error;
use serde::Serialize;
use serde_json::json;

use crate::input;
use crate::Outcome;

fn print_json(value: &impl Serialize) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn describe(file: &CodeFile, s: &StabilizerGroup) -> String {
    format!("{} [[{},{}]] ({})", file.name, s.n(), s.k(), file.kind())
}

fn print_report(r: &CheckReport) {
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    println!("{} {}: {verdict}", r.check, params.join(" "));
    if let Some(red) = &r.reduction {
        println!("  reduction: {red}");
    }
    if let Some(res) = r.max_residual() {
        println!("  max residual: {res:.3e}");
    }
    const SHOWN: usize = 8;
    let failures: Vec<_> = r.failures().collect();
    for e in failures.iter().take(SHOWN) {
        let mut line = format!("  failed {}", e.condition);
        if let Some(a) = &e.representative {
            line.push_str(&format!(" at a={a}"));
        }
        if let Some(res) = e.residual {
            line.push_str(&format!(" residual {res:.3e}"));
        }
        if let Some(w) = &e.witness {
            line.push_str(&format!(": {w}"));
        }
        println!("{line}");
    }
    if failures.len() > SHOWN {
        println!("  ... {} more failing entries", failures.len() - SHOWN);
    }
    for a in &r.anomalies {
        println!("  anomaly: {a}");
    }
}

pub struct CheckRequest {
    pub angles: Vec<f64>,
    pub levels: Vec<u32>,
    pub all_l: bool,
    pub t_conditions: bool,
    pub tolerance: Option<f64>,
    pub json: bool,
    pub cap: EnumCap,
}

pub fn check(file: &CodeFile, req: &CheckRequest) -> anyhow::Result<Outcome> {
    let s = file.group()?;
    let mut opts = CheckOptions { cap: req.cap, ..CheckOptions::default() };
    if let Some(t) = req.tolerance {
        opts.tolerance = t;
    }
    let mut reports = Vec::new();
    for &phi in &req.angles {
        reports.push(theorem1_check(&s, phi, &opts)?);
    }
    for &l in &req.levels {
        if l < 1 {
            bail!("levels start at 1");
        }
        reports.push(theorem1_check(&s, level_to_angle(l), &opts.with_level(l))?);
    }
    if req.all_l || (req.angles.is_empty() && req.levels.is_empty() && !req.t_conditions) {
        reports.push(theorem3_check(&s, &opts)?);
    }
    if req.t_conditions {
        reports.push(transversal_t_conditions(&s, &opts)?);
    }
    let pass = reports.iter().all(CheckReport::passed);
    if req.json {
        print_json(&json!({
            "schema": SCHEMA_VERSION,
            "command": "check",
            "code": file.name,
            "n": s.n(),
            "k": s.k(),
            "verdict": if pass { "pass" } else { "fail" },
            "reports": reports,
        }))?;
    } else {
        println!("{}", describe(file, &s));
        reports.iter().for_each(print_report);
    }
    Ok(Outcome::from_pass(pass))
}

pub struct ConstructRequest {
    pub m: Option<usize>,
    pub y_pattern: Option<String>,
    pub pad: usize,
    /// `Some(L)` selects the Shor family.
    pub shor_l: Option<Option<usize>>,
    pub name: Option<String>,
    pub out: Option<PathBuf>,
    pub json: bool,
}

/// One block repeated `count` times, or an explicit comma separated list.
fn parse_blocks(pattern: &str, count: usize, m: usize) -> anyhow::Result<Vec<BinaryVector>> {
    let parts: Vec<&str> = pattern.split(',').map(str::trim).collect();
    let blocks: Vec<BinaryVector> =
        parts.iter().map(|p| p.parse::<BinaryVector>()).collect::<Result<_, _>>().context("--y-pattern")?;
    if let Some(b) = blocks.iter().find(|b| b.len() != m) {
        bail!("--y-pattern block {b} has length {}, expected M = {m}", b.len());
    }
    match blocks.len() {
        1 => Ok(vec![blocks[0].clone(); count]),
        c if c == count => Ok(blocks),
        c => bail!("--y-pattern has {c} blocks, expected 1 or {count}"),
    }
}

pub fn construct(seed: Option<&CodeFile>, req: &ConstructRequest) -> anyhow::Result<Outcome> {
    let (file, summary) = match (seed, req.shor_l) {
        (Some(_), Some(_)) => bail!("give either a seed code or --family, not both"),
        (None, None) => bail!("a seed code or --family is required"),
        (None, Some(l)) => {
            let Some(l) = l else { bail!("--family shor needs --L") };
            if req.pad > 0 {
                bail!("--pad applies to seed lifts only");
            }
            let m = 2 * l;
            if let Some(given) = req.m {
                if given != m {
                    bail!("the Shor family fixes M = 2L = {m}");
                }
            }
            let blocks = req.y_pattern.as_deref().map(|p| parse_blocks(p, m, m)).transpose()?;
            let c =
                construct_css_product(&BinaryMatrix::identity(m), &BinaryMatrix::single_parity_check(m), m, blocks)?;
            let n = c.n();
            let name = req.name.clone().unwrap_or_else(|| format!("shor{n}"));
            let file = CodeFile::css(name, c).with_comment(format!("[[{n},1,{m}]] member L = {l} of the Shor family."));
            (file, json!({ "n": n, "k": 1, "d": m }))
        }
        (Some(seed_file), None) => {
            let Some(m) = req.m else { bail!("--m is required for a seed lift") };
            let seed = seed_file.group()?;
            let mut spec = ConstructionSpec::new(seed.clone(), m).with_padding(req.pad);
            if let Some(p) = &req.y_pattern {
                spec = spec.with_y_blocks(parse_blocks(p, seed.n(), m)?);
            }
            let lifted = construct_stabilizer_lift(&spec)?;
            let bounds = seed_distance_bounds(&seed, m);
            let name = req.name.clone().unwrap_or_else(|| format!("{}_m{m}", seed_file.name));
            let d_text = match bounds {
                Some((lo, hi)) => format!("{lo}..={hi}"),
                None => "?".into(),
            };
            let file = CodeFile::stabilizer(name, lifted.clone()).with_comment(format!(
                "[[{},{},{d_text}]] lift of {} with M = {m} and {} padding qubit(s).",
                lifted.n(),
                lifted.k(),
                seed_file.name,
                req.pad
            ));
            let d = bounds.map(|(lo, hi)| json!({ "lower": lo, "upper": hi }));
            (file, json!({ "n": lifted.n(), "k": lifted.k(), "d": d }))
        }
    };
    let text = file.serialize();
    let group = file.group()?;
    let oblivious = theorem3_check(&group, &CheckOptions::default())?.passed();
    let summary_line = format!(
        "{} [[{},{},{}]] oblivious: {}",
        file.name,
        summary["n"],
        summary["k"],
        match &summary["d"] {
            serde_json::Value::Object(o) => format!("{}..={}", o["lower"], o["upper"]),
            serde_json::Value::Null => "?".into(),
            other => other.to_string(),
        },
        if oblivious { "yes" } else { "no" }
    );
    match &req.out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            if req.json {
                print_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": "construct",
                    "code": file.name,
                    "out": path,
                    "parameters": summary,
                    "oblivious": oblivious,
                }))?;
            } else {
                println!("{summary_line}");
                println!("wrote {}", path.display());
            }
        }
        None => {
            print!("{text}");
            eprintln!("{summary_line}");
        }
    }
    Ok(Outcome::Pass)
}

/// `(d, M d)` from the seed distance, when it is cheap to find.
fn seed_distance_bounds(seed: &StabilizerGroup, m: usize) -> Option<(usize, usize)> {
    let opts = DistanceOptions { budget: 1 << 24, ..DistanceOptions::default() };
    min_distance(seed, &opts).ok().map(|r| (r.d, m * r.d))
}

pub fn distance(file: &CodeFile, cap_weight: Option<usize>, json_out: bool) -> anyhow::Result<Outcome> {
    let s = file.group()?;
    let opts = DistanceOptions { max_weight: cap_weight, ..DistanceOptions::default() };
    match min_distance(&s, &opts) {
        Ok(r) => {
            if json_out {
                print_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": "distance",
                    "code": file.name,
                    "d": r.d,
                    "witness": r.witness.label(),
                    "patterns_searched": r.patterns_searched,
                }))?;
            } else {
                println!("{}", describe(file, &s));
                println!("d = {}", r.d);
                println!("witness {}", r.witness.label());
            }
            Ok(Outcome::Pass)
        }
        Err(Error::DistanceBoundOnly { lower_bound }) => {
            if json_out {
                print_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": "distance",
                    "code": file.name,
                    "lower_bound": lower_bound,
                }))?;
            } else {
                println!("d >= {lower_bound}");
            }
            bail!("search limit reached before a logical operator was found (d >= {lower_bound})")
        }
        Err(e) => Err(e.into()),
    }
}

pub fn enumerate(file: &CodeFile, z: bool, cap: EnumCap, json_out: bool) -> anyhow::Result<Outcome> {
    let s = file.group()?;
    let pair = if z {
        let pz = s.pure_z_subgroup()?;
        SignedEnumeratorPair::from_code(pz.basis(), &pz.character_vector(), cap)?
    } else {
        SignedEnumeratorPair::unsigned(weight_enumerator(&s.x_matrix().reduced_basis(), cap)?)
    };
    let which = if z { "z" } else { "x" };
    let m = pair.plus.m();
    let counts: Vec<String> =
        (0..=m).map(|w| (pair.plus.coefficient(w) + pair.minus.coefficient(w)).to_string()).collect();
    if json_out {
        print_json(&json!({
            "schema": SCHEMA_VERSION,
            "command": "enumerate",
            "code": file.name,
            "which": which,
            "m": m,
            "coefficients": counts,
            "plus": pair.plus,
            "minus": pair.minus,
        }))?;
    } else {
        println!("{} {which} enumerator", describe(file, &s));
        println!("{:>6} {:>12} {:>12} {:>12}", "weight", "count", "plus", "minus");
        for (w, c) in counts.iter().enumerate() {
            if c != "0" {
                println!("{w:>6} {c:>12} {:>12} {:>12}", pair.plus.coefficient(w), pair.minus.coefficient(w));
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn simulate(file: &CodeFile, thetas: &[f64], seed: u64, json_out: bool) -> anyhow::Result<Outcome> {
    let s = file.group()?;
    let grid = if thetas.is_empty() { default_theta_grid() } else { thetas.to_vec() };
    let opts = OracleOptions { seed, ..OracleOptions::default() };
    let r = invariance_up_to_phase(&s, &grid, &opts)?;
    if json_out {
        print_json(&json!({
            "schema": SCHEMA_VERSION,
            "command": "simulate",
            "code": file.name,
            "verdict": if r.invariant_all() { "pass" } else { "fail" },
            "report": r,
        }))?;
    } else {
        println!("{}", describe(file, &s));
        println!("{:>10} {:>12} {:>14} {:>10} {:>10}", "theta", "leakage", "fidelity", "logical", "phase");
        for t in &r.results {
            let phase = t.phase.map_or("-".to_string(), |p| format!("{p:.6}"));
            let logical = if t.invariant {
                "identity"
            } else if t.preserved {
                "nontrivial"
            } else {
                "leaks"
            };
            println!("{:>10.6} {:>12.3e} {:>14.12} {:>10} {:>10}", t.theta, t.leakage, t.min_fidelity, logical, phase);
        }
    }
    Ok(Outcome::from_pass(r.invariant_all()))
}

pub fn validate(spec: &str, json_out: bool) -> anyhow::Result<Outcome> {
    let text = input::read(spec)?;
    match parse_code_file(&text) {
        Ok(file) => {
            let s = file.group()?;
            let report = CheckReport::from(&s.validate());
            let css = file.as_css()?.is_some();
            if json_out {
                print_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": "validate",
                    "code": file.name,
                    "n": s.n(),
                    "k": s.k(),
                    "css": css,
                    "verdict": "pass",
                    "reports": [report],
                }))?;
            } else {
                println!("{}{}", describe(&file, &s), if css && file.kind() == "stab" { ", CSS form" } else { "" });
                print_report(&report);
            }
            Ok(Outcome::Pass)
        }
        Err(Error::Validation(why)) => {
            if json_out {
                print_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": "validate",
                    "verdict": "fail",
                    "reason": why,
                }))?;
            } else {
                println!("invalid: {why}");
            }
            Ok(Outcome::Fail)
        }
        Err(e) => Err(anyhow::Error::new(e).context(format!("parsing {spec}"))),
    }
}
