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

//! `coherent-shield` command-line tool.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! and 2 on any operational error.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "coherent-shield",
    version,
    about = "Check and build codes that are oblivious to transversal coherent Z rotations"
)]
struct Cli {
    /// Worker threads for parallel checks (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    X,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Shor,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check invariance at given angles, or obliviousness at every level.
    Check {
        /// Code file path or bundled name such as `shor16.code`.
        code: String,
        /// Rotation angle phi in radians.
        #[arg(long = "angle", allow_negative_numbers = true)]
        angles: Vec<f64>,
        /// Level l, checked at phi = 2 pi / 2^l.
        #[arg(long = "level")]
        levels: Vec<u32>,
        /// Structural check covering every level at once (the default).
        #[arg(long)]
        all_l: bool,
        /// Also run the transversal T conditions.
        #[arg(long)]
        t_conditions: bool,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Lift a seed code, or build a member of a named family.
    Construct {
        /// Seed code; omit when using --family.
        code: Option<String>,
        /// Block length M (even, at least 2).
        #[arg(long)]
        m: Option<usize>,
        /// Character block(s): one bitstring of length M for every block, or
        /// a comma separated list with one bitstring per block.
        #[arg(long)]
        y_pattern: Option<String>,
        /// Number of padding qubits.
        #[arg(long, default_value_t = 0)]
        pad: usize,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Family parameter.
        #[arg(long = "L")]
        l: Option<usize>,
        /// Name written to the `code` line.
        #[arg(long)]
        name: Option<String>,
        /// Output path; the file is printed to stdout when absent.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Minimum distance by exhaustive search.
    Distance {
        code: String,
        /// Only search up to this weight.
        #[arg(long)]
        cap_weight: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Weight enumerator of the pure Z subgroup or of the X components.
    Enumerate {
        code: String,
        #[arg(long, value_enum, default_value = "z")]
        which: Which,
        #[arg(long)]
        json: bool,
    },
    /// Apply the transversal rotation to the code space on a statevector.
    Simulate {
        code: String,
        /// Rotation angle theta of exp(i theta Z) per qubit; defaults to a fixed grid.
        #[arg(long = "theta", allow_negative_numbers = true)]
        thetas: Vec<f64>,
        #[arg(long, default_value_t = coherent_shield::oracle::OracleOptions::default().seed)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Parse a code file and check the stabilizer group axioms.
    Validate {
        code: String,
        #[arg(long)]
        json: bool,
    },
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let cap = input::env_cap()?;
    match cli.command {
        Command::Check { code, angles, levels, all_l, t_conditions, tolerance, json } => {
            let req = commands::CheckRequest { angles, levels, all_l, t_conditions, tolerance, json, cap };
            commands::check(&input::load(&code)?, &req)
        }
        Command::Construct { code, m, y_pattern, pad, family, l, name, out, json } => {
            let seed = code.as_deref().map(input::load).transpose()?;
            let req =
                commands::ConstructRequest { m, y_pattern, pad, shor_l: family.map(|Family::Shor| l), name, out, json };
            commands::construct(seed.as_ref(), &req)
        }
        Command::Distance { code, cap_weight, json } => commands::distance(&input::load(&code)?, cap_weight, json),
        Command::Enumerate { code, which, json } => {
            commands::enumerate(&input::load(&code)?, which == Which::Z, cap, json)
        }
        Command::Simulate { code, thetas, seed, json } => commands::simulate(&input::load(&code)?, &thetas, seed, json),
        Command::Validate { code, json } => commands::validate(&code, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
