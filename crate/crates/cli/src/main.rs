//! `binframe`: binary frames from the command line.
//!
//! Matrices are read in the plain-text format (one row of 0/1 per line, `#`
//! comments), from a file, from stdin with `-`, or inline with rows separated
//! by `;`. Frames may also be given as JSON records
//! `{"d": .., "K": .., "columns": [..]}`.
//!
//! Exit codes: 0 success, 1 infeasible or negative answer, 2 invalid input,
//! 3 resource guard.

use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use binframe::catalog::{self, AttainabilityTable, OracleOptions};
use binframe::dual::{self, DualAlphaRequest};
use binframe::frame::FrameRecord;
use binframe::gf2::text::parse_matrix;
use binframe::{symfactor, synthesis, worked_examples};
use binframe::{AlphaVector, Error, Frame, Gf2Matrix, SymmetricMatrix};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "binframe", version, about = "Binary frames over Z_2^d")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format (csv applies to tables only).
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    /// Worker threads for the exhaustive search.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum number of multisets per K.
    #[arg(long, default_value_t = catalog::DEFAULT_BUDGET)]
    budget: u128,
}

impl OracleArgs {
    fn options(&self) -> OracleOptions {
        OracleOptions {
            budget: self.budget,
            jobs: self.jobs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Frame predicates, frame operator and parity vector.
    Check {
        #[arg(long)]
        frame: String,
        #[command(flatten)]
        out: FormatArg,
    },
    /// The natural dual of a frame.
    NaturalDual {
        #[arg(long)]
        frame: String,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Count or list every dual of a frame.
    Duals {
        #[arg(long)]
        frame: String,
        #[arg(long, conflicts_with = "enumerate")]
        count: bool,
        #[arg(long)]
        enumerate: bool,
        /// Enumerate past the default size limit.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: FormatArg,
    },
    /// A dual pair with prescribed cross dot products.
    DualPair {
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'K')]
        k: Option<usize>,
        #[arg(long)]
        alpha: String,
        /// Require the primal frame to be Parseval.
        #[arg(long)]
        parseval: bool,
        #[command(flatten)]
        out: FormatArg,
    },
    /// A Parseval frame with prescribed vector parities.
    Parseval {
        #[arg(short = 'd')]
        d: usize,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Minimal factor A with A A* = S.
    Factor {
        #[arg(long)]
        matrix: String,
        /// Pad the factor with zero columns to this many columns.
        #[arg(long)]
        columns: Option<usize>,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Fewest vectors in a frame with operator S.
    MinSize {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        out: FormatArg,
    },
    /// A frame with operator S and prescribed vector parities.
    Construct {
        #[arg(long)]
        matrix: String,
        #[arg(short = 'K')]
        k: Option<usize>,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Whether K vectors with m odd ones can have operator S.
    Feasible {
        #[arg(long)]
        matrix: String,
        #[arg(short = 'K')]
        k: usize,
        #[arg(short = 'm', conflicts_with = "alpha", required_unless_present = "alpha")]
        m: Option<usize>,
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Attainability table from the theory.
    Catalog {
        #[arg(short = 'd')]
        d: usize,
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        /// Also report matrices with an empty attainable set.
        #[arg(long)]
        unattainable: bool,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Attainability table by exhaustive search.
    Oracle {
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'K')]
        k: usize,
        /// Search K..=kmax instead of a single K.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        unattainable: bool,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Compare the theory with the exhaustive search, matrix by matrix.
    CrossValidate {
        #[arg(short = 'd')]
        d: usize,
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Check the published worked examples.
    VerifyPaper {
        #[command(flatten)]
        out: FormatArg,
    },
}

/// A finished command: what to print and how to exit.
struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, code: 0 }
    }

    fn negative(text: String, json: Value) -> Self {
        Self { text, json, code: 1 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceGuard { .. } | Error::EnumerationGuard { .. } => 3,
        Error::Infeasible(_)
        | Error::ParityMismatch { .. }
        | Error::BasisForced { .. }
        | Error::ZeroAlpha
        | Error::ParsevalDualUnattainable { .. }
        | Error::TooShort { .. }
        | Error::Mismatch(_) => 1,
        _ => 2,
    }
}

fn read_source(src: &str) -> Result<String, Error> {
    if src == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    if Path::new(src).exists() {
        return std::fs::read_to_string(src).map_err(|e| Error::InvalidInput(format!("cannot read {src}: {e}")));
    }
    if !src.is_empty() && src.chars().all(|c| matches!(c, '0' | '1' | ';' | ' ')) {
        return Ok(src.replace(';', "\n"));
    }
    Err(Error::InvalidInput(format!("{src}: no such file")))
}

fn read_matrix(src: &str) -> Result<Gf2Matrix, Error> {
    parse_matrix(&read_source(src)?)
}

fn read_symmetric(src: &str) -> Result<SymmetricMatrix, Error> {
    SymmetricMatrix::new(read_matrix(src)?)
}

fn read_frame(src: &str) -> Result<Frame, Error> {
    let text = read_source(src)?;
    if text.trim_start().starts_with('{') {
        let rec: FrameRecord =
            serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad frame record: {e}")))?;
        return Frame::from_record(&rec);
    }
    Ok(Frame::from_synthesis(&parse_matrix(&text)?))
}

fn read_alpha(bits: &str, k: Option<usize>) -> Result<AlphaVector, Error> {
    let alpha = AlphaVector::parse(bits)?;
    if let Some(k) = k {
        if k != alpha.len() {
            return Err(Error::InvalidInput(format!(
                "alpha has length {} but K = {k}",
                alpha.len()
            )));
        }
    }
    Ok(alpha)
}

fn matrix_json(m: &Gf2Matrix) -> Value {
    json!(m.row_vectors().iter().map(|r| r.to_bit_string()).collect::<Vec<_>>())
}

fn frame_json(f: &Frame) -> Value {
    serde_json::to_value(f.to_record()).expect("frame records serialize")
}

fn table_outcome(t: &AttainabilityTable, unattainable: bool, format: Format) -> Outcome {
    let text = match format {
        Format::Csv => t.to_csv(unattainable),
        _ => t.to_text(unattainable),
    };
    let json: Value = serde_json::from_str(&t.to_json(unattainable)).expect("table json");
    Outcome::ok(text, json)
}

fn run(cmd: Command) -> Result<(Outcome, Format), Error> {
    let out = match cmd {
        Command::Check { frame, out } => {
            let f = read_frame(&frame)?;
            let s = f.frame_operator();
            let text = format!(
                "d = {}, K = {}\nframe: {}\nparseval: {}\nalpha: {}\noperator:\n{}",
                f.dim(),
                f.len(),
                f.is_frame(),
                f.is_parseval(),
                f.self_diag(),
                s.matrix().to_text()
            );
            let json = json!({
                "d": f.dim(),
                "K": f.len(),
                "frame": f.is_frame(),
                "parseval": f.is_parseval(),
                "alpha": f.self_diag().to_string(),
                "operator": matrix_json(s.matrix()),
            });
            let o = if f.is_frame() {
                Outcome::ok(text, json)
            } else {
                Outcome::negative(text, json)
            };
            (o, out.format)
        }
        Command::NaturalDual { frame, out } => {
            let g = read_frame(&frame)?.natural_dual()?;
            (Outcome::ok(g.to_string(), frame_json(&g)), out.format)
        }
        Command::Duals {
            frame,
            count: _,
            enumerate,
            force,
            out,
        } => {
            let f = read_frame(&frame)?;
            let space = f.dual_space()?;
            let e = space.count_exponent();
            let count = space.count().map_or_else(|| format!("2^{e}"), |c| c.to_string());
            if enumerate {
                let duals: Vec<Frame> = space.enumerate(force)?.collect();
                let text = duals.iter().map(|h| h.to_string()).collect::<Vec<_>>().join("\n");
                let json = json!({
                    "exponent": e,
                    "count": count,
                    "duals": duals.iter().map(frame_json).collect::<Vec<_>>(),
                });
                (Outcome::ok(text, json), out.format)
            } else {
                let text = format!("duals: {count} (2^{e})\n");
                (Outcome::ok(text, json!({"exponent": e, "count": count})), out.format)
            }
        }
        Command::DualPair {
            d,
            k,
            alpha,
            parseval,
            out,
        } => {
            let req = DualAlphaRequest::new(d, read_alpha(&alpha, k)?);
            let pair = if parseval {
                dual::parseval_with_dual_alpha(&req)?
            } else {
                dual::dual_pair_with_alpha(&req)?
            };
            let text = format!("F:\n{}H:\n{}alpha: {}\n", pair.primal, pair.dual, pair.cross_diag());
            let json = json!({
                "F": frame_json(&pair.primal),
                "H": frame_json(&pair.dual),
                "alpha": pair.cross_diag().to_string(),
            });
            (Outcome::ok(text, json), out.format)
        }
        Command::Parseval { d, alpha, out } => {
            let f = dual::parseval_with_self_alpha(d, &read_alpha(&alpha, None)?)?;
            (Outcome::ok(f.to_string(), frame_json(&f)), out.format)
        }
        Command::Factor { matrix, columns, out } => {
            let s = read_symmetric(&matrix)?;
            let a = match columns {
                Some(n) => symfactor::factor_with_columns(&s, n)?,
                None => symfactor::minimal_factor(&s),
            };
            (Outcome::ok(a.to_text(), matrix_json(&a)), out.format)
        }
        Command::MinSize { matrix, out } => {
            let n = synthesis::min_frame_size(&read_symmetric(&matrix)?);
            (Outcome::ok(format!("{n}\n"), json!(n)), out.format)
        }
        Command::Construct { matrix, k, alpha, out } => {
            let s = read_symmetric(&matrix)?;
            let f = synthesis::frame_with_operator_and_alpha(&s, &read_alpha(&alpha, k)?)?;
            (Outcome::ok(f.to_string(), frame_json(&f)), out.format)
        }
        Command::Feasible {
            matrix,
            k,
            m,
            alpha,
            out,
        } => {
            let s = read_symmetric(&matrix)?;
            let m = match (m, alpha) {
                (Some(m), _) => m,
                (None, Some(a)) => read_alpha(&a, Some(k))?.weight(),
                (None, None) => unreachable!("clap requires -m or --alpha"),
            };
            let report = synthesis::feasible(&s, k, m)?;
            let text = format!("feasible: {}\nreason: {}\n", report.feasible, report);
            let json = json!({"feasible": report.feasible, "reason": report.reason.name(), "K": k, "m": m});
            let o = if report.feasible {
                Outcome::ok(text, json)
            } else {
                Outcome::negative(text, json)
            };
            (o, out.format)
        }
        Command::Catalog {
            d,
            kmin,
            kmax,
            unattainable,
            out,
        } => {
            let t = catalog::generate_table(d, kmin, kmax)?;
            (table_outcome(&t, unattainable, out.format), out.format)
        }
        Command::Oracle {
            d,
            k,
            kmax,
            unattainable,
            oracle,
            out,
        } => {
            let t = catalog::brute_force_table(d, k, kmax.unwrap_or(k), &oracle.options())?;
            (table_outcome(&t, unattainable, out.format), out.format)
        }
        Command::CrossValidate {
            d,
            kmin,
            kmax,
            oracle,
            out,
        } => {
            let report = catalog::cross_validate(d, kmin, kmax, &oracle.options())?;
            let text = format!(
                "match: d = {d}, K = {kmin}..{kmax}, {} (S, K) pairs compared\n",
                report.cells
            );
            let json = json!({"match": true, "d": d, "kmin": kmin, "kmax": kmax, "cells": report.cells});
            (Outcome::ok(text, json), out.format)
        }
        Command::VerifyPaper { out } => {
            let checks = worked_examples::run_all();
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!(
                    "{} {}: {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            let json = json!(checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect::<Vec<_>>());
            let o = if checks.iter().all(|c| c.passed) {
                Outcome::ok(text, json)
            } else {
                Outcome::negative(text, json)
            };
            (o, out.format)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((o, format)) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&o.json).expect("json")),
                _ => print!("{}", o.text),
            }
            ExitCode::from(o.code)
        }
        Err(e) => {
            let code = exit_code(&e);
            match &e {
                Error::Infeasible(r) => {
                    println!("feasible: false\nreason: {r}");
                    eprintln!("error: infeasible request: {r}");
                }
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
