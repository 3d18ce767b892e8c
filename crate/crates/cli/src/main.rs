//! `unidenom`: universal denominators, Gosper summation, GP representations
//! and rational solutions of linear recurrences from the command line.
//!
//! Exit status is 0 on success, 1 when there is no solution (or a certificate
//! fails to verify), and 2 on bad input.

mod commands;
mod encode;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{Failure, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "unidenom", version, about, long_about = None)]
struct Cli {
    /// Emit a single JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Also print intermediate traces (the G_k sequence, d_i or delta_i lists).
    #[arg(long, short, global = true)]
    verbose: bool,

    /// Read the input expressions from a file, one per line, instead of the
    /// command line. Blank lines and lines starting with '#' are skipped.
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Largest k >= 0 with gcd(A(n), B(n+k)) nonconstant, or -1.
    Dispersion {
        /// A B
        #[arg(value_name = "EXPR")]
        exprs: Vec<String>,
    },
    /// Universal denominator of sum_m p_m(n) y(n+m) = p(n) from p_0 and p_d.
    Denominator {
        /// Order d of the recurrence.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Method::Explicit)]
        method: Method,
        /// P0 PD
        #[arg(value_name = "EXPR")]
        exprs: Vec<String>,
    },
    /// Gosper's algorithm for a term ratio R = t(n+1)/t(n).
    Gosper {
        /// R
        #[arg(value_name = "EXPR")]
        exprs: Vec<String>,
    },
    /// GP representation of a ratio R.
    GpRep {
        /// R
        #[arg(value_name = "EXPR")]
        exprs: Vec<String>,
    },
    /// All rational solutions of sum_m p_m(n) y(n+m) = p(n).
    ///
    /// With --file the lines are P0 ... PD followed by the right-hand side.
    Ratsolve {
        /// P0 ... PD
        #[arg(long, num_args = 1.., value_name = "EXPR")]
        coeffs: Vec<String>,
        /// Right-hand side P.
        #[arg(long, value_name = "EXPR")]
        rhs: Option<String>,
    },
    /// Check a certificate exactly.
    Verify {
        #[command(subcommand)]
        kind: Verify,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Checks R(n) Y(n+1) - Y(n) = 1.
    Gosper {
        /// R Y
        #[arg(value_name = "EXPR")]
        exprs: Vec<String>,
    },
    /// Checks sum_m p_m(n) Y(n+m) = p(n).
    ///
    /// With --file the lines are P0 ... PD, the right-hand side, then Y.
    Rational {
        #[arg(long, num_args = 1.., value_name = "EXPR")]
        coeffs: Vec<String>,
        #[arg(long, value_name = "EXPR")]
        rhs: Option<String>,
        /// Y
        #[arg(value_name = "EXPR")]
        exprs: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// gcd of the two falling products
    Explicit,
    /// Abramov's loop
    Abramov,
    /// Petkovšek's loop; order 1 only
    Gp,
}

fn read_lines(path: &PathBuf) -> Result<Vec<String>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::plain(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dispersion { .. } => "dispersion",
        Command::Denominator { .. } => "denominator",
        Command::Gosper { .. } => "gosper",
        Command::GpRep { .. } => "gp-rep",
        Command::Ratsolve { .. } => "ratsolve",
        Command::Verify {
            kind: Verify::Gosper { .. },
        } => "verify gosper",
        Command::Verify {
            kind: Verify::Rational { .. },
        } => "verify rational",
    }
}

/// Splits file lines into `(coeffs, rhs, rest)` for the recurrence commands.
fn recurrence_from_lines(
    mut lines: Vec<String>,
    trailing: usize,
) -> Result<(Vec<String>, String, Vec<String>), Failure> {
    if lines.len() < 3 + trailing {
        return Err(Failure::plain(format!(
            "expected at least {} lines (two coefficients, the right-hand side{}), found {}",
            3 + trailing,
            if trailing > 0 { ", the candidate" } else { "" },
            lines.len()
        )));
    }
    let rest = lines.split_off(lines.len() - trailing);
    let rhs = lines.pop().expect("checked length");
    Ok((lines, rhs, rest))
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let file_lines = cli.file.as_ref().map(read_lines).transpose()?;
    let verbose = cli.verbose;
    // positional expressions, overridden by --file
    let pick = |exprs: Vec<String>| -> Result<Vec<String>, Failure> {
        match &file_lines {
            Some(_) if !exprs.is_empty() => Err(Failure::plain(format!(
                "--file replaces the expression arguments; got both ({} given)",
                exprs.len()
            ))),
            Some(lines) => Ok(lines.clone()),
            None => Ok(exprs),
        }
    };
    let recurrence = |coeffs: Vec<String>,
                      rhs: Option<String>,
                      trailing: Vec<String>,
                      ntrail: usize|
     -> Result<(Vec<String>, String, Vec<String>), Failure> {
        match &file_lines {
            Some(lines) => {
                if !coeffs.is_empty() || rhs.is_some() || !trailing.is_empty() {
                    return Err(Failure::plain(
                        "--file replaces --coeffs, --rhs and the expression arguments",
                    ));
                }
                recurrence_from_lines(lines.clone(), ntrail)
            }
            None => {
                let rhs = rhs.ok_or_else(|| Failure::plain("missing --rhs"))?;
                Ok((coeffs, rhs, trailing))
            }
        }
    };
    match cli.command {
        Command::Dispersion { exprs } => commands::dispersion(&pick(exprs)?, verbose),
        Command::Denominator {
            order,
            method,
            exprs,
        } => commands::denominator(order, method, &pick(exprs)?, verbose),
        Command::Gosper { exprs } => commands::gosper(&pick(exprs)?, verbose),
        Command::GpRep { exprs } => commands::gp_rep(&pick(exprs)?, verbose),
        Command::Ratsolve { coeffs, rhs } => {
            let (coeffs, rhs, _) = recurrence(coeffs, rhs, Vec::new(), 0)?;
            commands::ratsolve(&coeffs, &rhs, verbose)
        }
        Command::Verify { kind } => match kind {
            Verify::Gosper { exprs } => commands::verify_gosper(&pick(exprs)?),
            Verify::Rational { coeffs, rhs, exprs } => {
                let (coeffs, rhs, y) = recurrence(coeffs, rhs, exprs, 1)?;
                commands::verify_rational(&coeffs, &rhs, &y)
            }
        },
    }
}

/// Arguments such as `-n+1` or `-(n-1)*n` would be read as flags. Anything
/// starting with '-' that is not one of our flags gets a leading space, which
/// the expression tokenizer ignores.
fn shield_negative_exprs(args: impl Iterator<Item = OsString>) -> Vec<OsString> {
    const FLAGS: &[&str] = &[
        "--json",
        "--verbose",
        "-v",
        "--file",
        "--order",
        "--method",
        "--coeffs",
        "--rhs",
        "--help",
        "-h",
        "--version",
        "-V",
        "--",
    ];
    let mut out = Vec::new();
    let mut literal = false;
    for arg in args {
        let Some(s) = arg.to_str() else {
            out.push(arg);
            continue;
        };
        let flag_name = s.split('=').next().unwrap_or(s);
        if !literal && s.starts_with('-') && !FLAGS.contains(&flag_name) {
            out.push(OsString::from(format!(" {s}")));
        } else {
            literal |= s == "--";
            out.push(arg);
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(shield_negative_exprs(std::env::args_os()));
    let as_json = cli.json;
    let name = command_name(&cli.command);
    match run(cli) {
        Ok(report) => {
            if as_json {
                let status = match report.status {
                    Status::Ok => "ok",
                    Status::NoSolution => "no_solution",
                };
                let out = json!({"status": status, "command": name, "result": report.result});
                println!("{out}");
            } else {
                print!("{}", report.text);
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::NoSolution => ExitCode::from(1),
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            if let Some((expr, offset)) = &failure.location {
                eprintln!("  {expr}");
                eprintln!("  {}^", " ".repeat(expr[..*offset].chars().count()));
            }
            if as_json {
                let mut result = json!({"message": failure.message});
                if let Some((expr, offset)) = &failure.location {
                    result["expression"] = json!(expr);
                    result["offset"] = json!(offset);
                }
                println!(
                    "{}",
                    json!({"status": "error", "command": name, "result": result})
                );
            }
            ExitCode::from(2)
        }
    }
}
