//! Command-line frontend: sphere polynomials, the coefficient table, the
//! binary Moebius transform on vector files, sigma-basis expansion, and
//! minimum-distance checks on generator-matrix files.
//!
//! Exit codes: 0 success (or "yes"), 1 a distance check answered "no",
//! 2 parse failure, 3 rank-deficient generator matrix.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use sphere_ideals::anf::{self, SparseAnf};
use sphere_ideals::mindist::{self, Code, Method};
use sphere_ideals::sphere;
use sphere_ideals::{Error, SymmetricPoly};

const EXIT_NO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_RANK: u8 = 3;

#[derive(Parser)]
#[command(name = "sphereideal", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Sigma,
    Anf,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMethod {
    Eval,
    Symbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Print phi_t, the indicator of Hamming weight >= t.
    Phi {
        t: u64,
        /// Restrict to this many variables (required for ANF output).
        #[arg(long)]
        vars: Option<u64>,
        #[arg(long, value_enum, default_value = "sigma")]
        format: PolyFormat,
    },
    /// Print rho_t, the indicator of Hamming weight == t.
    Rho {
        t: u64,
        #[arg(long)]
        vars: Option<u64>,
        #[arg(long, value_enum, default_value = "sigma")]
        format: PolyFormat,
    },
    /// Print the coefficient windows of phi_t and rho_t for t = 1..max.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Apply the binary Moebius transform to a vector file.
    Moebius {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a sigma-basis polynomial or weight profile into its ANF.
    Expand {
        #[arg(long)]
        vars: usize,
        /// Comma-separated sigma degrees, e.g. "3,4".
        #[arg(long, conflicts_with = "profile")]
        sigma: Option<String>,
        /// Desired evaluations by weight, e.g. "01010" for vars = 4.
        #[arg(long)]
        profile: Option<String>,
    },
    /// Check or search the minimum distance of a linear code.
    Mindist {
        #[arg(long)]
        gen: PathBuf,
        #[arg(long, value_enum, default_value = "eval")]
        method: CheckMethod,
        /// Check whether d >= t.
        #[arg(long, conflicts_with = "search")]
        check: Option<u64>,
        /// Pin d exactly by binary search.
        #[arg(long)]
        search: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    t: u64,
    tau: u64,
    indices: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct TableRowJson {
    t: u64,
    phi: WindowJson,
    rho: WindowJson,
}

#[derive(Serialize, Deserialize)]
struct WindowJson {
    tau: u64,
    indices: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct DistanceJson {
    d: u64,
    checks_performed: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::RankDeficient { .. } => EXIT_RANK,
                _ => EXIT_PARSE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Phi { t, vars, format } => {
            let poly = sphere::build_phi(t)?;
            print_poly("phi", t, &poly, vars, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rho { t, vars, format } => {
            let poly = sphere::build_rho(t)?;
            print_poly("rho", t, &poly, vars, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { max, format } => {
            if max < 1 {
                return Err(Error::Parse("--max must be at least 1".into()));
            }
            let rows = sphere::emit_table(max)?;
            match format {
                TableFormat::Text => print!("{}", sphere::render_table(&rows)),
                TableFormat::Json => {
                    for row in rows {
                        let json = TableRowJson {
                            t: row.t,
                            phi: WindowJson {
                                tau: row.phi_tau,
                                indices: row.phi_indices,
                            },
                            rho: WindowJson {
                                tau: row.rho_tau,
                                indices: row.rho_indices,
                            },
                        };
                        println!("{}", serde_json::to_string(&json).expect("serializable"));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Moebius { input, out } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Error::Parse(format!("{}: {e}", input.display())))?;
            let (n, bits) = anf::parse_vector(&text)?;
            let transformed = anf::moebius(&bits)?;
            let rendered = anf::format_vector(n, &transformed);
            match out {
                Some(path) => fs::write(&path, rendered)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand {
            vars,
            sigma,
            profile,
        } => {
            let poly = match (sigma, profile) {
                (Some(list), None) => {
                    let degrees = list
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse::<u64>()
                                .map_err(|_| Error::Parse(format!("invalid degree '{s}'")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    SymmetricPoly::from_degrees(false, degrees)
                }
                (None, Some(bits)) => {
                    if bits.len() != vars + 1 {
                        return Err(Error::Parse(format!(
                            "profile needs {} bits for --vars {vars}",
                            vars + 1
                        )));
                    }
                    let values = bits
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(Error::Parse(format!("invalid profile bit '{c}'"))),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    sphere::expand_in_rho_basis(&values)?
                }
                _ => {
                    return Err(Error::Parse(
                        "expand needs exactly one of --sigma or --profile".into(),
                    ))
                }
            };
            println!("{}", anf::expand(&poly, vars)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mindist {
            gen,
            method,
            check,
            search,
            json,
        } => {
            let text = fs::read_to_string(&gen)
                .map_err(|e| Error::Parse(format!("{}: {e}", gen.display())))?;
            let matrix = mindist::parse_generator_matrix(&text)?;
            let method = match method {
                CheckMethod::Eval => Method::Eval,
                CheckMethod::Symbolic => Method::Symbolic,
            };
            match (check, search) {
                (Some(t), false) => {
                    if t < 1 {
                        return Err(Error::Parse("--check threshold must be >= 1".into()));
                    }
                    let ok = mindist::weight_at_least(&Code::Linear(matrix), t, method)?;
                    println!("d >= {t}: {}", if ok { "yes" } else { "no" });
                    Ok(if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_NO)
                    })
                }
                (None, true) => {
                    let result = mindist::min_distance(&matrix)?;
                    if json {
                        let out = DistanceJson {
                            d: result.d,
                            checks_performed: result.checks,
                        };
                        println!("{}", serde_json::to_string(&out).expect("serializable"));
                    } else {
                        println!("d = {}", result.d);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err(Error::Parse(
                    "mindist needs exactly one of --check or --search".into(),
                )),
            }
        }
    }
}

fn print_poly(
    name: &str,
    t: u64,
    poly: &SymmetricPoly,
    vars: Option<u64>,
    format: PolyFormat,
) -> Result<(), Error> {
    let tau = poly.period().expect("builders return periodic form");
    match format {
        PolyFormat::Sigma => {
            let restricted = match vars {
                Some(n) => poly.restrict(n),
                None => poly.restrict(tau),
            };
            let body = render_sigma(&restricted);
            match vars {
                Some(n) => println!("{name}[{t}]: {body} (restricted to {n} variables)"),
                None => println!("{name}[{t}]: {body} (period {tau})"),
            }
        }
        PolyFormat::Anf => {
            let n = vars.ok_or_else(|| Error::Parse("ANF output needs --vars".into()))?;
            let expanded: SparseAnf = anf::expand(&poly.restrict(n), n as usize)?;
            println!("{expanded}");
        }
        PolyFormat::Json => {
            let upper = vars.unwrap_or(tau);
            let indices: Vec<u64> = (1..=upper).filter(|&i| poly.coeff(i)).collect();
            let json = PolyJson { t, tau, indices };
            println!("{}", serde_json::to_string(&json).expect("serializable"));
        }
    }
    Ok(())
}

fn render_sigma(poly: &SymmetricPoly) -> String {
    let mut terms: Vec<String> = Vec::new();
    if poly.constant_bit() {
        terms.push("1".into());
    }
    terms.extend(poly.degrees().map(|d| format!("sigma[{d}]")));
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
