use std::fs::File;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use critbound::conjecture::{check_coverage, growth_sweep, loglog_slope, CounterexampleFamily};
use critbound::lower::{gamma_omega, OmegaCondition};
use critbound::oracle::OracleOptions;
use critbound::radius::{rho_profile, Tolerances};
use critbound::report::{
    analyze, parse_polynomial, render_text, write_annuli_csv, AnalysisOptions, EXIT_OK, EXIT_USAGE,
};
use critbound::{Complex64, Error};

#[derive(Parser)]
#[command(
    name = "critbound",
    version,
    about = "Certified root-distance bounds around critical points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound the nearest root at every critical point and check against the oracle
    Analyze {
        /// Coefficient file, or "-" for stdin
        file: PathBuf,
        #[arg(long, default_value_t = 0.618)]
        iota1: f64,
        #[arg(long, default_value_t = 10.0)]
        iota2: f64,
        #[command(flatten)]
        tol: ToleranceArgs,
        #[arg(long)]
        json: bool,
        /// Write the conjecture annuli as CSV
        #[arg(long)]
        csv_annuli: Option<PathBuf>,
        /// Scale every lower bound before checking (fault injection)
        #[arg(long, default_value_t = 1.0, hide = true)]
        inject_lower_scale: f64,
    },
    /// Radii and ratios for z^{n+1} - (n+1) z
    Counterexample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check whether the critical-point annuli cover every root
    Coverage {
        file: PathBuf,
        #[arg(long)]
        iota1: f64,
        #[arg(long)]
        iota2: f64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv_annuli: Option<PathBuf>,
    },
    /// Exclusion constant for a set of vanishing derivatives
    Gamma {
        /// Comma-separated derivative orders, e.g. 1,2
        #[arg(long, value_delimiter = ',', required = true)]
        omega: Vec<usize>,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        #[arg(long)]
        json: bool,
    },
    /// Ratio growth over a list of family sizes
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Counterexample,
}

#[derive(Args)]
struct ToleranceArgs {
    /// |p(ζ)| below this (relative) marks the center as a root
    #[arg(long, default_value_t = 1e-14)]
    degenerate_tol: f64,
    /// |p^(k)(ζ)| below this (relative) counts as zero
    #[arg(long, default_value_t = 1e-10)]
    vanishing_tol: f64,
    #[arg(long, default_value_t = 1e-12)]
    lower_slack: f64,
    #[arg(long, default_value_t = 1e-10)]
    upper_slack: f64,
    #[arg(long, default_value_t = 200)]
    max_iter: usize,
}

#[derive(Serialize)]
struct CounterexampleSummary {
    n: usize,
    degree: usize,
    rho2_closed_form: f64,
    rho2_at_one: f64,
    k: usize,
    rho_k_closed_form: f64,
    ratio_lower_bound: f64,
    measured_ratio: f64,
}

#[derive(Serialize)]
struct GammaSummary {
    omega: Vec<usize>,
    epsilon: f64,
    gamma: f64,
}

#[derive(Serialize)]
struct SweepSummary {
    k: usize,
    rows: Vec<critbound::conjecture::GrowthRow>,
    measured_slope: f64,
    expected_slope: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::NoConvergence { .. } => critbound::report::EXIT_NO_CONVERGENCE,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code as u8)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)
    } else {
        File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    result.map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write_csv(path: &Path, annuli: &[critbound::conjecture::Annulus]) -> Result<(), Error> {
    File::create(path)
        .and_then(|f| write_annuli_csv(annuli, f))
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("finite values")
    );
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze {
            file,
            iota1,
            iota2,
            tol,
            json,
            csv_annuli,
            inject_lower_scale,
        } => {
            let p = parse_polynomial(&read_input(&file)?)?;
            let options = AnalysisOptions {
                iota1,
                iota2,
                tolerances: Tolerances {
                    degenerate: tol.degenerate_tol,
                    vanishing: tol.vanishing_tol,
                },
                lower_slack: tol.lower_slack,
                upper_slack: tol.upper_slack,
                oracle: OracleOptions {
                    max_iterations: tol.max_iter,
                    ..OracleOptions::default()
                },
                lower_bound_scale: inject_lower_scale,
            };
            let report = analyze(&p, &options)?;
            if let Some(path) = csv_annuli {
                write_csv(&path, &report.conjecture.annuli)?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", render_text(&report));
            }
            Ok(report.exit_code())
        }
        Command::Counterexample { n, k, json } => {
            let family = CounterexampleFamily::new(n)?;
            let rho2_at_one = rho_profile(&family.polynomial, Complex64::new(1.0, 0.0))?.rho_k(2);
            let measured = family.measure()?;
            let summary = CounterexampleSummary {
                n,
                degree: n + 1,
                rho2_closed_form: family.rho2_closed_form(),
                rho2_at_one,
                k,
                rho_k_closed_form: family.rho_closed_form(k)?,
                ratio_lower_bound: family.ratio_closed_form(k)?,
                measured_ratio: measured.measured_ratio(k),
            };
            if json {
                print_json(&summary);
            } else {
                println!("p(z) = z^{} - {} z", n + 1, n + 1);
                println!(
                    "rho^(n,2): closed form {}  at zeta=1 {}",
                    summary.rho2_closed_form, summary.rho2_at_one
                );
                println!("rho^(n,{k}): {}", summary.rho_k_closed_form);
                println!(
                    "origin ratio k={k}: measured {}  lower bound {}",
                    summary.measured_ratio, summary.ratio_lower_bound
                );
            }
            Ok(EXIT_OK)
        }
        Command::Coverage {
            file,
            iota1,
            iota2,
            json,
            csv_annuli,
        } => {
            let p = parse_polynomial(&read_input(&file)?)?;
            let report = check_coverage(&p, iota1, iota2)?;
            if let Some(path) = csv_annuli {
                write_csv(&path, &report.annuli)?;
            }
            if json {
                print_json(&report);
            } else {
                println!(
                    "{} annuli, {} roots: {}",
                    report.annuli.len(),
                    report.roots.len(),
                    if report.covered {
                        "covered"
                    } else {
                        "NOT covered"
                    }
                );
                for r in &report.uncovered_roots {
                    println!("  uncovered {:+.12e}{:+.12e}i", r.re, r.im);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gamma { omega, eps, json } => {
            let cond = OmegaCondition::new(omega, eps, 1.0)?;
            let summary = GammaSummary {
                omega: cond.omega().to_vec(),
                epsilon: eps,
                gamma: gamma_omega(&cond)?,
            };
            if json {
                print_json(&summary);
            } else {
                println!("gamma = {}", summary.gamma);
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            family: Family::Counterexample,
            n_list,
            k,
            json,
        } => {
            let rows = growth_sweep(&n_list, k)?;
            let points: Vec<(f64, f64)> = rows
                .iter()
                .map(|r| (r.n as f64, r.measured_ratio))
                .collect();
            let summary = SweepSummary {
                k,
                measured_slope: if rows.len() >= 2 {
                    loglog_slope(&points)
                } else {
                    f64::NAN
                },
                expected_slope: 1.0 - 1.0 / k as f64,
                rows,
            };
            if json {
                print_json(&summary);
            } else {
                println!("n,measured_ratio,lower_bound");
                for r in &summary.rows {
                    println!("{},{},{}", r.n, r.measured_ratio, r.lower_bound);
                }
                println!(
                    "slope {} (expected {})",
                    summary.measured_slope, summary.expected_slope
                );
            }
            Ok(EXIT_OK)
        }
    }
}
