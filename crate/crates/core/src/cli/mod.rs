//! Command-line front end.
//!
//! Exit codes: `0` every check passed, `1` some check failed, `2` usage
//! error.

mod config;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::diffop::Op2D;
use crate::error::{Error, Result};
use crate::model::states::{energy, energy_as_printed};
use crate::model::wavefn::{interior_grid, write_wavefunction_csv};
use crate::model::{build_hamiltonian, build_l1, build_l2, SystemParams};
use crate::numeric::{compare_spectrum, write_spectrum_csv};
use crate::oscillator::{spectrum_table, PhiForm};
use crate::verify::{run_instances, run_suite, Status, Suite, VerificationReport};

pub use config::{FileConfig, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "superint", version, about = "Exact checks for a fourth-order superintegrable system")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default, Clone)]
pub struct GlobalArgs {
    /// α as `p/q` or an integer
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    #[arg(long, global = true)]
    pub beta: Option<String>,
    /// Oscillator frequency, positive
    #[arg(long, global = true)]
    pub omega: Option<String>,
    /// Comma-separated suites, or `all`
    #[arg(long, global = true)]
    pub suites: Option<String>,
    /// Extra random instances
    #[arg(long, global = true)]
    pub random: Option<usize>,
    /// Seed for the random instances
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the JSON/CSV output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file with the same keys as the flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, hide = true)]
    pub fault_c12_offset: Option<String>,
    #[arg(long, global = true, hide = true)]
    pub fault_k_quarter: Option<String>,
    #[arg(long, global = true, hide = true)]
    pub fault_y_scale: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites (all selected by `--suites`, or the one named)
    Verify { suite: Option<String> },
    /// Second-degree equation for the potential and its Painlevé VI parameters
    Painleve {
        #[command(subcommand)]
        what: PainleveCmd,
    },
    /// Deformed-oscillator representations of the cubic algebra
    Oscillator {
        #[command(subcommand)]
        what: OscillatorCmd,
    },
    /// Energies `E(m, n)`; `--numeric` adds the finite-difference values
    Spectrum {
        #[arg(long)]
        numeric: bool,
        /// Largest `m + n`
        #[arg(long, default_value_t = 2)]
        max_level: u32,
    },
    /// Sample `R_m ⊗ Φ_n` on a grid as `r,phi,psi`
    Wavefunction {
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 40)]
        nr: usize,
        #[arg(long, default_value_t = 40)]
        nphi: usize,
        #[arg(long, default_value_t = 4.0)]
        rmax: f64,
    },
    /// Normal-form dump of `H`, `L1` or `L2`
    Dump { operator: OperatorName },
}

#[derive(Subcommand, Debug)]
enum PainleveCmd {
    /// JSON with the q constants, γ branches and the residual check
    Report,
}

#[derive(Subcommand, Debug)]
enum OscillatorCmd {
    /// Representations for every family, sign choice and `p`
    Spectrum {
        #[arg(long, default_value_t = 6)]
        max_p: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OperatorName {
    H,
    L1,
    L2,
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn main_with_args(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e @ (Error::Usage(_) | Error::Parse(_) | Error::InvalidParams(_))) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn output(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json(out: &Option<PathBuf>, value: &impl serde::Serialize) -> Result<()> {
    let mut w = output(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    let cfg = RunConfig::resolve(&cli.global)?;
    let p = cfg.params.clone();
    match cli.command {
        Command::Verify { suite } => {
            let suites = match suite {
                Some(s) => vec![s.parse::<Suite>()?],
                None => cfg.suites.clone(),
            };
            verify(&cfg, &suites)
        }
        Command::Painleve { what: PainleveCmd::Report } => {
            let report = crate::painleve::painleve_report(&p)?;
            write_json(&cfg.out, &report)?;
            let ok = report.residual_zero
                && report.t_w_consistent
                && (report.gamma_branches.plus_branch || report.gamma_branches.minus_branch);
            Ok(if ok { 0 } else { 1 })
        }
        Command::Oscillator {
            what: OscillatorCmd::Spectrum { max_p, format },
        } => {
            let table = spectrum_table(&p, max_p, PhiForm::DERIVED)?;
            match format {
                Format::Json => write_json(&cfg.out, &table)?,
                Format::Text => {
                    let mut w = output(&cfg.out)?;
                    writeln!(w, "{:>6} {:>4} {:>4} {:>10} {:>3} {:>12} {:>10}", "family", "eps1", "eps2", "u", "p", "E", "admissible")?;
                    for r in &table {
                        writeln!(
                            w,
                            "{:>6} {:>4} {:>4} {:>10} {:>3} {:>12} {:>10}",
                            r.family,
                            r.eps1,
                            r.eps2,
                            crate::exact::rational::fmt_rational(&r.u),
                            r.p,
                            crate::exact::rational::fmt_rational(&r.energy),
                            r.admissible
                        )?;
                    }
                }
            }
            let s = run_suite(Suite::Oscillator, &p, &cfg.options);
            Ok(if s.status == Status::Fail { 1 } else { 0 })
        }
        Command::Spectrum { numeric, max_level } => {
            if numeric {
                let rows = compare_spectrum(&p, max_level, &cfg.options.numeric)?;
                write_spectrum_csv(output(&cfg.out)?, &rows)?;
                let ok = rows.iter().all(|r| r.rel_error < cfg.options.numeric.tol_combined);
                Ok(if ok { 0 } else { 1 })
            } else {
                let mut w = output(&cfg.out)?;
                writeln!(w, "m,n,E,E_as_printed")?;
                for level in 0..=max_level {
                    for m in 0..=level {
                        let n = level - m;
                        writeln!(
                            w,
                            "{m},{n},{},{}",
                            crate::exact::rational::fmt_rational(&energy(m, n, &p)),
                            crate::exact::rational::fmt_rational(&energy_as_printed(m, n, &p))
                        )?;
                    }
                }
                Ok(0)
            }
        }
        Command::Wavefunction { m, n, nr, nphi, rmax } => {
            let rs = interior_grid(0.0, rmax, nr);
            let phis = interior_grid(0.0, std::f64::consts::FRAC_PI_2, nphi);
            write_wavefunction_csv(output(&cfg.out)?, m, n, &p, &rs, &phis)?;
            Ok(0)
        }
        Command::Dump { operator } => {
            let op: Op2D = match operator {
                OperatorName::H => build_hamiltonian(&p),
                OperatorName::L1 => build_l1(&p),
                OperatorName::L2 => build_l2(&p)?.l2,
            };
            let mut w = output(&cfg.out)?;
            write!(w, "{}", op.dump())?;
            Ok(0)
        }
    }
}

fn verify(cfg: &RunConfig, suites: &[Suite]) -> Result<i32> {
    let instances = cfg.instances();
    let reports = run_instances(&instances, suites, &cfg.options);
    let report = VerificationReport::new(cfg.echo(suites), reports);
    for inst in &report.instances {
        println!("{} [{}]", inst.params, inst.origin);
        for s in &inst.suites {
            println!("  {:<10} {:<8} {:>8} ms  {}", s.name, status_word(s.status), s.timing_ms, s.summary);
        }
    }
    println!("overall: {}", status_word(report.status));
    if let Some(path) = &cfg.out {
        write_json(&Some(path.clone()), &report)?;
    } else if suites.len() == 1 && suites[0] == Suite::Algebra {
        println!("{}", serde_json::to_string_pretty(&json!(report))?);
    }
    Ok(report.exit_code())
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
        Status::Degraded => "degraded",
    }
}

/// Parameters for a run, as [`SystemParams`], for callers embedding the CLI.
pub fn params_from_args(args: &GlobalArgs) -> Result<SystemParams> {
    Ok(RunConfig::resolve(args)?.params)
}
