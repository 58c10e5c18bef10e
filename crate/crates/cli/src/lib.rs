//! Command-line front end: flag parsing, dispatch and output encoding.
//!
//! [`run`] never touches the process streams; it returns the exit status and
//! the bytes destined for standard output and standard error, which keeps the
//! binary a thin wrapper and makes every invocation testable in-process.
//!
//! Exit statuses: 0 on success, 1 on domain errors (regime violations,
//! degenerate solver inputs), 2 on argument errors.

pub mod args;
pub mod output;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use std::ffi::OsString;

use sagnac_core::{
    assemble_full_state, bohr_orbit, constants_for, entanglement_report, hydrogen_pair_report,
    hydrogen_phase, perturbation, regime_check, rotating_disk_metric, sagnac_phase, solve_omega2,
    solve_r2, sweep, two_radius_relative_phase, BohrOrbit, ConstantSet, EntanglementReport,
    InterferometerConfig, Perturbation, PhaseResult, PureState2x2, RegimeCheck, RegimeStatus,
    SweepSpec, SweepVariable, UnitSystem,
};

pub use args::{Cli, Command, Format};

#[derive(Debug)]
pub enum CliError {
    /// Bad or missing flags; exit status 2.
    Usage(String),
    /// `--help` / `--version`: printed to standard output with status 0.
    Info(String),
    /// Valid flags, invalid physics; exit status 1.
    Domain(sagnac_core::Error),
}

impl From<sagnac_core::Error> for CliError {
    fn from(e: sagnac_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Info(_) => 0,
            CliError::Domain(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Parses `argv` (program name first) and applies the cross-flag rules clap
/// cannot express.
pub fn parse_flags<I, T>(argv: I) -> Result<Cli, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp
        | ErrorKind::DisplayVersion
        | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            CliError::Info(e.render().to_string())
        }
        _ => CliError::Usage(e.render().to_string()),
    })?;

    let name = cli.command.name();
    if cli.command.format() == Format::Csv && !matches!(cli.command, Command::Sweep(_)) {
        return Err(CliError::Usage(format!(
            "error: --format csv is only available for sweep, not {name}\n"
        )));
    }
    match &cli.command {
        Command::Solve(a) => {
            match a.target {
                args::SolveTarget::Omega2 => require_flag(a.r2, "--r2", "solve --target omega2")?,
                args::SolveTarget::R2 => require_flag(a.omega2, "--omega2", "solve --target r2")?,
            };
        }
        Command::Sweep(a) => {
            sweep_base(a)?;
        }
        _ => {}
    }
    Ok(cli)
}

fn require_flag<T: Copy>(value: Option<T>, flag: &str, context: &str) -> Result<T, CliError> {
    value.ok_or_else(|| {
        CliError::Usage(format!(
            "error: missing required flag {flag} for {context}\n"
        ))
    })
}

fn sweep_base(a: &args::SweepArgs) -> Result<InterferometerConfig, CliError> {
    let varied = SweepVariable::from(a.vary);
    let pick = |value: Option<f64>, flag: &str, var: SweepVariable| -> Result<f64, CliError> {
        if varied == var {
            Ok(value.unwrap_or(a.start))
        } else {
            require_flag(value, flag, "sweep")
        }
    };
    Ok(InterferometerConfig {
        m: pick(a.m, "--m", SweepVariable::Mass)?,
        r1: require_flag(a.r1, "--r1", "sweep")?,
        r2: pick(a.r2, "--r2", SweepVariable::R2)?,
        omega1: require_flag(a.omega1, "--omega1", "sweep")?,
        omega2: pick(a.omega2, "--omega2", SweepVariable::Omega2)?,
        units: a.units.into(),
    })
}

#[derive(Serialize)]
struct MetricOutput {
    omega: f64,
    r: f64,
    g: [[f64; 4]; 4],
    perturbation: Perturbation,
    regime: RegimeCheck,
}

#[derive(Serialize)]
struct PhaseOutput {
    #[serde(flatten)]
    result: PhaseResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    r2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    relative_phase: Option<f64>,
}

#[derive(Serialize)]
struct StateOutput {
    phases: [[f64; 2]; 2],
    #[serde(flatten)]
    state: PureState2x2,
}

#[derive(Serialize)]
struct SolveOutput {
    target: &'static str,
    value: f64,
    k: i64,
    #[serde(flatten)]
    report: EntanglementReport,
}

#[derive(Serialize)]
struct OrbitOutput {
    orbit: BohrOrbit,
    beta: f64,
    paper_estimate: f64,
    eq1_phase: f64,
}

struct Emitted {
    stdout: Vec<u8>,
    warnings: Vec<String>,
}

fn warn_if_needed(check: RegimeCheck, warnings: &mut Vec<String>) {
    if check.status == RegimeStatus::Warn {
        warnings.push(format!(
            "warning: rim speed beta = {} exceeds {}; linear-regime results are approximate",
            check.beta,
            sagnac_core::constants::REGIME_WARN_BETA
        ));
    }
}

fn execute(cli: &Cli) -> Result<Emitted, CliError> {
    let mut warnings = Vec::new();
    let stdout = match &cli.command {
        Command::Constants(a) => output::to_json(&constants_for(a.units.into())),
        Command::Metric(a) => {
            let consts = constants_for(a.units.into());
            let metric = rotating_disk_metric(a.omega, a.r, &consts)?;
            let regime = regime_check(a.omega, a.r, &consts)?;
            warn_if_needed(regime, &mut warnings);
            output::to_json(&MetricOutput {
                omega: metric.omega,
                r: metric.r,
                g: metric.g,
                perturbation: perturbation(&metric),
                regime,
            })
        }
        Command::Phase(a) => {
            let consts = constants_for(a.units.into());
            let result = sagnac_phase(a.m, a.omega, a.r, &consts)?;
            let relative_phase = match a.r2 {
                Some(r2) => {
                    let rel = two_radius_relative_phase(a.m, a.omega, a.r, r2, &consts)?;
                    warn_if_needed(regime_check(a.omega, a.r.max(r2), &consts)?, &mut warnings);
                    Some(rel)
                }
                None => {
                    warn_if_needed(result.regime, &mut warnings);
                    None
                }
            };
            output::to_json(&PhaseOutput {
                result,
                r2: a.r2,
                relative_phase,
            })
        }
        Command::State(a) => {
            let cfg = a.config();
            warn_if_needed(cfg.validate()?, &mut warnings);
            let state = assemble_full_state(&cfg)?;
            output::to_json(&StateOutput {
                phases: cfg.branch_phases()?,
                state,
            })
        }
        Command::Entangle(a) => {
            let cfg = a.config();
            warn_if_needed(cfg.validate()?, &mut warnings);
            output::to_json(&entanglement_report(&cfg)?)
        }
        Command::Solve(a) => {
            let units: UnitSystem = a.units.into();
            let consts = constants_for(units);
            let (target, value, cfg) = match a.target {
                args::SolveTarget::Omega2 => {
                    let r2 = a.r2.expect("checked in parse_flags");
                    let omega2 = solve_omega2(a.m, a.r1, r2, a.omega1, a.k, &consts)?;
                    (
                        "omega2",
                        omega2,
                        InterferometerConfig {
                            m: a.m,
                            r1: a.r1,
                            r2,
                            omega1: a.omega1,
                            omega2,
                            units,
                        },
                    )
                }
                args::SolveTarget::R2 => {
                    let omega2 = a.omega2.expect("checked in parse_flags");
                    let r2 = solve_r2(a.m, a.r1, a.omega1, omega2, a.k, &consts)?;
                    (
                        "r2",
                        r2,
                        InterferometerConfig {
                            m: a.m,
                            r1: a.r1,
                            r2,
                            omega1: a.omega1,
                            omega2,
                            units,
                        },
                    )
                }
            };
            warn_if_needed(cfg.validate()?, &mut warnings);
            output::to_json(&SolveOutput {
                target,
                value,
                k: a.k,
                report: entanglement_report(&cfg)?,
            })
        }
        Command::Sweep(a) => {
            let spec = SweepSpec {
                varying: a.vary.into(),
                start: a.start,
                stop: a.stop,
                count: usize::try_from(a.count)
                    .map_err(|_| CliError::Usage("error: --count too large\n".into()))?,
                base: sweep_base(a)?,
            };
            let rows = sweep(&spec)?;
            match a.output.format {
                Format::Json => output::to_json(&rows),
                Format::Csv => output::sweep_to_csv(&rows),
            }
        }
        Command::Hydrogen(a) => {
            let consts: ConstantSet = constants_for(UnitSystem::Si);
            match (a.n, a.pair) {
                (Some(n), _) => {
                    let orbit = bohr_orbit(n, &consts)?;
                    let phase = hydrogen_phase(n, &consts)?;
                    output::to_json(&OrbitOutput {
                        orbit,
                        beta: regime_check(orbit.omega, orbit.r, &consts)?.beta,
                        paper_estimate: phase.paper_estimate,
                        eq1_phase: phase.eq1_phase,
                    })
                }
                (None, Some((n1, n2))) => output::to_json(&hydrogen_pair_report(n1, n2, &consts)?),
                (None, None) => unreachable!("clap enforces the orbit group"),
            }
        }
    };
    Ok(Emitted { stdout, warnings })
}

/// Runs one invocation. Standard output is empty whenever the status is non-zero.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_flags(argv).and_then(|cli| execute(&cli));
    match result {
        Ok(Emitted { stdout, warnings }) => {
            let stderr = warnings.iter().map(|w| format!("{w}\n")).collect();
            Outcome {
                code: 0,
                stdout,
                stderr,
            }
        }
        Err(e) => {
            let code = e.exit_code();
            match e {
                CliError::Info(text) => Outcome {
                    code,
                    stdout: text.into_bytes(),
                    stderr: String::new(),
                },
                CliError::Usage(text) => Outcome {
                    code,
                    stdout: Vec::new(),
                    stderr: text,
                },
                CliError::Domain(inner) => Outcome {
                    code,
                    stdout: Vec::new(),
                    stderr: format!("error: {inner}\n"),
                },
            }
        }
    }
}
