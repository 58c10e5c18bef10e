use clap::{Args, Parser, Subcommand, ValueEnum};

use sagnac_core::{InterferometerConfig, SweepVariable, UnitSystem};

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "sagnac",
    version,
    about = "Rotating-disk matter-wave interferometer simulator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Print the physical constants of a unit system
    Constants(ConstantsArgs),
    /// Print the rotating-disk metric and its perturbation
    Metric(MetricArgs),
    /// Sagnac phase at one radius, optionally relative to a second
    Phase(PhaseArgs),
    /// Four-branch radial/angular state amplitudes
    State(ConfigArgs),
    /// Entanglement report for the four-branch state
    Entangle(ConfigArgs),
    /// Solve for the frequency or radius giving maximal entanglement
    Solve(SolveArgs),
    /// Sweep one parameter and tabulate the entanglement landscape
    Sweep(SweepArgs),
    /// Circular Bohr orbits of hydrogen
    Hydrogen(HydrogenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Units {
    #[default]
    Si,
    Natural,
}

impl From<Units> for UnitSystem {
    fn from(u: Units) -> Self {
        match u {
            Units::Si => UnitSystem::Si,
            Units::Natural => UnitSystem::Natural,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveTarget {
    Omega2,
    R2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    Omega2,
    R2,
    Mass,
}

impl From<Vary> for SweepVariable {
    fn from(v: Vary) -> Self {
        match v {
            Vary::Omega2 => SweepVariable::Omega2,
            Vary::R2 => SweepVariable::R2,
            Vary::Mass => SweepVariable::Mass,
        }
    }
}

/// Finite decimal, scientific notation accepted.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("malformed number `{s}`"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("number must be finite, got `{s}`"))
    }
}

/// `N1,N2` with both quantum numbers at least 1.
pub fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected N1,N2, got `{s}`"))?;
    let n = |t: &str| -> Result<u32, String> {
        match t.trim().parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(format!(
                "quantum number must be a positive integer, got `{t}`"
            )),
        }
    };
    Ok((n(a)?, n(b)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Args)]
pub struct OutputArgs {
    /// Output format; csv is available for sweep only
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct ConstantsArgs {
    #[arg(long, value_enum, default_value_t = Units::Si)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct MetricArgs {
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r: f64,
    #[arg(long, value_enum, default_value_t = Units::Si)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct PhaseArgs {
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub m: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r: f64,
    /// Second radius; adds the phase of the r2 branch relative to r
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r2: Option<f64>,
    #[arg(long, value_enum, default_value_t = Units::Si)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct ConfigArgs {
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub m: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r1: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r2: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega1: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega2: f64,
    #[arg(long, value_enum, default_value_t = Units::Si)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl ConfigArgs {
    pub fn config(&self) -> InterferometerConfig {
        InterferometerConfig {
            m: self.m,
            r1: self.r1,
            r2: self.r2,
            omega1: self.omega1,
            omega2: self.omega2,
            units: self.units.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub target: SolveTarget,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub m: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r1: f64,
    /// Required for --target omega2
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r2: Option<f64>,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega1: f64,
    /// Required for --target r2
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega2: Option<f64>,
    /// Selects the target Δ = (2k+1)π
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub k: i64,
    /// Solver results are usually quoted in natural units
    #[arg(long, value_enum, default_value_t = Units::Natural)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub vary: Vary,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub start: f64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub stop: f64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub m: Option<f64>,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r1: Option<f64>,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub r2: Option<f64>,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega1: Option<f64>,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    pub omega2: Option<f64>,
    #[arg(long, value_enum, default_value_t = Units::Si)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[command(group(clap::ArgGroup::new("orbit").args(["n", "pair"]).required(true).multiple(false)))]
pub struct HydrogenArgs {
    /// Principal quantum number of a single circular orbit
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,
    /// Two principal quantum numbers, `N1,N2`
    #[arg(long, value_parser = parse_pair)]
    pub pair: Option<(u32, u32)>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Constants(_) => "constants",
            Command::Metric(_) => "metric",
            Command::Phase(_) => "phase",
            Command::State(_) => "state",
            Command::Entangle(_) => "entangle",
            Command::Solve(_) => "solve",
            Command::Sweep(_) => "sweep",
            Command::Hydrogen(_) => "hydrogen",
        }
    }

    pub fn format(&self) -> Format {
        match self {
            Command::Constants(a) => a.output.format,
            Command::Metric(a) => a.output.format,
            Command::Phase(a) => a.output.format,
            Command::State(a) | Command::Entangle(a) => a.output.format,
            Command::Solve(a) => a.output.format,
            Command::Sweep(a) => a.output.format,
            Command::Hydrogen(a) => a.output.format,
        }
    }
}
