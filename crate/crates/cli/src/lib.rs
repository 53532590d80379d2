//! Command-line front end: CSV data and `key = value` reports for the SIR
//! family.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use epikit_core::{
    compare_models, fastest_new_infections, final_size, final_size_sweep, integrate,
    modified_final_values, peak_values, peak_values_with_time, EpiError, FinalSizeMethod,
    IntegratorConfig, ModelKind, ModelParams,
};
use thiserror::Error;

pub mod format;

use format::{fixed, sig9};

/// Default initial infected proportion.
pub const DEFAULT_I0: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] EpiError),
    #[error("{0}")]
    Usage(String),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: 2 for usage and domain errors, 1 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "epikit",
    version,
    about = "SIR epidemic model: simulation, peak and final-size analytics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate a model and print `tau,S,I,R` as CSV.
    Simulate(SimulateArgs),
    /// Values of S, I, R at peak infection.
    Peak(PeakArgs),
    /// Final susceptible and removed proportions.
    FinalSize(FinalSizeArgs),
    /// Final removed proportion over a grid of r0 values, as CSV `r0,R_inf`.
    Sweep(SweepArgs),
    /// Point of fastest growth of new infections.
    Fastest(PopulationArgs),
    /// SIR against the calibrated modified closed form, as CSV `tau,I_sir,I_modified`.
    Compare(CompareArgs),
    /// Peak and end values for r0 = 2, 3, 6 with S0 = 1.
    Table1(Table1Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Sir,
    Modified,
    /// SI (logistic) model; r0 acts as the infection rate b in units of a.
    Si,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Sir => ModelKind::Sir,
            ModelArg::Modified => ModelKind::ModifiedSir,
            ModelArg::Si => ModelKind::Si,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    FixedPoint,
    Bisection,
}

impl From<MethodArg> for FinalSizeMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::FixedPoint => FinalSizeMethod::FixedPoint,
            MethodArg::Bisection => FinalSizeMethod::Bisection,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InitialArgs {
    /// Initial susceptible proportion (default 1 - i0).
    #[arg(long)]
    pub s0: Option<f64>,
    /// Initial infected proportion (default 1e-6, or 1 - s0 when --s0 is given).
    #[arg(long)]
    pub i0: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct PopulationArgs {
    /// Basic reproduction number.
    #[arg(long)]
    pub r0: f64,
    #[command(flatten)]
    pub initial: InitialArgs,
    /// Removal rate; enables physical time t = tau / a.
    #[arg(long)]
    pub a: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct IntegrationArgs {
    /// Step size in rescaled time.
    #[arg(long, default_value_t = 1e-3)]
    pub h: f64,
    #[arg(long, default_value_t = 100.0)]
    pub tau_max: f64,
    /// Emit every n-th integration step.
    #[arg(long, default_value_t = 10)]
    pub out_every: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Sir)]
    pub model: ModelArg,
    #[command(flatten)]
    pub population: PopulationArgs,
    #[command(flatten)]
    pub integration: IntegrationArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PeakArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    /// Also integrate to find the peak time.
    #[arg(long)]
    pub with_time: bool,
    #[command(flatten)]
    pub integration: IntegrationArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FinalSizeArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Bisection)]
    pub method: MethodArg,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, required_unless_present = "grid")]
    pub r0_min: Option<f64>,
    #[arg(long, required_unless_present = "grid")]
    pub r0_max: Option<f64>,
    #[arg(long, required_unless_present = "grid")]
    pub step: Option<f64>,
    /// Explicit comma-separated r0 values instead of a range.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["r0_min", "r0_max", "step"])]
    pub grid: Option<Vec<f64>>,
    #[command(flatten)]
    pub initial: InitialArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub r0: f64,
    #[arg(long, default_value_t = DEFAULT_I0)]
    pub i0: f64,
    #[command(flatten)]
    pub integration: IntegrationArgs,
    /// Print a `key = value` summary instead of the CSV.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Table1Args {
    /// Unrounded values.
    #[arg(long)]
    pub raw: bool,
}

/// Resolves `(s0, i0)` from the optional flags.
pub fn initial_proportions(args: &InitialArgs) -> (f64, f64) {
    match (args.s0, args.i0) {
        (Some(s0), Some(i0)) => (s0, i0),
        (Some(s0), None) => (s0, 1.0 - s0),
        (None, Some(i0)) => (1.0 - i0, i0),
        (None, None) => (1.0 - DEFAULT_I0, DEFAULT_I0),
    }
}

fn params_from(p: &PopulationArgs) -> Result<ModelParams, CliError> {
    let (s0, i0) = initial_proportions(&p.initial);
    let params = ModelParams::with_initial(p.r0, s0, i0)?;
    Ok(match p.a {
        Some(a) => params.with_removal_rate(a)?,
        None => params,
    })
}

fn config_from(args: &IntegrationArgs) -> Result<IntegratorConfig, CliError> {
    if args.out_every == 0 {
        return Err(CliError::Usage("--out-every must be at least 1".into()));
    }
    Ok(IntegratorConfig::default()
        .with_step_size(args.h)
        .with_tau_max(args.tau_max))
}

/// Indices of the rows to emit: every `n`-th plus the last.
fn thinned(len: usize, every: usize) -> impl Iterator<Item = usize> {
    (0..len).filter(move |&k| k % every == 0 || k + 1 == len)
}

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    match &cli.command {
        Command::Simulate(args) => simulate(args, out),
        Command::Peak(args) => peak(args, out),
        Command::FinalSize(args) => final_size_cmd(args, out),
        Command::Sweep(args) => sweep(args, out),
        Command::Fastest(args) => fastest(args, out),
        Command::Compare(args) => compare(args, out),
        Command::Table1(args) => table1(args, out),
    }
}

fn simulate<W: Write>(args: &SimulateArgs, out: &mut W) -> Result<(), CliError> {
    let params = params_from(&args.population)?;
    let config = config_from(&args.integration)?;
    let traj = integrate(&params, args.model.into(), &config)?;
    let with_t = args.population.a.is_some();

    writeln!(out, "tau,S,I,R{}", if with_t { ",t" } else { "" })?;
    let states = traj.states();
    for k in thinned(states.len(), args.integration.out_every) {
        let st = &states[k];
        write!(
            out,
            "{},{},{},{}",
            sig9(st.tau),
            sig9(st.s),
            sig9(st.i),
            sig9(st.r)
        )?;
        if with_t {
            write!(out, ",{}", sig9(st.tau / params.a()))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn peak<W: Write>(args: &PeakArgs, out: &mut W) -> Result<(), CliError> {
    let params = params_from(&args.population)?;
    let report = if args.with_time {
        peak_values_with_time(&params, &config_from(&args.integration)?)?
    } else {
        peak_values(&params)?
    };
    writeln!(out, "S_star = {}", sig9(report.s_star))?;
    writeln!(out, "I_star = {}", sig9(report.i_star))?;
    writeln!(out, "R_star = {}", sig9(report.r_star))?;
    if let Some(tau) = report.tau_star {
        writeln!(out, "tau_star = {}", sig9(tau))?;
        if args.population.a.is_some() {
            writeln!(out, "t_star = {}", sig9(tau / params.a()))?;
        }
    }
    Ok(())
}

fn method_name(m: FinalSizeMethod) -> &'static str {
    match m {
        FinalSizeMethod::FixedPoint => "fixed-point",
        FinalSizeMethod::Bisection => "bisection",
    }
}

fn final_size_cmd<W: Write>(args: &FinalSizeArgs, out: &mut W) -> Result<(), CliError> {
    let params = params_from(&args.population)?;
    let rep = final_size(&params, args.method.into())?;
    writeln!(out, "R_inf = {}", sig9(rep.r_inf))?;
    writeln!(out, "S_inf = {}", sig9(rep.s_inf))?;
    writeln!(out, "method = {}", method_name(rep.method))?;
    writeln!(out, "iterations = {}", rep.iterations)?;
    writeln!(out, "residual = {}", sig9(rep.residual))?;
    Ok(())
}

/// Grid `min, min + step, ...` up to `max` inclusive (with a small slack for
/// rounding).
pub fn range_grid(min: f64, max: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(min.is_finite() && max.is_finite() && step.is_finite())
        || min <= 0.0
        || step <= 0.0
        || max < min
    {
        return Err(CliError::Usage(format!(
            "invalid grid: need 0 < r0-min <= r0-max and step > 0, got {min}, {max}, {step}"
        )));
    }
    let n = ((max - min) / step + 1e-9).floor();
    if n > 1e7 {
        return Err(CliError::Usage(format!("grid too large: {n} points")));
    }
    Ok((0..=n as usize).map(|k| min + k as f64 * step).collect())
}

fn sweep<W: Write>(args: &SweepArgs, out: &mut W) -> Result<(), CliError> {
    let grid = match (&args.grid, args.r0_min, args.r0_max, args.step) {
        (Some(g), ..) => {
            let mut g = g.clone();
            g.sort_by(f64::total_cmp);
            g.dedup();
            g
        }
        (None, Some(min), Some(max), Some(step)) => range_grid(min, max, step)?,
        _ => {
            return Err(CliError::Usage(
                "give --grid or --r0-min/--r0-max/--step".into(),
            ))
        }
    };
    let (s0, i0) = initial_proportions(&args.initial);
    if (s0 + i0 - 1.0).abs() > epikit_core::model::INITIAL_SUM_TOL {
        return Err(
            EpiError::InvalidParameter(format!("s0 + i0 must equal 1, got {s0} + {i0}")).into(),
        );
    }
    let rows = final_size_sweep(&grid, s0)?;
    writeln!(out, "r0,R_inf")?;
    for (r0, r_inf) in rows {
        writeln!(out, "{},{}", sig9(r0), sig9(r_inf))?;
    }
    Ok(())
}

fn fastest<W: Write>(args: &PopulationArgs, out: &mut W) -> Result<(), CliError> {
    let params = params_from(args)?;
    let f = fastest_new_infections(&params)?;
    writeln!(out, "S_at_max = {}", sig9(f.s_at_max))?;
    writeln!(out, "I_at_max = {}", sig9(f.i_at_max))?;
    writeln!(out, "rate_max = {}", sig9(f.rate_max))?;
    Ok(())
}

fn compare<W: Write>(args: &CompareArgs, out: &mut W) -> Result<(), CliError> {
    let config = config_from(&args.integration)?;
    let cmp = compare_models(args.r0, args.i0, &config)?;
    if args.summary {
        let (_, i_peak) = modified_final_values(args.r0)?;
        let sir_peak = cmp.rows.iter().map(|r| r.i_sir).fold(0.0, f64::max);
        writeln!(
            out,
            "tau_star_modified = {}",
            sig9(cmp.closed_form.tau_star())
        )?;
        writeln!(out, "I_peak_sir = {}", sig9(sir_peak))?;
        writeln!(out, "I_peak_modified = {}", sig9(i_peak))?;
        writeln!(out, "R_final_sir = {}", sig9(cmp.sir_final_r))?;
        writeln!(out, "R_inf_modified = {}", sig9(cmp.modified_final_r))?;
        writeln!(out, "max_abs_diff = {}", sig9(cmp.max_abs_diff))?;
        return Ok(());
    }
    writeln!(out, "tau,I_sir,I_modified")?;
    for k in thinned(cmp.rows.len(), args.integration.out_every) {
        let row = &cmp.rows[k];
        writeln!(
            out,
            "{},{},{}",
            sig9(row.tau),
            sig9(row.i_sir),
            sig9(row.i_modified)
        )?;
    }
    Ok(())
}

/// One row of the peak / end-value table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub r0: f64,
    pub s_star: f64,
    pub i_star: f64,
    pub r_star: f64,
    pub s_inf: f64,
    pub r_inf: f64,
}

pub const TABLE1_R0: [f64; 3] = [2.0, 3.0, 6.0];

pub fn table1_rows() -> Result<Vec<Table1Row>, EpiError> {
    TABLE1_R0
        .iter()
        .map(|&r0| {
            let params = ModelParams::idealized(r0)?;
            let peak = peak_values(&params)?;
            let end = final_size(&params, FinalSizeMethod::Bisection)?;
            Ok(Table1Row {
                r0,
                s_star: peak.s_star,
                i_star: peak.i_star,
                r_star: peak.r_star,
                s_inf: end.s_inf,
                r_inf: end.r_inf,
            })
        })
        .collect()
}

/// Display precision of the end values: three places when S_inf would round
/// to zero at two.
fn end_decimals(row: &Table1Row) -> usize {
    if row.s_inf < 0.005 {
        3
    } else {
        2
    }
}

pub fn render_table1(raw: bool) -> Result<String, EpiError> {
    let rows = table1_rows()?;
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|row| {
            let peak = |x: f64| if raw { sig9(x) } else { fixed(x, 2) };
            let end = |x: f64| {
                if raw {
                    sig9(x)
                } else {
                    fixed(x, end_decimals(row))
                }
            };
            [
                sig9(row.r0),
                peak(row.s_star),
                peak(row.i_star),
                peak(row.r_star),
                end(row.s_inf),
                end(row.r_inf),
            ]
        })
        .collect();
    let header = ["r0", "S_star", "I_star", "R_star", "S_inf", "R_inf"];
    let widths: Vec<usize> = (0..6)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |fields: &[&str]| {
        let mut s = String::new();
        for (c, f) in fields.iter().enumerate() {
            if c + 1 == fields.len() {
                s.push_str(f);
            } else {
                s.push_str(&format!("{f:<w$}  ", w = widths[c]));
            }
        }
        s.push('\n');
        s
    };
    let mut text = line(&header);
    for r in &cells {
        let fields: Vec<&str> = r.iter().map(String::as_str).collect();
        text.push_str(&line(&fields));
    }
    Ok(text)
}

fn table1<W: Write>(args: &Table1Args, out: &mut W) -> Result<(), CliError> {
    out.write_all(render_table1(args.raw)?.as_bytes())?;
    Ok(())
}
