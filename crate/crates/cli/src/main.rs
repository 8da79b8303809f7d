//! `conic2bezier` command-line interface.
//!
//! Subcommands:
//!
//! - `render <scene.json> [-o out.svg] [--max-phi RAD] [--nsegs N]
//!   [--tolerance T]` — lower a JSON scene to SVG.
//! - `error-table [-o out.csv] [--grid N]` — radial-error table for unit
//!   circle arcs of φ ∈ {0.1π, …, 0.9π}, closed form next to sampled.
//! - `probe --phi RAD [--grid N]` — error metrics for a single sweep.
//!
//! Exit codes: 0 success, 1 bad input (flags, scene contents, ranges),
//! 2 I/O failure. The env var `CONIC2BEZIER_PRECISION` overrides the default
//! coordinate precision for scenes that do not set one.

use std::env;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use conic2bezier::{
    clamp_maxphi, emit_svg, eps_max, parse_scene_with_default_precision, profile_unit_arc,
    psi_max, table1_report, RenderOptions, DEFAULT_NSEGS_ELLIPSE, DEFAULT_PRECISION,
};

#[derive(Parser)]
#[command(name = "conic2bezier", version, about = "Ellipses and elliptical arcs as cubic Bézier SVG paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a JSON scene file to SVG
    Render(RenderArgs),
    /// Emit the unit-circle radial-error table as CSV
    ErrorTable(ErrorTableArgs),
    /// Print error metrics for one arc sweep
    Probe(ProbeArgs),
}

#[derive(Args)]
struct RenderArgs {
    /// Scene file (JSON)
    scene: PathBuf,
    /// Output file; stdout when omitted
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Per-segment sweep cap for arcs, radians in (0, π/2]
    #[arg(long = "max-phi")]
    max_phi: Option<f64>,
    /// Segment count for full ellipses
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    nsegs: Option<u32>,
    /// Radial error budget in scene units; overrides --nsegs
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Args)]
struct ErrorTableArgs {
    /// Output file; stdout when omitted
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Samples per arc for the brute-force column
    #[arg(long, default_value_t = 100_000)]
    grid: u32,
}

#[derive(Args)]
struct ProbeArgs {
    /// Arc sweep in radians, in (0, 2π)
    #[arg(long)]
    phi: f64,
    /// Samples for the brute-force maximum
    #[arg(long, default_value_t = 100_000)]
    grid: u32,
}

enum CliError {
    Validation(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Io(m) => m,
        }
    }
}

impl From<conic2bezier::Error> for CliError {
    fn from(e: conic2bezier::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage problem.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Render(args) => render(args),
        Command::ErrorTable(args) => error_table(args),
        Command::Probe(args) => probe(args),
    }
}

fn render(args: RenderArgs) -> Result<(), CliError> {
    let mut opts = RenderOptions {
        nsegs_ellipse: args.nsegs.unwrap_or(DEFAULT_NSEGS_ELLIPSE),
        tolerance: args.tolerance,
        ..RenderOptions::default()
    };
    if let Some(maxphi) = args.max_phi {
        opts.maxphi = clamp_maxphi(maxphi)?;
    }
    if let Some(tol) = args.tolerance {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Validation(format!(
                "--tolerance must be a positive finite number, got {tol}"
            )));
        }
    }

    let text = fs::read(&args.scene)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.scene.display())))?;
    let scene = parse_scene_with_default_precision(&text, env_precision()?)?;
    let svg = emit_svg(&scene, &opts)?;
    write_output(args.out.as_deref(), &svg)
}

fn env_precision() -> Result<u32, CliError> {
    let raw = match env::var("CONIC2BEZIER_PRECISION") {
        Err(env::VarError::NotPresent) => return Ok(DEFAULT_PRECISION),
        Err(e) => return Err(CliError::Validation(format!("CONIC2BEZIER_PRECISION: {e}"))),
        Ok(raw) => raw,
    };
    match raw.trim().parse::<u32>() {
        Ok(p) if (1..=12).contains(&p) => Ok(p),
        _ => Err(CliError::Validation(format!(
            "CONIC2BEZIER_PRECISION must be an integer in 1..=12, got {raw:?}"
        ))),
    }
}

fn error_table(args: ErrorTableArgs) -> Result<(), CliError> {
    let rows = table1_report(args.grid)?;
    let mut out = String::from("phi_radians,eps_closed,eps_sampled,t_argmax\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            sig12(row.phi),
            sig12(row.eps_closed),
            sig12(row.eps_sampled),
            sig12(row.t_argmax),
        );
    }
    write_output(args.out.as_deref(), out.as_bytes())
}

fn probe(args: ProbeArgs) -> Result<(), CliError> {
    let phi = args.phi;
    let profile = profile_unit_arc(phi, args.grid)?;
    println!("phi {}", sig12(phi));
    println!("eps_max {}", sig12(eps_max(phi)?));
    println!("psi_max {}", sig12(psi_max(phi)?));
    println!("eps_sampled {}", sig12(profile.eps_max_sampled));
    println!("t_argmax {}", sig12(profile.t_argmax));
    Ok(())
}

/// Decimal scientific notation with 12 significant digits.
fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

fn write_output(path: Option<&std::path::Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}
