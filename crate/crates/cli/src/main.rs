use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chrono::{DateTime, SecondsFormat, Utc};
use clap::{Args, Parser, Subcommand, ValueEnum};
use covosc::scan::{scan_observables, scan_phase_transition, scan_temperature};
use covosc::verify::{self, Fault, Verbosity, VerifyOptions};
use covosc::{Error, OutputFormat, ScanConfig, ScanTable};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ACCURACY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "covosc",
    version,
    about = "Scans and checks for the Lorentz-covariant harmonic oscillator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rapidity, velocity and the equivalent temperature.
    ScanTemperature(ScanArgs),
    /// beta^2 against temperature on an even temperature grid.
    ScanPhaseTransition(ScanArgs),
    /// Entropy, purity, widths and uncertainty products against rapidity.
    ScanObservables(ScanArgs),
    /// Run every closed-form vs numerical check and print the report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    eta_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    eta_max: f64,
    #[arg(long, default_value_t = 61)]
    steps: usize,
    /// Excitation along z.
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Also write a gnuplot script next to the output file.
    #[arg(long, requires = "out")]
    emit_plot: bool,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    SwappedMomentumExponents,
}

#[derive(Args)]
struct VerifyArgs {
    /// Tolerance for the checks whose contract is 1e-9.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, short, conflicts_with = "quiet")]
    verbose: bool,
    #[arg(long, short)]
    quiet: bool,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

impl ScanArgs {
    fn config(&self) -> ScanConfig {
        ScanConfig {
            eta_min: self.eta_min,
            eta_max: self.eta_max,
            steps: self.steps,
            n: self.n,
            output_format: match self.format {
                Format::Csv => OutputFormat::Csv,
                Format::Json => OutputFormat::Json,
            },
            emit_plot: self.emit_plot,
        }
    }
}

/// RFC 3339 timestamp, pinned by `SOURCE_DATE_EPOCH` when it is set.
fn timestamp() -> Result<String, String> {
    let now = match std::env::var("SOURCE_DATE_EPOCH") {
        Ok(raw) => {
            let secs: i64 = raw
                .trim()
                .parse()
                .map_err(|_| format!("SOURCE_DATE_EPOCH must be an integer, got `{raw}`"))?;
            DateTime::<Utc>::from_timestamp(secs, 0).ok_or_else(|| format!("SOURCE_DATE_EPOCH out of range: {secs}"))?
        }
        Err(_) => Utc::now(),
    };
    Ok(now.to_rfc3339_opts(SecondsFormat::Secs, true))
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Accuracy { .. } => EXIT_ACCURACY,
        Error::Config { .. } | Error::Domain(_) => EXIT_USAGE,
        _ => EXIT_VERIFY,
    }
}

fn write_output(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run_scan(args: &ScanArgs, scan: fn(&ScanConfig) -> covosc::Result<ScanTable>) -> ExitCode {
    let cfg = args.config();
    if cfg.emit_plot && cfg.output_format == OutputFormat::Json {
        eprintln!("error: --emit-plot needs CSV output");
        return ExitCode::from(EXIT_USAGE);
    }
    let stamp = match timestamp() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let table = match scan(&cfg) {
        Ok(t) => t.with_timestamp(stamp),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    let text = match cfg.output_format {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => table.to_json() + "\n",
    };
    if let Err(e) = write_output(args.out.as_deref(), &text) {
        eprintln!("error: writing output: {e}");
        return ExitCode::FAILURE;
    }
    if let (true, Some(out)) = (cfg.emit_plot, &args.out) {
        let data = out
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let script = out.with_extension("gp");
        if let Err(e) = fs::write(&script, table.plot_script(&data)) {
            eprintln!("error: writing {}: {e}", script.display());
            return ExitCode::FAILURE;
        }
    }
    ExitCode::SUCCESS
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
        eprintln!("error: --tolerance must be positive, got {}", args.tolerance);
        return ExitCode::from(EXIT_USAGE);
    }
    let options = VerifyOptions {
        tolerance: args.tolerance,
        fault: args.inject_fault.map(|f| match f {
            FaultArg::SwappedMomentumExponents => Fault::SwappedMomentumExponents,
        }),
    };
    let verbosity = if args.verbose {
        Verbosity::Verbose
    } else if args.quiet {
        Verbosity::Quiet
    } else {
        Verbosity::Normal
    };
    let report = verify::run(&options);
    print!("{}", report.render(verbosity));
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::ScanTemperature(args) => run_scan(args, scan_temperature),
        Command::ScanPhaseTransition(args) => run_scan(args, scan_phase_transition),
        Command::ScanObservables(args) => run_scan(args, scan_observables),
        Command::Verify(args) => run_verify(args),
    }
}
