use clap::{Parser, Subcommand};
use defect_nls::config::{parse_config, RunConfig};
use defect_nls::grid::{evaluate_grid, export_csv};
use defect_nls::report::Report;
use defect_nls::verify::verify_all;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "defect-nls",
    version,
    about = "N-soliton solutions of the NLS equation with an integrable defect: grid export and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the configured field on its grid, export CSV, and optionally
    /// run the verification suite.
    Run {
        /// Run configuration (JSON; see `defect-nls schema`).
        #[arg(long)]
        config: PathBuf,
        /// Output directory for default-named files.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the verification checks.
        #[arg(long)]
        verify: bool,
        /// Where to write the verification report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run only the verification checks and emit the report.
    Verify {
        /// Run configuration (JSON; see `defect-nls schema`).
        #[arg(long)]
        config: PathBuf,
        /// Where to write the verification report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the JSON schema of run configurations.
    Schema,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> defect_nls::Result<ExitCode> {
    match cli.command {
        Command::Run {
            config,
            out,
            verify,
            report,
        } => {
            let cfg = parse_config(&config)?;
            let out_dir = out.unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&out_dir)?;

            let table = evaluate_grid(&cfg)?;
            let csv_path = resolve(&out_dir, cfg.output.csv.as_deref(), &config, "_field.csv");
            export_csv(&table, &csv_path)?;
            println!("wrote {} rows to {}", table.rows.len(), csv_path.display());

            if verify {
                let outcome = run_verification(&cfg, &out_dir, report.as_deref(), &config)?;
                return Ok(outcome);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { config, report } => {
            let cfg = parse_config(&config)?;
            let out_dir = PathBuf::from(".");
            run_verification(&cfg, &out_dir, report.as_deref(), &config)
        }
        Command::Schema => {
            println!("{}", defect_nls::config::schema_json());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verification(
    cfg: &RunConfig,
    out_dir: &Path,
    report_flag: Option<&Path>,
    config_path: &Path,
) -> defect_nls::Result<ExitCode> {
    let report: Report = verify_all(cfg)?;
    for record in &report.records {
        println!("{}", record.summary_line());
    }
    let report_path = report_flag.map(Path::to_path_buf).unwrap_or_else(|| {
        resolve(out_dir, cfg.output.report.as_deref(), config_path, "_report.json")
    });
    report.write(&report_path)?;
    println!("report written to {}", report_path.display());
    Ok(if report.any_failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

/// Output path resolution: an explicit config path wins (joined under the
/// output dir when relative); otherwise `<config stem><suffix>` in the
/// output dir.
fn resolve(out_dir: &Path, configured: Option<&Path>, config_path: &Path, suffix: &str) -> PathBuf {
    match configured {
        Some(p) if p.is_absolute() => p.to_path_buf(),
        Some(p) => out_dir.join(p),
        None => {
            let stem = config_path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "run".to_string());
            out_dir.join(format!("{stem}{suffix}"))
        }
    }
}
