use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use subbundle::bundle::{self, BasePoint, BundleError, Provenance};
use subbundle::famfile::{parse_family_file, FamilyFile, FileError};
use subbundle::ideal::IdealError;
use subbundle::report;

/// Sub-bundle analysis of polynomially-defined families of linear subspaces.
#[derive(Parser)]
#[command(name = "subbundle", version, about)]
struct Cli {
    /// Emit a machine-readable JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline: per-point fiber analysis, global certificate, verdict
    Analyze { file: PathBuf },
    /// Analyze a single fiber at an explicit base point
    Fiber {
        file: PathBuf,
        /// Base-point coordinates, comma-separated, e.g. "0,0" or "1/2,3"
        #[arg(long)]
        point: String,
    },
    /// Verify the file's kernel-presentation block by elimination
    #[command(name = "kernel-check")]
    KernelCheck { file: PathBuf },
    /// Saturate the family ideal by the file's closure polynomial and
    /// compare fiber radicals at the sampled points
    Closure { file: PathBuf },
}

enum AppError {
    Usage(String),
    ResourceLimit(String),
}

impl From<FileError> for AppError {
    fn from(e: FileError) -> AppError {
        match e {
            FileError::ResourceLimit(m) => AppError::ResourceLimit(m),
            other => AppError::Usage(other.to_string()),
        }
    }
}

impl From<BundleError> for AppError {
    fn from(e: BundleError) -> AppError {
        match e {
            BundleError::Ideal(IdealError::ResourceLimit(m)) => AppError::ResourceLimit(m),
            other => AppError::Usage(other.to_string()),
        }
    }
}

fn load(path: &PathBuf) -> Result<FamilyFile, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_family_file(&text)?)
}

fn emit(json: bool, value: serde_json::Value, text: String, elapsed_ms: u128) {
    if json {
        let mut v = value;
        v["elapsed_ms"] = serde_json::json!(elapsed_ms);
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        print!("{text}");
        println!("elapsed: {elapsed_ms} ms");
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let start = Instant::now();
    match cli.cmd {
        Cmd::Analyze { file } => {
            let fam = load(&file)?;
            let v = bundle::verdict(&fam.spec)?;
            emit(
                cli.json,
                report::verdict_json(&v),
                report::verdict_text(&v, &fam.spec.notices),
                start.elapsed().as_millis(),
            );
        }
        Cmd::Fiber { file, point } => {
            let fam = load(&file)?;
            let coords = point
                .split(',')
                .map(|s| {
                    fam.spec
                        .field
                        .parse_element(s.trim())
                        .map_err(|e| AppError::Usage(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != fam.spec.base_rank() {
                return Err(AppError::Usage(format!(
                    "expected {} coordinates, got {}",
                    fam.spec.base_rank(),
                    coords.len()
                )));
            }
            let pt = BasePoint {
                coords,
                provenance: Provenance::Declared,
            };
            let f = bundle::analyze_fiber(&fam.spec, &pt)?;
            emit(
                cli.json,
                report::single_fiber_json(&f),
                report::single_fiber_text(&f),
                start.elapsed().as_millis(),
            );
        }
        Cmd::KernelCheck { file } => {
            let fam = load(&file)?;
            let kc = fam.kernel_check.as_ref().ok_or_else(|| {
                AppError::Usage("the file has no kernel_check block".to_string())
            })?;
            let ok = bundle::verify_kernel_presentation(&kc.images, &kc.claimed)?;
            emit(
                cli.json,
                report::kernel_check_json(ok),
                report::kernel_check_text(ok),
                start.elapsed().as_millis(),
            );
        }
        Cmd::Closure { file } => {
            let fam = load(&file)?;
            let g = fam
                .closure_by
                .as_ref()
                .ok_or_else(|| AppError::Usage("the file has no closure block".to_string()))?;
            let r = bundle::closure_check(&fam.spec, g)?;
            emit(
                cli.json,
                report::closure_json(&r),
                report::closure_text(&r),
                start.elapsed().as_millis(),
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(0),
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::ResourceLimit(msg)) => {
            eprintln!("resource limit exceeded: {msg}");
            ExitCode::from(2)
        }
    }
}
