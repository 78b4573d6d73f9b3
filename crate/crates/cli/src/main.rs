mod error;
mod file;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use symcenter::algebra::Algebra;
use symcenter::paperlab::run_paper_suite;
use symcenter::substructures::jacobson_radical;

use error::CliError;
use report::Format;

#[derive(Parser)]
#[command(
    name = "symcenter",
    version,
    about = "Centers, radicals and socles of finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report dimensions, Loewy layers and ideal verdicts for an algebra file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the built-in example corpus, identity checks and family sweep.
    PaperSuite {
        /// A corpus entry, lemma id, or "family".
        #[arg(long = "case")]
        case: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a constructed algebra out as explicit structure constants.
    Construct {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| match cli.command {
        Command::Analyze { file, format } => analyze(&file, format),
        Command::PaperSuite { case, format } => paper_suite(case.as_deref(), format),
        Command::Construct { file, out } => construct(&file, &out),
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", report::explain(&e));
            ExitCode::from(e.exit_code())
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("SYMCENTER_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("SYMCENTER_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure worker threads: {e}")))
}

fn load(path: &Path) -> Result<(file::AlgebraFile, Algebra), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed = file::parse(&text)?;
    let alg = parsed.build(&text)?;
    Ok((parsed, alg))
}

fn analyze(path: &Path, format: Format) -> Result<u8, CliError> {
    let (parsed, alg) = load(path)?;
    let analysis = report::analyze(&parsed.name, alg)?;
    match format {
        Format::Text => print!("{}", analysis.text()),
        Format::Machine => print!("{}", report::to_json(&analysis.machine())),
    }
    Ok(0)
}

fn paper_suite(case: Option<&str>, format: Format) -> Result<u8, CliError> {
    let results = run_paper_suite(case)?;
    match format {
        Format::Text => print!("{}", report::suite_text(&results)),
        Format::Machine => print!("{}", report::to_json(&report::suite_report(&results))),
    }
    Ok(if results.iter().all(|r| r.passed()) { 0 } else { 1 })
}

fn construct(path: &Path, out: &Path) -> Result<u8, CliError> {
    let (parsed, alg) = load(path)?;
    let radical = jacobson_radical(&alg)?;
    let text = file::emit(&file::materialize(&parsed.name, &alg, &radical))?;
    std::fs::write(out, text).map_err(|source| CliError::Write {
        path: out.to_path_buf(),
        source,
    })?;
    Ok(0)
}
