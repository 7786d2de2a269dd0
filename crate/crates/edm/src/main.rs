//! Command line front end.
//!
//! Exit codes: 0 success, 2 validation failure (including frame mismatches
//! between inputs), 3 parse failure, 4 usage error (including unwritable
//! output paths).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{error::ErrorKind, Parser, Subcommand};

use edm::{
    brute_force_distance, distance_matrix, edm_distance, format_significant, parse_cbba_file,
    run_sweep, Cbba, DistanceForm, LoadError, OracleError, SweepSpec, Theta,
};

const EXIT_VALIDATION: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "edm",
    version,
    about = "Distances between complex basic belief assignments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a CBBA file; prints one CODE<TAB>subset<TAB>detail line per
    /// violation
    Validate { file: PathBuf },
    /// Distance between two CBBA files, printed with 12 significant digits
    Distance {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_parser = DistanceForm::from_str, default_value = "sesquilinear")]
        form: DistanceForm,
    },
    /// Pairwise distance matrix over several CBBA files, written as CSV
    Matrix {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_parser = DistanceForm::from_str, default_value = "sesquilinear")]
        form: DistanceForm,
        #[arg(long)]
        out: PathBuf,
    },
    /// Distance sweeps over built-in parametric families, written as CSV
    Sweep {
        #[command(subcommand)]
        family: SweepFamily,
    },
    /// Brute-force distance over the full power set, for cross-checking
    Oracle {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_parser = DistanceForm::from_str, default_value = "sesquilinear")]
        form: DistanceForm,
    },
}

#[derive(Subcommand)]
enum SweepFamily {
    /// The two-body family m1(A)=x+yi, m1(X)=1-x-yi against its mirror,
    /// with X={B} (theta 1) or X={A,B} (theta 2)
    Example1 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theta: u8,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        y: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_start: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_end: f64,
        #[arg(long)]
        step: f64,
        /// Distance columns to emit (comma separated)
        #[arg(
            long,
            value_parser = DistanceForm::from_str,
            value_delimiter = ',',
            default_value = "sesquilinear"
        )]
        forms: Vec<DistanceForm>,
        /// Add a Jousselme column (requires y = 0)
        #[arg(long)]
        jousselme: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Distance { file1, file2, form } => distance(&file1, &file2, form),
        Command::Matrix { files, form, out } => matrix(&files, form, &out),
        Command::Sweep { family } => sweep(family),
        Command::Oracle { file1, file2, form } => oracle(&file1, &file2, form),
    }
}

fn validate(file: &Path) -> ExitCode {
    match parse_cbba_file(file) {
        Ok(_) => ExitCode::SUCCESS,
        Err(LoadError::Invalid(report)) => {
            for line in report.lines() {
                println!("{line}");
            }
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            ExitCode::from(EXIT_PARSE)
        }
    }
}

/// Loads one CBBA or reports it on stderr with the right exit code.
fn load(file: &Path) -> Result<Cbba, ExitCode> {
    parse_cbba_file(file).map_err(|e| {
        eprintln!("error: {}: {e}", file.display());
        match e {
            LoadError::Invalid(_) => ExitCode::from(EXIT_VALIDATION),
            _ => ExitCode::from(EXIT_PARSE),
        }
    })
}

fn distance(file1: &Path, file2: &Path, form: DistanceForm) -> ExitCode {
    let (m1, m2) = match (load(file1), load(file2)) {
        (Ok(m1), Ok(m2)) => (m1, m2),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    match edm_distance(&m1, &m2, form) {
        Ok(d) => {
            println!("{}", format_significant(d, 12));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn matrix(files: &[PathBuf], form: DistanceForm, out: &Path) -> ExitCode {
    let mut bodies = Vec::with_capacity(files.len());
    for file in files {
        match load(file) {
            Ok(m) => bodies.push(m),
            Err(code) => return code,
        }
    }
    let matrix = match distance_matrix(&bodies, form) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let stems: Vec<String> = files.iter().map(|f| file_stem(f)).collect();
    let mut csv = stems.join(",");
    csv.push('\n');
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|&v| format_significant(v, 12)).collect();
        csv.push_str(&cells.join(","));
        csv.push('\n');
    }
    write_output(out, &csv)
}

fn sweep(family: SweepFamily) -> ExitCode {
    let SweepFamily::Example1 {
        theta,
        y,
        x_start,
        x_end,
        step,
        forms,
        jousselme,
        out,
    } = family;
    let theta = Theta::try_from(theta).expect("range-checked by clap");
    let spec = match SweepSpec::new(theta, y, x_start, x_end, step, &forms, jousselme) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run_sweep(&spec) {
        Ok(table) => write_output(&out, &table.to_csv()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn oracle(file1: &Path, file2: &Path, form: DistanceForm) -> ExitCode {
    let (m1, m2) = match (load(file1), load(file2)) {
        (Ok(m1), Ok(m2)) => (m1, m2),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    match brute_force_distance(&m1, &m2, form) {
        Ok(d) => {
            println!("{}", format_significant(d, 12));
            ExitCode::SUCCESS
        }
        Err(e @ OracleError::FrameTooLarge(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(OracleError::Distance(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn write_output(path: &Path, contents: &str) -> ExitCode {
    match std::fs::write(path, contents) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(EXIT_USAGE)
        }
    }
}
