use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use redrep_cli::{decompose, orbit, parse_lambda, render, verify, Algebra, ChiKind, CliError, DecomposeRequest, Format, Suite};

#[derive(Parser)]
#[command(name = "redrep", version, about = "Composition factors of baby Verma modules for gl_n and sl_n in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Gl,
    Sl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiArg {
    Regular,
    Subregular,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Regular3,
    Subregular3,
    Glcorpus,
    Uembed,
}

#[derive(Subcommand)]
enum Command {
    /// Build Z_chi(lambda), decompose it and emit a certificate.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        chi: ChiArg,
        /// Comma list: Cartan coordinates for sl, epsilon coordinates for gl.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        dump_matrices: bool,
        #[arg(long)]
        max_dim: Option<u128>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
    /// Alcove data and predicted factors of a weight, without building modules.
    Orbit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "sl")]
        algebra: AlgebraArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
}

fn algebra(a: AlgebraArg) -> Algebra {
    match a {
        AlgebraArg::Gl => Algebra::Gl,
        AlgebraArg::Sl => Algebra::Sl,
    }
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decompose { n, p, algebra: a, chi, lambda, out, format: f, dump_matrices, max_dim } => {
            let req = DecomposeRequest {
                n,
                p,
                algebra: algebra(a),
                chi: match chi {
                    ChiArg::Regular => ChiKind::Regular,
                    ChiArg::Subregular => ChiKind::Subregular,
                },
                lambda: parse_lambda(&lambda, p)?,
                dump_matrices,
                max_dim,
            };
            let cert = decompose(&req)?;
            let text = render(&cert, format(f));
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            if cert.all_checks_pass() {
                Ok(())
            } else {
                let failed: Vec<&str> =
                    cert.results.cross_checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                Err(CliError::Assertion(failed.join(", ")))
            }
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Regular3 => Suite::Regular3,
                SuiteArg::Subregular3 => Suite::Subregular3,
                SuiteArg::Glcorpus => Suite::Glcorpus,
                SuiteArg::Uembed => Suite::Uembed,
            };
            let report = verify(suite);
            print!("{}", report.to_text());
            if report.all_pass() {
                Ok(())
            } else {
                Err(CliError::Assertion(format!("suite {} has failing claims", suite.name())))
            }
        }
        Command::Orbit { n, p, algebra: a, lambda, format: f } => {
            let report = orbit(n, p, algebra(a), &parse_lambda(&lambda, p)?)?;
            match format(f) {
                Format::Json => print!("{}", report.to_json()),
                Format::Table => print!("{}", report.to_table()),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
