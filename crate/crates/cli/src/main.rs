use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stiefel_cli::commands;
use stiefel_cli::exit_codes;
use stiefel_cli::selftest::{self, SelftestOptions, Suite};
use stiefel_cli::{Outcome, SEED_ENV};

/// Framing certificates for rank-3 bundles over Heegaard-split 3-manifolds.
#[derive(Debug, Parser)]
#[command(name = "stiefel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mod-2 homology dimensions of a manifold document.
    Homology {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide triviality and emit a certificate or an obstruction witness.
    Certify {
        input: PathBuf,
        /// Descriptor bits, e.g. `01`; required when INPUT is a bare manifold document.
        #[arg(long = "a-star")]
        a_star: Option<String>,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Built-in example splittings.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// A connected simple curve in a homology class.
    Represent {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        class: String,
    },
    /// Line bundles over non-orientable surfaces.
    Bundle {
        #[command(subcommand)]
        action: BundleAction,
    },
    /// Seeded property suites.
    Selftest(SelftestArgs),
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Get { name: String },
}

#[derive(Debug, Subcommand)]
enum BundleAction {
    Classify {
        #[arg(long, conflicts_with = "json", required_unless_present = "json")]
        input: Option<PathBuf>,
        #[arg(long)]
        json: Option<String>,
    },
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// One of s3-frames, oracle-equivalence, curves, bundles.
    suite: Suite,
    /// Defaults to $STIEFEL_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Largest genus (cross-cap count for `bundles`).
    #[arg(long = "max-genus")]
    max_genus: Option<usize>,
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Outcome> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Outcome::input_error(format!("{SEED_ENV}: {v:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn with_output(out: Outcome, path: Option<&Path>) -> Outcome {
    let Some(path) = path else { return out };
    if out.stdout.is_empty() {
        return out;
    }
    match std::fs::write(path, &out.stdout) {
        Ok(()) => out,
        Err(e) => Outcome::input_error(format!("{}: {e}", path.display())),
    }
}

fn dispatch(command: Command) -> Result<Outcome, Outcome> {
    Ok(match command {
        Command::Homology { input, output } => {
            with_output(commands::homology(&read(&input)?), output.as_deref())
        }
        Command::Certify { input, a_star, oracle, output } => with_output(
            commands::certify(&read(&input)?, a_star.as_deref(), oracle),
            output.as_deref(),
        ),
        Command::Catalog { action: CatalogAction::List } => commands::catalog_list(),
        Command::Catalog { action: CatalogAction::Get { name } } => commands::catalog_get(&name),
        Command::Represent { genus, class } => commands::represent(genus, &class),
        Command::Bundle { action: BundleAction::Classify { input, json } } => {
            let text = match (input, json) {
                (Some(p), _) => read(&p)?,
                (None, Some(j)) => j,
                (None, None) => return Err(Outcome::input_error("pass --input or --json")),
            };
            commands::bundle_classify(&text)
        }
        Command::Selftest(args) => {
            let opts = SelftestOptions {
                seed: resolve_seed(args.seed)?,
                samples: args.samples,
                tol: args.tol,
                max_size: args.max_genus,
            };
            selftest::outcome(args.suite, &opts)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit_codes::INPUT_ERROR } else { exit_codes::SUCCESS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = dispatch(cli.command).unwrap_or_else(|e| e);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
