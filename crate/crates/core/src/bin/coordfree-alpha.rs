use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coordfree_alpha::commands::{self, CliError, Outcome, RunConfig};
use coordfree_alpha::geometry::DEFAULT_EPSILON;

#[derive(Parser)]
#[command(name = "coordfree-alpha", version, about = "Coordinate-free alpha shapes and their homotopy checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded point set and its distance graph
    Generate(Common),
    /// Compute the alpha shape from local distances
    Shape(Common),
    /// Check the complex chain, membership rules, collapse and locality over a batch
    Verify(Common),
    /// Collapse the Delaunay-Cech complex onto the alpha complex
    Collapse(Common),
    /// Draw the alpha shape and complex overlays as SVG
    Render(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 60)]
    n: usize,
    #[arg(long, default_value_t = 0.25)]
    r: f64,
    /// Alpha parameter, at most r [default: r]
    #[arg(long)]
    q: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    /// Edge-list input (coordinate-free mode)
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Point-file input
    #[arg(long, value_name = "FILE")]
    points: Option<PathBuf>,
    /// Number of consecutive seeds to verify
    #[arg(long, default_value_t = 1)]
    batch: usize,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Plant four cocircular points before the general-position repair
    #[arg(long)]
    inject_degeneracy: bool,
    /// Perturb the oracle so verification must fail
    #[arg(long)]
    inject_fault: bool,
}

impl From<Common> for RunConfig {
    fn from(c: Common) -> Self {
        RunConfig {
            seed: c.seed,
            n: c.n,
            r: c.r,
            q: c.q,
            epsilon: c.epsilon,
            out: c.out,
            batch: c.batch,
            points: c.points,
            edges: c.edges,
            inject_degeneracy: c.inject_degeneracy,
            inject_fault: c.inject_fault,
            ..Default::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    let result: Result<Outcome, CliError> = match cli.command {
        Command::Generate(c) => commands::cmd_generate(&c.into()),
        Command::Shape(c) => commands::cmd_shape(&c.into()),
        Command::Verify(c) => commands::cmd_verify(&c.into()),
        Command::Collapse(c) => commands::cmd_collapse(&c.into()),
        Command::Render(c) => commands::cmd_render(&c.into()),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", outcome.summary);
            if outcome.files.len() <= 8 {
                for file in &outcome.files {
                    let _ = writeln!(stdout, "wrote {}", file.display());
                }
            } else {
                let _ = writeln!(stdout, "wrote {} files", outcome.files.len());
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
