use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use toricfan::commands::{self, ComplexQuery, Outcome, SubdivisionTarget};

#[derive(Parser)]
#[command(name = "toricfan", version, about = "Exact verification and subdivision of simplicial fans")]
struct Cli {
    /// Output format for the report.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Completeness and per-cone determinants of a fan.
    Verify {
        /// Fan file, `@barnette` or `@barnette-smooth`.
        fan: String,
        /// Generic witness point, e.g. `1,1,1,1`.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Classify the lattice points of [-B, B]^n.
    Scan {
        fan: String,
        #[arg(long, default_value_t = 40)]
        bound: i64,
        #[arg(long, env = "TORICFAN_WORKERS", default_value_t = default_workers())]
        workers: usize,
        #[arg(long)]
        collect_one_face: bool,
    },
    /// Replay the ten subdivisions producing the smooth Barnette fan.
    Desingularize {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stellar subdivision at a cone's ray sum or at an explicit point.
    #[command(group(ArgGroup::new("target").required(true).args(["cone", "point"])))]
    Subdivide {
        fan: String,
        /// Comma-separated ray labels of a maximal cone.
        #[arg(long)]
        cone: Option<String>,
        /// Comma-separated integer coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Label of the new ray.
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The fan over the suspension (dimension + 1).
    Suspend {
        fan: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Successive subdivisions of a smooth complete fan.
    Family {
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value = commands::BUILTIN_SMOOTH)]
        base: String,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Star, link, f-vector, pseudomanifold or obstruction checks.
    #[command(group(ArgGroup::new("query").required(true).args(["star", "link", "f_vector", "obstruction", "pseudomanifold"])))]
    Complex {
        /// Complex file, fan file, or built-in fan.
        source: String,
        #[arg(long)]
        star: Option<String>,
        #[arg(long)]
        link: Option<String>,
        #[arg(long)]
        f_vector: bool,
        #[arg(long)]
        obstruction: bool,
        #[arg(long)]
        pseudomanifold: bool,
    },
    /// Check a claimed convex realization (`@rays` uses a fan's ray vectors).
    Certify { complex: String, realization: String },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Outcome = match &cli.command {
        Command::Verify { fan, witness } => commands::cmd_verify(fan, witness.as_deref()),
        Command::Scan { fan, bound, workers, collect_one_face } => {
            commands::cmd_scan(fan, *bound, *workers, *collect_one_face)
        }
        Command::Desingularize { out } => commands::cmd_desingularize(out.as_deref()),
        Command::Subdivide { fan, cone, point, label, out } => {
            let target = match (cone, point) {
                (Some(c), _) => SubdivisionTarget::Cone(c),
                (None, Some(p)) => SubdivisionTarget::Point(p),
                (None, None) => unreachable!("clap enforces the target group"),
            };
            commands::cmd_subdivide(fan, target, label.as_deref(), out.as_deref())
        }
        Command::Suspend { fan, out } => commands::cmd_suspend(fan, out.as_deref()),
        Command::Family { count, base, out_dir } => commands::cmd_family(base, *count, out_dir.as_deref()),
        Command::Complex { source, star, link, f_vector, obstruction, pseudomanifold } => {
            let query = if let Some(s) = star {
                ComplexQuery::Star(s)
            } else if let Some(l) = link {
                ComplexQuery::Link(l)
            } else if *f_vector {
                ComplexQuery::FVector
            } else if *obstruction {
                ComplexQuery::Obstruction
            } else {
                debug_assert!(*pseudomanifold);
                ComplexQuery::Pseudomanifold
            };
            commands::cmd_complex(source, query)
        }
        Command::Certify { complex, realization } => commands::cmd_certify(complex, realization),
    };
    match cli.format {
        Format::Text => print!("{}", outcome.text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.report).expect("report serializes")),
    }
    ExitCode::from(outcome.exit_code as u8)
}
