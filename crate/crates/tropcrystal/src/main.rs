use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tropcrystal::commands::{self, Emit, GraphKind, Outcome, PotentialSource};
use tropcrystal::config::{self, CliError, CliResult, EXIT_USAGE};
use tropcrystal::suites::{Suite, SuiteConfig};
use tropcrystal_core::connectivity::ConnectParams;
use tropcrystal_core::rootdata::Family;
use tropcrystal_core::sample::DEFAULT_SEED;

/// Cellular crystals, their potentials and the checks that tie them to B(∞).
#[derive(Parser)]
#[command(name = "tropcrystal", version)]
struct Cli {
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan family letter, A to G.
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn family(&self) -> CliResult<Family> {
        config::family(&self.family)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a crystal graph and write it as DOT or JSON.
    Graph {
        #[command(flatten)]
        ty: TypeArgs,
        /// potential, polyhedral, tensor, free or highest-weight
        #[arg(long, default_value = "potential")]
        realization: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Reduced word of w0; defaults to the canonical one.
        #[arg(long)]
        word: Option<String>,
        /// Highest weight as coefficients of the fundamental weights, e.g. 1,0.
        #[arg(long)]
        weight: Option<String>,
        /// Write DOT here instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a verification suite, or all of them.
    Verify {
        /// catalog-vs-oracle, realizations, ks, braid, geometric, trails, connectivity, monomial or all
        suite: String,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, requires = "family")]
        rank: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long = "box")]
        box_radius: Option<i64>,
        #[arg(long)]
        samples: Option<usize>,
        /// Rank-2 transition fixture to use instead of the built-in one.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the potential as Laurent polynomials and/or tropical forms.
    Potential {
        #[command(flatten)]
        ty: TypeArgs,
        /// laurent, tropical (as JSON) or both
        #[arg(long, default_value = "both")]
        emit: String,
        #[arg(long)]
        word: Option<String>,
        /// catalog, oracle or lowest-terms
        #[arg(long)]
        source: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Move a point between cellular crystals of two reduced words.
    Braid {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        word: String,
        #[arg(long)]
        to: String,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Certify that B(∞) plus all shifts is connected on sampled points.
    Connect {
        #[command(flatten)]
        ty: TypeArgs,
        /// Box radius for the constructive samples.
        #[arg(long = "box", default_value_t = 3)]
        box_radius: i64,
        /// Box radius for the direct pairs; defaults to --box.
        #[arg(long)]
        pair_box: Option<i64>,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 3)]
        pad: i64,
        /// Node budget per direct search.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let seed = cli.seed;
    match cli.command {
        Command::Graph { ty, realization, depth, word, weight, dot, json } => commands::graph(&commands::GraphArgs {
            family: ty.family()?,
            rank: ty.rank,
            kind: GraphKind::parse(&realization)?,
            depth,
            word,
            weight: weight.as_deref().map(config::point).transpose()?,
            dot,
            json,
        }),
        Command::Verify { suite, family, rank, depth, box_radius, samples, fixture, json } => {
            let suite = match suite.as_str() {
                "all" => None,
                s => Some(Suite::from_name(s).ok_or_else(|| CliError::usage(format!("unknown suite {s:?}")))?),
            };
            let only = match (family, rank) {
                (Some(f), Some(n)) => {
                    let f = config::family(&f)?;
                    config::cartan(f, n)?;
                    Some((f, n))
                }
                (Some(_), None) => return Err(CliError::usage("--family needs --rank")),
                _ => None,
            };
            let transitions = fixture.as_deref().map(config::transitions).transpose()?;
            let cfg = SuiteConfig { only, depth, box_radius, samples, seed, transitions };
            commands::verify(&commands::VerifyArgs { suite, config: cfg, json })
        }
        Command::Potential { ty, emit, word, source, json } => {
            let emit = match emit.as_str() {
                "laurent" => Emit::Laurent,
                "tropical" => Emit::Tropical,
                "both" => Emit::Both,
                e => return Err(CliError::usage(format!("unknown --emit {e:?}"))),
            };
            let source = match source.as_deref() {
                None => None,
                Some("catalog") => Some(PotentialSource::Catalog),
                Some("oracle") => Some(PotentialSource::Oracle),
                Some("lowest-terms") => Some(PotentialSource::LowestTerms),
                Some(s) => return Err(CliError::usage(format!("unknown --source {s:?}"))),
            };
            commands::potential(&commands::PotentialArgs { family: ty.family()?, rank: ty.rank, word, source, emit, json })
        }
        Command::Braid { ty, word, to, point, fixture } => commands::braid(&commands::BraidArgs {
            family: ty.family()?,
            rank: ty.rank,
            from: word,
            to,
            point: config::point(&point)?,
            fixture,
        }),
        Command::Connect { ty, box_radius, pair_box, pairs, pad, budget, json } => {
            let params = ConnectParams {
                radius: box_radius,
                pair_radius: pair_box.unwrap_or(box_radius),
                pairs,
                pad,
                budget,
                seed,
            };
            commands::connect(&commands::ConnectArgs { family: ty.family()?, rank: ty.rank, params, json })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
