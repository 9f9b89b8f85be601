//! `simple-games`: analyze simple voting games stored as JSON documents.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 input that
//! parses but is not a valid game, 4 an exhausted budget or a violated
//! precondition.

mod document;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use document::{Form, GameDocument};
use simple_games::reductions::{
    crossed_weights_example, graph_to_minimal_form, partition_to_mwvg, Graph, PartitionInstance,
};
use simple_games::representations::k_out_of_n;
use simple_games::{Limits, SimpleGame};

#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Validation(String),
    Budget(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Budget(_) | Failure::Precondition(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Parse(m) => format!("parse error: {m}"),
            Failure::Validation(m) => format!("invalid game: {m}"),
            Failure::Budget(m) => format!("budget exceeded: {m}"),
            Failure::Precondition(m) => format!("precondition failed: {m}"),
        }
    }
}

impl From<simple_games::Error> for Failure {
    fn from(e: simple_games::Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Precondition(e.to_string())
        }
    }
}

#[derive(Parser)]
#[command(name = "simple-games", version, about = "Exact analysis of simple voting games")]
struct Cli {
    /// Largest player count for which 2^n coalitions may be enumerated.
    #[arg(long, global = true, default_value_t = 24)]
    max_enum_players: usize,

    /// Largest number of minimal winning coalitions for inclusion-exclusion counting.
    #[arg(long, global = true, default_value_t = 20)]
    max_ie_terms: usize,

    /// Seed for randomly generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print the plain-text summary instead of the JSON report.
    #[arg(long, global = true)]
    text: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexKind {
    Banzhaf,
    Shapley,
    Holler,
    DeeganPackel,
    Chow,
    Collectivity,
}

#[derive(Subcommand)]
enum Command {
    /// Player types, linearity, ordering, every index, Chow parameters.
    Analyze { file: PathBuf },
    /// One power index family.
    Indices {
        file: PathBuf,
        #[arg(long, value_enum)]
        index: IndexKind,
    },
    /// Desirability ordering, or NO with an incomparable pair.
    Ordering { file: PathBuf },
    /// Dummies, passers, vetoers and the dictator.
    Types { file: PathBuf },
    /// Rewrite the game in another representation (prints a game document).
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Form,
    },
    /// The dual game as minimal winning coalitions (prints a game document).
    Dual { file: PathBuf },
    /// Decide whether the game is a single weighted voting game.
    Realizable { file: PathBuf },
    /// Print a generated game document.
    #[command(subcommand)]
    Generate(Generate),
}

#[derive(Subcommand)]
enum Generate {
    /// Two weighted games that are non-linear iff the weights split evenly.
    Partition {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
    },
    /// Minimal winning coalitions = edges of a graph.
    VertexCover(VertexCover),
    /// [10;10,9,1,0] ∧ [10;9,10,0,1], where players 1 and 2 are incomparable.
    CrossedWeights,
    /// [k; 1, ..., 1].
    KOfN {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// A random weighted game (uses --seed).
    RandomWeighted {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 9)]
        max_weight: u64,
    },
}

#[derive(Args)]
struct VertexCover {
    #[arg(long)]
    n: usize,
    /// Edges such as 1-2,2-3.
    #[arg(long, value_delimiter = ',', required = true)]
    edges: Vec<String>,
}

fn read_game(path: &PathBuf) -> Result<SimpleGame, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?
    };
    GameDocument::parse(&text)?.to_game()
}

fn parse_edge(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Precondition(format!("edge {s:?} is not of the form i-j"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn generate(g: &Generate, seed: u64) -> Result<SimpleGame, Failure> {
    Ok(match g {
        Generate::Partition { weights } => {
            partition_to_mwvg(&PartitionInstance::new(weights.clone())?)?.into()
        }
        Generate::VertexCover(v) => {
            let edges = v.edges.iter().map(|e| parse_edge(e)).collect::<Result<Vec<_>, _>>()?;
            graph_to_minimal_form(&Graph::new(v.n, edges)?)?.into()
        }
        Generate::CrossedWeights => crossed_weights_example().into(),
        Generate::KOfN { k, n } => {
            if *n > simple_games::MAX_PLAYERS {
                return Err(Failure::Precondition(format!("at most 64 players, got {n}")));
            }
            k_out_of_n(*k, *n)?.into()
        }
        Generate::RandomWeighted { n, max_weight } => {
            if *n == 0 || *n > simple_games::MAX_PLAYERS || *max_weight == 0 {
                return Err(Failure::Precondition(
                    "random-weighted needs 1 <= n <= 64 and max-weight >= 1".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            simple_games::random::random_weighted(&mut rng, *n, *max_weight).into()
        }
    })
}

enum Output {
    Report(Value),
    Document(GameDocument),
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let limits = Limits {
        max_enum_players: cli.max_enum_players,
        max_ie_terms: cli.max_ie_terms,
        ..Limits::default()
    };
    let l = &limits;
    Ok(match &cli.command {
        Command::Analyze { file } => Output::Report(report::analyze(&read_game(file)?, l)),
        Command::Indices { file, index } => Output::Report(report::indices(&read_game(file)?, *index, l)?),
        Command::Ordering { file } => Output::Report(report::ordering(&read_game(file)?, l)?),
        Command::Types { file } => Output::Report(report::types(&read_game(file)?, l)?),
        Command::Realizable { file } => Output::Report(report::realizable(&read_game(file)?, l)?),
        Command::Convert { file, to } => Output::Document(report::convert(&read_game(file)?, *to, l)?),
        Command::Dual { file } => Output::Document(report::dual(&read_game(file)?, l)?),
        Command::Generate(g) => {
            let game = generate(g, cli.seed)?;
            debug_assert!(simple_games::validate(&game).is_valid());
            Output::Document(GameDocument::from_game(&game))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Report(value)) => {
            if cli.text {
                println!("{}", value["summary"].as_str().unwrap_or_default());
            } else {
                println!("{}", serde_json::to_string_pretty(&value).expect("reports serialize"));
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Document(doc)) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("documents serialize"));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("simple-games: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
