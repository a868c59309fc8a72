//! `unifock`: command-line access to the unifock computations.
//!
//! Exit status 0 on success, 1 when a precondition fails, 2 on usage or
//! input parse errors. Degree-like arguments are capped by
//! `UNIFOCK_MAX_DEGREE` (default 24).

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use unifock::cartan::Order;
use unifock::crystal::full_graph;
use unifock::fock::{heisenberg, hw_dims, FockConfig, HeisenbergOp};
use unifock::partition::{core_quotient, partitions, Partition};
use unifock::unitary::{
    block_of, branching_graph, char_weight, cuspidal_chars, good_representative, hecke_params,
    is_good, orbit_even, orbit_odd, series_of_char, weak_series_of, weakly_cuspidal,
    weyl_equivalent, Block,
};

use unifock_cli::graph::Graph;
use unifock_cli::json;

const DEFAULT_MAX_DEGREE: usize = 24;

#[derive(Parser)]
#[command(name = "unifock", version, about = "Fock spaces, crystals and unipotent blocks of GU_n(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum HeisOp {
    B,
    Bstar,
    A,
    Astar,
}

#[derive(Subcommand)]
enum Command {
    /// Core, quotient and charge of a charged partition.
    CoreQuotient {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        l: u32,
    },
    /// Unipotent blocks of rank `n` with their characters.
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// The block containing a character.
    Block {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// Weight of a character in the square-quiver lattice.
    Weight {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// Whether two blocks lie in one affine Weyl orbit.
    Orbit {
        #[arg(long)]
        block1: String,
        #[arg(long)]
        block2: String,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// Goodness of a block, optionally with a good block in its orbit.
    Good {
        #[arg(long)]
        block: String,
        #[arg(long, value_parser = order_arg)]
        e: u32,
        #[arg(long)]
        find: bool,
    },
    /// Cuspidal unipotent characters of rank `n`.
    Cuspidals {
        #[arg(long)]
        n: usize,
    },
    /// Weakly cuspidal unipotent modules of rank `n` (odd `e`).
    WeakCuspidals {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// Ordinary and weak Harish-Chandra series of a character.
    Series {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// Hecke algebra parameters for a weakly cuspidal module.
    Hecke {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = order_arg)]
        e: u32,
    },
    /// Level-2 crystal at staircase `t`, all vertices of size at most `max-n`.
    Crystal {
        #[arg(long, value_parser = order_arg)]
        e: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Weak Harish-Chandra branching graph up to rank `max-n` (odd `e`).
    Branching {
        #[arg(long, value_parser = order_arg)]
        e: u32,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Highest-weight kernel dimensions on a degree slice.
    HwDims {
        #[arg(long, value_parser = order_arg)]
        e: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        heisenberg: bool,
    },
    /// Apply a Heisenberg operator to a Fock vector read from a JSON file.
    Heis {
        #[arg(long, value_enum)]
        op: HeisOp,
        #[arg(long, conflicts_with = "nu", required_unless_present = "nu")]
        index: Option<usize>,
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long)]
        vector: PathBuf,
    },
}

fn order_arg(s: &str) -> Result<u32, String> {
    let e: u32 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if e < 3 {
        return Err("e must be at least 3".into());
    }
    Ok(e)
}

enum Failure {
    /// Input that could not be read or decoded.
    Parse(String),
    /// Well-formed input outside the domain of the computation.
    Precondition(String),
}

impl From<unifock::Error> for Failure {
    fn from(e: unifock::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<json::SchemaError> for Failure {
    fn from(e: json::SchemaError) -> Self {
        Failure::Parse(e.to_string())
    }
}

fn max_degree() -> Result<usize, Failure> {
    match std::env::var("UNIFOCK_MAX_DEGREE") {
        Ok(v) => v.parse().map_err(|_| Failure::Parse(format!("UNIFOCK_MAX_DEGREE={v} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn capped(n: usize) -> Result<usize, Failure> {
    let cap = max_degree()?;
    if n > cap {
        return Err(Failure::Precondition(format!("degree {n} exceeds the cap {cap} (set UNIFOCK_MAX_DEGREE)")));
    }
    Ok(n)
}

fn parse_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(format!("bad JSON: {e}")))
}

fn emit(format: Format, g: &Graph) -> String {
    match format {
        Format::Json => g.to_json().to_string(),
        Format::Dot => g.to_dot(),
    }
}

fn run(command: Command) -> Result<String, Failure> {
    let out = match command {
        Command::CoreQuotient { lambda, d, l } => {
            let cq = core_quotient(&lambda, d, l as usize);
            json!({
                "core": json::partition(&cq.core),
                "quotient": json::multipartition(&cq.quotient),
                "charge": cq.charge,
                "weight": cq.weight(),
            })
        }
        Command::Blocks { n, e } => {
            let mut blocks: BTreeMap<Block, Vec<Partition>> = BTreeMap::new();
            for lam in partitions(capped(n)?) {
                blocks.entry(block_of(&lam, e)?).or_default().push(lam);
            }
            Value::Array(
                blocks
                    .iter()
                    .map(|(b, chars)| {
                        let mut v = json::block(b);
                        v["characters"] = json::labels(chars);
                        v
                    })
                    .collect(),
            )
        }
        Command::Block { lambda, e } => json::block(&block_of(&lambda, e)?),
        Command::Weight { lambda, e } => json::weight(&char_weight(&lambda, e)?),
        Command::Orbit { block1, block2, e } => {
            let b1 = json::parse_block(&parse_json(&block1)?, e)?;
            let b2 = json::parse_block(&parse_json(&block2)?, e)?;
            let (name, fast) = if e % 2 == 0 {
                ("orbit_even", orbit_even(&b1, &b2)?)
            } else {
                ("orbit_odd", orbit_odd(&b1, &b2)?)
            };
            json!({"weyl_equivalent": weyl_equivalent(&b1, &b2)?, "criterion": name, "criterion_value": fast})
        }
        Command::Good { block, e, find } => {
            let b = json::parse_block(&parse_json(&block)?, e)?;
            let mut v = json!({"good": is_good(&b)});
            if find {
                let g = good_representative(&b);
                v["representative"] = json::block(&g);
                v["weyl_equivalent"] = json!(weyl_equivalent(&b, &g)?);
            }
            v
        }
        Command::Cuspidals { n } => json::labels(&cuspidal_chars(n)),
        Command::WeakCuspidals { n, e } => json::labels(&weakly_cuspidal(capped(n)?, e)?),
        Command::Series { lambda, e } => {
            let (t, mu) = series_of_char(&lambda);
            let weak = if e % 2 == 1 {
                let (root, path) = weak_series_of(&lambda, e)?;
                json!({"root": json::partition(&root), "path": path})
            } else {
                Value::Null
            };
            json!({
                "ordinary": {"t": t, "two_core": json::partition(&Partition::staircase(t)), "quotient": json::multipartition(&mu)},
                "weak": weak,
                "block": json::block(&block_of(&lambda, e)?),
            })
        }
        Command::Hecke { lambda, e } => json::hecke(&hecke_params(&lambda, e, 0)?),
        Command::Crystal { e, t, max_n, format } => {
            let cfg = FockConfig::gu(Order::Finite(e), t);
            let g = full_graph(&cfg, capped(max_n)?)?;
            let meta = json!({"config": json::config(&cfg), "max_n": max_n});
            let graph = Graph::new("crystal", meta, g.vertices, g.edges, |mu| {
                (mu.to_string(), json::multipartition(mu), mu.size())
            });
            return Ok(emit(format, &graph));
        }
        Command::Branching { e, max_n, format } => {
            let g = branching_graph(capped(max_n)?, e)?;
            let meta = json!({"e": e, "max_n": max_n});
            let graph = Graph::new("branching", meta, g.vertices, g.edges, |lam| {
                (lam.to_string(), json::partition(lam), lam.size())
            });
            return Ok(emit(format, &graph));
        }
        Command::HwDims { e, t, n, heisenberg } => {
            let cfg = FockConfig::gu(Order::Finite(e), t);
            let dims = hw_dims(&cfg, capped(n)?, heisenberg)?;
            let per: Vec<Value> = dims
                .per_weight
                .iter()
                .map(|(w, d)| json!({"weight": json::weight(w), "dim": d}))
                .collect();
            json!({"config": json::config(&cfg), "n": n, "heisenberg": heisenberg, "total": dims.total, "per_weight": per})
        }
        Command::Heis { op, index, nu, vector } => {
            let text = fs::read_to_string(&vector)
                .map_err(|e| Failure::Parse(format!("{}: {e}", vector.display())))?;
            let x = json::parse_fock_vector(&parse_json(&text)?)?;
            let op = match (op, index, nu) {
                (HeisOp::B, Some(k), _) => HeisenbergOp::B(k),
                (HeisOp::Bstar, Some(k), _) => HeisenbergOp::BStar(k),
                (HeisOp::A, _, Some(nu)) => HeisenbergOp::A(nu),
                (HeisOp::Astar, _, Some(nu)) => HeisenbergOp::AStar(nu),
                (HeisOp::B | HeisOp::Bstar, None, _) => return Err(Failure::Parse("--op b/bstar needs --index".into())),
                (HeisOp::A | HeisOp::Astar, _, None) => return Err(Failure::Parse("--op a/astar needs --nu".into())),
            };
            if let HeisenbergOp::B(0) | HeisenbergOp::BStar(0) = op {
                return Err(Failure::Parse("--index must be positive".into()));
            }
            json::fock_vector(&heisenberg(&op, &x)?)
        }
    };
    Ok(out.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
