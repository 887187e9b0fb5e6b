mod corpus;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use powerdom::construct::{construct_doubled_pair, construct_general, ConstructError, Construction};
use powerdom::exact::{
    domination_number, gamma_p_exact, spider_number, strong_support_count, zero_forcing_number, ExactError,
    SearchLimits,
};
use powerdom::graph::io::{parse_edge_list, parse_graph6, write_dot, write_edge_list, write_graph6};
use powerdom::graph::{cartesian_product, generate, Family, GraphError, Multigraph};
use powerdom::observe::{verify_certificate, Model, PdsCertificate};
use powerdom::products::{pd_bounds, ProductError};

#[derive(Parser)]
#[command(
    name = "powerdom",
    version,
    about = "Power domination: exact solvers, certified constructions, product bounds"
)]
struct Cli {
    /// Largest graph order for the exact solvers.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_order)]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; `.g6` writes graph6, `.dot` writes DOT, anything else an edge list.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute an exact invariant.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long, value_enum, default_value = "pd")]
        what: What,
    },
    /// Build a certified power dominating set of size at most n/6.
    Construct {
        file: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Write the human-readable construction log here.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Replay a certificate against a graph.
    Verify { cert: PathBuf, file: PathBuf },
    /// Bounds on the power domination number of a Cartesian product.
    Bounds {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        exact: bool,
    },
    /// Write the Cartesian product of two graphs.
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run every line of a manifest and write one CSV table.
    Corpus {
        manifest: PathBuf,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Pd,
    Dom,
    Zf,
    Vs,
    Sp,
}

/// A failed run: exit 1 for verification failures, 2 for everything the
/// caller can fix (usage, unreadable input, size guards).
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }

    fn verification(message: impl ToString) -> Self {
        Failure { code: 1, message: message.to_string() }
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        if e.is_size_guard() {
            Failure::usage(format!("size guard exceeded: {e} (raise --max-order or use a smaller graph)"))
        } else {
            Failure::usage(e)
        }
    }
}

impl From<ProductError> for Failure {
    fn from(e: ProductError) -> Self {
        match e {
            ProductError::Exact(e) => e.into(),
            e => Failure::usage(e),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::usage(e)
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Internal(_) | ConstructError::Verification(_) => Failure::verification(e),
            e => Failure::usage(e),
        }
    }
}

type Outcome = Result<(), Failure>;

fn limits(max_order: usize) -> SearchLimits {
    SearchLimits { max_order, ..SearchLimits::default() }
}

pub fn read_graph(path: &Path) -> Result<Multigraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let parsed = if path.extension().is_some_and(|x| x == "g6") { parse_graph6(&text) } else { parse_edge_list(&text) };
    parsed.map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn render_graph(g: &Multigraph, path: Option<&Path>) -> Result<String, Failure> {
    match path.and_then(|p| p.extension()).and_then(|x| x.to_str()) {
        Some("g6") => Ok(write_graph6(g)? + "\n"),
        Some("dot") => Ok(write_dot(g)),
        _ => Ok(write_edge_list(g)),
    }
}

/// The construction that applies: the general one for simple graphs, the
/// doubled-pair one otherwise.
pub fn construct(g: &Multigraph) -> Result<Construction, ConstructError> {
    if g.is_simple() {
        construct_general(g)
    } else {
        construct_doubled_pair(g)
    }
}

fn default_model(g: &Multigraph) -> Model {
    if g.is_simple() {
        Model::Vertex
    } else {
        Model::Edge
    }
}

fn run(cli: Cli) -> Outcome {
    let lim = limits(cli.max_order);
    match cli.command {
        Command::Gen { family, params, seed, output } => {
            let g = generate(&Family::parse(&family, &params, seed)?)?;
            let text = render_graph(&g, output.as_deref())?;
            match output {
                Some(p) => write_file(&p, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Solve { file, model, what } => {
            let g = read_graph(&file)?;
            let model = match model {
                Some(ModelArg::Vertex) => Model::Vertex,
                Some(ModelArg::Edge) => Model::Edge,
                None => default_model(&g),
            };
            match what {
                What::Pd => {
                    let s = gamma_p_exact(&g, model, &lim)?;
                    println!("{}", s.value);
                    println!("witness: {:?}", s.witness);
                }
                What::Dom => {
                    let s = domination_number(&g, &lim)?;
                    println!("{}", s.value);
                    println!("witness: {:?}", s.witness);
                }
                What::Zf => {
                    let s = zero_forcing_number(&g, &lim)?;
                    println!("{}", s.value);
                    println!("witness: {:?}", s.witness);
                }
                What::Vs => println!("{}", strong_support_count(&g)),
                What::Sp => {
                    let (k, parts) = spider_number(&g, &lim)?;
                    println!("{k}");
                    println!("partition: {parts:?}");
                }
            }
            Ok(())
        }
        Command::Construct { file, cert, log } => {
            let g = read_graph(&file)?;
            let c = construct(&g)?;
            println!("{}", c.set().len());
            println!("set: {:?}", c.set());
            println!("bound: {} ({} model)", c.certificate.bound, c.certificate.model);
            if let Some(p) = cert {
                write_file(&p, &c.certificate.to_json())?;
            }
            if let Some(p) = log {
                write_file(&p, &c.log.to_string())?;
            }
            Ok(())
        }
        Command::Verify { cert, file } => {
            let g = read_graph(&file)?;
            let text = fs::read_to_string(&cert)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", cert.display())))?;
            let c = PdsCertificate::from_json(&text).map_err(|e| Failure::verification(format!("invalid: {e}")))?;
            verify_certificate(&c, &g).map_err(|e| Failure::verification(format!("invalid: {e}")))?;
            println!("valid: {} vertices, bound {}, {} model", c.set.len(), c.bound, c.model);
            Ok(())
        }
        Command::Bounds { g, h, exact } => {
            let report = pd_bounds(&read_graph(&g)?, &read_graph(&h)?, exact, &lim)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if !report.consistent() {
                return Err(Failure::verification("bounds disagree with the exact values"));
            }
            Ok(())
        }
        Command::Product { g, h, output } => {
            let p = cartesian_product(&read_graph(&g)?, &read_graph(&h)?)?;
            write_file(&output, &render_graph(&p, Some(&output))?)
        }
        Command::Corpus { manifest, csv, seed } => corpus::run(&manifest, &csv, seed, &lim),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
