//! Command-line front end: graph ingestion, invariant computation, bound
//! reports, construction output, extremal recognition, and family scans.
//!
//! Exit codes: 0 success, 1 violated theorem bound (a regression signal),
//! 2 usage or input error, 3 node-budget exhaustion. JSON goes to stdout,
//! diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{bound_report_with_budget, product_check_with_budget, tree_lower_bound_with_budget, BoundsError};
use crate::construct::{diametral_rdf, path_rdf, spider_rdf, tree_rdf_three_quarters, ConstructError};
use crate::enumerate::{all_trees, random_connected, random_tree};
use crate::extremal::{recognize_extremal_graph, ExtremalError, ExtremalWitness};
use crate::graph::io::{from_graph6, parse_edge_list, to_graph6, write_edge_list, FormatError};
use crate::graph::{
    cartesian_product, corona, cycle_graph, double_star_graph, l_k_graph, path_graph,
    spider_graph, star_graph, Graph, GraphError,
};
use crate::solver::{
    brute_domination, brute_rainbow, brute_roman, domination_number_with_budget,
    rainbow2_via_product_with_budget, rainbow_domination_number_with_budget,
    roman_domination_number_with_budget, tree_rainbow2, SolveError, SolveResult,
    DEFAULT_NODE_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Overrides the solver node budget when set.
pub const BUDGET_ENV_VAR: &str = "RAINBOWDOM_NODE_BUDGET";

#[derive(Parser)]
#[command(name = "rainbowdom", about = "Exact 2-rainbow domination toolkit", version)]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an exact invariant with an optimality witness.
    Compute {
        #[arg(long, value_enum)]
        invariant: InvariantArg,
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Evaluate every applicable inequality on a connected graph.
    Bounds {
        #[arg(long)]
        graph: String,
    },
    /// Emit a certified 2-rainbow assignment.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long)]
        graph: String,
    },
    /// Decide whether a connected graph attains gamma_r2 = 3n/4.
    Recognize {
        #[arg(long)]
        graph: String,
    },
    /// Check the product inequalities for a pair of graphs.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Sweep a graph family against a predicate.
    Scan {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantArg {
    Gamma,
    GammaR2,
    GammaRoman,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    BranchBound,
    TreeDp,
    ViaProduct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    Spider,
    Tree,
    Diametral,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    AllTrees,
    RandomTrees,
    RandomConnected,
    Paths,
    Cycles,
    Spiders,
    #[serde(rename = "l_k")]
    #[value(name = "l-k")]
    LK,
    DoubleStars,
    ProductPairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    BoundViolation,
    #[serde(rename = "tight_3n4")]
    #[value(name = "tight-3n4")]
    Tight3n4,
    LowerBoundEquality,
    ProductViolation,
}

#[derive(Debug, Error)]
pub enum ParseGraphError {
    #[error("unrecognized graph spec '{0}'")]
    Unknown(String),
    #[error("bad number in graph spec '{0}'")]
    BadNumber(String),
    #[error("product spec '{0}' must be <spec>x<spec>")]
    BadProduct(String),
    #[error("cannot read '{path}': {message}")]
    File { path: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Parses `path:n`, `cycle:n`, `star:t`, `spider:x,y`, `ds:r,s`, `l_k:k`,
/// `corona:<spec>`, `product:<spec>x<spec>`, `file:<path>`, `g6:<string>`.
pub fn parse_graph_arg(text: &str) -> Result<Graph, ParseGraphError> {
    let (tag, rest) = text
        .split_once(':')
        .ok_or_else(|| ParseGraphError::Unknown(text.to_string()))?;
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| ParseGraphError::BadNumber(s.to_string()))
    };
    let pair = |s: &str| {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| ParseGraphError::BadNumber(s.to_string()))?;
        Ok::<(usize, usize), ParseGraphError>((num(a)?, num(b)?))
    };
    match tag {
        "path" => Ok(path_graph(num(rest)?)?),
        "cycle" => Ok(cycle_graph(num(rest)?)?),
        "star" => Ok(star_graph(num(rest)?)?),
        "spider" => {
            let (x, y) = pair(rest)?;
            Ok(spider_graph(x, y)?)
        }
        "ds" => {
            let (r, s) = pair(rest)?;
            Ok(double_star_graph(r, s)?)
        }
        "l_k" => Ok(l_k_graph(num(rest)?)?),
        "corona" => Ok(corona(&parse_graph_arg(rest)?)?),
        "product" => {
            for (i, ch) in rest.char_indices() {
                if ch != 'x' {
                    continue;
                }
                let (left, right) = (&rest[..i], &rest[i + 1..]);
                if let (Ok(g), Ok(h)) = (parse_graph_arg(left), parse_graph_arg(right)) {
                    return Ok(cartesian_product(&g, &h)?);
                }
            }
            Err(ParseGraphError::BadProduct(rest.to_string()))
        }
        "file" => {
            let content =
                std::fs::read_to_string(rest).map_err(|e| ParseGraphError::File {
                    path: rest.to_string(),
                    message: e.to_string(),
                })?;
            Ok(parse_edge_list(&content)?)
        }
        "g6" => Ok(from_graph6(rest)?),
        _ => Err(ParseGraphError::Unknown(text.to_string())),
    }
}

#[derive(Debug)]
enum CliFailure {
    Usage(String),
    Budget(String),
}

impl From<ParseGraphError> for CliFailure {
    fn from(e: ParseGraphError) -> Self {
        CliFailure::Usage(e.to_string())
    }
}
impl From<GraphError> for CliFailure {
    fn from(e: GraphError) -> Self {
        CliFailure::Usage(e.to_string())
    }
}
impl From<SolveError> for CliFailure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExhausted(_) => CliFailure::Budget(e.to_string()),
            other => CliFailure::Usage(other.to_string()),
        }
    }
}
impl From<BoundsError> for CliFailure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Solve(inner) => inner.into(),
            other => CliFailure::Usage(other.to_string()),
        }
    }
}
impl From<ConstructError> for CliFailure {
    fn from(e: ConstructError) -> Self {
        CliFailure::Usage(e.to_string())
    }
}
impl From<ExtremalError> for CliFailure {
    fn from(e: ExtremalError) -> Self {
        CliFailure::Usage(e.to_string())
    }
}

pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    run_with_output(args, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with_output<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("rainbowdom"))
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let budget = match std::env::var(BUDGET_ENV_VAR) {
        Err(_) => DEFAULT_NODE_BUDGET,
        Ok(raw) => match raw.parse::<u64>() {
            Ok(b) => b,
            Err(_) => {
                let _ = writeln!(err, "{BUDGET_ENV_VAR} must be an integer, got '{raw}'");
                return EXIT_USAGE;
            }
        },
    };
    emit(dispatch(cli.command, budget, err), cli.pretty, out, err)
}

/// Maps an outcome onto the exit-code contract: violated theorem bounds give
/// 1, usage problems 2, exhausted budgets 3.
fn emit(
    outcome: Result<Output, CliFailure>,
    pretty: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match outcome {
        Ok(Output { json, violated }) => {
            let rendered = if pretty {
                serde_json::to_string_pretty(&json)
            } else {
                serde_json::to_string(&json)
            }
            .expect("reports serialize");
            let _ = writeln!(out, "{rendered}");
            if violated {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(CliFailure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliFailure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
    }
}

struct Output {
    json: serde_json::Value,
    violated: bool,
}

fn to_json<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn dispatch(command: Command, budget: u64, err: &mut dyn Write) -> Result<Output, CliFailure> {
    match command {
        Command::Compute {
            invariant,
            graph,
            method,
        } => {
            let g = parse_graph_arg(&graph)?;
            let result = compute(&g, invariant, method, budget)?;
            Ok(Output {
                json: to_json(&result),
                violated: false,
            })
        }
        Command::Bounds { graph } => {
            let g = parse_graph_arg(&graph)?;
            let report = bound_report_with_budget(&g, budget)?;
            let violated = report.any_violated();
            if violated {
                let _ = writeln!(err, "theorem bound violated; see report");
            }
            Ok(Output {
                json: to_json(&report),
                violated,
            })
        }
        Command::Construct { kind, graph } => {
            let g = parse_graph_arg(&graph)?;
            let built = match kind {
                ConstructKind::Spider => spider_rdf(&g)?,
                ConstructKind::Tree => tree_rdf_three_quarters(&g)?,
                ConstructKind::Diametral => diametral_rdf(&g)?,
                ConstructKind::Path => {
                    if !g.is_tree() || g.max_degree() > 2 {
                        return Err(CliFailure::Usage(
                            "construct --kind path expects a path graph".into(),
                        ));
                    }
                    path_rdf(g.n())?
                }
            };
            Ok(Output {
                json: to_json(&built),
                violated: false,
            })
        }
        Command::Recognize { graph } => {
            let g = parse_graph_arg(&graph)?;
            let witness = recognize_extremal_graph(&g)?;
            #[derive(Serialize)]
            struct RecognizeOutput {
                extremal: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness: Option<ExtremalWitness>,
            }
            Ok(Output {
                json: to_json(&RecognizeOutput {
                    extremal: witness.is_some(),
                    witness,
                }),
                violated: false,
            })
        }
        Command::Product { left, right } => {
            let g = parse_graph_arg(&left)?;
            let h = parse_graph_arg(&right)?;
            let report = product_check_with_budget(&g, &h, budget)?;
            if report.rainbow_ge_product == Some(false) {
                let _ = writeln!(
                    err,
                    "rainbow product inequality failed: counterexample candidate"
                );
            }
            let violated = report.roman_ge_product == Some(false)
                || report.doubled_ge_product == Some(false);
            Ok(Output {
                json: to_json(&report),
                violated,
            })
        }
        Command::Scan {
            family,
            min_n,
            max_n,
            predicate,
            seed,
            samples,
        } => {
            let spec = ScanSpec {
                family,
                size_range: (min_n, max_n),
                predicate,
                seed,
                sample_count: samples,
            };
            let report = scan_with_budget(&spec, budget)?;
            let violated = !report.violations.is_empty();
            if violated {
                let _ = writeln!(err, "scan found {} violations", report.violations.len());
            }
            Ok(Output {
                json: to_json(&report),
                violated,
            })
        }
    }
}

fn compute(
    g: &Graph,
    invariant: InvariantArg,
    method: MethodArg,
    budget: u64,
) -> Result<SolveResult, CliFailure> {
    use InvariantArg::*;
    use MethodArg::*;
    let result = match (invariant, method) {
        (Gamma, Auto) | (Gamma, BranchBound) => domination_number_with_budget(g, budget)?,
        (Gamma, Brute) => brute_domination(g)?,
        (GammaR2, Auto) => {
            if g.is_tree() {
                tree_rainbow2(g)?
            } else {
                rainbow_domination_number_with_budget(g, 2, budget)?
            }
        }
        (GammaR2, BranchBound) => rainbow_domination_number_with_budget(g, 2, budget)?,
        (GammaR2, Brute) => brute_rainbow(g, 2)?,
        (GammaR2, TreeDp) => tree_rainbow2(g)?,
        (GammaR2, ViaProduct) => rainbow2_via_product_with_budget(g, budget)?,
        (GammaRoman, Auto) | (GammaRoman, BranchBound) => {
            roman_domination_number_with_budget(g, budget)?
        }
        (GammaRoman, Brute) => brute_roman(g)?,
        _ => {
            return Err(CliFailure::Usage(
                "that method does not apply to the requested invariant".into(),
            ))
        }
    };
    Ok(result)
}

/// What to sweep and which predicate to evaluate.
#[derive(Debug, Clone, Serialize)]
pub struct ScanSpec {
    pub family: Family,
    pub size_range: (usize, usize),
    pub predicate: Predicate,
    pub seed: u64,
    pub sample_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanHit {
    pub graph: String,
    pub values: serde_json::Value,
}

/// Scan outcome; `violations` is a subset of `hits` and is expected to stay
/// empty for theorem predicates.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub family: Family,
    pub size_range: (usize, usize),
    pub predicate: Predicate,
    pub seed: u64,
    pub sample_count: usize,
    pub instances_checked: usize,
    pub hits: Vec<ScanHit>,
    pub violations: Vec<ScanHit>,
}

pub fn scan(spec: &ScanSpec) -> Result<ScanReport, ScanError> {
    scan_with_budget(spec, DEFAULT_NODE_BUDGET).map_err(|e| match e {
        CliFailure::Usage(m) => ScanError::Input(m),
        CliFailure::Budget(m) => ScanError::Budget(m),
    })
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

enum Instance {
    Single(Graph),
    Pair(Graph, Graph),
}

fn scan_with_budget(spec: &ScanSpec, budget: u64) -> Result<ScanReport, CliFailure> {
    if (spec.family == Family::ProductPairs) != (spec.predicate == Predicate::ProductViolation) {
        return Err(CliFailure::Usage(
            "the product_violation predicate pairs exactly with the product_pairs family".into(),
        ));
    }
    let instances = generate_instances(spec)?;
    let outcomes: Result<Vec<(Option<ScanHit>, Option<ScanHit>)>, CliFailure> = instances
        .par_iter()
        .map(|inst| evaluate_instance(inst, spec.predicate, budget))
        .collect();
    let outcomes = outcomes?;
    let mut hits = Vec::new();
    let mut violations = Vec::new();
    for (hit, violation) in outcomes {
        if let Some(h) = hit {
            hits.push(h);
        }
        if let Some(v) = violation {
            violations.push(v);
        }
    }
    Ok(ScanReport {
        family: spec.family,
        size_range: spec.size_range,
        predicate: spec.predicate,
        seed: spec.seed,
        sample_count: spec.sample_count,
        instances_checked: instances.len(),
        hits,
        violations,
    })
}

fn generate_instances(spec: &ScanSpec) -> Result<Vec<Instance>, CliFailure> {
    let (lo, hi) = spec.size_range;
    if lo > hi {
        return Err(CliFailure::Usage("size range is empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    match spec.family {
        Family::AllTrees => {
            for n in lo.max(1)..=hi {
                out.extend(all_trees(n).into_iter().map(Instance::Single));
            }
        }
        Family::RandomTrees => {
            for _ in 0..spec.sample_count {
                let n = rng.gen_range(lo.max(1)..=hi);
                out.push(Instance::Single(random_tree(n, &mut rng)));
            }
        }
        Family::RandomConnected => {
            for _ in 0..spec.sample_count {
                let n = rng.gen_range(lo.max(1)..=hi);
                let p = rng.gen_range(0.2..0.8);
                out.push(Instance::Single(random_connected(n, p, &mut rng)));
            }
        }
        Family::Paths => {
            for n in lo.max(1)..=hi {
                out.push(Instance::Single(path_graph(n)?));
            }
        }
        Family::Cycles => {
            for n in lo.max(3)..=hi {
                out.push(Instance::Single(cycle_graph(n)?));
            }
        }
        Family::Spiders => {
            for x in 0..=hi / 2 {
                for y in 0..=hi {
                    let n = 2 * x + y + 1;
                    if x + y >= 2 && n >= lo && n <= hi {
                        out.push(Instance::Single(spider_graph(x, y)?));
                    }
                }
            }
        }
        Family::LK => {
            let mut k = 1;
            while 4 * k <= hi {
                if 4 * k >= lo {
                    out.push(Instance::Single(l_k_graph(k)?));
                }
                k += 1;
            }
        }
        Family::DoubleStars => {
            for r in 1..=hi {
                for s in 1..=r {
                    let n = r + s + 2;
                    if n >= lo && n <= hi {
                        out.push(Instance::Single(double_star_graph(r, s)?));
                    }
                }
            }
        }
        Family::ProductPairs => {
            for i in lo.max(1)..=hi {
                for j in i..=hi {
                    out.push(Instance::Pair(path_graph(i)?, path_graph(j)?));
                }
            }
        }
    }
    Ok(out)
}

fn encode_graph(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| write_edge_list(g).replace('\n', ";"))
}

fn evaluate_instance(
    inst: &Instance,
    predicate: Predicate,
    budget: u64,
) -> Result<(Option<ScanHit>, Option<ScanHit>), CliFailure> {
    match (inst, predicate) {
        (Instance::Single(g), Predicate::BoundViolation) => {
            let report = bound_report_with_budget(g, budget)?;
            if report.any_violated() {
                let hit = ScanHit {
                    graph: encode_graph(g),
                    values: to_json(&report),
                };
                Ok((Some(hit.clone()), Some(hit)))
            } else {
                Ok((None, None))
            }
        }
        (Instance::Single(g), Predicate::Tight3n4) => {
            if g.n() < 3 {
                return Ok((None, None));
            }
            let gamma_r2 = if g.is_tree() {
                tree_rainbow2(g)?.value
            } else {
                rainbow_domination_number_with_budget(g, 2, budget)?.value
            };
            let tight = 4 * gamma_r2 as usize == 3 * g.n();
            let recognized = recognize_extremal_graph(g)?.is_some();
            if !tight && !recognized {
                return Ok((None, None));
            }
            let hit = ScanHit {
                graph: encode_graph(g),
                values: serde_json::json!({
                    "n": g.n(),
                    "gamma_r2": gamma_r2,
                    "tight": tight,
                    "recognized": recognized,
                }),
            };
            let violation = (tight != recognized).then(|| hit.clone());
            Ok((Some(hit), violation))
        }
        (Instance::Single(g), Predicate::LowerBoundEquality) => {
            if !g.is_tree() || g.n() < 3 {
                return Ok((None, None));
            }
            let lower = tree_lower_bound_with_budget(g, budget)?;
            let gamma_r2 = tree_rainbow2(g)?.value;
            let hit = ScanHit {
                graph: encode_graph(g),
                values: serde_json::json!({
                    "n": g.n(),
                    "gamma_r2": gamma_r2,
                    "tree_lower_bound": lower,
                }),
            };
            if gamma_r2 < lower {
                Ok((Some(hit.clone()), Some(hit)))
            } else if gamma_r2 == lower {
                Ok((Some(hit), None))
            } else {
                Ok((None, None))
            }
        }
        (Instance::Pair(g, h), Predicate::ProductViolation) => {
            let report = product_check_with_budget(g, h, budget)?;
            let hard_violation = report.roman_ge_product == Some(false)
                || report.doubled_ge_product == Some(false);
            let candidate = report.rainbow_ge_product == Some(false);
            if !hard_violation && !candidate {
                return Ok((None, None));
            }
            let hit = ScanHit {
                graph: format!("{}x{}", encode_graph(g), encode_graph(h)),
                values: to_json(&report),
            };
            let violation = hard_violation.then(|| hit.clone());
            Ok((Some(hit), violation))
        }
        _ => Err(CliFailure::Usage(
            "predicate does not apply to this family".into(),
        )),
    }
}
