//! The `unmixed` command-line tool.
//!
//! Exit codes: 0 when the property holds (or the command succeeded), 1 when
//! it does not hold, 2 on input, hypothesis or budget errors.

mod report;

use std::ffi::OsString;
use std::io::{Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use report::{digest, CensusSummary, Report, Verdict, TOOL_VERSION};

use crate::covers::is_unmixed_bruteforce;
use crate::format::{parse_graph, write_graph, GraphFile};
use crate::generators::{exhaustive_star_graphs, random_star_graph, FixtureName, InstanceSpec};
use crate::graph::{Graph, Vertex};
use crate::partition::{
    bipartition, enumerate_r_partitions, find_star_structure, validate_star, StarAbsence,
    StarSearch, StarStructure,
};
use crate::theorems::{ravindra_check, theorem23_condition, villarreal_check, BipartiteVerdict};
use crate::{LimitError, DEFAULT_ENUMERATION_CAP, DEFAULT_NODE_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "unmixed",
    version,
    about = "Decide whether finite simple graphs are unmixed (well-covered)"
)]
pub struct Cli {
    /// Emit the report as JSON
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate all minimal vertex covers and compare their sizes
    Check {
        /// Graph file (`-` for stdin)
        file: PathBuf,
        /// Give up after this many maximal independent sets
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_sets: usize,
    },
    /// Decide unmixedness through a clique-row structure
    Theorem {
        file: PathBuf,
        /// Number of columns; taken from declared `row` lines when omitted
        #[arg(long)]
        r: Option<usize>,
        /// Also run the exhaustive census and report agreement
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_sets: usize,
    },
    /// Compare the structure-based decision with the census over generated instances
    #[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "samples"])))]
    Equiv {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Every subset of optional cross edges
        #[arg(long)]
        exhaustive: bool,
        /// Number of random instances
        #[arg(long, requires = "prob")]
        samples: Option<u64>,
        /// Edge probability for random instances
        #[arg(long)]
        prob: Option<f64>,
        /// Base seed; sample k uses seed + k
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop (exit 2) after this many instances
        #[arg(long, default_value_t = 1_000_000)]
        max_instances: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_sets: usize,
    },
    /// List every proper partition into r independent parts
    Partitions {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_partitions: usize,
    },
    /// Run one of the bipartite criteria
    #[command(group(ArgGroup::new("criterion").required(true).args(["ravindra", "villarreal"])))]
    Bipartite {
        file: PathBuf,
        /// Perfect matching with complete bipartite edge neighborhoods
        #[arg(long)]
        ravindra: bool,
        /// Ordered perfect matching with the transitivity condition
        #[arg(long)]
        villarreal: bool,
        #[arg(long)]
        verify: bool,
        /// Give up after this many perfect matchings / independent sets
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_sets: usize,
    },
    /// Write a generated instance or fixture in graph format
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Clique size for `complete`
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        prob: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Instance number for `exhaustive-star`
        #[arg(long)]
        index: Option<u64>,
        /// Cross pairs for `double-clique`, e.g. `0:3,1:0`
        #[arg(long)]
        cross: Option<String>,
        /// Fixture name for `fixture`
        #[arg(long)]
        name: Option<String>,
        /// Output path; the graph goes to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    DoubleClique,
    RandomStar,
    ExhaustiveStar,
    Fixture,
}

/// What a command produced. `stdout` is printed as-is when there is no
/// report.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Option<Report>,
    pub stdout: Option<String>,
    pub error: Option<String>,
}

impl Outcome {
    fn report(report: Report, exit_code: i32) -> Self {
        Outcome {
            exit_code,
            report: Some(report),
            stdout: None,
            error: None,
        }
    }
}

/// Input, hypothesis or budget error: exit code 2.
#[derive(Debug)]
struct Failure {
    message: String,
    partial: Option<Box<Report>>,
}

impl Failure {
    fn new(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            partial: None,
        }
    }
}

impl From<LimitError> for Failure {
    fn from(e: LimitError) -> Self {
        Failure::new(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::new(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(GraphFile, String), Failure> {
    let text = read_input(path)?;
    let file = parse_graph(&text).map_err(|e| Failure::new(format!("{}: {e}", path.display())))?;
    Ok((file, digest(text.as_bytes())))
}

fn labeled_pairs(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Vec<[String; 2]> {
    pairs
        .iter()
        .map(|&(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
        .collect()
}

fn with_warnings(report: &mut Report, file: &GraphFile) {
    if !file.warnings.is_empty() {
        report.detail("warnings", &file.warnings);
    }
}

const LISTED_SETS: usize = 10_000;

fn cmd_check(path: &Path, max_sets: usize) -> Result<Outcome, Failure> {
    let (file, input_digest) = load(path)?;
    let g = &file.graph;
    let census = is_unmixed_bruteforce(g, max_sets)?;
    let mut report = Report::new("check", input_digest, Verdict::Holds(census.is_unmixed));
    report.census_summary = Some(CensusSummary::from(&census));
    if !census.is_unmixed {
        let smallest = census
            .minimal_vertex_covers
            .iter()
            .min_by_key(|c| c.len())
            .expect("nonempty");
        let largest = census
            .minimal_vertex_covers
            .iter()
            .max_by_key(|c| c.len())
            .expect("nonempty");
        report.witnesses = Some(json!({
            "smallest_minimal_cover": smallest.labeled(g),
            "largest_minimal_cover": largest.labeled(g),
        }));
    }
    if census.minimal_vertex_covers.len() <= LISTED_SETS {
        let covers: Vec<Vec<String>> = census
            .minimal_vertex_covers
            .iter()
            .map(|c| c.labeled(g))
            .collect();
        report.detail("minimal_vertex_covers", covers);
    }
    report.detail("vertex_count", g.vertex_count());
    report.detail("edge_count", g.edge_count());
    with_warnings(&mut report, &file);
    let code = if census.is_unmixed { 0 } else { 1 };
    Ok(Outcome::report(report, code))
}

fn absence_message(absence: &StarAbsence) -> String {
    match absence {
        StarAbsence::NotDivisible { vertex_count, r } => {
            format!("no (*) structure: {vertex_count} not divisible by {r}")
        }
        StarAbsence::NoVertices => "no (*) structure: the graph has no vertices".to_string(),
        StarAbsence::Exhausted => "no (*) structure: search exhausted".to_string(),
    }
}

fn cmd_theorem(
    path: &Path,
    r: Option<usize>,
    verify: bool,
    node_budget: u64,
    max_sets: usize,
) -> Result<Outcome, Failure> {
    let (file, input_digest) = load(path)?;
    let g = &file.graph;
    let (structure, source) = match (&file.star, r) {
        (Some(s), r) => {
            if let Some(r) = r.filter(|&r| r != s.r()) {
                return Err(Failure::new(format!(
                    "--r {r} conflicts with declared rows of width {}",
                    s.r()
                )));
            }
            validate_star(g, s)
                .map_err(|e| Failure::new(format!("declared rows are not a (*) structure: {e}")))?;
            (s.clone(), "declared")
        }
        (None, Some(r)) => match find_star_structure(g, r, node_budget) {
            Ok(StarSearch::Found(s)) => (s, "found"),
            Ok(StarSearch::Absent(a)) => return Err(Failure::new(absence_message(&a))),
            Err(e) => return Err(Failure::new(format!("no (*) structure: {e}"))),
        },
        (None, None) => {
            return Err(Failure::new(
                "no declared rows; pass --r to search for a structure",
            ))
        }
    };
    let verdict = theorem23_condition(g, &structure).map_err(|e| Failure::new(e.to_string()))?;
    let mut report = Report::new("theorem", input_digest, Verdict::Holds(verdict.holds));
    report.detail("structure", structure.labeled(g));
    report.detail("structure_source", source);
    report.detail("r", structure.r());
    report.detail("n", structure.n());
    if let Some(w) = &verdict.witness {
        report.witnesses = Some(json!({
            "row": w.row,
            "tuple": w.tuple.labeled(g),
            "assignment": labeled_pairs(g, &w.assignment),
        }));
    }
    with_warnings(&mut report, &file);
    if verify {
        let census = is_unmixed_bruteforce(g, max_sets)?;
        let agrees = census.is_unmixed == verdict.holds;
        report.census_summary = Some(CensusSummary::from(&census));
        report.detail("oracle_unmixed", census.is_unmixed);
        report.detail("agrees", agrees);
        if !agrees {
            return Err(Failure {
                message: "structure decision and census disagree".into(),
                partial: Some(Box::new(report)),
            });
        }
    }
    let code = if verdict.holds { 0 } else { 1 };
    Ok(Outcome::report(report, code))
}

struct Sweep {
    instances: u64,
    mismatches: u64,
    unmixed: u64,
    first_mismatch: Option<serde_json::Value>,
}

impl Sweep {
    fn check(
        &mut self,
        label: serde_json::Value,
        g: &Graph,
        s: &StarStructure,
        max_sets: usize,
    ) -> Result<(), Failure> {
        let fast = theorem23_condition(g, s)
            .map_err(|e| Failure::new(e.to_string()))?
            .holds;
        let oracle = is_unmixed_bruteforce(g, max_sets)?.is_unmixed;
        self.instances += 1;
        self.unmixed += u64::from(oracle);
        if fast != oracle {
            self.mismatches += 1;
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(json!({
                    "instance": label,
                    "structure_decision": fast,
                    "oracle": oracle,
                    "graph": write_graph(g, None, Some(s)),
                }));
            }
        }
        Ok(())
    }

    fn report(&self, params: &str, mode: &str) -> Report {
        let mut report = Report::new(
            "equiv",
            digest(params.as_bytes()),
            Verdict::Holds(self.mismatches == 0),
        );
        report.detail("parameters", params);
        report.detail("mode", mode);
        report.detail("instances", self.instances);
        report.detail("mismatches", self.mismatches);
        report.detail("unmixed_instances", self.unmixed);
        report.witnesses = self
            .first_mismatch
            .clone()
            .map(|m| json!({ "first_mismatch": m }));
        report
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_equiv(
    r: usize,
    n: usize,
    exhaustive: bool,
    samples: Option<u64>,
    prob: Option<f64>,
    seed: u64,
    max_instances: u64,
    max_sets: usize,
) -> Result<Outcome, Failure> {
    let mut sweep = Sweep {
        instances: 0,
        mismatches: 0,
        unmixed: 0,
        first_mismatch: None,
    };
    let (params, mode, total) = if exhaustive {
        let family = exhaustive_star_graphs(r, n).map_err(|e| Failure::new(e.to_string()))?;
        (
            format!("equiv r={r} n={n} exhaustive"),
            "exhaustive",
            family.len(),
        )
    } else {
        let samples = samples.expect("clap requires a mode");
        let p = prob.expect("clap requires --prob with --samples");
        (
            format!("equiv r={r} n={n} samples={samples} prob={p} seed={seed}"),
            "random",
            samples,
        )
    };
    let budget_hit = total > max_instances;
    let limit = total.min(max_instances);
    if exhaustive {
        let family = exhaustive_star_graphs(r, n).map_err(|e| Failure::new(e.to_string()))?;
        for (index, (g, s)) in family.take(limit as usize).enumerate() {
            sweep.check(json!({ "index": index }), &g, &s, max_sets)?;
        }
    } else {
        let p = prob.expect("checked above");
        for k in 0..limit {
            let instance_seed = seed.wrapping_add(k);
            let (g, s) = random_star_graph(r, n, p, instance_seed)
                .map_err(|e| Failure::new(e.to_string()))?;
            sweep.check(
                json!({ "sample": k, "seed": instance_seed }),
                &g,
                &s,
                max_sets,
            )?;
        }
    }
    let mut report = sweep.report(&params, mode);
    if budget_hit {
        report.verdict = Verdict::Status("partial".to_string());
        return Err(Failure {
            message: format!("instance budget of {max_instances} exceeded ({total} requested)"),
            partial: Some(Box::new(report)),
        });
    }
    let code = if sweep.mismatches == 0 { 0 } else { 1 };
    Ok(Outcome::report(report, code))
}

fn cmd_partitions(path: &Path, r: usize, max_partitions: usize) -> Result<Outcome, Failure> {
    let (file, input_digest) = load(path)?;
    let g = &file.graph;
    let partitions =
        enumerate_r_partitions(g, r, max_partitions).map_err(|e| Failure::new(e.to_string()))?;
    let mut report = Report::new("partitions", input_digest, Verdict::Count(partitions.len()));
    report.detail("r", r);
    report.detail(
        "partitions",
        partitions.iter().map(|p| p.labeled(g)).collect::<Vec<_>>(),
    );
    if r == 2 {
        report.detail("connected", g.is_connected());
        report.detail("bipartition", bipartition(g).map(|p| p.labeled(g)));
    }
    with_warnings(&mut report, &file);
    Ok(Outcome::report(report, 0))
}

fn bipartite_witness(g: &Graph, v: &BipartiteVerdict) -> serde_json::Value {
    json!({
        "matching": v.matching.as_ref().map(|m| labeled_pairs(g, &m.edges)),
        "neighborhoods_complete": v.matching.as_ref().and_then(|m| m.neighborhood_complete.clone()),
        "labeling": v.labeling.as_ref().map(|l| labeled_pairs(g, l)),
    })
}

fn cmd_bipartite(
    path: &Path,
    ravindra: bool,
    verify: bool,
    max_sets: usize,
) -> Result<Outcome, Failure> {
    let (file, input_digest) = load(path)?;
    let g = &file.graph;
    let (criterion, result) = if ravindra {
        ("ravindra", ravindra_check(g, max_sets))
    } else {
        ("villarreal", villarreal_check(g, max_sets))
    };
    let verdict =
        result.map_err(|e| Failure::new(format!("{criterion} hypothesis failed: {e}")))?;
    let mut report = Report::new("bipartite", input_digest, Verdict::Holds(verdict.holds));
    report.detail("criterion", criterion);
    if let Some(reason) = &verdict.reason {
        report.detail("reason", reason);
    }
    if verdict.holds {
        report.witnesses = Some(bipartite_witness(g, &verdict));
    }
    with_warnings(&mut report, &file);
    if verify {
        let census = is_unmixed_bruteforce(g, max_sets)?;
        let agrees = census.is_unmixed == verdict.holds;
        report.census_summary = Some(CensusSummary::from(&census));
        report.detail("oracle_unmixed", census.is_unmixed);
        report.detail("agrees", agrees);
        if !agrees {
            return Err(Failure {
                message: format!("{criterion} criterion and census disagree"),
                partial: Some(Box::new(report)),
            });
        }
    }
    let code = if verdict.holds { 0 } else { 1 };
    Ok(Outcome::report(report, code))
}

fn parse_cross(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair
                .split_once(':')
                .ok_or_else(|| Failure::new(format!("cross pair `{pair}` must look like i:j")))?;
            let parse = |t: &str| {
                t.trim().parse::<usize>().map_err(|_| {
                    Failure::new(format!("cross pair `{pair}`: `{t}` is not an index"))
                })
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: Family,
    m: Option<usize>,
    r: Option<usize>,
    n: Option<usize>,
    prob: Option<f64>,
    seed: Option<u64>,
    index: Option<u64>,
    cross: Option<String>,
    name: Option<String>,
    out: Option<PathBuf>,
) -> Result<Outcome, Failure> {
    fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
        value.ok_or_else(|| Failure::new(format!("--family {family} needs --{flag}")))
    }
    let spec = match family {
        Family::Complete => InstanceSpec::Complete {
            m: need(m, "m", "complete")?,
        },
        Family::DoubleClique => InstanceSpec::DoubleClique {
            r: need(r, "r", "double-clique")?,
            cross: parse_cross(cross.as_deref().unwrap_or(""))?,
        },
        Family::RandomStar => InstanceSpec::RandomStar {
            r: need(r, "r", "random-star")?,
            n: need(n, "n", "random-star")?,
            edge_probability: need(prob, "prob", "random-star")?,
            seed: need(seed, "seed", "random-star")?,
        },
        Family::ExhaustiveStar => InstanceSpec::ExhaustiveStar {
            r: need(r, "r", "exhaustive-star")?,
            n: need(n, "n", "exhaustive-star")?,
            index: need(index, "index", "exhaustive-star")?,
        },
        Family::Fixture => {
            let name: FixtureName = need(name, "name", "fixture")?
                .parse()
                .map_err(|e: crate::generators::GeneratorError| Failure::new(e.to_string()))?;
            InstanceSpec::Fixture(name)
        }
    };
    let text = match &spec {
        InstanceSpec::Fixture(name) => name.text().to_string(),
        other => {
            let file = other.build().map_err(|e| Failure::new(e.to_string()))?;
            write_graph(&file.graph, file.partition.as_ref(), file.star.as_ref())
        }
    };
    let Some(path) = out else {
        return Ok(Outcome {
            exit_code: 0,
            report: None,
            stdout: Some(text),
            error: None,
        });
    };
    std::fs::write(&path, &text).map_err(|e| Failure::new(format!("{}: {e}", path.display())))?;
    let parsed = parse_graph(&text).expect("generated text parses");
    let mut report = Report::new(
        "gen",
        digest(text.as_bytes()),
        Verdict::Status("written".to_string()),
    );
    report.detail("path", path.display().to_string());
    report.detail("vertex_count", parsed.graph.vertex_count());
    report.detail("edge_count", parsed.graph.edge_count());
    Ok(Outcome::report(report, 0))
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Outcome {
    let start = Instant::now();
    let command_name = match &cli.command {
        Command::Check { .. } => "check",
        Command::Theorem { .. } => "theorem",
        Command::Equiv { .. } => "equiv",
        Command::Partitions { .. } => "partitions",
        Command::Bipartite { .. } => "bipartite",
        Command::Gen { .. } => "gen",
    };
    let result = match cli.command {
        Command::Check { file, max_sets } => cmd_check(&file, max_sets),
        Command::Theorem {
            file,
            r,
            verify,
            node_budget,
            max_sets,
        } => cmd_theorem(&file, r, verify, node_budget, max_sets),
        Command::Equiv {
            r,
            n,
            exhaustive,
            samples,
            prob,
            seed,
            max_instances,
            max_sets,
        } => cmd_equiv(
            r,
            n,
            exhaustive,
            samples,
            prob,
            seed,
            max_instances,
            max_sets,
        ),
        Command::Partitions {
            file,
            r,
            max_partitions,
        } => cmd_partitions(&file, r, max_partitions),
        Command::Bipartite {
            file,
            ravindra,
            villarreal: _,
            verify,
            max_sets,
        } => cmd_bipartite(&file, ravindra, verify, max_sets),
        Command::Gen {
            family,
            m,
            r,
            n,
            prob,
            seed,
            index,
            cross,
            name,
            out,
        } => cmd_gen(family, m, r, n, prob, seed, index, cross, name, out),
    };
    let elapsed = start.elapsed().as_millis() as u64;
    match result {
        Ok(mut outcome) => {
            if let Some(report) = &mut outcome.report {
                report.timing_ms = elapsed;
            }
            outcome
        }
        Err(failure) => {
            let mut report = failure.partial.map(|r| *r).unwrap_or_else(|| {
                Report::new(
                    command_name,
                    String::new(),
                    Verdict::Status("error".to_string()),
                )
            });
            report.detail("error", &failure.message);
            report.timing_ms = elapsed;
            Outcome {
                exit_code: 2,
                report: Some(report),
                stdout: None,
                error: Some(failure.message),
            }
        }
    }
}

/// Parses `args`, runs the command, prints its output and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    let outcome = run(cli);
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Some(text) = &outcome.stdout {
        let _ = lock.write_all(text.as_bytes());
    }
    if let Some(report) = &outcome.report {
        if json {
            let _ = writeln!(lock, "{}", report.to_json());
        } else if outcome.error.is_none() {
            let _ = lock.write_all(report.to_text().as_bytes());
        }
    }
    if let Some(message) = &outcome.error {
        eprintln!("error: {message}");
    }
    outcome.exit_code
}
