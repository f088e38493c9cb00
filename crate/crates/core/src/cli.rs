//! Command-line front end: argument parsing, dispatch, JSON payloads on
//! stdout and the append-only run log.

use std::ffi::OsString;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::error::Error;
use crate::expansion::{
    check_independent_set_expansion_with, check_set_expansion_with, peel_to_expander_with, CheckOptions,
};
use crate::generators::{self, GeneratorSpec, Sequence};
use crate::graph::io::{self, GraphFormat};
use crate::graph::{bfs_layers, CycleCertificate, Graph};
use crate::independence::{alpha, iota_with_limit};
use crate::rotation::{
    posa_long_cycle_with, theta_subgraph_with, ChordedCycle, PosaOptions, ThetaCase, ThetaOutcome,
};
use crate::spectrum::{
    bound_lengths2, check_consecutive_theorems, check_lengths_theorem, check_recip_theorem,
    check_upper_bound_examples, consecutive_cycles, cycle_spectrum_with, l_and_l_odd, tower_and_tau, CheckerLimits,
    ConsecutiveFamily, SequenceSpec, Verdict,
};
use crate::suite;
use crate::util::parse_rational;

pub const LOG_ENV: &str = "CYCLESPEC_LOG";

#[derive(Parser, Debug)]
#[command(name = "cyclespec", version, about = "Cycle lengths, expansion and independence ratio of small graphs")]
struct Cli {
    /// JSON configuration file (limits, budgets, seeds).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Append a JSONL run record to this file (default: $CYCLESPEC_LOG).
    #[arg(long, global = true)]
    log: Option<PathBuf>,
    /// Do not write a run record.
    #[arg(long, global = true)]
    no_log: bool,
    /// Master seed, overriding the configuration.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Independence number with a witness.
    Alpha(InputArgs),
    /// Independence ratio.
    Iota(InputArgs),
    /// Cycle spectrum and reciprocal sums.
    Spectrum(InputArgs),
    /// Peel to a k-expanding subgraph on independent sets.
    Peel(KArgs),
    /// Decide expansion by enumeration.
    CheckExpansion(ExpansionArgs),
    /// Long cycle from a longest path by rotations.
    Posa(InputArgs),
    /// Cycle with a chord in a non-bipartite host.
    Theta(KArgs),
    /// Cycles of consecutive lengths through a layer of a BFS tree.
    Consecutive(ConsecutiveArgs),
    /// Evaluate a theorem's hypothesis and conclusion.
    Check(CheckArgs),
    /// Tower/τ selection and the lengths bound for a sequence.
    Bounds(BoundsArgs),
    /// Run the acceptance criteria.
    Suite(SuiteArgs),
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// Graph file: edge-list JSON or graph6.
    #[arg(long)]
    input: PathBuf,
}

#[derive(clap::Args, Debug)]
struct KArgs {
    #[arg(long)]
    input: PathBuf,
    /// Expansion factor, e.g. `2`, `3/2` or `1.5`.
    #[arg(long, value_parser = rational)]
    k: Rational64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Kneser,
    Mycielski,
    GeneralizedMycielski,
    Gkr,
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Petersen,
    RandomTriangleFree,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Graph6,
}

#[derive(clap::Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    levels: Option<usize>,
    #[arg(long, default_value_t = 1)]
    iterations: usize,
    #[arg(long)]
    edge_budget: Option<u64>,
    /// Base graph for the Mycielski families (default `C_5`).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Also write the graph here (format from the extension unless given).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpansionKindArg {
    Independent,
    Sets,
}

#[derive(clap::Args, Debug)]
struct ExpansionArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_parser = rational)]
    k: Rational64,
    #[arg(long, value_enum, default_value = "independent")]
    kind: ExpansionKindArg,
    /// Largest set size for `--kind sets`.
    #[arg(long)]
    t: Option<usize>,
    /// Exempt one vertex.
    #[arg(long)]
    weak: bool,
}

#[derive(clap::Args, Debug)]
struct ConsecutiveArgs {
    #[arg(long)]
    input: PathBuf,
    /// BFS root.
    #[arg(long)]
    v: usize,
    /// Distance of the layer holding the chorded cycle.
    #[arg(long)]
    layer: usize,
    /// Cycle vertices in order, comma separated; searched in the layer when omitted.
    #[arg(long, value_delimiter = ',')]
    cycle: Option<Vec<usize>>,
    /// Chord endpoints `u,v`.
    #[arg(long, value_delimiter = ',')]
    chord: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Long,
    General,
    Kskt,
    Lengths,
    Recip,
    UpperBounds,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long)]
    input: Option<PathBuf>,
    /// `primes`, `pow3`, `fermat-like` or `file` (with `--sequence-file`).
    #[arg(long, default_value = "primes")]
    sequence: String,
    #[arg(long)]
    sequence_file: Option<PathBuf>,
    #[arg(long, value_parser = rational)]
    k: Option<Rational64>,
    /// Clique order bound for `kskt` (graphs without `K_{s+1}`).
    #[arg(long)]
    s: Option<u32>,
    /// Run the construction pipeline even when the hypothesis fails.
    #[arg(long)]
    forced: bool,
    #[arg(long, default_value_t = 64)]
    d_max: usize,
    #[arg(long, default_value_t = 64)]
    t_max: usize,
}

#[derive(clap::Args, Debug)]
struct BoundsArgs {
    #[arg(long, default_value = "primes")]
    sequence: String,
    #[arg(long)]
    sequence_file: Option<PathBuf>,
    #[arg(long)]
    n: u64,
    /// Evaluate only this level (default: every level up to the selected r).
    #[arg(long)]
    r: Option<usize>,
}

#[derive(clap::Args, Debug)]
struct SuiteArgs {
    /// Run every acceptance criterion (the default).
    #[arg(long)]
    acceptance: bool,
    /// Restrict to these criteria, e.g. `1,2,7`.
    #[arg(long, value_delimiter = ',')]
    only: Vec<u8>,
}

fn rational(s: &str) -> Result<Rational64, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RunStatus {
    Pass,
    Vacuous,
    Violation,
    Undetermined,
    Error,
}

impl From<Verdict> for RunStatus {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => RunStatus::Pass,
            Verdict::Vacuous => RunStatus::Vacuous,
            Verdict::Violation => RunStatus::Violation,
            Verdict::Undetermined => RunStatus::Undetermined,
        }
    }
}

#[derive(Serialize)]
struct RunRecord<'a> {
    /// Milliseconds since the Unix epoch.
    timestamp: u128,
    command: &'a [String],
    input_hash: Option<&'a str>,
    seed: u64,
    version: &'static str,
    status: RunStatus,
    payload: &'a Value,
}

struct Context_ {
    cfg: Config,
    default_config: bool,
    input_hash: Option<String>,
}

impl Context_ {
    fn read_graph(&mut self, path: &Path) -> anyhow::Result<Graph> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.input_hash = Some(hex::encode(Sha256::digest(&bytes)));
        let format = GraphFormat::detect(Some(path), &bytes);
        io::parse_graph(&bytes, format).with_context(|| format!("parsing {}", path.display()))
    }

    fn limits(&self) -> CheckerLimits {
        CheckerLimits::from_config(&self.cfg)
    }

    fn sequence(&mut self, tag: &str, file: Option<&Path>) -> anyhow::Result<Sequence> {
        if tag == "file" {
            let path = file.ok_or_else(|| anyhow!("--sequence file needs --sequence-file"))?;
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok(Sequence::parse_file(&text)?);
        }
        Ok(Sequence::from_tag(tag)?)
    }
}

/// Runs the CLI on `args` (including the program name), writing the JSON
/// payload to `out` and diagnostics to `err`. Returns the exit code: 0 on
/// pass or vacuous, 2 on a theorem violation, 1 on any error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<String> = args
        .into_iter()
        .map(|a| a.into().to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    let log_path = if cli.no_log {
        None
    } else {
        cli.log.clone().or_else(|| std::env::var_os(LOG_ENV).map(PathBuf::from))
    };
    let mut ctx = Context_ {
        cfg: Config::default(),
        default_config: true,
        input_hash: None,
    };
    let result = (|| -> anyhow::Result<(Value, RunStatus)> {
        if let Some(path) = &cli.config {
            ctx.cfg = Config::load(path).with_context(|| format!("loading config {}", path.display()))?;
            ctx.default_config = false;
        }
        if let Some(seed) = cli.seed {
            ctx.cfg.seeds.master = seed;
        }
        dispatch(&cli.command, &mut ctx, err)
    })();
    let (payload, status, code) = match result {
        Ok((payload, status)) => {
            let code = match status {
                RunStatus::Violation => 2,
                RunStatus::Error => 1,
                _ => 0,
            };
            (payload, status, code)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            (json!({ "error": format!("{e:#}") }), RunStatus::Error, 1)
        }
    };
    if status != RunStatus::Error || payload.get("error").is_none() {
        let text = serde_json::to_string(&payload).expect("payload serializes");
        if writeln!(out, "{text}").is_err() {
            return 1;
        }
    }
    if let Some(path) = log_path {
        let record = RunRecord {
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis()).unwrap_or(0),
            command: &argv,
            input_hash: ctx.input_hash.as_deref(),
            seed: ctx.cfg.seeds.master,
            version: env!("CARGO_PKG_VERSION"),
            status,
            payload: &payload,
        };
        if let Err(e) = append_record(&path, &record) {
            let _ = writeln!(err, "warning: could not write run log {}: {e}", path.display());
        }
    }
    code
}

/// One `write_all` per record so concurrent appenders do not interleave lines.
fn append_record(path: &Path, record: &RunRecord) -> std::io::Result<()> {
    let mut line = serde_json::to_vec(record).map_err(std::io::Error::other)?;
    line.push(b'\n');
    OpenOptions::new().create(true).append(true).open(path)?.write_all(&line)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn with_status(mut v: Value, status: RunStatus) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("status".into(), to_value(&status));
    }
    v
}

fn dispatch(cmd: &Command, ctx: &mut Context_, err: &mut dyn Write) -> anyhow::Result<(Value, RunStatus)> {
    let cfg = ctx.cfg.clone();
    let pass = |v: Value| Ok((v, RunStatus::Pass));
    match cmd {
        Command::Gen(a) => pass(generate(a, ctx)?),
        Command::Alpha(a) => {
            let g = ctx.read_graph(&a.input)?;
            let r = alpha(&g);
            pass(json!({ "n": g.n(), "value": r.value, "witness": r.witness }))
        }
        Command::Iota(a) => {
            let g = ctx.read_graph(&a.input)?;
            pass(to_value(&iota_with_limit(&g, cfg.limits.alpha_n)?))
        }
        Command::Spectrum(a) => {
            let g = ctx.read_graph(&a.input)?;
            let spec = cycle_spectrum_with(&g, cfg.limits.spectrum_n, cfg.budgets.spectrum_nodes);
            let sums = l_and_l_odd(&spec);
            let mut v = to_value(&spec);
            v["l"] = json!(sums.l.to_string());
            v["l_odd"] = json!(sums.l_odd.to_string());
            v["sums_are_lower_bounds"] = json!(sums.lower_bounds);
            v["longest_consecutive_run"] = to_value(&spec.longest_consecutive_run());
            pass(v)
        }
        Command::Peel(a) => {
            let g = ctx.read_graph(&a.input)?;
            pass(to_value(&peel_to_expander_with(&g, a.k, &CheckOptions::from_config(&cfg))?))
        }
        Command::CheckExpansion(a) => {
            let g = ctx.read_graph(&a.input)?;
            let opts = CheckOptions::from_config(&cfg);
            let outcome = match a.kind {
                ExpansionKindArg::Independent => check_independent_set_expansion_with(&g, a.k, a.weak, &opts)?,
                ExpansionKindArg::Sets => {
                    let t = a.t.unwrap_or(cfg.budgets.set_expansion_max_t);
                    check_set_expansion_with(&g, a.k, t, a.weak, opts.set_budget)?
                }
            };
            pass(to_value(&outcome))
        }
        Command::Posa(a) => {
            let g = ctx.read_graph(&a.input)?;
            pass(to_value(&posa_long_cycle_with(&g, &PosaOptions::from_config(&cfg))?))
        }
        Command::Theta(a) => {
            let g = ctx.read_graph(&a.input)?;
            let out = theta_subgraph_with(
                &g,
                a.k,
                &CheckOptions::from_config(&cfg),
                &PosaOptions::from_config(&cfg),
                cfg.limits.alpha_n,
            )?;
            pass(to_value(&out))
        }
        Command::Consecutive(a) => {
            let g = ctx.read_graph(&a.input)?;
            let f = match (&a.cycle, &a.chord) {
                (Some(c), Some(ch)) => {
                    let [u, v] = ch[..] else { bail!("--chord takes two vertices") };
                    ChordedCycle::new(&g, CycleCertificate::new(&g, c.clone())?, (u.min(v), u.max(v)))?
                }
                (None, None) => find_layer_theta(&g, a.v, a.layer, &cfg)?,
                _ => bail!("--cycle and --chord go together"),
            };
            let res = consecutive_cycles(&g, a.v, &f, a.layer)?;
            pass(json!({ "f": to_value(&f), "lengths": res.lengths(), "construction": to_value(&res) }))
        }
        Command::Check(a) => check(a, ctx),
        Command::Bounds(a) => {
            let sigma = ctx.sequence(&a.sequence, a.sequence_file.as_deref())?;
            let sel = tower_and_tau(&sigma, a.n)?;
            let spec = SequenceSpec::from_selection(sigma, &sel)?;
            let levels: Vec<usize> = match a.r {
                Some(r) => vec![r],
                None => (1..=spec.r_max()).collect(),
            };
            let bounds = levels
                .iter()
                .map(|&r| bound_lengths2(&spec, a.n, r))
                .collect::<crate::Result<Vec<_>>>()?;
            let ok = bounds.iter().all(|b| b.chain_within_bound) && sel.within_log_star;
            let status = if ok { RunStatus::Pass } else { RunStatus::Violation };
            Ok((with_status(json!({ "selection": sel, "spec": spec, "bounds": bounds }), status), status))
        }
        Command::Suite(a) => {
            let _ = a.acceptance;
            let summary = suite::run_suite(&cfg, ctx.default_config, &a.only, |c, secs| {
                let _ = writeln!(err, "{} ({secs:.2}s)", c.line());
            });
            if summary.default_config {
                let _ = writeln!(err, "no --config given: defaults applied");
            }
            let failed: Vec<String> = summary
                .criteria
                .iter()
                .filter(|c| c.status == suite::Status::Fail)
                .map(|c| format!("{} {}", c.id, c.name))
                .collect();
            if failed.is_empty() {
                pass(to_value(&summary))
            } else {
                let _ = writeln!(err, "failing criteria: {}", failed.join(", "));
                Ok((to_value(&summary), RunStatus::Error))
            }
        }
    }
}

fn find_layer_theta(g: &Graph, v: usize, layer: usize, cfg: &Config) -> anyhow::Result<ChordedCycle> {
    let layers = bfs_layers(g, v)?;
    let set = layers.get(layer).ok_or_else(|| anyhow!("no vertices at distance {layer} from {v}"))?;
    let sub = g.induced(set);
    let out = theta_subgraph_with(
        &sub.graph,
        Rational64::from_integer(1),
        &CheckOptions::from_config(cfg),
        &PosaOptions::from_config(cfg),
        cfg.limits.alpha_n,
    )?;
    match out {
        ThetaOutcome::Constructed(r) => match r.case {
            ThetaCase::Found(c) => Ok(c.chorded.mapped(&sub.map)),
            ThetaCase::Degenerate { reason } => bail!("layer {layer}: {reason}"),
        },
        ThetaOutcome::NoCycle => bail!("layer {layer} has no cycle"),
        ThetaOutcome::BipartiteObstruction => bail!("layer {layer} is bipartite"),
    }
}

fn check(a: &CheckArgs, ctx: &mut Context_) -> anyhow::Result<(Value, RunStatus)> {
    let limits = ctx.limits();
    let graph = |ctx: &mut Context_| -> anyhow::Result<Graph> {
        let path = a.input.as_ref().ok_or_else(|| anyhow!("--input is required for this theorem"))?;
        ctx.read_graph(path)
    };
    let (value, verdict) = match a.theorem {
        Theorem::Lengths => {
            let g = graph(ctx)?;
            let sigma = ctx.sequence(&a.sequence, a.sequence_file.as_deref())?;
            let r = check_lengths_theorem(&g, &sigma, &limits)?;
            (to_value(&r), r.verdict)
        }
        Theorem::Recip => {
            let g = graph(ctx)?;
            let r = check_recip_theorem(&g, &limits)?;
            (to_value(&r), r.verdict)
        }
        Theorem::UpperBounds => {
            let r = check_upper_bound_examples(a.d_max, a.t_max, a.d_max.min(5), a.t_max.min(7))?;
            (to_value(&r), r.verdict)
        }
        Theorem::Long | Theorem::General | Theorem::Kskt => {
            let g = graph(ctx)?;
            let k = a.k.ok_or_else(|| anyhow!("--k is required for this theorem"))?;
            let family = match a.theorem {
                Theorem::Long => ConsecutiveFamily::TriangleFree,
                Theorem::General => ConsecutiveFamily::Identity,
                _ => ConsecutiveFamily::CliqueFree {
                    s: a.s.ok_or_else(|| anyhow!("--s is required for kskt"))?,
                },
            };
            let r = check_consecutive_theorems(&g, k, family, a.forced, &limits)?;
            (to_value(&r), r.verdict)
        }
    };
    let status = RunStatus::from(verdict);
    Ok((with_status(value, status), status))
}

fn need<T>(v: Option<T>, flag: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| anyhow!("--{flag} is required for this family"))
}

fn generate(a: &GenArgs, ctx: &mut Context_) -> anyhow::Result<Value> {
    let base = |ctx: &mut Context_| -> anyhow::Result<Graph> {
        match &a.input {
            Some(p) => ctx.read_graph(p),
            None => Ok(generators::named::cycle(5)),
        }
    };
    let mut report = Value::Null;
    let (spec, g) = match a.family {
        Family::Kneser => {
            let s = GeneratorSpec::Kneser { n: need(a.n, "n")?, r: need(a.r, "r")? };
            let g = s.build()?;
            (to_value(&s), g)
        }
        Family::Mycielski => {
            let mut g = base(ctx)?;
            for _ in 0..a.iterations {
                g = generators::mycielski(&g);
            }
            (json!({ "family": "mycielski", "iterations": a.iterations, "base_n": g.n() }), g)
        }
        Family::GeneralizedMycielski => {
            let levels = need(a.levels, "levels")?;
            let g = generators::generalized_mycielski(&base(ctx)?, levels)?;
            (json!({ "family": "generalized-mycielski", "levels": levels }), g)
        }
        Family::Gkr => {
            let (k, r) = (need(a.k, "k")?, need(a.r, "r")?);
            let (g, rep) = generators::g_kr_with_chi_limit(k, r, ctx.cfg.limits.chi_n)?;
            report = to_value(&rep);
            (to_value(&GeneratorSpec::Gkr { k, r }), g)
        }
        Family::Complete => simple(GeneratorSpec::Complete { t: need(a.t.or(a.n), "t")? })?,
        Family::CompleteBipartite => simple(GeneratorSpec::CompleteBipartite { d: need(a.d.or(a.n), "d")? })?,
        Family::Cycle => simple(GeneratorSpec::Cycle { n: need(a.n, "n")? })?,
        Family::Path => simple(GeneratorSpec::Path { n: need(a.n, "n")? })?,
        Family::Petersen => simple(GeneratorSpec::Petersen)?,
        Family::RandomTriangleFree => simple(GeneratorSpec::RandomTriangleFree {
            n: need(a.n, "n")?,
            edge_budget: need(a.edge_budget, "edge-budget")?,
            seed: ctx.cfg.seeds.master,
        })?,
    };
    if let Some(path) = &a.out {
        let format = match a.format {
            Some(OutFormat::Json) => GraphFormat::EdgeListJson,
            Some(OutFormat::Graph6) => GraphFormat::Graph6,
            None => match path.extension().and_then(|e| e.to_str()) {
                Some("g6") | Some("graph6") => GraphFormat::Graph6,
                _ => GraphFormat::EdgeListJson,
            },
        };
        std::fs::write(path, io::write_graph(&g, format)).with_context(|| format!("writing {}", path.display()))?;
    }
    let graph: Value = serde_json::from_str(&io::to_edge_list_json(&g)).map_err(|e| Error::Validation(e.to_string()))?;
    Ok(json!({
        "spec": spec,
        "n": g.n(),
        "m": g.edge_count(),
        "graph6": io::to_graph6(&g),
        "graph": graph,
        "report": report,
    }))
}

fn simple(s: GeneratorSpec) -> anyhow::Result<(Value, Graph)> {
    let g = s.build()?;
    Ok((to_value(&s), g))
}
