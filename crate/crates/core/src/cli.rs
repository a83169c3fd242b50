//! Command-line front end for the `hfree` binary.
//!
//! [`run`] parses arguments, executes one command and returns the process exit
//! code: 0 when the command completed, 1 on input errors, 2 when a search
//! budget ran out.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::verdict;
use crate::error::{Error, Result};
use crate::fpt::{solve_hfree, Mode, SolverConfig};
use crate::graph::{find_induced, AlphaSearch, Graph, HPattern, VertexSet, PATTERN_CAP};
use crate::hardness::{build_construction, gen_grid_tiling, lift_solution, or_compose, Variant};
use crate::io::{emit_graph_with_comments, parse_graph};
use crate::kernelize::{kernel_clique_minus_edge, kernel_krfree, kernel_paw_like, turing_kernel_star, KernelResult, KernelVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(name = "hfree", version, about = "Maximum independent set in H-free graphs")]
pub struct RunConfig {
    /// Seed for every randomized step.
    #[arg(long, env = "HFREE_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    /// Search-node limit for exact searches and the solver recursion.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: u64,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether an H-free graph has an independent set of size k.
    Solve(SolveArgs),
    /// Shrink an instance with a kernelization.
    Kernel(KernelArgs),
    /// Complexity verdict for a fixed pattern.
    Classify(ClassifyArgs),
    /// Emit a hardness instance or a composition of graphs.
    Generate(GenerateArgs),
    /// Exact independence number by branch and bound.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Faithful,
    Desk,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Forbidden pattern, e.g. `2K2`, `K5-K2`, `K6-K3`, `gem`.
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Desk)]
    pub mode: ModeArg,
    #[arg(long)]
    pub colorings: Option<usize>,
    #[arg(long)]
    pub gem_runs: Option<usize>,
    #[arg(long)]
    pub separations: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelRule {
    /// `K_r`-free graphs.
    Krfree,
    /// `(K_r \ K_{1,2})`-free graphs, r >= 4.
    PawLike,
    /// `(K_r \ K_2)`-free graphs.
    CliqueMinusEdge,
    /// Turing kernel for `(K_r \ K_{1,r-2})`-free graphs.
    Turing,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub rule: KernelRule,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub pattern: String,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).args(["gridtiling", "or_compose"])))]
pub struct GenerateArgs {
    /// Grid Tiling parameters as `k=<k> m=<m> n=<tiles per cell>`.
    #[arg(long, num_args = 3, value_names = ["k=K", "m=M", "n=N"])]
    pub gridtiling: Option<Vec<String>>,
    #[arg(long, default_value = "first")]
    pub variant: String,
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long)]
    pub planted: bool,
    /// Graph files to combine by join: alpha of the result is the largest alpha among them.
    #[arg(long, num_args = 1..)]
    pub or_compose: Option<Vec<PathBuf>>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config) {
        Ok(report) => {
            let written = match &config.output {
                Some(path) => fs::write(path, &report).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(report.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_INPUT
                }
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

enum Failure {
    Io(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn fmt_set(set: &VertexSet) -> String {
    set.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn execute(config: &RunConfig) -> Result<String, Failure> {
    let mut out = String::new();
    match &config.command {
        Command::Solve(args) => solve(config, args, &mut out)?,
        Command::Kernel(args) => kernel(config, args, &mut out)?,
        Command::Classify(args) => classify(config, args, &mut out)?,
        Command::Generate(args) => generate(config, args, &mut out)?,
        Command::Oracle(args) => oracle(config, args, &mut out)?,
    }
    Ok(out)
}

fn ensure_free(g: &Graph, h: &HPattern) -> Result<()> {
    if h.n() <= PATTERN_CAP {
        if let Some(emb) = find_induced(g, h)? {
            return Err(crate::error::Violation::new(h.to_string(), Some(emb.iter().map(|v| v + 1).collect())).into());
        }
    }
    Ok(())
}

fn solve(config: &RunConfig, args: &SolveArgs, out: &mut String) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let h = HPattern::parse(&args.pattern)?;
    ensure_free(&g, &h)?;
    let mut solver = SolverConfig::with_seed(config.seed);
    solver.mode = match args.mode {
        ModeArg::Faithful => Mode::Faithful,
        ModeArg::Desk => Mode::Desk,
    };
    solver.budget = config.budget;
    solver.colorings = args.colorings;
    solver.gem_runs = args.gem_runs;
    if let Some(s) = args.separations {
        solver.separations = s;
    }
    let found = solve_hfree(&g, args.k, &h, &solver)?;
    let _ = writeln!(out, "seed: {}", config.seed);
    let _ = writeln!(out, "pattern: {h}");
    let _ = writeln!(out, "n: {}", g.n());
    let _ = writeln!(out, "k: {}", args.k);
    match found {
        Some(set) => {
            let _ = writeln!(out, "decision: yes");
            let _ = writeln!(out, "witness: {}", fmt_set(&set));
        }
        None => {
            let _ = writeln!(out, "decision: no");
        }
    }
    Ok(())
}

fn kernel(config: &RunConfig, args: &KernelArgs, out: &mut String) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let (r, k) = (args.r, args.k);
    let result: KernelResult = match args.rule {
        KernelRule::Krfree => kernel_krfree(&g, k, r)?,
        KernelRule::PawLike => kernel_paw_like(&g, k, r)?,
        KernelRule::CliqueMinusEdge => kernel_clique_minus_edge(&g, k, r)?,
        KernelRule::Turing => return turing(config, &g, k, r, out),
    };
    let mut comments = vec![
        format!("seed {}", config.seed),
        format!("kernel {:?} r={r} k={k}", args.rule),
        format!("input vertices {}", g.n()),
        format!("k' = {}", result.k_out),
    ];
    match &result.verdict {
        KernelVerdict::Reduced => comments.push("verdict reduced".into()),
        KernelVerdict::SolvedYes(set) => comments.push(format!("verdict yes, witness {}", fmt_set(set))),
        KernelVerdict::SolvedNo => comments.push("verdict no".into()),
    }
    for rule in &result.trace {
        comments.push(format!("rule {rule:?}"));
    }
    let kept: Vec<String> = result.kept.iter().map(|v| (v + 1).to_string()).collect();
    comments.push(format!("kept {}", kept.join(" ")));
    out.push_str(&emit_graph_with_comments(&result.reduced, &comments));
    Ok(())
}

fn turing(config: &RunConfig, g: &Graph, k: usize, r: usize, out: &mut String) -> Result<(), Failure> {
    let outputs = turing_kernel_star(g, k, r)?;
    let _ = writeln!(out, "seed: {}", config.seed);
    let _ = writeln!(out, "kernel: turing r={r} k={k}");
    let components = g.connected_components();
    for (idx, o) in outputs.iter().enumerate() {
        let comp = idx / k.max(1);
        let sizes: Vec<String> = o.subinstances.iter().map(|s| format!("{}/{}", s.graph.n(), s.k)).collect();
        let _ = writeln!(
            out,
            "component {} (size {}) target {}: {}",
            comp + 1,
            components[comp].len(),
            o.target,
            match &o.immediate {
                Some(_) => "immediate yes".to_string(),
                None => format!("{} subinstances [{}]", o.subinstances.len(), sizes.join(" ")),
            }
        );
    }
    let mut total = 0;
    for chunk in outputs.chunks(k.max(1)) {
        let mut best = 0;
        for o in chunk {
            if o.decide(config.budget)? {
                best = best.max(o.target);
            }
        }
        total += best;
    }
    let _ = writeln!(out, "decision: {}", if total >= k { "yes" } else { "no" });
    Ok(())
}

fn classify(config: &RunConfig, args: &ClassifyArgs, out: &mut String) -> Result<(), Failure> {
    let h = HPattern::parse(&args.pattern)?;
    let v = verdict(&h);
    let _ = writeln!(out, "seed: {}", config.seed);
    let _ = writeln!(out, "pattern: {h} ({} vertices, {} edges)", h.n(), h.graph().edge_count());
    let _ = writeln!(out, "complexity: {}", v.complexity);
    let _ = writeln!(out, "kernel: {}", v.kernel);
    for rule in &v.rules_fired {
        let _ = writeln!(out, "rule: {rule}");
    }
    Ok(())
}

fn parse_gt_params(raw: &[String]) -> Result<(usize, usize, usize)> {
    let (mut k, mut m, mut n) = (None, None, None);
    for item in raw {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("expected key=value, got {item:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{key} must be a non-negative integer")))?;
        match key {
            "k" => k = Some(value),
            "m" => m = Some(value),
            "n" | "n_t" => n = Some(value),
            _ => return Err(Error::InvalidInput(format!("unknown grid tiling parameter {key:?}"))),
        }
    }
    match (k, m, n) {
        (Some(k), Some(m), Some(n)) => Ok((k, m, n)),
        _ => Err(Error::InvalidInput("grid tiling needs k=, m= and n=".into())),
    }
}

fn generate(config: &RunConfig, args: &GenerateArgs, out: &mut String) -> Result<(), Failure> {
    if let Some(files) = &args.or_compose {
        let graphs = files.iter().map(|f| read_graph(f)).collect::<Result<Vec<_>, _>>()?;
        let composed = or_compose(&graphs)?;
        let mut comments = vec![format!("seed {}", config.seed), format!("join of {} graphs", graphs.len())];
        comments.extend(files.iter().zip(&graphs).map(|(f, g)| format!("part {} ({} vertices)", f.display(), g.n())));
        out.push_str(&emit_graph_with_comments(&composed, &comments));
        return Ok(());
    }
    let raw = args.gridtiling.as_deref().unwrap_or_default();
    let (k, m, n_t) = parse_gt_params(raw)?;
    let variant: Variant = args.variant.parse()?;
    let (gt, planted) = gen_grid_tiling(k, m, n_t, args.planted, config.seed)?;
    let built = build_construction(&gt, variant, args.p)?;
    let mut comments = vec![
        format!("seed {}", config.seed),
        format!("grid tiling k={k} m={m} n={n_t}"),
        format!("construction variant={variant} p={}", args.p),
        format!("k'={}", built.k_prime),
    ];
    for i in 0..k {
        for j in 0..k {
            let tile: Vec<String> = gt.tile(i, j).iter().map(|(a, b)| format!("({a},{b})")).collect();
            comments.push(format!("tile {},{}: {}", i + 1, j + 1, tile.join(" ")));
        }
    }
    if let Some(sol) = &planted {
        let picks: Vec<String> = sol.choice.iter().flatten().map(|x| (x + 1).to_string()).collect();
        comments.push(format!("planted choice {}", picks.join(" ")));
        let lifted = lift_solution(sol, &built)?;
        comments.push(format!("planted independent set {}", fmt_set(&lifted)));
    }
    out.push_str(&emit_graph_with_comments(&built.graph, &comments));
    Ok(())
}

fn oracle(config: &RunConfig, args: &OracleArgs, out: &mut String) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let result = AlphaSearch::new(&g).budget(config.budget).run().map_err(Error::from)?;
    let _ = writeln!(out, "seed: {}", config.seed);
    let _ = writeln!(out, "alpha = {}", result.alpha);
    let _ = writeln!(out, "witness: {}", fmt_set(&result.witness));
    Ok(())
}
