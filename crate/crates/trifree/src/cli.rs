//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use trifree_core::bounds::{linear_bound, small_p_checks, EdgeBudget};
use trifree_core::envelope::envelope_over;
use trifree_core::exact::{phi_polynomial, tf_profile};
use trifree_core::graph6::write_graph6;
use trifree_core::rational::{check_closed_unit, check_open_unit, parse_rational, to_f64, ParsedProbability};
use trifree_core::search::maximize_over;
use trifree_core::Graph;

use crate::error::{exit, CliError, Result};
use crate::formats::{parse_hypergraph, ClassRow};
use crate::input::{construct, read_stdin_graph, resolve_graph_arg, CONSTRUCTIONS};
use crate::parallel::{enumerate_parallel, estimate_parallel, par_map};
use crate::report::{ClaimDto, ClassesDto, EnvelopeDto, EstimateDto, HypergraphReport, OutputFormat, PhiReport, Render, SearchDto, VerifyReport};
use crate::verify::{candidate_claims, linear_bound_claims, ls_cases, ls_claim, t1_claims, EXHAUSTIVE_MAX_N};

#[derive(Debug, Parser)]
#[command(name = "trifree", version, about = "Probability that a Bernoulli random subgraph is triangle-free")]
pub struct Cli {
    /// Output format for data on stdout.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "TRIFREE_JOBS", default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact subgraph profile and polynomial, optionally evaluated at p.
    Phi {
        #[command(flatten)]
        graph: GraphSource,
        /// Probability as a fraction (1/3) or decimal (0.25).
        #[arg(long)]
        p: Option<String>,
        /// Clique order k (3 = triangles).
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Check the closed forms and bounds; exit 1 if any claim fails.
    ///
    /// With no selection, every check runs.
    Verify {
        /// One-edge optimum by exhaustive enumeration (all n <= 7 unless --n).
        #[arg(long)]
        t1: bool,
        /// Six-vertex candidates: polynomials, factorisation, crossover.
        #[arg(long = "section4")]
        candidates: bool,
        /// Triangle supersaturation by exhaustive enumeration.
        #[arg(long)]
        ls: bool,
        /// Linear-hypergraph bound over the fixed corpus.
        #[arg(long = "lemma")]
        linear_bound: bool,
        /// Restrict enumeration checks to this vertex count.
        #[arg(long)]
        n: Option<usize>,
        /// Restrict the triangle-count check to this edge excess.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Maximise Phi_p over all graphs with floor(n^2/4) + i edges.
    Search {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Edges above floor(n^2/4).
        #[arg(long)]
        i: usize,
        /// Probability as a fraction (1/3) or decimal (0.25).
        #[arg(long)]
        p: String,
        /// Evaluate every class instead of cutting off by the bound.
        #[arg(long)]
        no_prune: bool,
        /// Resumable enumeration state file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Report wall-clock time (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Upper envelope of Phi_p over p in (0, 1) with exact crossovers.
    Envelope {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Edges above floor(n^2/4).
        #[arg(long)]
        i: usize,
        /// Resumable enumeration state file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Every isomorphism class with n vertices and m edges, with Phi_p.
    Classes {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Edge count.
        #[arg(long)]
        m: usize,
        /// Resumable enumeration state file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Independent-set profile of a hypergraph file (`v r` header, one
    /// hyperedge per line) and the linear-hypergraph bound.
    Hypergraph {
        /// Hypergraph text file.
        #[arg(long)]
        file: PathBuf,
        /// Probability as a fraction (1/3) or decimal (0.25).
        #[arg(long)]
        p: Option<String>,
    },
    /// Seeded Monte Carlo estimate with a 95% Wilson interval.
    Mc {
        #[command(flatten)]
        graph: GraphSource,
        /// Probability as a fraction (1/3) or decimal (0.25).
        #[arg(long)]
        p: String,
        /// Number of sampled subgraphs.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Generator seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clique order k (3 = triangles).
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// graph6 string, graph file (graph6 or edge list), or construction name.
    #[arg(long)]
    pub graph: Option<String>,
    /// Named construction.
    #[arg(long, help = format!("Named construction: {CONSTRUCTIONS}"))]
    pub construct: Option<String>,
    /// Read one graph6 line from stdin.
    #[arg(long)]
    pub stdin: bool,
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match (&self.graph, &self.construct, self.stdin) {
            (Some(g), None, false) => resolve_graph_arg(g),
            (None, Some(c), false) => construct(c),
            (None, None, true) => read_stdin_graph(),
            _ => Err(CliError::Usage("give exactly one of --graph, --construct, --stdin".into())),
        }
    }
}

fn probability(text: &str) -> Result<ParsedProbability> {
    Ok(parse_rational(text)?)
}

struct Ctx<'a> {
    format: OutputFormat,
    jobs: usize,
    quiet: bool,
    err: &'a mut (dyn Write + Send),
}

impl Ctx<'_> {
    fn status(&mut self, msg: &str) {
        if !self.quiet {
            let _ = writeln!(self.err, "{msg}");
        }
    }
}

/// Runs one parsed command, writing data to `out` and progress to `err`.
/// Returns the process exit code for a completed run.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> Result<u8> {
    let mut ctx = Ctx { format: cli.format, jobs: cli.jobs, quiet: cli.quiet, err };
    match &cli.command {
        Command::Phi { graph, p, k } => cmd_phi(&mut ctx, out, &graph.load()?, p.as_deref(), *k),
        Command::Verify { t1, candidates, ls, linear_bound, n, i } => {
            let all = !(*t1 || *candidates || *ls || *linear_bound);
            cmd_verify(&mut ctx, out, VerifySelection { t1: *t1 || all, candidates: *candidates || all, ls: *ls || all, linear_bound: *linear_bound || all, n: *n, i: *i })
        }
        Command::Search { n, i, p, no_prune, checkpoint, timing } => {
            cmd_search(&mut ctx, out, *n, *i, &probability(p)?, !no_prune, checkpoint.as_ref(), *timing)
        }
        Command::Envelope { n, i, checkpoint } => cmd_envelope(&mut ctx, out, *n, *i, checkpoint.as_ref()),
        Command::Classes { n, m, checkpoint } => cmd_classes(&mut ctx, out, *n, *m, checkpoint.as_ref()),
        Command::Hypergraph { file, p } => cmd_hypergraph(&mut ctx, out, file, p.as_deref()),
        Command::Mc { graph, p, samples, seed, k } => cmd_mc(&mut ctx, out, &graph.load()?, &probability(p)?, *samples, *seed, *k),
    }
}

fn cmd_phi(ctx: &mut Ctx<'_>, out: &mut dyn Write, g: &Graph, p: Option<&str>, k: usize) -> Result<u8> {
    let prof = tf_profile(g, k)?;
    let phi = phi_polynomial(g, k)?;
    let p = p.map(probability).transpose()?;
    if let Some(p) = &p {
        check_closed_unit(&p.value)?;
    }
    let value = p.as_ref().map(|p| phi.eval(&p.value));
    let checks = if k == 3 { small_p_checks(g)?.iter().map(ClaimDto::from).collect() } else { Vec::new() };
    let report = PhiReport {
        graph6: write_graph6(g),
        n: g.vertex_count(),
        m: g.edge_count(),
        triangles: g.triangle_count(),
        clique_order: k,
        profile: prof.counts.iter().map(ToString::to_string).collect(),
        polynomial: (&phi).into(),
        polynomial_text: phi.to_text(),
        p: p.as_ref().map(Into::into),
        value_approx: value.as_ref().map(to_f64),
        value: value.map(|v| v.to_string()),
        checks,
    };
    report.write(ctx.format, out)?;
    Ok(exit::SUCCESS)
}

struct VerifySelection {
    t1: bool,
    candidates: bool,
    ls: bool,
    linear_bound: bool,
    n: Option<usize>,
    i: Option<usize>,
}

fn cmd_verify(ctx: &mut Ctx<'_>, out: &mut dyn Write, sel: VerifySelection) -> Result<u8> {
    if let Some(n) = sel.n {
        if n > EXHAUSTIVE_MAX_N {
            return Err(trifree_core::Error::LimitExceeded { what: "n for exhaustive verification", value: n, limit: EXHAUSTIVE_MAX_N }.into());
        }
    }
    let (jobs, quiet) = (ctx.jobs, ctx.quiet);
    let progress = move |done: u64, total: u64| {
        if !quiet && done == total {
            eprintln!("  enumerated {total} labeled graphs");
        }
    };
    let mut claims = Vec::new();
    if sel.candidates {
        ctx.status("checking the six-vertex candidates");
        claims.extend(candidate_claims()?);
    }
    if sel.t1 {
        let ns: Vec<usize> = match sel.n {
            Some(n) => vec![n],
            None => (3..=EXHAUSTIVE_MAX_N).collect(),
        };
        for n in ns {
            ctx.status(&format!("one-edge optimum at n={n}"));
            claims.extend(t1_claims(n, jobs, &progress)?);
        }
    }
    if sel.ls {
        let cases: Vec<(usize, usize)> = match (sel.n, sel.i) {
            (Some(n), Some(i)) => vec![(n, i)],
            (Some(n), None) => ls_cases(n).into_iter().filter(|c| c.0 == n).collect(),
            (None, _) => ls_cases(EXHAUSTIVE_MAX_N),
        };
        for (n, i) in cases {
            ctx.status(&format!("triangle count at n={n} i={i}"));
            claims.push(ls_claim(n, i, jobs, &progress)?);
        }
    }
    if sel.linear_bound {
        ctx.status("linear-hypergraph bound over the corpus");
        claims.extend(linear_bound_claims()?);
    }
    let report = VerifyReport::new(&claims);
    report.write(ctx.format, out)?;
    Ok(if report.pass { exit::SUCCESS } else { exit::VERIFICATION_FAILED })
}

fn classes_for(ctx: &mut Ctx<'_>, n: usize, m: usize, checkpoint: Option<&PathBuf>) -> Result<Vec<Graph>> {
    let quiet = ctx.quiet;
    let progress = move |done: u64, total: u64| {
        if !quiet {
            eprintln!("  {done}/{total} labeled graphs");
        }
    };
    enumerate_parallel(n, m, ctx.jobs, checkpoint.map(PathBuf::as_path), &progress)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    ctx: &mut Ctx<'_>,
    out: &mut dyn Write,
    n: usize,
    i: usize,
    p: &ParsedProbability,
    prune: bool,
    checkpoint: Option<&PathBuf>,
    timing: bool,
) -> Result<u8> {
    check_open_unit(&p.value)?;
    let start = Instant::now();
    let budget = EdgeBudget::new(n, i)?;
    ctx.status(&format!("enumerating n={n} m={}", budget.m));
    let classes = classes_for(ctx, n, budget.m, checkpoint)?;
    let mut report = maximize_over(budget, &classes, &p.value, prune)?;
    if timing {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    SearchDto::new(&report, budget.m, p).write(ctx.format, out)?;
    Ok(exit::SUCCESS)
}

fn cmd_envelope(ctx: &mut Ctx<'_>, out: &mut dyn Write, n: usize, i: usize, checkpoint: Option<&PathBuf>) -> Result<u8> {
    let budget = EdgeBudget::new(n, i)?;
    ctx.status(&format!("enumerating n={n} m={}", budget.m));
    let classes = classes_for(ctx, n, budget.m, checkpoint)?;
    ctx.status(&format!("envelope over {} classes", classes.len()));
    EnvelopeDto::from(&envelope_over(budget, &classes)?).write(ctx.format, out)?;
    Ok(exit::SUCCESS)
}

fn cmd_classes(ctx: &mut Ctx<'_>, out: &mut dyn Write, n: usize, m: usize, checkpoint: Option<&PathBuf>) -> Result<u8> {
    let classes = classes_for(ctx, n, m, checkpoint)?;
    let rows = par_map(ctx.jobs, &classes, |g| phi_polynomial(g, 3).map(|phi| ClassRow::new(g, &phi)))?
        .into_iter()
        .collect::<trifree_core::Result<Vec<_>>>()?;
    ClassesDto { n, m, classes: rows }.write(ctx.format, out)?;
    Ok(exit::SUCCESS)
}

fn cmd_hypergraph(ctx: &mut Ctx<'_>, out: &mut dyn Write, file: &PathBuf, p: Option<&str>) -> Result<u8> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::io(file, e))?;
    let h = parse_hypergraph(&text)?;
    let p = p.map(probability).transpose()?;
    let profile = h.independence_profile()?;
    if let Some(p) = &p {
        check_closed_unit(&p.value)?;
    }
    let report = HypergraphReport {
        vertices: h.vertex_count(),
        hyperedges: h.edge_count(),
        linear: h.is_linear(),
        flower: h.is_flower(),
        profile: profile.counts.iter().map(ToString::to_string).collect(),
        probability: p.as_ref().map(|p| profile.probability(&p.value).to_string()),
        bound: p.as_ref().map(|p| linear_bound(h.edge_count()).eval(&p.value).to_string()),
        p: p.as_ref().map(Into::into),
    };
    report.write(ctx.format, out)?;
    Ok(exit::SUCCESS)
}

fn cmd_mc(ctx: &mut Ctx<'_>, out: &mut dyn Write, g: &Graph, p: &ParsedProbability, samples: u64, seed: u64, k: usize) -> Result<u8> {
    ctx.status(&format!("sampling {samples} subgraphs"));
    let e = estimate_parallel(g, k, &p.value, samples, seed, ctx.jobs)?;
    EstimateDto::new(&e, p).write(ctx.format, out)?;
    Ok(exit::SUCCESS)
}

/// Parses `args`, runs, and returns the exit code; errors are reported on
/// `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return exit::USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return exit::SUCCESS;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(h) = e.hint() {
                let _ = writeln!(err, "hint: {h}");
            }
            e.exit_code()
        }
    }
}
