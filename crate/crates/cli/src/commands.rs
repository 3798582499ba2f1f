//! Argument grammar and the subcommands.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use vdgame_core::generate::{generate, GraphFamily, ThresholdStep};
use vdgame_core::kernel::{kernelize, PathCatalog, DEFAULT_L_MAX};
use vdgame_core::reductions::{
    avoidtrue_to_csgk, gi_gadget, ndnk_gadget, nk_to_csg, DnfFormula, Gadget, NdnkOptions, SplitVariant,
};
use vdgame_core::solver::{detect_period, grundy_sequence, SequenceFamily};
use vdgame_core::structure::{feedback_edge_number, girth, is_bipartite, is_split};
use vdgame_core::symmetry::{find_edge_disjoint_involution, verify_symmetry_strategy_under};
use vdgame_core::tractable::{clique_tree_outcome, threshold_outcome, tree_outcome};
use vdgame_core::{solve_grundy, solve_outcome, Graph, Outcome, Ruleset};

use crate::formats::{parse_catalog, parse_dnf, parse_graph, write_catalog, write_dnf, write_graph, write_map};
use crate::suites::{run_suite, SUITES};
use crate::{exit, CliError};

#[derive(Parser)]
#[command(name = "vdgame", version, about = "Exact solver and transformation lab for vertex-deletion games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outcome (and optionally Grundy value) of a game on a graph.
    Solve(SolveArgs),
    /// Grundy values on paths or cycles of orders 1..=N.
    Sequence(SequenceArgs),
    /// Non-disconnecting Arc-Kayles kernel by feedback edge number.
    Kernelize(KernelizeArgs),
    /// Build a reduction gadget.
    Reduce(ReduceArgs),
    /// Graph with an edge-disjoint involution iff the two inputs are isomorphic.
    GiGadget(GiArgs),
    /// Look for an edge-disjoint involution and check the mirror strategy.
    Symmetry(SymmetryArgs),
    /// Write a generated graph or formula.
    Gen(GenArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// arc-kayles, node-kayles, nd-node-kayles, ndak or csg:K[,K...]
    #[arg(long)]
    game: String,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    grundy: bool,
    /// Use the tree, clique-tree or threshold algorithm when one applies (csg:2 only).
    #[arg(long)]
    fast: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
}

#[derive(Args)]
struct SequenceArgs {
    #[arg(long)]
    game: String,
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    detect_period: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KernelizeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Catalog file; built and written there if it does not exist yet.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long)]
    lmax: Option<usize>,
    /// Write the kernel as an edge list.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Solve the kernel exhaustively when it was not resolved outright.
    #[arg(long)]
    solve: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceFrom {
    NodeKayles,
    AvoidTrue,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceTo {
    Csg,
    NdNodeKayles,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    from: ReduceFrom,
    #[arg(long, value_enum, default_value_t = ReduceTo::Csg)]
    to: ReduceTo,
    #[arg(long)]
    input: PathBuf,
    /// Subtraction set for node-kayles, e.g. 2,3.
    #[arg(long)]
    set: Option<String>,
    /// Order of the moves for avoid-true.
    #[arg(long)]
    k: Option<usize>,
    /// Subdivide until the gadget has at least this girth.
    #[arg(long)]
    girth: Option<usize>,
    /// Avoid-true without the anchoring clique vertex.
    #[arg(long)]
    plain: bool,
    /// Edge list; the provenance map goes next to it with extension .map.
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GiArgs {
    #[arg(long)]
    g1: PathBuf,
    #[arg(long)]
    g2: PathBuf,
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SymmetryArgs {
    #[arg(long)]
    input: PathBuf,
    /// Ruleset under which the mirror strategy is played.
    #[arg(long, default_value = "arc-kayles")]
    game: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    /// path:N, cycle:N, star:Q, spider:A,B,C, grid:RxC, complete:N,
    /// clique-tree:S1,S2,..., threshold:WORD, split:K,S,DENSITY, random:N,M,
    /// lowfen:N,FEN, theta:N or dnf:N,M
    #[arg(long)]
    family: String,
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

/// A report: `key: value` lines as text, or one JSON object with a schema tag.
struct Record {
    schema: &'static str,
    fields: Vec<(&'static str, Value)>,
    /// Extra text lines printed after the fields.
    tail: Vec<String>,
}

impl Record {
    fn new(schema: &'static str) -> Self {
        Record { schema, fields: Vec::new(), tail: Vec::new() }
    }

    fn put(&mut self, key: &'static str, value: impl Into<Value>) {
        self.fields.push((key, value.into()));
    }

    fn emit(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            let mut map = Map::new();
            map.insert("schema".into(), self.schema.into());
            for (k, v) in &self.fields {
                map.insert((*k).into(), v.clone());
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(map)).expect("serializable"))
        } else {
            for (k, v) in &self.fields {
                writeln!(out, "{k}: {}", text(v))?;
            }
            for line in &self.tail {
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(text).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    exit::OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    exit::USAGE
                }
            };
        }
    };
    let (json, result) = match cli.command {
        Command::Solve(a) => (a.json, solve(a)),
        Command::Sequence(a) => (a.json, sequence(a)),
        Command::Kernelize(a) => (a.json, kernel(a)),
        Command::Reduce(a) => (a.json, reduce(a)),
        Command::GiGadget(a) => (a.json, gi(a)),
        Command::Symmetry(a) => (a.json, symmetry(a)),
        Command::Gen(a) => (false, gen(a)),
        Command::Verify(a) => (a.json, verify(a)),
    };
    match result {
        Ok((record, code)) => {
            if let Err(e) = record.emit(json, out) {
                let _ = writeln!(err, "error: writing output: {e}");
                return exit::INPUT;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}

/// The report to print and the exit code.
type CommandResult = Result<(Record, i32), CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn ruleset(s: &str) -> Result<Ruleset, CliError> {
    s.parse().map_err(|e: vdgame_core::Error| CliError::usage(format!("--game: {e}")))
}

fn fast_outcome(g: &Graph) -> Option<(&'static str, Outcome)> {
    if let Ok((o, _)) = tree_outcome(g) {
        return Some(("tree", o));
    }
    if let Ok((o, _)) = clique_tree_outcome(g) {
        return Some(("clique-tree", o));
    }
    threshold_outcome(g).ok().map(|o| ("threshold", o))
}

fn solve(a: SolveArgs) -> CommandResult {
    let rs = ruleset(&a.game)?;
    let g = read_graph(&a.input)?;
    let mut r = Record::new("vdgame.solve/1");
    r.put("game", rs.to_string());
    r.put("vertices", g.vertex_count());
    r.put("edges", g.edge_count());
    let fast = if a.fast && !a.grundy && rs == Ruleset::ndak() && g.vertex_count() > 0 { fast_outcome(&g) } else { None };
    if let Some((method, o)) = fast {
        r.put("method", method);
        r.put("outcome", o.as_str());
        r.put("grundy", Value::Null);
        r.put("best_move", Value::Null);
        r.put("nodes_expanded", Value::Null);
        return Ok((r, exit::OK));
    }
    let rep = if a.grundy { solve_grundy(&rs, &g, &g.all())? } else { solve_outcome(&rs, &g, &g.all())? };
    r.put("method", "exhaustive");
    r.put("outcome", rep.outcome.as_str());
    r.put("grundy", rep.grundy.map_or(Value::Null, Value::from));
    r.put("best_move", rep.best_move.map_or(Value::Null, |m| json!(m.vertices())));
    r.put("nodes_expanded", rep.nodes_expanded);
    Ok((r, exit::OK))
}

fn sequence(a: SequenceArgs) -> CommandResult {
    let rs = ruleset(&a.game)?;
    let family = match a.family {
        Family::Path => SequenceFamily::Path,
        Family::Cycle => SequenceFamily::Cycle,
    };
    let values = grundy_sequence(&rs, family, a.max_n)?;
    let mut r = Record::new("vdgame.sequence/1");
    r.put("game", rs.to_string());
    r.put("family", if matches!(a.family, Family::Path) { "path" } else { "cycle" });
    r.put("max_n", a.max_n);
    r.put("values", json!(values));
    if a.detect_period {
        match detect_period(&values) {
            Some((p, d)) => {
                r.put("preperiod", p);
                r.put("period", d);
            }
            None => {
                r.put("preperiod", Value::Null);
                r.put("period", Value::Null);
            }
        }
    }
    Ok((r, exit::OK))
}

fn load_catalog(path: Option<&Path>, lmax: Option<usize>, notes: &mut Vec<String>) -> Result<PathCatalog, CliError> {
    let build = |l: usize| PathCatalog::build(l, &[vdgame_core::kernel::Decoration::Bare, vdgame_core::kernel::Decoration::Leaf]);
    match path {
        Some(p) if p.exists() => {
            let cat = parse_catalog(&read(p)?).map_err(|e| CliError::input(format!("{}: {e}", p.display())))?;
            if lmax.is_some_and(|l| l != cat.l_max()) {
                notes.push(format!("note: using lmax {} from {}", cat.l_max(), p.display()));
            }
            Ok(cat)
        }
        Some(p) => {
            let cat = build(lmax.unwrap_or(DEFAULT_L_MAX)).map_err(|e| CliError::usage(format!("--lmax: {e}")))?;
            write_file(p, &write_catalog(&cat))?;
            notes.push(format!("note: wrote catalog to {}", p.display()));
            Ok(cat)
        }
        None => build(lmax.unwrap_or(DEFAULT_L_MAX)).map_err(|e| CliError::usage(format!("--lmax: {e}"))),
    }
}

fn kernel(a: KernelizeArgs) -> CommandResult {
    let g = read_graph(&a.input)?;
    let mut notes = Vec::new();
    let cat = load_catalog(a.catalog.as_deref(), a.lmax, &mut notes)?;
    let rep = kernelize(&g, &cat)?;
    let mut r = Record::new("vdgame.kernelize/1");
    r.put("original_vertices", rep.original_vertices);
    r.put("original_edges", rep.original_edges);
    r.put("fen", rep.fen);
    r.put("catalog_lmax", cat.l_max());
    r.put("catalog_entries", cat.len());
    for (i, key) in ["rule1_delta", "rule2_delta", "rule3_delta", "rule4_delta"].into_iter().enumerate() {
        r.put(key, rep.rule_deltas[i]);
    }
    r.put("kernel_vertices", rep.vertices());
    r.put("kernel_edges", rep.edges());
    r.put("kernel_fen", feedback_edge_number(&rep.instance.graph));
    r.put("branch_vertices", rep.branch_vertices);
    r.put("branch_bound", rep.branch_bound);
    r.put("unmatched_segments", rep.unmatched_segments);
    let outcome = match rep.outcome() {
        Some(o) => Some((o, "resolved")),
        None if a.solve => Some((solve_outcome(&Ruleset::ndak(), &rep.instance.graph, &rep.instance.graph.all())?.outcome, "solved")),
        None => None,
    };
    r.put("outcome", outcome.map_or(Value::Null, |(o, _)| o.as_str().into()));
    r.put("outcome_source", outcome.map_or(Value::Null, |(_, s)| s.into()));
    let trace: Vec<Value> = rep
        .instance
        .trace
        .iter()
        .map(|t| json!({"rule": t.rule, "removed": t.removed, "added": t.added, "note": t.note}))
        .collect();
    r.tail = rep.instance.trace.iter().map(|t| format!("rule {}: -{} +{} {}", t.rule, t.removed, t.added, t.note)).collect();
    r.put("trace", Value::Array(trace));
    if let Some(p) = &a.output {
        write_file(p, &write_graph(&rep.instance.graph))?;
    }
    r.tail.extend(notes);
    // The trace is printed line by line in text mode.
    if !a.json {
        r.fields.retain(|(k, _)| *k != "trace");
    }
    Ok((r, exit::OK))
}

fn parse_list(s: &str, flag: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::usage(format!("{flag}: expected a comma-separated list of integers, got {s:?}")))
}

fn map_path(output: &Path) -> PathBuf {
    output.with_extension("map")
}

fn write_gadget(g: &Gadget, output: &Path, r: &mut Record) -> Result<(), CliError> {
    write_file(output, &write_graph(&g.graph))?;
    let map = map_path(output);
    write_file(&map, &write_map(g))?;
    r.put("vertices", g.graph.vertex_count());
    r.put("edges", g.graph.edge_count());
    r.put("output", output.display().to_string());
    r.put("map", map.display().to_string());
    Ok(())
}

fn reduce(a: ReduceArgs) -> CommandResult {
    let mut r = Record::new("vdgame.reduce/1");
    match a.from {
        ReduceFrom::NodeKayles => {
            if a.k.is_some() || a.plain {
                return Err(CliError::usage("--k and --plain apply to --from avoid-true"));
            }
            let g = read_graph(&a.input)?;
            let gadget = match a.to {
                ReduceTo::Csg => {
                    let set = parse_list(a.set.as_deref().ok_or_else(|| CliError::usage("--from node-kayles needs --set"))?, "--set")?;
                    let out = nk_to_csg(&g, &set, a.girth)?;
                    r.put("target", Ruleset::csg(&set)?.to_string());
                    r.put("subdivision_rounds", out.subdivision_rounds);
                    out.gadget
                }
                ReduceTo::NdNodeKayles => {
                    if a.set.is_some() || a.girth.is_some() {
                        return Err(CliError::usage("--set and --girth apply to --to csg"));
                    }
                    r.put("target", Ruleset::NdNodeKayles.to_string());
                    ndnk_gadget(&g, NdnkOptions::default())?
                }
            };
            r.put("source", "node-kayles");
            write_gadget(&gadget, &a.output, &mut r)?;
            r.put("girth", girth(&gadget.graph).map_or(Value::Null, Value::from));
            r.put("bipartite", is_bipartite(&gadget.graph));
        }
        ReduceFrom::AvoidTrue => {
            if a.set.is_some() || a.girth.is_some() || a.to != ReduceTo::Csg {
                return Err(CliError::usage("--from avoid-true takes --k (and optionally --plain) only"));
            }
            let k = a.k.ok_or_else(|| CliError::usage("--from avoid-true needs --k"))?;
            let f: DnfFormula =
                parse_dnf(&read(&a.input)?).map_err(|e| CliError::input(format!("{}: {e}", a.input.display())))?;
            let variant = if a.plain { SplitVariant::Plain } else { SplitVariant::Anchored };
            let gadget = avoidtrue_to_csgk(&f, k, variant)?;
            r.put("source", "avoid-true");
            r.put("target", Ruleset::csg(&[k])?.to_string());
            r.put("variant", if a.plain { "plain" } else { "anchored" });
            write_gadget(&gadget, &a.output, &mut r)?;
            r.put("split", is_split(&gadget.graph));
        }
    }
    Ok((r, exit::OK))
}

fn gi(a: GiArgs) -> CommandResult {
    let (g1, g2) = (read_graph(&a.g1)?, read_graph(&a.g2)?);
    let gadget = gi_gadget(&g1, &g2);
    let mut r = Record::new("vdgame.gi-gadget/1");
    write_gadget(&gadget, &a.output, &mut r)?;
    Ok((r, exit::OK))
}

fn symmetry(a: SymmetryArgs) -> CommandResult {
    let rs = ruleset(&a.game)?;
    let g = read_graph(&a.input)?;
    let mut r = Record::new("vdgame.symmetry/1");
    r.put("vertices", g.vertex_count());
    let Some(f) = find_edge_disjoint_involution(&g)? else {
        r.put("involution", "none");
        return Ok((r, exit::NEGATIVE));
    };
    r.put("involution", "found");
    let check = verify_symmetry_strategy_under(&rs, &g, &f, a.seed)?;
    r.put("game", rs.to_string());
    r.put("mirror_strategy", if check.holds { "holds" } else { "fails" });
    r.put("exhaustive", check.exhaustive);
    r.put("positions_checked", check.positions_checked);
    r.put(
        "counterexample",
        check.counterexample.as_ref().map_or(Value::Null, |line| json!(line.iter().map(|m| m.vertices()).collect::<Vec<_>>())),
    );
    r.put("solved_outcome", check.solved_outcome.map_or(Value::Null, |o| o.as_str().into()));
    r.put("certificate", json!(check.certificate.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()));
    if !a.json {
        r.fields.retain(|(k, _)| *k != "certificate");
        r.tail = check.certificate.iter().map(|(u, v)| format!("{u} <-> {v}")).collect();
    }
    Ok((r, exit::OK))
}

enum Generated {
    Graph(GraphFamily),
    /// Random positive DNF with `n` variables and `m` clauses.
    Dnf(usize, usize),
}

/// `name:args` for [`gen`].
fn parse_family(spec: &str, seed: u64) -> Result<Generated, CliError> {
    let bad = || CliError::usage(format!("--family: cannot parse {spec:?}"));
    let (name, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums = |want: usize| -> Result<Vec<usize>, CliError> {
        let v = parse_list(args, "--family")?;
        if v.len() == want { Ok(v) } else { Err(bad()) }
    };
    let one = || nums(1).map(|v| v[0]);
    Ok(Generated::Graph(match name {
        "path" => GraphFamily::Path(one()?),
        "cycle" => GraphFamily::Cycle(one()?),
        "star" => GraphFamily::Star(one()?),
        "complete" => GraphFamily::Complete(one()?),
        "theta" => GraphFamily::DecoratedTheta(one()?),
        "spider" => {
            let v = nums(3)?;
            GraphFamily::Spider(v[0], v[1], v[2])
        }
        "grid" => {
            let (r, c) = args.split_once('x').ok_or_else(bad)?;
            GraphFamily::Grid(r.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?)
        }
        "clique-tree" => GraphFamily::CliqueTree { seed, block_sizes: parse_list(args, "--family")? },
        "threshold" => GraphFamily::Threshold(ThresholdStep::parse_word(args).map_err(|e| CliError::usage(format!("--family: {e}")))?),
        "split" => {
            let parts: Vec<&str> = args.split(',').collect();
            let [k, s, d] = parts.as_slice() else { return Err(bad()) };
            GraphFamily::Split {
                seed,
                clique: k.trim().parse().map_err(|_| bad())?,
                stable: s.trim().parse().map_err(|_| bad())?,
                density: d.trim().parse().map_err(|_| bad())?,
            }
        }
        "random" => {
            let v = nums(2)?;
            GraphFamily::RandomConnected { n: v[0], m: v[1], seed }
        }
        "lowfen" => {
            let v = nums(2)?;
            GraphFamily::LowFen { n: v[0], fen: v[1], seed }
        }
        "dnf" => {
            let v = nums(2)?;
            return Ok(Generated::Dnf(v[0], v[1]));
        }
        _ => return Err(bad()),
    }))
}

fn gen(a: GenArgs) -> CommandResult {
    let mut r = Record::new("vdgame.gen/1");
    r.put("family", a.family.clone());
    r.put("seed", a.seed);
    match parse_family(&a.family, a.seed)? {
        Generated::Graph(family) => {
            let g = generate(&family).map_err(|e| CliError::usage(format!("--family: {e}")))?;
            write_file(&a.output, &write_graph(&g))?;
            r.put("vertices", g.vertex_count());
            r.put("edges", g.edge_count());
        }
        Generated::Dnf(n, m) => {
            let f = DnfFormula::random(a.seed, n, m)?;
            write_file(&a.output, &write_dnf(&f))?;
            r.put("variables", n);
            r.put("clauses", m);
        }
    }
    r.put("output", a.output.display().to_string());
    Ok((r, exit::OK))
}

fn verify(a: VerifyArgs) -> CommandResult {
    let report = run_suite(&a.suite, a.seed)
        .ok_or_else(|| CliError::usage(format!("unknown suite {:?}; expected one of {}", a.suite, SUITES.join(", "))))?;
    let mut r = Record::new("vdgame.verify/1");
    r.put("suite", report.suite.clone());
    r.put("seed", report.seed);
    let failed = report.cases.iter().filter(|c| !c.passed()).count();
    r.put("cases", report.cases.len());
    r.put("failed", failed);
    r.put("passed", report.passed());
    let cases: Vec<Value> = report
        .cases
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "checked": c.checked,
                "note": c.note,
                "passed": c.passed(),
                "failure": c.failure.as_ref().map(|f| json!({"detail": f.detail, "graph": f.graph})),
            })
        })
        .collect();
    if a.json {
        r.put("case_results", Value::Array(cases));
        if !report.passed() {
            r.put("reproducer", report.reproducer());
        }
    } else {
        for c in &report.cases {
            let counts = match &c.note {
                Some(n) => format!("{} checks; {n}", c.checked),
                None => format!("{} checks", c.checked),
            };
            match &c.failure {
                None => r.tail.push(format!("ok    {} ({counts})", c.name)),
                Some(f) => {
                    r.tail.push(format!("FAIL  {} ({counts}): {}", c.name, f.detail));
                    if let Some(g) = &f.graph {
                        r.tail.push("      counterexample:".into());
                        r.tail.extend(g.lines().map(|l| format!("      {l}")));
                    }
                }
            }
        }
        if !report.passed() {
            r.tail.push(format!("reproduce with: {}", report.reproducer()));
        }
    }
    Ok((r, if report.passed() { exit::OK } else { exit::NEGATIVE }))
}
