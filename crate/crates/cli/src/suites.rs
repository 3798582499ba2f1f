//! Verification suites behind `vdgame verify`.
//!
//! Sweeps run in increasing graph order, so the first failure recorded in a
//! case is also a smallest one. Random corpora draw their seeds from one
//! ChaCha stream per case, keyed by the suite seed.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vdgame_core::corpus::{block_graphs, connected_graphs, connected_graphs_up_to, threshold_words, trees};
use vdgame_core::generate::{generate, threshold, GraphFamily};
use vdgame_core::iso::isomorphism;
use vdgame_core::kernel::{
    kernelize, kernelize_observed, rule1_trim_leaves, rule2_pair_tree_moves, rule3_replace_forests,
    rule4_replace_paths, word_string, Decoration, KernelInstance, PathCatalog,
};
use vdgame_core::reductions::{
    avoid_true_outcome, avoidtrue_to_csgk, gi_gadget, ndnk_gadget, nk_to_csg, DnfFormula, NdnkOptions, SplitVariant,
};
use vdgame_core::solver::{detect_period, grundy_sequence, octal_heap_values, subtraction_heap_grundy, SequenceFamily};
use vdgame_core::structure::{girth, is_bipartite, is_split};
use vdgame_core::symmetry::{
    check_involution, find_edge_disjoint_involution, verify_symmetry_strategy, verify_symmetry_strategy_under,
};
use vdgame_core::tractable::{clique_tree_outcome, threshold_outcome, threshold_partition, tree_outcome};
use vdgame_core::{legal_moves, solve_grundy, solve_outcome, Graph, GraphBuilder, Outcome, Ruleset, VertexSubset};

use crate::formats::write_graph;

pub const SUITES: [&str; 10] = [
    "trees",
    "clique-trees",
    "threshold",
    "kernel-rules",
    "reductions-nk",
    "reductions-ndnk",
    "reductions-split",
    "symmetry",
    "sequences",
    "gi",
];

#[derive(Clone, Debug)]
pub struct Failure {
    pub detail: String,
    /// Edge list of the offending graph, if there is one.
    pub graph: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub checked: usize,
    /// Extra facts worth printing, such as how often a rule fired.
    pub note: Option<String>,
    pub failure: Option<Failure>,
}

impl Case {
    fn new(name: impl Into<String>) -> Self {
        Case { name: name.into(), checked: 0, note: None, failure: None }
    }

    fn check(&mut self, ok: bool, g: Option<&Graph>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(Failure { detail: detail(), graph: g.map(write_graph) });
        }
    }

    /// Records a library error as a failure of this case.
    fn absorb<T>(&mut self, r: vdgame_core::Result<T>, g: Option<&Graph>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, g, || format!("error: {e}"));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(Case::passed)
    }

    pub fn reproducer(&self) -> String {
        format!("vdgame verify --suite {} --seed {}", self.suite, self.seed)
    }
}

/// Runs a suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let cases = match name {
        "trees" => suite_trees(),
        "clique-trees" => suite_clique_trees(seed),
        "threshold" => suite_threshold(),
        "kernel-rules" => suite_kernel_rules(seed),
        "reductions-nk" => suite_reductions_nk(),
        "reductions-ndnk" => suite_reductions_ndnk(),
        "reductions-split" => suite_reductions_split(seed),
        "symmetry" => suite_symmetry(seed),
        "sequences" => suite_sequences(),
        "gi" => suite_gi(),
        _ => return None,
    };
    Some(SuiteReport { suite: name.to_string(), seed, cases })
}

fn rng_for(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

fn outcome(rs: &Ruleset, g: &Graph) -> vdgame_core::Result<Outcome> {
    Ok(solve_outcome(rs, g, &g.all())?.outcome)
}

fn grundy(rs: &Ruleset, g: &Graph) -> vdgame_core::Result<u32> {
    Ok(solve_grundy(rs, g, &g.all())?.grundy.expect("grundy requested"))
}

/// Shortest and longest maximal play.
fn play_lengths(
    rs: &Ruleset,
    g: &Graph,
    alive: VertexSubset,
    memo: &mut HashMap<VertexSubset, (usize, usize)>,
) -> (usize, usize) {
    if let Some(&r) = memo.get(&alive) {
        return r;
    }
    let moves = legal_moves(rs, g, &alive);
    let r = if moves.is_empty() {
        (0, 0)
    } else {
        moves.iter().fold((usize::MAX, 0), |(lo, hi), m| {
            let (a, b) = play_lengths(rs, g, alive.difference(&m.removed), memo);
            (lo.min(a + 1), hi.max(b + 1))
        })
    };
    memo.insert(alive, r);
    r
}

fn suite_trees() -> Vec<Case> {
    let ndak = Ruleset::ndak();
    (1..=10)
        .map(|n| {
            let mut case = Case::new(format!("trees n={n}"));
            for t in trees(n) {
                let (lo, hi) = play_lengths(&ndak, &t, t.all(), &mut HashMap::new());
                case.check(lo == hi, Some(&t), || format!("maximal plays of length {lo} and {hi}"));
                let (Some((fast, moves)), Some(slow)) =
                    (case.absorb(tree_outcome(&t), Some(&t)), case.absorb(outcome(&ndak, &t), Some(&t)))
                else {
                    continue;
                };
                case.check(fast == slow && moves == lo, Some(&t), || {
                    format!("tree_outcome {fast} after {moves} moves, solver {slow}, play length {lo}")
                });
            }
            case
        })
        .collect()
}

fn compare_clique_tree(case: &mut Case, g: &Graph) {
    let ndak = Ruleset::ndak();
    if let (Some((fast, _)), Some(slow)) =
        (case.absorb(clique_tree_outcome(g), Some(g)), case.absorb(outcome(&ndak, g), Some(g)))
    {
        case.check(fast == slow, Some(g), || format!("clique_tree_outcome {fast}, solver {slow}"));
    }
}

fn suite_clique_trees(seed: u64) -> Vec<Case> {
    let mut cases: Vec<Case> = (1..=9)
        .map(|n| {
            let mut case = Case::new(format!("clique trees n={n}"));
            for g in block_graphs(n) {
                compare_clique_tree(&mut case, &g);
            }
            case
        })
        .collect();
    let mut rng = rng_for(seed, 1);
    let mut case = Case::new("random clique trees n<=12");
    for _ in 0..200 {
        let target = rng.gen_range(2..=12usize);
        let mut sizes = Vec::new();
        let mut n = 1;
        while n < target {
            let s = rng.gen_range(2..=5usize).min(target - n + 1);
            sizes.push(s);
            n += s - 1;
        }
        let family = GraphFamily::CliqueTree { seed: rng.gen(), block_sizes: sizes };
        if let Some(g) = case.absorb(generate(&family), None) {
            compare_clique_tree(&mut case, &g);
        }
    }
    cases.push(case);
    cases
}

fn suite_threshold() -> Vec<Case> {
    let ndak = Ruleset::ndak();
    let mut cases: Vec<Case> = (1..=7).map(|k| Case::new(format!("twin-free clique |K|={k}, |S|<=|K|+2"))).collect();
    for n in 1..=16 {
        for w in threshold_words(n) {
            let g = threshold(&w);
            let Ok(part) = threshold_partition(&g) else { continue };
            let k = part.clique_order();
            if !(1..=7).contains(&k) || part.stable.len() > k + 2 || !part.twin_free() {
                continue;
            }
            // Disconnected graphs and cliques without enough private neighbours
            // are outside the theorem.
            let Ok(fast) = threshold_outcome(&g) else { continue };
            let case = &mut cases[k - 1];
            if let Some(slow) = case.absorb(outcome(&ndak, &g), Some(&g)) {
                case.check(fast == slow, Some(&g), || format!("threshold_outcome {fast}, solver {slow}"));
                if k >= 5 {
                    let closed = if (k - 1) % 3 == 0 { Outcome::P } else { Outcome::N };
                    case.check(slow == closed, Some(&g), || format!("solver {slow}, heap {} gives {closed}", k - 1));
                }
            }
        }
    }
    cases
}

fn splice(h: &Graph, a: usize, b: usize, word: &[Decoration]) -> Graph {
    let mut g = GraphBuilder::from_graph(h);
    let mut prev = a;
    for d in word {
        let p = g.add_vertex();
        g.add_edge(prev, p);
        let mut ids = vec![p];
        for &par in d.parents() {
            let x = g.add_vertex();
            g.add_edge(ids[par], x);
            ids.push(x);
        }
        prev = p;
    }
    g.add_edge(prev, b);
    g.build()
}

fn suite_kernel_rules(seed: u64) -> Vec<Case> {
    let ndak = Ruleset::ndak();
    let catalog = PathCatalog::standard();
    let rules: [fn(KernelInstance) -> KernelInstance; 3] = [rule1_trim_leaves, rule2_pair_tree_moves, rule3_replace_forests];
    let mut single: Vec<Case> = (1..=4).map(|r| Case::new(format!("rule {r} alone"))).collect();
    let mut observed = Case::new("every rule application in the pipeline");
    let mut pipeline = Case::new("pipeline outcome, branch bound, idempotence");
    let mut fired = [0usize; 4];
    let mut rng = rng_for(seed, 2);
    let mut graphs = 0;
    while graphs < 200 {
        let (n, fen) = (rng.gen_range(8..=14usize), rng.gen_range(1..=4usize));
        let Ok(g) = generate(&GraphFamily::LowFen { n, fen, seed: rng.gen() }) else { continue };
        graphs += 1;
        let Some(want) = pipeline.absorb(outcome(&ndak, &g), Some(&g)) else { continue };
        for (i, case) in single.iter_mut().enumerate() {
            let inst = KernelInstance::new(g.clone());
            let out = match i {
                3 => rule4_replace_paths(inst, &catalog),
                _ => rules[i](inst),
            };
            if !out.trace.is_empty() {
                fired[i] += 1;
            }
            if let Some(got) = case.absorb(outcome(&ndak, &out.graph), Some(&g)) {
                case.check(got == want, Some(&g), || format!("rule {}: {want} -> {got}", i + 1));
            }
        }
        let mut bad: Option<(Graph, String)> = None;
        let mut applications = 0;
        let rep = kernelize_observed(&g, &catalog, &mut |rule, before, after| {
            applications += 1;
            let detail = match (outcome(&ndak, before), outcome(&ndak, after)) {
                (Ok(a), Ok(b)) if a == b => return,
                (Ok(a), Ok(b)) => format!("rule {rule} changed {a} to {b}"),
                (Err(e), _) | (_, Err(e)) => format!("rule {rule}: {e}"),
            };
            bad.get_or_insert((before.clone(), detail));
        });
        observed.checked += applications;
        if let Some((before, detail)) = bad {
            observed.check(false, Some(&before), || detail);
        }
        let Some(rep) = pipeline.absorb(rep, Some(&g)) else { continue };
        let got = match rep.outcome() {
            Some(o) => o,
            None => match pipeline.absorb(outcome(&ndak, &rep.instance.graph), Some(&g)) {
                Some(o) => o,
                None => continue,
            },
        };
        pipeline.check(got == want, Some(&g), || format!("kernel outcome {got}, original {want}"));
        pipeline.check(rep.branch_vertices <= rep.branch_bound, Some(&g), || {
            format!("{} branch vertices above the bound {}", rep.branch_vertices, rep.branch_bound)
        });
        if rep.outcome().is_none() {
            if let Some(again) = pipeline.absorb(kernelize(&rep.instance.graph, &catalog), Some(&g)) {
                pipeline.check(again.instance.graph == rep.instance.graph, Some(&g), || "not idempotent".into());
            }
        }
    }

    for (i, case) in single.iter_mut().enumerate() {
        case.note = Some(format!("changed {} of 200 graphs", fired[i]));
        if i < 3 {
            case.check(fired[i] > 0, None, || format!("rule {} never fired", i + 1));
        }
    }
    observed.note = Some(format!("{} applications", observed.checked));

    // Segments short enough to fold need more room than n <= 14 leaves, so
    // rule 4 also runs on small hosts with a long path spliced in.
    let mut spliced = Case::new("rule 4 on spliced hosts");
    let mut fired = 0;
    let mut rng = rng_for(seed, 3);
    for _ in 0..300 {
        let hn = rng.gen_range(2..=6usize);
        let hm = rng.gen_range(hn - 1..=(hn * (hn - 1) / 2).min(hn + 2));
        let Ok(h) = generate(&GraphFamily::RandomConnected { n: hn, m: hm, seed: rng.gen() }) else { continue };
        let a = rng.gen_range(0..hn);
        let b = (a + 1 + rng.gen_range(0..hn - 1)) % hn;
        let len = rng.gen_range(7..=13usize);
        let word: Vec<Decoration> =
            (0..len).map(|_| if rng.gen_bool(0.6) { Decoration::Leaf } else { Decoration::Bare }).collect();
        let g = splice(&h, a, b, &word);
        if g.vertex_count() > 26 {
            continue;
        }
        let out = rule4_replace_paths(KernelInstance::new(g.clone()), &catalog);
        if out.trace.is_empty() {
            continue;
        }
        fired += 1;
        if let (Some(x), Some(y)) = (spliced.absorb(outcome(&ndak, &g), Some(&g)), spliced.absorb(outcome(&ndak, &out.graph), Some(&g))) {
            spliced.check(x == y, Some(&g), || format!("{} folded: {x} -> {y}", word_string(&word)));
        }
    }
    spliced.note = Some(format!("rule 4 fired on {fired} hosts"));
    spliced.check(fired > 0, None, || "rule 4 never fired".into());
    let mut cases = single;
    cases.extend([observed, pipeline, spliced]);
    cases
}

fn suite_reductions_nk() -> Vec<Case> {
    let mut cases = Vec::new();
    for set in [vec![2], vec![3], vec![2, 3]] {
        let rs = Ruleset::Csg(set.clone());
        let mut case = Case::new(format!("node-kayles -> csg:{} n<=5", join(&set)));
        for g in connected_graphs_up_to(5) {
            let Some(nk) = case.absorb(grundy(&Ruleset::NodeKayles, &g), Some(&g)) else { continue };
            let Some(out) = case.absorb(nk_to_csg(&g, &set, None), Some(&g)) else { continue };
            let h = &out.gadget.graph;
            case.check(is_bipartite(h), Some(&g), || "gadget is not bipartite".into());
            case.check(girth(h).is_none_or(|x| x >= 4), Some(&g), || format!("gadget girth {:?}", girth(h)));
            if let Some(v) = case.absorb(grundy(&rs, h), Some(&g)) {
                case.check(v == nk, Some(&g), || format!("node-kayles grundy {nk}, gadget grundy {v}"));
            }
        }
        cases.push(case);
    }
    let mut case = Case::new("node-kayles -> csg:2 with girth 6, n<=4");
    for g in connected_graphs_up_to(4) {
        let Some(nk) = case.absorb(grundy(&Ruleset::NodeKayles, &g), Some(&g)) else { continue };
        let Some(out) = case.absorb(nk_to_csg(&g, &[2], Some(6)), Some(&g)) else { continue };
        let h = &out.gadget.graph;
        case.check(girth(h).is_none_or(|x| x >= 6), Some(&g), || format!("gadget girth {:?}", girth(h)));
        if let Some(v) = case.absorb(grundy(&Ruleset::ndak(), h), Some(&g)) {
            case.check(v == nk, Some(&g), || format!("node-kayles grundy {nk}, gadget grundy {v}"));
        }
    }
    cases.push(case);
    cases
}

fn suite_reductions_ndnk() -> Vec<Case> {
    let mut case = Case::new("node-kayles -> nd-node-kayles n<=4");
    for g in connected_graphs_up_to(4) {
        let Some(nk) = case.absorb(outcome(&Ruleset::NodeKayles, &g), Some(&g)) else { continue };
        let Some(out) = case.absorb(ndnk_gadget(&g, NdnkOptions::default()), Some(&g)) else { continue };
        if let Some(nd) = case.absorb(outcome(&Ruleset::NdNodeKayles, &out.graph), Some(&g)) {
            case.check(nd == nk, Some(&g), || format!("node-kayles {nk}, gadget {nd}"));
        }
    }
    vec![case]
}

fn suite_reductions_split(seed: u64) -> Vec<Case> {
    let mut rng = rng_for(seed, 4);
    let mut cases: Vec<Case> = [2, 3].iter().map(|k| Case::new(format!("avoid-true -> csg:{k} split gadget"))).collect();
    for _ in 0..100 {
        let (n, m) = (rng.gen_range(1..=4usize), rng.gen_range(0..=3usize));
        let f = DnfFormula::random(rng.gen(), n, m).expect("valid parameters");
        let at = avoid_true_outcome(&f).expect("under the cap").outcome;
        for (case, k) in cases.iter_mut().zip([2, 3]) {
            let Some(gadget) = case.absorb(avoidtrue_to_csgk(&f, k, SplitVariant::Anchored), None) else { continue };
            let h = &gadget.graph;
            case.check(is_split(h), Some(h), || format!("gadget for {:?} is not split", f.clauses()));
            if let Some(o) = case.absorb(outcome(&Ruleset::Csg(vec![k]), h), Some(h)) {
                case.check(o == at, Some(h), || format!("formula {:?} on {n} variables: avoid-true {at}, gadget {o}", f.clauses()));
            }
        }
    }
    cases
}

/// Two copies of a random graph joined by crossed pairs `u1 v2`, `v1 u2`;
/// swapping the copies is an edge-disjoint involution.
fn doubled(rng: &mut ChaCha8Rng, half: usize) -> Graph {
    let m = rng.gen_range(half - 1..=half * (half - 1) / 2);
    let h = generate(&GraphFamily::RandomConnected { n: half, m, seed: rng.gen() }).expect("valid parameters");
    let mut b = GraphBuilder::from_graph(&h.disjoint_union(&h));
    let crosses = rng.gen_range(1..=2usize);
    for _ in 0..crosses {
        let u = rng.gen_range(0..half);
        let v = (u + rng.gen_range(1..half)) % half;
        b.add_edge(u, half + v);
        b.add_edge(v, half + u);
    }
    b.build()
}

fn suite_symmetry(seed: u64) -> Vec<Case> {
    let ak = Ruleset::ArcKayles;
    let mut named = Case::new("named graphs");
    for n in [6, 8] {
        let c = generate(&GraphFamily::Cycle(n)).expect("valid parameters");
        match find_edge_disjoint_involution(&c) {
            Ok(Some(f)) => {
                let holds = verify_symmetry_strategy(&c, &f, seed).map(|r| r.holds).unwrap_or(false);
                named.check(holds, Some(&c), || format!("mirror strategy fails on C_{n}"));
            }
            _ => named.check(false, Some(&c), || format!("no involution found on C_{n}")),
        }
        if let Some(o) = named.absorb(outcome(&ak, &c), Some(&c)) {
            named.check(o == Outcome::P, Some(&c), || format!("arc-kayles on C_{n} is {o}"));
        }
    }
    let c6 = generate(&GraphFamily::Cycle(6)).expect("valid parameters");
    if let Some(o) = named.absorb(outcome(&Ruleset::ndak(), &c6), Some(&c6)) {
        named.check(o == Outcome::N, Some(&c6), || format!("ndak on C_6 is {o}"));
    }
    if let Ok(Some(f)) = find_edge_disjoint_involution(&c6) {
        let holds = verify_symmetry_strategy_under(&Ruleset::ndak(), &c6, &f, seed).map(|r| r.holds);
        named.check(holds == Ok(false), Some(&c6), || "the mirror answer never became illegal under ndak".into());
    }
    let p4 = generate(&GraphFamily::Path(4)).expect("valid parameters");
    named.check(matches!(find_edge_disjoint_involution(&p4), Ok(None)), Some(&p4), || "P_4 has an involution".into());

    let mut cram = Case::new("cram grids");
    for (r, c, want) in [(2, 2, Outcome::P), (2, 4, Outcome::P), (4, 4, Outcome::P), (2, 3, Outcome::N), (2, 5, Outcome::N)] {
        let g = generate(&GraphFamily::Grid(r, c)).expect("valid parameters");
        if let Some(o) = cram.absorb(outcome(&ak, &g), Some(&g)) {
            cram.check(o == want, Some(&g), || format!("{r}x{c} grid is {o}, expected {want}"));
        }
    }

    let mut corpus = Case::new("involution implies P, connected n<=7");
    for g in connected_graphs_up_to(7) {
        check_found(&mut corpus, &g, seed);
    }
    let mut sampled = Case::new("sampled symmetric graphs n=8,10");
    let mut rng = rng_for(seed, 5);
    for i in 0..40 {
        let g = doubled(&mut rng, if i % 2 == 0 { 4 } else { 5 });
        let found = check_found(&mut sampled, &g, seed);
        sampled.check(found, Some(&g), || "finder missed the copy swap".into());
    }
    vec![named, cram, corpus, sampled]
}

/// If the finder succeeds, the map must check out and Arc-Kayles must be P.
fn check_found(case: &mut Case, g: &Graph, seed: u64) -> bool {
    let Some(found) = case.absorb(find_edge_disjoint_involution(g), Some(g)) else { return false };
    let Some(f) = found else {
        case.checked += 1;
        return false;
    };
    case.check(check_involution(g, &f).is_ok(), Some(g), || format!("invalid involution {f:?}"));
    if let Some(o) = case.absorb(outcome(&Ruleset::ArcKayles, g), Some(g)) {
        case.check(o == Outcome::P, Some(g), || format!("involution {f:?} but arc-kayles outcome {o}"));
    }
    if let Some(r) = case.absorb(verify_symmetry_strategy(g, &f, seed), Some(g)) {
        case.check(r.holds, Some(g), || format!("mirror line {:?} fails", r.counterexample));
    }
    true
}

fn suite_sequences() -> Vec<Case> {
    let mut ak = Case::new("arc-kayles paths n<=120 vs octal 0.07");
    if let Some(seq) = ak.absorb(grundy_sequence(&Ruleset::ArcKayles, SequenceFamily::Path, 120), None) {
        let heap = octal_heap_values(&[0, 7], 120);
        for (i, &v) in seq.iter().enumerate() {
            ak.check(v == heap[i + 1], None, || format!("P_{}: solver {v}, heap {}", i + 1, heap[i + 1]));
        }
        let period = detect_period(&seq);
        ak.check(matches!(period, Some((p, 34)) if p <= 68), None, || format!("detected (preperiod, period) {period:?}"));
    }
    let mut nk = Case::new("node-kayles paths n<=60 vs octal 0.137");
    if let Some(seq) = nk.absorb(grundy_sequence(&Ruleset::NodeKayles, SequenceFamily::Path, 60), None) {
        let heap = octal_heap_values(&[1, 3, 7], 60);
        for (i, &v) in seq.iter().enumerate() {
            nk.check(v == heap[i + 1], None, || format!("P_{}: solver {v}, heap {}", i + 1, heap[i + 1]));
        }
    }
    let mut csg = Case::new("csg paths n<=40 vs subtraction games");
    for set in [vec![1], vec![2], vec![1, 2], vec![2, 3]] {
        if let Some(seq) = csg.absorb(grundy_sequence(&Ruleset::Csg(set.clone()), SequenceFamily::Path, 40), None) {
            for (i, &v) in seq.iter().enumerate() {
                let want = subtraction_heap_grundy(&set, i + 1);
                csg.check(v == want, None, || format!("csg:{} on P_{}: {v}, heap {want}", join(&set), i + 1));
            }
        }
    }
    let mut cycles = Case::new("arc-kayles cycles n<=40");
    let (Some(cyc), Some(paths)) = (
        cycles.absorb(grundy_sequence(&Ruleset::ArcKayles, SequenceFamily::Cycle, 40), None),
        cycles.absorb(grundy_sequence(&Ruleset::ArcKayles, SequenceFamily::Path, 40), None),
    ) else {
        return vec![ak, nk, csg, cycles];
    };
    // The first move on C_n leaves P_{n-2}, and every first move is alike.
    for n in 3..=40 {
        let want = u32::from(paths[n - 3] == 0);
        cycles.check(cyc[n - 1] == want, None, || format!("C_{n}: {} expected {want}", cyc[n - 1]));
    }
    vec![ak, nk, csg, cycles]
}

fn suite_gi() -> Vec<Case> {
    (1..=5)
        .map(|n| {
            let mut case = Case::new(format!("gi gadget, pairs of connected graphs n={n}"));
            let graphs = connected_graphs(n);
            let reversed: Vec<usize> = (0..n).rev().collect();
            for g1 in &graphs {
                for g2 in &graphs {
                    let g2 = g2.relabel(&reversed);
                    let same = isomorphism(g1, &g2).is_some();
                    let gadget = gi_gadget(g1, &g2);
                    if let Some(found) = case.absorb(find_edge_disjoint_involution(&gadget.graph), Some(&gadget.graph)) {
                        case.check(found.is_some() == same, Some(&gadget.graph), || {
                            format!("isomorphic {same}, involution found {}", found.is_some())
                        });
                    }
                }
            }
            case
        })
        .collect()
}

fn join(set: &[usize]) -> String {
    set.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
}
