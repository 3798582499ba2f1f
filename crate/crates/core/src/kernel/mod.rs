//! Kernelization of Non-Disconnecting Arc-Kayles by feedback edge number.
//!
//! Rules 1-3 shrink the trees hanging off the 2-core; Rule 4 shortens long
//! decorated paths of the core to catalog representatives. The pipeline
//! loops over the rules in order until none applies.

mod paths;
mod rules;
mod trees;

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::Outcome;
use crate::structure::{feedback_edge_number, is_connected_graph, is_tree};
use crate::tractable::tree_outcome;

pub use paths::{extended_outcome, ExtendedOutcome, PathCatalog, PieceInv, DEFAULT_L_MAX};
pub use rules::{path_segments, rule1_trim_leaves, rule2_pair_tree_moves, rule3_replace_forests, rule4_replace_paths, Segment};
pub use trees::{parse_word, tree_signature, word_string, CatalogTree, Decoration, RootRemoved, TreeSignature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleRecord {
    pub rule: u8,
    pub removed: usize,
    pub added: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelInstance {
    pub graph: Graph,
    /// Parity of moves stripped so far. Rules only delete pairs of moves, so
    /// this stays `false`.
    pub to_move_parity: bool,
    pub trace: Vec<RuleRecord>,
    /// Set when the input was a tree and was solved outright.
    pub resolved: Option<Outcome>,
}

impl KernelInstance {
    pub fn new(graph: Graph) -> Self {
        KernelInstance { graph, to_move_parity: false, trace: Vec::new(), resolved: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub instance: KernelInstance,
    pub original_vertices: usize,
    pub original_edges: usize,
    pub fen: usize,
    /// Net vertices removed by rules 1-4.
    pub rule_deltas: [isize; 4],
    /// Vertices of degree at least 3 in the kernel's 2-core, and the bound `2 fen - 2`.
    pub branch_vertices: usize,
    pub branch_bound: usize,
    /// Segments of length at least 3 with no catalog entry.
    pub unmatched_segments: usize,
}

impl KernelReport {
    pub fn vertices(&self) -> usize {
        self.instance.graph.vertex_count()
    }

    pub fn edges(&self) -> usize {
        self.instance.graph.edge_count()
    }

    pub fn outcome(&self) -> Option<Outcome> {
        self.instance.resolved
    }
}

/// Applies rules 1-4 to a fixpoint.
pub fn kernelize(g: &Graph, catalog: &PathCatalog) -> Result<KernelReport> {
    kernelize_observed(g, catalog, &mut |_, _, _| {})
}

/// As [`kernelize`], calling `observe(rule, before, after)` after every rule
/// application that changed the graph.
pub fn kernelize_observed(
    g: &Graph,
    catalog: &PathCatalog,
    observe: &mut dyn FnMut(u8, &Graph, &Graph),
) -> Result<KernelReport> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n == 0 {
        return Ok(report(KernelInstance { resolved: Some(Outcome::P), ..KernelInstance::new(g.clone()) }, n, m, 0, catalog));
    }
    if !is_connected_graph(g) {
        return Err(Error::Disconnected);
    }
    let fen = feedback_edge_number(g);
    if is_tree(g) {
        let (o, _) = tree_outcome(g)?;
        let inst = KernelInstance { resolved: Some(o), ..KernelInstance::new(Graph::empty(0)) };
        return Ok(report(inst, n, m, fen, catalog));
    }
    let mut inst = KernelInstance::new(g.clone());
    loop {
        let before = inst.trace.len();
        for rule in 1..=4u8 {
            let (graph, len) = (inst.graph.clone(), inst.trace.len());
            inst = match rule {
                1 => rule1_trim_leaves(inst),
                2 => rule2_pair_tree_moves(inst),
                3 => rule3_replace_forests(inst),
                _ => rule4_replace_paths(inst, catalog),
            };
            if inst.trace.len() > len {
                observe(rule, &graph, &inst.graph);
            }
        }
        if inst.trace.len() == before {
            break;
        }
    }
    let rep = report(inst, n, m, fen, catalog);
    debug_assert!(rep.branch_vertices <= rep.branch_bound);
    Ok(rep)
}

fn report(instance: KernelInstance, n: usize, m: usize, fen: usize, catalog: &PathCatalog) -> KernelReport {
    let mut rule_deltas = [0isize; 4];
    for r in &instance.trace {
        rule_deltas[usize::from(r.rule - 1)] += r.removed as isize - r.added as isize;
    }
    let g = &instance.graph;
    let branch_vertices = core_branch_vertices(g);
    let unmatched_segments = path_segments(g, catalog.alphabet())
        .iter()
        .filter(|s| s.word.len() >= 3)
        .filter(|s| extended_outcome(&s.word).map_or(true, |sig| catalog.representative(&sig).is_none()))
        .count();
    KernelReport {
        instance,
        original_vertices: n,
        original_edges: m,
        fen,
        rule_deltas,
        branch_vertices,
        branch_bound: (2 * fen).saturating_sub(2),
        unmatched_segments,
    }
}

/// Vertices of degree at least 3 in the 2-core of `g`.
pub fn core_branch_vertices(g: &Graph) -> usize {
    let core = rules::core_mask(g);
    (0..g.vertex_count()).filter(|&v| core[v] && g.neighbors(v).iter().filter(|&&w| core[w]).count() >= 3).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};
    use crate::graph::GraphBuilder;
    use crate::solver::solve_outcome;
    use crate::Ruleset;

    fn ndak(g: &Graph) -> Outcome {
        solve_outcome(&Ruleset::ndak(), g, &g.all()).unwrap().outcome
    }

    #[test]
    fn rule1_star() {
        let k15 = generate(&GraphFamily::Star(5)).unwrap();
        let out = rule1_trim_leaves(KernelInstance::new(k15));
        assert_eq!(out.graph.vertex_count(), 4);
        let p4 = generate(&GraphFamily::Path(4)).unwrap();
        assert!(rule1_trim_leaves(KernelInstance::new(p4)).trace.is_empty());
    }

    #[test]
    fn rule2_pendant_path_on_c4() {
        let mut b = GraphBuilder::from_graph(&generate(&GraphFamily::Cycle(4)).unwrap());
        let mut prev = 0;
        for _ in 0..6 {
            let x = b.add_vertex();
            b.add_edge(prev, x);
            prev = x;
        }
        let g = b.build();
        // Three free moves, and emptying the path would free vertex 0: one move stays.
        let out = rule2_pair_tree_moves(KernelInstance::new(g.clone()));
        assert_eq!(out.graph.vertex_count(), 6);
        assert_eq!(ndak(&g), ndak(&out.graph));
        assert!(!out.to_move_parity);

        let mut b = GraphBuilder::from_graph(&generate(&GraphFamily::Cycle(4)).unwrap());
        let x = b.add_vertex();
        b.add_edge(0, x);
        let y = b.add_vertex();
        b.add_edge(x, y);
        assert!(rule2_pair_tree_moves(KernelInstance::new(b.build())).trace.is_empty());
    }

    #[test]
    fn rule3_caterpillar_becomes_d() {
        let mut b = GraphBuilder::from_graph(&generate(&GraphFamily::Cycle(3)).unwrap());
        let v1 = b.add_vertex();
        let v2 = b.add_vertex();
        let v4 = b.add_vertex();
        b.add_edge(0, v1);
        b.add_edge(v1, v2);
        b.add_edge(v2, v4);
        b.add_leaves(v1, 1);
        b.add_leaves(v2, 1);
        b.add_leaves(v4, 2);
        let g = b.build();
        let out = rule3_replace_forests(KernelInstance::new(g.clone()));
        assert_eq!(out.trace.len(), 1);
        assert!(out.trace[0].note.ends_with("->d"), "{:?}", out.trace);
        assert_eq!(out.graph.vertex_count(), 6);
        assert_eq!(ndak(&g), ndak(&out.graph));
    }

    #[test]
    fn trees_resolve_outright() {
        let cat = PathCatalog::build(4, &[Decoration::Bare]).unwrap();
        let rep = kernelize(&generate(&GraphFamily::Path(6)).unwrap(), &cat).unwrap();
        assert_eq!(rep.vertices(), 0);
        assert_eq!(rep.outcome(), Some(Outcome::N));
        let c5 = generate(&GraphFamily::Cycle(5)).unwrap();
        let rep = kernelize(&c5, &cat).unwrap();
        assert_eq!(rep.instance.graph, c5);
        assert!(rep.instance.trace.is_empty());
    }
}
