//! Gadget constructions: Node-Kayles into `CSG(S)`, Node-Kayles into its
//! non-disconnecting variant, Avoid True into `CSG({k})` on split graphs, and
//! graph isomorphism into edge-disjoint involution search.
//!
//! Every gadget carries a provenance map from output vertices to the part of
//! the input they stand for.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::solver::{Outcome, SolveReport};
use crate::structure::{blocks, girth};

/// Positive DNF: a disjunction of conjunctions of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<usize>>,
}

impl DnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<usize>>) -> Result<Self> {
        let mut clauses = clauses;
        for c in clauses.iter_mut() {
            c.sort_unstable();
            c.dedup();
            if c.is_empty() {
                return Err(Error::InvalidParameters("empty clause".into()));
            }
            if let Some(&x) = c.iter().find(|&&x| x >= variable_count) {
                return Err(Error::InvalidParameters(alloc::format!(
                    "variable {x} out of range ({variable_count} variables)"
                )));
            }
        }
        Ok(DnfFormula { variable_count, clauses })
    }

    /// `m` clauses, each a uniformly random non-empty subset of the `n` variables.
    pub fn random(seed: u64, n: usize, m: usize) -> Result<Self> {
        if n == 0 && m > 0 {
            return Err(Error::InvalidParameters("clauses need at least one variable".into()));
        }
        if n > AVOID_TRUE_CAP {
            return Err(Error::CapExceeded { what: "random DNF", n, cap: AVOID_TRUE_CAP });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let clauses = (0..m)
            .map(|_| {
                let mask: u32 = rng.gen_range(1..1u32 << n);
                (0..n).filter(|i| mask >> i & 1 == 1).collect()
            })
            .collect();
        Self::new(n, clauses)
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }

    fn clause_masks(&self) -> Vec<u32> {
        self.clauses.iter().map(|c| c.iter().fold(0u32, |m, &x| m | 1 << x)).collect()
    }
}

/// Largest variable count accepted by [`avoid_true_outcome`].
pub const AVOID_TRUE_CAP: usize = 24;

struct AvoidTrue {
    n: usize,
    clauses: Vec<u32>,
    memo: HashMap<u32, bool>,
    nodes: u64,
}

impl AvoidTrue {
    /// False variables that can be switched without satisfying a clause.
    fn legal(&self, t: u32) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| t >> x & 1 == 0 && self.clauses.iter().all(|&c| c & !(t | 1 << x) != 0))
            .collect()
    }

    fn wins(&mut self, t: u32) -> bool {
        if let Some(&w) = self.memo.get(&t) {
            return w;
        }
        self.nodes += 1;
        let w = self.legal(t).into_iter().any(|x| !self.wins(t | 1 << x));
        self.memo.insert(t, w);
        w
    }
}

/// Exact Avoid True outcome from the all-false assignment. The best move, if
/// any, is the variable to switch.
pub fn avoid_true_outcome(f: &DnfFormula) -> Result<SolveReport<usize>> {
    let n = f.variable_count;
    if n > AVOID_TRUE_CAP {
        return Err(Error::CapExceeded { what: "avoid_true_outcome", n, cap: AVOID_TRUE_CAP });
    }
    let mut s = AvoidTrue { n, clauses: f.clause_masks(), memo: HashMap::new(), nodes: 0 };
    let win = s.wins(0);
    let best_move = if win { s.legal(0).into_iter().find(|&x| !s.wins(1 << x)) } else { None };
    Ok(SolveReport {
        outcome: if win { Outcome::N } else { Outcome::P },
        grundy: None,
        best_move,
        nodes_expanded: s.nodes,
        table_entries: s.memo.len(),
    })
}

/// What a gadget vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    None,
    Vertex(usize),
    Edge(usize, usize),
    Variable(usize),
    Clause(usize),
    /// Vertex of the first or second input graph of the GI gadget.
    Side(u8, usize),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Source::None => f.write_str("-"),
            Source::Vertex(v) => write!(f, "v{v}"),
            Source::Edge(u, v) => write!(f, "e{u}-{v}"),
            Source::Variable(x) => write!(f, "x{x}"),
            Source::Clause(c) => write!(f, "c{c}"),
            Source::Side(s, v) => write!(f, "g{s}:v{v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub role: &'static str,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    pub provenance: Vec<Provenance>,
}

impl Gadget {
    /// Tab-separated `vertex role source` lines.
    pub fn provenance_map(&self) -> String {
        let mut out = String::new();
        for (v, p) in self.provenance.iter().enumerate() {
            out.push_str(&alloc::format!("{v}\t{}\t{}\n", p.role, p.source));
        }
        out
    }

    /// Vertices with the given role.
    pub fn with_role(&self, role: &str) -> Vec<usize> {
        (0..self.provenance.len()).filter(|&v| self.provenance[v].role == role).collect()
    }
}

struct Assembler {
    b: GraphBuilder,
    prov: Vec<Provenance>,
}

impl Assembler {
    fn new() -> Self {
        Assembler { b: GraphBuilder::new(), prov: Vec::new() }
    }

    fn vertex(&mut self, role: &'static str, source: Source) -> usize {
        self.prov.push(Provenance { role, source });
        self.b.add_vertex()
    }

    fn leaves(&mut self, v: usize, k: usize, role: &'static str, source: Source) {
        for _ in 0..k {
            let l = self.vertex(role, source);
            self.b.add_edge(v, l);
        }
    }

    fn finish(self) -> Gadget {
        Gadget { graph: self.b.build(), provenance: self.prov }
    }
}

#[derive(Clone, Debug)]
pub struct NkGadget {
    pub gadget: Gadget,
    /// Star centre `v'` for each input vertex.
    pub centers: Vec<usize>,
    /// Measured girth of the output.
    pub girth: Option<usize>,
    pub subdivision_rounds: usize,
}

/// Node-Kayles on `g` to `CSG(S)`: a control vertex `c` with `M + 1` leaves,
/// a star `v'` with `M - 1` leaves joined to `c` per vertex, and a vertex
/// `e_uv` with `M` leaves joined to `u'` and `v'` per edge, where `M = max S`.
///
/// With a target girth, rounds of subdivision of every cycle edge (each new
/// vertex getting `M + 1` leaves) run until the girth is reached.
pub fn nk_to_csg(g: &Graph, set: &[usize], target_girth: Option<usize>) -> Result<NkGadget> {
    let Some(&m) = set.iter().max() else {
        return Err(Error::InvalidParameters("empty subtraction set".into()));
    };
    if set.contains(&1) || set.contains(&0) {
        return Err(Error::InvalidParameters("subtraction set must not contain 1".into()));
    }
    if let Some(t) = target_girth {
        if t % 2 == 1 || t < 4 {
            return Err(Error::InvalidParameters(alloc::format!("target girth must be even and >= 4, got {t}")));
        }
    }
    let mut a = Assembler::new();
    let c = a.vertex("control", Source::None);
    a.leaves(c, m + 1, "control-leaf", Source::None);
    let mut centers = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let s = a.vertex("vertex-star", Source::Vertex(v));
        a.leaves(s, m - 1, "vertex-leaf", Source::Vertex(v));
        a.b.add_edge(c, s);
        centers.push(s);
    }
    for (u, v) in g.edges() {
        let e = a.vertex("edge", Source::Edge(u, v));
        a.leaves(e, m, "edge-leaf", Source::Edge(u, v));
        a.b.add_edge(e, centers[u]);
        a.b.add_edge(e, centers[v]);
    }
    let mut gadget = a.finish();
    let mut rounds = 0;
    let mut gi = girth(&gadget.graph);
    if let Some(t) = target_girth {
        while gi.is_some_and(|x| x < t) {
            gadget = subdivide_cycle_edges(gadget, m + 1);
            rounds += 1;
            gi = girth(&gadget.graph);
        }
    }
    Ok(NkGadget { gadget, centers, girth: gi, subdivision_rounds: rounds })
}

fn subdivide_cycle_edges(gadget: Gadget, leaves: usize) -> Gadget {
    let g = &gadget.graph;
    let mut cyclic: Vec<(usize, usize)> = Vec::new();
    for b in blocks(g) {
        if b.len() >= 3 {
            for (i, &u) in b.iter().enumerate() {
                for &v in &b[i + 1..] {
                    if g.has_edge(u, v) {
                        cyclic.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
    cyclic.sort_unstable();
    let mut a = Assembler { b: GraphBuilder::from_graph(g), prov: gadget.provenance };
    for (u, v) in cyclic {
        a.b.remove_edge(u, v);
        let s = a.vertex("subdivision", Source::None);
        a.b.add_edge(u, s);
        a.b.add_edge(s, v);
        a.leaves(s, leaves, "subdivision-leaf", Source::None);
    }
    a.finish()
}

/// How the subdivision vertices of [`ndnk_gadget`] are wired together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SubdivisionWiring {
    /// All subdivision vertices form one clique.
    #[default]
    Clique,
    /// No edges between different edge gadgets.
    Unwired,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NdnkOptions {
    pub wiring: SubdivisionWiring,
    /// Add a spare `K_{3,3}` on the subdivision clique when the input has a
    /// single edge. Without it `K_2` maps to a gadget with the wrong outcome.
    pub single_edge_anchor: bool,
}

impl Default for NdnkOptions {
    fn default() -> Self {
        NdnkOptions { wiring: SubdivisionWiring::Clique, single_edge_anchor: true }
    }
}

/// Node-Kayles on `g` to ND-Node-Kayles: every edge `uv` becomes the path
/// `u e1 e2 v` plus a `K_{3,3}` with one vertex joined to `e1` and `e2`.
pub fn ndnk_gadget(g: &Graph, opts: NdnkOptions) -> Result<Gadget> {
    if g.edge_count() == 0 && g.vertex_count() != 1 {
        return Err(Error::InvalidParameters("edgeless input with other than one vertex".into()));
    }
    let mut a = Assembler::new();
    for v in 0..g.vertex_count() {
        a.vertex("original", Source::Vertex(v));
    }
    let mut subdivisions = Vec::new();
    for (u, v) in g.edges() {
        let src = Source::Edge(u, v);
        let e1 = a.vertex("e1", src);
        let e2 = a.vertex("e2", src);
        a.b.add_edge(u, e1);
        a.b.add_edge(e1, e2);
        a.b.add_edge(e2, v);
        let hub = k33(&mut a, "k33", src);
        a.b.add_edge(hub, e1);
        a.b.add_edge(hub, e2);
        subdivisions.push(e1);
        subdivisions.push(e2);
    }
    if opts.wiring == SubdivisionWiring::Clique {
        for (i, &x) in subdivisions.iter().enumerate() {
            for &y in &subdivisions[i + 1..] {
                a.b.add_edge(x, y);
            }
        }
    }
    if opts.single_edge_anchor && g.edge_count() == 1 {
        let hub = k33(&mut a, "anchor-k33", Source::None);
        for &s in &subdivisions {
            a.b.add_edge(hub, s);
        }
    }
    Ok(a.finish())
}

/// Adds a `K_{3,3}` and returns its designated vertex.
fn k33(a: &mut Assembler, role: &'static str, src: Source) -> usize {
    let side: Vec<usize> = (0..6).map(|_| a.vertex(role, src)).collect();
    for &x in &side[..3] {
        for &y in &side[3..] {
            a.b.add_edge(x, y);
        }
    }
    side[0]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SplitVariant {
    /// One extra clique vertex with `k + 1` leaves that can never be removed,
    /// so clause vertices never outlive all their variables.
    #[default]
    Anchored,
    /// Exactly the textbook construction with `k n + m` vertices.
    Plain,
}

/// Avoid True to `CSG({k})` on a split graph: a clique on the variable
/// vertices `v_i`, each with `k - 1` leaves, and per clause a vertex joined to
/// the variables it contains.
pub fn avoidtrue_to_csgk(f: &DnfFormula, k: usize, variant: SplitVariant) -> Result<Gadget> {
    if k < 2 {
        return Err(Error::InvalidParameters(alloc::format!("k must be at least 2, got {k}")));
    }
    let n = f.variable_count();
    let mut a = Assembler::new();
    let vars: Vec<usize> = (0..n).map(|i| a.vertex("variable", Source::Variable(i))).collect();
    for (i, &x) in vars.iter().enumerate() {
        for &y in &vars[i + 1..] {
            a.b.add_edge(x, y);
        }
    }
    for (i, &x) in vars.iter().enumerate() {
        a.leaves(x, k - 1, "variable-leaf", Source::Variable(i));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = a.vertex("clause", Source::Clause(j));
        for &x in clause {
            a.b.add_edge(c, vars[x]);
        }
    }
    if variant == SplitVariant::Anchored {
        let anchor = a.vertex("anchor", Source::None);
        for &x in &vars {
            a.b.add_edge(anchor, x);
        }
        a.leaves(anchor, k + 1, "anchor-leaf", Source::None);
    }
    Ok(a.finish())
}

/// Graphs `g1`, `g2` are isomorphic iff the output has an edge-disjoint
/// involutive automorphism. Each side gets a universal vertex `u` with a leaf
/// `v`, then every edge is subdivided once; the sides are placed side by side.
/// Inputs of different orders give `K_2`.
pub fn gi_gadget(g1: &Graph, g2: &Graph) -> Gadget {
    if g1.vertex_count() != g2.vertex_count() {
        let mut a = Assembler::new();
        let x = a.vertex("mismatch", Source::None);
        let y = a.vertex("mismatch", Source::None);
        a.b.add_edge(x, y);
        return a.finish();
    }
    let mut a = Assembler::new();
    for (s, g) in [(1u8, g1), (2u8, g2)] {
        let n = g.vertex_count();
        let base = a.b.vertex_count();
        for v in 0..n {
            a.vertex("original", Source::Side(s, v));
        }
        let u = a.vertex("universal", Source::None);
        let leaf = a.vertex("leaf", Source::None);
        let mut edges: Vec<(usize, usize)> = g.edges().map(|(x, y)| (base + x, base + y)).collect();
        edges.extend((0..n).map(|v| (base + v, u)));
        edges.push((u, leaf));
        for (x, y) in edges {
            let m = a.vertex("subdivision", Source::None);
            a.b.add_edge(x, m);
            a.b.add_edge(m, y);
        }
    }
    a.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};
    use crate::structure::{is_bipartite, is_split};

    #[test]
    fn avoid_true_examples() {
        let f = |n, c: &[&[usize]]| DnfFormula::new(n, c.iter().map(|c| c.to_vec()).collect()).unwrap();
        assert_eq!(avoid_true_outcome(&f(2, &[&[0, 1]])).unwrap().outcome, Outcome::N);
        assert_eq!(avoid_true_outcome(&f(1, &[&[0]])).unwrap().outcome, Outcome::P);
        assert_eq!(avoid_true_outcome(&f(2, &[&[0], &[1]])).unwrap().outcome, Outcome::P);
        assert_eq!(avoid_true_outcome(&f(3, &[])).unwrap().outcome, Outcome::N);
        assert!(DnfFormula::new(2, alloc::vec![alloc::vec![]]).is_err());
        assert!(DnfFormula::new(2, alloc::vec![alloc::vec![2]]).is_err());
    }

    #[test]
    fn nk_gadget_sizes() {
        let k3 = generate(&GraphFamily::Complete(3)).unwrap();
        let out = nk_to_csg(&k3, &[2, 3], None).unwrap();
        assert_eq!(out.gadget.graph.vertex_count(), 26);
        assert_eq!(out.girth, Some(4));
        assert!(is_bipartite(&out.gadget.graph));
        let k1 = Graph::empty(1);
        assert_eq!(nk_to_csg(&k1, &[2], None).unwrap().gadget.graph.vertex_count(), 6);
        assert!(nk_to_csg(&k1, &[1, 2], None).is_err());
        assert!(nk_to_csg(&k1, &[2], Some(5)).is_err());
        let boosted = nk_to_csg(&k3, &[2], Some(6)).unwrap();
        assert!(boosted.girth.unwrap() >= 6);
        assert!(is_bipartite(&boosted.gadget.graph));
        assert_eq!(boosted.gadget.provenance.len(), boosted.gadget.graph.vertex_count());
    }

    #[test]
    fn ndnk_gadget_sizes() {
        let k2 = generate(&GraphFamily::Path(2)).unwrap();
        let plain = NdnkOptions { single_edge_anchor: false, ..NdnkOptions::default() };
        assert_eq!(ndnk_gadget(&k2, plain).unwrap().graph.vertex_count(), 10);
        assert_eq!(ndnk_gadget(&k2, NdnkOptions::default()).unwrap().graph.vertex_count(), 16);
        let p3 = generate(&GraphFamily::Path(3)).unwrap();
        let g = ndnk_gadget(&p3, NdnkOptions::default()).unwrap();
        assert_eq!(g.graph.vertex_count(), 19);
        let subs: Vec<usize> = g.with_role("e1").into_iter().chain(g.with_role("e2")).collect();
        assert_eq!(subs.len(), 4);
        for &x in &subs {
            for &y in &subs {
                assert!(x == y || g.graph.has_edge(x, y));
            }
        }
        assert!(ndnk_gadget(&Graph::empty(2), NdnkOptions::default()).is_err());
    }

    #[test]
    fn split_gadget_shapes() {
        let f = DnfFormula::new(4, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 3], alloc::vec![0, 2]]).unwrap();
        let g = avoidtrue_to_csgk(&f, 2, SplitVariant::Plain).unwrap().graph;
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 6 + 4 + 6);
        assert!(is_split(&g));
        let single = DnfFormula::new(1, alloc::vec![]).unwrap();
        let k2 = avoidtrue_to_csgk(&single, 2, SplitVariant::Plain).unwrap().graph;
        assert_eq!(k2.edge_list(), [(0, 1)]);
        assert!(is_split(&avoidtrue_to_csgk(&f, 3, SplitVariant::Anchored).unwrap().graph));
        assert!(avoidtrue_to_csgk(&f, 1, SplitVariant::Plain).is_err());
    }

    #[test]
    fn gi_gadget_sizes() {
        let k1 = Graph::empty(1);
        let g = gi_gadget(&k1, &k1).graph;
        assert_eq!(g.vertex_count(), 10);
        assert!(is_bipartite(&g));
        let k2 = generate(&GraphFamily::Path(2)).unwrap();
        assert_eq!(gi_gadget(&k1, &k2).graph.edge_list(), [(0, 1)]);
    }
}
