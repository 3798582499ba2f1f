//! Structural queries: connectivity, cores, cycles, twins, blocks.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subset::VertexSubset;

/// Whether `G[alive]` is connected. The empty subset counts as connected.
pub fn is_connected(g: &Graph, alive: &VertexSubset) -> bool {
    match alive.first() {
        None => true,
        Some(s) => reach(g, alive, s) == *alive,
    }
}

/// Vertices of `alive` reachable from `start` inside `G[alive]`.
pub fn reach(g: &Graph, alive: &VertexSubset, start: usize) -> VertexSubset {
    let mut seen = VertexSubset::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSubset::empty();
        for v in frontier.iter() {
            next = next.union(g.nbr_mask(v));
        }
        frontier = next.intersection(alive).difference(&seen);
        seen = seen.union(&frontier);
    }
    seen
}

/// Connected components of `G[alive]`, ordered by smallest vertex.
pub fn connected_components(g: &Graph, alive: &VertexSubset) -> Vec<VertexSubset> {
    let mut rest = *alive;
    let mut out = Vec::new();
    while let Some(s) = rest.first() {
        let c = reach(g, &rest, s);
        rest = rest.difference(&c);
        out.push(c);
    }
    out
}

/// Connected components of the whole graph as sorted vertex lists. No size cap.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut comp = alloc::vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = alloc::vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_connected_graph(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// `m - n + c`, the minimum number of edges whose removal leaves a forest.
pub fn feedback_edge_number(g: &Graph) -> usize {
    g.edge_count() + components(g).len() - g.vertex_count()
}

pub fn is_forest(g: &Graph) -> bool {
    feedback_edge_number(g) == 0
}

pub fn is_tree(g: &Graph) -> bool {
    g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected_graph(g)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = alloc::vec![usize::MAX; n];
    let mut parent = alloc::vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(v) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[v] + 1 >= b {
                    break 'bfs;
                }
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Two-colouring if the graph is bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = alloc::vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = alloc::vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Split-graph recognition from the degree sequence.
pub fn is_split(g: &Graph) -> bool {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = d.iter().enumerate().filter(|&(i, &x)| x + 1 > i).map(|(i, _)| i + 1).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

/// Partition of `alive` into twin classes: `u ~ v` iff `N(u) \ {v} = N(v) \ {u}` inside `G[alive]`.
pub fn twin_classes(g: &Graph, alive: &VertexSubset) -> Vec<VertexSubset> {
    let mut classes: Vec<VertexSubset> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    'outer: for v in alive.iter() {
        let nv = g.nbr_mask(v).intersection(alive);
        for (ci, &r) in reps.iter().enumerate() {
            let nr = g.nbr_mask(r).intersection(alive);
            let mut a = nv;
            a.remove(r);
            let mut b = nr;
            b.remove(v);
            if a == b {
                classes[ci].insert(v);
                continue 'outer;
            }
        }
        reps.push(v);
        classes.push(VertexSubset::singleton(v));
    }
    classes
}

/// A tree hanging off the 2-core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HangingTree {
    /// Core vertex the tree is joined to; `None` when the whole graph is a tree.
    pub attach: Option<usize>,
    /// Tree vertex adjacent to `attach`.
    pub root: usize,
    pub vertices: VertexSubset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core: VertexSubset,
    pub hanging_trees: Vec<HangingTree>,
}

impl CoreDecomposition {
    pub fn attachment_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.hanging_trees.iter().filter_map(|t| t.attach.map(|a| (a, t.root)))
    }

    /// Union of all trees hanging at core vertex `u`.
    pub fn forest_at(&self, u: usize) -> VertexSubset {
        self.hanging_trees
            .iter()
            .filter(|t| t.attach == Some(u))
            .fold(VertexSubset::empty(), |acc, t| acc.union(&t.vertices))
    }

    pub fn tree_vertices(&self) -> VertexSubset {
        self.hanging_trees.iter().fold(VertexSubset::empty(), |acc, t| acc.union(&t.vertices))
    }
}

/// Peels degree-1 vertices until the minimum degree is 2.
pub fn two_core(g: &Graph) -> Result<CoreDecomposition> {
    g.require_subsets("two_core")?;
    if !is_connected_graph(g) {
        return Err(Error::Disconnected);
    }
    let core = peel(g, (0..g.vertex_count()).collect());
    let all = g.all();
    if core.is_empty() {
        let hanging_trees = if all.is_empty() {
            Vec::new()
        } else {
            alloc::vec![HangingTree { attach: None, root: 0, vertices: all }]
        };
        return Ok(CoreDecomposition { core, hanging_trees });
    }
    let outside = all.difference(&core);
    let mut hanging_trees = Vec::new();
    for comp in connected_components(g, &outside) {
        let (root, attach) = comp
            .iter()
            .find_map(|v| g.nbr_mask(v).intersection(&core).first().map(|a| (v, a)))
            .expect("hanging tree is joined to the core");
        hanging_trees.push(HangingTree { attach: Some(attach), root, vertices: comp });
    }
    Ok(CoreDecomposition { core, hanging_trees })
}

/// Deletes degree-<=1 vertices, processing candidates in the given order.
pub(crate) fn peel(g: &Graph, order: Vec<usize>) -> VertexSubset {
    let mut alive = g.all();
    let mut deg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = order.into_iter().rev().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive.contains(v) {
            continue;
        }
        alive.remove(v);
        for &w in g.neighbors(v) {
            if alive.contains(w) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Biconnected components (blocks) as sorted vertex lists. Isolated vertices form singleton blocks.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut disc = alloc::vec![usize::MAX; n];
    let mut low = alloc::vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            out.push(alloc::vec![root]);
            disc[root] = time;
            time += 1;
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = alloc::vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.push(block);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Every block is a clique (block graph).
pub fn is_clique_tree(g: &Graph) -> bool {
    is_connected_graph(g)
        && blocks(g).iter().all(|b| b.iter().all(|&u| b.iter().all(|&v| u == v || g.has_edge(u, v))))
}
