//! Polynomial-time outcomes for non-disconnecting Arc-Kayles on trees, clique
//! trees and threshold graphs with a twin-free clique.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::generate::ThresholdStep;
use crate::graph::Graph;
use crate::rules::{move_orbits, Ruleset};
use crate::solver::Outcome;
use crate::structure::{is_clique_tree, is_connected_graph, is_tree};
use crate::subset::VertexSubset;

/// Greedy NDAK play on a tree: repeatedly remove the lexicographically
/// smallest edge `uv` with `deg(u) + deg(v) <= 3`.
///
/// Every maximal play on a tree has the same length, so the parity of the
/// count decides the game.
pub fn tree_outcome(g: &Graph) -> Result<(Outcome, usize)> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let moves = greedy_tree_moves(g, &alloc::vec![true; g.vertex_count()]);
    Ok((Outcome::from_move_count(moves), moves))
}

/// Move count of greedy NDAK play on the tree induced by `alive`.
pub(crate) fn greedy_tree_moves(g: &Graph, alive: &[bool]) -> usize {
    let adj: Vec<&[usize]> = (0..g.vertex_count()).map(|v| g.neighbors(v)).collect();
    greedy_tree_play(&adj, &mut alive.to_vec(), None, usize::MAX)
}

/// Greedy NDAK play on the forest induced by `alive`, stopping after `limit`
/// moves. Moves through `blocked` are never taken, which models a root held
/// in place by the rest of a larger graph. Played vertices are cleared from
/// `alive`.
pub(crate) fn greedy_tree_play<A: AsRef<[usize]>>(
    adj: &[A],
    alive: &mut [bool],
    blocked: Option<usize>,
    limit: usize,
) -> usize {
    let nbrs = |v: usize| adj[v].as_ref();
    let n = adj.len();
    let mut deg: Vec<usize> =
        (0..n).map(|v| if alive[v] { nbrs(v).iter().filter(|&&w| alive[w]).count() } else { 0 }).collect();
    let open = |u: usize, w: usize, alive: &[bool], deg: &[usize]| {
        alive[u] && alive[w] && deg[u] + deg[w] <= 3 && blocked != Some(u) && blocked != Some(w)
    };
    let mut heap = BinaryHeap::new();
    for u in 0..n {
        for &w in nbrs(u) {
            if w > u && open(u, w, alive, &deg) {
                heap.push(Reverse((u, w)));
            }
        }
    }
    let mut moves = 0;
    while moves < limit {
        let Some(Reverse((u, w))) = heap.pop() else { break };
        if !open(u, w, alive, &deg) {
            continue;
        }
        moves += 1;
        alive[u] = false;
        alive[w] = false;
        for x in [u, w] {
            for &y in nbrs(x) {
                if !alive[y] {
                    continue;
                }
                deg[y] -= 1;
                if deg[y] <= 2 {
                    for &z in nbrs(y) {
                        if open(y, z, alive, &deg) {
                            heap.push(Reverse((y.min(z), y.max(z))));
                        }
                    }
                }
            }
        }
    }
    moves
}

/// Greedy NDAK play on a connected block graph.
pub fn clique_tree_outcome(g: &Graph) -> Result<(Outcome, usize)> {
    if !is_clique_tree(g) {
        return Err(Error::NotACliqueTree);
    }
    if !is_connected_graph(g) {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut alive = alloc::vec![true; n];
    let mut moves = 0;
    'play: loop {
        for u in 0..n {
            if !alive[u] {
                continue;
            }
            for &w in g.neighbors(u) {
                if w > u && alive[w] {
                    alive[u] = false;
                    alive[w] = false;
                    if connected_after(g, &alive) {
                        moves += 1;
                        continue 'play;
                    }
                    alive[u] = true;
                    alive[w] = true;
                }
            }
        }
        break;
    }
    Ok((Outcome::from_move_count(moves), moves))
}

fn connected_after(g: &Graph, alive: &[bool]) -> bool {
    let Some(start) = alive.iter().position(|&a| a) else {
        return true;
    };
    let mut seen = alloc::vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if alive[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == alive.iter().filter(|&&a| a).count()
}

/// Clique/stable split of a threshold graph with the stable side maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdPartition {
    /// `K`, sorted.
    pub clique: Vec<usize>,
    /// `S`, sorted.
    pub stable: Vec<usize>,
    /// The construction word and the vertex added at each step.
    pub construction_word: Vec<ThresholdStep>,
    pub construction_order: Vec<usize>,
    /// A pair of twins inside `K`, if any.
    pub clique_twins: Option<(usize, usize)>,
}

impl ThresholdPartition {
    pub fn clique_order(&self) -> usize {
        self.clique.len()
    }

    pub fn twin_free(&self) -> bool {
        self.clique_twins.is_none()
    }
}

/// Recognises a threshold graph by stripping isolated or universal vertices
/// and splits it into a minimal clique `K` and maximal stable set `S`.
pub fn threshold_partition(g: &Graph) -> Result<ThresholdPartition> {
    let n = g.vertex_count();
    let mut alive = alloc::vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut left = n;
    let mut stripped: Vec<(usize, ThresholdStep)> = Vec::with_capacity(n);
    while left > 0 {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .find_map(|v| {
                if deg[v] == 0 {
                    Some((v, ThresholdStep::Isolated))
                } else if deg[v] == left - 1 {
                    Some((v, ThresholdStep::Universal))
                } else {
                    None
                }
            })
            .ok_or(Error::NotThreshold)?;
        alive[pick.0] = false;
        left -= 1;
        for &w in g.neighbors(pick.0) {
            deg[w] -= 1;
        }
        stripped.push(pick);
    }
    stripped.reverse();
    let construction_order: Vec<usize> = stripped.iter().map(|p| p.0).collect();
    let construction_word: Vec<ThresholdStep> = stripped.iter().map(|p| p.1).collect();

    let mut in_clique = alloc::vec![false; n];
    for &(v, step) in &stripped {
        in_clique[v] = step == ThresholdStep::Universal;
    }
    // K is a clique, so at most one vertex can ever move; take the lowest index.
    if let Some(v) = (0..n).find(|&v| in_clique[v] && g.neighbors(v).iter().all(|&w| in_clique[w])) {
        in_clique[v] = false;
    }
    let clique: Vec<usize> = (0..n).filter(|&v| in_clique[v]).collect();
    let stable: Vec<usize> = (0..n).filter(|&v| !in_clique[v]).collect();

    let mut clique_twins = None;
    'twins: for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            let a = g.neighbors(u).iter().filter(|&&x| x != v);
            let b = g.neighbors(v).iter().filter(|&&x| x != u);
            if a.eq(b) {
                clique_twins = Some((u, v));
                break 'twins;
            }
        }
    }
    Ok(ThresholdPartition { clique, stable, construction_word, construction_order, clique_twins })
}

/// NDAK outcome of a connected threshold graph whose clique is twin-free.
///
/// For `|K| >= 5` the game plays like subtraction of 1 or 2 on a heap of
/// `|K| - 1`. Orders 3 and 4 are fixed; order 1 is a star; order 2 is
/// settled by a search of depth at most three.
pub fn threshold_outcome(g: &Graph) -> Result<Outcome> {
    let part = threshold_partition(g)?;
    if let Some((u, v)) = part.clique_twins {
        return Err(Error::CliqueHasTwins(u, v));
    }
    if !is_connected_graph(g) {
        return Err(Error::Disconnected);
    }
    let n = part.clique_order();
    if n > 0 && part.stable.len() < n {
        return Err(Error::InvalidParameters(alloc::format!(
            "twin-free clique of order {n} with only {} stable vertices",
            part.stable.len()
        )));
    }
    Ok(match n {
        0 => Outcome::P,
        1 => {
            if matches!(g.vertex_count(), 2 | 3) {
                Outcome::N
            } else {
                Outcome::P
            }
        }
        2 => {
            g.require_subsets("threshold search")?;
            match bounded_win(&Ruleset::ndak(), g, &g.all(), 3) {
                Some(true) => Outcome::N,
                Some(false) => Outcome::P,
                None => {
                    return Err(Error::InvalidParameters("order-2 threshold game longer than three moves".into()))
                }
            }
        }
        3 => Outcome::N,
        4 => Outcome::P,
        _ => {
            if (n - 1) % 3 == 0 {
                Outcome::P
            } else {
                Outcome::N
            }
        }
    })
}

/// Negamax limited to `depth` further moves; `None` if the limit is hit.
fn bounded_win(rs: &Ruleset, g: &Graph, alive: &VertexSubset, depth: usize) -> Option<bool> {
    let moves = move_orbits(rs, g, alive);
    if moves.is_empty() {
        return Some(false);
    }
    if depth == 0 {
        return None;
    }
    let mut win = false;
    for m in moves {
        if !bounded_win(rs, g, &alive.difference(&m.removed), depth - 1)? {
            win = true;
        }
    }
    Some(win)
}
