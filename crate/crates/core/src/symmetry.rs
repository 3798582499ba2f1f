//! Edge-disjoint involutive automorphisms and the mirror strategy they give
//! the second player in Arc-Kayles.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{refine_colors, search_order};
use crate::rules::{apply_move, legal_moves, Move, Ruleset};
use crate::solver::{solve_outcome, Outcome};
use crate::subset::VertexSubset;

/// Cap for [`find_edge_disjoint_involution`]. GI gadgets of two 5-vertex
/// graphs reach 46 vertices.
pub const INVOLUTION_CAP: usize = 64;

/// Searches for an automorphism `f` with `f∘f = id` and `e ∩ f(e) = ∅` for
/// every edge `e`.
///
/// Equivalently no non-isolated vertex is fixed or sent to a neighbour.
/// Candidates must share the vertex's refined colour, and assigning
/// `f(v) = w` forces `f(w) = v`.
pub fn find_edge_disjoint_involution(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n > INVOLUTION_CAP {
        return Err(Error::CapExceeded { what: "find_edge_disjoint_involution", n, cap: INVOLUTION_CAP });
    }
    let colors = refine_colors(g, n);
    let order = search_order(g, &colors);
    let mut f = alloc::vec![usize::MAX; n];
    Ok(if assign(g, &colors, &order, 0, &mut f) { Some(f) } else { None })
}

fn assign(g: &Graph, colors: &[u64], order: &[usize], depth: usize, f: &mut [usize]) -> bool {
    let Some(pos) = order[depth..].iter().position(|&v| f[v] == usize::MAX) else {
        return true;
    };
    let depth = depth + pos;
    let v = order[depth];
    for w in 0..g.vertex_count() {
        if f[w] != usize::MAX || colors[w] != colors[v] {
            continue;
        }
        if g.degree(v) > 0 && (w == v || g.has_edge(v, w)) {
            continue;
        }
        f[v] = w;
        f[w] = v;
        if consistent(g, f, v) && consistent(g, f, w) && assign(g, colors, order, depth + 1, f) {
            return true;
        }
        f[v] = usize::MAX;
        f[w] = usize::MAX;
    }
    false
}

/// Adjacency of `v` to every mapped vertex agrees with adjacency of the images.
fn consistent(g: &Graph, f: &[usize], v: usize) -> bool {
    (0..g.vertex_count()).all(|x| f[x] == usize::MAX || g.has_edge(v, x) == g.has_edge(f[v], f[x]))
}

/// Checks the definition directly; the error names the first violated clause.
pub fn check_involution(g: &Graph, f: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    let bad = |msg: String| Err(Error::InvalidInvolution(msg));
    if f.len() != n {
        return bad(alloc::format!("{} images for {n} vertices", f.len()));
    }
    for v in 0..n {
        if f[v] >= n {
            return bad(alloc::format!("image of {v} out of range"));
        }
        if f[f[v]] != v {
            return bad(alloc::format!("f(f({v})) = {} is not {v}", f[f[v]]));
        }
    }
    for (u, v) in g.edges() {
        if !g.has_edge(f[u], f[v]) {
            return bad(alloc::format!("edge {u}-{v} maps to non-edge {}-{}", f[u], f[v]));
        }
        if [f[u], f[v]].iter().any(|&x| x == u || x == v) {
            return bad(alloc::format!("edge {u}-{v} meets its image {}-{}", f[u], f[v]));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryCheck {
    /// Every first-player move had a legal mirror answer.
    pub holds: bool,
    /// Whether every line was examined (small graphs) or a sample was played.
    pub exhaustive: bool,
    pub positions_checked: u64,
    /// The line ending in a move whose mirror answer is illegal.
    pub counterexample: Option<Vec<Move>>,
    /// Exact Arc-Kayles outcome for graphs of at most ten vertices.
    pub solved_outcome: Option<Outcome>,
    /// Pairs `u <-> f(u)` with `u < f(u)`, then fixed points as `u <-> u`.
    pub certificate: Vec<(usize, usize)>,
}

/// Plays the mirror strategy under Arc-Kayles.
pub fn verify_symmetry_strategy(g: &Graph, f: &[usize], seed: u64) -> Result<SymmetryCheck> {
    verify_symmetry_strategy_under(&Ruleset::ArcKayles, g, f, seed)
}

/// Plays the mirror strategy: the second player answers `e` with `f(e)`.
///
/// All lines are explored for graphs of at most 12 vertices; larger graphs get
/// 256 random playouts seeded by `seed`.
pub fn verify_symmetry_strategy_under(rs: &Ruleset, g: &Graph, f: &[usize], seed: u64) -> Result<SymmetryCheck> {
    check_involution(g, f)?;
    g.require_subsets("verify_symmetry_strategy")?;
    let mirror = |m: &Move| Move::new(m.removed.iter().map(|v| f[v]).collect());
    let mut checker = Mirror { rs, g, mirror: &mirror, visited: HashSet::new(), positions: 0 };
    let exhaustive = g.vertex_count() <= 12;
    let mut counterexample = None;
    if exhaustive {
        let mut line = Vec::new();
        if !checker.explore(g.all(), &mut line) {
            counterexample = Some(line);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..256 {
            if let Some(line) = checker.playout(&mut rng) {
                counterexample = Some(line);
                break;
            }
        }
    }
    let solved_outcome =
        if g.vertex_count() <= 10 { Some(solve_outcome(rs, g, &g.all())?.outcome) } else { None };
    let mut certificate: Vec<(usize, usize)> = (0..f.len()).filter(|&u| u < f[u]).map(|u| (u, f[u])).collect();
    certificate.extend((0..f.len()).filter(|&u| u == f[u]).map(|u| (u, u)));
    Ok(SymmetryCheck {
        holds: counterexample.is_none(),
        exhaustive,
        positions_checked: checker.positions,
        counterexample,
        solved_outcome,
        certificate,
    })
}

struct Mirror<'a, F: Fn(&Move) -> Move> {
    rs: &'a Ruleset,
    g: &'a Graph,
    mirror: &'a F,
    visited: HashSet<VertexSubset>,
    positions: u64,
}

impl<F: Fn(&Move) -> Move> Mirror<'_, F> {
    /// Depth-first over first-player moves; on failure `line` holds the
    /// offending sequence.
    fn explore(&mut self, alive: VertexSubset, line: &mut Vec<Move>) -> bool {
        if !self.visited.insert(alive) {
            return true;
        }
        self.positions += 1;
        for m in legal_moves(self.rs, self.g, &alive) {
            let after = alive.difference(&m.removed);
            let answer = (self.mirror)(&m);
            line.push(m);
            let Ok(next) = apply_move(self.rs, self.g, &after, &answer) else {
                return false;
            };
            line.push(answer);
            if !self.explore(next, line) {
                return false;
            }
            line.pop();
            line.pop();
        }
        true
    }

    fn playout(&mut self, rng: &mut ChaCha8Rng) -> Option<Vec<Move>> {
        let mut alive = self.g.all();
        let mut line = Vec::new();
        loop {
            self.positions += 1;
            let moves = legal_moves(self.rs, self.g, &alive);
            let m = *moves.choose(rng)?;
            let after = alive.difference(&m.removed);
            let answer = (self.mirror)(&m);
            line.push(m);
            match apply_move(self.rs, self.g, &after, &answer) {
                Ok(next) => {
                    line.push(answer);
                    alive = next;
                }
                Err(_) => return Some(line),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};

    #[test]
    fn cycles_and_paths() {
        let c8 = generate(&GraphFamily::Cycle(8)).unwrap();
        let f = find_edge_disjoint_involution(&c8).unwrap().unwrap();
        assert!(check_involution(&c8, &f).is_ok());
        let check = verify_symmetry_strategy(&c8, &f, 0).unwrap();
        assert!(check.holds && check.exhaustive);
        assert_eq!(check.solved_outcome, Some(Outcome::P));
        assert_eq!(check.certificate.len(), 4);
        assert!(find_edge_disjoint_involution(&generate(&GraphFamily::Path(4)).unwrap()).unwrap().is_none());
        assert!(find_edge_disjoint_involution(&generate(&GraphFamily::Cycle(6)).unwrap()).unwrap().is_some());
    }

    #[test]
    fn nd_rules_break_the_mirror() {
        let c6 = generate(&GraphFamily::Cycle(6)).unwrap();
        let f = find_edge_disjoint_involution(&c6).unwrap().unwrap();
        let check = verify_symmetry_strategy_under(&Ruleset::ndak(), &c6, &f, 0).unwrap();
        assert!(!check.holds);
        assert_eq!(check.counterexample.unwrap().len(), 1);
        assert_eq!(check.solved_outcome, Some(Outcome::N));
    }

    #[test]
    fn rejects_bad_maps() {
        let p2 = generate(&GraphFamily::Path(2)).unwrap();
        assert!(check_involution(&p2, &[1, 0]).is_err());
        assert!(check_involution(&p2, &[0, 1]).is_err());
        assert!(verify_symmetry_strategy(&p2, &[0], 0).is_err());
    }
}
