//! Memoized outcome and Sprague-Grundy search over alive-vertex subsets.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::generate::{generate, GraphFamily};
use crate::graph::Graph;
use crate::rules::{legal_moves, move_orbits, Move, Ruleset};
use crate::structure::{connected_components, is_connected};
use crate::subset::VertexSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    /// The player to move wins.
    N,
    /// The previous player wins.
    P,
}

impl Outcome {
    pub fn from_grundy(g: u32) -> Self {
        if g == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }

    /// N for an odd number of remaining moves; used by strategy-free games.
    pub fn from_move_count(moves: usize) -> Self {
        if moves % 2 == 1 {
            Outcome::N
        } else {
            Outcome::P
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::N => "N",
            Outcome::P => "P",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Least non-negative integer missing from `values`.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let mut seen: Vec<bool> = Vec::new();
    for v in values {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub transposition_table: bool,
    pub orbit_pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { transposition_table: true, orbit_pruning: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport<M = Move> {
    pub outcome: Outcome,
    pub grundy: Option<u32>,
    /// For N positions: the smallest move (subset-lexicographic) to a P position.
    pub best_move: Option<M>,
    pub nodes_expanded: u64,
    pub table_entries: usize,
}

/// A search session on one host graph. Tables persist across queries, so
/// related positions (prefixes of a path, say) share work.
pub struct Solver<'a> {
    rs: Ruleset,
    g: &'a Graph,
    opts: SolveOptions,
    wins: HashMap<VertexSubset, bool>,
    values: HashMap<VertexSubset, u32>,
    nodes: u64,
}

impl<'a> Solver<'a> {
    pub fn new(rs: &Ruleset, g: &'a Graph, opts: SolveOptions) -> Result<Self> {
        g.require_subsets("exhaustive solver")?;
        Ok(Solver { rs: rs.clone(), g, opts, wins: HashMap::new(), values: HashMap::new(), nodes: 0 })
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    pub fn table_entries(&self) -> usize {
        self.wins.len() + self.values.len()
    }

    fn moves(&self, alive: &VertexSubset) -> Vec<Move> {
        if self.opts.orbit_pruning {
            move_orbits(&self.rs, self.g, alive)
        } else {
            legal_moves(&self.rs, self.g, alive)
        }
    }

    /// Whether the player to move wins from `alive`.
    pub fn wins(&mut self, alive: &VertexSubset) -> bool {
        if let Some(&w) = self.wins.get(alive) {
            return w;
        }
        self.nodes += 1;
        let mut win = false;
        for m in self.moves(alive) {
            if !self.wins(&alive.difference(&m.removed)) {
                win = true;
                break;
            }
        }
        if self.opts.transposition_table {
            self.wins.insert(*alive, win);
        }
        win
    }

    pub fn grundy(&mut self, alive: &VertexSubset) -> u32 {
        if self.rs.is_disconnecting() && !alive.is_empty() {
            let comps = connected_components(self.g, alive);
            if comps.len() > 1 {
                return comps.iter().fold(0, |acc, c| acc ^ self.grundy_connected(c));
            }
        }
        self.grundy_connected(alive)
    }

    fn grundy_connected(&mut self, alive: &VertexSubset) -> u32 {
        if let Some(&v) = self.values.get(alive) {
            return v;
        }
        self.nodes += 1;
        let moves = self.moves(alive);
        let options: Vec<u32> = moves.iter().map(|m| self.grundy(&alive.difference(&m.removed))).collect();
        let v = mex(options);
        if self.opts.transposition_table {
            self.values.insert(*alive, v);
        }
        v
    }

    /// First move in legal order whose option satisfies `losing`.
    fn first_move_where<F: FnMut(&mut Self, &VertexSubset) -> bool>(
        &mut self,
        alive: &VertexSubset,
        mut losing: F,
    ) -> Option<Move> {
        self.moves(alive).into_iter().find(|m| losing(self, &alive.difference(&m.removed)))
    }
}

fn check_position(rs: &Ruleset, g: &Graph, alive: &VertexSubset) -> Result<()> {
    g.require_subsets("exhaustive solver")?;
    if let Some(v) = alive.difference(&g.all()).first() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
    }
    if !rs.is_disconnecting() && !is_connected(g, alive) {
        return Err(Error::PositionDisconnected);
    }
    Ok(())
}

pub fn solve_outcome(rs: &Ruleset, g: &Graph, alive: &VertexSubset) -> Result<SolveReport> {
    solve_outcome_with(rs, g, alive, SolveOptions::default())
}

/// Negamax with early exit on the first P option.
pub fn solve_outcome_with(rs: &Ruleset, g: &Graph, alive: &VertexSubset, opts: SolveOptions) -> Result<SolveReport> {
    check_position(rs, g, alive)?;
    let mut s = Solver::new(rs, g, opts)?;
    let win = s.wins(alive);
    let best_move = if win { s.first_move_where(alive, |s, next| !s.wins(next)) } else { None };
    Ok(SolveReport {
        outcome: if win { Outcome::N } else { Outcome::P },
        grundy: None,
        best_move,
        nodes_expanded: s.nodes,
        table_entries: s.table_entries(),
    })
}

pub fn solve_grundy(rs: &Ruleset, g: &Graph, alive: &VertexSubset) -> Result<SolveReport> {
    solve_grundy_with(rs, g, alive, SolveOptions::default())
}

/// Grundy value; disconnecting games are split into components and XORed.
pub fn solve_grundy_with(rs: &Ruleset, g: &Graph, alive: &VertexSubset, opts: SolveOptions) -> Result<SolveReport> {
    check_position(rs, g, alive)?;
    let mut s = Solver::new(rs, g, opts)?;
    let v = s.grundy(alive);
    let best_move = if v != 0 { s.first_move_where(alive, |s, next| s.grundy(next) == 0) } else { None };
    Ok(SolveReport {
        outcome: Outcome::from_grundy(v),
        grundy: Some(v),
        best_move,
        nodes_expanded: s.nodes,
        table_entries: s.table_entries(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceFamily {
    Path,
    /// `C_n`; for `n < 3` the sequence uses `K_1` and `K_2`.
    Cycle,
}

/// Largest `n_max` accepted by [`grundy_sequence`].
pub const SEQUENCE_CAP: usize = 140;

/// Grundy values for `n = 1..=n_max`.
///
/// Paths share one table on the host `P_{n_max}`: the path on `n` vertices is
/// the prefix `{0, .., n-1}`.
pub fn grundy_sequence(rs: &Ruleset, family: SequenceFamily, n_max: usize) -> Result<Vec<u32>> {
    if n_max > SEQUENCE_CAP {
        return Err(Error::CapExceeded { what: "grundy_sequence", n: n_max, cap: SEQUENCE_CAP });
    }
    if n_max == 0 {
        return Ok(Vec::new());
    }
    match family {
        SequenceFamily::Path => {
            let host = generate(&GraphFamily::Path(n_max))?;
            let mut s = Solver::new(rs, &host, SolveOptions::default())?;
            Ok((1..=n_max).map(|n| s.grundy(&VertexSubset::full(n))).collect())
        }
        SequenceFamily::Cycle => (1..=n_max)
            .map(|n| {
                let g = if n < 3 { generate(&GraphFamily::Path(n))? } else { generate(&GraphFamily::Cycle(n))? };
                let mut s = Solver::new(rs, &g, SolveOptions::default())?;
                Ok(s.grundy(&g.all()))
            })
            .collect(),
    }
}

/// Lexicographically least `(preperiod, period)` such that
/// `seq[i] == seq[i + d]` for every `p <= i < len - d`, with the matched
/// window `len - p` at least `2d` long.
pub fn detect_period<T: PartialEq>(seq: &[T]) -> Option<(usize, usize)> {
    let len = seq.len();
    for p in 0..len {
        for d in 1..=(len - p) / 2 {
            if (p..len - d).all(|i| seq[i] == seq[i + d]) {
                return Some((p, d));
            }
        }
    }
    None
}

/// `g(m) = mex { g(m - k) : k ∈ S, k <= m }` for a single heap.
pub fn subtraction_heap_grundy(set: &[usize], m: usize) -> u32 {
    let mut g: Vec<u32> = Vec::with_capacity(m + 1);
    for h in 0..=m {
        let v = mex(set.iter().filter(|&&k| k <= h).map(|&k| g[h - k]));
        g.push(v);
    }
    g[m]
}

/// Heap values `g(0..=max)` of the octal game with digits `d_1 d_2 ...`
/// (the code `0.d_1d_2...`). Bit 1 of `d_k` allows taking `k` to leave
/// nothing, bit 2 to leave one heap, bit 4 to leave two.
pub fn octal_heap_values(digits: &[u8], max: usize) -> Vec<u32> {
    let mut g: Vec<u32> = Vec::with_capacity(max + 1);
    for h in 0..=max {
        let mut options = Vec::new();
        for (k, &d) in (1..).zip(digits).take_while(|&(k, _)| k <= h) {
            let rest = h - k;
            if d & 1 != 0 && rest == 0 {
                options.push(0);
            }
            if d & 2 != 0 && rest > 0 {
                options.push(g[rest]);
            }
            if d & 4 != 0 {
                options.extend((1..=rest / 2).map(|a| g[a] ^ g[rest - a]));
            }
        }
        g.push(mex(options));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};

    #[test]
    fn mex_examples() {
        assert_eq!(mex([]), 0);
        assert_eq!(mex([0, 1, 3]), 2);
        assert_eq!(mex([1, 2]), 0);
        assert_eq!(mex([0, 0, 1, 1]), 2);
    }

    #[test]
    fn heap_examples() {
        let s12: Vec<u32> = (0..6).map(|m| subtraction_heap_grundy(&[1, 2], m)).collect();
        assert_eq!(s12, [0, 1, 2, 0, 1, 2]);
        let s2: Vec<u32> = (0..5).map(|m| subtraction_heap_grundy(&[2], m)).collect();
        assert_eq!(s2, [0, 0, 1, 1, 0]);
        assert_eq!(subtraction_heap_grundy(&[3, 7], 0), 0);
    }

    #[test]
    fn octal_examples() {
        // Dawson's Kayles.
        assert_eq!(octal_heap_values(&[0, 7], 10), [0, 0, 1, 1, 2, 0, 3, 1, 1, 0, 3]);
        // Subtraction of 1 or 2 as the octal game 0.33.
        assert_eq!(octal_heap_values(&[3, 3], 6), [0, 1, 2, 0, 1, 2, 0]);
    }

    #[test]
    fn period_examples() {
        assert_eq!(detect_period(&[0, 1, 0, 1, 0, 1]), Some((0, 2)));
        assert_eq!(detect_period(&[5, 0, 1, 0, 1, 0, 1]), Some((1, 2)));
        assert_eq!(detect_period(&[1, 2, 3]), None);
    }

    #[test]
    fn small_solves() {
        let c6 = generate(&GraphFamily::Cycle(6)).unwrap();
        let r = solve_outcome(&Ruleset::ndak(), &c6, &c6.all()).unwrap();
        assert_eq!(r.outcome, Outcome::N);
        assert!(r.best_move.is_some());
        let star = generate(&GraphFamily::Star(3)).unwrap();
        assert_eq!(solve_outcome(&Ruleset::ndak(), &star, &star.all()).unwrap().outcome, Outcome::P);
        let p2 = generate(&GraphFamily::Path(2)).unwrap();
        let r = solve_outcome(&Ruleset::ArcKayles, &p2, &p2.all()).unwrap();
        assert_eq!(r.outcome, Outcome::N);
        assert_eq!(r.best_move.unwrap().vertices(), [0, 1]);
        let p1 = generate(&GraphFamily::Path(1)).unwrap();
        assert_eq!(solve_grundy(&Ruleset::ArcKayles, &p1, &p1.all()).unwrap().grundy, Some(0));
        assert_eq!(solve_grundy(&Ruleset::ArcKayles, &p2, &p2.all()).unwrap().grundy, Some(1));
    }

    #[test]
    fn rejects_disconnected_nd_positions() {
        let p4 = generate(&GraphFamily::Path(4)).unwrap();
        let split = VertexSubset::from_vertices([0, 2]);
        assert_eq!(solve_outcome(&Ruleset::ndak(), &p4, &split), Err(Error::PositionDisconnected));
        assert!(solve_outcome(&Ruleset::ArcKayles, &p4, &split).is_ok());
    }

    #[test]
    fn best_move_is_lexicographically_first_winning_move() {
        let p7 = generate(&GraphFamily::Path(7)).unwrap();
        let r = solve_grundy(&Ruleset::ArcKayles, &p7, &p7.all()).unwrap();
        let plain = solve_grundy_with(
            &Ruleset::ArcKayles,
            &p7,
            &p7.all(),
            SolveOptions { transposition_table: true, orbit_pruning: false },
        )
        .unwrap();
        assert_eq!(r.best_move, plain.best_move);
        let m = r.best_move.unwrap();
        let next = p7.all().difference(&m.removed);
        assert_eq!(solve_grundy(&Ruleset::ArcKayles, &p7, &next).unwrap().grundy, Some(0));
    }

    #[test]
    fn short_sequences() {
        assert_eq!(grundy_sequence(&Ruleset::ArcKayles, SequenceFamily::Path, 2).unwrap(), [0, 1]);
        assert_eq!(grundy_sequence(&Ruleset::Csg(alloc::vec![1]), SequenceFamily::Path, 4).unwrap(), [1, 0, 1, 0]);
        assert!(grundy_sequence(&Ruleset::ArcKayles, SequenceFamily::Path, SEQUENCE_CAP + 1).is_err());
    }
}
