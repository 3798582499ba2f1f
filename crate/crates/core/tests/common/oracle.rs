//! Brute-force game values straight from the move definitions.
//!
//! Positions are `u64` masks over at most 64 vertices. Nothing here calls the
//! library's solver, move generator or connectivity code.

#![allow(dead_code)]

use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Game<'a> {
    Arc,
    Node,
    NdNode,
    Csg(&'a [usize]),
}

pub struct Oracle<'a> {
    adj: Vec<u64>,
    game: Game<'a>,
    memo: HashMap<u64, u32>,
}

pub fn adjacency(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<u64> {
    assert!(n <= 64, "oracle is for small graphs");
    let mut adj = vec![0u64; n];
    for (u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Connectivity of the subgraph induced by `mask`; the empty mask counts as connected.
pub fn connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let mut grow = seen;
        for (v, &a) in adj.iter().enumerate() {
            if seen >> v & 1 == 1 {
                grow |= a & mask;
            }
        }
        if grow == seen {
            return seen == mask;
        }
        seen = grow;
    }
}

impl<'a> Oracle<'a> {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, game: Game<'a>) -> Self {
        Oracle { adj: adjacency(n, edges), game, memo: HashMap::new() }
    }

    pub fn full(&self) -> u64 {
        if self.adj.len() == 64 { u64::MAX } else { (1u64 << self.adj.len()) - 1 }
    }

    /// Removed sets of every legal move from `alive`.
    pub fn moves(&self, alive: u64) -> Vec<u64> {
        let n = self.adj.len();
        let mut out = Vec::new();
        match self.game {
            Game::Arc => {
                for u in 0..n {
                    for v in u + 1..n {
                        if alive >> u & 1 == 1 && alive >> v & 1 == 1 && self.adj[u] >> v & 1 == 1 {
                            out.push(1 << u | 1 << v);
                        }
                    }
                }
            }
            Game::Node | Game::NdNode => {
                for v in 0..n {
                    if alive >> v & 1 == 1 {
                        let removed = (self.adj[v] | 1 << v) & alive;
                        if self.game == Game::Node || connected(&self.adj, alive & !removed) {
                            out.push(removed);
                        }
                    }
                }
            }
            Game::Csg(set) => {
                // Every k-subset of alive, kept when both sides are connected.
                let bits: Vec<usize> = (0..n).filter(|&v| alive >> v & 1 == 1).collect();
                for &k in set.iter() {
                    if k == 0 || k > bits.len() {
                        continue;
                    }
                    let mut idx: Vec<usize> = (0..k).collect();
                    loop {
                        let sub = idx.iter().fold(0u64, |m, &i| m | 1 << bits[i]);
                        if connected(&self.adj, sub) && connected(&self.adj, alive & !sub) {
                            out.push(sub);
                        }
                        let Some(i) = (0..k).rev().find(|&i| idx[i] < bits.len() - k + i) else { break };
                        idx[i] += 1;
                        for j in i + 1..k {
                            idx[j] = idx[j - 1] + 1;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn grundy(&mut self, alive: u64) -> u32 {
        if let Some(&g) = self.memo.get(&alive) {
            return g;
        }
        let mut seen = Vec::new();
        for m in self.moves(alive) {
            seen.push(self.grundy(alive & !m));
        }
        let g = (0..).find(|x| !seen.contains(x)).unwrap();
        self.memo.insert(alive, g);
        g
    }

    /// `true` when the player to move wins.
    pub fn first_player_wins(&mut self) -> bool {
        let full = self.full();
        self.grundy(full) != 0
    }

    /// Shortest and longest maximal play from `alive`.
    pub fn play_lengths(&self, alive: u64, memo: &mut HashMap<u64, (usize, usize)>) -> (usize, usize) {
        if let Some(&r) = memo.get(&alive) {
            return r;
        }
        let moves = self.moves(alive);
        let r = if moves.is_empty() {
            (0, 0)
        } else {
            moves.iter().fold((usize::MAX, 0), |(lo, hi), &m| {
                let (a, b) = self.play_lengths(alive & !m, memo);
                (lo.min(a + 1), hi.max(b + 1))
            })
        };
        memo.insert(alive, r);
        r
    }
}

/// Grundy values of a heap game given by an octal code such as "0.07".
///
/// Digit `k` of the code lists which of "take `k` and leave 0, 1 or 2 heaps"
/// are allowed (bits 1, 2, 4).
pub fn octal_heap_values(code: &str, max: usize) -> Vec<u32> {
    let digits: Vec<u32> = code
        .trim_start_matches("0.")
        .chars()
        .map(|c| c.to_digit(8).expect("octal digit"))
        .collect();
    let mut g: Vec<u32> = Vec::with_capacity(max + 1);
    for h in 0..=max {
        let mut seen = Vec::new();
        for (i, &d) in digits.iter().enumerate() {
            let k = i + 1;
            if k > h {
                break;
            }
            let rest = h - k;
            if d & 1 != 0 && rest == 0 {
                seen.push(0);
            }
            if d & 2 != 0 && rest > 0 {
                seen.push(g[rest]);
            }
            if d & 4 != 0 && rest >= 2 {
                for a in 1..=rest / 2 {
                    seen.push(g[a] ^ g[rest - a]);
                }
            }
        }
        g.push((0..).find(|x| !seen.contains(x)).unwrap());
    }
    g
}
