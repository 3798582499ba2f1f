//! Graph family generators.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThresholdStep {
    Isolated,
    Universal,
}

impl ThresholdStep {
    /// Parses a construction word over `i` (isolated) and `u` (universal); whitespace is ignored.
    pub fn parse_word(word: &str) -> Result<Vec<ThresholdStep>> {
        word.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'i' | 'I' => Ok(ThresholdStep::Isolated),
                'u' | 'U' => Ok(ThresholdStep::Universal),
                _ => Err(Error::InvalidParameters(format!("threshold word letter {c:?}"))),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    /// `K_{1,q}`: centre 0, leaves `1..=q`.
    Star(usize),
    /// Three legs of the given lengths joined at centre 0.
    Spider(usize, usize, usize),
    Grid(usize, usize),
    Complete(usize),
    /// Random block graph; each block after the first is glued at a random existing vertex.
    CliqueTree { seed: u64, block_sizes: Vec<usize> },
    /// Vertices added in word order, each isolated or universal.
    Threshold(Vec<ThresholdStep>),
    /// Random split graph; every stable vertex gets at least one clique neighbour.
    Split { seed: u64, clique: usize, stable: usize, density: f64 },
    RandomConnected { n: usize, m: usize, seed: u64 },
    /// Random connected graph with feedback edge number `fen`: a small core
    /// carrying pendant paths and leaves, so that the kernel rules have work.
    LowFen { n: usize, fen: usize, seed: u64 },
    /// Feedback edge number 2: three paths between `a` and `b`. One has a
    /// single inner vertex, one is bare and one carries a leaf on every inner
    /// vertex. The bare length is at least 9; for `n` divisible by 4 it is
    /// 1 mod 4 and the decorated length is even.
    DecoratedTheta(usize),
}

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameters(msg)
}

pub fn generate(family: &GraphFamily) -> Result<Graph> {
    match *family {
        GraphFamily::Path(n) => {
            if n < 1 {
                return Err(invalid(format!("path needs n >= 1, got {n}")));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        GraphFamily::Cycle(n) => {
            if n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        GraphFamily::Star(q) => {
            let edges: Vec<_> = (1..=q).map(|i| (0, i)).collect();
            Graph::from_edges(q + 1, &edges)
        }
        GraphFamily::Spider(a, b, c) => {
            let mut g = GraphBuilder::with_vertices(1);
            for len in [a, b, c] {
                let mut prev = 0;
                for _ in 0..len {
                    let v = g.add_vertex();
                    g.add_edge(prev, v);
                    prev = v;
                }
            }
            Ok(g.build())
        }
        GraphFamily::Grid(r, c) => {
            if r < 1 || c < 1 {
                return Err(invalid(format!("grid needs positive sides, got {r}x{c}")));
            }
            let mut edges = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    let v = i * c + j;
                    if j + 1 < c {
                        edges.push((v, v + 1));
                    }
                    if i + 1 < r {
                        edges.push((v, v + c));
                    }
                }
            }
            Graph::from_edges(r * c, &edges)
        }
        GraphFamily::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        GraphFamily::CliqueTree { seed, ref block_sizes } => clique_tree(seed, block_sizes),
        GraphFamily::Threshold(ref word) => Ok(threshold(word)),
        GraphFamily::Split { seed, clique, stable, density } => split(seed, clique, stable, density),
        GraphFamily::RandomConnected { n, m, seed } => random_connected(n, m, seed),
        GraphFamily::LowFen { n, fen, seed } => low_fen(n, fen, seed),
        GraphFamily::DecoratedTheta(n) => decorated_theta(n),
    }
}

fn clique_tree(seed: u64, sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(invalid("clique tree needs at least one block".into()));
    }
    if sizes.len() > 1 && sizes.iter().any(|&s| s < 2) {
        return Err(invalid("blocks of a clique tree with several blocks need order >= 2".into()));
    }
    if sizes[0] == 0 {
        return Err(invalid("empty block".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = GraphBuilder::with_vertices(sizes[0]);
    add_clique(&mut g, &(0..sizes[0]).collect::<Vec<_>>());
    for &s in &sizes[1..] {
        let cut = rng.gen_range(0..g.vertex_count());
        let mut members = alloc::vec![cut];
        for _ in 1..s {
            members.push(g.add_vertex());
        }
        add_clique(&mut g, &members);
    }
    Ok(g.build())
}

fn add_clique(g: &mut GraphBuilder, members: &[usize]) {
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

/// Replays a construction word: vertex `i` is joined to every earlier vertex iff step `i` is universal.
pub fn threshold(word: &[ThresholdStep]) -> Graph {
    let mut g = GraphBuilder::with_vertices(word.len());
    for (v, step) in word.iter().enumerate() {
        if *step == ThresholdStep::Universal {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
    }
    g.build()
}

fn split(seed: u64, clique: usize, stable: usize, density: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(invalid(format!("density {density} outside [0, 1]")));
    }
    if clique == 0 && stable > 1 {
        return Err(invalid("stable vertices need a non-empty clique".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = GraphBuilder::with_vertices(clique + stable);
    add_clique(&mut g, &(0..clique).collect::<Vec<_>>());
    for s in clique..clique + stable {
        let mut any = false;
        for k in 0..clique {
            if rng.gen_bool(density) {
                g.add_edge(s, k);
                any = true;
            }
        }
        if !any && clique > 0 {
            let k = rng.gen_range(0..clique);
            g.add_edge(s, k);
        }
    }
    Ok(g.build())
}

fn low_fen(n: usize, fen: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Skeleton multigraph on up to three branch vertices with `fen` extra edges;
    // every skeleton edge becomes a path, loops and repeats get subdivided.
    let branch = rng.gen_range(1..=3usize);
    let mut skel: Vec<(usize, usize)> = (1..branch).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..fen {
        skel.push((rng.gen_range(0..branch), rng.gen_range(0..branch)));
    }
    let mut inner: Vec<usize> = skel
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let repeated = skel[..i].iter().any(|&(x, y)| (x, y) == (u, v) || (y, x) == (u, v));
            usize::from(u == v) * 2 + usize::from(repeated)
        })
        .collect();
    let base = branch + inner.iter().sum::<usize>();
    if fen == 0 || n < base {
        return Err(invalid(format!("no graph on {n} vertices with feedback edge number {fen}")));
    }
    let mut spare = n - base;
    // Lengthen paths with part of the spare budget; the rest decorates.
    let lengthen = rng.gen_range(0..=spare / 3);
    for _ in 0..lengthen {
        let i = rng.gen_range(0..inner.len());
        inner[i] += 1;
    }
    spare -= lengthen;
    let mut g = GraphBuilder::with_vertices(branch);
    let mut path_vertices = Vec::new();
    for (&(u, v), &k) in skel.iter().zip(&inner) {
        let mut prev = u;
        for _ in 0..k {
            let x = g.add_vertex();
            g.add_edge(prev, x);
            path_vertices.push(x);
            prev = x;
        }
        g.add_edge(prev, v);
    }
    let mut last = None;
    let mut hubs: Vec<usize> = Vec::new();
    for _ in 0..spare {
        let roll = rng.gen_range(0..100);
        let at = match last {
            Some(x) if roll < 25 => x,
            _ if roll < 45 && !hubs.is_empty() => hubs[rng.gen_range(0..hubs.len())],
            _ if roll < 85 && !path_vertices.is_empty() => path_vertices[rng.gen_range(0..path_vertices.len())],
            _ => rng.gen_range(0..g.vertex_count()),
        };
        let x = g.add_vertex();
        g.add_edge(at, x);
        hubs.push(at);
        last = Some(x);
    }
    Ok(g.build())
}

fn decorated_theta(n: usize) -> Result<Graph> {
    if n < 20 {
        return Err(invalid(format!("decorated theta needs n >= 20, got {n}")));
    }
    let rest = n - 3;
    let bare = (rest / 2).saturating_sub(rest / 2 % 4 + 3).max(9);
    let chord = (rest - bare) / 2;
    let mut g = GraphBuilder::with_vertices(3);
    let (a, b) = (0, 1);
    g.add_edge(a, 2);
    g.add_edge(2, b);
    let path = |g: &mut GraphBuilder, len: usize, leaves: bool| {
        let mut prev = a;
        for _ in 0..len {
            let x = g.add_vertex();
            g.add_edge(prev, x);
            if leaves {
                g.add_leaves(x, 1);
            }
            prev = x;
        }
        g.add_edge(prev, b);
    };
    path(&mut g, bare, false);
    path(&mut g, chord, true);
    // Odd n leaves one vertex over.
    if g.vertex_count() < n {
        g.add_leaves(2, 1);
    }
    Ok(g.build())
}

fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("random graph needs n >= 1".into()));
    }
    let max = n * (n - 1) / 2;
    if m + 1 < n || m > max {
        return Err(invalid(format!("{m} edges not realizable as a connected graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut g = GraphBuilder::with_vertices(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(perm[i], perm[j]);
    }
    let mut free: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                free.push((u, v));
            }
        }
    }
    free.shuffle(&mut rng);
    for &(u, v) in free.iter().take(m + 1 - n) {
        g.add_edge(u, v);
    }
    Ok(g.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{feedback_edge_number, is_clique_tree, is_connected_graph, is_split};

    #[test]
    fn small_families() {
        assert_eq!(generate(&GraphFamily::Path(3)).unwrap().edge_list(), [(0, 1), (1, 2)]);
        let c4 = generate(&GraphFamily::Cycle(4)).unwrap();
        let g22 = generate(&GraphFamily::Grid(2, 2)).unwrap();
        assert_eq!(g22.edge_count(), 4);
        assert!((0..4).all(|v| g22.degree(v) == 2));
        assert_eq!(c4.edge_count(), 4);
        let star = threshold(&ThresholdStep::parse_word("i i u").unwrap());
        assert_eq!(star.edge_list(), [(0, 2), (1, 2)]);
        assert!(generate(&GraphFamily::Path(0)).is_err());
        assert!(generate(&GraphFamily::RandomConnected { n: 4, m: 2, seed: 0 }).is_err());
        assert!(generate(&GraphFamily::RandomConnected { n: 4, m: 7, seed: 0 }).is_err());
    }

    #[test]
    fn grid_counts() {
        for r in 1..6 {
            for c in 1..6 {
                let g = generate(&GraphFamily::Grid(r, c)).unwrap();
                assert_eq!(g.vertex_count(), r * c);
                assert_eq!(g.edge_count(), r * (c - 1) + c * (r - 1));
            }
        }
    }

    #[test]
    fn random_families_have_their_shape() {
        for seed in 0..20 {
            let g = generate(&GraphFamily::RandomConnected { n: 10, m: 13, seed }).unwrap();
            assert!(is_connected_graph(&g));
            assert_eq!(feedback_edge_number(&g), 4);
            let ct = generate(&GraphFamily::CliqueTree { seed, block_sizes: alloc::vec![3, 2, 4, 2] }).unwrap();
            assert_eq!(ct.vertex_count(), 3 + 1 + 3 + 1);
            assert!(is_clique_tree(&ct));
            let s = generate(&GraphFamily::Split { seed, clique: 4, stable: 5, density: 0.4 }).unwrap();
            assert!(is_split(&s));
            assert!(is_connected_graph(&s));
            let g = generate(&GraphFamily::LowFen { n: 14, fen: 3, seed }).unwrap();
            assert_eq!(g.vertex_count(), 14);
            assert_eq!(feedback_edge_number(&g), 3);
            assert!(is_connected_graph(&g));
        }
        for n in [20, 40, 80, 160] {
            let g = generate(&GraphFamily::DecoratedTheta(n)).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert_eq!(feedback_edge_number(&g), 2);
        }
    }
}
