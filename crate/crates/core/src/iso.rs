//! Small-graph isomorphism by colour refinement plus backtracking.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Desk-scale cap for [`find_isomorphism`].
pub const ISOMORPHISM_CAP: usize = 12;

#[inline]
pub(crate) fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Colour refinement for a fixed number of rounds. Colours are graph-independent
/// hashes, so two graphs refined for the same number of rounds can be compared.
pub fn refine_colors(g: &Graph, rounds: usize) -> Vec<u64> {
    let n = g.vertex_count();
    let mut colors: Vec<u64> = (0..n).map(|v| mix(g.degree(v) as u64)).collect();
    let mut buf: Vec<u64> = Vec::new();
    for _ in 0..rounds {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                buf.clear();
                buf.extend(g.neighbors(v).iter().map(|&w| colors[w]));
                buf.sort_unstable();
                buf.iter().fold(mix(colors[v] ^ 0x5151), |h, &c| mix(h ^ c))
            })
            .collect();
        colors = next;
    }
    colors
}

/// An isomorphism invariant: equal graphs up to relabelling give equal values.
pub fn invariant(g: &Graph) -> u64 {
    let mut colors = refine_colors(g, g.vertex_count().min(8));
    colors.sort_unstable();
    let seed = mix(((g.vertex_count() as u64) << 32) ^ g.edge_count() as u64);
    colors.iter().fold(seed, |h, &c| mix(h ^ c))
}

/// Returns a bijection `f` with `uv ∈ E(g1) ⇔ f(u)f(v) ∈ E(g2)`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    for g in [g1, g2] {
        if g.vertex_count() > ISOMORPHISM_CAP {
            return Err(Error::CapExceeded { what: "find_isomorphism", n: g.vertex_count(), cap: ISOMORPHISM_CAP });
        }
    }
    Ok(isomorphism(g1, g2))
}

/// Uncapped search; exponential in the worst case.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let c1 = refine_colors(g1, n);
    let c2 = refine_colors(g2, n);
    let mut s1 = c1.clone();
    let mut s2 = c2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    let order = search_order(g1, &c1);
    let mut map = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    if extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Vertex order for backtracking: start from the rarest colour, then prefer
/// vertices with the most already-ordered neighbours.
pub(crate) fn search_order(g: &Graph, colors: &[u64]) -> Vec<usize> {
    let n = g.vertex_count();
    let freq = |c: u64| colors.iter().filter(|&&x| x == c).count();
    let mut placed = alloc::vec![false; n];
    let mut links = alloc::vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], usize::MAX - freq(colors[v]), g.degree(v), usize::MAX - v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[u64],
    c2: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.vertex_count() {
        if used[w] || c1[v] != c2[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| g1.has_edge(v, x) == g2.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn is_isomorphism(g1: &Graph, g2: &Graph, f: &[usize]) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || f.len() != n {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    for &x in f {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..n).all(|u| (0..n).all(|v| u == v || g1.has_edge(u, v) == g2.has_edge(f[u], f[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn examples() {
        let p3 = generate(&GraphFamily::Path(3)).unwrap();
        let relabelled = p3.relabel(&[1, 0, 2]);
        let f = find_isomorphism(&p3, &relabelled).unwrap().unwrap();
        assert!(is_isomorphism(&p3, &relabelled, &f));
        let k3 = generate(&GraphFamily::Complete(3)).unwrap();
        assert_eq!(find_isomorphism(&p3, &k3).unwrap(), None);
        let c6 = generate(&GraphFamily::Cycle(6)).unwrap();
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(find_isomorphism(&c6, &two_triangles).unwrap(), None);
        let big = generate(&GraphFamily::Path(13)).unwrap();
        assert!(find_isomorphism(&big, &big).is_err());
    }

    proptest! {
        #[test]
        fn relabelled_random_graphs_are_isomorphic(seed in any::<u64>(), n in 2usize..11, extra in 0usize..8) {
            let m = (n - 1 + extra).min(n * (n - 1) / 2);
            let g = generate(&GraphFamily::RandomConnected { n, m, seed }).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 7));
            let h = g.relabel(&perm);
            prop_assert_eq!(invariant(&g), invariant(&h));
            let f = find_isomorphism(&g, &h).unwrap().unwrap();
            prop_assert!(is_isomorphism(&g, &h, &f));
        }
    }

    #[test]
    fn returned_maps_verified_exhaustively() {
        // every pair of connected graphs on 4 vertices
        let graphs = crate::corpus::connected_graphs(4);
        for (i, a) in graphs.iter().enumerate() {
            for (j, b) in graphs.iter().enumerate() {
                let f = find_isomorphism(a, b).unwrap();
                assert_eq!(f.is_some(), i == j);
                if let Some(f) = f {
                    assert!(is_isomorphism(a, b, &f));
                }
            }
        }
    }
}
