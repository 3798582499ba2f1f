//! Exhaustive small-graph corpora, deduplicated up to isomorphism.
//!
//! Each family is grown one vertex at a time from the previous order; every
//! member of the family has a vertex whose removal stays in the family, so the
//! augmentation reaches all of them.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::generate::{threshold, ThresholdStep};
use crate::graph::{Graph, GraphBuilder};
use crate::iso::{invariant, isomorphism};
use crate::structure::blocks;

/// Collects graphs, dropping any isomorphic to one already present.
#[derive(Default)]
pub struct IsoClasses {
    buckets: HashMap<u64, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `true` if `g` was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = invariant(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphism(&self.graphs[i], &g).is_some()) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

fn extend_with(g: &Graph, nbrs: &[usize]) -> Graph {
    let mut b = GraphBuilder::from_graph(g);
    let v = b.add_vertex();
    for &u in nbrs {
        b.add_edge(u, v);
    }
    b.build()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer = alloc::vec![Graph::empty(1)];
    for k in 1..n {
        let mut next = IsoClasses::new();
        for g in &layer {
            for mask in 1u32..(1 << k) {
                let nbrs: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
                next.insert(extend_with(g, &nbrs));
            }
        }
        layer = next.into_graphs();
    }
    layer
}

/// Connected graphs on `1..=n_max` vertices.
pub fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(connected_graphs).collect()
}

/// Trees on exactly `n` vertices up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer = alloc::vec![Graph::empty(1)];
    for k in 1..n {
        let mut next = IsoClasses::new();
        for g in &layer {
            for u in 0..k {
                next.insert(extend_with(g, &[u]));
            }
        }
        layer = next.into_graphs();
    }
    layer
}

/// Connected block graphs (every block a clique) on exactly `n` vertices.
pub fn block_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer = alloc::vec![Graph::empty(1)];
    for k in 1..n {
        let mut next = IsoClasses::new();
        for g in &layer {
            for u in 0..k {
                next.insert(extend_with(g, &[u]));
            }
            for b in blocks(g) {
                if b.len() >= 2 {
                    next.insert(extend_with(g, &b));
                }
            }
        }
        layer = next.into_graphs();
    }
    layer
}

/// Every threshold construction word of length `n` starting with an isolated
/// step. The first letter is immaterial, so this covers every threshold graph
/// on `n` vertices (with repeats up to isomorphism).
pub fn threshold_words(n: usize) -> Vec<Vec<ThresholdStep>> {
    if n == 0 {
        return Vec::new();
    }
    (0u64..1 << (n - 1))
        .map(|bits| {
            let mut w = alloc::vec![ThresholdStep::Isolated];
            w.extend((0..n - 1).map(|i| {
                if bits >> i & 1 == 1 {
                    ThresholdStep::Universal
                } else {
                    ThresholdStep::Isolated
                }
            }));
            w
        })
        .collect()
}

/// Threshold graphs on `n` vertices up to isomorphism.
pub fn threshold_graphs(n: usize) -> Vec<Graph> {
    let mut classes = IsoClasses::new();
    for w in threshold_words(n) {
        classes.insert(threshold(&w));
    }
    classes.into_graphs()
}
