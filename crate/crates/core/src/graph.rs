//! Immutable simple undirected graphs.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::subset::{VertexSubset, SUBSET_CAPACITY};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted. Graphs small enough for [`VertexSubset`] also
/// carry neighbourhood bitmasks, which the game machinery relies on; larger
/// graphs (gadget outputs, girth-boosted constructions) support only the
/// list-based structural queries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    masks: Vec<VertexSubset>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self::build(alloc::vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and out-of-range indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self::build(adj))
    }

    fn build(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let masks = if n <= SUBSET_CAPACITY {
            adj.iter().map(|l| l.iter().copied().collect()).collect()
        } else {
            Vec::new()
        };
        Graph { adj, masks, edge_count, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameters(alloc::format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Whether positions on this graph fit in a [`VertexSubset`].
    #[inline]
    pub fn fits_subsets(&self) -> bool {
        self.vertex_count() <= SUBSET_CAPACITY
    }

    pub fn require_subsets(&self, what: &'static str) -> Result<()> {
        if self.fits_subsets() {
            Ok(())
        } else {
            Err(Error::CapExceeded { what, n: self.vertex_count(), cap: SUBSET_CAPACITY })
        }
    }

    /// Neighbourhood as a bitmask. Panics on graphs wider than [`SUBSET_CAPACITY`].
    #[inline]
    pub fn nbr_mask(&self, v: usize) -> &VertexSubset {
        &self.masks[v]
    }

    pub fn all(&self) -> VertexSubset {
        VertexSubset::full(self.vertex_count())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// The subgraph induced by `keep`, relabelled densely in ascending order.
    /// Returns the new graph and, for each new vertex, its index in `self`.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = alloc::vec![usize::MAX; self.vertex_count()];
        let mut order: Vec<usize> = keep.to_vec();
        order.sort_unstable();
        order.dedup();
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
            .collect();
        let mut g = Self::build(adj);
        if let Some(l) = &self.labels {
            g.labels = Some(order.iter().map(|&v| l[v].clone()).collect());
        }
        (g, order)
    }

    pub fn induced_subset(&self, keep: &VertexSubset) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = keep.iter().collect();
        self.induced(&keep)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + off).collect()));
        Self::build(adj)
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = alloc::vec![Vec::new(); self.vertex_count()];
        for (u, l) in self.adj.iter().enumerate() {
            adj[perm[u]] = l.iter().map(|&w| perm[w]).collect();
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        Self::build(adj)
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edge_list())
    }
}

/// Incremental construction helper used by generators and gadgets.
#[derive(Default, Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder { adj: alloc::vec![Vec::new(); n] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { adj: g.adj.clone() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `u`-`v` unless it is already present. Self-loops are a logic error.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        if !self.adj[u].contains(&v) {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Attaches `k` fresh leaves to `v` and returns them.
    pub fn add_leaves(&mut self, v: usize, k: usize) -> Vec<usize> {
        (0..k)
            .map(|_| {
                let l = self.add_vertex();
                self.add_edge(v, l);
                l
            })
            .collect()
    }

    pub fn build(mut self) -> Graph {
        for l in self.adj.iter_mut() {
            l.sort_unstable();
        }
        Graph::build(self.adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn induced_relabels_in_order() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = p4.induced(&[3, 1, 2]);
        assert_eq!(map, [1, 2, 3]);
        assert_eq!(h.edge_list(), [(0, 1), (1, 2)]);
    }

    #[test]
    fn wide_graphs_skip_masks() {
        let g = Graph::empty(SUBSET_CAPACITY + 1);
        assert!(!g.fits_subsets());
        assert!(g.require_subsets("test").is_err());
    }
}
