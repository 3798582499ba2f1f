//! Rooted-tree signatures, the six replacement trees and the decorations a
//! core vertex may carry.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::Outcome;
use crate::structure::is_tree;
use crate::tractable::greedy_tree_play;

/// What is left of a rooted tree once the root is deleted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootRemoved {
    Disconnected,
    Outcome(Outcome),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeSignature {
    pub o_with_root: Outcome,
    pub root_removed: RootRemoved,
}

impl fmt::Display for TreeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root_removed {
            RootRemoved::Disconnected => write!(f, "({}, disc)", self.o_with_root),
            RootRemoved::Outcome(o) => write!(f, "({}, {o})", self.o_with_root),
        }
    }
}

/// Signature of the tree induced by `vertices`, rooted at `root`.
pub fn tree_signature(g: &Graph, vertices: &[usize], root: usize) -> Result<TreeSignature> {
    let (t, order) = g.induced(vertices);
    let r = order.binary_search(&root).map_err(|_| Error::InvalidParameters(alloc::format!("root {root} not in tree")))?;
    if !is_tree(&t) {
        return Err(Error::NotATree);
    }
    let adj: Vec<&[usize]> = (0..t.vertex_count()).map(|v| t.neighbors(v)).collect();
    Ok(signature_in(&adj, &alloc::vec![true; adj.len()], r))
}

/// Signature of the tree induced by `alive` in a forest given by adjacency lists.
pub(crate) fn signature_in<A: AsRef<[usize]>>(adj: &[A], alive: &[bool], root: usize) -> TreeSignature {
    let o_with_root = Outcome::from_move_count(greedy_tree_play(adj, &mut alive.to_vec(), None, usize::MAX));
    let branches = adj[root].as_ref().iter().filter(|&&w| alive[w]).count();
    let root_removed = if branches > 1 {
        RootRemoved::Disconnected
    } else {
        let mut rest = alive.to_vec();
        rest[root] = false;
        RootRemoved::Outcome(Outcome::from_move_count(greedy_tree_play(adj, &mut rest, None, usize::MAX)))
    };
    TreeSignature { o_with_root, root_removed }
}

/// Number of moves playable in a tree while its root stays put.
pub(crate) fn free_moves<A: AsRef<[usize]>>(adj: &[A], alive: &[bool], root: usize) -> usize {
    greedy_tree_play(adj, &mut alive.to_vec(), Some(root), usize::MAX)
}

/// The replacement trees, one per signature. Each is rooted at `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogTree {
    /// `u` with two leaves.
    A,
    /// `u` with three leaves.
    B,
    /// `u-x1-x2-x3-b` with two leaves on `b`.
    C,
    /// `u-b` with two leaves on `b`.
    D,
    /// `u-x-b` with two leaves on `b`.
    E,
    /// `u-x1-x2-b` with two leaves on `b`.
    F,
}

impl CatalogTree {
    pub const ALL: [CatalogTree; 6] =
        [CatalogTree::A, CatalogTree::B, CatalogTree::C, CatalogTree::D, CatalogTree::E, CatalogTree::F];

    /// Parent of each non-root vertex `1..`, with the root numbered 0.
    pub fn parents(self) -> &'static [usize] {
        match self {
            CatalogTree::A => &[0, 0],
            CatalogTree::B => &[0, 0, 0],
            CatalogTree::C => &[0, 1, 2, 3, 4, 4],
            CatalogTree::D => &[0, 1, 1],
            CatalogTree::E => &[0, 1, 2, 2],
            CatalogTree::F => &[0, 1, 2, 3, 3],
        }
    }

    pub fn signature(self) -> TreeSignature {
        use Outcome::{N, P};
        let (o, r) = match self {
            CatalogTree::A => (N, RootRemoved::Disconnected),
            CatalogTree::B => (P, RootRemoved::Disconnected),
            CatalogTree::C => (N, RootRemoved::Outcome(N)),
            CatalogTree::D => (P, RootRemoved::Outcome(N)),
            CatalogTree::E => (P, RootRemoved::Outcome(P)),
            CatalogTree::F => (N, RootRemoved::Outcome(P)),
        };
        TreeSignature { o_with_root: o, root_removed: r }
    }

    pub fn for_signature(sig: TreeSignature) -> CatalogTree {
        *Self::ALL.iter().find(|t| t.signature() == sig).expect("the six trees cover every signature")
    }

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn adjacency(self) -> Vec<Vec<usize>> {
        rooted_adjacency(self.parents())
    }
}

/// What hangs off a vertex of a core path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    /// Type 0.
    Bare,
    /// Type 1: a single leaf.
    Leaf,
    /// Type B: one of the replacement trees minus its root. `Tree(B)` is B1.
    Tree(CatalogTree),
}

impl Decoration {
    pub fn parents(self) -> &'static [usize] {
        match self {
            Decoration::Bare => &[],
            Decoration::Leaf => &[0],
            Decoration::Tree(t) => t.parents(),
        }
    }

    pub fn size(self) -> usize {
        self.parents().len()
    }

    pub fn letter(self) -> char {
        match self {
            Decoration::Bare => '0',
            Decoration::Leaf => '1',
            Decoration::Tree(t) => t.letter(),
        }
    }

    pub fn from_letter(c: char) -> Option<Decoration> {
        match c {
            '0' => Some(Decoration::Bare),
            '1' => Some(Decoration::Leaf),
            'a'..='f' => Some(Decoration::Tree(CatalogTree::ALL[c as usize - 'a' as usize])),
            _ => None,
        }
    }

    /// Canonical code of the decoration as a rooted tree.
    pub(crate) fn code(self) -> String {
        let adj = rooted_adjacency(self.parents());
        rooted_code(&adj, 0, usize::MAX, &|_| true)
    }

    /// Every decoration, in letter order.
    pub fn all() -> Vec<Decoration> {
        let mut v = alloc::vec![Decoration::Bare, Decoration::Leaf];
        v.extend(CatalogTree::ALL.iter().map(|&t| Decoration::Tree(t)));
        v
    }
}

pub fn word_string(word: &[Decoration]) -> String {
    word.iter().map(|d| d.letter()).collect()
}

pub fn parse_word(s: &str) -> Option<Vec<Decoration>> {
    s.chars().map(Decoration::from_letter).collect()
}

pub(crate) fn rooted_adjacency(parents: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = alloc::vec![Vec::new(); parents.len() + 1];
    for (i, &p) in parents.iter().enumerate() {
        adj[p].push(i + 1);
        adj[i + 1].push(p);
    }
    adj
}

/// AHU code of the subtree at `v` away from `parent`, restricted to `keep`.
pub(crate) fn rooted_code<A: AsRef<[usize]>>(adj: &[A], v: usize, parent: usize, keep: &dyn Fn(usize) -> bool) -> String {
    let mut kids: Vec<String> = adj[v]
        .as_ref()
        .iter()
        .filter(|&&w| w != parent && keep(w))
        .map(|&w| rooted_code(adj, w, v, keep))
        .collect();
    kids.sort();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn catalog_signatures_are_computed_ones() {
        for t in CatalogTree::ALL {
            let adj = t.adjacency();
            assert_eq!(signature_in(&adj, &alloc::vec![true; adj.len()], 0), t.signature(), "{t:?}");
            assert_eq!(free_moves(&adj, &alloc::vec![true; adj.len()], 0), 0, "{t:?}");
        }
    }

    #[test]
    fn figure_examples() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(tree_signature(&g, &[0, 1, 2], 0).unwrap(), CatalogTree::A.signature());
        let e = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let sig = tree_signature(&e, &[0, 1, 2, 3, 4], 0).unwrap();
        assert_eq!(sig.to_string(), "(P, P)");
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(tree_signature(&c4, &[0, 1, 2, 3], 0), Err(Error::NotATree));
    }

    #[test]
    fn letters_round_trip() {
        for d in Decoration::all() {
            assert_eq!(Decoration::from_letter(d.letter()), Some(d));
        }
        assert_eq!(word_string(&parse_word("01a").unwrap()), "01a");
        assert!(parse_word("0x").is_none());
    }
}
