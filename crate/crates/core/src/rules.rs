//! Move laws for the vertex-deletion games.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{is_connected, twin_classes};
use crate::subset::VertexSubset;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ruleset {
    ArcKayles,
    NodeKayles,
    NdNodeKayles,
    /// Connected subtraction game; the set is kept sorted and deduplicated.
    Csg(Vec<usize>),
}

impl Ruleset {
    /// Non-disconnecting Arc-Kayles.
    pub fn ndak() -> Self {
        Ruleset::Csg(alloc::vec![2])
    }

    pub fn csg(set: &[usize]) -> Result<Self> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || s[0] == 0 {
            return Err(Error::InvalidParameters("subtraction set must be non-empty with elements >= 1".into()));
        }
        Ok(Ruleset::Csg(s))
    }

    /// Games whose positions may split into independent components.
    pub fn is_disconnecting(&self) -> bool {
        matches!(self, Ruleset::ArcKayles | Ruleset::NodeKayles)
    }
}

impl fmt::Display for Ruleset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ruleset::ArcKayles => f.write_str("arc-kayles"),
            Ruleset::NodeKayles => f.write_str("node-kayles"),
            Ruleset::NdNodeKayles => f.write_str("nd-node-kayles"),
            Ruleset::Csg(s) => {
                f.write_str("csg:")?;
                for (i, k) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Ruleset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "arc-kayles" => Ok(Ruleset::ArcKayles),
            "node-kayles" => Ok(Ruleset::NodeKayles),
            "nd-node-kayles" => Ok(Ruleset::NdNodeKayles),
            "ndak" => Ok(Ruleset::ndak()),
            _ => {
                let Some(list) = t.strip_prefix("csg:") else {
                    return Err(Error::InvalidParameters(alloc::format!("unknown ruleset {s:?}")));
                };
                let set = list
                    .split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<core::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::InvalidParameters(alloc::format!("bad subtraction set in {s:?}")))?;
                Ruleset::csg(&set)
            }
        }
    }
}

/// A move is the set of vertices it deletes.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub removed: VertexSubset,
}

impl Move {
    pub fn new(removed: VertexSubset) -> Self {
        Move { removed }
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.removed.iter().collect()
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Move{:?}", self.removed)
    }
}

impl PartialOrd for Move {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Subset-lexicographic order of the removed sets.
impl Ord for Move {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.removed.lex_cmp(&other.removed)
    }
}

/// Why [`apply_move`] refused a move.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IllegalMove {
    #[error("a move must remove at least one vertex")]
    Empty,
    #[error("vertex {0} is not in the position")]
    NotAlive(usize),
    #[error("arc-kayles moves remove exactly the two ends of an edge")]
    NotAnEdge,
    #[error("node-kayles moves remove a closed neighbourhood")]
    NotClosedNeighbourhood,
    #[error("{0} vertices removed, not an order in the subtraction set")]
    OrderNotInSet(usize),
    #[error("removed vertices do not induce a connected subgraph")]
    RemovedDisconnected,
    #[error("the remaining graph would be disconnected")]
    ResidueDisconnected,
}

/// All legal moves, sorted by removed set.
///
/// Non-disconnecting rulesets assume `G[alive]` is connected. The graph must
/// fit in a [`VertexSubset`].
pub fn legal_moves(rs: &Ruleset, g: &Graph, alive: &VertexSubset) -> Vec<Move> {
    let mut moves = Vec::new();
    match rs {
        Ruleset::ArcKayles => {
            for u in alive.iter() {
                for &w in g.neighbors(u) {
                    if w > u && alive.contains(w) {
                        moves.push(Move::new(VertexSubset::from_vertices([u, w])));
                    }
                }
            }
        }
        Ruleset::NodeKayles | Ruleset::NdNodeKayles => {
            let check = matches!(rs, Ruleset::NdNodeKayles);
            for v in alive.iter() {
                let mut closed = g.nbr_mask(v).intersection(alive);
                closed.insert(v);
                if !check || is_connected(g, &alive.difference(&closed)) {
                    moves.push(Move::new(closed));
                }
            }
        }
        Ruleset::Csg(set) => {
            for &k in set {
                for_each_connected_subset(g, alive, k, |w| {
                    if is_connected(g, &alive.difference(&w)) {
                        moves.push(Move::new(w));
                    }
                });
            }
        }
    }
    moves.sort_unstable();
    moves.dedup();
    moves
}

/// Calls `f` once for every `W ⊆ alive` with `|W| = k` and `G[W]` connected.
///
/// Each set is grown from its minimum vertex; a vertex joins the extension
/// frontier only when first seen adjacent to the set, so no set repeats.
pub fn for_each_connected_subset<F: FnMut(VertexSubset)>(g: &Graph, alive: &VertexSubset, k: usize, mut f: F) {
    if k == 0 {
        return;
    }
    for anchor in alive.iter() {
        let mut allowed = *alive;
        for v in 0..=anchor {
            allowed.remove(v);
        }
        let set = VertexSubset::singleton(anchor);
        let ext = g.nbr_mask(anchor).intersection(&allowed);
        let mut seen = ext;
        seen.insert(anchor);
        extend(g, &allowed, set, ext, seen, k, &mut f);
    }
}

fn extend<F: FnMut(VertexSubset)>(
    g: &Graph,
    allowed: &VertexSubset,
    set: VertexSubset,
    mut ext: VertexSubset,
    seen: VertexSubset,
    k: usize,
    f: &mut F,
) {
    if set.len() == k {
        f(set);
        return;
    }
    while let Some(w) = ext.first() {
        ext.remove(w);
        let fresh = g.nbr_mask(w).intersection(allowed).difference(&seen);
        let mut next = set;
        next.insert(w);
        extend(g, allowed, next, ext.union(&fresh), seen.union(&fresh), k, f);
    }
}

/// Checks `m` against the ruleset and returns `alive \ removed`.
pub fn apply_move(rs: &Ruleset, g: &Graph, alive: &VertexSubset, m: &Move) -> Result<VertexSubset, IllegalMove> {
    let w = m.removed;
    if w.is_empty() {
        return Err(IllegalMove::Empty);
    }
    if let Some(v) = w.difference(alive).first() {
        return Err(IllegalMove::NotAlive(v));
    }
    let rest = alive.difference(&w);
    match rs {
        Ruleset::ArcKayles => {
            let v: Vec<usize> = w.iter().collect();
            if v.len() != 2 || !g.has_edge(v[0], v[1]) {
                return Err(IllegalMove::NotAnEdge);
            }
        }
        Ruleset::NodeKayles | Ruleset::NdNodeKayles => {
            let is_closed = w.iter().any(|v| {
                let mut c = g.nbr_mask(v).intersection(alive);
                c.insert(v);
                c == w
            });
            if !is_closed {
                return Err(IllegalMove::NotClosedNeighbourhood);
            }
            if matches!(rs, Ruleset::NdNodeKayles) && !is_connected(g, &rest) {
                return Err(IllegalMove::ResidueDisconnected);
            }
        }
        Ruleset::Csg(set) => {
            if !set.contains(&w.len()) {
                return Err(IllegalMove::OrderNotInSet(w.len()));
            }
            if !is_connected(g, &w) {
                return Err(IllegalMove::RemovedDisconnected);
            }
            if !is_connected(g, &rest) {
                return Err(IllegalMove::ResidueDisconnected);
            }
        }
    }
    Ok(rest)
}

/// One legal move per orbit under permutations inside twin classes.
///
/// Swapping two twins is an automorphism of `G[alive]`, so moves that remove
/// the same number of vertices from every twin class lead to isomorphic
/// positions. The representative kept is the first in legal-move order.
pub fn move_orbits(rs: &Ruleset, g: &Graph, alive: &VertexSubset) -> Vec<Move> {
    let moves = legal_moves(rs, g, alive);
    if moves.len() < 2 {
        return moves;
    }
    orbit_representatives(g, alive, moves)
}

pub(crate) fn orbit_representatives(g: &Graph, alive: &VertexSubset, moves: Vec<Move>) -> Vec<Move> {
    let classes = twin_classes(g, alive);
    if classes.len() == alive.len() {
        return moves;
    }
    let mut class_of = alloc::vec![usize::MAX; g.vertex_count()];
    for (i, c) in classes.iter().enumerate() {
        for v in c.iter() {
            class_of[v] = i;
        }
    }
    let mut seen: hashbrown::HashSet<Vec<(usize, usize)>> = hashbrown::HashSet::new();
    moves
        .into_iter()
        .filter(|m| {
            let mut key: Vec<(usize, usize)> = Vec::new();
            for v in m.removed.iter() {
                let c = class_of[v];
                match key.iter_mut().find(|e| e.0 == c) {
                    Some(e) => e.1 += 1,
                    None => key.push((c, 1)),
                }
            }
            key.sort_unstable();
            seen.insert(key)
        })
        .collect()
}

/// Human-readable list of removed vertices, e.g. `{0, 1}`.
pub fn format_move(m: &Move) -> String {
    alloc::format!("{:?}", m.removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};
    use alloc::string::ToString;

    fn sets(moves: &[Move]) -> Vec<Vec<usize>> {
        moves.iter().map(Move::vertices).collect()
    }

    #[test]
    fn parse_and_display() {
        for s in ["arc-kayles", "node-kayles", "nd-node-kayles", "csg:2", "csg:2,3"] {
            assert_eq!(s.parse::<Ruleset>().unwrap().to_string(), s);
        }
        assert_eq!("csg:3,2,2".parse::<Ruleset>().unwrap(), Ruleset::Csg(alloc::vec![2, 3]));
        assert!("csg:0".parse::<Ruleset>().is_err());
        assert!("csg:".parse::<Ruleset>().is_err());
        assert!("kayles".parse::<Ruleset>().is_err());
    }

    #[test]
    fn documented_move_lists() {
        let p4 = generate(&GraphFamily::Path(4)).unwrap();
        assert_eq!(sets(&legal_moves(&Ruleset::ndak(), &p4, &p4.all())), [[0, 1], [2, 3]]);
        let star = generate(&GraphFamily::Star(3)).unwrap();
        assert_eq!(legal_moves(&Ruleset::ArcKayles, &star, &star.all()).len(), 3);
        assert!(legal_moves(&Ruleset::ndak(), &star, &star.all()).is_empty());
        let k4 = generate(&GraphFamily::Complete(4)).unwrap();
        assert_eq!(legal_moves(&Ruleset::ArcKayles, &k4, &k4.all()).len(), 6);
        assert_eq!(move_orbits(&Ruleset::ArcKayles, &k4, &k4.all()).len(), 1);
        let star5 = generate(&GraphFamily::Star(5)).unwrap();
        assert!(move_orbits(&Ruleset::ndak(), &star5, &star5.all()).is_empty());
    }

    #[test]
    fn apply_move_diagnostics() {
        let p4 = generate(&GraphFamily::Path(4)).unwrap();
        let all = p4.all();
        let m = |v: &[usize]| Move::new(VertexSubset::from_vertices(v.iter().copied()));
        assert_eq!(apply_move(&Ruleset::ndak(), &p4, &all, &m(&[0, 1])), Ok(VertexSubset::from_vertices([2, 3])));
        assert_eq!(apply_move(&Ruleset::ndak(), &p4, &all, &m(&[])), Err(IllegalMove::Empty));
        assert_eq!(apply_move(&Ruleset::ndak(), &p4, &all, &m(&[1, 2])), Err(IllegalMove::ResidueDisconnected));
        assert_eq!(apply_move(&Ruleset::ndak(), &p4, &all, &m(&[0, 2])), Err(IllegalMove::RemovedDisconnected));
        assert_eq!(apply_move(&Ruleset::ndak(), &p4, &all, &m(&[0])), Err(IllegalMove::OrderNotInSet(1)));
        assert_eq!(apply_move(&Ruleset::ArcKayles, &p4, &all, &m(&[0, 2])), Err(IllegalMove::NotAnEdge));
        assert_eq!(
            apply_move(&Ruleset::NodeKayles, &p4, &all, &m(&[0])),
            Err(IllegalMove::NotClosedNeighbourhood)
        );
        let rest = VertexSubset::from_vertices([2, 3]);
        assert_eq!(apply_move(&Ruleset::ArcKayles, &p4, &rest, &m(&[0, 1])), Err(IllegalMove::NotAlive(0)));
    }

    #[test]
    fn connected_subsets_are_enumerated_once() {
        let g = generate(&GraphFamily::Grid(3, 3)).unwrap();
        for k in 1..=5 {
            let mut found = Vec::new();
            for_each_connected_subset(&g, &g.all(), k, |w| found.push(w));
            let mut brute = Vec::new();
            for bits in 0u32..(1 << 9) {
                if bits.count_ones() as usize == k {
                    let w = VertexSubset::from_vertices((0..9).filter(|i| bits >> i & 1 == 1));
                    if is_connected(&g, &w) {
                        brute.push(w);
                    }
                }
            }
            found.sort_by(|a, b| a.lex_cmp(b));
            brute.sort_by(|a, b| a.lex_cmp(b));
            assert_eq!(found, brute, "k = {k}");
        }
    }
}
