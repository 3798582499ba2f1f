//! Extended outcomes of decorated core paths and the catalog of shortest
//! representatives.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::solver::Outcome;
use crate::tractable::greedy_tree_play;

use super::rules::trigger_floor;
use super::trees::{signature_in, word_string, Decoration, RootRemoved, TreeSignature};

/// How a piece of a split path behaves while hanging off a surviving vertex.
///
/// Free moves are stripped as Rule 2 would; what is left is described by its
/// size class and its rooted signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieceInv {
    /// Whether play always leaves two or more vertices, pinning the root.
    pub pinned: bool,
    /// Free moves left after stripping.
    pub free: u8,
    /// Residual order, capped at 5.
    pub size_class: u8,
    pub residual: TreeSignature,
}

/// Signature of a decorated path `P` between boundary vertices `a` and `b`.
///
/// A refinement of the tuple used by Rule 4: seven boundary scenarios instead
/// of five, rooted descriptions of every piece, and the move parities of the
/// path under 81 small tails at either end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedOutcome {
    /// Length, capped at 3.
    pub length_class: u8,
    /// Outcome and vertex-count parity of `aPb`, `Pb`, `aP`, `(P-u)b`,
    /// `a(P-v)`, `P-u-v` and `P`; `None` marks a boundary move that would
    /// strand a decoration.
    pub scenarios: [Option<(Outcome, bool)>; 7],
    /// `P` hanging at `a`, `P` at `b`, `P-u` at `b`, `P-v` at `a`.
    pub hanging: [Option<PieceInv>; 4],
    /// Left and right pieces over the legal first moves inside `P`.
    pub move_pairs: BTreeSet<(PieceInv, PieceInv)>,
    pub probes: u128,
    pub total_parity: bool,
}

impl ExtendedOutcome {
    /// Stable text encoding, used as the catalog key on disk.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{};", self.length_class);
        for sc in &self.scenarios {
            match sc {
                None => s.push('X'),
                Some((o, p)) => {
                    let _ = write!(s, "{o}{}", u8::from(*p));
                }
            }
        }
        s.push(';');
        for h in &self.hanging {
            match h {
                None => s.push('X'),
                Some(p) => push_piece(&mut s, p),
            }
        }
        s.push(';');
        for (i, (l, r)) in self.move_pairs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            push_piece(&mut s, l);
            s.push(':');
            push_piece(&mut s, r);
        }
        let _ = write!(s, ";{:032x};{}", self.probes, u8::from(self.total_parity));
        s
    }
}

fn push_piece(s: &mut String, p: &PieceInv) {
    let r = match p.residual.root_removed {
        RootRemoved::Disconnected => 'D',
        RootRemoved::Outcome(o) => o.as_str().chars().next().unwrap_or('?'),
    };
    let _ = write!(s, "{}{}{}{}{r}", u8::from(p.pinned), p.free, p.size_class, p.residual.o_with_root);
}

/// A decorated path with optional rooted tails glued to its ends.
struct SegmentTree {
    adj: Vec<Vec<usize>>,
    path: Vec<usize>,
    deco: Vec<Vec<usize>>,
    left: Option<usize>,
    right: Option<usize>,
}

impl SegmentTree {
    fn new(word: &[Decoration], left: Option<&[usize]>, right: Option<&[usize]>) -> Self {
        let mut adj: Vec<Vec<usize>> = Vec::new();
        let add = |adj: &mut Vec<Vec<usize>>| {
            adj.push(Vec::new());
            adj.len() - 1
        };
        fn edge(adj: &mut [Vec<usize>], u: usize, v: usize) {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut path = Vec::with_capacity(word.len());
        let mut deco = Vec::with_capacity(word.len());
        for (i, d) in word.iter().enumerate() {
            let p = add(&mut adj);
            if i > 0 {
                edge(&mut adj, path[i - 1], p);
            }
            path.push(p);
            let mut ids = alloc::vec![p];
            for &par in d.parents() {
                let x = add(&mut adj);
                edge(&mut adj, ids[par], x);
                ids.push(x);
            }
            ids.remove(0);
            deco.push(ids);
        }
        let tail = |adj: &mut Vec<Vec<usize>>, shape: Option<&[usize]>, end: usize| {
            shape.map(|parents| {
                let root = add(adj);
                edge(adj, root, end);
                let mut ids = alloc::vec![root];
                for &par in parents {
                    let x = add(adj);
                    edge(adj, ids[par], x);
                    ids.push(x);
                }
                root
            })
        };
        let first = path[0];
        let last = *path.last().expect("nonempty word");
        let left = tail(&mut adj, left, first);
        let right = tail(&mut adj, right, last);
        SegmentTree { adj, path, deco, left, right }
    }

    fn mask(&self, range: core::ops::Range<usize>) -> Vec<bool> {
        let mut m = alloc::vec![false; self.adj.len()];
        for i in range {
            m[self.path[i]] = true;
            for &x in &self.deco[i] {
                m[x] = true;
            }
        }
        m
    }

    fn moves(&self, alive: &[bool]) -> usize {
        greedy_tree_play(&self.adj, &mut alive.to_vec(), None, usize::MAX)
    }

    /// The vertices `alive` hanging at `root`, which is switched on.
    fn piece(&self, mut alive: Vec<bool>, root: usize) -> PieceInv {
        alive[root] = true;
        let mut end = alive.clone();
        let free = greedy_tree_play(&self.adj, &mut end, Some(root), usize::MAX);
        let pinned = end.iter().filter(|&&a| a).count() >= 3;
        let keep = if pinned { free % 2 } else { trigger_floor(free) };
        greedy_tree_play(&self.adj, &mut alive, Some(root), free - keep);
        let size = alive.iter().filter(|&&a| a).count() - 1;
        PieceInv {
            pinned,
            free: keep as u8,
            size_class: size.min(5) as u8,
            residual: signature_in(&self.adj, &alive, root),
        }
    }
}

/// Rooted tails of at most four vertices, the empty tail first.
const TAILS: [Option<&[usize]>; 9] = [
    None,
    Some(&[]),
    Some(&[0]),
    Some(&[0, 1]),
    Some(&[0, 0]),
    Some(&[0, 1, 2]),
    Some(&[0, 0, 2]),
    Some(&[0, 0, 0]),
    Some(&[0, 1, 1]),
];

/// Extended outcome of the path `word`, read from the `a` end to the `b` end.
pub fn extended_outcome(word: &[Decoration]) -> Result<ExtendedOutcome> {
    let l = word.len();
    if l == 0 {
        return Err(Error::InvalidParameters("empty path".into()));
    }
    let t = SegmentTree::new(word, Some(&[]), Some(&[]));
    let (a, b) = (t.left.expect("tail"), t.right.expect("tail"));
    let bare_first = word[0] == Decoration::Bare;
    let bare_last = word[l - 1] == Decoration::Bare;

    let with = |mut m: Vec<bool>, extra: &[usize]| {
        for &x in extra {
            m[x] = true;
        }
        m
    };
    let full = t.mask(0..l);
    let inner = if l >= 2 { t.mask(1..l - 1) } else { alloc::vec![false; t.adj.len()] };
    let scenario = |ok: bool, m: Vec<bool>| {
        ok.then(|| (Outcome::from_move_count(t.moves(&m)), m.iter().filter(|&&x| x).count() % 2 == 1))
    };
    let scenarios = [
        scenario(true, with(full.clone(), &[a, b])),
        scenario(true, with(full.clone(), &[b])),
        scenario(true, with(full.clone(), &[a])),
        scenario(bare_first, with(t.mask(1..l), &[b])),
        scenario(bare_last, with(t.mask(0..l - 1), &[a])),
        scenario(l >= 2 && bare_first && bare_last, inner),
        scenario(true, full.clone()),
    ];
    let hanging = [
        Some(t.piece(full.clone(), a)),
        Some(t.piece(full.clone(), b)),
        bare_first.then(|| t.piece(t.mask(1..l), b)),
        bare_last.then(|| t.piece(t.mask(0..l - 1), a)),
    ];

    let mut move_pairs = BTreeSet::new();
    for i in 0..l {
        if word[i] == Decoration::Leaf {
            move_pairs.insert((t.piece(t.mask(0..i), a), t.piece(t.mask(i + 1..l), b)));
        }
        if i + 1 < l && word[i] == Decoration::Bare && word[i + 1] == Decoration::Bare {
            move_pairs.insert((t.piece(t.mask(0..i), a), t.piece(t.mask(i + 2..l), b)));
        }
    }

    let mut probes = 0u128;
    for (i, x) in TAILS.iter().enumerate() {
        for (j, y) in TAILS.iter().enumerate() {
            let p = SegmentTree::new(word, *x, *y);
            if p.moves(&alloc::vec![true; p.adj.len()]) % 2 == 1 {
                probes |= 1 << (i * TAILS.len() + j);
            }
        }
    }
    let order = l + word.iter().map(|d| d.size()).sum::<usize>();
    debug_assert_eq!(order, t.path.len() + t.deco.iter().map(Vec::len).sum::<usize>());
    Ok(ExtendedOutcome {
        length_class: l.min(3) as u8,
        scenarios,
        hanging,
        move_pairs,
        probes,
        total_parity: order % 2 == 1,
    })
}

/// Shortest, then lexicographically least, decorated path per extended outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCatalog {
    l_max: usize,
    alphabet: Vec<Decoration>,
    map: BTreeMap<ExtendedOutcome, Vec<Decoration>>,
}

pub const DEFAULT_L_MAX: usize = 12;

impl PathCatalog {
    /// Enumerates every path of length at most `l_max` over `alphabet`.
    pub fn build(l_max: usize, alphabet: &[Decoration]) -> Result<Self> {
        let alphabet = normalize(l_max, alphabet)?;
        let k = alphabet.len();
        let mut map = BTreeMap::new();
        for len in 1..=l_max {
            let mut digits = alloc::vec![0usize; len];
            loop {
                let word: Vec<Decoration> = digits.iter().map(|&d| alphabet[d]).collect();
                map.entry(extended_outcome(&word)?).or_insert(word);
                let Some(pos) = digits.iter().rposition(|&d| d + 1 < k) else { break };
                digits[pos] += 1;
                for d in &mut digits[pos + 1..] {
                    *d = 0;
                }
            }
        }
        Ok(PathCatalog { l_max, alphabet, map })
    }

    /// The default catalog: bare and single-leaf vertices up to length 12.
    pub fn standard() -> Self {
        Self::build(DEFAULT_L_MAX, &[Decoration::Bare, Decoration::Leaf]).expect("valid parameters")
    }

    /// Rebuilds a catalog from stored `(key encoding, word)` pairs, recomputing
    /// every key.
    pub fn from_entries(l_max: usize, alphabet: &[Decoration], entries: &[(String, Vec<Decoration>)]) -> Result<Self> {
        let alphabet = normalize(l_max, alphabet)?;
        let mut map = BTreeMap::new();
        for (code, word) in entries {
            if word.len() > l_max || word.iter().any(|d| !alphabet.contains(d)) {
                return Err(Error::InvalidParameters(alloc::format!("entry {} outside the catalog range", word_string(word))));
            }
            let sig = extended_outcome(word)?;
            if sig.encode() != *code {
                return Err(Error::InvalidParameters(alloc::format!("stale key for {}", word_string(word))));
            }
            if map.insert(sig, word.clone()).is_some() {
                return Err(Error::InvalidParameters(alloc::format!("duplicate key for {}", word_string(word))));
            }
        }
        Ok(PathCatalog { l_max, alphabet, map })
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn alphabet(&self) -> &[Decoration] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn representative(&self, sig: &ExtendedOutcome) -> Option<&[Decoration]> {
        self.map.get(sig).map(Vec::as_slice)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ExtendedOutcome, &[Decoration])> {
        self.map.iter().map(|(k, v)| (k, v.as_slice()))
    }
}

fn normalize(l_max: usize, alphabet: &[Decoration]) -> Result<Vec<Decoration>> {
    if l_max < 3 {
        return Err(Error::InvalidParameters(alloc::format!("L_max {l_max} below 3")));
    }
    let mut a = alphabet.to_vec();
    a.sort_by_key(|d| d.letter());
    a.dedup();
    if a.is_empty() {
        return Err(Error::InvalidParameters("empty decoration alphabet".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::trees::{parse_word, CatalogTree};

    fn sig(w: &str) -> ExtendedOutcome {
        extended_outcome(&parse_word(w).unwrap()).unwrap()
    }

    #[test]
    fn two_bare_vertices() {
        let s = sig("00");
        assert_eq!(s.scenarios[5], Some((Outcome::P, false)));
        assert_eq!(s.move_pairs.len(), 1);
        assert_eq!(s.scenarios[0], Some((Outcome::P, false)));
    }

    #[test]
    fn b1_vertex_has_no_inner_moves() {
        let s = extended_outcome(&[Decoration::Tree(CatalogTree::B)]).unwrap();
        assert!(s.move_pairs.is_empty());
        assert_eq!(&s.scenarios[3..6], &[None, None, None]);
    }

    #[test]
    fn bare_catalog() {
        let c = PathCatalog::build(3, &[Decoration::Bare]).unwrap();
        assert_eq!(c.len(), 3);
        assert!(PathCatalog::build(2, &[Decoration::Bare]).is_err());
    }

    #[test]
    fn long_paths_fold_into_the_catalog() {
        let c = PathCatalog::build(10, &[Decoration::Bare, Decoration::Leaf]).unwrap();
        for w in ["0".repeat(30), "1".repeat(25), "01".repeat(13)] {
            let word = parse_word(&w).unwrap();
            let rep = c.representative(&extended_outcome(&word).unwrap()).expect("periodic signature");
            assert!(rep.len() <= 10);
        }
    }

    #[test]
    fn entries_reload() {
        let c = PathCatalog::build(5, &[Decoration::Bare, Decoration::Leaf]).unwrap();
        let stored: Vec<(String, Vec<Decoration>)> = c.entries().map(|(k, w)| (k.encode(), w.to_vec())).collect();
        let back = PathCatalog::from_entries(5, c.alphabet(), &stored).unwrap();
        assert_eq!(back, c);
        let mut bad = stored.clone();
        bad[0].0.push('x');
        assert!(PathCatalog::from_entries(5, c.alphabet(), &bad).is_err());
    }
}
