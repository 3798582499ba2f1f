//! Reduction rules 1-4. Each takes the current instance and returns the
//! rewritten one, appending a record per change.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphBuilder};
use crate::tractable::greedy_tree_play;

use super::paths::{extended_outcome, PathCatalog};
use super::trees::{free_moves, rooted_adjacency, rooted_code, signature_in, word_string, CatalogTree, Decoration};
use super::{KernelInstance, RuleRecord};

/// Vertices of the 2-core, found by peeling with adjacency lists only.
pub(crate) fn core_mask(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut alive = alloc::vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Non-core vertices hanging at core vertex `u`, in BFS order.
fn forest_at(g: &Graph, core: &[bool], u: usize) -> Vec<usize> {
    let mut seen = alloc::vec![false; g.vertex_count()];
    seen[u] = true;
    let mut out: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !core[w]).collect();
    for &w in &out {
        seen[w] = true;
    }
    let mut i = 0;
    while i < out.len() {
        let v = out[i];
        i += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    out
}

/// `u` and its forest as a local tree; the root is local vertex 0.
fn local_tree(g: &Graph, u: usize, forest: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut ids = alloc::vec![u];
    ids.extend_from_slice(forest);
    let mut index = hashbrown::HashMap::with_capacity(ids.len());
    for (i, &v) in ids.iter().enumerate() {
        index.insert(v, i);
    }
    let adj = ids.iter().map(|&v| g.neighbors(v).iter().filter_map(|w| index.get(w).copied()).collect()).collect();
    (adj, ids)
}

/// Deletes `remove` and returns a builder on the survivors with the old-to-new map.
fn rewrite(g: &Graph, remove: &[bool]) -> (GraphBuilder, Vec<usize>) {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| !remove[v]).collect();
    let (h, order) = g.induced(&keep);
    let mut map = alloc::vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        map[v] = i;
    }
    (GraphBuilder::from_graph(&h), map)
}

fn graft(b: &mut GraphBuilder, at: usize, parents: &[usize]) {
    let mut ids = alloc::vec![at];
    for &p in parents {
        let x = b.add_vertex();
        b.add_edge(ids[p], x);
        ids.push(x);
    }
}

fn record(inst: &mut KernelInstance, rule: u8, removed: usize, added: usize, note: String) {
    inst.trace.push(RuleRecord { rule, removed, added, note });
}

/// Rule 1: keep at most three leaves on every vertex.
pub fn rule1_trim_leaves(mut inst: KernelInstance) -> KernelInstance {
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut remove = alloc::vec![false; n];
    let mut notes = Vec::new();
    for v in 0..n {
        let leaves: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| g.degree(w) == 1).collect();
        if leaves.len() > 3 && g.degree(v) > 1 {
            for &w in &leaves[3..] {
                remove[w] = true;
            }
            notes.push(alloc::format!("v{v}:-{}", leaves.len() - 3));
        }
    }
    let count = remove.iter().filter(|&&r| r).count();
    if count > 0 {
        inst.graph = rewrite(g, &remove).0.build();
        record(&mut inst, 1, count, 0, notes.join(" "));
    }
    inst
}

/// Moves left in a forest whose last move frees its attachment vertex: the
/// same parity, but never fewer than one.
pub(crate) fn trigger_floor(moves: usize) -> usize {
    match moves {
        0 => 0,
        m if m % 2 == 1 => 1,
        _ => 2,
    }
}

type PinnedForest = (usize, Vec<Vec<usize>>, Vec<usize>, usize);

/// Rule 2: delete legal tree moves in pairs.
///
/// A forest whose play always leaves at least two vertices keeps its core
/// vertex pinned for the whole game, so its moves are pure tempo; these are
/// pooled across the graph and stripped down to at most one. A forest that can
/// be played out (or down to the single leaf the core vertex may take with it)
/// releases its core vertex on its last move, so it keeps at least one move.
/// Trees are left alone.
pub fn rule2_pair_tree_moves(mut inst: KernelInstance) -> KernelInstance {
    let g = &inst.graph;
    let core = core_mask(g);
    if !core.iter().any(|&c| c) {
        return inst;
    }
    let n = g.vertex_count();
    let mut remove = alloc::vec![false; n];
    // (core vertex, forest adjacency, forest vertex ids, free moves)
    let mut pinned: Vec<PinnedForest> = Vec::new();
    let mut notes = Vec::new();
    let mut stripped = 0;
    let strip = |adj: &[Vec<usize>], ids: &[usize], k: usize, remove: &mut [bool]| {
        let mut alive = alloc::vec![true; adj.len()];
        greedy_tree_play(adj, &mut alive, Some(0), k);
        for (i, &a) in alive.iter().enumerate() {
            if !a {
                remove[ids[i]] = true;
            }
        }
    };
    for u in (0..n).filter(|&u| core[u]) {
        let forest = forest_at(g, &core, u);
        if forest.len() < 2 {
            continue;
        }
        let (adj, ids) = local_tree(g, u, &forest);
        let mut alive = alloc::vec![true; adj.len()];
        let moves = greedy_tree_play(&adj, &mut alive, Some(0), usize::MAX);
        let left = alive.iter().filter(|&&a| a).count() - 1;
        if moves == 0 {
            continue;
        }
        if left >= 2 {
            pinned.push((u, adj, ids, moves));
        } else if moves > trigger_floor(moves) {
            let k = moves - trigger_floor(moves);
            strip(&adj, &ids, k, &mut remove);
            stripped += k;
            notes.push(alloc::format!("v{u}:{moves}->{}", moves - k));
        }
    }
    let total: usize = pinned.iter().map(|p| p.3).sum();
    let mut budget = total - total % 2;
    if budget > 0 {
        for (u, adj, ids, moves) in &pinned {
            let k = (*moves).min(budget);
            if k > 0 {
                strip(adj, ids, k, &mut remove);
                budget -= k;
                stripped += k;
                notes.push(alloc::format!("v{u}:{moves}->{}", moves - k));
            }
        }
    }
    if stripped > 0 {
        debug_assert_eq!(stripped % 2, 0);
        inst.graph = rewrite(g, &remove).0.build();
        record(&mut inst, 2, 2 * stripped, 0, notes.join(" "));
    }
    inst
}

/// The replacement forest for `u` plus its forest, if one is strictly smaller.
fn replacement_forest(adj: &[Vec<usize>]) -> Option<(Vec<usize>, String)> {
    let order = adj.len();
    let forest = order - 1;
    let alive = alloc::vec![true; order];
    let sig = signature_in(adj, &alive, 0);
    match free_moves(adj, &alive, 0) {
        0 if forest >= 2 => {
            let t = CatalogTree::for_signature(sig);
            (t.parents().len() < forest).then(|| (t.parents().to_vec(), alloc::format!("{}", t.letter())))
        }
        1 if forest >= 4 => {
            let (x, y) = (1..order)
                .find_map(|x| adj[x].iter().find(|&&y| y > x && y != 0 && adj[x].len() + adj[y].len() <= 3).map(|&y| (x, y)))
                .expect("one free move");
            let mut rest = alive.clone();
            rest[x] = false;
            rest[y] = false;
            let t = CatalogTree::for_signature(signature_in(adj, &rest, 0));
            let base = t.parents();
            if base.len() + 2 >= forest {
                return None;
            }
            let tree = t.adjacency();
            // Hang a two-vertex path on the first leaf that keeps the signature.
            (1..tree.len()).filter(|&v| tree[v].len() == 1).find_map(|leaf| {
                let mut parents = base.to_vec();
                parents.push(leaf);
                parents.push(parents.len());
                let cand = rooted_adjacency(&parents);
                let on = alloc::vec![true; cand.len()];
                (cand.len() >= 5 && free_moves(&cand, &on, 0) == 1 && signature_in(&cand, &on, 0) == sig)
                    .then(|| (parents, alloc::format!("{}+p2@{leaf}", t.letter())))
            })
        }
        _ => None,
    }
}

/// Rule 3: swap each move-free forest (or one-move forest) at a core vertex for
/// the smallest tree with the same signature.
pub fn rule3_replace_forests(mut inst: KernelInstance) -> KernelInstance {
    let g = &inst.graph;
    let core = core_mask(g);
    let n = g.vertex_count();
    let mut remove = alloc::vec![false; n];
    let mut grafts: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut notes = Vec::new();
    let (mut removed, mut added) = (0, 0);
    for u in (0..n).filter(|&u| core[u]) {
        let forest = forest_at(g, &core, u);
        if forest.len() < 2 {
            continue;
        }
        let (adj, _) = local_tree(g, u, &forest);
        if let Some((parents, what)) = replacement_forest(&adj) {
            for &v in &forest {
                remove[v] = true;
            }
            removed += forest.len();
            added += parents.len();
            notes.push(alloc::format!("v{u}:{}->{what}", forest.len()));
            grafts.push((u, parents));
        }
    }
    if !grafts.is_empty() {
        let (mut b, map) = rewrite(g, &remove);
        for (u, parents) in &grafts {
            graft(&mut b, map[*u], parents);
        }
        inst.graph = b.build();
        record(&mut inst, 3, removed, added, notes.join(" "));
    }
    inst
}

/// A maximal run of degree-2 core vertices whose decorations lie in the
/// alphabet, read from `a` to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: usize,
    pub b: usize,
    pub path: Vec<usize>,
    pub word: Vec<Decoration>,
}

/// Segments of `g` whose vertices carry decorations from `alphabet`.
///
/// Runs closing into a cycle, or returning to the vertex they left, are
/// skipped.
pub fn path_segments(g: &Graph, alphabet: &[Decoration]) -> Vec<Segment> {
    let n = g.vertex_count();
    let core = core_mask(g);
    let codes: Vec<(String, Decoration)> = alphabet.iter().map(|&d| (d.code(), d)).collect();
    let mut deco: Vec<Option<Decoration>> = alloc::vec![None; n];
    for u in (0..n).filter(|&u| core[u]) {
        if g.neighbors(u).iter().filter(|&&w| core[w]).count() != 2 {
            continue;
        }
        let forest = forest_at(g, &core, u);
        let (adj, _) = local_tree(g, u, &forest);
        if free_moves(&adj, &alloc::vec![true; adj.len()], 0) > 0 {
            continue;
        }
        let code = rooted_code(&adj, 0, usize::MAX, &|_| true);
        deco[u] = codes.iter().find(|(c, _)| *c == code).map(|&(_, d)| d);
    }
    let core_nbrs = |v: usize| g.neighbors(v).iter().copied().filter(|&w| core[w]);
    let mut seen = alloc::vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || deco[s].is_none() {
            continue;
        }
        // Walk to one end, then collect the run from there.
        let step = |cur: usize, prev: usize| core_nbrs(cur).find(|&w| w != prev).expect("degree two");
        let (mut prev, mut cur) = (usize::MAX, s);
        let mut cyclic = false;
        let a = loop {
            let next = step(cur, prev);
            if deco[next].is_none() {
                break next;
            }
            if next == s {
                cyclic = true;
                break next;
            }
            (prev, cur) = (cur, next);
        };
        let mut path = Vec::new();
        prev = a;
        let b = loop {
            seen[cur] = true;
            path.push(cur);
            let next = step(cur, prev);
            if deco[next].is_none() || seen[next] {
                break next;
            }
            (prev, cur) = (cur, next);
        };
        if cyclic || a == b {
            continue;
        }
        let (a, b, path) = if a < b { (a, b, path) } else { (b, a, path.into_iter().rev().collect()) };
        let word = path.iter().map(|&v| deco[v].expect("run vertex")).collect();
        out.push(Segment { a, b, path, word });
    }
    out
}

/// Rule 4: replace every segment of length at least 3 by the catalog's
/// representative when that is shorter. Unmatched segments stay.
pub fn rule4_replace_paths(mut inst: KernelInstance, catalog: &PathCatalog) -> KernelInstance {
    let g = &inst.graph;
    let core = core_mask(g);
    let mut remove = alloc::vec![false; g.vertex_count()];
    let mut swaps: Vec<(usize, usize, Vec<Decoration>)> = Vec::new();
    let mut notes = Vec::new();
    let (mut removed, mut added) = (0, 0);
    for seg in path_segments(g, catalog.alphabet()) {
        if seg.word.len() < 3 {
            continue;
        }
        let Ok(sig) = extended_outcome(&seg.word) else { continue };
        let Some(rep) = catalog.representative(&sig) else { continue };
        if rep.len() >= seg.word.len() {
            continue;
        }
        for &p in &seg.path {
            remove[p] = true;
            removed += 1;
            for v in forest_at(g, &core, p) {
                remove[v] = true;
                removed += 1;
            }
        }
        added += rep.len() + rep.iter().map(|d| d.size()).sum::<usize>();
        notes.push(alloc::format!("{}..{}:{}->{}", seg.a, seg.b, word_string(&seg.word), word_string(rep)));
        swaps.push((seg.a, seg.b, rep.to_vec()));
    }
    if !swaps.is_empty() {
        let (mut bld, map) = rewrite(g, &remove);
        for (a, b, word) in &swaps {
            let mut prev = map[*a];
            for d in word {
                let p = bld.add_vertex();
                bld.add_edge(prev, p);
                graft(&mut bld, p, d.parents());
                prev = p;
            }
            bld.add_edge(prev, map[*b]);
        }
        inst.graph = bld.build();
        record(&mut inst, 4, removed, added, notes.join(" "));
    }
    inst
}
