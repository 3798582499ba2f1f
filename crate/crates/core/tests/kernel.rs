use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vdgame_core::generate::{generate, GraphFamily};
use vdgame_core::graph::GraphBuilder;
use vdgame_core::kernel::*;
use vdgame_core::solver::{solve_outcome, Outcome};
use vdgame_core::{Graph, Ruleset};

fn catalog() -> &'static PathCatalog {
    static CATALOG: std::sync::OnceLock<PathCatalog> = std::sync::OnceLock::new();
    CATALOG.get_or_init(PathCatalog::standard)
}

fn ndak(g: &Graph) -> Outcome {
    solve_outcome(&Ruleset::ndak(), g, &g.all()).unwrap().outcome
}

fn splice(h: &Graph, a: usize, b: usize, word: &[Decoration]) -> Graph {
    let mut g = GraphBuilder::from_graph(h);
    let mut prev = a;
    for d in word {
        let p = g.add_vertex();
        g.add_edge(prev, p);
        let mut ids = vec![p];
        for &par in d.parents() {
            let x = g.add_vertex();
            g.add_edge(ids[par], x);
            ids.push(x);
        }
        prev = p;
    }
    g.add_edge(prev, b);
    g.build()
}

#[test]
fn every_rule_application_preserves_the_outcome() {
    let cat = catalog();
    let mut fired = [0usize; 4];
    for seed in 0..600u64 {
        let n = 8 + (seed as usize % 9);
        let fen = 1 + (seed as usize / 9) % 4;
        let Ok(g) = generate(&GraphFamily::LowFen { n, fen, seed }) else { continue };
        let want = ndak(&g);
        let rep = kernelize_observed(&g, cat, &mut |rule, before, after| {
            fired[usize::from(rule - 1)] += 1;
            assert_eq!(ndak(before), ndak(after), "rule {rule} seed {seed}\n{before:?}\n{after:?}");
        })
        .unwrap();
        assert_eq!(ndak(&rep.instance.graph), want, "seed {seed}");
        assert!(rep.branch_vertices <= rep.branch_bound);
        assert!(!rep.instance.to_move_parity);
        let again = kernelize(&rep.instance.graph, cat).unwrap();
        assert_eq!(again.instance.graph, rep.instance.graph, "idempotence, seed {seed}");
    }
    // Rule 4 needs a 13-vertex segment, which these sizes rarely leave.
    assert!(fired[..3].iter().all(|&f| f > 0), "{fired:?}");
}

#[test]
fn pipeline_folds_long_spliced_paths() {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut fired = 0;
    for seed in 0..40u64 {
        let hn = rng.gen_range(3..=5);
        let h = generate(&GraphFamily::RandomConnected { n: hn, m: hn, seed }).unwrap();
        let a = rng.gen_range(0..hn);
        let b = (a + 1 + rng.gen_range(0..hn - 1)) % hn;
        let len = rng.gen_range(13..=16);
        let word: Vec<Decoration> = (0..len).map(|_| if rng.gen_bool(0.7) { Decoration::Bare } else { Decoration::Leaf }).collect();
        let g = splice(&h, a, b, &word);
        if g.vertex_count() > 22 {
            continue;
        }
        let rep = kernelize_observed(&g, cat, &mut |rule, before, after| {
            if rule == 4 {
                fired += 1;
                assert_eq!(ndak(before), ndak(after), "seed {seed} {}", word_string(&word));
            }
        })
        .unwrap();
        assert_eq!(ndak(&rep.instance.graph), ndak(&g), "seed {seed}");
    }
    assert!(fired > 5, "{fired}");
}

#[test]
fn catalog_swaps_keep_outcomes_in_random_hosts() {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tried = 0;
    for seed in 0..600u64 {
        let hn = rng.gen_range(2..=6);
        let hm = rng.gen_range(hn - 1..=(hn * (hn - 1) / 2).min(hn + 2));
        let h = generate(&GraphFamily::RandomConnected { n: hn, m: hm, seed }).unwrap();
        let bridge = rng.gen_bool(0.5);
        let h = if bridge { h.disjoint_union(&generate(&GraphFamily::Cycle(3)).unwrap()) } else { h };
        let a = rng.gen_range(0..hn);
        let b = if bridge { hn + rng.gen_range(0..3) } else { (a + 1 + rng.gen_range(0..hn - 1)) % hn };
        let len = rng.gen_range(5..=11);
        let word: Vec<Decoration> =
            (0..len).map(|_| if rng.gen_bool(0.5) { Decoration::Leaf } else { Decoration::Bare }).collect();
        let rep = cat.representative(&extended_outcome(&word).unwrap()).unwrap();
        if rep.len() >= word.len() {
            continue;
        }
        let (g1, g2) = (splice(&h, a, b, &word), splice(&h, a, b, rep));
        if g1.vertex_count() > 24 {
            continue;
        }
        tried += 1;
        assert_eq!(ndak(&g1), ndak(&g2), "{h:?} a={a} b={b} {} -> {}", word_string(&word), word_string(rep));
    }
    assert!(tried > 100, "{tried}");
}

#[test]
fn decorated_theta_kernels_do_not_grow() {
    let cat = catalog();
    let sizes: Vec<usize> = [20, 40, 80, 160]
        .iter()
        .map(|&n| {
            let g = generate(&GraphFamily::DecoratedTheta(n)).unwrap();
            let rep = kernelize(&g, cat).unwrap();
            assert_eq!(rep.fen, 2);
            assert_eq!(rep.unmatched_segments, 0);
            rep.vertices()
        })
        .collect();
    assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{sizes:?}");
    let g = generate(&GraphFamily::DecoratedTheta(20)).unwrap();
    assert_eq!(ndak(&kernelize(&g, cat).unwrap().instance.graph), ndak(&g));
}

#[test]
fn c5_with_long_pendant_paths() {
    let mut b = GraphBuilder::from_graph(&generate(&GraphFamily::Cycle(5)).unwrap());
    for (at, len) in [(0, 7), (2, 6)] {
        let mut prev = at;
        for _ in 0..len {
            let x = b.add_vertex();
            b.add_edge(prev, x);
            prev = x;
        }
    }
    let g = b.build();
    let rep = kernelize(&g, catalog()).unwrap();
    assert!(rep.vertices() < g.vertex_count());
    assert_eq!(ndak(&rep.instance.graph), ndak(&g));
}

/// The pendant-edge example: `uv` hangs off a tree attached to a 5-cycle, and
/// deleting it does not change the outcome, yet it cannot simply be dropped.
fn pendant_edge_example() -> (Graph, usize, usize) {
    // a1 a2 a3 c1 b1 d1 l1 c2 l3 b2 d2 l2 u v
    let e = [(0, 3), (3, 1), (2, 3), (3, 4), (6, 7), (7, 3), (3, 9), (9, 10), (10, 5), (5, 4), (12, 11), (11, 7), (7, 8), (12, 13)];
    (Graph::from_edges(14, &e).unwrap(), 12, 13)
}

#[test]
fn pendant_edge_example_regression() {
    let (g, u, v) = pendant_edge_example();
    assert_eq!(ndak(&g), Outcome::N);
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&x| x != u && x != v).collect();
    assert_eq!(ndak(&g.induced(&keep).0), Outcome::N);
    let rep = kernelize(&g, catalog()).unwrap();
    assert_eq!(ndak(&rep.instance.graph), Outcome::N);
}

/// Deleting both moves of a pendant path lets the core vertex move at once;
/// here that flips the outcome, so such paths keep one move.
#[test]
fn pendant_path_cannot_be_emptied() {
    let g = Graph::from_edges(
        13,
        &[(0, 2), (0, 4), (1, 3), (1, 4), (2, 3), (2, 9), (2, 10), (2, 12), (3, 11), (4, 5), (5, 6), (6, 7), (7, 8)],
    )
    .unwrap();
    let emptied = g.induced(&[0, 1, 2, 3, 4, 9, 10, 11, 12]).0;
    assert_ne!(ndak(&g), ndak(&emptied));
    let out = rule2_pair_tree_moves(KernelInstance::new(g.clone()));
    assert_eq!(ndak(&out.graph), ndak(&g));
}
