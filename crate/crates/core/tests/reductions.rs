use vdgame_core::corpus::connected_graphs_up_to;
use vdgame_core::reductions::*;
use vdgame_core::solver::{solve_grundy, solve_outcome};
use vdgame_core::structure::{girth, is_bipartite, is_split};
use vdgame_core::{legal_moves, Ruleset};

#[test]
fn node_kayles_to_csg_small() {
    for g in connected_graphs_up_to(4) {
        let nk = solve_grundy(&Ruleset::NodeKayles, &g, &g.all()).unwrap();
        for set in [vec![2], vec![3], vec![2, 3]] {
            let out = nk_to_csg(&g, &set, None).unwrap();
            let h = &out.gadget.graph;
            assert!(is_bipartite(h));
            assert!(girth(h).is_none_or(|x| x >= 4));
            let csg = solve_grundy(&Ruleset::Csg(set.clone()), h, &h.all()).unwrap();
            assert_eq!(nk.grundy, csg.grundy, "{g:?} {set:?}");
        }
    }
}

#[test]
fn csg_moves_remove_one_star() {
    for g in connected_graphs_up_to(4) {
        let out = nk_to_csg(&g, &[2, 3], None).unwrap();
        let h = &out.gadget.graph;
        for m in legal_moves(&Ruleset::Csg(vec![2, 3]), h, &h.all()) {
            let hits = out.centers.iter().filter(|&&c| m.removed.contains(c)).count();
            assert_eq!(hits, 1);
        }
    }
}

#[test]
fn node_kayles_to_nd_node_kayles() {
    for g in connected_graphs_up_to(4) {
        let nk = solve_outcome(&Ruleset::NodeKayles, &g, &g.all()).unwrap().outcome;
        let h = ndnk_gadget(&g, NdnkOptions::default()).unwrap().graph;
        let nd = solve_outcome(&Ruleset::NdNodeKayles, &h, &h.all()).unwrap().outcome;
        assert_eq!(nk, nd, "{g:?}");
    }
}

#[test]
fn literal_single_edge_gadget_fails() {
    let k2 = vdgame_core::Graph::from_edges(2, &[(0, 1)]).unwrap();
    let plain = NdnkOptions { single_edge_anchor: false, ..NdnkOptions::default() };
    let h = ndnk_gadget(&k2, plain).unwrap().graph;
    let nd = solve_outcome(&Ruleset::NdNodeKayles, &h, &h.all()).unwrap().outcome;
    let nk = solve_outcome(&Ruleset::NodeKayles, &k2, &k2.all()).unwrap().outcome;
    assert_ne!(nk, nd);
}

#[test]
fn avoid_true_to_split_csg() {
    for seed in 0..60 {
        let n = 1 + (seed as usize % 4);
        let m = seed as usize % 4;
        let f = DnfFormula::random(seed, n, m).unwrap();
        let at = avoid_true_outcome(&f).unwrap().outcome;
        for k in [2, 3] {
            let h = avoidtrue_to_csgk(&f, k, SplitVariant::Anchored).unwrap().graph;
            assert!(is_split(&h));
            let csg = solve_outcome(&Ruleset::Csg(vec![k]), &h, &h.all()).unwrap().outcome;
            assert_eq!(at, csg, "{f:?} k={k}");
        }
    }
}

#[test]
fn plain_split_gadget_counterexample() {
    let f = DnfFormula::new(2, vec![vec![0, 1]]).unwrap();
    let h = avoidtrue_to_csgk(&f, 2, SplitVariant::Plain).unwrap().graph;
    let csg = solve_outcome(&Ruleset::Csg(vec![2]), &h, &h.all()).unwrap().outcome;
    assert_ne!(avoid_true_outcome(&f).unwrap().outcome, csg);
}
