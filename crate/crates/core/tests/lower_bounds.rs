mod common;

use common::{brute_kill, dfs_longest, gnp, random_tree};
use pathramsey_core::certificates::{arrow_exact, Verdict};
use pathramsey_core::lower_bounds::{
    case2_colouring, classical_path_ramsey, erdos_gallai_check, lower_bound_formula, max_mono_path,
    tree_dichotomy, ClassicalRamsey, Rational, TreeDichotomy,
};
use pathramsey_core::Graph;
use proptest::prelude::*;

#[test]
fn formula_two_colours_exact() {
    for n in 1..2000u64 {
        assert_eq!(
            lower_bound_formula(n, 2),
            Rational::new(5 * n as i128 - 15, 2)
        );
        assert_eq!(lower_bound_formula(n, 1), Rational::from(n as i128 - 1));
    }
    assert_eq!(lower_bound_formula(100, 3).to_f64(), 433.5);
}

/// Independent re-check of the dichotomy output using DFS path lengths.
fn check_dichotomy(t: &Graph, k: usize, n: usize, out: &TreeDichotomy) {
    match out {
        TreeDichotomy::DeletableEdges { edges } => {
            let kept: Vec<_> = t
                .edges()
                .into_iter()
                .filter(|e| !edges.contains(e))
                .collect();
            assert!(dfs_longest(t.n(), &kept) < n);
            assert_eq!(edges.len(), k.min(t.edge_count()));
        }
        TreeDichotomy::DisjointSubgraphs { subgraphs } => {
            assert_eq!(subgraphs.len(), k + 2);
            let mut seen = vec![false; t.n()];
            for s in subgraphs {
                assert!(s.len() >= n / 2);
                for &v in s {
                    assert!(!std::mem::replace(&mut seen[v], true));
                }
                // a vertex set of a tree induces a connected subgraph iff it
                // spans |s| - 1 edges
                assert_eq!(t.edges_within(s).unwrap(), s.len() - 1);
            }
        }
    }
    assert!(out.verify(t, k, n));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dichotomy_on_random_trees(v in 1usize..21, seed: u64, k in 0usize..4, n in 2usize..12) {
        let t = random_tree(v, seed);
        let out = tree_dichotomy(&t, k, n).unwrap();
        check_dichotomy(&t, k, n, &out);
    }

    #[test]
    fn deletion_chosen_exactly_when_possible(v in 2usize..12, seed: u64, k in 0usize..4, n in 2usize..9) {
        let t = random_tree(v, seed);
        let out = tree_dichotomy(&t, k, n).unwrap();
        let deletable = brute_kill(&t, n) <= k;
        prop_assert_eq!(matches!(out, TreeDichotomy::DeletableEdges { .. }), deletable);
    }

    #[test]
    fn case2_has_no_mono_path(r in 1usize..4, n in 4usize..12, p in 0.3f64..1.0, seed: u64) {
        let order = (r + 2) * (n - 3) / 2;
        prop_assume!((1..=18).contains(&order));
        let g = gnp(order, p, seed);
        let adv = case2_colouring(&g, n, r).unwrap();
        prop_assert_eq!(adv.colouring.colours(), r + 1);
        prop_assert!(max_mono_path(&g, &adv.colouring).unwrap() < n);
        for (i, w) in adv.w.iter().enumerate() {
            let class = adv.colouring.class(&g, i).unwrap();
            prop_assert!(dfs_longest(order, &class.edges()) <= 2 * w.len() + 1);
        }
    }

    #[test]
    fn erdos_gallai_on_random_graphs(v in 1usize..15, p in 0.0f64..0.6, seed: u64, k in 2usize..8) {
        let g = gnp(v, p, seed);
        let eg = erdos_gallai_check(&g, k).unwrap();
        prop_assert!(eg.holds);
        if v <= 9 {
            prop_assert_eq!(eg.longest_path, dfs_longest(v, &g.edges()));
        }
    }
}

#[test]
fn dichotomy_examples() {
    let p4 = Graph::path(4);
    assert_eq!(
        tree_dichotomy(&p4, 1, 3).unwrap(),
        TreeDichotomy::DeletableEdges {
            edges: vec![(1, 2)]
        }
    );
    for n in 2..10 {
        let out = tree_dichotomy(&Graph::path(n), 0, n).unwrap();
        check_dichotomy(&Graph::path(n), 0, n, &out);
        assert!(matches!(out, TreeDichotomy::DisjointSubgraphs { .. }));
    }
    for k in 0..5 {
        let star = Graph::star(8);
        check_dichotomy(&star, k, 3, &tree_dichotomy(&star, k, 3).unwrap());
    }
    assert!(tree_dichotomy(&Graph::cycle(5), 1, 3).is_err());
}

#[test]
fn case2_examples() {
    let adv = case2_colouring(&Graph::complete(3), 5, 1).unwrap();
    assert!(max_mono_path(&Graph::complete(3), &adv.colouring).unwrap() < 5);
    let k6 = Graph::complete(6);
    let adv = case2_colouring(&k6, 6, 2).unwrap();
    assert!(max_mono_path(&k6, &adv.colouring).unwrap() < 6);
    assert!(case2_colouring(&Graph::complete(7), 6, 2).is_err());
}

#[test]
fn erdos_gallai_tight_cases() {
    for m in 1..7 {
        let matching: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = Graph::from_edges(2 * m, &matching).unwrap();
        let eg = erdos_gallai_check(&g, 3).unwrap();
        assert!(eg.applicable && 2 * eg.edges == eg.bound_twice);
    }
    let mut g = Graph::complete(3);
    for _ in 0..3 {
        g = g.disjoint_union(&Graph::complete(3));
        let eg = erdos_gallai_check(&g, 4).unwrap();
        assert!(eg.applicable && 2 * eg.edges == eg.bound_twice);
    }
}

#[test]
fn classical_values_certified_by_search() {
    for n in [3usize, 4] {
        let ClassicalRamsey::Exact { value } = classical_path_ramsey(n as u64, 2).unwrap() else {
            panic!("r = 2 is exact");
        };
        let r = value as usize;
        assert_eq!(
            arrow_exact(&Graph::complete(r), n, 2, 1 << 30)
                .unwrap()
                .verdict,
            Verdict::Holds
        );
        assert_eq!(
            arrow_exact(&Graph::complete(r - 1), n, 2, 1 << 30)
                .unwrap()
                .verdict,
            Verdict::Fails
        );
    }
    assert_eq!(
        classical_path_ramsey(7, 3).unwrap(),
        ClassicalRamsey::LargeN { value: 13 }
    );
    assert_eq!(
        classical_path_ramsey(8, 3).unwrap(),
        ClassicalRamsey::LargeN { value: 14 }
    );
}
