//! Brute-force oracles shared by the integration tests. They avoid the
//! library's own search code so the comparisons are independent.

#![allow(dead_code)]

use pathramsey_core::generators::{gen_gnp, RandomSpec};
use pathramsey_core::Graph;

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gen_gnp(&RandomSpec::gnp(n, p, seed)).unwrap()
}

/// All pairs of `K_v`, in the order used by [`graph_from_mask`].
pub fn pairs(v: usize) -> Vec<(usize, usize)> {
    (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .collect()
}

pub fn graph_from_mask(v: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(v)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(v, &edges).unwrap()
}

/// Longest path order among the given edges, by plain DFS over simple paths.
pub fn dfs_longest(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn go(adj: &[Vec<usize>], v: usize, seen: &mut [bool], len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                go(adj, u, seen, len + 1, best);
                seen[u] = false;
            }
        }
    }
    let mut best = 0;
    let mut seen = vec![false; n];
    for s in 0..n {
        seen[s] = true;
        go(&adj, s, &mut seen, 1, &mut best);
        seen[s] = false;
    }
    best
}

/// Does every `r`-colouring of `g` contain a monochromatic `P_k`?
/// Enumerates all `r^|E|` colourings.
pub fn brute_arrows(g: &Graph, k: usize, r: usize) -> bool {
    let edges = g.edges();
    let m = edges.len();
    let total = (r as u64).pow(m as u32);
    'colourings: for code in 0..total {
        let mut classes = vec![Vec::new(); r];
        let mut x = code;
        for &e in &edges {
            classes[(x % r as u64) as usize].push(e);
            x /= r as u64;
        }
        for class in &classes {
            if dfs_longest(g.n(), class) >= k {
                continue 'colourings;
            }
        }
        return false;
    }
    true
}

/// Minimum number of edges to delete from `g` so that no `P_k` remains.
pub fn brute_kill(g: &Graph, k: usize) -> usize {
    let edges = g.edges();
    let m = edges.len();
    (0..=m)
        .find(|&size| {
            (0u64..1 << m)
                .filter(|s| s.count_ones() as usize == size)
                .any(|s| {
                    let kept: Vec<_> = (0..m)
                        .filter(|i| s >> i & 1 == 0)
                        .map(|i| edges[i])
                        .collect();
                    dfs_longest(g.n(), &kept) < k
                })
        })
        .unwrap()
}

/// Random recursive tree: vertex `v` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}
