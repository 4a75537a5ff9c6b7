//! Lower-bound constructions for size-Ramsey numbers of paths.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::colouring::Colouring;
use crate::error::{param, Result};
use crate::graph::Graph;
use crate::path::{longest_mono_path, longest_path_exact};
pub use crate::rational::Rational;

/// `(r+3) r n / 4 - r (5r + 11) / 4 + 3`, the general lower bound on the
/// `r`-colour size-Ramsey number of `P_n`.
pub fn lower_bound_formula(n: u64, r: u64) -> Rational {
    let (n, r) = (n as i128, r as i128);
    Rational::new((r + 3) * r * n - r * (5 * r + 11) + 12, 4)
}

// ---------------------------------------------------------------------------
// tree dichotomy
// ---------------------------------------------------------------------------

/// Either `k` edges whose removal leaves no `P_n`, or `k + 2` disjoint
/// connected subgraphs of order at least `floor(n/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum TreeDichotomy {
    DeletableEdges { edges: Vec<(usize, usize)> },
    DisjointSubgraphs { subgraphs: Vec<Vec<usize>> },
}

/// A subtree given by membership flags over the host tree's vertices.
struct Sub<'a> {
    t: &'a Graph,
    alive: Vec<bool>,
}

impl Sub<'_> {
    fn vertices(&self) -> Vec<usize> {
        (0..self.t.n()).filter(|&v| self.alive[v]).collect()
    }

    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.t
            .neighbours(v)
            .iter()
            .copied()
            .filter(move |&u| self.alive[u])
    }

    /// BFS from `src`; returns visit order and parents.
    fn bfs(&self, src: usize, cut: Option<(usize, usize)>) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.t.n()];
        let mut order = vec![src];
        parent[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for u in self.nbrs(v) {
                if parent[u] != usize::MAX || cut == Some((v, u)) || cut == Some((u, v)) {
                    continue;
                }
                parent[u] = v;
                order.push(u);
                queue.push_back(u);
            }
        }
        (order, parent)
    }

    /// A longest path (by double BFS), as a vertex sequence.
    fn diameter_path(&self, any: usize) -> Vec<usize> {
        let (order, _) = self.bfs(any, None);
        let a = *order.last().unwrap();
        let (order, parent) = self.bfs(a, None);
        let mut v = *order.last().unwrap();
        let mut path = vec![v];
        while parent[v] != v {
            v = parent[v];
            path.push(v);
        }
        path
    }

    /// Minimum number of edges whose deletion leaves no path on `n` vertices,
    /// with one optimal edge set. Greedy: bottom-up, cut the tallest child
    /// branch while the two tallest branches through a vertex are too long.
    fn kill_set(&self, root: usize, n: usize) -> Vec<(usize, usize)> {
        let limit = n - 2; // longest allowed path length in edges
        let (order, parent) = self.bfs(root, None);
        let mut height = vec![0usize; self.t.n()];
        let mut cuts = Vec::new();
        for &v in order.iter().rev() {
            let mut branches: Vec<(usize, usize)> = self
                .nbrs(v)
                .filter(|&u| parent[u] == v && u != v)
                .map(|u| (height[u] + 1, u))
                .collect();
            branches.sort_unstable_by(|a, b| b.cmp(a));
            let mut first = 0;
            while first < branches.len() {
                let top = branches[first].0;
                let second = branches.get(first + 1).map_or(0, |b| b.0);
                if top > limit || top + second > limit {
                    cuts.push(ordered(v, branches[first].1));
                    first += 1;
                } else {
                    break;
                }
            }
            height[v] = branches.get(first).map_or(0, |b| b.0);
        }
        cuts
    }

    fn split(&self, e: (usize, usize)) -> (Sub<'_>, Sub<'_>) {
        let side = |root| {
            let (order, _) = self.bfs(root, Some(e));
            let mut alive = vec![false; self.t.n()];
            for v in order {
                alive[v] = true;
            }
            Sub { t: self.t, alive }
        };
        (side(e.0), side(e.1))
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// `k + 2` disjoint connected subgraphs of order `>= floor(n/2)`, assuming
/// more than `k` deletions are needed to destroy every `P_n` in `sub`.
fn large_pieces(sub: &Sub<'_>, k: usize, n: usize) -> Vec<Vec<usize>> {
    let root = sub.vertices()[0];
    let diam = sub.diameter_path(root);
    debug_assert!(diam.len() >= n);
    let half = n / 2;
    let e = (diam[half - 1], diam[half]);
    let (t1, t2) = sub.split(e);
    if k == 0 {
        return vec![t1.vertices(), t2.vertices()];
    }
    let kappa = |s: &Sub<'_>| s.kill_set(s.vertices()[0], n).len();
    let (k1, k2) = (kappa(&t1), kappa(&t2));
    let (t1, t2, k2) = if k2 <= k1 { (t1, t2, k2) } else { (t2, t1, k1) };
    let mut out = if k2 == 0 {
        let mut out = large_pieces(&t1, k - 1, n);
        out.push(t2.vertices());
        out
    } else if k2 < k {
        let mut out = large_pieces(&t1, k - 1 - k2, n);
        out.extend(large_pieces(&t2, k2 - 1, n));
        out
    } else {
        let mut out = large_pieces(&t1, k - 1, n);
        out.extend(large_pieces(&t2, 0, n));
        out
    };
    out.truncate(k + 2);
    out
}

/// Splits a tree either by deleting `k` edges so that no `P_n` survives, or
/// into `k + 2` disjoint connected pieces of order at least `floor(n/2)`.
///
/// Deletion is preferred whenever it is possible; the edge set is padded with
/// arbitrary tree edges up to `k` (or all edges, if fewer).
pub fn tree_dichotomy(t: &Graph, k: usize, n: usize) -> Result<TreeDichotomy> {
    if !t.is_tree() {
        return Err(param("input is not a tree"));
    }
    if n < 2 {
        return Err(param("need n >= 2"));
    }
    let sub = Sub {
        t,
        alive: vec![true; t.n()],
    };
    let cuts = sub.kill_set(0, n);
    if cuts.len() <= k {
        let mut edges = cuts;
        for e in t.edges() {
            if edges.len() >= k {
                break;
            }
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        edges.sort_unstable();
        return Ok(TreeDichotomy::DeletableEdges { edges });
    }
    let mut subgraphs = large_pieces(&sub, k, n);
    for s in &mut subgraphs {
        s.sort_unstable();
    }
    Ok(TreeDichotomy::DisjointSubgraphs { subgraphs })
}

/// Longest path order in a forest, via per-component double BFS.
pub fn forest_longest_path(f: &Graph) -> usize {
    let sub = Sub {
        t: f,
        alive: vec![true; f.n()],
    };
    let mut seen = vec![false; f.n()];
    let mut best = 0;
    for v in 0..f.n() {
        if seen[v] {
            continue;
        }
        let (order, _) = sub.bfs(v, None);
        for &u in &order {
            seen[u] = true;
        }
        best = best.max(sub.diameter_path(v).len());
    }
    best
}

impl TreeDichotomy {
    /// Re-checks the output against the tree.
    pub fn verify(&self, t: &Graph, k: usize, n: usize) -> bool {
        match self {
            TreeDichotomy::DeletableEdges { edges } => {
                if edges.len() != k.min(t.edge_count())
                    || edges.iter().any(|&(u, v)| !t.has_edge(u, v))
                {
                    return false;
                }
                let all = t.edges();
                let remaining = t.spanning_subgraph(|i| !edges.contains(&all[i]));
                forest_longest_path(&remaining) < n
            }
            TreeDichotomy::DisjointSubgraphs { subgraphs } => {
                let mut used = vec![false; t.n()];
                subgraphs.len() == k + 2
                    && subgraphs.iter().all(|s| {
                        let fresh = s
                            .iter()
                            .all(|&v| v < t.n() && !core::mem::replace(&mut used[v], true));
                        fresh && s.len() >= n / 2 && induces_connected(t, s)
                    })
            }
        }
    }
}

fn induces_connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![s[0]];
    seen[s[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbours(v) {
            if inside[u] && !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == s.len()
}

// ---------------------------------------------------------------------------
// adversarial colouring for small host graphs
// ---------------------------------------------------------------------------

/// An `(r+1)`-colouring with its vertex partition.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AdversaryColouring {
    pub colouring: Colouring,
    pub u: Vec<usize>,
    pub w: Vec<Vec<usize>>,
}

/// Colours a graph on at most `(r+2)(n-3)/2` vertices with `r + 1` colours
/// and no monochromatic `P_n`.
///
/// `U` is the lowest `n - 1` vertices and `W_1..W_r` are consecutive index
/// blocks of the rest (sizes differ by at most one, larger blocks first).
/// Edges from `W_i` to later blocks or `U` get colour `i - 1` (0-based);
/// edges inside `U` or inside a block get colour `r`.
pub fn case2_colouring(g: &Graph, n: usize, r: usize) -> Result<AdversaryColouring> {
    let order = g.n();
    if r == 0 || n < 3 || 2 * order > (r + 2) * (n - 3) {
        return Err(param(format!(
            "need r >= 1, n >= 3 and 2N <= (r+2)(n-3); got N={order}, n={n}, r={r}"
        )));
    }
    let u_size = order.min(n - 1);
    let rest = order - u_size;
    let mut block = vec![r; order]; // r marks U
    let mut w = Vec::with_capacity(r);
    let mut next = u_size;
    for i in 0..r {
        let size = rest / r + usize::from(i < rest % r);
        w.push((next..next + size).collect::<Vec<_>>());
        for b in &mut block[next..next + size] {
            *b = i;
        }
        next += size;
    }
    let colouring = Colouring::from_fn(g, r + 1, |a, b| {
        let (ba, bb) = (block[a], block[b]);
        if ba == bb {
            r
        } else {
            ba.min(bb)
        }
    })?;
    Ok(AdversaryColouring {
        colouring,
        u: (0..u_size).collect(),
        w,
    })
}

// ---------------------------------------------------------------------------
// extremal and classical values
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ErdosGallai {
    pub longest_path: usize,
    pub edges: usize,
    /// `n (k - 2)`; the bound is `edges <= bound_twice / 2`.
    pub bound_twice: usize,
    /// Whether the graph is `P_k`-free, so that the bound applies.
    pub applicable: bool,
    pub holds: bool,
}

/// Exact check of `|E| <= n(k-2)/2` for graphs without a `P_k`.
pub fn erdos_gallai_check(g: &Graph, k: usize) -> Result<ErdosGallai> {
    if k < 2 {
        return Err(param("need k >= 2"));
    }
    g.require_simple()?;
    let longest_path = longest_path_exact(g)?.order();
    let edges = g.edge_count();
    let bound_twice = g.n() * (k - 2);
    let applicable = longest_path < k;
    Ok(ErdosGallai {
        longest_path,
        edges,
        bound_twice,
        applicable,
        holds: !applicable || 2 * edges <= bound_twice,
    })
}

/// Known values or bounds for the vertex Ramsey number of `P_n` with `r`
/// colours.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum ClassicalRamsey {
    Exact {
        value: u64,
    },
    /// Known only for sufficiently large `n`.
    LargeN {
        value: u64,
    },
    Interval {
        lower: u64,
        upper: f64,
    },
}

pub fn classical_path_ramsey(n: u64, r: u64) -> Result<ClassicalRamsey> {
    if n < 2 || r == 0 {
        return Err(param("need n >= 2 and r >= 1"));
    }
    Ok(match r {
        1 => ClassicalRamsey::Exact { value: n },
        2 => ClassicalRamsey::Exact {
            value: (3 * n - 2) / 2,
        },
        3 => ClassicalRamsey::LargeN {
            value: if n % 2 == 1 { 2 * n - 1 } else { 2 * n - 2 },
        },
        _ => {
            let rf = r as f64;
            let sarkozy = (rf - rf / (16.0 * rf * rf * rf + 1.0)) * n as f64;
            ClassicalRamsey::Interval {
                lower: (r - 1) * (n - 1) + 1,
                upper: sarkozy.min((r * n) as f64),
            }
        }
    })
}

/// Largest monochromatic path order over all colours, computed exactly.
pub fn max_mono_path(g: &Graph, col: &Colouring) -> Result<usize> {
    let mut best = 0;
    for c in 0..col.colours() {
        best = best.max(longest_mono_path(g, col, c, true)?.order());
    }
    Ok(best)
}
