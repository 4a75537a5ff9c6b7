//! Undirected graphs on dense vertex ids `0..n`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param, Error, Result};

/// An undirected graph, possibly with loops and parallel edges.
///
/// `adj[v]` is the sorted neighbour multiset of `v`. A loop at `v` appears
/// twice in `adj[v]`, so `adj[v].len()` is the degree with loops counted
/// twice. Graphs are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    simple: bool,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            simple: true,
        }
    }

    /// Builds a graph from an edge list. Loops and repeated pairs are kept;
    /// [`Graph::is_simple`] reports whether any were present.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(param(format!("edge ({u},{v}) out of range for n={n}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut simple = true;
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) || list.binary_search(&v).is_ok() {
                simple = false;
            }
        }
        Graph {
            n: adj.len(),
            adj,
            simple,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self::from_adjacency(adj)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("ids in range")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("ids in range")
    }

    /// The star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("ids in range")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("ids in range")
    }

    /// Vertex-disjoint union; `other`'s ids are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + shift).collect()),
        );
        Graph {
            n: self.n + other.n,
            adj,
            simple: self.simple && other.simple,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn require_simple(&self) -> Result<()> {
        if self.simple {
            Ok(())
        } else {
            Err(Error::NotSimple)
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree_sum(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sum() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical edge list: pairs `(u, v)` with `u <= v`, sorted, repeated
    /// once per parallel copy. Colourings index into this order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let list = &self.adj[u];
            let mut i = 0;
            while i < list.len() {
                let v = list[i];
                if v == u {
                    // a loop contributes two entries
                    out.push((u, u));
                    i += 2;
                } else {
                    if u < v {
                        out.push((u, v));
                    }
                    i += 1;
                }
            }
        }
        out
    }

    /// Index of edge `{u, v}` in [`Graph::edges`], for simple graphs.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        self.edges().binary_search(&(u, v)).ok()
    }

    /// The spanning subgraph keeping edges `edges()[i]` with `keep(i)`.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Graph {
        let kept: Vec<_> = self
            .edges()
            .into_iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, e)| e)
            .collect();
        Graph::from_edges(self.n, &kept).expect("ids in range")
    }

    /// Neighbour bitmasks, available when `n <= 64`. Loops and parallel
    /// edges collapse.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &u| m | (1u64 << u)))
                .collect(),
        )
    }

    fn membership(&self, set: &[usize], what: &str) -> Result<Vec<bool>> {
        let mut mark = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(param(format!("{what} contains vertex {v} >= n={}", self.n)));
            }
            mark[v] = true;
        }
        Ok(mark)
    }

    /// `e(S, T)`: the number of edges with one end in `s` and the other in
    /// `t`, counted with multiplicity. The sets must be disjoint.
    pub fn edges_between(&self, s: &[usize], t: &[usize]) -> Result<usize> {
        let in_s = self.membership(s, "S")?;
        let in_t = self.membership(t, "T")?;
        if in_s.iter().zip(&in_t).any(|(a, b)| *a && *b) {
            return Err(param("S and T overlap"));
        }
        Ok((0..self.n)
            .filter(|&v| in_s[v])
            .flat_map(|v| self.adj[v].iter())
            .filter(|&&u| in_t[u])
            .count())
    }

    /// Number of edges with both ends in `s` (loops included).
    pub fn edges_within(&self, s: &[usize]) -> Result<usize> {
        let in_s = self.membership(s, "S")?;
        let twice: usize = (0..self.n)
            .filter(|&v| in_s[v])
            .flat_map(|v| self.adj[v].iter())
            .filter(|&&u| in_s[u])
            .count();
        Ok(twice / 2)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.simple && self.n > 0 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Checks that the consecutive vertices of `path` are adjacent and that
    /// no vertex repeats.
    pub fn is_path(&self, path: &[usize]) -> bool {
        let mut seen = vec![false; self.n];
        for &v in path {
            if v >= self.n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

/// A bipartite graph with parts `0..n1` and `0..n2`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BipartiteGraph {
    n1: usize,
    n2: usize,
    /// `(left, right)` pairs, sorted.
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn from_edges(n1: usize, n2: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n1 || b >= n2) {
            return Err(param(format!("bipartite edge ({a},{b}) out of range")));
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Ok(BipartiteGraph { n1, n2, edges })
    }

    pub fn complete(n1: usize, n2: usize) -> Self {
        let edges = (0..n1).flat_map(|a| (0..n2).map(move |b| (a, b))).collect();
        BipartiteGraph { n1, n2, edges }
    }

    pub fn parts(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The same graph with the right part relabelled `n1..n1+n2`.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (a, self.n1 + b)).collect();
        Graph::from_edges(self.n1 + self.n2, &edges).expect("ids in range")
    }

    /// `e(S, T)` for `S` in the left part and `T` in the right part.
    pub fn edges_between(&self, s: &[usize], t: &[usize]) -> Result<usize> {
        let mut in_s = vec![false; self.n1];
        let mut in_t = vec![false; self.n2];
        for &a in s {
            *in_s
                .get_mut(a)
                .ok_or_else(|| param(format!("left vertex {a} out of range")))? = true;
        }
        for &b in t {
            *in_t
                .get_mut(b)
                .ok_or_else(|| param(format!("right vertex {b} out of range")))? = true;
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| in_s[a] && in_t[b])
            .count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edges_between() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edges_between(&[0, 1], &[2, 3]).unwrap(), 4);
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn edgeless_has_no_cross_edges() {
        let g = Graph::empty(6);
        assert_eq!(g.edges_between(&[0, 1], &[2, 5]).unwrap(), 0);
    }

    #[test]
    fn cycle_nonadjacent_sets() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edges_between(&[0], &[2, 3]).unwrap(), 0);
        assert_eq!(c5.edges_between(&[0], &[1, 4]).unwrap(), 2);
    }

    #[test]
    fn overlapping_sets_rejected() {
        let g = Graph::complete(3);
        assert!(matches!(
            g.edges_between(&[0, 1], &[1, 2]),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn loops_and_multi_edges_clear_simple_flag() {
        let g = Graph::from_edges(3, &[(0, 0), (1, 2)]).unwrap();
        assert!(!g.is_simple());
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.edges(), vec![(0, 0), (1, 2)]);
        let h = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!h.is_simple());
        assert_eq!(h.edges(), vec![(0, 1), (0, 1)]);
        assert_eq!(h.edges_between(&[0], &[1]).unwrap(), 2);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert!(p.is_simple());
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.edge_count(), 15);
    }

    #[test]
    fn bipartite_conversion() {
        let b = BipartiteGraph::complete(2, 3);
        let g = b.to_graph();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.edges_between(&[0, 1], &[2, 3, 4]).unwrap(), 6);
        assert_eq!(b.edges_between(&[0], &[1, 2]).unwrap(), 2);
    }

    #[test]
    fn tree_detection() {
        assert!(Graph::path(5).is_tree());
        assert!(Graph::star(4).is_tree());
        assert!(!Graph::cycle(4).is_tree());
        assert!(!Graph::empty(2).is_tree());
    }
}
