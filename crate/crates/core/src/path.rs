//! Paths: the extend/retract partition procedure and longest-path search.
//!
//! [`partition_puw`] grows a path depth-first. While the endpoint has a
//! neighbour in the unvisited set `U` the path is extended; otherwise the
//! endpoint is retired to `W`. When the path empties it restarts from a
//! fresh vertex of `U`. No edge ever joins `U` and `W`, and every step lowers
//! `|U| - |W|` by exactly one, so the process stops after `n - 1` steps with
//! `|U| = |W| = (n - |P|) / 2`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::colouring::Colouring;
use crate::error::{param, Error, Result};
use crate::graph::Graph;

/// Largest component size handled by [`longest_path_exact`] by default.
pub const DEFAULT_EXACT_BUDGET: usize = 22;

/// A path `P` plus two equal-size sets `U`, `W` with no edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PartitionPUW {
    pub path: Vec<usize>,
    pub set_u: Vec<usize>,
    pub set_w: Vec<usize>,
}

impl PartitionPUW {
    /// Checks the partition, path and no-cross-edge conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in self.path.iter().chain(&self.set_u).chain(&self.set_w) {
            if v >= g.n() || core::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seen.iter().all(|&s| s)
            && g.is_path(&self.path)
            && self.set_u.len() == self.set_w.len()
            && g.edges_between(&self.set_u, &self.set_w) == Ok(0)
    }
}

/// An ordered list of vertices forming a path, optionally tagged with the
/// colour class it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub colour: Option<usize>,
}

impl PathWitness {
    /// Number of vertices on the path.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

enum Stop {
    /// Stop the first time `|U| = |W|`.
    Balanced,
    /// Run until `U` is empty.
    Exhausted,
}

struct Process<'g> {
    g: &'g Graph,
    /// Per-vertex neighbour lists sorted by priority.
    ordered_adj: Vec<Vec<usize>>,
    /// Scan position into `ordered_adj[v]`; entries before it have left `U`.
    cursor: Vec<usize>,
    order: Vec<usize>,
    order_cursor: usize,
    in_u: Vec<bool>,
    u_len: usize,
    path: Vec<usize>,
    w: Vec<usize>,
    best: Vec<usize>,
}

impl<'g> Process<'g> {
    fn new(g: &'g Graph, order: Vec<usize>) -> Self {
        let n = g.n();
        let mut rank = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let ordered_adj = (0..n)
            .map(|v| {
                let mut list = g.neighbours(v).to_vec();
                list.sort_by_key(|&u| rank[u]);
                list
            })
            .collect();
        Process {
            g,
            ordered_adj,
            cursor: vec![0; n],
            order,
            order_cursor: 0,
            in_u: vec![true; n],
            u_len: n,
            path: Vec::new(),
            w: Vec::new(),
            best: Vec::new(),
        }
    }

    fn take_from_u(&mut self, v: usize) {
        self.in_u[v] = false;
        self.u_len -= 1;
        self.path.push(v);
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
        }
    }

    fn restart(&mut self) -> bool {
        while self.order_cursor < self.order.len() {
            let v = self.order[self.order_cursor];
            self.order_cursor += 1;
            if self.in_u[v] {
                self.take_from_u(v);
                return true;
            }
        }
        false
    }

    /// One step of the process. Returns false when no step is possible.
    fn step(&mut self) -> bool {
        let Some(&end) = self.path.last() else {
            return self.restart();
        };
        let list = &self.ordered_adj[end];
        let mut c = self.cursor[end];
        while c < list.len() && !self.in_u[list[c]] {
            c += 1;
        }
        self.cursor[end] = c;
        if c < list.len() {
            let next = list[c];
            self.take_from_u(next);
        } else {
            self.path.pop();
            self.w.push(end);
        }
        true
    }

    fn run(&mut self, stop: Stop) {
        if self.g.n() == 0 {
            return;
        }
        self.restart();
        loop {
            let done = match stop {
                Stop::Balanced => self.u_len == self.w.len(),
                Stop::Exhausted => self.u_len == 0,
            };
            if done || !self.step() {
                return;
            }
        }
    }
}

fn priority_order(n: usize, start_order: Option<&[usize]>) -> Result<Vec<usize>> {
    match start_order {
        None => Ok((0..n).collect()),
        Some(order) => {
            let mut seen = vec![false; n];
            if order.len() != n
                || order
                    .iter()
                    .any(|&v| v >= n || core::mem::replace(&mut seen[v], true))
            {
                return Err(param("start order must be a permutation of the vertices"));
            }
            Ok(order.to_vec())
        }
    }
}

/// Runs the extend/retract process and returns `(P, U, W)` at the first
/// moment `|U| = |W|`.
///
/// Ties are broken by `start_order` (a permutation of the vertices; the
/// identity when `None`): extensions take the highest-priority neighbour in
/// `U`, restarts take the highest-priority vertex of `U`.
pub fn partition_puw(g: &Graph, start_order: Option<&[usize]>) -> Result<PartitionPUW> {
    g.require_simple()?;
    let order = priority_order(g.n(), start_order)?;
    let mut process = Process::new(g, order);
    process.run(Stop::Balanced);
    let mut set_u: Vec<usize> = (0..g.n()).filter(|&v| process.in_u[v]).collect();
    set_u.sort_unstable();
    let mut set_w = process.w;
    set_w.sort_unstable();
    Ok(PartitionPUW {
        path: process.path,
        set_u,
        set_w,
    })
}

/// Greedily extends `path` at both ends with unused neighbours.
fn extend_both_ends(g: &Graph, path: &mut Vec<usize>) {
    if path.is_empty() {
        return;
    }
    let mut used = vec![false; g.n()];
    for &v in path.iter() {
        used[v] = true;
    }
    for _ in 0..2 {
        while let Some(&next) = g
            .neighbours(*path.last().unwrap())
            .iter()
            .find(|&&u| !used[u])
        {
            used[next] = true;
            path.push(next);
        }
        path.reverse();
    }
}

/// A long path found by running the extend/retract process to exhaustion,
/// keeping the longest intermediate path, and greedily extending it at both
/// ends. Its order is at least `n - 2|W|` at the balanced stopping point.
pub fn longest_path_lower(g: &Graph) -> Result<PathWitness> {
    g.require_simple()?;
    let mut process = Process::new(g, (0..g.n()).collect());
    process.run(Stop::Exhausted);
    let mut best = process.best;
    extend_both_ends(g, &mut best);
    Ok(PathWitness {
        vertices: best,
        colour: None,
    })
}

fn components_of(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![root];
        comp[root] = id;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &u in g.neighbours(v) {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Longest path inside one component, by DP over (vertex subset, endpoint).
fn longest_in_component(g: &Graph, members: &[usize]) -> Vec<usize> {
    let k = members.len();
    if k == 1 {
        return vec![members[0]];
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<u32> = members
        .iter()
        .map(|&v| {
            g.neighbours(v)
                .iter()
                .filter(|&&u| u != v)
                .fold(0u32, |m, &u| m | (1 << local[u]))
        })
        .collect();
    // ends[mask]: endpoints v such that some path covers exactly `mask` and ends at v
    let full = 1usize << k;
    let mut ends = vec![0u32; full];
    for i in 0..k {
        ends[1 << i] = 1 << i;
    }
    let mut best_mask = 1usize;
    let mut best_len = 1u32;
    for mask in 1..full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let len = mask.count_ones();
        if len > best_len {
            best_len = len;
            best_mask = mask;
            if len as usize == k {
                break;
            }
        }
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut out = adj[v] & !(mask as u32);
            while out != 0 {
                let u = out.trailing_zeros() as usize;
                out &= out - 1;
                ends[mask | (1 << u)] |= 1 << u;
            }
        }
    }
    // walk back from an endpoint of the best mask
    let mut mask = best_mask;
    let mut v = ends[mask].trailing_zeros() as usize;
    let mut path = vec![members[v]];
    while mask.count_ones() > 1 {
        let prev = mask & !(1 << v);
        let candidates = ends[prev] & adj[v];
        v = candidates.trailing_zeros() as usize;
        mask = prev;
        path.push(members[v]);
    }
    path
}

/// A maximum-order path, with the component-size limit `budget`.
pub fn longest_path_exact_with_budget(g: &Graph, budget: usize) -> Result<PathWitness> {
    let budget = budget.min(32);
    let comps = components_of(g);
    if let Some(big) = comps.iter().find(|c| c.len() > budget) {
        return Err(Error::Budget {
            what: format!(
                "component of {} vertices exceeds exact limit {budget}",
                big.len()
            ),
            spent: 0,
        });
    }
    let mut best: Vec<usize> = Vec::new();
    for members in &comps {
        if members.len() <= best.len() {
            continue;
        }
        let p = longest_in_component(g, members);
        if p.len() > best.len() {
            best = p;
        }
    }
    Ok(PathWitness {
        vertices: best,
        colour: None,
    })
}

/// A maximum-order path of `g`. Components larger than
/// [`DEFAULT_EXACT_BUDGET`] vertices give a budget error.
pub fn longest_path_exact(g: &Graph) -> Result<PathWitness> {
    longest_path_exact_with_budget(g, DEFAULT_EXACT_BUDGET)
}

/// Longest path in the colour class `colour` of `col`, exact or by the
/// lower-bound process.
pub fn longest_mono_path(
    g: &Graph,
    col: &Colouring,
    colour: usize,
    exact: bool,
) -> Result<PathWitness> {
    let class = col.class(g, colour)?;
    let mut witness = if exact {
        longest_path_exact(&class)?
    } else {
        longest_path_lower(&class)?
    };
    witness.colour = Some(colour);
    Ok(witness)
}
