//! Sufficient conditions for `G -> (P_n)_r` and exhaustive arrowing.
//!
//! The hole checks look for disjoint vertex sets with no edges between them.
//! If none exist at the prescribed sizes, the graph arrows `P_n`. Set sizes
//! that come out fractional are rounded down, which only strengthens the
//! checked hypothesis.
//!
//! Exact modes use `u64` neighbourhood masks and therefore need graphs on at
//! most 64 vertices; Monte Carlo modes work at any size.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::colouring::Colouring;
use crate::error::{param, Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::rng::rng_from_seed;

/// Default cap on the exact enumeration work.
pub const DEFAULT_EXACT_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CertificateKind {
    Letzter,
    TwoHoles,
    BipartiteMulti,
    ExactArrow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Witness {
    /// Disjoint `S`, `T` with `e(S, T) = 0`.
    Pair { s: Vec<usize>, t: Vec<usize> },
    /// Disjoint `S1, S2, T1, T2` with `e(S1, T2) = e(S2, T1) = 0`.
    Quadruple {
        s1: Vec<usize>,
        s2: Vec<usize>,
        t1: Vec<usize>,
        t2: Vec<usize>,
    },
    /// A colouring with no monochromatic `P_n`.
    Colouring(Colouring),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "mode", rename_all = "snake_case"))]
pub enum Mode {
    /// Exhaustive enumeration; `budget` caps the enumeration work.
    Exact,
    /// Uniform random sampling; `budget` is the number of samples.
    MonteCarlo { seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CertificateParams {
    /// Order of the checked graph.
    pub order: usize,
    /// Target path order.
    pub n: usize,
    pub r: usize,
    /// Set size(s) used by the check.
    pub set_size: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub kind: CertificateKind,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub params: CertificateParams,
    pub seed: Option<u64>,
    pub budget: u64,
    pub budget_spent: u64,
}

// ---------------------------------------------------------------------------
// bit helpers
// ---------------------------------------------------------------------------

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn lowest_bits(mut m: u64, k: usize) -> u64 {
    let mut out = 0;
    for _ in 0..k {
        let low = m & m.wrapping_neg();
        out |= low;
        m ^= low;
    }
    out
}

fn neighbourhood(adj: &[u64], set: u64) -> u64 {
    let mut m = set;
    let mut out = 0;
    while m != 0 {
        out |= adj[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    out
}

/// Calls `f` on every `k`-subset of `mask`, in lexicographic order of the
/// lowest bits.
fn for_each_subset(
    mask: u64,
    k: usize,
    f: &mut impl FnMut(u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        rest: u64,
        k: usize,
        acc: u64,
        f: &mut impl FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k == 0 {
            return f(acc);
        }
        if (rest.count_ones() as usize) < k {
            return ControlFlow::Continue(());
        }
        let low = rest & rest.wrapping_neg();
        rec(rest ^ low, k - 1, acc | low, f)?;
        rec(rest ^ low, k, acc, f)
    }
    rec(mask, k, 0, f)
}

/// `C(n, k)` as a saturating `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn masks_for_exact(g: &Graph) -> Result<Vec<u64>> {
    g.require_simple()?;
    g.adjacency_masks().ok_or_else(|| {
        param(format!(
            "exact mode supports at most 64 vertices, got {}",
            g.n()
        ))
    })
}

fn over_budget(what: String, need: u64, budget: u64) -> Error {
    Error::Budget {
        what: format!("{what}: needs {need} > budget {budget}"),
        spent: 0,
    }
}

fn ratio_above_two(order: usize, n: usize) -> Result<()> {
    if n == 0 || order <= 2 * n {
        return Err(param(format!("c = {order}/{n} must exceed 2")));
    }
    Ok(())
}

/// Samples `k` distinct vertices out of `0..order` into the prefix of `pool`.
fn sample_prefix(pool: &mut [usize], k: usize, rng: &mut crate::rng::Rng) {
    let (chosen, _) = pool.partial_shuffle(rng, k);
    chosen.sort_unstable();
}

fn count_between(g: &Graph, mark: &mut [u8], s: &[usize], t: &[usize]) -> usize {
    for &v in t {
        mark[v] = 1;
    }
    let count = s
        .iter()
        .flat_map(|&v| g.neighbours(v).iter())
        .filter(|&&u| mark[u] == 1)
        .count();
    for &v in t {
        mark[v] = 0;
    }
    count
}

// ---------------------------------------------------------------------------
// one hole
// ---------------------------------------------------------------------------

/// Checks that every two disjoint sets of size `floor((N - 2n)/4)` span an
/// edge, where `N = |V(g)|`; this implies `g -> P_n`.
pub fn check_letzter(g: &Graph, n: usize, mode: Mode, budget: u64) -> Result<Certificate> {
    let order = g.n();
    ratio_above_two(order, n)?;
    let s = (order - 2 * n) / 4;
    if s == 0 {
        return Err(param(format!(
            "set size (N-2n)/4 rounds to 0 for N={order}, n={n}"
        )));
    }
    let mut cert = Certificate {
        kind: CertificateKind::Letzter,
        verdict: Verdict::Holds,
        witness: None,
        params: CertificateParams {
            order,
            n,
            r: 2,
            set_size: s,
        },
        seed: None,
        budget,
        budget_spent: 0,
    };
    match mode {
        Mode::Exact => {
            let adj = masks_for_exact(g)?;
            let pairs =
                binomial(order as u64, s as u64).saturating_mul(binomial(order as u64, s as u64));
            if pairs > budget {
                return Err(over_budget(
                    format!("C({order},{s})^2 set pairs"),
                    pairs,
                    budget,
                ));
            }
            let all = low_mask(order);
            let mut spent = 0u64;
            let mut found = None;
            let _ = for_each_subset(all, s, &mut |set_s| {
                spent += 1;
                let free = all & !set_s & !neighbourhood(&adj, set_s);
                if free.count_ones() as usize >= s {
                    found = Some((set_s, lowest_bits(free, s)));
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            cert.budget_spent = spent;
            if let Some((a, b)) = found {
                cert.verdict = Verdict::Fails;
                cert.witness = Some(Witness::Pair {
                    s: bits(a),
                    t: bits(b),
                });
            }
        }
        Mode::MonteCarlo { seed } => {
            g.require_simple()?;
            cert.seed = Some(seed);
            cert.verdict = Verdict::Undecided;
            let mut rng = rng_from_seed(seed);
            let mut pool: Vec<usize> = (0..order).collect();
            let mut mark = vec![0u8; order];
            for i in 0..budget {
                cert.budget_spent = i + 1;
                sample_prefix(&mut pool, 2 * s, &mut rng);
                let (a, rest) = pool.split_at(s);
                let b = &rest[..s];
                if count_between(g, &mut mark, a, b) == 0 {
                    let (mut a, mut b) = (a.to_vec(), b.to_vec());
                    a.sort_unstable();
                    b.sort_unstable();
                    cert.verdict = Verdict::Fails;
                    cert.witness = Some(Witness::Pair { s: a, t: b });
                    break;
                }
            }
        }
    }
    Ok(cert)
}

// ---------------------------------------------------------------------------
// two holes
// ---------------------------------------------------------------------------

/// Checks that for all disjoint `S1, S2, T1, T2` with `|S1| = |T2| = k`,
/// `|S2| = |T1| = m - k` (`m = floor((N - 2n)/2)`, any `k` in `0..=m`) at
/// least one of `e(S1, T2)`, `e(S2, T1)` is nonzero; this implies `g -> P_n`.
///
/// The exact enumeration work is estimated as `sum_k C(N,k)^2 C(N,m-k)`.
pub fn check_two_holes(g: &Graph, n: usize, mode: Mode, budget: u64) -> Result<Certificate> {
    let order = g.n();
    ratio_above_two(order, n)?;
    let m = (order - 2 * n) / 2;
    let mut cert = Certificate {
        kind: CertificateKind::TwoHoles,
        verdict: Verdict::Holds,
        witness: None,
        params: CertificateParams {
            order,
            n,
            r: 2,
            set_size: m,
        },
        seed: None,
        budget,
        budget_spent: 0,
    };
    match mode {
        Mode::Exact => {
            let adj = masks_for_exact(g)?;
            let nn = order as u64;
            let work = (0..=m as u64).fold(0u64, |acc, k| {
                let ck = binomial(nn, k);
                acc.saturating_add(
                    ck.saturating_mul(ck)
                        .saturating_mul(binomial(nn, m as u64 - k)),
                )
            });
            if work > budget {
                return Err(over_budget(
                    format!("two-hole search on N={order}, m={m}"),
                    work,
                    budget,
                ));
            }
            let all = low_mask(order);
            let mut spent = 0u64;
            let mut found = None;
            'sizes: for k in 0..=m {
                let flow = for_each_subset(all, k, &mut |s1| {
                    let free_t2 = all & !s1 & !neighbourhood(&adj, s1);
                    for_each_subset(free_t2, k, &mut |t2| {
                        let rest = all & !s1 & !t2;
                        for_each_subset(rest, m - k, &mut |s2| {
                            spent += 1;
                            let free_t1 = rest & !s2 & !neighbourhood(&adj, s2);
                            if free_t1.count_ones() as usize >= m - k {
                                found = Some((s1, s2, lowest_bits(free_t1, m - k), t2));
                                return ControlFlow::Break(());
                            }
                            ControlFlow::Continue(())
                        })
                    })
                });
                if flow.is_break() {
                    break 'sizes;
                }
            }
            cert.budget_spent = spent;
            if let Some((s1, s2, t1, t2)) = found {
                cert.verdict = Verdict::Fails;
                cert.witness = Some(Witness::Quadruple {
                    s1: bits(s1),
                    s2: bits(s2),
                    t1: bits(t1),
                    t2: bits(t2),
                });
            }
        }
        Mode::MonteCarlo { seed } => {
            g.require_simple()?;
            cert.seed = Some(seed);
            cert.verdict = Verdict::Undecided;
            let mut rng = rng_from_seed(seed);
            let mut pool: Vec<usize> = (0..order).collect();
            let mut mark = vec![0u8; order];
            for i in 0..budget {
                cert.budget_spent = i + 1;
                let k = rng.gen_range(0..=m);
                sample_prefix(&mut pool, 2 * m, &mut rng);
                let (s1, rest) = pool.split_at(k);
                let (t2, rest) = rest.split_at(k);
                let (s2, rest) = rest.split_at(m - k);
                let t1 = &rest[..m - k];
                if count_between(g, &mut mark, s1, t2) == 0
                    && count_between(g, &mut mark, s2, t1) == 0
                {
                    let sorted = |x: &[usize]| {
                        let mut v = x.to_vec();
                        v.sort_unstable();
                        v
                    };
                    cert.verdict = Verdict::Fails;
                    cert.witness = Some(Witness::Quadruple {
                        s1: sorted(s1),
                        s2: sorted(s2),
                        t1: sorted(t1),
                        t2: sorted(t2),
                    });
                    break;
                }
            }
        }
    }
    Ok(cert)
}

// ---------------------------------------------------------------------------
// bipartite, r colours
// ---------------------------------------------------------------------------

/// Set size `floor(((c + 1)/2^r - 1) n / 2)` with `c = order / n`, computed
/// exactly as `floor(((order + n) - n 2^r) / 2^(r+1))`.
pub fn bipartite_set_size(order: usize, n: usize, r: u32) -> Result<usize> {
    if n == 0 || !(2..=32).contains(&r) {
        return Err(param("need n >= 1 and 2 <= r <= 32"));
    }
    let two_r = 1u128 << r;
    if (order as u128) <= (two_r - 1) * n as u128 {
        return Err(param(format!(
            "c = {order}/{n} must exceed 2^r - 1 = {}",
            two_r - 1
        )));
    }
    let num = (order + n) as u128 - n as u128 * two_r;
    Ok((num / (2 * two_r)) as usize)
}

/// Checks that every `S` in the left part and `T` in the right part of the
/// prescribed size span an edge; this implies `g -> (P_n)_r`.
pub fn check_bipartite_multi(
    g: &BipartiteGraph,
    n: usize,
    r: usize,
    mode: Mode,
    budget: u64,
) -> Result<Certificate> {
    let (n1, n2) = g.parts();
    let order = n1 + n2;
    let s = bipartite_set_size(order, n, r as u32)?;
    if s == 0 {
        return Err(param(format!(
            "set size rounds to 0 for order {order}, n={n}, r={r}"
        )));
    }
    let mut cert = Certificate {
        kind: CertificateKind::BipartiteMulti,
        verdict: Verdict::Holds,
        witness: None,
        params: CertificateParams {
            order,
            n,
            r,
            set_size: s,
        },
        seed: None,
        budget,
        budget_spent: 0,
    };
    if s > n1 || s > n2 {
        // a part is too small to host the set: the condition holds vacuously
        return Ok(cert);
    }
    match mode {
        Mode::Exact => {
            if n1 > 64 || n2 > 64 {
                return Err(param("exact mode supports parts of at most 64 vertices"));
            }
            let mut left_adj = vec![0u64; n1];
            for &(a, b) in g.edges() {
                left_adj[a] |= bit(b);
            }
            let pairs = binomial(n1 as u64, s as u64).saturating_mul(binomial(n2 as u64, s as u64));
            if pairs > budget {
                return Err(over_budget(
                    format!("C({n1},{s}) C({n2},{s}) set pairs"),
                    pairs,
                    budget,
                ));
            }
            let right = low_mask(n2);
            let mut spent = 0u64;
            let mut found = None;
            let _ = for_each_subset(low_mask(n1), s, &mut |set_s| {
                spent += 1;
                let free = right & !neighbourhood(&left_adj, set_s);
                if free.count_ones() as usize >= s {
                    found = Some((set_s, lowest_bits(free, s)));
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            cert.budget_spent = spent;
            if let Some((a, b)) = found {
                cert.verdict = Verdict::Fails;
                cert.witness = Some(Witness::Pair {
                    s: bits(a),
                    t: bits(b),
                });
            }
        }
        Mode::MonteCarlo { seed } => {
            cert.seed = Some(seed);
            cert.verdict = Verdict::Undecided;
            let mut rng = rng_from_seed(seed);
            let mut left: Vec<usize> = (0..n1).collect();
            let mut right: Vec<usize> = (0..n2).collect();
            let mut left_adj = vec![Vec::new(); n1];
            for &(a, b) in g.edges() {
                left_adj[a].push(b);
            }
            let mut mark = vec![false; n2];
            for i in 0..budget {
                cert.budget_spent = i + 1;
                sample_prefix(&mut left, s, &mut rng);
                sample_prefix(&mut right, s, &mut rng);
                for &b in &right[..s] {
                    mark[b] = true;
                }
                let hit = left[..s]
                    .iter()
                    .any(|&a| left_adj[a].iter().any(|&b| mark[b]));
                for &b in &right[..s] {
                    mark[b] = false;
                }
                if !hit {
                    cert.verdict = Verdict::Fails;
                    cert.witness = Some(Witness::Pair {
                        s: left[..s].to_vec(),
                        t: right[..s].to_vec(),
                    });
                    break;
                }
            }
        }
    }
    Ok(cert)
}

// ---------------------------------------------------------------------------
// exhaustive arrowing
// ---------------------------------------------------------------------------

/// Is there a path on at least `need` vertices starting at `cur` and
/// avoiding `visited` (which already contains `cur`)?
fn reaches(adj: &[u64], cur: usize, visited: u64, need: usize) -> bool {
    if need <= 1 {
        return true;
    }
    let mut next = adj[cur] & !visited;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if reaches(adj, w, visited | bit(w), need - 1) {
            return true;
        }
    }
    false
}

/// Does the graph `adj` contain a path on `n` vertices using the edge `uv`?
fn path_through(adj: &[u64], u: usize, v: usize, n: usize) -> bool {
    // left part: a path starting at u, growing away from v; `len` vertices
    fn left(adj: &[u64], cur: usize, visited: u64, len: usize, v: usize, n: usize) -> bool {
        if reaches(adj, v, visited | bit(v), n.saturating_sub(len)) {
            return true;
        }
        let mut next = adj[cur] & !visited & !bit(v);
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if left(adj, w, visited | bit(w), len + 1, v, n) {
                return true;
            }
        }
        false
    }
    left(adj, u, bit(u), 1, v, n)
}

struct ArrowSearch<'a> {
    edges: &'a [(usize, usize)],
    n: usize,
    r: usize,
    class_adj: Vec<Vec<u64>>,
    assignment: Vec<usize>,
    spent: u64,
    budget: u64,
}

enum Outcome {
    Escape,
    Exhausted,
    OutOfBudget,
}

impl ArrowSearch<'_> {
    /// Colours edges `i..` with colour labels in first-use order.
    fn search(&mut self, i: usize, used: usize) -> Outcome {
        if i == self.edges.len() {
            return Outcome::Escape;
        }
        let (u, v) = self.edges[i];
        let top = (used + 1).min(self.r);
        for colour in 0..top {
            self.spent += 1;
            if self.spent > self.budget {
                return Outcome::OutOfBudget;
            }
            let adj = &mut self.class_adj[colour];
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            if !path_through(adj, u, v, self.n) {
                self.assignment[i] = colour;
                match self.search(i + 1, used.max(colour + 1)) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            let adj = &mut self.class_adj[colour];
            adj[u] &= !bit(v);
            adj[v] &= !bit(u);
        }
        Outcome::Exhausted
    }
}

/// Decides `g -> (P_n)_r` by depth-first search over colourings.
///
/// Edges are coloured in canonical order; a partial colouring is abandoned as
/// soon as a colour class contains `P_n`, and colour labels are introduced in
/// first-use order (arrowing is invariant under permuting colours). `budget`
/// caps the number of edge-colour assignments tried. `Fails` carries an
/// escaping colouring; `Holds` means the search space was exhausted.
pub fn arrow_exact(g: &Graph, n: usize, r: usize, budget: u64) -> Result<Certificate> {
    if r == 0 {
        return Err(param("need at least one colour"));
    }
    let adj = masks_for_exact(g)?;
    let edges = g.edges();
    let mut cert = Certificate {
        kind: CertificateKind::ExactArrow,
        verdict: Verdict::Holds,
        witness: None,
        params: CertificateParams {
            order: g.n(),
            n,
            r,
            set_size: 0,
        },
        seed: None,
        budget,
        budget_spent: 0,
    };
    // P_0 and P_1 need no edges
    if n <= 1 {
        if g.n() < n {
            cert.verdict = Verdict::Fails;
            cert.witness = Some(Witness::Colouring(Colouring::monochromatic(r, edges.len())));
        }
        return Ok(cert);
    }
    drop(adj);
    let mut search = ArrowSearch {
        edges: &edges,
        n,
        r,
        class_adj: vec![vec![0u64; g.n()]; r],
        assignment: vec![0; edges.len()],
        spent: 0,
        budget,
    };
    let outcome = search.search(0, 0);
    cert.budget_spent = search.spent.min(budget);
    match outcome {
        Outcome::Exhausted => Ok(cert),
        Outcome::Escape => {
            cert.verdict = Verdict::Fails;
            cert.witness = Some(Witness::Colouring(Colouring::new(r, search.assignment)?));
            Ok(cert)
        }
        Outcome::OutOfBudget => Err(Error::Budget {
            what: format!("arrowing search on {} edges, n={n}, r={r}", edges.len()),
            spent: budget,
        }),
    }
}

/// The smallest edge count of a graph arrowing `(P_n)_r`, with a witness.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SizeRamsey {
    pub edges: usize,
    pub witness: Graph,
    /// Candidate graphs tested with the arrowing search.
    pub graphs_checked: u64,
    pub budget_spent: u64,
}

/// Exhaustive search for the size-Ramsey number of `P_n` with `r` colours,
/// over connected graphs with at most `max_edges` edges.
///
/// A minimum arrowing graph can be taken connected (a disconnected graph
/// arrows only if a component does) and labelled with non-increasing degrees,
/// so candidates on `v` vertices are the `m`-subsets of `E(K_v)` with those
/// properties. Vertex counts are tried in increasing order, so the first
/// witness has as few vertices as possible.
pub fn size_ramsey_exact(n: usize, r: usize, max_edges: usize, budget: u64) -> Result<SizeRamsey> {
    if r == 0 {
        return Err(param("need at least one colour"));
    }
    if n <= 1 {
        return Ok(SizeRamsey {
            edges: 0,
            witness: Graph::empty(n),
            graphs_checked: 0,
            budget_spent: 0,
        });
    }
    let mut spent = 0u64;
    let mut graphs_checked = 0u64;
    for m in 1..=max_edges {
        let mut v_min = 2;
        while v_min * (v_min - 1) / 2 < m {
            v_min += 1;
        }
        for v in v_min..=(m + 1).min(64) {
            if v < n {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..v)
                .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
                .collect();
            if pairs.len() > 64 {
                return Err(param(
                    "candidate vertex count too large for the enumeration",
                ));
            }
            let mut found: Option<Graph> = None;
            let mut failure: Option<Error> = None;
            let _ = for_each_subset(low_mask(pairs.len()), m, &mut |chosen| {
                spent += 1;
                if spent > budget {
                    failure = Some(Error::Budget {
                        what: format!("size-Ramsey search for n={n}, r={r}"),
                        spent: budget,
                    });
                    return ControlFlow::Break(());
                }
                let mut deg = vec![0usize; v];
                let edges: Vec<(usize, usize)> =
                    bits(chosen).into_iter().map(|i| pairs[i]).collect();
                for &(a, b) in &edges {
                    deg[a] += 1;
                    deg[b] += 1;
                }
                if deg.contains(&0) || deg.windows(2).any(|w| w[0] < w[1]) {
                    return ControlFlow::Continue(());
                }
                let g = Graph::from_edges(v, &edges).expect("ids in range");
                if !g.is_connected() {
                    return ControlFlow::Continue(());
                }
                graphs_checked += 1;
                match arrow_exact(&g, n, r, budget - spent) {
                    Ok(cert) => {
                        spent += cert.budget_spent;
                        if cert.verdict == Verdict::Holds {
                            found = Some(g);
                            return ControlFlow::Break(());
                        }
                        ControlFlow::Continue(())
                    }
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            if let Some(witness) = found {
                return Ok(SizeRamsey {
                    edges: m,
                    witness,
                    graphs_checked,
                    budget_spent: spent,
                });
            }
        }
    }
    Err(Error::Budget {
        what: format!("no arrowing graph with at most {max_edges} edges"),
        spent,
    })
}

/// Re-checks a failure witness: empty cross pairs must have no edges, and an
/// escaping colouring must have no monochromatic `P_n`.
pub fn witness_is_sound(g: &Graph, cert: &Certificate) -> Result<bool> {
    match &cert.witness {
        None => Ok(cert.verdict != Verdict::Fails),
        Some(Witness::Pair { s, t }) => {
            let k = cert.params.set_size;
            Ok(s.len() == k && t.len() == k && g.edges_between(s, t)? == 0)
        }
        Some(Witness::Quadruple { s1, s2, t1, t2 }) => {
            let m = cert.params.set_size;
            let all: Vec<usize> = s1.iter().chain(s2).chain(t1).chain(t2).copied().collect();
            let mut sorted = all.clone();
            sorted.sort_unstable();
            sorted.dedup();
            Ok(sorted.len() == all.len()
                && s1.len() == t2.len()
                && s2.len() == t1.len()
                && s1.len() + s2.len() == m
                && g.edges_between(s1, t2)? == 0
                && g.edges_between(s2, t1)? == 0)
        }
        Some(Witness::Colouring(col)) => {
            col.check(g)?;
            for colour in 0..col.colours() {
                let p = crate::path::longest_mono_path(g, col, colour, true)?;
                if p.order() >= cert.params.n {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Re-checks a bipartite failure witness.
pub fn bipartite_witness_is_sound(g: &BipartiteGraph, cert: &Certificate) -> Result<bool> {
    match &cert.witness {
        Some(Witness::Pair { s, t }) => {
            let k = cert.params.set_size;
            Ok(s.len() == k && t.len() == k && g.edges_between(s, t)? == 0)
        }
        None => Ok(cert.verdict != Verdict::Fails),
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIG: u64 = 1 << 40;

    #[test]
    fn subsets_enumerated() {
        let mut seen = Vec::new();
        let _ = for_each_subset(0b10110, 2, &mut |m| {
            seen.push(m);
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![0b00110, 0b10010, 0b10100]);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn letzter_degenerate_size() {
        assert!(matches!(
            check_letzter(&Graph::complete(10), 4, Mode::Exact, BIG),
            Err(Error::Parameter(_))
        ));
        assert!(check_letzter(&Graph::complete(8), 4, Mode::Exact, BIG).is_err());
    }

    #[test]
    fn letzter_complete_holds() {
        let cert = check_letzter(&Graph::complete(12), 4, Mode::Exact, BIG).unwrap();
        assert_eq!(cert.verdict, Verdict::Holds);
        assert_eq!(cert.params.set_size, 1);
    }

    #[test]
    fn letzter_cycle_fails_with_witness() {
        let g = Graph::cycle(12);
        let cert = check_letzter(&g, 4, Mode::Exact, BIG).unwrap();
        assert_eq!(cert.verdict, Verdict::Fails);
        assert!(witness_is_sound(&g, &cert).unwrap());
        let mc = check_letzter(&g, 4, Mode::MonteCarlo { seed: 3 }, 1000).unwrap();
        assert_eq!(mc.verdict, Verdict::Fails);
        assert!(witness_is_sound(&g, &mc).unwrap());
    }

    #[test]
    fn letzter_budget() {
        let g = Graph::complete(40);
        assert!(matches!(
            check_letzter(&g, 4, Mode::Exact, 100),
            Err(Error::Budget { .. })
        ));
        let mc = check_letzter(&g, 4, Mode::MonteCarlo { seed: 1 }, 50).unwrap();
        assert_eq!(mc.verdict, Verdict::Undecided);
        assert_eq!(mc.budget_spent, 50);
    }

    #[test]
    fn two_holes_complete_holds() {
        let cert = check_two_holes(&Graph::complete(12), 4, Mode::Exact, BIG).unwrap();
        assert_eq!(cert.verdict, Verdict::Holds);
        assert_eq!(cert.params.set_size, 2);
    }

    #[test]
    fn two_holes_two_cliques_fail() {
        let n = 4;
        let g = Graph::complete(6).disjoint_union(&Graph::complete(6));
        let cert = check_two_holes(&g, n, Mode::Exact, BIG).unwrap();
        assert_eq!(cert.verdict, Verdict::Fails);
        assert!(witness_is_sound(&g, &cert).unwrap());
        if let Some(Witness::Quadruple { s1, s2, t1, t2 }) = &cert.witness {
            assert_eq!(g.edges_between(s1, t2).unwrap(), 0);
            assert_eq!(g.edges_between(s2, t1).unwrap(), 0);
        } else {
            panic!("expected quadruple");
        }
    }

    #[test]
    fn bipartite_size_formula() {
        // r = 2, c = 4: ((5/4) - 1) n / 2 = n/8
        assert_eq!(bipartite_set_size(32, 8, 2).unwrap(), 1);
        assert_eq!(bipartite_set_size(64, 16, 2).unwrap(), 2);
        assert!(bipartite_set_size(24, 8, 2).is_err());
    }

    #[test]
    fn bipartite_complete_holds_and_blocks_fail() {
        let n = 2;
        let k = BipartiteGraph::complete(8, 8);
        let cert = check_bipartite_multi(&k, n, 2, Mode::Exact, BIG).unwrap();
        assert_eq!(cert.verdict, Verdict::Holds);
        // remove all edges between left {0,1} and right {0,1}
        let edges: Vec<_> = k
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| !(a < 2 && b < 2))
            .collect();
        let h = BipartiteGraph::from_edges(8, 8, &edges).unwrap();
        let cert = check_bipartite_multi(&h, n, 2, Mode::Exact, BIG).unwrap();
        assert_eq!(cert.params.set_size, 1);
        assert_eq!(cert.verdict, Verdict::Fails);
        assert!(bipartite_witness_is_sound(&h, &cert).unwrap());
    }

    #[test]
    fn path_through_edge() {
        // path 0-1-2-3 in one colour
        let mut adj = vec![0u64; 4];
        for (u, v) in [(0, 1), (1, 2), (2, 3)] {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        assert!(path_through(&adj, 1, 2, 4));
        assert!(path_through(&adj, 0, 1, 4));
        assert!(!path_through(&adj, 0, 1, 5));
    }

    #[test]
    fn arrow_small_graphs() {
        let k3 = Graph::complete(3);
        assert_eq!(arrow_exact(&k3, 3, 2, BIG).unwrap().verdict, Verdict::Holds);
        let p3 = Graph::path(3);
        let cert = arrow_exact(&p3, 3, 2, BIG).unwrap();
        assert_eq!(cert.verdict, Verdict::Fails);
        assert!(witness_is_sound(&p3, &cert).unwrap());
        let c5 = Graph::cycle(5);
        assert_eq!(arrow_exact(&c5, 3, 2, BIG).unwrap().verdict, Verdict::Holds);
        let c4 = Graph::cycle(4);
        assert_eq!(arrow_exact(&c4, 3, 2, BIG).unwrap().verdict, Verdict::Fails);
    }

    #[test]
    fn arrow_budget_error() {
        let k6 = Graph::complete(6);
        assert!(matches!(
            arrow_exact(&k6, 6, 3, 10),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn size_ramsey_small() {
        let sr = size_ramsey_exact(3, 2, 6, BIG).unwrap();
        assert_eq!(sr.edges, 3);
        assert_eq!(sr.witness, Graph::complete(3));
        assert_eq!(size_ramsey_exact(2, 1, 3, BIG).unwrap().edges, 1);
        assert_eq!(size_ramsey_exact(3, 1, 3, BIG).unwrap().edges, 2);
    }
}
