//! Monochromatic components of edge-coloured graphs.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::colouring::Colouring;
use crate::error::{param, Result};
use crate::generators::{gen_gnp, RandomSpec};
use crate::graph::{BipartiteGraph, Graph};
use crate::rng::{derive_seed, rng_from_seed, Rng};

/// Connected components in BFS order, lowest unvisited root first; each
/// component is sorted.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A largest component; ties go to the one with the lowest vertex.
pub fn largest_component(g: &Graph) -> Vec<usize> {
    components(g).into_iter().fold(
        Vec::new(),
        |best, c| if c.len() > best.len() { c } else { best },
    )
}

/// Union-find with component sizes.
#[derive(Debug, Clone)]
pub struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return self.size[a];
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.size[a]
    }

    pub fn size_of(&mut self, v: usize) -> usize {
        let r = self.find(v);
        self.size[r]
    }

    pub fn max_size(&self) -> usize {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] == v)
            .map(|v| self.size[v])
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BipartiteComponent {
    /// Edge density `|E| / (|V1| |V2|)`.
    pub eta: f64,
    /// `eta (|V1| + |V2|)`.
    pub bound: f64,
    /// Vertex ids with the right part shifted by `|V1|`.
    pub component: Vec<usize>,
}

/// A largest component of a bipartite graph together with its density; the
/// component always has at least `eta (|V1| + |V2|)` vertices.
pub fn bipartite_component_bound(h: &BipartiteGraph) -> BipartiteComponent {
    let (n1, n2) = h.parts();
    let eta = if n1 == 0 || n2 == 0 {
        0.0
    } else {
        h.edge_count() as f64 / (n1 as f64 * n2 as f64)
    };
    BipartiteComponent {
        eta,
        bound: eta * (n1 + n2) as f64,
        component: largest_component(&h.to_graph()),
    }
}

/// Largest component size of each colour class.
pub fn mono_component_spectrum(g: &Graph, col: &Colouring) -> Result<Vec<usize>> {
    col.check(g)?;
    let edges = g.edges();
    let mut dsu: Vec<Dsu> = (0..col.colours()).map(|_| Dsu::new(g.n())).collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        dsu[col.colour_of(i)].union(u, v);
    }
    Ok(dsu.iter().map(Dsu::max_size).collect())
}

/// Largest monochromatic component over all colours.
pub fn max_mono_component(g: &Graph, col: &Colouring) -> Result<usize> {
    Ok(mono_component_spectrum(g, col)?
        .into_iter()
        .max()
        .unwrap_or(0))
}

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// The slope class of the line through two distinct points of `AG(2, q)`:
/// `0..q` for slopes, `q` for vertical lines.
fn slope(a: (u64, u64), b: (u64, u64), q: u64) -> usize {
    if a.0 == b.0 {
        return q as usize;
    }
    let dx = (b.0 + q - a.0) % q;
    let dy = (b.1 + q - a.1) % q;
    (dy * pow_mod(dx, q - 2, q) % q) as usize
}

/// `K_{q^2}` coloured by the `q + 1` parallel classes of the affine plane
/// over `Z_q`. Vertex `x q + y` is the point `(x, y)`.
pub fn affine_sharp_colouring(q: u64) -> Result<(Graph, Colouring)> {
    if !is_prime(q) {
        return Err(param(format!("q = {q} is not prime")));
    }
    if q > 256 {
        return Err(param("q too large for an explicit complete graph"));
    }
    let g = Graph::complete((q * q) as usize);
    let point = |v: usize| ((v as u64) / q, (v as u64) % q);
    let col = Colouring::from_fn(&g, q as usize + 1, |u, v| slope(point(u), point(v), q))?;
    Ok((g, col))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PerturbedBound {
    /// `(1/(r-1) - eps r^2) n`.
    pub bound: f64,
    pub largest: usize,
    pub holds: bool,
}

/// Compares the largest monochromatic component of a given `r`-colouring of
/// a nearly complete graph with `(1/(r-1) - eps r^2) n`.
pub fn perturbed_component_bound(g: &Graph, col: &Colouring, eps: f64) -> Result<PerturbedBound> {
    let r = col.colours();
    let n = g.n() as f64;
    if r < 2 {
        return Err(param("need r >= 2"));
    }
    if !(0.0..=1.0 / (r * r) as f64).contains(&eps) {
        return Err(param(format!("eps = {eps} outside [0, 1/r^2]")));
    }
    if (g.edge_count() as f64) < (1.0 - eps) * n * (n - 1.0) / 2.0 - 1e-9 {
        return Err(param("graph has fewer than (1 - eps) C(n,2) edges"));
    }
    let largest = max_mono_component(g, col)?;
    let bound = (1.0 / (r - 1) as f64 - eps * (r * r) as f64) * n;
    Ok(PerturbedBound {
        bound,
        largest,
        holds: largest as f64 >= bound - 1e-9,
    })
}

// ---------------------------------------------------------------------------
// experiments
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Strategy {
    UniformRandom,
    /// Each edge, in random order, takes the colour whose component through
    /// it stays smallest.
    GreedyBalanced,
    /// Vertices are spread over the points of `AG(2, r-1)` and edges take the
    /// slope colour of their points; needs `r - 1` prime.
    AffinePattern,
}

/// Colours `g` with `r` colours according to `strategy`.
pub fn colour_with(g: &Graph, r: usize, strategy: Strategy, rng: &mut Rng) -> Result<Colouring> {
    if r == 0 {
        return Err(param("need at least one colour"));
    }
    let edges = g.edges();
    match strategy {
        Strategy::UniformRandom => {
            Colouring::new(r, edges.iter().map(|_| rng.gen_range(0..r)).collect())
        }
        Strategy::GreedyBalanced => {
            let mut order: Vec<usize> = (0..edges.len()).collect();
            order.shuffle(rng);
            let mut dsu: Vec<Dsu> = (0..r).map(|_| Dsu::new(g.n())).collect();
            let mut assignment = vec![0; edges.len()];
            for i in order {
                let (u, v) = edges[i];
                let best = (0..r)
                    .min_by_key(|&c| {
                        let (a, b) = (dsu[c].find(u), dsu[c].find(v));
                        if a == b {
                            dsu[c].size[a]
                        } else {
                            dsu[c].size[a] + dsu[c].size[b]
                        }
                    })
                    .unwrap_or(0);
                dsu[best].union(u, v);
                assignment[i] = best;
            }
            Colouring::new(r, assignment)
        }
        Strategy::AffinePattern => {
            let q = r as u64 - 1;
            if !is_prime(q) {
                return Err(param(format!(
                    "affine pattern needs r - 1 prime, got r = {r}"
                )));
            }
            let n = g.n().max(1) as u64;
            let point = |v: usize| {
                let p = v as u64 * q * q / n;
                (p / q, p % q)
            };
            Colouring::from_fn(g, r, |u, v| {
                let (a, b) = (point(u), point(v));
                // a blown-up point lies on a line of every slope
                if a == b {
                    0
                } else {
                    slope(a, b, q)
                }
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrialResult {
    pub trial: u64,
    pub seed: u64,
    /// Largest component per colour.
    pub per_colour: Vec<usize>,
    pub max_component: usize,
    pub ratio: f64,
}

/// One trial: sample `G(n, p)` from `seed`, colour it, measure components.
/// The colouring uses a stream derived from the same seed.
pub fn dr_trial(
    n: usize,
    p: f64,
    r: usize,
    strategy: Strategy,
    trial: u64,
    seed: u64,
) -> Result<TrialResult> {
    let g = gen_gnp(&RandomSpec::gnp(n, p, seed))?;
    let mut rng = rng_from_seed(derive_seed(seed, 1));
    let col = colour_with(&g, r, strategy, &mut rng)?;
    let per_colour = mono_component_spectrum(&g, &col)?;
    let max_component = per_colour.iter().copied().max().unwrap_or(0);
    Ok(TrialResult {
        trial,
        seed,
        per_colour,
        max_component,
        ratio: if n == 0 {
            0.0
        } else {
            max_component as f64 / n as f64
        },
    })
}

/// Seed of trial `i` under master seed `seed`.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    derive_seed(seed, i)
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Summary {
    pub trials: usize,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub q05: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub q95: f64,
}

/// Empirical quantile with linear interpolation between order statistics.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn summarize(values: &[f64]) -> Option<Summary> {
    if values.is_empty() || values.iter().any(|v| v.is_nan()) {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    Some(Summary {
        trials: values.len(),
        mean: values.iter().sum::<f64>() / values.len() as f64,
        min: sorted[0],
        max: sorted[sorted.len() - 1],
        q05: quantile(&sorted, 0.05),
        q25: quantile(&sorted, 0.25),
        median: quantile(&sorted, 0.5),
        q75: quantile(&sorted, 0.75),
        q95: quantile(&sorted, 0.95),
    })
}

/// Runs `trials` independent trials sequentially.
pub fn dr_experiment(
    n: usize,
    p: f64,
    r: usize,
    strategy: Strategy,
    trials: u64,
    seed: u64,
) -> Result<(Vec<TrialResult>, Summary)> {
    if trials == 0 {
        return Err(param("need at least one trial"));
    }
    let results = (0..trials)
        .map(|i| dr_trial(n, p, r, strategy, i, trial_seed(seed, i)))
        .collect::<Result<Vec<_>>>()?;
    let ratios: Vec<f64> = results.iter().map(|t| t.ratio).collect();
    let summary = summarize(&ratios).ok_or_else(|| param("empty experiment"))?;
    Ok((results, summary))
}
