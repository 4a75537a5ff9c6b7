//! Random graph models: `G(n,p)`, `G(n,n,p)` and the pairing (configuration)
//! model for random `d`-regular graphs.
//!
//! All generators are pure functions of their [`RandomSpec`]; the seed fixes
//! the output.

use alloc::format;
use alloc::vec::Vec;

use libm::{floor, log};
use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::error::{param, Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::rng::{rng_from_seed, Rng};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "model", rename_all = "lowercase"))]
pub enum Model {
    /// Binomial random graph on `n` vertices.
    Gnp { n: usize, p: f64 },
    /// Binomial random bipartite graph with both parts of size `n`.
    Gnnp { n: usize, p: f64 },
    /// Pairing model with `n` buckets of `d` points.
    Pairing { n: usize, d: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RandomSpec {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub model: Model,
    pub seed: u64,
}

impl RandomSpec {
    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        RandomSpec {
            model: Model::Gnp { n, p },
            seed,
        }
    }

    pub fn gnnp(n: usize, p: f64, seed: u64) -> Self {
        RandomSpec {
            model: Model::Gnnp { n, p },
            seed,
        }
    }

    pub fn pairing(n: usize, d: usize, seed: u64) -> Self {
        RandomSpec {
            model: Model::Pairing { n, d },
            seed,
        }
    }

    /// Checks the model's parameter constraints.
    pub fn validate(&self) -> Result<()> {
        match self.model {
            Model::Gnp { p, .. } | Model::Gnnp { p, .. } => check_probability(p),
            Model::Pairing { n, d } => {
                if d == 0 {
                    return Err(param("pairing model needs d >= 1"));
                }
                if (d * n) % 2 == 1 {
                    return Err(param(format!("d*n = {} is odd", d * n)));
                }
                Ok(())
            }
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(param(format!("probability {p} outside [0,1]")))
    }
}

/// Calls `emit(i)` for each index `i < total` selected independently with
/// probability `p`, using geometric skips between successes.
fn bernoulli_indices(total: u64, p: f64, rng: &mut Rng, mut emit: impl FnMut(u64)) {
    if p <= 0.0 || total == 0 {
        return;
    }
    if p >= 1.0 {
        (0..total).for_each(emit);
        return;
    }
    let log_q = log(1.0 - p);
    let mut i: u64 = 0;
    loop {
        let u: f64 = rng.gen();
        let skip = floor(log(1.0 - u) / log_q);
        if skip.is_nan() || skip >= (total - i) as f64 {
            return;
        }
        i += skip as u64;
        emit(i);
        i += 1;
        if i >= total {
            return;
        }
    }
}

/// Maps a linear index over the pairs `{u, v}`, `u < v`, ordered by `v`
/// then `u`, back to the pair.
fn unrank_pair(idx: u64) -> (usize, usize) {
    // largest v with v(v-1)/2 <= idx
    let mut v = ((1.0 + libm::sqrt(1.0 + 8.0 * idx as f64)) / 2.0) as u64;
    while v * (v - 1) / 2 > idx {
        v -= 1;
    }
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    let u = idx - v * (v - 1) / 2;
    (u as usize, v as usize)
}

pub fn gen_gnp(spec: &RandomSpec) -> Result<Graph> {
    let Model::Gnp { n, p } = spec.model else {
        return Err(param("gen_gnp requires the gnp model"));
    };
    spec.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    let total = (n as u64) * (n as u64).saturating_sub(1) / 2;
    let mut edges = Vec::new();
    bernoulli_indices(total, p, &mut rng, |i| edges.push(unrank_pair(i)));
    Graph::from_edges(n, &edges)
}

pub fn gen_gnnp(spec: &RandomSpec) -> Result<BipartiteGraph> {
    let Model::Gnnp { n, p } = spec.model else {
        return Err(param("gen_gnnp requires the gnnp model"));
    };
    spec.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    let mut edges = Vec::new();
    let width = n as u64;
    bernoulli_indices(width * width, p, &mut rng, |i| {
        edges.push(((i / width) as usize, (i % width) as usize))
    });
    BipartiteGraph::from_edges(n, n, &edges)
}

fn pairing_with(n: usize, d: usize, rng: &mut Rng, points: &mut Vec<usize>) -> Graph {
    points.clear();
    points.extend((0..n).flat_map(|v| core::iter::repeat_n(v, d)));
    points.shuffle(rng);
    let edges: Vec<_> = points.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    Graph::from_edges(n, &edges).expect("bucket ids in range")
}

/// One draw from the pairing model, projected to a multigraph. Loops and
/// parallel edges are kept.
pub fn gen_pairing(spec: &RandomSpec) -> Result<Graph> {
    let Model::Pairing { n, d } = spec.model else {
        return Err(param("gen_pairing requires the pairing model"));
    };
    spec.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    Ok(pairing_with(n, d, &mut rng, &mut Vec::new()))
}

/// Uniform sample from the simple `d`-regular graphs on `n` vertices, by
/// rejection from the pairing model. Also returns the number of pairings
/// drawn, including the accepted one.
pub fn gen_regular_simple_counted(spec: &RandomSpec, max_attempts: u64) -> Result<(Graph, u64)> {
    let Model::Pairing { n, d } = spec.model else {
        return Err(param("gen_regular_simple requires the pairing model"));
    };
    spec.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    let mut points = Vec::with_capacity(n * d);
    for attempt in 1..=max_attempts {
        let g = pairing_with(n, d, &mut rng, &mut points);
        if g.is_simple() {
            return Ok((g, attempt));
        }
    }
    Err(Error::Budget {
        what: format!("no simple pairing for n={n}, d={d}"),
        spent: max_attempts,
    })
}

pub fn gen_regular_simple(spec: &RandomSpec, max_attempts: u64) -> Result<Graph> {
    gen_regular_simple_counted(spec, max_attempts).map(|(g, _)| g)
}

/// Dispatches on the model; bipartite samples are returned with the right
/// part relabelled after the left one.
pub fn generate(spec: &RandomSpec) -> Result<Graph> {
    match spec.model {
        Model::Gnp { .. } => gen_gnp(spec),
        Model::Gnnp { .. } => gen_gnnp(spec).map(|b| b.to_graph()),
        Model::Pairing { .. } => gen_pairing(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_covers_all_pairs_in_order() {
        let mut idx = 0;
        for v in 1..40usize {
            for u in 0..v {
                assert_eq!(unrank_pair(idx), (u, v));
                idx += 1;
            }
        }
    }

    #[test]
    fn gnp_extremes() {
        let g = gen_gnp(&RandomSpec::gnp(5, 0.0, 1)).unwrap();
        assert_eq!(g.edge_count(), 0);
        let k = gen_gnp(&RandomSpec::gnp(5, 1.0, 1)).unwrap();
        assert_eq!(k, Graph::complete(5));
    }

    #[test]
    fn gnnp_extremes() {
        let b = gen_gnnp(&RandomSpec::gnnp(4, 1.0, 3)).unwrap();
        assert_eq!(b, BipartiteGraph::complete(4, 4));
        let e = gen_gnnp(&RandomSpec::gnnp(4, 0.0, 3)).unwrap();
        assert_eq!(e.edge_count(), 0);
    }

    #[test]
    fn bad_probability_rejected() {
        assert!(matches!(
            gen_gnp(&RandomSpec::gnp(5, 1.5, 0)),
            Err(Error::Parameter(_))
        ));
        assert!(gen_gnnp(&RandomSpec::gnnp(5, -0.1, 0)).is_err());
    }

    #[test]
    fn pairing_forced_single_edge() {
        let g = gen_pairing(&RandomSpec::pairing(2, 1, 9)).unwrap();
        assert_eq!(g.edges(), alloc::vec![(0, 1)]);
        assert!(g.is_simple());
    }

    #[test]
    fn odd_point_count_rejected() {
        assert!(gen_pairing(&RandomSpec::pairing(5, 3, 0)).is_err());
        assert!(gen_regular_simple(&RandomSpec::pairing(5, 3, 0), 10).is_err());
    }

    #[test]
    fn model_mismatch_rejected() {
        assert!(gen_gnp(&RandomSpec::pairing(4, 2, 0)).is_err());
        assert!(gen_pairing(&RandomSpec::gnp(4, 0.5, 0)).is_err());
    }

    #[test]
    fn regular_simple_small_cases() {
        let g = gen_regular_simple(&RandomSpec::pairing(10, 2, 5), 10_000).unwrap();
        assert!(g.is_simple());
        assert!((0..10).all(|v| g.degree(v) == 2));
        let h = gen_regular_simple(&RandomSpec::pairing(100, 3, 5), 10_000).unwrap();
        assert!(h.is_simple());
        assert_eq!(h.edge_count(), 150);
    }

    #[test]
    fn regular_budget_exhaustion() {
        // d = n - 1 = 9 on 10 vertices: K_10 is the only simple outcome.
        let err = gen_regular_simple(&RandomSpec::pairing(10, 9, 1), 50).unwrap_err();
        assert!(matches!(err, Error::Budget { spent: 50, .. }));
    }
}
