mod common;

use pathramsey_core::exponents::pairing_simple_probability;
use pathramsey_core::generators::{
    gen_gnnp, gen_gnp, gen_pairing, gen_regular_simple, generate, RandomSpec,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn handshake(n in 0usize..60, p in 0.0f64..1.0, seed: u64) {
        let g = gen_gnp(&RandomSpec::gnp(n, p, seed)).unwrap();
        prop_assert_eq!(g.degree_sum(), 2 * g.edge_count());
        prop_assert!(g.is_simple());
    }

    #[test]
    fn same_seed_same_graph(n in 1usize..40, d in 1usize..6, seed: u64) {
        let n = if n * d % 2 == 1 { n + 1 } else { n };
        let spec = RandomSpec::pairing(n, d, seed);
        prop_assert_eq!(gen_pairing(&spec).unwrap(), gen_pairing(&spec).unwrap());
        let spec = RandomSpec::gnp(n, 0.3, seed);
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn pairing_is_regular(n in 1usize..40, d in 1usize..7, seed: u64) {
        prop_assume!(n * d % 2 == 0);
        let g = gen_pairing(&RandomSpec::pairing(n, d, seed)).unwrap();
        // a loop contributes two to its vertex's degree
        prop_assert!((0..n).all(|v| g.degree(v) == d));
    }

    #[test]
    fn edges_between_symmetric(n in 2usize..30, seed: u64, split in 0usize..30) {
        let g = gen_gnp(&RandomSpec::gnp(n, 0.4, seed)).unwrap();
        let split = split % n;
        let s: Vec<usize> = (0..split).collect();
        let t: Vec<usize> = (split..n).collect();
        let st = g.edges_between(&s, &t).unwrap();
        prop_assert_eq!(st, g.edges_between(&t, &s).unwrap());
        prop_assert_eq!(g.edges_within(&s).unwrap() + g.edges_within(&t).unwrap() + st, g.edge_count());
    }
}

#[test]
fn gnp_edge_count_within_three_sigma() {
    let (n, p) = (300usize, 0.05);
    let pairs = (n * (n - 1) / 2) as f64;
    let (mean, sd) = (pairs * p, (pairs * p * (1.0 - p)).sqrt());
    let mut outside = 0;
    for seed in 0..50 {
        let m = gen_gnp(&RandomSpec::gnp(n, p, seed)).unwrap().edge_count() as f64;
        if (m - mean).abs() > 3.0 * sd {
            outside += 1;
        }
    }
    assert!(outside <= 1, "{outside} of 50 samples beyond 3 sigma");
}

#[test]
fn gnnp_edge_count_within_three_sigma() {
    let (n, p) = (200usize, 0.1);
    let cells = (n * n) as f64;
    let (mean, sd) = (cells * p, (cells * p * (1.0 - p)).sqrt());
    let total: f64 = (0..20)
        .map(|seed| {
            gen_gnnp(&RandomSpec::gnnp(n, p, seed))
                .unwrap()
                .edge_count() as f64
        })
        .sum();
    // the mean of 20 samples has standard deviation sd / sqrt(20)
    assert!((total / 20.0 - mean).abs() < 3.0 * sd / 20f64.sqrt());
}

#[test]
fn pairing_simple_fraction_small() {
    let (n, d, trials) = (200, 3, 3000u64);
    let simple = (0..trials)
        .filter(|&s| {
            gen_pairing(&RandomSpec::pairing(n, d, s))
                .unwrap()
                .is_simple()
        })
        .count();
    let frac = simple as f64 / trials as f64;
    assert!(
        (frac - pairing_simple_probability(3.0)).abs() < 0.03,
        "{frac}"
    );
}

#[test]
fn extremes_and_validation() {
    assert_eq!(
        gen_gnp(&RandomSpec::gnp(7, 0.0, 1)).unwrap().edge_count(),
        0
    );
    assert_eq!(
        gen_gnp(&RandomSpec::gnp(7, 1.0, 1)).unwrap().edge_count(),
        21
    );
    assert!(gen_pairing(&RandomSpec::pairing(5, 3, 1)).is_err());
    assert!(gen_gnp(&RandomSpec::gnp(5, 1.5, 1)).is_err());
    let g = gen_regular_simple(&RandomSpec::pairing(30, 4, 8), 1000).unwrap();
    assert!(g.is_simple() && (0..30).all(|v| g.degree(v) == 4));
}
