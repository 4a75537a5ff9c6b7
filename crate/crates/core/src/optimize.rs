//! Small derivative-free optimisers for smooth low-dimensional functions.

use alloc::vec;
use alloc::vec::Vec;

use libm::fabs;

/// Result of an optimisation run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OptResult {
    pub point: Vec<f64>,
    pub value: f64,
    /// Width of the final bracket (per coordinate, the largest).
    pub tolerance: f64,
    pub iterations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_min(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> OptResult {
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iterations = 0;
    while b - a > tol && iterations < max_iter {
        iterations += 1;
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (a + b);
    OptResult {
        point: vec![x],
        value: f(x),
        tolerance: b - a,
        iterations,
    }
}

/// Golden-section search for a maximum.
pub fn golden_section_max(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> OptResult {
    let mut r = golden_section_min(|x| -f(x), lo, hi, tol, max_iter);
    r.value = -r.value;
    r
}

/// Maximises `f` on `[lo, hi]` by a uniform grid of `cells` intervals, then
/// golden-section inside the two cells around the best grid point. Suited to
/// functions that are unimodal only near their maximum.
pub fn grid_then_golden_max(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    cells: usize,
    tol: f64,
) -> OptResult {
    let step = (hi - lo) / cells as f64;
    let (best_i, _) = (0..=cells).map(|i| (i, f(lo + step * i as f64))).fold(
        (0, f64::NEG_INFINITY),
        |acc, (i, v)| if v > acc.1 { (i, v) } else { acc },
    );
    let left = lo + step * best_i.saturating_sub(1) as f64;
    let right = (lo + step * (best_i + 1) as f64).min(hi);
    let mut r = golden_section_max(&f, left, right, tol, 200);
    r.iterations += cells + 1;
    // endpoints are not probed by golden section
    for x in [lo, hi] {
        let v = f(x);
        if v > r.value {
            r.point = vec![x];
            r.value = v;
        }
    }
    r
}

/// Maximises `f` over the unit cube `[0,1]^dim`: exhaustive grid with
/// `per_axis` intervals per coordinate, then cyclic coordinate refinement by
/// golden section in a shrinking window until no coordinate moves by more
/// than `tol`.
pub fn grid_refine_max(
    f: impl Fn(&[f64]) -> f64,
    dim: usize,
    per_axis: usize,
    tol: f64,
) -> OptResult {
    assert!(dim >= 1 && per_axis >= 1);
    let step = 1.0 / per_axis as f64;
    let mut idx = vec![0usize; dim];
    let mut x = vec![0.0; dim];
    let mut best = vec![0.0; dim];
    let mut best_v = f64::NEG_INFINITY;
    let mut evaluations = 0usize;
    'grid: loop {
        for (xi, &ii) in x.iter_mut().zip(&idx) {
            *xi = ii as f64 * step;
        }
        let v = f(&x);
        evaluations += 1;
        if v > best_v {
            best_v = v;
            best.clone_from(&x);
        }
        #[allow(clippy::needless_range_loop)]
        for d in 0..dim {
            idx[d] += 1;
            if idx[d] <= per_axis {
                continue 'grid;
            }
            idx[d] = 0;
        }
        break;
    }

    let mut window = step;
    let mut point = best;
    let mut value = best_v;
    let mut sweeps = 0;
    while window > tol && sweeps < 200 {
        sweeps += 1;
        let mut moved = 0.0f64;
        for d in 0..dim {
            let lo = (point[d] - window).max(0.0);
            let hi = (point[d] + window).min(1.0);
            let r = golden_section_max(
                |t| {
                    let mut probe = point.clone();
                    probe[d] = t;
                    f(&probe)
                },
                lo,
                hi,
                tol * 0.1,
                200,
            );
            evaluations += r.iterations + 3;
            if r.value > value {
                moved = moved.max(fabs(r.point[0] - point[d]));
                point[d] = r.point[0];
                value = r.value;
            }
        }
        if moved < window * 0.25 {
            window *= 0.5;
        }
    }
    OptResult {
        point,
        value,
        tolerance: window,
        iterations: evaluations,
    }
}

/// Bisection for a sign change of `f` on `[lo, hi]`. Returns the endpoint
/// of the final bracket on the side where `f(hi)` has its sign.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo.is_nan() || fhi.is_nan() || (flo > 0.0) == (fhi > 0.0) {
        return None;
    }
    let lo_positive = flo > 0.0;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(hi)
}
