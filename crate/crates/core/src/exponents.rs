//! First-moment exponent functions for the hole-type sufficient conditions.
//!
//! Each function is the exponential rate `lim (1/n) log E[X]` of an expected
//! count of "bad" set configurations in a random graph of order `cn`. A
//! negative rate means the count vanishes and the certificate holds a.a.s.
//! Densities `a, b, s, t` are per-`n` (or per-`dn` for edge counts) and
//! dimensionless. `x log x` at `x = 0` is taken as `0`.

use alloc::format;

use libm::{exp, lgamma, log, sqrt};

use crate::error::{Error, Result};
use crate::optimize::{
    bisect, golden_section_min, grid_refine_max, grid_then_golden_max, OptResult,
};

const LN2: f64 = core::f64::consts::LN_2;

fn domain(msg: impl Into<alloc::string::String>) -> Error {
    Error::Domain(msg.into())
}

/// `x log x`, continuous at 0. NaN for negative `x`.
#[inline]
pub fn xlogx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x > 0.0 {
        x * log(x)
    } else {
        f64::NAN
    }
}

/// `log x!` for real `x >= 0`.
#[inline]
pub fn ln_factorial(x: f64) -> f64 {
    lgamma(x + 1.0)
}

#[inline]
fn ln_binomial(n: f64, k: f64) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// `log M(i)` for real `i`, where `M(i) = i! / ((i/2)! 2^(i/2))`.
#[inline]
pub fn ln_matchings_real(i: f64) -> f64 {
    ln_factorial(i) - ln_factorial(i / 2.0) - (i / 2.0) * LN2
}

/// Log of the number of perfect matchings on `i` points.
pub fn log_perfect_matchings(i: u64) -> Result<f64> {
    if i % 2 == 1 {
        return Err(Error::Parameter(format!(
            "perfect matchings need an even count, got {i}"
        )));
    }
    Ok(ln_matchings_real(i as f64))
}

fn require_c_above_two(c: f64) -> Result<()> {
    if c > 2.0 && c.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("c = {c} must exceed 2")))
    }
}

// ---------------------------------------------------------------------------
// One hole, random regular graphs
// ---------------------------------------------------------------------------

/// Exponent of the expected number of disjoint pairs `S, T` with
/// `|S| = |T| = (c-2)n/4`, `e(S,T) = 0` and `e(S, rest) = adn` in a random
/// `d`-regular graph on `cn` vertices.
pub fn f_one_hole(a: f64, c: f64, d: f64) -> Result<f64> {
    require_c_above_two(c)?;
    let q = (c - 2.0) / 4.0;
    if !(0.0..=q).contains(&a) {
        return Err(domain(format!("a = {a} outside [0, {q}]")));
    }
    let h = (c + 2.0) / 2.0;
    Ok(
        c * (1.0 - d / 2.0) * log(c) + q * (d - 2.0) * log(q) + h * (d - 1.0) * log(h)
            - (d / 2.0) * xlogx(q - a)
            - d * xlogx(a)
            - d * xlogx(h - a)
            + (d / 2.0) * xlogx((3.0 * c + 2.0) / 4.0 - a),
    )
}

/// Closed-form `df/da` of [`f_one_hole`].
pub fn df_one_hole_da(a: f64, c: f64, d: f64) -> f64 {
    -(d / 2.0)
        * (2.0 * LN2 - log(c - 2.0 - 4.0 * a) + 2.0 * log(a) - 2.0 * log(c + 2.0 - 2.0 * a)
            + log(3.0 * c + 2.0 - 4.0 * a))
}

/// The stationary point `a0 = c/2 - sqrt(2c^2 + 8)/4`, the smaller root of
/// `a^2 - ca + (c^2 - 4)/8`.
pub fn a0_one_hole(c: f64) -> f64 {
    c / 2.0 - sqrt(2.0 * c * c + 8.0) / 4.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Envelope {
    pub value: f64,
    /// Where the envelope was evaluated.
    pub at: f64,
    /// True when the stationary point fell outside the domain and the
    /// nearest boundary was used instead.
    pub clamped: bool,
}

/// `g(c, d) = f(a0, c, d)`, the maximum of [`f_one_hole`] over `a`.
pub fn g_one_hole(c: f64, d: f64) -> Result<Envelope> {
    require_c_above_two(c)?;
    let q = (c - 2.0) / 4.0;
    let a0 = a0_one_hole(c);
    let at = a0.clamp(0.0, q);
    Ok(Envelope {
        value: f_one_hole(at, c, d)?,
        at,
        clamped: at != a0,
    })
}

/// `log X(a)` evaluated exactly (through log-Gamma) at a finite `n`, from
/// the pairing-model count of pairs `S, T`. Non-integer arguments are
/// handled by the Gamma function.
pub fn ln_x_one_hole(a: f64, c: f64, d: f64, n: f64) -> Result<f64> {
    require_c_above_two(c)?;
    let q = (c - 2.0) / 4.0;
    if !(0.0..=q).contains(&a) {
        return Err(domain(format!("a = {a} outside [0, {q}]")));
    }
    let h = (c + 2.0) / 2.0;
    let dn = d * n;
    let adn = a * dn;
    Ok(ln_binomial(c * n, q * n)
        + ln_binomial(c * n - q * n, q * n)
        + ln_binomial(q * dn, adn)
        + ln_binomial(h * dn, adn)
        + ln_matchings_real(q * dn - adn)
        + ln_factorial(adn)
        + ln_matchings_real(h * dn - adn + q * dn)
        - ln_matchings_real(c * dn))
}

/// `(log X(a) + (3/2) log n) / n - f(a, c, d)`: the finite-`n` error of the
/// exponent, which tends to 0 like `1/n`.
pub fn stirling_gap_one_hole(a: f64, c: f64, d: f64, n: f64) -> Result<f64> {
    Ok((ln_x_one_hole(a, c, d, n)? + 1.5 * log(n)) / n - f_one_hole(a, c, d)?)
}

// ---------------------------------------------------------------------------
// Edge lower bound for any graph satisfying the one-hole condition
// ---------------------------------------------------------------------------

/// `f(c) = (c/2)(log a / log(1-a) - 1)` with `a = (c-2)/(4c)`: edges per `n`
/// forced on a graph of order `cn` whose complement has no `K_{aN,aN}`.
pub fn f_kst(c: f64) -> Result<f64> {
    require_c_above_two(c)?;
    let alpha = (c - 2.0) / (4.0 * c);
    let one_minus = (3.0 * c + 2.0) / (4.0 * c);
    Ok((c / 2.0) * (log(alpha) / log(one_minus) - 1.0))
}

/// Minimiser of [`f_kst`], by golden section on `[2.5, 20]`.
pub fn kst_minimum() -> OptResult {
    golden_section_min(|c| f_kst(c).unwrap_or(f64::INFINITY), 2.5, 20.0, 1e-9, 500)
}

// ---------------------------------------------------------------------------
// Two holes
// ---------------------------------------------------------------------------

/// Exponent bound for the two-hole condition in `G(cn, d/n)`.
pub fn f_binomial_two_holes(c: f64, d: f64) -> Result<f64> {
    require_c_above_two(c)?;
    let m = c - 2.0;
    Ok(c * log(c) + m * log(m) - 2.0 * LN2 - 2.0 * m * log(m / 2.0) - d * m * m / 8.0)
}

/// Exponent of the symmetric two-hole count `Y(a, t)` in a random
/// `d`-regular graph on `cn` vertices, all four sets of size `(c-2)n/4`.
pub fn f_two_holes_regular(a: f64, t: f64, c: f64, d: f64) -> Result<f64> {
    require_c_above_two(c)?;
    let q = c / 4.0 - 0.5;
    let h = c / 2.0 - 1.0 - 2.0 * a;
    if !(0.0..=q).contains(&a) {
        return Err(domain(format!("a = {a} outside [0, {q}]")));
    }
    let t_max = h.min(2.0);
    if !(0.0..=t_max).contains(&t) {
        return Err(domain(format!("t = {t} outside [0, {t_max}]")));
    }
    Ok(
        c * log(c) + 4.0 * (d - 1.0) * xlogx(q) + (d - 1.0) * 2.0 * LN2
            - 2.0 * d * xlogx(a)
            - d * xlogx(t)
            - (d / 2.0) * c * log(c)
            - 4.0 * d * xlogx(q - a)
            - d * xlogx(2.0 - t)
            + d * xlogx(h)
            - (d / 2.0) * xlogx(h - t)
            + (d / 2.0) * xlogx(h + 2.0 - t),
    )
}

/// Closed-form `df/dt` of [`f_two_holes_regular`].
pub fn df_two_holes_dt(a: f64, t: f64, c: f64, d: f64) -> f64 {
    let h = c / 2.0 - 1.0 - 2.0 * a;
    -d * log(t) + d * log(2.0 - t) + (d / 2.0) * log(h - t) - (d / 2.0) * log(h + 2.0 - t)
}

/// The smaller root `t0` of `t^2 - (c-4a)t + (c-2-4a) = 0`.
pub fn t0_two_holes(a: f64, c: f64) -> Result<f64> {
    let b = c - 4.0 * a;
    let disc = b * b - 4.0 * (c - 2.0 - 4.0 * a);
    if disc < 0.0 {
        return Err(domain(format!(
            "negative discriminant {disc} at a = {a}, c = {c}"
        )));
    }
    Ok(b / 2.0 - sqrt(disc) / 2.0)
}

/// `g(a) = f(a, t0(a))`, the maximum of [`f_two_holes_regular`] over `t`.
pub fn g_two_holes_regular(a: f64, c: f64, d: f64) -> Result<f64> {
    let t0 = t0_two_holes(a, c)?;
    f_two_holes_regular(a, t0, c, d)
}

/// `max_a g(a)` over `a` in `[0, (c-2)/4]`.
pub fn max_g_two_holes(c: f64, d: f64) -> Result<OptResult> {
    require_c_above_two(c)?;
    let q = (c - 2.0) / 4.0;
    Ok(grid_then_golden_max(
        |a| g_two_holes_regular(a, c, d).unwrap_or(f64::NEG_INFINITY),
        0.0,
        q,
        400,
        1e-10,
    ))
}

/// `lim (1/n) log X(s, a, b, t)` for the general two-hole count in a random
/// `d`-regular graph on `cn` vertices: `|S1| = |T2| = sn`,
/// `|S2| = |T1| = ((c-2)/2 - s)n`, `e(S1,T1) = adn`, `e(S2,T2) = bdn`,
/// `e(S1 u S2, rest) = tdn`. Built from Stirling's approximation of every
/// factorial in the count.
pub fn two_holes_full_exponent(s: f64, a: f64, b: f64, t: f64, c: f64, d: f64) -> Result<f64> {
    require_c_above_two(c)?;
    let half = (c - 2.0) / 2.0;
    let r = half - s;
    let in_range = (0.0..=half).contains(&s)
        && (0.0..=s.min(r)).contains(&a)
        && (0.0..=s.min(r)).contains(&b)
        && (0.0..=(half - a - b).min(2.0)).contains(&t);
    if !in_range {
        return Err(domain(format!(
            "(s,a,b,t) = ({s},{a},{b},{t}) outside the domain"
        )));
    }
    // (1/n) log (xn)! -> x log x - x after dropping x log n, which cancels
    let lf = |x: f64| xlogx(x) - x;
    let lc = |n: f64, k: f64| lf(n) - lf(k) - lf(n - k);
    let lm = |i: f64| lf(i) - lf(i / 2.0) - (i / 2.0) * LN2;
    Ok(lc(c, s)
        + lc(c - s, r)
        + lc((c + 2.0) / 2.0, s)
        + lc((c + 2.0) / 2.0 - s, r)
        + lc(s * d, a * d)
        + lc(r * d, a * d)
        + lf(a * d)
        + lc(s * d, b * d)
        + lc(r * d, b * d)
        + lf(b * d)
        + lc((half - a - b) * d, t * d)
        + lc(2.0 * d, t * d)
        + lf(t * d)
        + lm((half - a - b - t) * d)
        + lm(((c + 2.0) / 2.0 - a - b - t) * d)
        - lm(c * d))
}

/// Where the maximum of [`two_holes_full_exponent`] sits.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MaxLocation {
    pub s: f64,
    pub a: f64,
    pub b: f64,
    pub t: f64,
    pub value: f64,
    /// Grid resolution in the `s` and `a` directions.
    pub grid_step: f64,
    pub symmetric: bool,
    pub balanced: bool,
}

/// Grid search plus coordinate refinement of the general two-hole exponent
/// over `(s, a, b, t)`. The domain is mapped onto the unit cube:
/// `s = u0 (c-2)/4`, `a = u1 min(s, (c-2)/2 - s)`, `b` likewise, and
/// `t = u3 min((c-2)/2 - a - b, 2)`.
pub fn verify_max_location(c: f64, d: f64, grid: usize) -> Result<MaxLocation> {
    require_c_above_two(c)?;
    let q = (c - 2.0) / 4.0;
    let half = 2.0 * q;
    let map = |u: &[f64]| {
        let s = u[0] * q;
        let cap = s.min(half - s);
        let a = u[1] * cap;
        let b = u[2] * cap;
        let t = u[3] * (half - a - b).min(2.0);
        (s, a, b, t)
    };
    let opt = grid_refine_max(
        |u| {
            let (s, a, b, t) = map(u);
            two_holes_full_exponent(s, a, b, t, c, d).unwrap_or(f64::NEG_INFINITY)
        },
        4,
        grid,
        1e-10,
    );
    let (s, a, b, t) = map(&opt.point);
    let grid_step = q / grid as f64;
    Ok(MaxLocation {
        s,
        a,
        b,
        t,
        value: opt.value,
        grid_step,
        symmetric: (a - b).abs() <= grid_step,
        balanced: (s - q).abs() <= grid_step,
    })
}

// ---------------------------------------------------------------------------
// Constant searches
// ---------------------------------------------------------------------------

/// Best `(c, d)` for an exponent threshold: for each integer `d`, the least
/// `c` with `rate(c, d) <= 0`, and the `d` minimising `cd/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstantSearch {
    pub c: f64,
    pub d: u32,
    pub edges_per_n: f64,
}

fn least_c_nonpositive(rate: &impl Fn(f64) -> f64, c_max: f64) -> Option<f64> {
    let step = 0.01;
    let mut prev = 2.0 + step;
    let mut c = prev + step;
    while c <= c_max {
        if rate(c) <= 0.0 && rate(prev) > 0.0 {
            return bisect(rate, prev, c, 1e-10);
        }
        prev = c;
        c += step;
    }
    None
}

fn search_constants(
    degrees: core::ops::RangeInclusive<u32>,
    rate: impl Fn(f64, f64) -> f64,
) -> Option<ConstantSearch> {
    degrees
        .filter_map(|d| {
            let c = least_c_nonpositive(&|c| rate(c, d as f64), 30.0)?;
            Some(ConstantSearch {
                c,
                d,
                edges_per_n: c * d as f64 / 2.0,
            })
        })
        .min_by(|x, y| x.edges_per_n.total_cmp(&y.edges_per_n))
}

/// Minimum `cd/2` such that `g_one_hole(c, d) <= 0`, over `d` in `degrees`.
pub fn search_one_hole_constants(
    degrees: core::ops::RangeInclusive<u32>,
) -> Option<ConstantSearch> {
    search_constants(degrees, |c, d| {
        g_one_hole(c, d).map(|e| e.value).unwrap_or(f64::NAN)
    })
}

/// Minimum `cd/2` such that `max_a g_two_holes_regular(a; c, d) <= 0`.
pub fn search_two_holes_constants(
    degrees: core::ops::RangeInclusive<u32>,
) -> Option<ConstantSearch> {
    search_constants(degrees, |c, d| {
        max_g_two_holes(c, d).map(|o| o.value).unwrap_or(f64::NAN)
    })
}

// ---------------------------------------------------------------------------
// More colours
// ---------------------------------------------------------------------------

/// Parameters of the bipartite multicolour construction for `r` colours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MulticolourConstants {
    pub r: u32,
    /// `c = 2^(r+1)`.
    pub c: u128,
    /// `d = 8r`.
    pub d: u128,
    /// `dc / 2^(r+2)`, which must equal `4r`.
    pub exponent_ratio: u128,
    /// `c^2 d`, the edge count per `n`.
    pub edges_per_n: u128,
    /// `33 r 4^r`.
    pub claimed_bound: u128,
    pub holds: bool,
}

pub fn multicolour_constants(r: u32) -> Result<MulticolourConstants> {
    if !(2..=40).contains(&r) {
        return Err(Error::Parameter(format!("r = {r} outside 2..=40")));
    }
    let r128 = r as u128;
    let c = 1u128 << (r + 1);
    let d = 8 * r128;
    let exponent_ratio = d * c / (1u128 << (r + 2));
    let edges_per_n = c * c * d;
    let claimed_bound = 33 * r128 * (1u128 << (2 * r));
    Ok(MulticolourConstants {
        r,
        c,
        d,
        exponent_ratio,
        edges_per_n,
        claimed_bound,
        holds: (d * c).is_multiple_of(1u128 << (r + 2))
            && exponent_ratio == 4 * r128
            && edges_per_n == 32 * r128 * (1u128 << (2 * r))
            && edges_per_n < claimed_bound,
    })
}

/// Chernoff tail bound `P(|X - EX| >= eps EX) <= 2 exp(-eps^2 EX / 3)` for
/// binomial `X`, valid for `0 < eps < 3/2`.
pub fn chernoff_bound(mean: f64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.5) {
        return Err(Error::Parameter(format!("eps = {eps} outside (0, 3/2)")));
    }
    if mean.is_nan() || mean <= 0.0 {
        return Err(Error::Parameter(format!("mean = {mean} must be positive")));
    }
    Ok(2.0 * exp(-eps * eps * mean / 3.0))
}

/// Convenience: the sampled simple-graph probability of the pairing model,
/// `exp(-(d^2 - 1)/4)`.
pub fn pairing_simple_probability(d: f64) -> f64 {
    exp(-(d * d - 1.0) / 4.0)
}
