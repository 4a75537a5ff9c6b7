//! The table of numerical constants behind the upper and lower bounds,
//! recomputed from the exponent functions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use libm::fabs;

use crate::exponents::{
    f_binomial_two_holes, g_one_hole, kst_minimum, max_g_two_holes, multicolour_constants,
    search_one_hole_constants, search_two_holes_constants,
};
use crate::lower_bounds::lower_bound_formula;
use crate::rational::Rational;

/// Default absolute tolerance for rows compared by closeness.
pub const DEFAULT_TOLERANCE: f64 = 0.005;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "relation", rename_all = "snake_case"))]
pub enum Relation {
    /// `computed < reference`.
    Below,
    /// `computed == reference`, exactly.
    Equal,
    /// `|computed - reference| <= tolerance`.
    Near { tolerance: f64 },
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstantRow {
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub relation: Relation,
    pub pass: bool,
    /// Free-form context such as the exact rational or the argmax.
    pub detail: String,
}

fn row(
    name: &str,
    computed: f64,
    reference: f64,
    relation: Relation,
    detail: String,
) -> ConstantRow {
    let pass = match relation {
        Relation::Below => computed < reference,
        Relation::Equal => computed == reference,
        Relation::Near { tolerance } => fabs(computed - reference) <= tolerance,
    };
    ConstantRow {
        name: name.into(),
        computed,
        reference,
        relation,
        pass,
        detail,
    }
}

fn exact_row(
    name: &str,
    computed: Rational,
    reference: Rational,
    relation: Relation,
) -> ConstantRow {
    let pass = match relation {
        Relation::Below => computed < reference,
        Relation::Equal => computed == reference,
        Relation::Near { tolerance } => fabs((computed - reference).to_f64()) <= tolerance,
    };
    ConstantRow {
        pass,
        ..row(
            name,
            computed.to_f64(),
            reference.to_f64(),
            relation,
            format!("{computed}"),
        )
    }
}

/// `c d / 2` for `c` given in thousandths (or ten-thousandths) as an exact
/// fraction.
fn half_product(c: Rational, d: i128) -> Rational {
    c * Rational::new(d, 2)
}

/// Every row; `tolerance` applies to the rows compared by closeness.
pub fn constants_table(tolerance: f64) -> Vec<ConstantRow> {
    let mut rows = Vec::new();
    let nan = f64::NAN;

    // one hole, random regular graphs
    let g1 = g_one_hole(5.219, 30.0).map(|e| e.value).unwrap_or(nan);
    rows.push(row(
        "one_hole.g(5.219,30)",
        g1,
        -0.0005,
        Relation::Below,
        String::new(),
    ));
    let e1 = half_product(Rational::new(5219, 1000), 30);
    rows.push(exact_row(
        "one_hole.cd/2",
        e1,
        Rational::new(78285, 1000),
        Relation::Equal,
    ));
    rows.push(exact_row(
        "one_hole.cd/2<78.3",
        e1,
        Rational::new(783, 10),
        Relation::Below,
    ));
    if let Some(best) = search_one_hole_constants(3..=60) {
        rows.push(row(
            "one_hole.search_min_cd/2",
            best.edges_per_n,
            78.3,
            Relation::Below,
            format!("d={} c={:.5}", best.d, best.c),
        ));
    }

    // bipartite Kovari-Sos-Turan route
    let kst = kst_minimum();
    rows.push(row(
        "kst.argmin_c",
        kst.point[0],
        5.633,
        Relation::Near { tolerance },
        String::new(),
    ));
    rows.push(row(
        "kst.min_value",
        kst.value,
        26.415,
        Relation::Near { tolerance },
        String::new(),
    ));

    // two holes, binomial graphs
    let fb = f_binomial_two_holes(5.28, 6.0).unwrap_or(nan);
    rows.push(row(
        "two_holes_binomial.f(5.28,6)",
        fb,
        0.0,
        Relation::Below,
        String::new(),
    ));
    let eb = Rational::new(528, 100) * Rational::new(528, 100) * Rational::new(6, 2);
    rows.push(exact_row(
        "two_holes_binomial.c^2d/2",
        eb,
        Rational::new(837, 10),
        Relation::Below,
    ));

    // two holes, random regular graphs
    let g2 = max_g_two_holes(5.4806, 27.0);
    let (g2v, g2a) = g2.map(|o| (o.value, o.point[0])).unwrap_or((nan, nan));
    rows.push(row(
        "two_holes.max_a g(5.4806,27)",
        g2v,
        -0.0001,
        Relation::Below,
        format!("a={g2a:.5}"),
    ));
    let e2 = half_product(Rational::new(54806, 10000), 27);
    rows.push(exact_row(
        "two_holes.cd/2",
        e2,
        Rational::new(739881, 10000),
        Relation::Equal,
    ));
    rows.push(exact_row(
        "two_holes.cd/2<74",
        e2,
        Rational::from(74),
        Relation::Below,
    ));
    if let Some(best) = search_two_holes_constants(10..=45) {
        rows.push(row(
            "two_holes.search_min_cd/2",
            best.edges_per_n,
            74.0,
            Relation::Below,
            format!("d={} c={:.5}", best.d, best.c),
        ));
    }

    // lower bound, two colours: 5n/2 - 15/2
    for n in [10i128, 100, 1000] {
        rows.push(exact_row(
            &format!("lower_bound.r2.n{n}"),
            lower_bound_formula(n as u64, 2),
            Rational::new(5 * n - 15, 2),
            Relation::Equal,
        ));
    }
    let slope = lower_bound_formula(1001, 2) - lower_bound_formula(1000, 2);
    rows.push(exact_row(
        "lower_bound.r2.slope",
        slope,
        Rational::new(5, 2),
        Relation::Equal,
    ));
    rows.push(exact_row(
        "lower_bound.r2.intercept",
        lower_bound_formula(0, 2),
        Rational::new(-15, 2),
        Relation::Equal,
    ));

    // multicolour bipartite construction
    for r in 2..=8u32 {
        let (computed, reference, detail, holds) = match multicolour_constants(r) {
            Ok(m) => (
                m.edges_per_n as f64,
                m.claimed_bound as f64,
                format!("c={} d={} dc/2^(r+2)={}", m.c, m.d, m.exponent_ratio),
                m.holds,
            ),
            Err(_) => (nan, nan, String::new(), false),
        };
        let mut rw = row(
            &format!("multicolour.r{r}.c^2d"),
            computed,
            reference,
            Relation::Below,
            detail,
        );
        rw.pass &= holds;
        rows.push(rw);
    }
    rows
}
