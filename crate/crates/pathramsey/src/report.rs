//! JSON renderings of certificates, colourings and the constants table.

use pathramsey_core::certificates::{Certificate, Witness};
use pathramsey_core::constants::{ConstantRow, Relation};
use pathramsey_core::{Colouring, Graph};
use serde::Serialize;
use serde_json::{json, Value};

/// A colouring as an explicit edge-to-colour list.
#[derive(Debug, Serialize)]
pub struct ColouringJson {
    pub r: usize,
    /// `[u, v, colour]` triples in canonical edge order.
    pub edges: Vec<(usize, usize, usize)>,
}

impl ColouringJson {
    pub fn new(g: &Graph, col: &Colouring) -> Self {
        ColouringJson {
            r: col.colours(),
            edges: g
                .edges()
                .into_iter()
                .zip(col.assignment())
                .map(|((u, v), &c)| (u, v, c))
                .collect(),
        }
    }
}

/// `{kind, verdict, witness, params, seed, budget_spent}`; colouring
/// witnesses are rendered against `g` when given.
pub fn certificate_json(cert: &Certificate, g: Option<&Graph>) -> Value {
    let witness = match (&cert.witness, g) {
        (Some(Witness::Colouring(col)), Some(g)) => {
            json!({ "colouring": ColouringJson::new(g, col) })
        }
        (w, _) => serde_json::to_value(w).expect("plain data"),
    };
    json!({
        "kind": cert.kind,
        "verdict": cert.verdict,
        "witness": witness,
        "params": cert.params,
        "seed": cert.seed,
        "budget": cert.budget,
        "budget_spent": cert.budget_spent,
    })
}

fn relation_symbol(rel: &Relation) -> String {
    match rel {
        Relation::Below => "<".into(),
        Relation::Equal => "==".into(),
        Relation::Near { tolerance } => format!("~{tolerance}"),
    }
}

/// Plain-text table, one row per line.
pub fn constants_text(rows: &[ConstantRow]) -> String {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:<width$}  {:>14.8}  {:>4}  {:>12.6}  {}  {}\n",
            r.name,
            r.computed,
            relation_symbol(&r.relation),
            r.reference,
            if r.pass { "pass" } else { "FAIL" },
            r.detail,
        ));
    }
    out
}

pub fn constants_json(rows: &[ConstantRow]) -> Value {
    json!({
        "all_pass": rows.iter().all(|r| r.pass),
        "rows": rows,
    })
}
