//! Experiment configuration files (JSON).
//!
//! ```json
//! {
//!   "experiment": "components",
//!   "model": "gnp", "n": 1000, "p": 0.01,
//!   "r": 3, "strategy": "greedy_balanced",
//!   "trials": 20, "seed": 7
//! }
//! ```

use anyhow::{anyhow, Result};
use pathramsey_core::components::Strategy;
use pathramsey_core::generators::RandomSpec;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    /// Largest monochromatic component of coloured `G(n, p)`.
    Components,
    /// Longest monochromatic path (greedy lower bound) of a coloured random graph.
    MonoPath,
    /// Fraction of pairing-model draws that are simple.
    SimpleFraction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelName {
    Gnp,
    Gnnp,
    Pairing,
}

/// The file as written; every field optional so that missing ones can be
/// reported by name.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub experiment: Option<ExperimentKind>,
    pub name: Option<String>,
    pub model: Option<ModelName>,
    pub n: Option<usize>,
    pub p: Option<f64>,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub strategy: Option<Strategy>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
}

/// A validated configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub name: String,
    pub model: ModelName,
    pub n: usize,
    pub p: Option<f64>,
    pub d: Option<usize>,
    pub r: usize,
    pub strategy: Strategy,
    pub trials: u64,
    pub seed: u64,
}

impl ExperimentConfig {
    /// The random-graph spec for one trial.
    pub fn spec(&self, seed: u64) -> RandomSpec {
        match self.model {
            ModelName::Gnp => RandomSpec::gnp(self.n, self.p.unwrap_or(0.0), seed),
            ModelName::Gnnp => RandomSpec::gnnp(self.n, self.p.unwrap_or(0.0), seed),
            ModelName::Pairing => RandomSpec::pairing(self.n, self.d.unwrap_or(0), seed),
        }
    }
}

/// 1-based line of the first occurrence of `"key"`, or of the closing
/// brace when the key is absent.
fn line_of(text: &str, key: &str) -> usize {
    let quoted = format!("\"{key}\"");
    let found = text.lines().position(|l| l.contains(&quoted));
    found.unwrap_or_else(|| text.lines().count().saturating_sub(1)) + 1
}

pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let raw: RawConfig =
        serde_json::from_str(text).map_err(|e| anyhow!("config line {}: {e}", e.line()))?;
    let err = |key: &str, msg: String| anyhow!("config line {}: {msg}", line_of(text, key));
    let need = |key: &str| err(key, format!("missing required field `{key}`"));

    let experiment = raw.experiment.ok_or_else(|| need("experiment"))?;
    let seed = raw.seed.ok_or_else(|| need("seed"))?;
    let trials = raw.trials.ok_or_else(|| need("trials"))?;
    if trials == 0 {
        return Err(err("trials", "trials must be positive".into()));
    }
    let n = raw.n.ok_or_else(|| need("n"))?;
    let model = raw.model.unwrap_or(match experiment {
        ExperimentKind::SimpleFraction => ModelName::Pairing,
        _ => ModelName::Gnp,
    });
    match (experiment, model) {
        (ExperimentKind::Components, ModelName::Gnp)
        | (ExperimentKind::MonoPath, _)
        | (ExperimentKind::SimpleFraction, ModelName::Pairing) => {}
        _ => {
            return Err(err(
                "model",
                format!("model {model:?} not supported for {experiment:?}"),
            ))
        }
    }
    match model {
        ModelName::Gnp | ModelName::Gnnp => {
            let p = raw.p.ok_or_else(|| need("p"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(err("p", format!("p = {p} outside [0, 1]")));
            }
        }
        ModelName::Pairing => {
            let d = raw.d.ok_or_else(|| need("d"))?;
            if d == 0 || (d * n) % 2 == 1 {
                return Err(err(
                    "d",
                    format!("pairing model needs d >= 1 and d*n even; got d={d}, n={n}"),
                ));
            }
        }
    }
    let r = match experiment {
        ExperimentKind::SimpleFraction => raw.r.unwrap_or(1),
        _ => raw.r.ok_or_else(|| need("r"))?,
    };
    if r == 0 {
        return Err(err("r", "r must be positive".into()));
    }
    let strategy = raw.strategy.unwrap_or(Strategy::UniformRandom);
    if strategy == Strategy::AffinePattern && !pathramsey_core::components::is_prime(r as u64 - 1) {
        return Err(err(
            "strategy",
            format!("affine_pattern needs r - 1 prime, got r = {r}"),
        ));
    }
    let name = raw.name.unwrap_or_else(|| {
        serde_json::to_value(experiment)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default()
    });
    if name.is_empty() || name.contains(['/', '\\']) {
        return Err(err("name", format!("invalid output name {name:?}")));
    }
    Ok(ExperimentConfig {
        experiment,
        name,
        model,
        n,
        p: raw.p,
        d: raw.d,
        r,
        strategy,
        trials,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_components_config() {
        let c = parse_config(
            r#"{"experiment": "components", "n": 50, "p": 0.2, "r": 2, "trials": 3, "seed": 1}"#,
        )
        .unwrap();
        assert_eq!(c.model, ModelName::Gnp);
        assert_eq!(c.name, "components");
    }

    #[test]
    fn missing_seed_is_an_error() {
        let text = "{\n  \"experiment\": \"components\",\n  \"n\": 50,\n  \"p\": 0.2,\n  \"r\": 2,\n  \"trials\": 3\n}\n";
        let e = parse_config(text).unwrap_err().to_string();
        assert!(e.contains("seed"), "{e}");
    }

    #[test]
    fn odd_pairing_points_rejected_with_line() {
        let text = "{\n  \"experiment\": \"simple_fraction\",\n  \"n\": 7,\n  \"d\": 3,\n  \"trials\": 3,\n  \"seed\": 2\n}";
        let e = parse_config(text).unwrap_err().to_string();
        assert!(e.contains("line 4") && e.contains("even"), "{e}");
    }

    #[test]
    fn syntax_errors_have_lines() {
        let e = parse_config("{\n \"n\": 5,\n \"bogus\": 1\n}")
            .unwrap_err()
            .to_string();
        assert!(e.contains("line 3"), "{e}");
    }
}
