//! Run configuration: TOML file, then flags on top.
//!
//! ```toml
//! alpha = "1"
//! beta = "2"
//! omega = "1"
//! suites = "commutator,painleve"
//! random = 5
//! seed = 42
//! out = "report.json"
//!
//! [tolerances]
//! angular = 1e-3
//! radial = 1e-4
//! combined = 2e-3
//! ```

use std::path::PathBuf;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::rational::parse_rational;
use crate::exact::Rational;
use crate::model::SystemParams;
use crate::verify::{parse_suites, random_instances, Faults, Suite, SuiteOptions};

use super::GlobalArgs;

/// A TOML number or string for a rational.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    fn parse(&self) -> Result<Rational> {
        match self {
            RationalText::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalText::Text(t) => parse_rational(t),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    pub angular: Option<f64>,
    pub radial: Option<f64>,
    pub combined: Option<f64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<RationalText>,
    pub beta: Option<RationalText>,
    pub omega: Option<RationalText>,
    pub suites: Option<String>,
    pub random: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl FileConfig {
    pub fn load(path: &PathBuf) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub params: SystemParams,
    pub suites: Vec<Suite>,
    pub random: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub options: SuiteOptions,
}

fn pick(flag: &Option<String>, file: &Option<RationalText>, default: i64) -> Result<Rational> {
    match (flag, file) {
        (Some(t), _) => parse_rational(t),
        (None, Some(f)) => f.parse(),
        (None, None) => Ok(Rational::from_integer(default.into())),
    }
}

fn fault(text: &Option<String>) -> Result<Option<Rational>> {
    text.as_deref().map(parse_rational).transpose()
}

impl RunConfig {
    /// Defaults `(1, 2, 1)`, all suites, no random instances, seed 0.
    pub fn resolve(args: &GlobalArgs) -> Result<Self> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let alpha = pick(&args.alpha, &file.alpha, 1)?;
        let beta = pick(&args.beta, &file.beta, 2)?;
        let omega = pick(&args.omega, &file.omega, 1)?;
        let params = SystemParams::new(alpha, beta, omega)?;
        let suites_text = args.suites.clone().or(file.suites).unwrap_or_else(|| "all".into());
        let mut options = SuiteOptions::default();
        if let Some(t) = file.tolerances.angular {
            options.numeric.tol_angular = t;
        }
        if let Some(t) = file.tolerances.radial {
            options.numeric.tol_radial = t;
        }
        if let Some(t) = file.tolerances.combined {
            options.numeric.tol_combined = t;
        }
        options.faults = Faults {
            c12_offset: fault(&args.fault_c12_offset)?,
            k_quarter: fault(&args.fault_k_quarter)?,
            y_scale: fault(&args.fault_y_scale)?,
        };
        Ok(RunConfig {
            params,
            suites: parse_suites(&suites_text)?,
            random: args.random.or(file.random).unwrap_or(0),
            seed: args.seed.or(file.seed).unwrap_or(0),
            out: args.out.clone().or(file.out),
            options,
        })
    }

    /// The fixed instance followed by the random ones.
    pub fn instances(&self) -> Vec<(SystemParams, String)> {
        std::iter::once((self.params.clone(), "fixed".to_string()))
            .chain(
                random_instances(self.seed, self.random)
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| (p, format!("random #{i} (seed {})", self.seed))),
            )
            .collect()
    }

    pub fn echo(&self, suites: &[Suite]) -> Value {
        json!({
            "params": self.params,
            "suites": suites,
            "random": self.random,
            "seed": self.seed,
            "options": self.options,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn args(alpha: &str, beta: &str) -> GlobalArgs {
        GlobalArgs {
            alpha: Some(alpha.into()),
            beta: Some(beta.into()),
            ..GlobalArgs::default()
        }
    }

    #[test]
    fn pole_location_from_flags() {
        let cfg = RunConfig::resolve(&args("3/2", "5/2")).unwrap();
        assert_eq!(cfg.params.b, int(4));
        assert_eq!(RunConfig::resolve(&args("1", "2")).unwrap().params.b, int(3));
        assert!(RunConfig::resolve(&args("1", "1")).is_err());
        assert!(RunConfig::resolve(&args("1/x", "2")).is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        std::fs::write(&path, "alpha = \"3/2\"\nbeta = 4\nseed = 9\nsuites = \"eigen\"\n[tolerances]\nradial = 1e-5\n").unwrap();
        let mut a = GlobalArgs {
            config: Some(path.clone()),
            ..GlobalArgs::default()
        };
        let cfg = RunConfig::resolve(&a).unwrap();
        assert_eq!(cfg.params.beta, int(4));
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.suites, vec![Suite::Eigen]);
        assert_eq!(cfg.options.numeric.tol_radial, 1e-5);
        a.beta = Some("5".into());
        a.suites = Some("all".into());
        let cfg = RunConfig::resolve(&a).unwrap();
        assert_eq!(cfg.params.beta, int(5));
        assert_eq!(cfg.suites.len(), 6);
    }
}
