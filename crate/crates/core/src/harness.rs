//! Seeded randomized checks of the convex-geometric inequalities and of
//! value-set superadditivity.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded_algebras::{componentwise_product, AlgebraSpec};
use crate::polyhedra::{check_inequalities, InequalityMode, InequalityReport, RationalPolytope};
use crate::random::{full_dimensional_polytope, laurent_polys, trial_rng, DEFAULT_BOX, DEFAULT_VERTICES};
use crate::valuations::{LaurentSubspace, TermOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Harness {
    Af,
    Bm,
    Hodge2d,
    Isoperimetric,
    Superadditivity,
}

impl fmt::Display for Harness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Harness::Af => "af",
            Harness::Bm => "bm",
            Harness::Hodge2d => "hodge2d",
            Harness::Isoperimetric => "isoperimetric",
            Harness::Superadditivity => "superadditivity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    pub harness: Harness,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub vertices: usize,
    pub bound: i64,
    /// Truncation for the superadditivity harness.
    pub truncation: usize,
}

impl HarnessConfig {
    pub fn new(harness: Harness, dim: usize, trials: usize, seed: u64) -> HarnessConfig {
        HarnessConfig { harness, dim, trials, seed, vertices: DEFAULT_VERTICES, bound: DEFAULT_BOX, truncation: 4 }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Inequality { trial: usize, bodies: Vec<RationalPolytope>, report: InequalityReport },
    Superadditivity { trial: usize, a: LaurentSubspace, b: LaurentSubspace, missing: Vec<(usize, Vec<i64>)> },
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    /// Replaying with this configuration reproduces the run exactly.
    pub config: HarnessConfig,
    pub checked: usize,
    /// Trials where the inequality is an equality.
    pub equalities: usize,
    pub violations: Vec<Witness>,
    pub passed: bool,
}

fn inequality_trial(cfg: &HarnessConfig, trial: usize) -> Result<(Vec<RationalPolytope>, InequalityReport)> {
    let mut rng = trial_rng(cfg.seed, trial as u64);
    let n = cfg.dim;
    let (count, mode) = match cfg.harness {
        Harness::Bm => (2, InequalityMode::Bm),
        Harness::Hodge2d => (2, InequalityMode::Hodge2d),
        Harness::Af => (n, InequalityMode::Af),
        Harness::Isoperimetric => (2, InequalityMode::AfCorollary { partition: vec![1, n - 1] }),
        Harness::Superadditivity => unreachable!("handled separately"),
    };
    let bodies: Vec<RationalPolytope> =
        (0..count).map(|_| full_dimensional_polytope(&mut rng, n, cfg.vertices, cfg.bound)).collect();
    let report = check_inequalities(&bodies, &mode)?;
    Ok((bodies, report))
}

fn superadditivity_trial(cfg: &HarnessConfig, trial: usize) -> Result<Option<Witness>> {
    let mut rng = trial_rng(cfg.seed, trial as u64);
    let n = cfg.dim;
    let order = TermOrder::lex(n);
    let mut space = || -> Result<LaurentSubspace> {
        let dim = rand::Rng::gen_range(&mut rng, 1..=3);
        let polys = laurent_polys(&mut rng, n, dim, 3, 2);
        LaurentSubspace::spanned_by(n, &polys, &order)
    };
    let (a, b) = (space()?, space()?);
    let alg_a = AlgebraSpec::new(a.clone(), order.clone(), cfg.truncation)?;
    let alg_b = AlgebraSpec::new(b.clone(), order.clone(), cfg.truncation)?;
    let (_, report) = componentwise_product(&alg_a, &alg_b)?;
    if report.holds {
        return Ok(None);
    }
    let missing = report.levels.iter().flat_map(|l| l.missing.iter().map(move |x| (l.k, x.clone()))).collect();
    Ok(Some(Witness::Superadditivity { trial, a, b, missing }))
}

pub fn run_harness(cfg: &HarnessConfig) -> Result<HarnessReport> {
    if cfg.trials == 0 {
        return Err(Error::Input("trials must be at least 1".into()));
    }
    let min_dim = match cfg.harness {
        Harness::Af | Harness::Isoperimetric => 2,
        _ => 1,
    };
    if cfg.dim < min_dim || (cfg.harness == Harness::Hodge2d && cfg.dim != 2) {
        return Err(Error::Input(format!("harness {} does not run in dimension {}", cfg.harness, cfg.dim)));
    }
    crate::limits::check_dim(cfg.dim)?;
    let mut violations = Vec::new();
    let mut equalities = 0;
    for trial in 0..cfg.trials {
        if cfg.harness == Harness::Superadditivity {
            violations.extend(superadditivity_trial(cfg, trial)?);
            continue;
        }
        let (bodies, report) = inequality_trial(cfg, trial)?;
        equalities += report.equality as usize;
        if !report.holds {
            violations.push(Witness::Inequality { trial, bodies, report });
        }
    }
    Ok(HarnessReport { config: cfg.clone(), checked: cfg.trials, equalities, passed: violations.is_empty(), violations })
}
