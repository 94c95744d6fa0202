use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;

/// How a semigroup is given and graded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Generators in `Z^n x Z`, graded by the last coordinate.
    Nonneg,
    /// Generators in `Z^n` with no level structure.
    Plain,
    /// Explicit level sets up to a truncation.
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Generators(Vec<Vec<i64>>),
    /// Full points `(x, k)` keyed by level `k`, each level sorted.
    Table { levels: BTreeMap<i64, Vec<Vec<i64>>>, truncation: i64 },
}

/// A finitely generated semigroup, or a truncated level table.
///
/// `ambient_dim` is the length of every point, so in the graded modes it
/// counts the level coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSpec {
    mode: Mode,
    ambient_dim: usize,
    source: Source,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ambient_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    levels: Option<BTreeMap<i64, Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    truncation: Option<i64>,
}

impl Serialize for SemigroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let j = match &self.source {
            Source::Generators(g) => SpecJson {
                mode: self.mode,
                ambient_dim: Some(self.ambient_dim),
                generators: Some(g.clone()),
                levels: None,
                truncation: None,
            },
            Source::Table { levels, truncation } => SpecJson {
                mode: self.mode,
                ambient_dim: Some(self.ambient_dim),
                generators: None,
                levels: Some(
                    levels
                        .iter()
                        .map(|(k, pts)| (*k, pts.iter().map(|p| p[..p.len() - 1].to_vec()).collect()))
                        .collect(),
                ),
                truncation: Some(*truncation),
            },
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SemigroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SpecJson::deserialize(d)?;
        let built = match j.mode {
            Mode::Table => {
                let levels = j.levels.ok_or_else(|| serde::de::Error::missing_field("levels"))?;
                let truncation = j.truncation.ok_or_else(|| serde::de::Error::missing_field("truncation"))?;
                SemigroupSpec::table(j.ambient_dim, levels, truncation)
            }
            mode => {
                let gens = j.generators.ok_or_else(|| serde::de::Error::missing_field("generators"))?;
                if let Some(n) = j.ambient_dim {
                    if let Some(g) = gens.iter().find(|g| g.len() != n) {
                        return Err(serde::de::Error::custom(Error::DimMismatch { expected: n, got: g.len() }));
                    }
                }
                if mode == Mode::Nonneg {
                    SemigroupSpec::nonneg(gens)
                } else {
                    SemigroupSpec::plain(gens)
                }
            }
        };
        built.map_err(serde::de::Error::custom)
    }
}

fn check_generators(gens: &[Vec<i64>]) -> Result<(usize, Vec<Vec<i64>>)> {
    let Some(first) = gens.first() else {
        return Err(Error::EmptyGenerators);
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::Input("generators must have at least one coordinate".into()));
    }
    limits::check_dim(n)?;
    if let Some(g) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::DimMismatch { expected: n, got: g.len() });
    }
    let set: BTreeSet<Vec<i64>> = gens.iter().cloned().collect();
    Ok((n, set.into_iter().collect()))
}

impl SemigroupSpec {
    /// Non-negative semigroup: the last coordinate is the level.
    pub fn nonneg(generators: Vec<Vec<i64>>) -> Result<SemigroupSpec> {
        let (n, gens) = check_generators(&generators)?;
        if let Some(level) = gens.iter().map(|g| g[n - 1]).find(|&l| l < 0) {
            return Err(Error::NegativeLevel { level });
        }
        if gens.iter().all(|g| g[n - 1] == 0) {
            return Err(Error::NotNonNegative);
        }
        Ok(SemigroupSpec { mode: Mode::Nonneg, ambient_dim: n, source: Source::Generators(gens) })
    }

    /// Semigroup in `Z^n` without a level structure.
    pub fn plain(generators: Vec<Vec<i64>>) -> Result<SemigroupSpec> {
        let (n, gens) = check_generators(&generators)?;
        Ok(SemigroupSpec { mode: Mode::Plain, ambient_dim: n, source: Source::Generators(gens) })
    }

    /// Explicit level table. Points are given without their level coordinate.
    pub fn table(
        ambient_dim: Option<usize>,
        levels: BTreeMap<i64, Vec<Vec<i64>>>,
        truncation: i64,
    ) -> Result<SemigroupSpec> {
        if truncation < 0 {
            return Err(Error::Input("truncation must be non-negative".into()));
        }
        let width = match ambient_dim {
            Some(n) if n >= 1 => n - 1,
            Some(_) => return Err(Error::Input("ambient_dim must be at least 1".into())),
            None => levels
                .values()
                .flatten()
                .map(|p| p.len())
                .next()
                .ok_or_else(|| Error::Empty("level table has no points".into()))?,
        };
        limits::check_dim(width + 1)?;
        let mut table = BTreeMap::new();
        for (&k, pts) in &levels {
            if k < 0 {
                return Err(Error::NegativeLevel { level: k });
            }
            if k > truncation {
                return Err(Error::BeyondTruncation { requested: k as usize, truncation: truncation as usize });
            }
            let mut set = BTreeSet::new();
            for p in pts {
                if p.len() != width {
                    return Err(Error::DimMismatch { expected: width, got: p.len() });
                }
                let mut full = p.clone();
                full.push(k);
                set.insert(full);
            }
            if !set.is_empty() {
                table.insert(k, set.into_iter().collect());
            }
        }
        if table.keys().all(|&k| k == 0) {
            return Err(Error::NotNonNegative);
        }
        Ok(SemigroupSpec { mode: Mode::Table, ambient_dim: width + 1, source: Source::Table { levels: table, truncation } })
    }

    /// Same as [`SemigroupSpec::table`] with full points `(x, k)` already carrying their level.
    pub(crate) fn table_from_full(ambient_dim: usize, levels: Vec<Vec<Vec<i64>>>) -> Result<SemigroupSpec> {
        let truncation = levels.len() as i64 - 1;
        let map = levels
            .into_iter()
            .enumerate()
            .map(|(k, pts)| (k as i64, pts.into_iter().map(|mut p| {
                p.pop();
                p
            }).collect()))
            .collect();
        SemigroupSpec::table(Some(ambient_dim), map, truncation)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn is_graded(&self) -> bool {
        self.mode != Mode::Plain
    }

    /// Generators, or every table point for a level table (a truncated view).
    pub fn generators(&self) -> Vec<Vec<i64>> {
        match &self.source {
            Source::Generators(g) => g.clone(),
            Source::Table { levels, .. } => levels.values().flatten().cloned().collect(),
        }
    }

    pub fn nonzero_generators(&self) -> Vec<Vec<i64>> {
        self.generators().into_iter().filter(|g| g.iter().any(|&x| x != 0)).collect()
    }

    pub fn truncation(&self) -> Option<i64> {
        match &self.source {
            Source::Table { truncation, .. } => Some(*truncation),
            Source::Generators(_) => None,
        }
    }

    pub(crate) fn require_generators(&self) -> Result<&[Vec<i64>]> {
        match &self.source {
            Source::Generators(g) => Ok(g),
            Source::Table { .. } => Err(Error::NotFinitelyGenerated),
        }
    }

    pub(crate) fn require_graded(&self) -> Result<()> {
        if self.is_graded() {
            Ok(())
        } else {
            Err(Error::NotNonNegative)
        }
    }

    /// Level of a point (its last coordinate) in the graded modes.
    pub fn level(&self, x: &[i64]) -> i64 {
        x[self.ambient_dim - 1]
    }
}
