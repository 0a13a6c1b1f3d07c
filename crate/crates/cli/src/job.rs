//! Job files: the JSON schema and its validation into core types.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use toricode::vanishing::{Domain, Region};
use toricode::{Budget, Error, FiniteField, RationalMap, Ring, ToricData};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionSpec>,
    /// Squarefree monomials generating `B`; absent means `B = ⟨1⟩`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irrelevant: Option<Vec<String>>,
    pub task: Task,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<i64>>,
    /// 1-based variable indices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionSpec>,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub k: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionSpec {
    Hirzebruch(u32),
    Wps(Vec<i64>),
    Product(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    ParamIdeal,
    AffineIdeal,
    CellIdeal,
    PointIdeal,
    ToricIdeal,
    Orbits,
    Code,
}

impl Task {
    pub fn is_ideal(self) -> bool {
        !matches!(self, Task::Orbits | Task::Code)
    }

    pub fn name(self) -> &'static str {
        match self {
            Task::ParamIdeal => "param_ideal",
            Task::AffineIdeal => "affine_ideal",
            Task::CellIdeal => "cell_ideal",
            Task::PointIdeal => "point_ideal",
            Task::ToricIdeal => "toric_ideal",
            Task::Orbits => "orbits",
            Task::Code => "code",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub s: usize,
    pub f: Vec<String>,
    pub g: Vec<String>,
    #[serde(default)]
    pub domain: DomainSpec,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainSpec {
    #[default]
    Affine,
    Torus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionSpec {
    Affine,
    Torus,
    Irrelevant,
    OutsideIrrelevant,
    Image,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PathSpec {
    Elimination,
    Cellular,
    Both,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_pairs: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_points: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_messages: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

/// Expected results of a golden job.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    /// Compared as ideals, not as strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_count: Option<usize>,
    /// Compared as sets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub standard_monomials: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_orbit_count: Option<usize>,
    /// Compared orbit by orbit, up to the choice of representative.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_points: Option<Vec<Vec<i64>>>,
    /// `[N, K, δ]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<[usize; 3]>,
}

pub fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

impl Job {
    pub fn from_json(src: &str) -> Result<Job, CliError> {
        let job: Job = serde_json::from_str(src).map_err(|e| schema(e.to_string()))?;
        if job.schema_version != SCHEMA_VERSION {
            return Err(schema(format!(
                "schema_version: expected {SCHEMA_VERSION}, found {}",
                job.schema_version
            )));
        }
        Ok(job)
    }

    pub fn field(&self) -> Result<Arc<FiniteField>, CliError> {
        FiniteField::new(self.field.p, self.field.k)
            .map(Arc::new)
            .map_err(|e| schema(format!("field: {e}")))
    }

    pub fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_pairs: self.options.max_pairs.unwrap_or(d.max_pairs),
            max_degree: self.options.max_degree.unwrap_or(d.max_degree),
        }
    }

    pub fn max_points(&self) -> u64 {
        self.options
            .max_points
            .unwrap_or(toricode::vanishing::DEFAULT_MAX_POINTS)
    }

    pub fn max_messages(&self) -> u64 {
        self.options
            .max_messages
            .unwrap_or(toricode::codes::DEFAULT_MAX_MESSAGES)
    }

    pub fn toric(&self, field: &Arc<FiniteField>) -> Result<ToricData, CliError> {
        let field = field.clone();
        let toric = match (&self.beta, &self.construction) {
            (Some(_), Some(_)) => {
                return Err(schema("beta, construction: give exactly one"));
            }
            (None, None) => return Err(schema("beta: required (or construction)")),
            (Some(beta), None) => {
                let b: Vec<&str> = match &self.irrelevant {
                    Some(list) => list.iter().map(String::as_str).collect(),
                    None => vec!["1"],
                };
                ToricData::parse(field, beta.clone(), &b)
                    .map_err(|e| schema(format!("beta: {e}")))?
            }
            (None, Some(c)) => {
                if self.irrelevant.is_some() {
                    return Err(schema("irrelevant: not allowed with a named construction"));
                }
                match c {
                    ConstructionSpec::Hirzebruch(ell) => ToricData::hirzebruch(field, *ell),
                    ConstructionSpec::Wps(w) => ToricData::weighted_projective(field, w),
                    ConstructionSpec::Product(dims) => ToricData::product_projective(field, dims),
                }
                .map_err(|e| schema(format!("construction: {e}")))?
            }
        };
        Ok(toric)
    }

    pub fn map(&self, field: &Arc<FiniteField>, r: usize) -> Result<Option<RationalMap>, CliError> {
        let Some(spec) = &self.map else {
            return Ok(None);
        };
        if spec.f.len() != r || spec.g.len() != r {
            return Err(schema(format!(
                "map: f and g need {r} entries each (found {} and {})",
                spec.f.len(),
                spec.g.len()
            )));
        }
        let f: Vec<&str> = spec.f.iter().map(String::as_str).collect();
        let g: Vec<&str> = spec.g.iter().map(String::as_str).collect();
        let domain = match spec.domain {
            DomainSpec::Affine => Domain::Affine,
            DomainSpec::Torus => Domain::Torus,
        };
        RationalMap::parse(field.clone(), spec.s, &f, &g, domain)
            .map(Some)
            .map_err(|e| schema(format!("map: {e}")))
    }

    pub fn require_map(&self, map: Option<RationalMap>) -> Result<RationalMap, CliError> {
        map.ok_or_else(|| schema(format!("map: required by task {}", self.task.name())))
    }

    pub fn alpha(&self, ring: &Ring) -> Result<Option<Vec<i64>>, CliError> {
        match &self.alpha {
            Some(a) if a.len() != ring.grading_rank() => Err(schema(format!(
                "alpha: expected {} entries, found {}",
                ring.grading_rank(),
                a.len()
            ))),
            other => Ok(other.clone()),
        }
    }

    /// Zero-based support indices.
    pub fn support(&self, r: usize) -> Result<Vec<usize>, CliError> {
        let s = self
            .support
            .as_ref()
            .ok_or_else(|| schema("support: required by task cell_ideal"))?;
        if s.is_empty() || s.iter().any(|&i| i == 0 || i > r) {
            return Err(schema(format!("support: indices must lie in 1..={r}")));
        }
        Ok(s.iter().map(|i| i - 1).collect())
    }

    pub fn region(&self, has_map: bool, has_b: bool) -> Result<Region, CliError> {
        let spec = self.region.unwrap_or(if has_map {
            RegionSpec::Image
        } else if has_b {
            RegionSpec::OutsideIrrelevant
        } else {
            RegionSpec::Affine
        });
        Ok(match spec {
            RegionSpec::Affine => Region::Affine,
            RegionSpec::Torus => Region::Torus,
            RegionSpec::Irrelevant => Region::Irrelevant,
            RegionSpec::OutsideIrrelevant => Region::OutsideIrrelevant,
            RegionSpec::Image => {
                return Err(schema("region: `image` is resolved by the caller"));
            }
        })
    }
}

/// Integer coordinates to raw field values: reduced mod `p` for prime
/// fields, element indices in enumeration order otherwise.
pub fn raw_point(
    field: &FiniteField,
    coords: &[i64],
    r: usize,
    what: &str,
) -> Result<Vec<u32>, CliError> {
    if coords.len() != r {
        return Err(schema(format!(
            "{what}: expected {r} coordinates, found {}",
            coords.len()
        )));
    }
    coords
        .iter()
        .map(|&v| {
            if field.degree() == 1 {
                Ok(field.from_int(v).raw())
            } else if (0..field.order() as i64).contains(&v) {
                Ok(v as u32)
            } else {
                Err(schema(format!(
                    "{what}: {v} is not an element index of GF({})",
                    field.order()
                )))
            }
        })
        .collect()
}

pub fn is_budget_error(e: &Error) -> bool {
    matches!(
        e,
        Error::ResourceBudgetExceeded(_)
            | Error::BudgetExceeded(_)
            | Error::TooManyVariables { .. }
    )
}
