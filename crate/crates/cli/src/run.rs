//! Executes a validated job and renders the canonical output document.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use toricode::codes::{graded_vanishing_space, EvaluationCode};
use toricode::vanishing::{
    affine_vanishing_ideal, cell_ideal, colon_is_saturation, orbit_classes,
    parameterized_vanishing_ideal, point_orbit_ideal, region_points, torus_orbit_representatives,
    vanishing_failures, Path, Region,
};
use toricode::{
    Error, FiniteField, Ideal, Monomial, OrbitPoint, Polynomial, RationalMap, Ring, Support,
    ToricData,
};

use crate::job::{raw_point, schema, Job, PathSpec, RegionSpec, Task, SCHEMA_VERSION};
use crate::CliError;

const DEFAULT_SAMPLES: usize = 100;

/// Command-line settings that take precedence over the job file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub max_pairs: Option<u64>,
    pub max_points: Option<u64>,
    pub path: Option<PathSpec>,
    pub seed: Option<u64>,
    pub task: Option<Task>,
    pub timing: bool,
}

impl Overrides {
    pub fn apply(&self, job: &Job) -> Job {
        let mut job = job.clone();
        if let Some(v) = self.max_pairs {
            job.options.max_pairs = Some(v);
        }
        if let Some(v) = self.max_points {
            job.options.max_points = Some(v);
        }
        if let Some(v) = self.path {
            job.options.path = Some(v);
        }
        if let Some(v) = self.seed {
            job.options.seed = Some(v);
        }
        if let Some(t) = self.task.filter(|&t| t != job.task) {
            job.task = t;
            job.expect = None;
        }
        job
    }
}

/// The output document and any disagreements with the job's `expect` block.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: Value,
    pub mismatches: Vec<String>,
}

impl Outcome {
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.output).expect("serializable");
        s.push('\n');
        s
    }
}

struct Context {
    job: Job,
    field: Arc<FiniteField>,
    toric: ToricData,
    ring: Arc<Ring>,
    map: Option<RationalMap>,
    has_b: bool,
}

#[derive(Default)]
struct Computed {
    ideal: Option<Ideal>,
    generators: Vec<Polynomial>,
    standard: Option<Vec<Monomial>>,
    orbits: Option<Vec<OrbitPoint>>,
    torus_orbits: Option<Vec<Vec<u32>>>,
    code: Option<EvaluationCode>,
    points: Vec<Vec<u32>>,
    checks: Map<String, Value>,
}

pub fn execute(job: &Job, overrides: &Overrides) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let job = overrides.apply(job);
    if job.schema_version != SCHEMA_VERSION {
        return Err(schema(format!(
            "schema_version: expected {SCHEMA_VERSION}, found {}",
            job.schema_version
        )));
    }
    let field = job.field()?;
    let toric = job.toric(&field)?;
    let ring = toric.ring().clone();
    let map = job.map(&field, ring.nvars())?;
    let has_b = !toric.irrelevant_monomials().iter().any(|m| m.is_one());
    let cx = Context {
        job,
        field,
        toric,
        ring,
        map,
        has_b,
    };

    let mut out = match cx.job.task {
        Task::Orbits => orbits_task(&cx)?,
        Task::Code => code_task(&cx)?,
        _ => ideal_task(&cx)?,
    };
    if let Some(ideal) = &out.ideal {
        let sampled = soundness(&cx, &out.generators, &out.points);
        out.checks.insert("soundness".into(), sampled);
        if cx.job.task != Task::Code {
            out.checks
                .insert("homogeneous".into(), json!(ideal.is_homogeneous()?));
        }
    }
    let mismatches = compare(&cx, &out)?;

    let mut doc = Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert(
        "job".into(),
        serde_json::to_value(&cx.job).expect("serializable"),
    );
    if let Some(ideal) = &out.ideal {
        let mut section = Map::new();
        section.insert("generators".into(), json!(sorted_strings(&out.generators)));
        section.insert("groebner_basis".into(), json!(ideal.canonical_strings()?));
        if let Some(std) = &out.standard {
            section.insert(
                "standard_monomials".into(),
                json!(monomial_strings(&cx.ring, std)),
            );
        }
        doc.insert("ideal".into(), Value::Object(section));
    }
    if let Some(orbits) = &out.orbits {
        let mut section = Map::new();
        section.insert("count".into(), json!(orbits.len()));
        section.insert(
            "representatives".into(),
            json!(orbits.iter().map(|o| o.raw()).collect::<Vec<_>>()),
        );
        if let Some(torus) = &out.torus_orbits {
            section.insert(
                "torus_orbits".into(),
                json!({ "count": torus.len(), "representatives": torus }),
            );
        }
        doc.insert("orbits".into(), Value::Object(section));
    }
    if let Some(code) = &out.code {
        let p = code.params();
        doc.insert(
            "code".into(),
            json!({
                "n": p.n,
                "k": p.k,
                "delta": p.delta,
                "params": p.to_string(),
                "basis": monomial_strings(&cx.ring, code.basis()),
            }),
        );
    }
    doc.insert("checks".into(), Value::Object(out.checks));
    if !mismatches.is_empty() {
        doc.insert("mismatches".into(), json!(mismatches));
    }
    if overrides.timing {
        doc.insert(
            "timing_ms".into(),
            json!(start.elapsed().as_millis() as u64),
        );
    }
    Ok(Outcome {
        output: Value::Object(doc),
        mismatches,
    })
}

fn paths(spec: Option<PathSpec>) -> Vec<Path> {
    match spec.unwrap_or(PathSpec::Cellular) {
        PathSpec::Elimination => vec![Path::Elimination],
        PathSpec::Cellular => vec![Path::Cellular],
        PathSpec::Both => vec![Path::Cellular, Path::Elimination],
    }
}

/// `I(A^r_G(F_q))` along the requested routes; with both, their agreement
/// is recorded as a check.
fn affine_ideal(cx: &Context, checks: &mut Map<String, Value>) -> Result<Ideal, CliError> {
    let budget = cx.job.budget();
    let mut results = Vec::new();
    for path in paths(cx.job.options.path) {
        results.push(affine_vanishing_ideal(&cx.ring, path, budget)?);
    }
    if results.len() == 2 {
        checks.insert(
            "path_equivalence".into(),
            json!(results[0].equals(&results[1])?),
        );
    }
    Ok(results.swap_remove(0))
}

fn minimal_or_reduced(ideal: &Ideal) -> Result<Vec<Polynomial>, CliError> {
    match ideal.minimal_generators() {
        Ok(g) => Ok(g),
        Err(Error::NonHomogeneousIdeal) => Ok(ideal.reduced_basis()?.to_vec()),
        Err(e) => Err(e.into()),
    }
}

fn ideal_task(cx: &Context) -> Result<Computed, CliError> {
    let budget = cx.job.budget();
    let max_points = cx.job.max_points();
    let mut out = Computed::default();
    let ideal = match cx.job.task {
        Task::ParamIdeal => {
            let map = cx.job.require_map(cx.map.clone())?;
            out.points = map.image(max_points)?;
            parameterized_vanishing_ideal(&cx.ring, &map, budget)?
        }
        Task::AffineIdeal => {
            out.points = region_points(&cx.toric, &Region::Affine, max_points)?;
            affine_ideal(cx, &mut out.checks)?
        }
        Task::ToricIdeal => {
            let base = match &cx.map {
                Some(map) => {
                    out.points = map
                        .image(max_points)?
                        .into_iter()
                        .filter(|p| !cx.toric.in_irrelevant_locus(p))
                        .collect();
                    parameterized_vanishing_ideal(&cx.ring, map, budget)?
                }
                None => {
                    out.points = region_points(&cx.toric, &Region::OutsideIrrelevant, max_points)?;
                    affine_ideal(cx, &mut out.checks)?
                }
            };
            let b = cx.toric.irrelevant_ideal();
            let colon = base.colon(&b)?;
            out.checks.insert(
                "colon_is_saturation".into(),
                json!(colon_is_saturation(&base, &colon, &b)?),
            );
            colon
        }
        Task::CellIdeal => {
            let eps = Support::new(cx.job.support(cx.ring.nvars())?);
            out.points = region_points(&cx.toric, &Region::Affine, max_points)?
                .into_iter()
                .filter(|p| (0..p.len()).all(|i| (p[i] != 0) == eps.contains(i)))
                .collect();
            cell_ideal(&cx.ring, &eps, budget)?
        }
        Task::PointIdeal => {
            let coords = cx
                .job
                .point
                .as_ref()
                .ok_or_else(|| schema("point: required by task point_ideal"))?;
            let raw = raw_point(&cx.field, coords, cx.ring.nvars(), "point")?;
            let elems = raw
                .iter()
                .map(|&v| cx.field.element(v))
                .collect::<toricode::Result<Vec<_>>>()?;
            out.points = vec![raw];
            point_orbit_ideal(&cx.ring, &elems, budget)?
        }
        Task::Orbits | Task::Code => unreachable!("not an ideal task"),
    };
    if let Some(alpha) = cx.job.alpha(&cx.ring)? {
        out.standard = Some(ideal.quotient_graded_basis(&alpha)?);
    }
    out.generators = minimal_or_reduced(&ideal)?;
    out.ideal = Some(ideal);
    Ok(out)
}

fn region_of(cx: &Context) -> Result<Region, CliError> {
    let wants_image =
        cx.job.region == Some(RegionSpec::Image) || (cx.job.region.is_none() && cx.map.is_some());
    if wants_image {
        let map = cx.job.require_map(cx.map.clone())?;
        return Ok(Region::Image(map));
    }
    cx.job.region(false, cx.has_b)
}

fn explicit_points(cx: &Context) -> Result<Option<Vec<Vec<u32>>>, CliError> {
    let Some(list) = &cx.job.points else {
        return Ok(None);
    };
    let r = cx.ring.nvars();
    list.iter()
        .enumerate()
        .map(|(i, p)| raw_point(&cx.field, p, r, &format!("points[{i}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn orbits_task(cx: &Context) -> Result<Computed, CliError> {
    let points = match explicit_points(cx)? {
        Some(p) => region_points(&cx.toric, &Region::Points(p), cx.job.max_points())?,
        None => region_points(&cx.toric, &region_of(cx)?, cx.job.max_points())?,
    };
    let orbits = orbit_classes(&cx.field, cx.toric.beta(), &points);
    let torus = torus_orbit_representatives(&points);
    Ok(Computed {
        orbits: Some(orbits),
        torus_orbits: Some(torus),
        ..Computed::default()
    })
}

/// The vanishing ideal whose standard monomials index the code's rows.
fn code_ideal(
    cx: &Context,
    region: &Region,
    checks: &mut Map<String, Value>,
) -> Result<Option<Ideal>, CliError> {
    let budget = cx.job.budget();
    Ok(match region {
        Region::Image(map) => Some(parameterized_vanishing_ideal(&cx.ring, map, budget)?),
        Region::Affine => Some(affine_ideal(cx, checks)?),
        Region::OutsideIrrelevant => {
            let base = affine_ideal(cx, checks)?;
            Some(base.colon(&cx.toric.irrelevant_ideal())?)
        }
        _ => None,
    })
}

fn code_task(cx: &Context) -> Result<Computed, CliError> {
    let alpha = cx
        .job
        .alpha(&cx.ring)?
        .ok_or_else(|| schema("alpha: required by task code"))?;
    let region = region_of(cx)?;
    let mut out = Computed::default();
    let points = match explicit_points(cx)? {
        Some(p) => p,
        None => {
            let all = region_points(&cx.toric, &region, cx.job.max_points())?;
            let orbits = orbit_classes(&cx.field, cx.toric.beta(), &all);
            let reps = orbits.iter().map(|o| o.raw()).collect();
            out.orbits = Some(orbits);
            reps
        }
    };
    let ideal = code_ideal(cx, &region, &mut out.checks)?;
    let code = EvaluationCode::new(
        &cx.ring,
        &points,
        &alpha,
        ideal.as_ref(),
        cx.job.max_messages(),
    )?;
    let full = cx.ring.graded_monomial_basis(&alpha)?.len();
    let kernel = graded_vanishing_space(&cx.ring, &points, &alpha)?.len();
    out.checks.insert(
        "rank_nullity".into(),
        json!(code.params().k + kernel == full),
    );
    if let Some(ideal) = ideal {
        out.generators = minimal_or_reduced(&ideal)?;
        out.standard = Some(code.basis().to_vec());
        out.ideal = Some(ideal);
    }
    out.points = points;
    out.code = Some(code);
    Ok(out)
}

/// Evaluates the generators at every point, or at a seeded sample of them.
fn soundness(cx: &Context, gens: &[Polynomial], points: &[Vec<u32>]) -> Value {
    let samples = cx.job.options.samples.unwrap_or(DEFAULT_SAMPLES);
    let chosen: Vec<Vec<u32>> = if points.len() <= samples {
        points.to_vec()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cx.job.options.seed.unwrap_or(0));
        let mut idx = sample(&mut rng, points.len(), samples).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| points[i].clone()).collect()
    };
    let failures = vanishing_failures(gens, &chosen);
    json!({
        "points": points.len(),
        "checked": chosen.len(),
        "ok": failures.is_empty(),
    })
}

fn sorted_strings(polys: &[Polynomial]) -> Vec<String> {
    let mut v: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

fn monomial_strings(ring: &Ring, monomials: &[Monomial]) -> Vec<String> {
    let mut v: Vec<String> = monomials.iter().map(|m| m.format(ring.names())).collect();
    v.sort();
    v
}

fn parse_monomial(ring: &Arc<Ring>, src: &str) -> Result<Monomial, CliError> {
    let p = ring
        .parse(src)
        .map_err(|e| schema(format!("expect: `{src}`: {e}")))?;
    let mut terms = p.raw_terms();
    match (terms.next(), terms.next()) {
        (Some((m, 1)), None) => Ok(m.clone()),
        _ => Err(schema(format!("expect: `{src}` is not a monomial"))),
    }
}

fn missing(what: &str, task: Task) -> CliError {
    schema(format!(
        "expect.{what}: not produced by task {}",
        task.name()
    ))
}

fn compare(cx: &Context, out: &Computed) -> Result<Vec<String>, CliError> {
    let Some(expect) = &cx.job.expect else {
        return Ok(Vec::new());
    };
    let task = cx.job.task;
    let mut diffs = Vec::new();
    for (name, value) in &out.checks {
        let ok = match value {
            Value::Bool(b) => *b,
            Value::Object(o) => o.get("ok").and_then(Value::as_bool).unwrap_or(true),
            _ => true,
        };
        if !ok {
            diffs.push(format!("check {name} failed"));
        }
    }
    if let Some(gens) = &expect.ideal {
        let ideal = out.ideal.as_ref().ok_or_else(|| missing("ideal", task))?;
        let srcs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let wanted = Ideal::parse(&cx.ring, &srcs)
            .map_err(|e| schema(format!("expect.ideal: {e}")))?
            .with_budget(cx.job.budget());
        if !ideal.equals(&wanted)? {
            diffs.push(format!(
                "ideal: expected ⟨{}⟩, got ⟨{}⟩",
                gens.join(", "),
                sorted_strings(&out.generators).join(", ")
            ));
        }
    }
    if let Some(n) = expect.generator_count {
        if out.ideal.is_none() {
            return Err(missing("generator_count", task));
        }
        if out.generators.len() != n {
            diffs.push(format!(
                "generator_count: expected {n}, got {}",
                out.generators.len()
            ));
        }
    }
    if let Some(list) = &expect.standard_monomials {
        let got = out
            .standard
            .as_ref()
            .ok_or_else(|| missing("standard_monomials", task))?;
        let wanted: HashSet<Monomial> = list
            .iter()
            .map(|s| parse_monomial(&cx.ring, s))
            .collect::<Result<_, _>>()?;
        let have: HashSet<Monomial> = got.iter().cloned().collect();
        if wanted != have {
            diffs.push(format!(
                "standard_monomials: expected {:?}, got {:?}",
                monomial_strings(&cx.ring, &wanted.into_iter().collect::<Vec<_>>()),
                monomial_strings(&cx.ring, got)
            ));
        }
    }
    if let Some(n) = expect.orbit_count {
        let got = out
            .orbits
            .as_ref()
            .ok_or_else(|| missing("orbit_count", task))?;
        if got.len() != n {
            diffs.push(format!("orbit_count: expected {n}, got {}", got.len()));
        }
    }
    if let Some(n) = expect.torus_orbit_count {
        let got = out
            .torus_orbits
            .as_ref()
            .ok_or_else(|| missing("torus_orbit_count", task))?;
        if got.len() != n {
            diffs.push(format!(
                "torus_orbit_count: expected {n}, got {}",
                got.len()
            ));
        }
    }
    if let Some(list) = &expect.orbit_points {
        let got = out
            .orbits
            .as_ref()
            .ok_or_else(|| missing("orbit_points", task))?;
        let raw = list
            .iter()
            .enumerate()
            .map(|(i, p)| {
                raw_point(
                    &cx.field,
                    p,
                    cx.ring.nvars(),
                    &format!("expect.orbit_points[{i}]"),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        let wanted: HashSet<OrbitPoint> = orbit_classes(&cx.field, cx.toric.beta(), &raw)
            .into_iter()
            .collect();
        let have: HashSet<OrbitPoint> = got.iter().cloned().collect();
        if wanted != have || wanted.len() != list.len() {
            diffs.push(format!(
                "orbit_points: {} expected points give {} orbits, {} computed, {} shared",
                list.len(),
                wanted.len(),
                have.len(),
                wanted.intersection(&have).count()
            ));
        }
    }
    if let Some([n, k, d]) = expect.code {
        let got = out
            .code
            .as_ref()
            .ok_or_else(|| missing("code", task))?
            .params();
        if (got.n, got.k, got.delta) != (n, k, Some(d)) {
            diffs.push(format!("code: expected [{n},{k},{d}], got {got}"));
        }
    }
    Ok(diffs)
}
