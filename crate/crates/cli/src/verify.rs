//! Re-runs golden jobs and compares against their `expect` blocks.

use std::fs;
use std::path::Path;

use crate::job::Job;
use crate::run::{execute, Overrides};
use crate::CliError;

/// Golden jobs compiled into the binary, as `(file name, contents)`.
pub const BUNDLED: &[(&str, &str)] = &[
    (
        "h2_f3_rational.json",
        include_str!("../goldens/h2_f3_rational.json"),
    ),
    (
        "h2_f3_rational_code.json",
        include_str!("../goldens/h2_f3_rational_code.json"),
    ),
    (
        "h3_f5_affine.json",
        include_str!("../goldens/h3_f5_affine.json"),
    ),
    (
        "h3_f5_toric.json",
        include_str!("../goldens/h3_f5_toric.json"),
    ),
    (
        "h3_f5_code36.json",
        include_str!("../goldens/h3_f5_code36.json"),
    ),
    (
        "h3_f5_code39.json",
        include_str!("../goldens/h3_f5_code39.json"),
    ),
    (
        "h3_f5_irrelevant_orbits.json",
        include_str!("../goldens/h3_f5_irrelevant_orbits.json"),
    ),
    (
        "h2_f3_toric.json",
        include_str!("../goldens/h2_f3_toric.json"),
    ),
    (
        "h1_f2_toric.json",
        include_str!("../goldens/h1_f2_toric.json"),
    ),
    (
        "h2_f3_affine_paths.json",
        include_str!("../goldens/h2_f3_affine_paths.json"),
    ),
    (
        "p2xp3_f3_toric.json",
        include_str!("../goldens/p2xp3_f3_toric.json"),
    ),
    (
        "wps_123_f3_toric.json",
        include_str!("../goldens/wps_123_f3_toric.json"),
    ),
    (
        "h2_f3_point.json",
        include_str!("../goldens/h2_f3_point.json"),
    ),
    (
        "h2_f3_cell.json",
        include_str!("../goldens/h2_f3_cell.json"),
    ),
];

#[derive(Debug, Default)]
pub struct VerifyReport {
    pub lines: Vec<String>,
    pub failed: usize,
    pub total: usize,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let noun = if self.total == 1 { "job" } else { "jobs" };
        format!("{} {noun}, {} failed", self.total, self.failed)
    }
}

pub fn verify_jobs(
    jobs: impl IntoIterator<Item = (String, String)>,
    overrides: &Overrides,
) -> VerifyReport {
    let mut report = VerifyReport::default();
    for (name, src) in jobs {
        report.total += 1;
        let result = Job::from_json(&src).and_then(|job| {
            if job.expect.is_none() {
                return Err(CliError::Schema("no expect block".into()));
            }
            execute(&job, overrides)
        });
        match result {
            Ok(outcome) if outcome.mismatches.is_empty() => {
                report.lines.push(format!("ok   {name}"));
            }
            Ok(outcome) => {
                report.failed += 1;
                report.lines.push(format!("FAIL {name}"));
                for m in outcome.mismatches {
                    report.lines.push(format!("  - {m}"));
                }
            }
            Err(e) => {
                report.failed += 1;
                report.lines.push(format!("FAIL {name}"));
                report.lines.push(format!("  ! {e}"));
            }
        }
    }
    report
}

/// Every `*.json` file directly inside `dir`, in name order.
pub fn verify_dir(dir: &Path, overrides: &Overrides) -> Result<VerifyReport, CliError> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut jobs = Vec::with_capacity(files.len());
    for path in files {
        let src = fs::read_to_string(&path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        jobs.push((name, src));
    }
    Ok(verify_jobs(jobs, overrides))
}
