//! Per-file verification records and the batch pipeline.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::arrangement::{
    crossing_incidence_with, density_check_with, planarize, small_cells_with, DensityCheck,
    IncidenceAudit, SmallCellReport,
};
use crate::constructions::grid_counts;
use crate::error::{Error, Result};
use crate::faces::{discharging_audit, plane_subgraph, SplitMode};
use crate::model::{codec, validate_drawing, Drawing};
use crate::numeric::QField;

pub const TOOL: &str = "udk";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact field elements serialize as their display string, e.g. `1/2+1/2√3`.
pub(crate) fn ser_qfield<S: Serializer>(q: &QField, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct DischargeSummary {
    pub mode: SplitMode,
    pub e0: usize,
    pub e1: usize,
    pub flips: usize,
    pub transfers: usize,
    pub halfedge_bound: bool,
    pub charges_nonnegative: bool,
    pub edge_chain: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaCheck {
    pub expected_n: usize,
    pub expected_e: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FileRecord {
    pub path: String,
    pub sha256: String,
    pub n: usize,
    pub e: usize,
    pub normalized: Vec<String>,
    pub valid: bool,
    pub crossings: usize,
    pub max_crossings_per_edge: usize,
    pub density: Vec<DensityCheck>,
    pub small_cells: Option<SmallCellReport>,
    pub incidence: Option<IncidenceAudit>,
    pub discharging: Option<DischargeSummary>,
    pub formula: Option<FormulaCheck>,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub files: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchReport {
    pub tool: String,
    pub version: String,
    pub files: Vec<FileRecord>,
    pub summary: Summary,
}

impl BatchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Counts a construction tag promises, if any.
fn formula_for(d: &Drawing) -> Option<(usize, usize)> {
    match d.meta().get("construction").map(String::as_str)? {
        "rook" => Some((9, 18)),
        "dodecagon" => Some((29, 72)),
        "grid" => d.meta().get("k")?.parse().ok().filter(|&k| k >= 1).map(grid_counts),
        _ => None,
    }
}

/// Every check applicable to one drawing.
pub fn check_drawing(d: &Drawing) -> FileRecord {
    let mut r = FileRecord { n: d.n(), e: d.e(), ..FileRecord::default() };
    let v = validate_drawing(d);
    r.valid = v.is_valid();
    if !r.valid {
        r.failures.push(format!("validation: {}", v.summary()));
        return r;
    }
    let p = match planarize(d) {
        Ok(p) => p,
        Err(e) => {
            r.failures.push(format!("crossings: {e}"));
            return r;
        }
    };
    r.crossings = p.crossings.count();
    r.max_crossings_per_edge = p.crossings.max_crossings_per_edge;
    if d.e() > 0 && p.is_connected() {
        for t in [2, 3, 4] {
            match density_check_with(d, &p, &QField::int(t)) {
                Ok(c) => {
                    if !c.holds {
                        r.failures.push(format!("density t={t}: rhs {} < |E| = {}", c.rhs, c.edges));
                    }
                    r.density.push(c);
                }
                Err(e) => r.failures.push(format!("density t={t}: {e}")),
            }
        }
    }
    let sc = small_cells_with(&p);
    if sc.one_plane_ok == Some(false) {
        r.failures.push(format!("small cells: non-(a) cells in a 1-plane drawing {:?}", sc.histogram));
    }
    r.small_cells = Some(sc);
    if p.crossings.is_k_plane(1) {
        match crossing_incidence_with(d, &p) {
            Ok(a) => {
                r.failures.extend(a.diagnostics.iter().map(|m| format!("incidence: {m}")));
                r.incidence = Some(a);
            }
            Err(e) => r.failures.push(format!("incidence: {e}")),
        }
    }
    if p.crossings.is_k_plane(2) {
        let split = match plane_subgraph(d, SplitMode::Exact) {
            Err(Error::TooLarge { .. }) => plane_subgraph(d, SplitMode::Greedy),
            other => other,
        };
        match split.and_then(|s| discharging_audit(d, &s).map(|l| (s, l))) {
            Ok((s, l)) => {
                r.failures.extend(l.diagnostics.iter().map(|m| format!("discharging: {m}")));
                r.discharging = Some(DischargeSummary {
                    mode: s.mode,
                    e0: l.e0,
                    e1: l.e1,
                    flips: s.flips,
                    transfers: l.transfers.len(),
                    halfedge_bound: l.halfedge_bound,
                    charges_nonnegative: l.charges_nonnegative,
                    edge_chain: l.edge_chain,
                    passed: l.passed,
                });
            }
            Err(e) => r.failures.push(format!("discharging: {e}")),
        }
    }
    if let Some((n, e)) = formula_for(d) {
        let holds = (d.n(), d.e()) == (n, e);
        if !holds {
            r.failures.push(format!("counts ({}, {}) differ from formula ({n}, {e})", d.n(), d.e()));
        }
        r.formula = Some(FormulaCheck { expected_n: n, expected_e: e, holds });
    }
    r
}

fn check_file(path: &Path, label: String) -> FileRecord {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            return FileRecord { path: label, failures: vec![format!("read: {e}")], ..FileRecord::default() }
        }
    };
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let loaded = std::str::from_utf8(&bytes)
        .map_err(|e| Error::Parse { context: "file".into(), message: e.to_string() })
        .and_then(codec::from_str);
    let mut r = match loaded {
        Ok((d, load)) => {
            let mut r = check_drawing(&d);
            r.normalized = load.normalized;
            r
        }
        Err(e) => FileRecord { failures: vec![format!("load: {e}")], ..FileRecord::default() },
    };
    r.path = label;
    r.sha256 = sha256;
    r.passed = r.failures.is_empty();
    r
}

/// Checks every `.udg` / `.json` file in `dir` (not recursive), ordered by
/// file name. Unreadable files are recorded as failures.
pub fn batch(dir: impl AsRef<Path>) -> Result<BatchReport> {
    let dir = dir.as_ref();
    let io = |source| Error::Io { path: dir.display().to_string(), source };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && matches!(p.extension().and_then(|x| x.to_str()), Some("udg") | Some("json"))
        })
        .collect();
    paths.sort();
    let files: Vec<FileRecord> = paths
        .par_iter()
        .map(|p| {
            let label = p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            check_file(p, label)
        })
        .collect();
    let passed = files.iter().filter(|f| f.passed).count();
    Ok(BatchReport {
        tool: TOOL.to_string(),
        version: VERSION.to_string(),
        summary: Summary { files: files.len(), passed, failed: files.len() - passed },
        files,
    })
}
