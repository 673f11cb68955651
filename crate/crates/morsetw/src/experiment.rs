//! Treewidth statistics of spines and dual graphs over a set of complex
//! files, as CSV.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use morsetw_core::acfm::{self, SolveOptions};
use morsetw_core::morse::{complete_matching_3manifold, erasability_via_acfm_with};
use morsetw_core::treewidth::{make_nice, DEFAULT_EXACT_LIMIT};
use morsetw_core::SimplicialComplex;
use rayon::prelude::*;

use crate::decompose;
use crate::formats::parse_complex;

pub const HEADER: [&str; 13] = [
    "name", "ntri", "ntet", "tw_spine", "tw_spine_exact", "tw_dual", "tw_dual_exact", "er", "cM", "ms_spine",
    "ms_dual", "ms_acfm", "error",
];

/// Default cap on DP class tables in experiments.
pub const DEFAULT_CLASS_LIMIT: usize = 500_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentOptions {
    pub exact_limit: usize,
    /// Compute `er` for 2-complexes and `c(M)` for closed 3-manifolds.
    pub invariants: bool,
    pub class_limit: Option<usize>,
    pub seed: Option<u64>,
    /// Worker count; `MORSETW_THREADS` or all cores when unset.
    pub threads: Option<usize>,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        Self {
            exact_limit: DEFAULT_EXACT_LIMIT,
            invariants: false,
            class_limit: Some(DEFAULT_CLASS_LIMIT),
            seed: None,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentRecord {
    pub name: String,
    pub ntri: Option<usize>,
    pub ntet: Option<usize>,
    pub tw_spine: Option<usize>,
    pub tw_spine_exact: Option<bool>,
    pub tw_dual: Option<usize>,
    pub tw_dual_exact: Option<bool>,
    pub er: Option<usize>,
    pub c_m: Option<usize>,
    pub ms_spine: Option<f64>,
    pub ms_dual: Option<f64>,
    pub ms_acfm: Option<f64>,
    pub error: Option<String>,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Record for one complex given as text.
pub fn analyze(name: &str, text: &str, options: &ExperimentOptions) -> ExperimentRecord {
    let mut rec = ExperimentRecord { name: name.to_string(), ..Default::default() };
    let complex = match parse_complex(text) {
        Ok(k) => k,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    if let Err(e) = fill(&complex, options, &mut rec) {
        rec.error = Some(e);
    }
    rec
}

fn fill(k: &SimplicialComplex, options: &ExperimentOptions, rec: &mut ExperimentRecord) -> Result<(), String> {
    rec.ntri = Some(k.triangles().len());
    rec.ntet = Some(k.tetrahedra().len());
    let t = Instant::now();
    let spine = k.spine();
    let (spine_td, exact) = decompose(&spine, options.exact_limit, options.seed);
    rec.ms_spine = Some(ms(t));
    rec.tw_spine = Some(spine_td.width());
    rec.tw_spine_exact = Some(exact);
    if k.dim() == 3 {
        let t = Instant::now();
        let dual = k.dual_graph().map_err(|e| e.to_string())?;
        let (dual_td, exact) = decompose(&dual, options.exact_limit, options.seed);
        rec.ms_dual = Some(ms(t));
        rec.tw_dual = Some(dual_td.width());
        rec.tw_dual_exact = Some(exact);
    }
    if !options.invariants {
        return Ok(());
    }
    let solve = SolveOptions { exact_limit: options.exact_limit, class_limit: options.class_limit };
    let t = Instant::now();
    if k.dim() == 2 {
        let e = erasability_via_acfm_with(k, &solve).map_err(|e| e.to_string())?;
        rec.er = Some(e.er);
    } else if k.is_closed_3_pseudomanifold() {
        let nice = make_nice(&spine_td).map_err(|e| e.to_string())?;
        let sol = acfm::max_acfm_bounded(&spine, &nice, solve.class_limit).map_err(|e| e.to_string())?;
        let m = complete_matching_3manifold(k, &sol.witness).map_err(|e| e.to_string())?;
        rec.c_m = Some(m.total_critical());
    }
    rec.ms_acfm = Some(ms(t));
    Ok(())
}

/// Regular files of `dir`, sorted by name.
pub fn list_dir(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            out.push(entry.path());
        }
    }
    out.sort();
    Ok(out)
}

fn worker_count(options: &ExperimentOptions) -> usize {
    options
        .threads
        .or_else(|| std::env::var("MORSETW_THREADS").ok().and_then(|v| v.parse().ok()))
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// One record per file, in the order of `paths` sorted by file name.
pub fn run_experiment(paths: &[PathBuf], options: &ExperimentOptions) -> Vec<ExperimentRecord> {
    let mut paths = paths.to_vec();
    paths.sort_by(|a, b| a.file_name().cmp(&b.file_name()).then_with(|| a.cmp(b)));
    let work = |p: &PathBuf| {
        let name = p.file_name().map_or_else(|| p.display().to_string(), |n| n.to_string_lossy().into_owned());
        match std::fs::read_to_string(p) {
            Ok(text) => analyze(&name, &text, options),
            Err(e) => ExperimentRecord { name, error: Some(e.to_string()), ..Default::default() },
        }
    };
    match rayon::ThreadPoolBuilder::new().num_threads(worker_count(options)).build() {
        Ok(pool) => pool.install(|| paths.par_iter().map(work).collect()),
        Err(_) => paths.iter().map(work).collect(),
    }
}

/// Numeric view of a record, in [`HEADER`] order from `ntri` to `ms_acfm`.
fn values(r: &ExperimentRecord) -> [Option<f64>; 11] {
    let u = |x: Option<usize>| x.map(|v| v as f64);
    let b = |x: Option<bool>| x.map(|v| if v { 1.0 } else { 0.0 });
    [
        u(r.ntri),
        u(r.ntet),
        u(r.tw_spine),
        b(r.tw_spine_exact),
        u(r.tw_dual),
        b(r.tw_dual_exact),
        u(r.er),
        u(r.c_m),
        r.ms_spine,
        r.ms_dual,
        r.ms_acfm,
    ]
}

/// Column kinds for formatting: integer, flag, or milliseconds.
const KINDS: &[u8; 11] = b"iiififiimmm";

fn format_value(kind: u8, v: f64, stat: Option<&str>) -> String {
    match (kind, stat) {
        (b'm', _) => format!("{v:.3}"),
        (_, Some("mean")) => format!("{v:.2}"),
        (b'f', _) => (v == 1.0).to_string(),
        _ => format!("{v:.0}"),
    }
}

/// Summary rows `min`, `max` and `mean` over the records without errors.
/// Flags summarise as all (`min`), any (`max`) and the exact fraction
/// (`mean`).
pub fn summary(records: &[ExperimentRecord]) -> Vec<Vec<String>> {
    let ok: Vec<[Option<f64>; 11]> = records.iter().filter(|r| r.error.is_none()).map(values).collect();
    if records.is_empty() {
        return Vec::new();
    }
    ["min", "max", "mean"]
        .iter()
        .map(|&stat| {
            let mut row = vec![stat.to_string()];
            for (c, &kind) in KINDS.iter().enumerate() {
                let col: Vec<f64> = ok.iter().filter_map(|v| v[c]).collect();
                if col.is_empty() {
                    row.push(String::new());
                    continue;
                }
                let v = match stat {
                    "min" => col.iter().copied().fold(f64::INFINITY, f64::min),
                    "max" => col.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                    _ => col.iter().sum::<f64>() / col.len() as f64,
                };
                row.push(format_value(kind, v, Some(stat)));
            }
            row.push(String::new());
            row
        })
        .collect()
}

pub fn record_row(r: &ExperimentRecord) -> Vec<String> {
    let mut row = vec![r.name.clone()];
    for (v, &kind) in values(r).iter().zip(KINDS) {
        row.push(v.map(|v| format_value(kind, v, None)).unwrap_or_default());
    }
    row.push(r.error.clone().unwrap_or_default());
    row
}

/// Header, one row per record, then the summary rows.
pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in records {
        w.write_record(record_row(r))?;
    }
    for row in summary(records) {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
