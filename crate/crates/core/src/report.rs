//! JSON build report and benchmark CSV rows.
//!
//! Build report (`schema_version` 1):
//!
//! ```text
//! {
//!   "schema_version": 1,
//!   "result": { additive_stretch, vertex_count, edge_count, spanner_edge_count,
//!               shortcut_fired, shortcut_edges, step_edge_counts[7],
//!               elimination_rounds, s1_size, s2_size, aux_right_count,
//!               residual_edge_count, max_live_degree, stretch_guaranteed,
//!               thresholds{..}, doubled{..}|null, spanner_edges[[u,v],..] },
//!   "budget": { n, m, spanner_edges, bound, ratio_to_m, ratio_to_bound, .. },
//!   "verification": { k, passed, report{..} } | null
//! }
//! ```
//!
//! Reports carry no timing data, so identical inputs give identical bytes.
//!
//! Bench CSV columns, in order: see [`BENCH_COLUMNS`]. Times are
//! milliseconds with three decimals.

use std::io::Write;
use std::time::Duration;

use serde::Serialize;

use crate::oracle::{EdgeBudget, StretchVerdict};
use crate::spanner5::{PhaseTimings, SpannerResult};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct BuildReport<'a> {
    pub schema_version: u32,
    pub result: &'a SpannerResult,
    pub budget: EdgeBudget,
    pub verification: Option<StretchVerdict>,
}

impl BuildReport<'_> {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is always serializable");
        s.push('\n');
        s
    }
}

pub const BENCH_COLUMNS: [&str; 22] = [
    "n",
    "m",
    "mode",
    "spanner_edges",
    "ratio_to_bound",
    "ratio_to_m",
    "s1_size",
    "s2_size",
    "elimination_rounds",
    "shortcut_fired",
    "verified",
    "t_generate_ms",
    "t_double_ms",
    "t_step0_ms",
    "t_step1_ms",
    "t_step2_ms",
    "t_step3_ms",
    "t_step4_ms",
    "t_step5_ms",
    "t_step6_ms",
    "t_step7_ms",
    "t_total_ms",
];

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub mode: u32,
    pub spanner_edges: usize,
    pub ratio_to_bound: f64,
    pub ratio_to_m: f64,
    pub s1_size: usize,
    pub s2_size: usize,
    pub elimination_rounds: usize,
    pub shortcut_fired: bool,
    /// `None` when verification was skipped.
    pub verified: Option<bool>,
    pub generate_time: Duration,
    pub timings: PhaseTimings,
}

fn ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

impl BenchRow {
    pub fn record(&self) -> Vec<String> {
        let t = &self.timings;
        let mut rec = vec![
            self.n.to_string(),
            self.m.to_string(),
            self.mode.to_string(),
            self.spanner_edges.to_string(),
            format!("{:.6}", self.ratio_to_bound),
            format!("{:.6}", self.ratio_to_m),
            self.s1_size.to_string(),
            self.s2_size.to_string(),
            self.elimination_rounds.to_string(),
            self.shortcut_fired.to_string(),
            self.verified.map_or("skipped".to_string(), |v| v.to_string()),
            ms(self.generate_time),
            ms(t.get("double") + t.get("project")),
        ];
        for step in ["step0", "step1", "step2", "step3", "step4", "step5", "step6", "step7"] {
            rec.push(ms(t.get(step)));
        }
        rec.push(ms(t.total()));
        rec
    }
}

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BENCH_COLUMNS)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}
