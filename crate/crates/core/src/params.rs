//! Thresholds that drive the spanner construction.
//!
//! Every default is a function of the vertex count `n` of the graph the
//! construction runs on, with `L = max(1, log2 n)`:
//!
//! | threshold        | default              |
//! |------------------|----------------------|
//! | elimination      | `n^(3/5) / L^(3/5)`  |
//! | heavy degree     | `n^(2/5) * L^(3/5)`  |
//! | path degree `F`  | `n^(3/5) * L^(2/5)`  |
//! | dense shortcut   | `m <= n^(7/5)`       |
//!
//! The auxiliary-graph subtree test uses `subtree_factor * F` (default 3) and
//! the short-path test uses `shortpath_factor * F` (default 5).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("{name} must be a finite positive number, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be at least 1, got {value}")]
    FactorBelowOne { name: &'static str, value: f64 },
    #[error("additive stretch {0} is not supported (use 4 or 5)")]
    UnsupportedMode(u32),
}

/// User-facing parameters; `None` thresholds take their `n`-dependent default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpannerParams {
    pub elim_threshold: Option<f64>,
    pub heavy_threshold: Option<f64>,
    pub f_threshold: Option<f64>,
    pub subtree_factor: f64,
    pub shortpath_factor: f64,
    pub dense_shortcut: bool,
}

impl Default for SpannerParams {
    fn default() -> Self {
        Self {
            elim_threshold: None,
            heavy_threshold: None,
            f_threshold: None,
            subtree_factor: 3.0,
            shortpath_factor: 5.0,
            dense_shortcut: true,
        }
    }
}

/// `max(1, log2 n)`.
pub fn log2_floor1(n: usize) -> f64 {
    (n.max(1) as f64).log2().max(1.0)
}

/// `n^(7/5) * L^(3/5)`, the edge-count scale the construction targets.
pub fn edge_bound(n: usize) -> f64 {
    (n as f64).powf(1.4) * log2_floor1(n).powf(0.6)
}

/// Upper bound on the heavy-vertex dominating set: `2 n^(3/5) L^(2/5)`.
pub fn s1_bound(n: usize) -> f64 {
    2.0 * (n.max(1) as f64).powf(0.6) * log2_floor1(n).powf(0.4)
}

/// Upper bound on the path dominating set: `12 n^(2/5) L^(3/5)`.
pub fn s2_bound(n: usize) -> f64 {
    12.0 * (n.max(1) as f64).powf(0.4) * log2_floor1(n).powf(0.6)
}

/// Resolved, absolute thresholds for one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub n: usize,
    pub log2_n: f64,
    pub elim: f64,
    pub heavy: f64,
    pub f: f64,
    pub subtree_factor: f64,
    pub shortpath_factor: f64,
    pub dense_shortcut: bool,
    /// The shortcut fires when `m <= shortcut_edge_limit`.
    pub shortcut_edge_limit: f64,
    pub s1_bound: f64,
    pub s2_bound: f64,
}

impl Thresholds {
    pub fn subtree_limit(&self) -> f64 {
        self.subtree_factor * self.f
    }

    pub fn shortpath_limit(&self) -> f64 {
        self.shortpath_factor * self.f
    }

    /// Whether the additive-5 argument covers a residual graph whose maximum
    /// live degree is `max_live_degree`.
    ///
    /// A path that fails the short-path test must leave a qualifying segment
    /// on both the full path and the path minus its last vertex, which needs
    /// `subtree_factor <= shortpath_factor - 1` and
    /// `max_live_degree <= (shortpath_factor - 1 - subtree_factor) * F`.
    /// Defaults always satisfy this, since the elimination ceiling is at most
    /// `F`.
    pub fn guarantees_stretch(&self, max_live_degree: u32) -> bool {
        let slack = self.shortpath_factor - 1.0 - self.subtree_factor;
        slack >= 0.0 && max_live_degree as f64 <= slack * self.f
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64, ParamError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(ParamError::NonPositive { name, value })
    }
}

impl SpannerParams {
    pub fn resolve(&self, n: usize) -> Result<Thresholds, ParamError> {
        let nf = n.max(1) as f64;
        let log = log2_floor1(n);
        let elim = self
            .elim_threshold
            .unwrap_or_else(|| nf.powf(0.6) / log.powf(0.6));
        let heavy = self
            .heavy_threshold
            .unwrap_or_else(|| nf.powf(0.4) * log.powf(0.6));
        let f = self.f_threshold.unwrap_or_else(|| nf.powf(0.6) * log.powf(0.4));
        for (name, value) in [
            ("subtree_factor", self.subtree_factor),
            ("shortpath_factor", self.shortpath_factor),
        ] {
            if !(value.is_finite() && value >= 1.0) {
                return Err(ParamError::FactorBelowOne { name, value });
            }
        }
        Ok(Thresholds {
            n,
            log2_n: log,
            elim: positive("elim_threshold", elim)?,
            heavy: positive("heavy_threshold", heavy)?,
            f: positive("f_threshold", f)?,
            subtree_factor: self.subtree_factor,
            shortpath_factor: self.shortpath_factor,
            dense_shortcut: self.dense_shortcut,
            shortcut_edge_limit: (n as f64).powf(1.4),
            s1_bound: s1_bound(n),
            s2_bound: s2_bound(n),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_for_star_of_ten() {
        let t = SpannerParams::default().resolve(11).unwrap();
        // 11^0.6 / log2(11)^0.6
        assert!((t.elim - 4.2148 / 2.1060).abs() < 1e-3, "{}", t.elim);
        assert!(t.elim <= t.f);
    }

    #[test]
    fn log_is_floored() {
        assert_eq!(log2_floor1(0), 1.0);
        assert_eq!(log2_floor1(1), 1.0);
        assert_eq!(log2_floor1(2), 1.0);
        assert_eq!(log2_floor1(8), 3.0);
        let t = SpannerParams::default().resolve(0).unwrap();
        assert!(t.elim > 0.0 && t.heavy > 0.0 && t.f > 0.0);
    }

    #[test]
    fn shortcut_limit_for_32() {
        let t = SpannerParams::default().resolve(32).unwrap();
        assert_eq!(t.shortcut_edge_limit.ceil(), 128.0);
    }

    #[test]
    fn overrides_validated() {
        let mut p = SpannerParams { f_threshold: Some(0.0), ..Default::default() };
        assert!(matches!(p.resolve(10), Err(ParamError::NonPositive { name: "f_threshold", .. })));
        p.f_threshold = Some(2.0);
        p.subtree_factor = 0.5;
        assert!(matches!(p.resolve(10), Err(ParamError::FactorBelowOne { .. })));
        p.subtree_factor = 1.0;
        p.elim_threshold = Some(f64::NAN);
        assert!(p.resolve(10).is_err());
        p.elim_threshold = Some(7.0);
        let t = p.resolve(10).unwrap();
        assert_eq!((t.elim, t.f, t.subtree_limit(), t.shortpath_limit()), (7.0, 2.0, 2.0, 10.0));
    }

    #[test]
    fn defaults_guarantee_stretch_below_elimination_ceiling() {
        for n in [2, 10, 100, 1000, 100_000] {
            let t = SpannerParams::default().resolve(n).unwrap();
            let ceiling = t.elim.ceil() as u32 - 1;
            assert!(t.guarantees_stretch(ceiling), "n = {n}");
        }
    }
}
