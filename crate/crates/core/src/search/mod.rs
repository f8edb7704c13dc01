//! Exhaustive, symmetry-reduced searches.
//!
//! Orientation counters are split into contiguous ranges and scanned on a
//! rayon pool; each range reports its failures in ascending order, so the
//! merged result does not depend on the worker count.

mod enumerate;
mod path_dp;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::scan_cordial;
use crate::error::{Error, Result};
use crate::graph::{orient, Digraph, Graph, Orientation};
use crate::named::{alternating_path, complete_graph};

pub use enumerate::{friendly_labelings, orientations, FriendlyLabelings, Orientations};
pub use path_dp::path_cordial_dp;

use enumerate::orientation_range;

/// Which of the two halving symmetries to apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryMode {
    #[default]
    None,
    FixFirstArc,
    FixFirstLabel,
    Both,
}

impl SymmetryMode {
    pub fn from_flags(fix_first_arc: bool, fix_first_label: bool) -> Self {
        match (fix_first_arc, fix_first_label) {
            (false, false) => Self::None,
            (true, false) => Self::FixFirstArc,
            (false, true) => Self::FixFirstLabel,
            (true, true) => Self::Both,
        }
    }

    pub fn fix_first_arc(self) -> bool {
        matches!(self, Self::FixFirstArc | Self::Both)
    }

    pub fn fix_first_label(self) -> bool {
        matches!(self, Self::FixFirstLabel | Self::Both)
    }
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::None => "none",
            Self::FixFirstArc => "fix_first_arc",
            Self::FixFirstLabel => "fix_first_label",
            Self::Both => "both",
        })
    }
}

impl FromStr for SymmetryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Self::None),
            "fix_first_arc" => Ok(Self::FixFirstArc),
            "fix_first_label" => Ok(Self::FixFirstLabel),
            "both" => Ok(Self::Both),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown symmetry mode `{other}`"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub graph_descriptor: String,
    pub total_orientations_scanned: u64,
    /// Orientations with no cordial labeling, ascending by counter.
    pub noncordial: Vec<Orientation>,
    pub symmetry_mode: SymmetryMode,
    pub wall_time: Duration,
}

impl SearchReport {
    pub fn with_descriptor(mut self, descriptor: impl Into<String>) -> Self {
        self.graph_descriptor = descriptor.into();
        self
    }
}

/// Orientation chunk handed to one worker.
const CHUNK: u64 = 1 << 10;

/// Counters (not yet scaled by the step) of orientations of `g` that have no
/// cordial labeling.
fn failing_counters(g: &Graph, mode: SymmetryMode, jobs: usize) -> Result<(u64, Vec<u64>)> {
    let (m, step, total) = orientation_range(g.edge_count(), mode.fix_first_arc())?;
    let fix_label = mode.fix_first_label();
    let scan = || -> Vec<u64> {
        let chunks = total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(total);
                (lo..hi).filter(move |&k| {
                    let o = Orientation::from_index(m, k * step).expect("edge count checked");
                    let d = orient(g, &o).expect("orientation length matches");
                    scan_cordial(&d, fix_label).witness.is_none()
                })
            })
            .map(|k| k * step)
            .collect()
    };
    let found = run_with_jobs(jobs, scan);
    Ok((total, found))
}

fn run_with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Every orientation of `g` (modulo the chosen symmetries) with no cordial
/// labeling, using the global rayon pool.
pub fn noncordial_orientations(g: &Graph, symmetry: SymmetryMode) -> Result<SearchReport> {
    noncordial_orientations_with_jobs(g, symmetry, 0)
}

/// As [`noncordial_orientations`] on a pool of `jobs` workers; `0` uses the
/// global pool.
pub fn noncordial_orientations_with_jobs(
    g: &Graph,
    symmetry: SymmetryMode,
    jobs: usize,
) -> Result<SearchReport> {
    let start = Instant::now();
    let (total, found) = failing_counters(g, symmetry, jobs)?;
    let m = g.edge_count();
    Ok(SearchReport {
        graph_descriptor: format!("graph(n={}, m={m})", g.vertex_count()),
        total_orientations_scanned: total,
        noncordial: found
            .into_iter()
            .map(|idx| Orientation::from_index(m, idx).expect("edge count checked"))
            .collect(),
        symmetry_mode: symmetry,
        wall_time: start.elapsed(),
    })
}

/// Even `n` in `2..=n_max` whose alternating path has no cordial labeling,
/// decided with the path DP.
pub fn scan_alternating_paths(n_max: usize) -> Result<Vec<usize>> {
    if n_max < 2 || n_max % 2 == 1 {
        return Err(Error::InvalidCount {
            name: "scan_alternating_paths".into(),
            n: n_max,
            reason: "requires an even bound of at least 2",
        });
    }
    let mut failing = Vec::new();
    for n in (2..=n_max).step_by(2) {
        if path_cordial_dp(&alternating_path(n)?)?.is_none() {
            failing.push(n);
        }
    }
    Ok(failing)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TournamentSurvey {
    pub n: usize,
    pub total: u64,
    pub noncordial_count: u64,
}

pub const TOURNAMENT_MAX: usize = 6;

/// Counts the labeled tournaments on `n` vertices with no cordial labeling.
pub fn tournament_survey(n: usize) -> Result<TournamentSurvey> {
    tournament_survey_with_jobs(n, 0)
}

pub fn tournament_survey_with_jobs(n: usize, jobs: usize) -> Result<TournamentSurvey> {
    if !(1..=TOURNAMENT_MAX).contains(&n) {
        return Err(Error::OutOfRange {
            n,
            min: 1,
            max: TOURNAMENT_MAX,
        });
    }
    let k = complete_graph(n)?;
    let (total, found) = failing_counters(&k, SymmetryMode::FixFirstLabel, jobs)?;
    Ok(TournamentSurvey {
        n,
        total,
        noncordial_count: found.len() as u64,
    })
}

/// Runs the path DP on every orientation of `P_n` for cross-checking.
pub fn path_orientation_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    let g = crate::named::path_graph(n)?;
    let all = orientations(&g, false)?;
    Ok(all.map(move |o| orient(&g, &o).expect("orientation length matches")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::is_cordial;
    use crate::named::path_graph;

    fn bits(report: &SearchReport) -> Vec<String> {
        report.noncordial.iter().map(|o| o.to_string()).collect()
    }

    #[test]
    fn p10_has_exactly_the_alternating_pair() {
        let p10 = path_graph(10).unwrap();
        let all = noncordial_orientations(&p10, SymmetryMode::None).unwrap();
        assert_eq!(all.total_orientations_scanned, 512);
        assert_eq!(bits(&all), vec!["010101010", "101010101"]);
        let fixed = noncordial_orientations(&p10, SymmetryMode::FixFirstArc).unwrap();
        assert_eq!(fixed.total_orientations_scanned, 256);
        assert_eq!(bits(&fixed), vec!["010101010"]);
        let both = noncordial_orientations(&p10, SymmetryMode::Both).unwrap();
        assert_eq!(bits(&both), vec!["010101010"]);
    }

    #[test]
    fn p4_has_failures_including_001() {
        let p4 = path_graph(4).unwrap();
        let r = noncordial_orientations(&p4, SymmetryMode::None).unwrap();
        assert!(bits(&r).contains(&"001".to_string()));
    }

    #[test]
    fn p5_through_p9_all_cordial() {
        for n in 5..=9 {
            let r = noncordial_orientations(&path_graph(n).unwrap(), SymmetryMode::None).unwrap();
            assert!(r.noncordial.is_empty(), "n={n}: {:?}", bits(&r));
        }
    }

    #[test]
    fn fixed_first_arc_is_subset_and_failures_closed_under_reversal() {
        for n in 2..=9 {
            let g = path_graph(n).unwrap();
            let all = noncordial_orientations(&g, SymmetryMode::None).unwrap();
            let fixed = noncordial_orientations(&g, SymmetryMode::FixFirstArc).unwrap();
            let expected: Vec<_> = all
                .noncordial
                .iter()
                .filter(|o| o.is_empty() || !o.is_reversed(0))
                .cloned()
                .collect();
            assert_eq!(fixed.noncordial, expected);
            for o in &all.noncordial {
                assert!(all.noncordial.contains(&o.flipped()));
            }
        }
    }

    #[test]
    fn result_independent_of_jobs() {
        let g = complete_graph(5).unwrap();
        let a = noncordial_orientations_with_jobs(&g, SymmetryMode::None, 1).unwrap();
        let b = noncordial_orientations_with_jobs(&g, SymmetryMode::None, 4).unwrap();
        assert_eq!(a.noncordial, b.noncordial);
        let k4 = complete_graph(4).unwrap();
        let a = noncordial_orientations_with_jobs(&k4, SymmetryMode::None, 1).unwrap();
        let b = noncordial_orientations_with_jobs(&k4, SymmetryMode::None, 3).unwrap();
        assert_eq!(a.noncordial, b.noncordial);
    }

    #[test]
    fn listed_failures_recheck() {
        let p4 = path_graph(4).unwrap();
        let r = noncordial_orientations(&p4, SymmetryMode::None).unwrap();
        for o in &r.noncordial {
            assert!(is_cordial(&orient(&p4, o).unwrap()).is_none());
        }
    }

    #[test]
    fn alternating_scan() {
        assert_eq!(scan_alternating_paths(8).unwrap(), Vec::<usize>::new());
        assert_eq!(scan_alternating_paths(10).unwrap(), vec![10]);
        assert_eq!(scan_alternating_paths(22).unwrap(), vec![10, 22]);
        assert!(scan_alternating_paths(9).is_err());
        assert!(scan_alternating_paths(0).is_err());
    }

    #[test]
    fn tournaments() {
        assert_eq!(tournament_survey(3).unwrap().noncordial_count, 0);
        assert!(tournament_survey(4).unwrap().noncordial_count > 0);
        assert_eq!(
            tournament_survey(5).unwrap(),
            TournamentSurvey {
                n: 5,
                total: 1024,
                noncordial_count: 0
            }
        );
        assert_eq!(tournament_survey(1).unwrap().total, 1);
        assert!(tournament_survey(0).is_err());
        assert!(tournament_survey(7).is_err());
    }

    #[test]
    fn dp_agrees_with_scan_on_small_paths() {
        for n in 2..=10 {
            for d in path_orientation_digraphs(n).unwrap() {
                assert_eq!(
                    path_cordial_dp(&d).unwrap().is_some(),
                    is_cordial(&d).is_some(),
                    "{d:?}"
                );
            }
        }
    }

    #[test]
    fn symmetry_mode_strings() {
        for m in [
            SymmetryMode::None,
            SymmetryMode::FixFirstArc,
            SymmetryMode::FixFirstLabel,
            SymmetryMode::Both,
        ] {
            assert_eq!(m.to_string().parse::<SymmetryMode>().unwrap(), m);
        }
        assert_eq!(SymmetryMode::from_flags(true, true), SymmetryMode::Both);
    }
}
