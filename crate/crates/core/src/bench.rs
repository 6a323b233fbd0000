//! Repeated seeded runs per criterion, reported as mean and standard
//! deviation of running time, community count and final quality.

use std::fmt::Write as _;

use crate::criteria::{pretreat, CriterionId};
use crate::graph::Graph;
use crate::louvain::{run, RunConfig};

/// Precision used for benchmark runs unless overridden.
pub const BENCH_PRECISION: f64 = 5e-3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stat {
    pub mean: f64,
    pub stddev: f64,
}

impl Stat {
    /// Population mean and standard deviation.
    pub fn of(values: &[f64]) -> Stat {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        Stat {
            mean,
            stddev: var.sqrt(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchCell {
    pub seconds: Stat,
    pub communities: Stat,
    pub quality: Stat,
    pub runs: usize,
}

/// Result of one criterion on one graph: statistics, or the error that
/// stopped it.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub criterion: CriterionId,
    pub outcome: Result<BenchCell, String>,
}

/// Runs every criterion `runs` times with seeds `base.seed + 0..runs`.
/// Errors are kept per row and do not stop the other criteria.
pub fn bench_graph(graph: &Graph, criteria: &[CriterionId], runs: usize, base: &RunConfig) -> Vec<BenchRow> {
    criteria
        .iter()
        .map(|&criterion| BenchRow {
            criterion,
            outcome: bench_one(graph, criterion, runs, base),
        })
        .collect()
}

fn bench_one(graph: &Graph, criterion: CriterionId, runs: usize, base: &RunConfig) -> Result<BenchCell, String> {
    assert!(runs > 0, "at least one run");
    let g0 = pretreat(criterion, graph).map_err(|e| e.to_string())?;
    let mut seconds = Vec::with_capacity(runs);
    let mut communities = Vec::with_capacity(runs);
    let mut quality = Vec::with_capacity(runs);
    for r in 0..runs {
        let mut cfg = base.clone();
        cfg.criterion = criterion;
        cfg.seed = base.seed.wrapping_add(r as u64);
        let h = run(&g0, &cfg).map_err(|e| e.to_string())?;
        seconds.push(h.elapsed.as_secs_f64());
        communities.push(h.kappa_final() as f64);
        quality.push(h.final_quality());
    }
    Ok(BenchCell {
        seconds: Stat::of(&seconds),
        communities: Stat::of(&communities),
        quality: Stat::of(&quality),
        runs,
    })
}

/// Renders one table per measure, graphs as rows and criteria as columns.
pub fn format_tables(results: &[(String, Vec<BenchRow>)]) -> String {
    let Some((_, first)) = results.first() else {
        return String::new();
    };
    let columns: Vec<&str> = first.iter().map(|r| r.criterion.code()).collect();
    let name_width = results.iter().map(|(n, _)| n.len()).max().unwrap_or(0).max(8);
    let measures: [(&str, fn(&BenchCell) -> Stat); 3] = [
        ("Running time (s)", |c| c.seconds),
        ("Number of communities", |c| c.communities),
        ("Quality", |c| c.quality),
    ];
    let mut out = String::new();
    for (title, pick) in measures {
        let _ = writeln!(out, "{title}");
        let _ = write!(out, "{:<name_width$}", "graph");
        for col in &columns {
            let _ = write!(out, " | {:>20}", col);
        }
        out.push('\n');
        for (name, rows) in results {
            let _ = write!(out, "{:<name_width$}", name);
            for row in rows {
                let cell = match &row.outcome {
                    Ok(cell) => {
                        let s = pick(cell);
                        format!("{:.4} ± {:.4}", s.mean, s.stddev)
                    }
                    Err(_) => "error".to_string(),
                };
                let _ = write!(out, " | {:>20}", cell);
            }
            out.push('\n');
        }
        out.push('\n');
    }
    for (name, rows) in results {
        for row in rows {
            if let Err(e) = &row.outcome {
                let _ = writeln!(out, "{name} / {}: {e}", row.criterion.code());
            }
        }
    }
    out
}
