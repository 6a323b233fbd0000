//! The criterion-agnostic optimizer: greedy local moves on one level, then
//! coarsening, repeated until a level stops paying off.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::criteria::{pretreat, Criterion, CriterionId, CriterionState};
use crate::error::{Error, Result};
use crate::graph::{aggregate, Graph, NeighborWeights, Partition};

pub const DEFAULT_PRECISION: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub criterion: CriterionId,
    /// Minimum quality improvement a level must bring for the next level to
    /// be attempted. Compared against unscaled totals.
    pub precision: f64,
    pub seed: u64,
    pub shuffle_nodes: bool,
    pub max_levels: Option<usize>,
    /// Sweep cap per pass; `None` means ten times the level's node count.
    pub max_sweeps_per_pass: Option<usize>,
}

impl RunConfig {
    pub fn new(criterion: CriterionId) -> Self {
        RunConfig {
            criterion,
            precision: DEFAULT_PRECISION,
            seed: 0,
            shuffle_nodes: true,
            max_levels: None,
            max_sweeps_per_pass: None,
        }
    }

    pub fn precision(mut self, precision: f64) -> Self {
        self.precision = precision;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn shuffle(mut self, shuffle: bool) -> Self {
        self.shuffle_nodes = shuffle;
        self
    }

    pub fn max_levels(mut self, levels: usize) -> Self {
        self.max_levels = Some(levels);
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.criterion.validate()?;
        if !(self.precision > 0.0) {
            return Err(Error::InvalidPrecision(self.precision));
        }
        Ok(())
    }
}

/// One level of the hierarchy: the graph the pass ran on, the partition it
/// found, and the quality of that partition.
#[derive(Clone, Debug)]
pub struct Level {
    pub graph: Graph,
    pub partition: Partition,
    pub quality: f64,
    pub sweeps: usize,
    pub moves: usize,
}

#[derive(Clone, Debug)]
pub struct Hierarchy {
    pub criterion: String,
    /// Quality of the all-singletons partition of the input graph.
    pub initial_quality: f64,
    pub levels: Vec<Level>,
    /// Final community of every input node.
    pub flat: Partition,
    pub elapsed: Duration,
}

impl Hierarchy {
    pub fn kappa_final(&self) -> usize {
        self.flat.num_communities()
    }

    pub fn final_quality(&self) -> f64 {
        self.levels.last().map_or(self.initial_quality, |l| l.quality)
    }

    /// Flat partition of the input nodes after each level.
    pub fn flat_levels(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let next = match out.last() {
                Some(prev) => prev.compose(&level.partition),
                None => level.partition.clone(),
            };
            out.push(next);
        }
        out
    }
}

/// Composes the per-level partitions into one map from input nodes to final
/// communities. Panics on an empty slice.
pub fn compose_flat(levels: &[Level]) -> Partition {
    let (first, rest) = levels.split_first().expect("hierarchy has no levels");
    rest.iter()
        .fold(first.partition.clone(), |flat, level| flat.compose(&level.partition))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PassStats {
    pub sweeps: usize,
    pub moves: usize,
    /// Criterion total after each sweep.
    pub sweep_totals: Vec<f64>,
}

/// Local greedy optimization on one level.
///
/// Each node in `order` is taken out of its community and reinserted where
/// the gain is largest among its current community, its neighbors'
/// communities and one empty community. The current community wins ties.
/// Sweeps repeat until one moves nothing.
pub fn one_pass(
    g: &Graph,
    st: &mut CriterionState,
    order: &[usize],
    max_sweeps: usize,
    level: usize,
) -> Result<PassStats> {
    let n = g.num_nodes();
    let mut scratch = NeighborWeights::new(n);
    let mut free: Vec<usize> = (0..n).filter(|&c| st.occupancy(c) == 0).collect();
    let mut stats = PassStats::default();

    loop {
        if stats.sweeps == max_sweeps {
            return Err(Error::SweepCapExceeded { level, cap: max_sweeps });
        }
        stats.sweeps += 1;
        let mut moved = 0;
        for &i in order {
            let c_old = st.community_of(i).expect("node unassigned between moves");
            scratch.collect(g, i, st.assignment(), c_old);
            let dw_old = scratch.weight(c_old);
            st.remove(g, i, c_old, dw_old)?;
            if st.occupancy(c_old) == 0 {
                free.push(c_old);
            }

            let mut best = (c_old, dw_old, st.raw_gain(g, i, c_old, dw_old));
            for (c, dw) in scratch.iter() {
                if c == c_old {
                    continue;
                }
                let gain = st.raw_gain(g, i, c, dw);
                if gain > best.2 {
                    best = (c, dw, gain);
                }
            }
            if let Some(&empty) = free.last() {
                if empty != c_old {
                    let gain = st.raw_gain(g, i, empty, 0.0);
                    if gain > best.2 {
                        best = (empty, 0.0, gain);
                    }
                }
            }

            let (c_new, dw_new, _) = best;
            st.insert(g, i, c_new, dw_new)?;
            if free.last() == Some(&c_new) {
                free.pop();
            }
            if c_new != c_old {
                moved += 1;
            }
        }
        stats.moves += moved;
        stats.sweep_totals.push(st.total());
        if moved == 0 {
            return Ok(stats);
        }
    }
}

/// Runs the full multi-level optimization of a built-in criterion on `g0`,
/// which must already be pretreated if the criterion asks for it.
pub fn run(g0: &Graph, cfg: &RunConfig) -> Result<Hierarchy> {
    run_with(g0, cfg, cfg.criterion.build())
}

/// Pretreats `raw` for the configured criterion and runs it.
pub fn detect(raw: &Graph, cfg: &RunConfig) -> Result<Hierarchy> {
    cfg.validate()?;
    if raw.num_nodes() == 0 {
        return Err(Error::EmptyGraph);
    }
    let g0 = pretreat(cfg.criterion, raw)?;
    run(&g0, cfg)
}

/// Multi-level optimization with any [`Criterion`]. `cfg.criterion` is
/// only consulted for validation; `criterion` does the scoring.
pub fn run_with(g0: &Graph, cfg: &RunConfig, criterion: Box<dyn Criterion>) -> Result<Hierarchy> {
    cfg.validate()?;
    if g0.num_nodes() == 0 {
        return Err(Error::EmptyGraph);
    }
    assert!(g0.is_level0(), "run expects a level-0 graph");
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let name = criterion.name().to_string();

    let mut graph = g0.clone();
    let mut st = CriterionState::new(criterion, &graph)?;
    let initial_quality = st.total();
    let mut previous = initial_quality;
    let mut levels: Vec<Level> = Vec::new();

    loop {
        let n = graph.num_nodes();
        let mut order: Vec<usize> = (0..n).collect();
        if cfg.shuffle_nodes {
            order.shuffle(&mut rng);
        }
        let cap = cfg.max_sweeps_per_pass.unwrap_or(10 * n);
        let pass = one_pass(&graph, &mut st, &order, cap, levels.len())?;
        let partition = st.partition();
        let meta = aggregate(&graph, &partition);
        let next = CriterionState::new(st.into_criterion(), &meta)?;
        let quality = next.total();

        let unchanged = partition.is_singleton();
        levels.push(Level {
            graph,
            partition,
            quality,
            sweeps: pass.sweeps,
            moves: pass.moves,
        });
        let capped = cfg.max_levels.is_some_and(|m| levels.len() >= m);
        if unchanged || quality - previous <= cfg.precision || capped {
            break;
        }
        previous = quality;
        graph = meta;
        st = next;
    }

    let flat = compose_flat(&levels);
    Ok(Hierarchy {
        criterion: name,
        initial_quality,
        levels,
        flat,
        elapsed: started.elapsed(),
    })
}
