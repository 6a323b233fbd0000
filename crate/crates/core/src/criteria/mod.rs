//! Quality criteria and the contract that plugs them into the optimizer.
//!
//! A criterion keeps per-community accumulators and answers four questions
//! the optimizer asks while it moves nodes around: reset to the singleton
//! partition (`init`), take a node out of a community (`remove`), put it in
//! (`insert`) and score a prospective insertion (`gain`). `total` turns the
//! accumulators into the value of the criterion.
//!
//! Gains are *scaled*: for a removed node `i` and two candidates `C1`, `C2`,
//! `F(i in C1) - F(i in C2) = scale() * (gain(i, C1) - gain(i, C2))`. Only
//! the argmax matters to the optimizer, so positive global factors such as
//! `1/2m` are dropped.
//!
//! Every built-in criterion also has a literal ordered-pair evaluator in
//! [`relational`], used to cross-check the accumulator arithmetic.

mod linear;
mod pretreat;
mod relational;
mod separable;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NeighborWeights, Partition};

pub use linear::{
    BalancedModularity, DeviationToIndetermination, DeviationToUniformity, Marcotorchino,
    NewmanGirvan, OwsinskiZadrozny, ZahnCondorcet,
};
pub use pretreat::pretreat;
pub use relational::relational_total;
pub use separable::{Goldberg, ProfileDifference};

/// Default Owsiński-Zadrożny parameter when none is given.
pub const DEFAULT_ALPHA: f64 = 0.5;

/// A quality function the Louvain optimizer can maximize.
///
/// Community ids are slots in `0..g.num_nodes()`; `init` places node `i` in
/// slot `i`. `dw` is always the plain incident weight `d_w(i, C)`, the sum
/// of `w_ij` over the members `j != i` of `C`.
pub trait Criterion: Send {
    fn name(&self) -> &str;

    /// Positive factor linking gain differences to quality differences.
    fn scale(&self) -> f64;

    fn init(&mut self, g: &Graph) -> Result<()>;

    fn remove(&mut self, g: &Graph, i: usize, c: usize, dw: f64);

    fn insert(&mut self, g: &Graph, i: usize, c: usize, dw: f64);

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64;

    /// Unscaled criterion value for the current assignment. Only meaningful
    /// when every node is placed.
    fn total(&self) -> f64;

    /// Accumulators, for criteria built on [`CommunityStats`].
    fn stats(&self) -> Option<&CommunityStats> {
        None
    }
}

/// Per-community sums shared by the built-in criteria.
///
/// `internal[C]` is the ordered-pair weight inside `C` (each edge twice, each
/// loop once), `total_degree[C]` the sum of member degrees, `size[C]` the
/// number of level-0 nodes and `aux[C]` the sum of node auxiliaries.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CommunityStats {
    pub internal: Vec<f64>,
    pub total_degree: Vec<f64>,
    pub size: Vec<f64>,
    pub aux: Vec<f64>,
    pub kappa: usize,
}

impl CommunityStats {
    pub fn singleton(g: &Graph) -> Self {
        let n = g.num_nodes();
        CommunityStats {
            internal: (0..n).map(|i| g.loop_weight(i)).collect(),
            total_degree: (0..n).map(|i| g.weighted_degree(i)).collect(),
            size: (0..n).map(|i| g.node_size(i) as f64).collect(),
            aux: (0..n).map(|i| g.node_aux(i)).collect(),
            kappa: n,
        }
    }

    /// Takes `i` out of `c`; `mass` is the internal weight `i` carried there,
    /// `2 d_w(i, C) + w_ii`.
    pub fn remove(&mut self, g: &Graph, i: usize, c: usize, mass: f64) {
        self.internal[c] -= mass;
        self.total_degree[c] -= g.weighted_degree(i);
        self.aux[c] -= g.node_aux(i);
        self.size[c] -= g.node_size(i) as f64;
        if self.size[c] == 0.0 {
            self.kappa -= 1;
            // exact zeros keep empty slots clean for reuse
            self.internal[c] = 0.0;
            self.total_degree[c] = 0.0;
            self.aux[c] = 0.0;
        }
    }

    pub fn insert(&mut self, g: &Graph, i: usize, c: usize, mass: f64) {
        if self.size[c] == 0.0 {
            self.kappa += 1;
        }
        self.internal[c] += mass;
        self.total_degree[c] += g.weighted_degree(i);
        self.aux[c] += g.node_aux(i);
        self.size[c] += g.node_size(i) as f64;
    }

    /// Indices of non-empty communities.
    pub fn live(&self) -> impl Iterator<Item = usize> + '_ {
        self.size
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0.0)
            .map(|(c, _)| c)
    }
}

/// Internal weight that node `i` brings into a community where it has
/// incident weight `dw`.
#[inline]
pub(crate) fn insertion_mass(g: &Graph, i: usize, dw: f64) -> f64 {
    2.0 * dw + g.loop_weight(i)
}

/// The built-in criteria, by stable short code.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CriterionId {
    NewmanGirvan,
    ZahnCondorcet,
    OwsinskiZadrozny { alpha: f64 },
    Marcotorchino,
    BalancedModularity,
    DeviationToIndetermination,
    DeviationToUniformity,
    Goldberg,
    ProfileDifference,
}

impl CriterionId {
    /// The criteria used in the benchmark tables.
    pub const EXPERIMENTS: [CriterionId; 7] = [
        CriterionId::NewmanGirvan,
        CriterionId::ZahnCondorcet,
        CriterionId::DeviationToIndetermination,
        CriterionId::DeviationToUniformity,
        CriterionId::BalancedModularity,
        CriterionId::Goldberg,
        CriterionId::ProfileDifference,
    ];

    /// All nine criteria, Owsiński-Zadrożny with the given `alpha`.
    pub fn all(alpha: f64) -> [CriterionId; 9] {
        [
            CriterionId::NewmanGirvan,
            CriterionId::ZahnCondorcet,
            CriterionId::OwsinskiZadrozny { alpha },
            CriterionId::Marcotorchino,
            CriterionId::BalancedModularity,
            CriterionId::DeviationToIndetermination,
            CriterionId::DeviationToUniformity,
            CriterionId::Goldberg,
            CriterionId::ProfileDifference,
        ]
    }

    /// Criteria that are linear in the partition indicator.
    pub fn linear(alpha: f64) -> [CriterionId; 7] {
        [
            CriterionId::NewmanGirvan,
            CriterionId::ZahnCondorcet,
            CriterionId::OwsinskiZadrozny { alpha },
            CriterionId::Marcotorchino,
            CriterionId::BalancedModularity,
            CriterionId::DeviationToIndetermination,
            CriterionId::DeviationToUniformity,
        ]
    }

    /// Parses a short code; `alpha` only matters for `oz` and defaults to
    /// [`DEFAULT_ALPHA`].
    pub fn parse(name: &str, alpha: Option<f64>) -> Result<Self> {
        let key = name.trim().to_ascii_lowercase();
        let id = match key.as_str() {
            "ng" | "newman-girvan" | "modularity" => CriterionId::NewmanGirvan,
            "zc" | "zahn-condorcet" => CriterionId::ZahnCondorcet,
            "oz" | "owsinski-zadrozny" => CriterionId::OwsinskiZadrozny {
                alpha: alpha.unwrap_or(DEFAULT_ALPHA),
            },
            "wc" | "marcotorchino" => CriterionId::Marcotorchino,
            "bm" | "balanced-modularity" => CriterionId::BalancedModularity,
            "di" | "deviation-to-indetermination" => CriterionId::DeviationToIndetermination,
            "du" | "deviation-to-uniformity" => CriterionId::DeviationToUniformity,
            "g" | "goldberg" | "michalski-goldberg" => CriterionId::Goldberg,
            "pd" | "profile-difference" => CriterionId::ProfileDifference,
            "mg" | "mancoridis-gansner" => {
                return Err(Error::NotPluggable {
                    name: name.to_string(),
                    reason: "its between-community term depends on the sizes of both \
                             endpoint communities, so a single move changes the \
                             contribution of every community and no local gain exists",
                })
            }
            "sm" | "shi-malik" | "ncut" | "normalized-cut" => {
                return Err(Error::NotPluggable {
                    name: name.to_string(),
                    reason: "with a free number of communities its optimum is the \
                             trivial one-community partition; it needs a fixed \
                             community count",
                })
            }
            "md" | "michalski-decaestecker" => {
                return Err(Error::NotPluggable {
                    name: name.to_string(),
                    reason: "with a free number of communities its optimum is the \
                             trivial all-singletons partition; it needs a fixed \
                             community count",
                })
            }
            _ => return Err(Error::UnknownCriterion(name.to_string())),
        };
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<()> {
        if let CriterionId::OwsinskiZadrozny { alpha } = *self {
            if !(alpha > 0.0 && alpha < 1.0) {
                return Err(Error::InvalidAlpha(alpha));
            }
        }
        Ok(())
    }

    pub fn code(&self) -> &'static str {
        match self {
            CriterionId::NewmanGirvan => "ng",
            CriterionId::ZahnCondorcet => "zc",
            CriterionId::OwsinskiZadrozny { .. } => "oz",
            CriterionId::Marcotorchino => "wc",
            CriterionId::BalancedModularity => "bm",
            CriterionId::DeviationToIndetermination => "di",
            CriterionId::DeviationToUniformity => "du",
            CriterionId::Goldberg => "g",
            CriterionId::ProfileDifference => "pd",
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            CriterionId::OwsinskiZadrozny { alpha } => Some(alpha),
            _ => None,
        }
    }

    /// Criteria whose formulas divide by `2m`.
    pub fn needs_edge_mass(&self) -> bool {
        !matches!(
            self,
            CriterionId::ZahnCondorcet | CriterionId::OwsinskiZadrozny { .. } | CriterionId::Goldberg
        )
    }

    /// Criteria that run on transformed weights, see [`pretreat`].
    pub fn needs_pretreatment(&self) -> bool {
        matches!(self, CriterionId::Marcotorchino | CriterionId::ProfileDifference)
    }

    pub fn build(&self) -> Box<dyn Criterion> {
        match *self {
            CriterionId::NewmanGirvan => Box::<NewmanGirvan>::default(),
            CriterionId::ZahnCondorcet => Box::<ZahnCondorcet>::default(),
            CriterionId::OwsinskiZadrozny { alpha } => Box::new(OwsinskiZadrozny::new(alpha)),
            CriterionId::Marcotorchino => Box::<Marcotorchino>::default(),
            CriterionId::BalancedModularity => Box::<BalancedModularity>::default(),
            CriterionId::DeviationToIndetermination => {
                Box::<DeviationToIndetermination>::default()
            }
            CriterionId::DeviationToUniformity => Box::<DeviationToUniformity>::default(),
            CriterionId::Goldberg => Box::<Goldberg>::default(),
            CriterionId::ProfileDifference => Box::<ProfileDifference>::default(),
        }
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for CriterionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriterionId::parse(s, None)
    }
}

pub(crate) fn check_edge_mass(g: &Graph, name: &'static str) -> Result<f64> {
    let two_m = g.globals().two_m;
    if two_m > 0.0 {
        Ok(two_m)
    } else {
        Err(Error::ZeroEdgeMass { criterion: name })
    }
}

/// Marks a node taken out of its community mid-sweep.
pub const UNASSIGNED: usize = usize::MAX;

/// A criterion together with the node-to-community map it is tracking.
///
/// This is the checked face of the contract: moves are validated against the
/// current assignment before they reach the criterion.
pub struct CriterionState {
    criterion: Box<dyn Criterion>,
    community_of: Vec<usize>,
    occupancy: Vec<usize>,
}

impl CriterionState {
    /// Initializes `criterion` on `g` with every node in its own community.
    pub fn new(mut criterion: Box<dyn Criterion>, g: &Graph) -> Result<Self> {
        criterion.init(g)?;
        let n = g.num_nodes();
        Ok(CriterionState {
            criterion,
            community_of: (0..n).collect(),
            occupancy: vec![1; n],
        })
    }

    /// Initializes and then moves every node into its community in `p`.
    pub fn with_partition(criterion: Box<dyn Criterion>, g: &Graph, p: &Partition) -> Result<Self> {
        if p.len() != g.num_nodes() {
            return Err(Error::PartitionSize {
                expected: g.num_nodes(),
                got: p.len(),
            });
        }
        let mut st = CriterionState::new(criterion, g)?;
        let mut scratch = NeighborWeights::new(g.num_nodes());
        for i in 0..g.num_nodes() {
            let from = st.community_of[i];
            let to = p.community_of(i);
            if from == to {
                continue;
            }
            scratch.collect(g, i, &st.community_of, from);
            st.remove(g, i, from, scratch.weight(from))?;
            st.insert(g, i, to, scratch.weight(to))?;
        }
        Ok(st)
    }

    pub fn criterion(&self) -> &dyn Criterion {
        self.criterion.as_ref()
    }

    pub fn into_criterion(self) -> Box<dyn Criterion> {
        self.criterion
    }

    pub fn num_slots(&self) -> usize {
        self.community_of.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.community_of
    }

    pub fn community_of(&self, i: usize) -> Option<usize> {
        match self.community_of[i] {
            UNASSIGNED => None,
            c => Some(c),
        }
    }

    /// Number of nodes (at this level) currently in slot `c`.
    pub fn occupancy(&self, c: usize) -> usize {
        self.occupancy[c]
    }

    pub fn remove(&mut self, g: &Graph, i: usize, c: usize, dw: f64) -> Result<()> {
        if self.community_of[i] != c {
            return Err(Error::NodeNotInCommunity { node: i, community: c });
        }
        self.criterion.remove(g, i, c, dw);
        self.community_of[i] = UNASSIGNED;
        self.occupancy[c] -= 1;
        Ok(())
    }

    pub fn insert(&mut self, g: &Graph, i: usize, c: usize, dw: f64) -> Result<()> {
        if self.community_of[i] != UNASSIGNED {
            return Err(Error::NodeAlreadyPlaced { node: i });
        }
        self.check_slot(c)?;
        self.criterion.insert(g, i, c, dw);
        self.community_of[i] = c;
        self.occupancy[c] += 1;
        Ok(())
    }

    pub fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> Result<f64> {
        self.check_slot(c)?;
        Ok(self.criterion.gain(g, i, c, dw))
    }

    pub fn total(&self) -> f64 {
        self.criterion.total()
    }

    /// Compacted partition of the current assignment. Panics if a node is
    /// unassigned.
    pub fn partition(&self) -> Partition {
        assert!(
            !self.community_of.contains(&UNASSIGNED),
            "partition requested mid-move"
        );
        Partition::from_labels(self.community_of.iter().copied())
    }

    fn check_slot(&self, c: usize) -> Result<()> {
        if c < self.community_of.len() {
            Ok(())
        } else {
            Err(Error::UnknownCommunity {
                community: c,
                len: self.community_of.len(),
            })
        }
    }

    /// Unchecked access for the optimizer's inner loop.
    pub(crate) fn raw_gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        self.criterion.gain(g, i, c, dw)
    }
}

/// Value of criterion `id` on `g` for partition `p`, through the
/// accumulator path (init, then one move per node).
pub fn evaluate(id: CriterionId, g: &Graph, p: &Partition) -> Result<f64> {
    Ok(CriterionState::with_partition(id.build(), g, p)?.total())
}

#[cfg(test)]
mod tests;
