//! Non-linear criteria whose partition transform only looks at the size of
//! the community a pair sits in, so each community's term stays local.

use super::linear::community_bookkeeping;
use super::{check_edge_mass, insertion_mass, CommunityStats, Criterion};
use crate::error::Result;
use crate::graph::Graph;

/// Michalski-Goldberg density: `sum_C in[C] / size[C]`.
#[derive(Clone, Debug, Default)]
pub struct Goldberg {
    stats: CommunityStats,
}

impl Criterion for Goldberg {
    fn name(&self) -> &str {
        "g"
    }

    fn scale(&self) -> f64 {
        1.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        let mass = insertion_mass(g, i, dw);
        let s_i = g.node_size(i) as f64;
        let sz = self.stats.size[c];
        if sz == 0.0 {
            mass / s_i
        } else {
            let inw = self.stats.internal[c];
            (inw + mass) / (sz + s_i) - inw / sz
        }
    }

    fn total(&self) -> f64 {
        self.stats
            .live()
            .map(|c| self.stats.internal[c] / self.stats.size[c])
            .sum()
    }
}

/// Profile difference, maximized as `2 sum_C in'[C]/size[C] - kappa - S`
/// over the normalized weights produced by [`super::pretreat`]. `S` is the
/// sum of squared normalized weights, read from the level-0 constants.
#[derive(Clone, Debug, Default)]
pub struct ProfileDifference {
    stats: CommunityStats,
    sq_sum: f64,
}

impl ProfileDifference {
    /// `d'_w(i, C) = 2 sum_{j in C} w_ij + w_ii`: the whole internal mass
    /// `i` adds to `in'[C]`.
    fn profile_mass(g: &Graph, i: usize, dw: f64) -> f64 {
        2.0 * dw + g.loop_weight(i)
    }

    pub fn kappa(&self) -> usize {
        self.stats.kappa
    }
}

impl Criterion for ProfileDifference {
    fn name(&self) -> &str {
        "pd"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        check_edge_mass(g, "pd")?;
        self.sq_sum = g.globals().sq_weight_sum;
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    fn remove(&mut self, g: &Graph, i: usize, c: usize, dw: f64) {
        self.stats.remove(g, i, c, Self::profile_mass(g, i, dw));
    }

    fn insert(&mut self, g: &Graph, i: usize, c: usize, dw: f64) {
        self.stats.insert(g, i, c, Self::profile_mass(g, i, dw));
    }

    fn stats(&self) -> Option<&CommunityStats> {
        Some(&self.stats)
    }

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        let mass = Self::profile_mass(g, i, dw);
        let s_i = g.node_size(i) as f64;
        let sz = self.stats.size[c];
        if sz == 0.0 {
            mass / s_i - 0.5
        } else {
            let inw = self.stats.internal[c];
            (inw + mass) / (sz + s_i) - inw / sz
        }
    }

    fn total(&self) -> f64 {
        let density: f64 = self
            .stats
            .live()
            .map(|c| self.stats.internal[c] / self.stats.size[c])
            .sum();
        2.0 * density - self.stats.kappa as f64 - self.sq_sum
    }
}
