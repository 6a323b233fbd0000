//! Criteria that are linear in the partition indicator. Each one reduces to
//! a sum of per-community terms over `in`, `tot`, `size` (and `aux` for
//! Marcotorchino) plus a constant, so every gain only reads the target
//! community.

use super::{check_edge_mass, insertion_mass, CommunityStats, Criterion};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Remove/insert/stats shared by every criterion whose accumulators are a
/// plain [`CommunityStats`] in a field named `stats`.
macro_rules! community_bookkeeping {
    () => {
        fn remove(&mut self, g: &Graph, i: usize, c: usize, dw: f64) {
            self.stats.remove(g, i, c, insertion_mass(g, i, dw));
        }

        fn insert(&mut self, g: &Graph, i: usize, c: usize, dw: f64) {
            self.stats.insert(g, i, c, insertion_mass(g, i, dw));
        }

        fn stats(&self) -> Option<&CommunityStats> {
            Some(&self.stats)
        }
    };
}
pub(super) use community_bookkeeping;

/// Sums `term(internal, total_degree, size, aux)` over non-empty communities.
fn per_community(stats: &CommunityStats, term: impl Fn(f64, f64, f64, f64) -> f64) -> f64 {
    stats
        .live()
        .map(|c| term(stats.internal[c], stats.total_degree[c], stats.size[c], stats.aux[c]))
        .sum()
}

/// Newman-Girvan modularity, unnormalized: `sum (w_ij - d_i d_j / 2m) x_ij`.
#[derive(Clone, Debug, Default)]
pub struct NewmanGirvan {
    stats: CommunityStats,
    two_m: f64,
}

impl Criterion for NewmanGirvan {
    fn name(&self) -> &str {
        "ng"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        self.two_m = check_edge_mass(g, "ng")?;
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        dw - g.weighted_degree(i) * self.stats.total_degree[c] / self.two_m
    }

    fn total(&self) -> f64 {
        let two_m = self.two_m;
        per_community(&self.stats, |inw, tot, _, _| inw - tot * tot / two_m)
    }
}

/// Zahn-Condorcet: agreement on present links inside communities plus
/// absent links between them, absent mass measured as `W - w_ij`.
#[derive(Clone, Debug, Default)]
pub struct ZahnCondorcet {
    stats: CommunityStats,
    w_max: f64,
    constant: f64,
}

impl Criterion for ZahnCondorcet {
    fn name(&self) -> &str {
        "zc"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        let k = g.globals();
        let n = k.n0 as f64;
        self.w_max = k.w_max;
        self.constant = k.w_max * n * n - k.two_m;
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        2.0 * dw - self.w_max * g.node_size(i) as f64 * self.stats.size[c]
    }

    fn total(&self) -> f64 {
        let w_max = self.w_max;
        per_community(&self.stats, |inw, _, sz, _| 2.0 * inw - w_max * sz * sz) + self.constant
    }
}

/// Owsiński-Zadrożny: Zahn-Condorcet with the two agreements weighted by
/// `1 - alpha` and `alpha`.
#[derive(Clone, Debug)]
pub struct OwsinskiZadrozny {
    alpha: f64,
    stats: CommunityStats,
    w_max: f64,
    constant: f64,
}

impl OwsinskiZadrozny {
    /// Panics unless `0 < alpha < 1`.
    pub fn new(alpha: f64) -> Self {
        assert!(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
        OwsinskiZadrozny {
            alpha,
            stats: CommunityStats::default(),
            w_max: 0.0,
            constant: 0.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

impl Criterion for OwsinskiZadrozny {
    fn name(&self) -> &str {
        "oz"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        let k = g.globals();
        let n = k.n0 as f64;
        self.w_max = k.w_max;
        self.constant = self.alpha * (k.w_max * n * n - k.two_m);
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        dw - self.alpha * self.w_max * g.node_size(i) as f64 * self.stats.size[c]
    }

    fn total(&self) -> f64 {
        let penalty = self.alpha * self.w_max;
        per_community(&self.stats, |inw, _, sz, _| inw - penalty * sz * sz) + self.constant
    }
}

/// Marcotorchino (A-weighted Condorcet). Runs on the normalized weights
/// produced by [`super::pretreat`]; node auxiliaries hold the diagonal
/// terms `c_i`, and the absent mass of a pair is `(c_i + c_j)/2 - w_ij`.
#[derive(Clone, Debug, Default)]
pub struct Marcotorchino {
    stats: CommunityStats,
    constant: f64,
}

impl Criterion for Marcotorchino {
    fn name(&self) -> &str {
        "wc"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        let two_m = check_edge_mass(g, "wc")?;
        let aux_sum: f64 = (0..g.num_nodes()).map(|i| g.node_aux(i)).sum();
        self.constant = g.globals().n0 as f64 * aux_sum - two_m;
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        let s_i = g.node_size(i) as f64;
        2.0 * dw - 0.5 * (g.node_aux(i) * self.stats.size[c] + self.stats.aux[c] * s_i)
    }

    fn total(&self) -> f64 {
        per_community(&self.stats, |inw, _, sz, aux| 2.0 * inw - sz * aux) + self.constant
    }
}

/// Balanced modularity: modularity on the present links plus modularity on
/// the absent ones. On weighted graphs the absent graph has weights
/// `W - w_ij`, degrees `W n s_i - d_i` and total `W n^2 - 2m`.
#[derive(Clone, Debug, Default)]
pub struct BalancedModularity {
    stats: CommunityStats,
    two_m: f64,
    w_max: f64,
    w_n: f64,
    absent_two_m: f64,
}

impl Criterion for BalancedModularity {
    fn name(&self) -> &str {
        "bm"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        self.two_m = check_edge_mass(g, "bm")?;
        let k = g.globals();
        let n = k.n0 as f64;
        self.w_max = k.w_max;
        self.w_n = k.w_max * n;
        self.absent_two_m = k.w_max * n * n - k.two_m;
        if self.absent_two_m <= 0.0 {
            return Err(Error::ZeroComplementMass);
        }
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        let s_i = g.node_size(i) as f64;
        let d_i = g.weighted_degree(i);
        let sz = self.stats.size[c];
        let tot = self.stats.total_degree[c];
        let absent_d_i = self.w_n * s_i - d_i;
        let absent_tot = self.w_n * sz - tot;
        2.0 * dw - self.w_max * s_i * sz - d_i * tot / self.two_m
            + absent_d_i * absent_tot / self.absent_two_m
    }

    fn total(&self) -> f64 {
        let (w_max, w_n, two_m, absent_two_m) =
            (self.w_max, self.w_n, self.two_m, self.absent_two_m);
        per_community(&self.stats, |inw, tot, sz, _| {
            let absent_tot = w_n * sz - tot;
            2.0 * inw - w_max * sz * sz - tot * tot / two_m + absent_tot * absent_tot / absent_two_m
        })
    }
}

/// Deviation to indetermination: `sum (w_ij - d_i/n - d_j/n + 2m/n^2) x_ij`.
#[derive(Clone, Debug, Default)]
pub struct DeviationToIndetermination {
    stats: CommunityStats,
    n: f64,
    density: f64,
}

impl Criterion for DeviationToIndetermination {
    fn name(&self) -> &str {
        "di"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        let two_m = check_edge_mass(g, "di")?;
        self.n = g.globals().n0 as f64;
        self.density = two_m / (self.n * self.n);
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        let s_i = g.node_size(i) as f64;
        let sz = self.stats.size[c];
        dw - (g.weighted_degree(i) * sz + self.stats.total_degree[c] * s_i) / self.n
            + self.density * s_i * sz
    }

    fn total(&self) -> f64 {
        let (n, density) = (self.n, self.density);
        per_community(&self.stats, |inw, tot, sz, _| {
            inw - 2.0 * sz * tot / n + density * sz * sz
        })
    }
}

/// Deviation to uniformity: `sum (w_ij - 2m/n^2) x_ij`.
#[derive(Clone, Debug, Default)]
pub struct DeviationToUniformity {
    stats: CommunityStats,
    density: f64,
}

impl Criterion for DeviationToUniformity {
    fn name(&self) -> &str {
        "du"
    }

    fn scale(&self) -> f64 {
        2.0
    }

    fn init(&mut self, g: &Graph) -> Result<()> {
        let two_m = check_edge_mass(g, "du")?;
        let n = g.globals().n0 as f64;
        self.density = two_m / (n * n);
        self.stats = CommunityStats::singleton(g);
        Ok(())
    }

    community_bookkeeping!();

    fn gain(&self, g: &Graph, i: usize, c: usize, dw: f64) -> f64 {
        dw - self.density * g.node_size(i) as f64 * self.stats.size[c]
    }

    fn total(&self) -> f64 {
        let density = self.density;
        per_community(&self.stats, |inw, _, sz, _| inw - density * sz * sz)
    }
}
