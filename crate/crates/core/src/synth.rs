//! Random graph generators and a planted-partition recovery score.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Partition};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Weights {
    Unit,
    /// Uniform in `[lo, hi)`.
    Uniform(f64, f64),
}

/// Calls `f(u, v)` for each pair `u > v` of `0..n` kept with probability `p`,
/// skipping geometrically between kept pairs.
pub fn sample_pairs<R: Rng>(n: usize, p: f64, rng: &mut R, mut f: impl FnMut(usize, usize)) {
    if n < 2 || p <= 0.0 {
        return;
    }
    if p >= 1.0 {
        for u in 1..n {
            for v in 0..u {
                f(u, v);
            }
        }
        return;
    }
    let log_q = (1.0 - p).ln();
    let (mut u, mut v) = (1usize, -1i64);
    loop {
        let r: f64 = rng.gen();
        v += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while v >= u as i64 && u < n {
            v -= u as i64;
            u += 1;
        }
        if u >= n {
            break;
        }
        f(u, v as usize);
    }
}

/// Erdős-Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, weights: Weights, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    sample_pairs(n, p, rng, |u, v| pairs.push((u, v)));
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| {
            let w = match weights {
                Weights::Unit => 1.0,
                Weights::Uniform(lo, hi) => rng.gen_range(lo..hi),
            };
            (u, v, w)
        })
        .collect();
    Graph::from_edges(n, edges)
}

/// Uniformly random labels in `0..k`, compacted.
pub fn random_partition<R: Rng>(n: usize, k: usize, rng: &mut R) -> Partition {
    Partition::from_labels((0..n).map(|_| rng.gen_range(0..k.max(1))))
}

/// Planted-partition graph: `groups` blocks of `size` consecutive nodes,
/// pairs inside a block linked with probability `p_in`, across blocks with
/// `p_out`. Returns the graph and the block of every node.
pub fn planted_partition(
    groups: usize,
    size: usize,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> (Graph, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = groups * size;
    let truth: Vec<usize> = (0..n).map(|i| i / size).collect();
    let mut edges = Vec::new();
    for g in 0..groups {
        let base = g * size;
        sample_pairs(size, p_in, &mut rng, |u, v| edges.push((base + u, base + v, 1.0)));
    }
    sample_pairs(n, p_out, &mut rng, |u, v| {
        if truth[u] != truth[v] {
            edges.push((u, v, 1.0));
        }
    });
    (Graph::from_edges(n, edges), truth)
}

/// Counts planted groups recovered by majority mapping: a group counts when
/// a single detected community holds more than half of the group and the
/// group supplies more than half of that community.
pub fn recovered_groups(truth: &[usize], found: &Partition) -> usize {
    assert_eq!(truth.len(), found.len());
    let mut overlap: HashMap<(usize, usize), usize> = HashMap::new();
    let mut group_size: HashMap<usize, usize> = HashMap::new();
    for (i, &t) in truth.iter().enumerate() {
        *overlap.entry((t, found.community_of(i))).or_default() += 1;
        *group_size.entry(t).or_default() += 1;
    }
    let community_size = found.sizes();
    let mut best: HashMap<usize, (usize, usize)> = HashMap::new();
    for (&(t, c), &k) in &overlap {
        let entry = best.entry(t).or_insert((c, 0));
        if k > entry.1 || (k == entry.1 && c < entry.0) {
            *entry = (c, k);
        }
    }
    best.iter()
        .filter(|(t, (c, k))| 2 * k > group_size[t] && 2 * k > community_size[*c])
        .count()
}
