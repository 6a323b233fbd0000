//! Brute force over every set partition of a small graph.

use crate::criteria::{relational_total, CriterionId};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

/// Default node cap for exhaustive search; Bell(10) = 115975 partitions.
pub const DEFAULT_CAP: usize = 10;

/// Iterates the set partitions of `0..n` as restricted-growth strings:
/// `a[0] = 0` and `a[i] <= 1 + max(a[..i])`. Each partition comes out once,
/// already in canonical (first-appearance) labeling.
#[derive(Clone, Debug)]
pub struct PartitionEnumerator {
    labels: Vec<usize>,
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionEnumerator {
    pub fn new(n: usize) -> Self {
        PartitionEnumerator {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.labels.len();
        for i in (1..n).rev() {
            if self.labels[i] <= self.prefix_max[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[j - 1].max(self.labels[j - 1]);
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionEnumerator {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Partition::from_labels(self.labels.iter().copied()))
    }
}

/// All partitions of `n` nodes, refusing `n > cap`.
pub fn enumerate_partitions(n: usize, cap: usize) -> Result<PartitionEnumerator> {
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(PartitionEnumerator::new(n))
}

/// Best partition of `g0` for `id` by exhaustive search over the relational
/// evaluator. Ties go to the first partition enumerated.
pub fn exact_optimum(id: CriterionId, g0: &Graph, cap: usize) -> Result<(Partition, f64)> {
    let mut best: Option<(Partition, f64)> = None;
    for p in enumerate_partitions(g0.num_nodes(), cap)? {
        let f = relational_total(id, g0, &p)?;
        if best.as_ref().map_or(true, |(_, b)| f > *b) {
            best = Some((p, f));
        }
    }
    Ok(best.expect("at least one partition"))
}

/// Change in the relational value when node `i` moves to community `c` of
/// `p`; `c == p.num_communities()` names a fresh empty community.
pub fn delta_oracle(
    id: CriterionId,
    g0: &Graph,
    p: &Partition,
    i: usize,
    c: usize,
) -> Result<f64> {
    let k = p.num_communities();
    if c > k {
        return Err(Error::UnknownCommunity { community: c, len: k + 1 });
    }
    let mut labels = p.as_slice().to_vec();
    labels[i] = c;
    let moved = Partition::from_labels(labels);
    Ok(relational_total(id, g0, &moved)? - relational_total(id, g0, p)?)
}
