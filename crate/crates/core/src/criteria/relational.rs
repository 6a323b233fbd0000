use super::CriterionId;
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

/// Value of criterion `id` on a level-0 graph, by the literal double sum
/// over ordered node pairs `(i, j)`, diagonal included.
///
/// Shares nothing with the accumulator path but the weight matrix: degrees,
/// `2m` and `S` are recomputed from dense rows here. For Marcotorchino and
/// profile difference `g0` must already be pretreated. Cost is `O(n^2)`.
pub fn relational_total(id: CriterionId, g0: &Graph, p: &Partition) -> Result<f64> {
    assert!(g0.is_level0(), "relational evaluation needs a level-0 graph");
    let n = g0.num_nodes();
    if p.len() != n {
        return Err(Error::PartitionSize {
            expected: n,
            got: p.len(),
        });
    }
    let w = g0.dense_weights();
    let degree: Vec<f64> = w.iter().map(|row| row.iter().sum()).collect();
    let two_m: f64 = degree.iter().sum();
    if id.needs_edge_mass() && !(two_m > 0.0) {
        return Err(Error::ZeroEdgeMass { criterion: id.code() });
    }
    let w_max = g0.globals().w_max;
    let nf = n as f64;
    let label = p.as_slice();
    let sizes: Vec<f64> = p.sizes().into_iter().map(|s| s as f64).collect();
    let same = |i: usize, j: usize| if label[i] == label[j] { 1.0 } else { 0.0 };
    // 2 x_ij / (|C_i| + |C_j|)
    let x_hat = |i: usize, j: usize| {
        2.0 * same(i, j) / (sizes[label[i]] + sizes[label[j]])
    };

    let mut f = 0.0;
    match id {
        CriterionId::NewmanGirvan => {
            for i in 0..n {
                for j in 0..n {
                    f += (w[i][j] - degree[i] * degree[j] / two_m) * same(i, j);
                }
            }
        }
        CriterionId::ZahnCondorcet => {
            for i in 0..n {
                for j in 0..n {
                    let x = same(i, j);
                    f += w[i][j] * x + (w_max - w[i][j]) * (1.0 - x);
                }
            }
        }
        CriterionId::OwsinskiZadrozny { alpha } => {
            for i in 0..n {
                for j in 0..n {
                    let x = same(i, j);
                    f += (1.0 - alpha) * w[i][j] * x + alpha * (w_max - w[i][j]) * (1.0 - x);
                }
            }
        }
        CriterionId::Marcotorchino => {
            for i in 0..n {
                for j in 0..n {
                    let x = same(i, j);
                    let absent = 0.5 * (w[i][i] + w[j][j]) - w[i][j];
                    f += w[i][j] * x + absent * (1.0 - x);
                }
            }
        }
        CriterionId::BalancedModularity => {
            let absent_degree: Vec<f64> = w
                .iter()
                .map(|row| row.iter().map(|wij| w_max - wij).sum())
                .collect();
            let absent_two_m: f64 = absent_degree.iter().sum();
            if !(absent_two_m > 0.0) {
                return Err(Error::ZeroComplementMass);
            }
            for i in 0..n {
                for j in 0..n {
                    let x = same(i, j);
                    let present = w[i][j] - degree[i] * degree[j] / two_m;
                    let absent =
                        (w_max - w[i][j]) - absent_degree[i] * absent_degree[j] / absent_two_m;
                    f += present * x + absent * (1.0 - x);
                }
            }
        }
        CriterionId::DeviationToIndetermination => {
            for i in 0..n {
                for j in 0..n {
                    let coef = w[i][j] - degree[i] / nf - degree[j] / nf + two_m / (nf * nf);
                    f += coef * same(i, j);
                }
            }
        }
        CriterionId::DeviationToUniformity => {
            for i in 0..n {
                for j in 0..n {
                    f += (w[i][j] - two_m / (nf * nf)) * same(i, j);
                }
            }
        }
        CriterionId::Goldberg => {
            for i in 0..n {
                for j in 0..n {
                    f += w[i][j] * x_hat(i, j);
                }
            }
        }
        CriterionId::ProfileDifference => {
            let mut sq = 0.0;
            for i in 0..n {
                for j in 0..n {
                    f += 2.0 * w[i][j] * x_hat(i, j);
                    sq += w[i][j] * w[i][j];
                }
            }
            f -= p.num_communities() as f64 + sq;
        }
    }
    Ok(f)
}
