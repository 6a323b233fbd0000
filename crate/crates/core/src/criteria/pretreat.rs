use super::CriterionId;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rewrites a level-0 graph into the weights a criterion optimizes.
///
/// * Marcotorchino: unweighted input only. Every node gets a unit loop, then
///   `w'_ij = 2 a_ij / (d_i + d_j)` with degrees taken after the loops are
///   added; node auxiliaries hold the new diagonal `w'_ii = 1 / d_i`.
/// * Profile difference: `w'_ij = 2 w_ij / (d_i + d_j)` on the raw weights,
///   diagonal included. The level-0 constants of the result carry
///   `sum w'_ij^2`.
/// * Every other criterion: the graph is returned unchanged.
pub fn pretreat(id: CriterionId, g0: &Graph) -> Result<Graph> {
    assert!(g0.is_level0(), "pretreatment applies to level-0 graphs");
    match id {
        CriterionId::Marcotorchino => marcotorchino_weights(g0),
        CriterionId::ProfileDifference => profile_weights(g0),
        _ => Ok(g0.clone()),
    }
}

fn marcotorchino_weights(g0: &Graph) -> Result<Graph> {
    if !g0.is_unweighted() {
        return Err(Error::WeightedInputNotSupported);
    }
    let n = g0.num_nodes();
    let degree: Vec<f64> = (0..n).map(|i| g0.degree_count(i) as f64 + 1.0).collect();
    let diagonal: Vec<f64> = degree.iter().map(|d| 1.0 / d).collect();
    let edges = g0
        .edges()
        .filter(|&(u, v, _)| u != v)
        .map(|(u, v, _)| (u, v, 2.0 / (degree[u] + degree[v])))
        .chain(diagonal.iter().enumerate().map(|(i, &w)| (i, i, w)))
        .collect::<Vec<_>>();
    Ok(Graph::from_edges(n, edges).with_aux(diagonal))
}

fn profile_weights(g0: &Graph) -> Result<Graph> {
    let edges = g0
        .edges()
        .map(|(u, v, w)| {
            let denom = g0.weighted_degree(u) + g0.weighted_degree(v);
            if denom > 0.0 {
                Ok((u, v, 2.0 * w / denom))
            } else {
                Err(Error::ZeroDegreeNode { u, v })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Graph::from_edges(g0.num_nodes(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
    }

    #[test]
    fn identity_for_ng() {
        let g = triangle();
        let t = pretreat(CriterionId::NewmanGirvan, &g).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn profile_on_triangle() {
        let t = pretreat(CriterionId::ProfileDifference, &triangle()).unwrap();
        for (_, _, w) in t.edges() {
            assert_eq!(w, 0.5);
        }
        assert_eq!(t.globals().sq_weight_sum, 1.5);
    }

    #[test]
    fn marcotorchino_on_triangle() {
        let t = pretreat(CriterionId::Marcotorchino, &triangle()).unwrap();
        let third = 1.0 / 3.0;
        for i in 0..3 {
            assert!((t.loop_weight(i) - third).abs() < 1e-15);
            assert!((t.node_aux(i) - third).abs() < 1e-15);
            for (_, w) in t.neighbors(i) {
                assert!((w - third).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn marcotorchino_keeps_existing_unit_loop() {
        let g = Graph::from_edges(2, [(0, 1, 1.0), (0, 0, 1.0)]);
        let t = pretreat(CriterionId::Marcotorchino, &g).unwrap();
        assert_eq!(t.loop_weight(0), 0.5);
        assert_eq!(t.loop_weight(1), 0.5);
    }

    #[test]
    fn marcotorchino_rejects_weights() {
        let g = Graph::from_edges(2, [(0, 1, 2.0)]);
        assert!(matches!(
            pretreat(CriterionId::Marcotorchino, &g),
            Err(Error::WeightedInputNotSupported)
        ));
    }

    #[test]
    fn profile_rejects_zero_degree_edge() {
        let g = Graph::from_edges(3, [(0, 1, 0.0), (1, 2, 0.0)]);
        assert!(matches!(
            pretreat(CriterionId::ProfileDifference, &g),
            Err(Error::ZeroDegreeNode { .. })
        ));
    }
}
