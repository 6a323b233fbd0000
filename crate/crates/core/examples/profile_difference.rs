//! Shows the degree normalization behind the profile-difference criterion
//! and runs it on the karate club.

use genlouvain::io::read_edge_list;
use genlouvain::{detect, pretreat, CriterionId, Graph, RunConfig};

fn main() -> genlouvain::Result<()> {
    let star = Graph::from_edges(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (2, 3, 1.0)]);
    let normalized = pretreat(CriterionId::ProfileDifference, &star)?;
    println!("normalized weights 2w/(d_i + d_j):");
    for (u, v, w) in normalized.edges() {
        println!("  {u} - {v}: {w:.4}");
    }
    println!("sum of squares {:.4}", normalized.globals().sq_weight_sum);

    let (karate, _) = read_edge_list(include_str!("../data/karate.txt").as_bytes())?;
    let h = detect(&karate, &RunConfig::new(CriterionId::ProfileDifference))?;
    println!("karate: {} communities, quality {:.4}", h.kappa_final(), h.final_quality());
    Ok(())
}
