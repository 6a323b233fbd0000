//! Prints the level-by-level coarsening of a run on a planted-partition
//! graph.

use genlouvain::synth::planted_partition;
use genlouvain::{detect, CriterionId, RunConfig};

fn main() -> genlouvain::Result<()> {
    let (graph, _) = planted_partition(12, 80, 0.3, 0.01, 3);
    let h = detect(&graph, &RunConfig::new(CriterionId::DeviationToIndetermination).seed(9))?;
    println!("initial quality {:.4}", h.initial_quality);
    for (k, (level, flat)) in h.levels.iter().zip(h.flat_levels()).enumerate() {
        println!(
            "level {k}: {:>4} nodes {:>6} edges -> {:>4} communities, {} sweeps, {} moves, quality {:.4}",
            level.graph.num_nodes(),
            level.graph.num_edges(),
            flat.num_communities(),
            level.sweeps,
            level.moves,
            level.quality
        );
    }
    println!("elapsed {:?}", h.elapsed);
    Ok(())
}
