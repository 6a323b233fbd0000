//! Detects communities in Zachary's karate club with modularity and prints
//! each community's members.

use genlouvain::io::read_edge_list;
use genlouvain::{detect, CriterionId, RunConfig};

fn main() -> genlouvain::Result<()> {
    let (graph, labels) = read_edge_list(include_str!("../data/karate.txt").as_bytes())?;
    let h = detect(&graph, &RunConfig::new(CriterionId::NewmanGirvan).seed(42))?;

    println!("modularity numerator {:.4}", h.final_quality());
    println!("modularity {:.4}", h.final_quality() / graph.globals().two_m);
    for (c, members) in h.flat.members().iter().enumerate() {
        let names: Vec<&str> = members.iter().map(|&i| labels.name(i)).collect();
        println!("community {c}: {}", names.join(" "));
    }
    Ok(())
}
