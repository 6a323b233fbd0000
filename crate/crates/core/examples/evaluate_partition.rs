//! Scores a hand-written partition of the karate club under every criterion,
//! with both the per-community and the pairwise evaluator.

use genlouvain::io::{read_edge_list, read_partition};
use genlouvain::{evaluate, pretreat, relational_total, CriterionId};

// the two factions after the club split
const FACTIONS: &str = "1 0\n2 0\n3 0\n4 0\n5 0\n6 0\n7 0\n8 0\n9 1\n10 1\n11 0\n12 0\n13 0\n14 0\n15 1\n16 1\n17 0\n\
18 0\n19 1\n20 0\n21 1\n22 0\n23 1\n24 1\n25 1\n26 1\n27 1\n28 1\n29 1\n30 1\n31 1\n32 1\n33 1\n34 1\n";

fn main() -> genlouvain::Result<()> {
    let (graph, labels) = read_edge_list(include_str!("../data/karate.txt").as_bytes())?;
    let p = read_partition(FACTIONS.as_bytes(), &labels)?;
    println!("crit       per-community         pairwise");
    for id in CriterionId::all(0.5) {
        let g0 = pretreat(id, &graph)?;
        println!(
            "{:<4} {:>18.6} {:>18.6}",
            id.code(),
            evaluate(id, &g0, &p)?,
            relational_total(id, &g0, &p)?
        );
    }
    Ok(())
}
