//! Runs every built-in criterion on the karate club graph with ten seeds and
//! prints the spread of community counts and qualities.

use genlouvain::bench::{bench_graph, format_tables, BENCH_PRECISION};
use genlouvain::io::read_edge_list;
use genlouvain::{CriterionId, RunConfig};

fn main() -> genlouvain::Result<()> {
    let (graph, _) = read_edge_list(include_str!("../data/karate.txt").as_bytes())?;
    let base = RunConfig::new(CriterionId::NewmanGirvan).precision(BENCH_PRECISION);
    let rows = bench_graph(&graph, &CriterionId::all(0.5), 10, &base);
    print!("{}", format_tables(&[("karate".to_string(), rows)]));
    Ok(())
}
