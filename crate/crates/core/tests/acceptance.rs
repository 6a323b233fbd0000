//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! fails. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use genlouvain::graph::NeighborWeights;
use genlouvain::io::read_edge_list;
use genlouvain::oracle::{exact_optimum, DEFAULT_CAP};
use genlouvain::synth::{planted_partition, random_graph, random_partition, recovered_groups, Weights};
use genlouvain::{
    aggregate, detect, evaluate, pretreat, relational_total, run, CriterionId, CriterionState, Error, Graph,
    Partition, RunConfig,
};

const TOL: f64 = 1e-9;
const KARATE: &str = include_str!("../data/karate.txt");

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

/// Random graph with at least one edge and a unit-weight copy of it.
fn sample_graph(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>, p_range: (f64, f64), weighted: bool) -> (Graph, Graph) {
    loop {
        let n = rng.gen_range(n_range.clone());
        let weights = if weighted { Weights::Uniform(0.0, 5.0) } else { Weights::Unit };
        let g = random_graph(n, rng.gen_range(p_range.0..=p_range.1), weights, rng);
        if g.globals().two_m > 0.0 {
            let unit = Graph::from_edges(n, g.edges().map(|(u, v, _)| (u, v, 1.0)));
            return (g, unit);
        }
    }
}

/// The level-0 graph a criterion runs on; WC only accepts the unit copy.
fn level0(id: CriterionId, g: &Graph, unit: &Graph) -> Graph {
    let raw = if id == CriterionId::Marcotorchino { unit } else { g };
    pretreat(id, raw).expect("pretreatment")
}

fn evaluator_equivalence() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    let mut checks = 0;
    for graph in 0..200 {
        let (g, unit) = sample_graph(&mut rng, 2..=50, (0.1, 0.5), graph % 2 == 1);
        let n = g.num_nodes();
        let p = match graph % 5 {
            0 => Partition::singleton(n),
            1 => Partition::whole(n),
            _ => random_partition(n, rng.gen_range(1..=n), &mut rng),
        };
        for id in CriterionId::all(0.3) {
            let g0 = level0(id, &g, &unit);
            let a = evaluate(id, &g0, &p).unwrap();
            let r = relational_total(id, &g0, &p).unwrap();
            worst = worst.max(rel_err(a, r));
            checks += 1;
        }
    }
    let secs = started.elapsed().as_secs_f64();
    Outcome::new(
        worst <= TOL && secs < 60.0,
        format!("{checks} comparisons, worst relative error {worst:.2e}, {secs:.2} s"),
    )
}

/// One probe: move a node of `g` (level 0 or a meta-graph of `g0` under
/// `coarse`) and compare the relational change against the gain difference.
/// Returns `(dF, dgain)`.
fn probe(
    id: CriterionId,
    g0: &Graph,
    coarse: &Partition,
    g: &Graph,
    upper: &Partition,
    rng: &mut ChaCha8Rng,
) -> (f64, f64, f64) {
    let m = g.num_nodes();
    let mut st = CriterionState::with_partition(id.build(), g, upper).unwrap();
    let i = rng.gen_range(0..m);
    let k = upper.num_communities();
    let target = rng.gen_range(0..=k);
    let c_old = upper.community_of(i);

    let mut scratch = NeighborWeights::new(m);
    scratch.collect(g, i, st.assignment(), c_old);
    st.remove(g, i, c_old, scratch.weight(c_old)).unwrap();
    let slot = if target < k {
        target
    } else {
        (0..m).find(|&c| st.occupancy(c) == 0).unwrap_or(c_old)
    };
    let d_gain = st.gain(g, i, slot, scratch.weight(slot)).unwrap() - st.gain(g, i, c_old, scratch.weight(c_old)).unwrap();

    let mut labels = upper.as_slice().to_vec();
    labels[i] = target;
    let before = relational_total(id, g0, &coarse.compose(upper)).unwrap();
    let after = relational_total(id, g0, &coarse.compose(&Partition::from_labels(labels))).unwrap();
    (after - before, d_gain, before)
}

fn gain_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = Vec::new();
    for id in CriterionId::all(0.4) {
        let mut lambda: Option<f64> = None;
        let mut worst = 0.0f64;
        let mut probes = 0;
        while probes < 1000 {
            let (g, unit) = sample_graph(&mut rng, 3..=16, (0.2, 0.6), probes % 2 == 1);
            let g0 = level0(id, &g, &unit);
            let n = g0.num_nodes();
            // every third probe runs on an aggregated level
            let (coarse, g) = if probes % 3 == 0 {
                let coarse = random_partition(n, rng.gen_range(2..=n), &mut rng);
                let meta = aggregate(&g0, &coarse);
                (coarse, meta)
            } else {
                (Partition::singleton(n), g0.clone())
            };
            let m = g.num_nodes();
            let upper = random_partition(m, rng.gen_range(1..=m), &mut rng);
            let (d_f, d_gain, base) = probe(id, &g0, &coarse, &g, &upper, &mut rng);
            probes += 1;
            let scale = base.abs().max(1.0);
            let lam = match lambda {
                Some(l) => l,
                None if d_gain.abs() * 1e6 > scale => {
                    let l = (d_f / d_gain).round();
                    lambda = Some(l);
                    l
                }
                None => continue,
            };
            worst = worst.max((d_f - lam * d_gain).abs() / scale);
        }
        let lam = lambda.unwrap_or(f64::NAN);
        let expected = id.build().scale();
        if !(worst <= TOL) || lam != expected {
            failures.push(format!("{id}: lambda {lam}, worst {worst:.2e}"));
        }
    }
    Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            "1000 probes x 9 criteria, lambda = 2 (linear, pd) and 1 (g)".to_string()
        } else {
            failures.join("; ")
        },
    )
}

fn oracle_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let graphs: Vec<(Graph, Graph)> = (0..50)
        .map(|k| sample_graph(&mut rng, 3..=7, (0.2, 0.7), k % 2 == 1))
        .collect();
    let mut violations = Vec::new();
    let mut rates = Vec::new();
    for id in CriterionId::all(0.5) {
        let mut attained = 0;
        for (k, (g, unit)) in graphs.iter().enumerate() {
            let g0 = level0(id, g, unit);
            let (_, best) = exact_optimum(id, &g0, DEFAULT_CAP).unwrap();
            let found = run(&g0, &RunConfig::new(id).seed(k as u64)).unwrap().final_quality();
            let slack = TOL * best.abs().max(1.0);
            if found > best + slack {
                violations.push(format!("{id} graph {k}: {found} > {best}"));
            }
            if found >= best - slack {
                attained += 1;
            }
        }
        let rate = attained as f64 / graphs.len() as f64;
        rates.push(format!("{} {:.0}%{}", id.code(), 100.0 * rate, if rate < 0.6 { "*" } else { "" }));
    }
    let mut detail = format!("optimum attained: {}", rates.join(", "));
    if detail.contains('*') {
        detail.push_str(" (* below the 60% soft target)");
    }
    if !violations.is_empty() {
        detail = format!("bound violated: {}", violations.join("; "));
    }
    Outcome::new(violations.is_empty(), detail)
}

fn karate_table() -> Outcome {
    let (g, _) = read_edge_list(KARATE.as_bytes()).unwrap();
    let expected = [
        (CriterionId::NewmanGirvan, 4.0),
        (CriterionId::ZahnCondorcet, 19.0),
        (CriterionId::DeviationToIndetermination, 4.0),
        (CriterionId::DeviationToUniformity, 5.0),
        (CriterionId::BalancedModularity, 4.0),
        (CriterionId::Goldberg, 10.0),
        (CriterionId::ProfileDifference, 3.0),
    ];
    let started = Instant::now();
    let mut pass = true;
    let mut cells = Vec::new();
    for (id, target) in expected {
        let mean = (0..10)
            .map(|seed| {
                let cfg = RunConfig::new(id).precision(5e-3).seed(seed);
                detect(&g, &cfg).unwrap().kappa_final() as f64
            })
            .sum::<f64>()
            / 10.0;
        pass &= (mean - target).abs() <= 2.0;
        cells.push(format!("{} {mean:.1}/{target}", id.code()));
    }
    let secs = started.elapsed().as_secs_f64();
    Outcome::new(pass && secs < 5.0, format!("{} in {secs:.2} s", cells.join(", ")))
}

fn planted_recovery() -> Outcome {
    let (g, truth) = planted_partition(20, 500, 0.6, 0.0004, 7);
    let mut pass = true;
    let mut cells = Vec::new();
    for id in CriterionId::linear(0.5) {
        let started = Instant::now();
        let h = detect(&g, &RunConfig::new(id).seed(1)).unwrap();
        let secs = started.elapsed().as_secs_f64();
        let found = recovered_groups(&truth, &h.flat);
        pass &= found >= 15 && secs < 30.0;
        cells.push(format!("{} {found}/20 {secs:.2}s", id.code()));
    }
    Outcome::new(pass, format!("n = 10000, {} edges: {}", g.num_edges(), cells.join(", ")))
}

fn monotonicity_and_termination() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut graphs: Vec<(Graph, Graph)> = (0..40)
        .map(|k| sample_graph(&mut rng, 2..=120, (0.02, 0.5), k % 2 == 1))
        .collect();
    let (karate, _) = read_edge_list(KARATE.as_bytes()).unwrap();
    graphs.push((karate.clone(), karate));
    let (planted, _) = planted_partition(8, 60, 0.5, 0.02, 9);
    graphs.push((planted.clone(), planted));

    let mut problems = Vec::new();
    let mut runs = 0;
    for (k, (g, unit)) in graphs.iter().enumerate() {
        for id in CriterionId::all(0.5) {
            let raw = if id == CriterionId::Marcotorchino { unit } else { g };
            for precision in [1e-6, 5e-3] {
                runs += 1;
                match detect(raw, &RunConfig::new(id).precision(precision).seed(k as u64)) {
                    Ok(h) => {
                        let mut previous = h.initial_quality;
                        for (level, l) in h.levels.iter().enumerate() {
                            if l.quality < previous - TOL * previous.abs().max(1.0) {
                                problems.push(format!("{id} graph {k} level {level} decreased"));
                            }
                            previous = l.quality;
                        }
                    }
                    Err(e) => problems.push(format!("{id} graph {k}: {e}")),
                }
            }
        }
    }
    Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("{runs} runs, qualities non-decreasing, no sweep cap hit")
        } else {
            problems.join("; ")
        },
    )
}

fn aggregation_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let (g, unit) = sample_graph(&mut rng, 2..=40, (0.1, 0.5), k % 2 == 1);
        let n = g.num_nodes();
        let p = random_partition(n, rng.gen_range(1..=n), &mut rng);
        for id in CriterionId::all(0.5) {
            let g0 = level0(id, &g, &unit);
            let meta = aggregate(&g0, &p);
            let coarse = evaluate(id, &meta, &Partition::singleton(meta.num_nodes())).unwrap();
            let fine = relational_total(id, &g0, &p).unwrap();
            worst = worst.max(rel_err(coarse, fine));
        }
    }
    Outcome::new(worst <= TOL, format!("100 pairs x 9 criteria, worst relative error {worst:.2e}"))
}

fn negative_boundary() -> Outcome {
    let mut problems = Vec::new();
    for name in ["Mancoridis-Gansner", "Shi-Malik", "Michalski-Decaestecker", "mg", "sm", "md"] {
        match CriterionId::parse(name, None) {
            Err(e @ Error::NotPluggable { .. }) if e.to_string().contains("not pluggable") => {}
            other => problems.push(format!("{name}: {other:?}")),
        }
    }
    let weighted = Graph::from_edges(3, [(0, 1, 2.0), (1, 2, 1.0)]);
    match detect(&weighted, &RunConfig::new(CriterionId::Marcotorchino)) {
        Err(Error::WeightedInputNotSupported) => {}
        other => problems.push(format!("wc on weighted input: {:?}", other.map(|h| h.kappa_final()))),
    }
    Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            "mg, sm, md rejected as non-pluggable; wc rejects weighted input".to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Outcome); 8] = [
        ("evaluator equivalence", evaluator_equivalence),
        ("gain consistency", gain_consistency),
        ("oracle bound", oracle_bound),
        ("karate community counts", karate_table),
        ("planted partition recovery", planted_recovery),
        ("monotonicity and termination", monotonicity_and_termination),
        ("aggregation invariance", aggregation_invariance),
        ("negative boundary", negative_boundary),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let outcome = check();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{tag}  {name}: {}", outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance check(s) failed");
        ExitCode::FAILURE
    }
}
