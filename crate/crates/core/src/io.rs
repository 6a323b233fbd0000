//! Text formats.
//!
//! Edge lists hold one `src dst [weight]` record per line, whitespace
//! separated; blank lines and lines starting with `#` are ignored. Labels are
//! arbitrary tokens, mapped to dense ids in order of first appearance.
//! Missing weights default to 1 and repeated pairs are summed.
//!
//! Partition files hold one `label<TAB>community` line per node, in node
//! order, community ids dense from 0.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};
use crate::louvain::{Hierarchy, RunConfig};

/// Bidirectional map between node labels and dense ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Labels {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `0..n` named by their decimal id.
    pub fn numeric(n: usize) -> Self {
        let mut labels = Labels::new();
        for i in 0..n {
            labels.intern(&i.to_string());
        }
        labels
    }

    pub fn intern(&mut self, name: &str) -> usize {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

fn content(line: &str) -> Option<&str> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        None
    } else {
        Some(trimmed)
    }
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<(Graph, Labels)> {
    let mut labels = Labels::new();
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let Some(body) = content(&line) else { continue };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let weight = match tokens.len() {
            2 => 1.0,
            3 => {
                let w: f64 = tokens[2].parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad weight `{}`", tokens[2]),
                })?;
                if !w.is_finite() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("weight `{}` is not finite", tokens[2]),
                    });
                }
                if w < 0.0 {
                    return Err(Error::NegativeWeight { line: lineno, weight: w });
                }
                w
            }
            k => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected `src dst [weight]`, found {k} fields"),
                })
            }
        };
        let u = labels.intern(tokens[0]);
        let v = labels.intern(tokens[1]);
        edges.push((u, v, weight));
    }
    Ok((Graph::from_edges(labels.len(), edges), labels))
}

pub fn write_partition<W: Write>(mut out: W, p: &Partition, labels: &Labels) -> Result<()> {
    assert_eq!(p.len(), labels.len(), "partition and labels disagree");
    for i in 0..p.len() {
        writeln!(out, "{}\t{}", labels.name(i), p.community_of(i))?;
    }
    Ok(())
}

/// Reads a partition of the nodes named in `labels`. Every node must appear
/// exactly once; community ids are compacted in node order.
pub fn read_partition<R: BufRead>(reader: R, labels: &Labels) -> Result<Partition> {
    let mut assigned: Vec<Option<usize>> = vec![None; labels.len()];
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let Some(body) = content(&line) else { continue };
        let mut fields = body.split_whitespace();
        let (Some(label), Some(community), None) = (fields.next(), fields.next(), fields.next())
        else {
            return Err(Error::Parse {
                line: lineno,
                message: "expected `label<TAB>community`".into(),
            });
        };
        let node = labels.id(label).ok_or_else(|| Error::UnknownLabel {
            line: lineno,
            label: label.to_string(),
        })?;
        let community: usize = community.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("bad community id `{community}`"),
        })?;
        if assigned[node].replace(community).is_some() {
            return Err(Error::DuplicateLabel {
                line: lineno,
                label: label.to_string(),
            });
        }
    }
    let labels_out = assigned
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| Error::MissingLabel {
                label: labels.name(i).to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_labels(labels_out))
}

/// One line per node: its label followed by its community after each level.
pub fn write_levels<W: Write>(mut out: W, h: &Hierarchy, labels: &Labels) -> Result<()> {
    let flats = h.flat_levels();
    for i in 0..labels.len() {
        write!(out, "{}", labels.name(i))?;
        for flat in &flats {
            write!(out, "\t{}", flat.community_of(i))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub level: usize,
    pub nodes: usize,
    pub edges: usize,
    pub quality: f64,
    pub communities: usize,
    pub sweeps: usize,
    pub moves: usize,
}

/// Record of one optimization run. Serializes as JSON with a fixed field
/// order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub criterion: String,
    pub alpha: Option<f64>,
    pub seed: u64,
    pub precision: f64,
    pub initial_quality: f64,
    pub levels: Vec<LevelSummary>,
    pub final_quality: f64,
    pub final_communities: usize,
    pub elapsed_seconds: f64,
}

impl RunSummary {
    pub fn new(h: &Hierarchy, cfg: &RunConfig) -> Self {
        let levels = h
            .levels
            .iter()
            .enumerate()
            .map(|(level, l)| LevelSummary {
                level,
                nodes: l.graph.num_nodes(),
                edges: l.graph.num_edges(),
                quality: l.quality,
                communities: l.partition.num_communities(),
                sweeps: l.sweeps,
                moves: l.moves,
            })
            .collect();
        RunSummary {
            criterion: cfg.criterion.code().to_string(),
            alpha: cfg.criterion.alpha(),
            seed: cfg.seed,
            precision: cfg.precision,
            initial_quality: h.initial_quality,
            levels,
            final_quality: h.final_quality(),
            final_communities: h.kappa_final(),
            elapsed_seconds: h.elapsed.as_secs_f64(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("criterion     {}", self.criterion));
        if let Some(alpha) = self.alpha {
            s.push_str(&format!(" (alpha = {alpha})"));
        }
        s.push('\n');
        s.push_str(&format!("seed          {}\n", self.seed));
        s.push_str(&format!("precision     {}\n", self.precision));
        s.push_str(&format!("initial       {}\n", self.initial_quality));
        s.push_str("level     nodes      edges  communities  sweeps  quality\n");
        for l in &self.levels {
            s.push_str(&format!(
                "{:>5} {:>9} {:>10} {:>12} {:>7}  {}\n",
                l.level, l.nodes, l.edges, l.communities, l.sweeps, l.quality
            ));
        }
        s.push_str(&format!("final quality {}\n", self.final_quality));
        s.push_str(&format!("communities   {}\n", self.final_communities));
        s.push_str(&format!("elapsed       {:.6} s\n", self.elapsed_seconds));
        s
    }
}

/// Builds the summary for a finished run.
pub fn write_summary(h: &Hierarchy, cfg: &RunConfig) -> RunSummary {
    RunSummary::new(h, cfg)
}
