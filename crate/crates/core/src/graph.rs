//! Weighted undirected graphs, node partitions and the coarsening step that
//! folds every community of a partition into one meta-node.
//!
//! Self-loops are stored once per node, outside the adjacency lists, and count
//! once toward the weighted degree. With that convention the degree of a node
//! is the row sum of the weight matrix and the degrees add up to `2m`, the sum
//! of the weight matrix over all ordered pairs.

use std::collections::HashMap;

/// Quantities fixed on the original (level-0) graph and carried unchanged
/// through every coarser level.
#[derive(Clone, Debug, PartialEq)]
pub struct Level0Constants {
    /// Number of original nodes.
    pub n0: usize,
    /// Sum of the weight matrix over ordered pairs, diagonal included.
    pub two_m: f64,
    /// Largest edge weight (self-loops included); 1 for an edgeless graph.
    pub w_max: f64,
    /// Sum of squared weights over ordered pairs, diagonal included.
    pub sq_weight_sum: f64,
}

#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
    loops: Vec<f64>,
    degrees: Vec<f64>,
    sizes: Vec<u64>,
    aux: Vec<f64>,
    globals: Level0Constants,
}

impl Graph {
    /// Builds a level-0 graph. Parallel edges are summed and `(u, u, w)`
    /// entries become self-loops.
    ///
    /// Panics if an endpoint is out of range or a weight is negative or not
    /// finite.
    pub fn from_edges<I>(num_nodes: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut loops = vec![0.0; num_nodes];
        let mut has_loop = vec![false; num_nodes];
        let mut pairs: Vec<(usize, usize, f64)> = Vec::new();
        for (u, v, w) in edges {
            assert!(u < num_nodes && v < num_nodes, "edge ({u}, {v}) out of range");
            assert!(w.is_finite() && w >= 0.0, "invalid edge weight {w}");
            if u == v {
                loops[u] += w;
                has_loop[u] = true;
            } else {
                pairs.push((u.min(v), u.max(v), w));
            }
        }
        pairs.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(pairs.len());
        for (u, v, w) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 += w,
                _ => merged.push((u, v, w)),
            }
        }

        let mut w_max: Option<f64> = None;
        for &(_, _, w) in &merged {
            w_max = Some(w_max.map_or(w, |m| m.max(w)));
        }
        for (i, &w) in loops.iter().enumerate() {
            if has_loop[i] {
                w_max = Some(w_max.map_or(w, |m| m.max(w)));
            }
        }

        let mut graph = Self::from_undirected(
            num_nodes,
            &merged,
            loops,
            vec![1; num_nodes],
            vec![0.0; num_nodes],
            Level0Constants {
                n0: num_nodes,
                two_m: 0.0,
                w_max: w_max.unwrap_or(1.0),
                sq_weight_sum: 0.0,
            },
        );
        graph.globals.two_m = graph.degrees.iter().sum();
        graph.globals.sq_weight_sum = graph.weights.iter().map(|w| w * w).sum::<f64>()
            + graph.loops.iter().map(|w| w * w).sum::<f64>();
        graph
    }

    /// Builds a CSR graph from deduplicated `u < v` pairs.
    pub(crate) fn from_undirected(
        num_nodes: usize,
        pairs: &[(usize, usize, f64)],
        loops: Vec<f64>,
        sizes: Vec<u64>,
        aux: Vec<f64>,
        globals: Level0Constants,
    ) -> Self {
        let mut counts = vec![0usize; num_nodes + 1];
        for &(u, v, _) in pairs {
            counts[u + 1] += 1;
            counts[v + 1] += 1;
        }
        for i in 0..num_nodes {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut cursor = offsets.clone();
        let mut targets = vec![0; 2 * pairs.len()];
        let mut weights = vec![0.0; 2 * pairs.len()];
        for &(u, v, w) in pairs {
            targets[cursor[u]] = v;
            weights[cursor[u]] = w;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            weights[cursor[v]] = w;
            cursor[v] += 1;
        }
        let degrees = (0..num_nodes)
            .map(|i| weights[offsets[i]..offsets[i + 1]].iter().sum::<f64>() + loops[i])
            .collect();
        Graph {
            offsets,
            targets,
            weights,
            loops,
            degrees,
            sizes,
            aux,
            globals,
        }
    }

    pub(crate) fn with_aux(mut self, aux: Vec<f64>) -> Self {
        assert_eq!(aux.len(), self.num_nodes());
        self.aux = aux;
        self
    }

    pub fn num_nodes(&self) -> usize {
        self.loops.len()
    }

    /// Number of distinct non-loop edges.
    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    /// Number of nodes carrying a self-loop entry.
    pub fn num_loops(&self) -> usize {
        self.loops.iter().filter(|&&w| w != 0.0).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[i]..self.offsets[i + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    pub fn degree_count(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn loop_weight(&self, i: usize) -> f64 {
        self.loops[i]
    }

    /// Row sum of the weight matrix: incident edge weights plus the loop.
    pub fn weighted_degree(&self, i: usize) -> f64 {
        self.degrees[i]
    }

    /// Number of level-0 nodes folded into node `i`.
    pub fn node_size(&self, i: usize) -> u64 {
        self.sizes[i]
    }

    /// Criterion-specific per-node constant, summed under aggregation.
    pub fn node_aux(&self, i: usize) -> f64 {
        self.aux[i]
    }

    pub fn globals(&self) -> &Level0Constants {
        &self.globals
    }

    /// True when every node stands for exactly one original node.
    pub fn is_level0(&self) -> bool {
        self.num_nodes() == self.globals.n0 && self.sizes.iter().all(|&s| s == 1)
    }

    /// True when every stored weight, loops included, equals one.
    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1.0) && self.loops.iter().all(|&w| w == 0.0 || w == 1.0)
    }

    /// Each undirected edge once as `(u, v, w)` with `u < v`, followed by
    /// the self-loops as `(u, u, w)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let pairs = (0..self.num_nodes()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, w)| (u, v, w))
        });
        let loops = self
            .loops
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0.0)
            .map(|(u, &w)| (u, u, w));
        pairs.chain(loops)
    }

    /// Dense row-major weight matrix, diagonal holding the loops.
    pub fn dense_weights(&self) -> Vec<Vec<f64>> {
        let n = self.num_nodes();
        let mut w = vec![vec![0.0; n]; n];
        for (i, row) in w.iter_mut().enumerate() {
            row[i] = self.loops[i];
            for (j, wij) in self.neighbors(i) {
                row[j] = wij;
            }
        }
        w
    }
}

/// Community assignment of every node, kept compacted: ids run over
/// `0..num_communities()` numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
    count: usize,
}

impl Partition {
    pub fn singleton(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
            count: n,
        }
    }

    pub fn whole(n: usize) -> Self {
        Partition {
            labels: vec![0; n],
            count: usize::from(n > 0),
        }
    }

    /// Renumbers arbitrary labels to `0..k` by first appearance.
    pub fn from_labels(labels: impl IntoIterator<Item = usize>) -> Self {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let labels: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Partition {
            labels,
            count: map.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_communities(&self) -> usize {
        self.count
    }

    pub fn community_of(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_singleton(&self) -> bool {
        self.count == self.labels.len()
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (i, &c) in self.labels.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.count];
        for &c in &self.labels {
            out[c] += 1;
        }
        out
    }

    /// Composes `self` (nodes -> meta-nodes) with `next` (meta-nodes ->
    /// communities).
    pub fn compose(&self, next: &Partition) -> Partition {
        assert_eq!(self.count, next.len(), "partition levels do not chain");
        Partition::from_labels(self.labels.iter().map(|&c| next.community_of(c)))
    }
}

/// Sum of edge weights from `i` into each community, `i` itself excluded.
///
/// `c_old` comes first (present even at weight 0); other communities follow
/// in order of first appearance in `i`'s adjacency and are listed only when
/// their incident weight is nonzero.
pub fn neighbor_community_weights(
    g: &Graph,
    i: usize,
    p: &Partition,
) -> Vec<(usize, f64)> {
    let c_old = p.community_of(i);
    let mut scratch = NeighborWeights::new(p.num_communities().max(c_old + 1));
    scratch.collect(g, i, p.as_slice(), c_old);
    scratch
        .iter()
        .filter(|&(c, w)| c == c_old || w != 0.0)
        .collect()
}

/// Reusable dense accumulator behind [`neighbor_community_weights`], used by
/// the optimizer's inner loop.
#[derive(Clone, Debug)]
pub struct NeighborWeights {
    weight: Vec<f64>,
    seen: Vec<bool>,
    touched: Vec<usize>,
}

impl NeighborWeights {
    pub fn new(num_communities: usize) -> Self {
        NeighborWeights {
            weight: vec![0.0; num_communities],
            seen: vec![false; num_communities],
            touched: Vec::new(),
        }
    }

    /// Gathers `d_w(i, C)` for every community adjacent to `i` plus `anchor`.
    /// Entries of `community_of` that are out of range (the removed node's
    /// sentinel) are skipped.
    pub fn collect(&mut self, g: &Graph, i: usize, community_of: &[usize], anchor: usize) {
        self.clear();
        self.touch(anchor);
        for (j, w) in g.neighbors(i) {
            let c = community_of[j];
            if j == i || c >= self.weight.len() {
                continue;
            }
            self.touch(c);
            self.weight[c] += w;
        }
    }

    fn touch(&mut self, c: usize) {
        if !self.seen[c] {
            self.seen[c] = true;
            self.touched.push(c);
        }
    }

    pub fn weight(&self, c: usize) -> f64 {
        if self.seen.get(c).copied().unwrap_or(false) {
            self.weight[c]
        } else {
            0.0
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.touched.iter().map(move |&c| (c, self.weight[c]))
    }

    pub fn clear(&mut self) {
        for &c in &self.touched {
            self.weight[c] = 0.0;
            self.seen[c] = false;
        }
        self.touched.clear();
    }
}

/// Folds each community of `p` into one meta-node.
///
/// Inter-community weights are summed, the loop of a meta-node is the
/// ordered-pair internal weight of its community, sizes and auxiliaries are
/// summed and the level-0 constants are carried over.
pub fn aggregate(g: &Graph, p: &Partition) -> Graph {
    assert_eq!(p.len(), g.num_nodes(), "partition does not match graph");
    let k = p.num_communities();
    let members = p.members();
    let mut loops = vec![0.0; k];
    let mut sizes = vec![0u64; k];
    let mut aux = vec![0.0; k];
    let mut pairs = Vec::new();
    let mut scratch = NeighborWeights::new(k);

    for (c, nodes) in members.iter().enumerate() {
        scratch.clear();
        for &i in nodes {
            loops[c] += g.loop_weight(i);
            sizes[c] += g.node_size(i);
            aux[c] += g.node_aux(i);
            for (j, w) in g.neighbors(i) {
                let d = p.community_of(j);
                if d == c {
                    loops[c] += w;
                } else {
                    scratch.touch(d);
                    scratch.weight[d] += w;
                }
            }
        }
        for (d, w) in scratch.iter() {
            if c < d {
                pairs.push((c, d, w));
            }
        }
    }
    pairs.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    Graph::from_undirected(k, &pairs, loops, sizes, aux, g.globals.clone())
}
