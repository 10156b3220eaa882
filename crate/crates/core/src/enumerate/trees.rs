use std::collections::BTreeSet;

use crate::graphcore::{canonical_form, CanonicalForm, Graph};
use crate::parallel::sharded_map;

/// Canonical level sequences of rooted trees on `n` vertices, root at level
/// 1, in the order produced by the Beyer-Hedetniemi successor rule.
pub fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seq: Vec<usize> = (1..=n).collect();
    let mut out = vec![seq.clone()];
    while let Some(p) = seq.iter().rposition(|&l| l > 2) {
        let q = seq[..p]
            .iter()
            .rposition(|&l| l == seq[p] - 1)
            .expect("a vertex at the parent level precedes p");
        let gap = p - q;
        for i in p..n {
            seq[i] = seq[i - gap];
        }
        out.push(seq.clone());
    }
    out
}

/// The tree a level sequence describes: each vertex hangs off the latest
/// earlier vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for i in 1..levels.len() {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] + 1 == levels[i])
            .expect("level sequence is valid");
        edges.push((parent, i));
    }
    Graph::new(levels.len(), &edges).expect("tree edges are in range")
}

/// One canonical representative per free tree on `n` vertices.
pub fn free_trees(n: usize) -> Vec<CanonicalForm> {
    rooted_level_sequences(n)
        .iter()
        .map(|levels| canonical_form(&tree_from_levels(levels)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Adds one non-edge to each input graph in every possible way and returns
/// the distinct results.
pub fn add_one_edge(graphs: &[CanonicalForm], jobs: usize) -> Vec<CanonicalForm> {
    let per_graph = sharded_map(graphs, jobs, |form| {
        let g = form.to_graph();
        let base: Vec<(usize, usize)> = g.edges().collect();
        let mut out = BTreeSet::new();
        for v in 0..g.n() {
            for u in 0..v {
                if g.has_edge(u, v) {
                    continue;
                }
                let mut edges = base.clone();
                edges.push((u, v));
                out.insert(canonical_form(&Graph::new(g.n(), &edges).expect("valid edge")));
            }
        }
        out
    });
    per_graph
        .into_iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
