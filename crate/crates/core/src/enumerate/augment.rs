//! All graphs on `n` vertices by vertex augmentation with canonical deletion.
//!
//! A child `G` on `k + 1` vertices is built from a parent `P` on `k` by
//! adding a vertex joined to some subset of `P`. The child is kept only
//! when deleting the vertex that carries `G`'s last canonical label leaves
//! a graph isomorphic to `P`. That vertex is fixed up to automorphism, so
//! every isomorphism class has exactly one accepting parent class and
//! children from different parents never collide. Duplicates within one
//! parent are removed locally, which lets parents run in parallel.

use std::collections::BTreeSet;

use crate::graphcore::{canonical_form, canonical_labeling, CanonicalForm, Graph};
use crate::parallel::sharded_map;

/// Canonical forms of every graph on `n` vertices with an edge count in
/// `lo..=hi`, sorted.
pub fn all_graphs(n: usize, lo: usize, hi: usize, jobs: usize) -> Vec<CanonicalForm> {
    if n == 0 {
        return if lo == 0 {
            vec![canonical_form(&Graph::empty(0).expect("empty graph"))]
        } else {
            Vec::new()
        };
    }
    // edges still addable when growing from k vertices to n
    let addable = |k: usize| (k..n).sum::<usize>();
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(1).expect("K1"))];
    for k in 1..n {
        let next_lo = lo.saturating_sub(addable(k + 1));
        let children = sharded_map(&level, jobs, |parent| extend(parent, next_lo, hi));
        level = children.into_iter().flatten().collect();
        level.sort_unstable();
    }
    level
        .into_iter()
        .filter(|form| (lo..=hi).contains(&form.to_graph().edge_count()))
        .collect()
}

/// Children of `parent` with edge counts in `lo..=hi` that pass the
/// canonical deletion test.
fn extend(parent: &CanonicalForm, lo: usize, hi: usize) -> BTreeSet<CanonicalForm> {
    let p = parent.to_graph();
    let k = p.n();
    let base = p.rows();
    let e = p.edge_count();
    let parent_degrees = sorted_degrees(&base);
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << k) {
        let d = mask.count_ones() as usize;
        if e + d < lo || e + d > hi {
            continue;
        }
        let mut rows = base.clone();
        for (u, row) in rows.iter_mut().enumerate() {
            if mask >> u & 1 == 1 {
                *row |= 1 << k;
            }
        }
        rows.push(mask);
        let child = Graph::from_rows(&rows);
        let canon = canonical_labeling(&child);
        let last = canon.order[k];
        let accept = last == k
            || (rows[last].count_ones() as usize == d && {
                let reduced = child.remove_vertex(last);
                sorted_degrees(&reduced.rows()) == parent_degrees && canonical_form(&reduced) == *parent
            });
        if accept {
            out.insert(canon.form);
        }
    }
    out
}

fn sorted_degrees(rows: &[u64]) -> Vec<u32> {
    let mut d: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    d.sort_unstable();
    d
}
