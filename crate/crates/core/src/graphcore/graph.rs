use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] may carry. Adjacency rows are `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` pairs with `u < v`, sorted lexicographically
/// and free of duplicates. Equality and hashing are therefore equality of
/// labeled graphs; use [`crate::canonical_form`] for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(u8, u8)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops and
    /// out-of-range endpoints. Duplicate and reversed pairs collapse.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.push((a as u8, b as u8));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph { n, edges })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    pub(crate) fn from_rows(rows: &[u64]) -> Graph {
        let n = rows.len();
        let mut edges = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            let mut higher = row & !mask_upto(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                edges.push((u as u8, v as u8));
                higher &= higher - 1;
            }
        }
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&(a as u8, b as u8)).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (u, v) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Adjacency as one bitset row per vertex.
    pub fn rows(&self) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            rows[u as usize] |= 1 << v;
            rows[v as usize] |= 1 << u;
        }
        rows
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(crate::error::invalid(
                "relabel",
                format!("permutation has length {}, graph has {} vertices", perm.len(), self.n),
            ));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(crate::error::invalid("relabel", "not a permutation"));
            }
        }
        let list: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &list)
    }

    /// Removes vertex `v`; higher indices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {v} out of range");
        let shift = |x: u8| if (x as usize) > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a as usize != v && b as usize != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Graph { n: self.n - 1, edges }
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let full = mask_upto(self.n);
        let rows: Vec<u64> = self
            .rows()
            .iter()
            .enumerate()
            .map(|(u, r)| !r & full & !(1 << u))
            .collect();
        Graph::from_rows(&rows)
    }
}

pub(crate) fn mask_upto(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::graph6::encode(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn isolated_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange(0, 3, 3)));
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert!(matches!(Graph::new(65, &[]), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn edges_sorted() {
        let g = Graph::new(4, &[(3, 2), (0, 3), (1, 0)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn remove_vertex_shifts() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.remove_vertex(1);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn complement_of_path() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = p4.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
    }
}
