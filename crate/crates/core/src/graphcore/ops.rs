use super::graph::Graph;
use crate::error::{Error, Result};
use crate::Rational;

/// Places `b` beside `a`; `b`'s vertices are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    let edges: Vec<_> = a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))).collect();
    Graph::new(a.n() + b.n(), &edges).expect("union of valid graphs is valid")
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    let mut out = Graph::empty(0).expect("empty graph");
    for _ in 0..k {
        out = disjoint_union(&out, g);
    }
    out
}

/// The join `a x b`: the disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    let mut edges: Vec<_> = a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))).collect();
    for u in 0..a.n() {
        for v in 0..b.n() {
            edges.push((u, off + v));
        }
    }
    Graph::new(a.n() + b.n(), &edges).expect("join of valid graphs is valid")
}

/// Degrees and the `d(v) + m(v)` values, `m(v)` being the mean degree of
/// `v`'s neighbours, kept as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    /// `None` for isolated vertices.
    pub dm_values: Vec<Option<Rational>>,
    max_dm: Option<(Rational, usize)>,
}

impl DegreeProfile {
    /// Largest `d(v) + m(v)` and the lowest-indexed vertex attaining it.
    pub fn max_dm(&self) -> Result<(Rational, usize)> {
        self.max_dm.ok_or(Error::Edgeless)
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees();
    let mut nbr_sum = vec![0i64; g.n()];
    for (u, v) in g.edges() {
        nbr_sum[u] += degrees[v] as i64;
        nbr_sum[v] += degrees[u] as i64;
    }
    let dm_values: Vec<Option<Rational>> = degrees
        .iter()
        .zip(&nbr_sum)
        .map(|(&d, &s)| (d > 0).then(|| Rational::from_integer(d as i64) + Rational::new(s, d as i64)))
        .collect();
    let mut max_dm: Option<(Rational, usize)> = None;
    for (v, val) in dm_values.iter().enumerate() {
        if let Some(val) = *val {
            if max_dm.is_none_or(|(best, _)| val > best) {
                max_dm = Some((val, v));
            }
        }
    }
    DegreeProfile {
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        degrees,
        dm_values,
        max_dm,
    }
}

/// Component count and a labeling `vertex -> component index`, with
/// components numbered in order of their smallest vertex.
pub fn connected_components(g: &Graph) -> (usize, Vec<usize>) {
    let adj = g.neighbors();
    let mut label = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..g.n() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).0 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::build::{build_named, cycle, path, Named};
    use crate::graphcore::canon::canonical_form;

    fn k1() -> Graph {
        Graph::empty(1).unwrap()
    }

    #[test]
    fn union_counts() {
        let p2 = path(2).unwrap();
        let g = disjoint_union(&disjoint_union(&p2, &p2), &k1());
        assert_eq!((g.n(), g.edge_count()), (5, 2));
        let h = disjoint_union(&path(4).unwrap(), &k1());
        assert_eq!((h.n(), h.edge_count()), (5, 3));
        let c6 = cycle(6).unwrap();
        assert_eq!(disjoint_union(&c6, &Graph::empty(0).unwrap()), c6);
    }

    #[test]
    fn join_counts() {
        let w = join(&k1(), &cycle(6).unwrap());
        assert_eq!((w.n(), w.edge_count()), (7, 12));
        let mut km = k1();
        for m in 2..=5 {
            km = join(&km, &k1());
            assert_eq!(km.edge_count(), m * (m - 1) / 2);
        }
        let p2 = path(2).unwrap();
        let h1 = join(&Graph::empty(2).unwrap(), &disjoint_union(&copies(&p2, 2), &k1()));
        assert_eq!((h1.n(), h1.edge_count()), (7, 12));
        assert_eq!(h1, build_named(Named::H1).unwrap());
    }

    #[test]
    fn profile_regular_cycle() {
        let p = degree_profile(&cycle(6).unwrap());
        assert!(p.dm_values.iter().all(|v| *v == Some(Rational::from_integer(4))));
        assert_eq!(p.max_dm().unwrap().0, Rational::from_integer(4));
    }

    #[test]
    fn profile_pendant_cycle() {
        let g = build_named(Named::PendantCycle { n: 8, k: 6 }).unwrap();
        let (best, v) = degree_profile(&g).max_dm().unwrap();
        assert_eq!(best, Rational::new(11, 2));
        assert_eq!(v, 0);
    }

    #[test]
    fn profile_star() {
        let star = join(&k1(), &Graph::empty(4).unwrap());
        let p = degree_profile(&star);
        assert_eq!(p.max_dm().unwrap().0, Rational::from_integer(5));
        assert_eq!(p.max_degree, 4);
    }

    #[test]
    fn profile_edgeless() {
        let p = degree_profile(&Graph::empty(3).unwrap());
        assert_eq!(p.max_dm(), Err(Error::Edgeless));
        assert!(p.dm_values.iter().all(Option::is_none));
    }

    #[test]
    fn components() {
        let p2 = path(2).unwrap();
        let g = disjoint_union(&copies(&p2, 2), &k1());
        assert_eq!(connected_components(&g), (3, vec![0, 0, 1, 1, 2]));
        assert_eq!(connected_components(&cycle(6).unwrap()).0, 1);
        assert_eq!(connected_components(&Graph::empty(4).unwrap()).0, 4);
    }

    #[test]
    fn join_commutes_up_to_isomorphism() {
        let a = path(3).unwrap();
        let b = cycle(4).unwrap();
        assert_eq!(canonical_form(&join(&a, &b)), canonical_form(&join(&b, &a)));
    }
}
