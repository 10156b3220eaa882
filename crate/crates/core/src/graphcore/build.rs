//! Named graph families.
//!
//! Every builder fixes its vertex labeling so results are reproducible:
//! paths and cycles run `0-1-..-(n-1)`, attachments hang off vertex 0.

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::ops::{disjoint_union, join};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    Empty,
}

pub fn build_basic(kind: BasicKind, n: usize) -> Result<Graph> {
    match kind {
        BasicKind::Path => path(n),
        BasicKind::Cycle => cycle(n),
        BasicKind::Complete => complete(n),
        BasicKind::Empty => Graph::empty(n),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", format!("needs at least 3 vertices, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 0..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Parameters of a theta graph: cycles of lengths `r <= s` that share a
/// path on `t` vertices, or (for `t = 0`) are joined by a path with
/// `bridge` internal vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub r: usize,
    pub t: usize,
    pub s: usize,
    pub bridge: usize,
}

impl ThetaSpec {
    pub fn new(r: usize, t: usize, s: usize) -> Result<ThetaSpec> {
        ThetaSpec::with_bridge(r, t, s, 0)
    }

    pub fn with_bridge(r: usize, t: usize, s: usize, bridge: usize) -> Result<ThetaSpec> {
        let spec = ThetaSpec { r, t, s, bridge };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let ThetaSpec { r, t, s, bridge } = *self;
        if r < 3 || s < 3 {
            return Err(invalid(
                "theta",
                format!("cycle lengths must be >= 3, got r={r}, s={s}"),
            ));
        }
        if s < r {
            return Err(invalid("theta", format!("need s >= r, got r={r}, s={s}")));
        }
        if r + 2 < 2 * t {
            return Err(invalid("theta", format!("need r >= 2t-2, got r={r}, t={t}")));
        }
        if t > 0 && bridge != 0 {
            return Err(invalid("theta", "bridge applies only to t = 0"));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        if self.t == 0 {
            self.r + self.s + self.bridge
        } else {
            self.r + self.s - self.t
        }
    }
}

/// Builds the theta graph.
///
/// For `t >= 1` the shared path is `0-1-..-(t-1)`, the rest of the
/// `r`-cycle runs through `t..r` and the rest of the `s`-cycle through
/// `r..r+s-t`. For `t = 0` the cycles sit on `0..r` and `r..r+s` and the
/// bridge runs from vertex 0 to vertex `r` through the trailing vertices.
pub fn build_theta(spec: ThetaSpec) -> Result<Graph> {
    spec.validate()?;
    let ThetaSpec { r, t, s, .. } = spec;
    let n = spec.vertex_count();
    let mut edges = Vec::with_capacity(n + 1);
    if t == 0 {
        edges.extend((1..r).map(|v| (v - 1, v)));
        edges.push((0, r - 1));
        edges.extend((r + 1..r + s).map(|v| (v - 1, v)));
        edges.push((r, r + s - 1));
        let mut prev = 0;
        for v in r + s..n {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, r));
    } else {
        let last = t - 1;
        edges.extend((1..t).map(|v| (v - 1, v)));
        let mut attach = |range: std::ops::Range<usize>| {
            let mut prev = last;
            for v in range {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, 0));
        };
        attach(t..r);
        attach(r..n);
    }
    Graph::new(n, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    /// A cycle `C_k` with a path hanging off vertex 0; `n` vertices total.
    Lollipop { n: usize, k: usize },
    /// A cycle `C_q` with paths `P_{n1}` and `P_{n2}` both attached at vertex 0.
    H { n: usize, q: usize, n1: usize, n2: usize },
    /// `C_k` with `n - k` pendant vertices on vertex 0.
    PendantCycle { n: usize, k: usize },
    /// `2K1 x (2P2 + K1)`, cospectral mate of `C6 x K1`.
    H1,
    /// `2K1 x (P4 + K1)`, cospectral mate of `Theta(3,2,5) x K1`.
    H2,
}

pub fn build_named(kind: Named) -> Result<Graph> {
    match kind {
        Named::Lollipop { n, k } => {
            check_cycle_host("lollipop", n, k)?;
            let mut edges = cycle_edges(k);
            let mut prev = 0;
            for v in k..n {
                edges.push((prev, v));
                prev = v;
            }
            Graph::new(n, &edges)
        }
        Named::H { n, q, n1, n2 } => {
            if q < 3 || n1 == 0 || n2 == 0 || n != q + n1 + n2 {
                return Err(invalid(
                    "H(n,q,n1,n2)",
                    format!("need q >= 3, n1,n2 >= 1, n = q+n1+n2; got ({n},{q},{n1},{n2})"),
                ));
            }
            let mut edges = cycle_edges(q);
            for range in [q..q + n1, q + n1..n] {
                let mut prev = 0;
                for v in range {
                    edges.push((prev, v));
                    prev = v;
                }
            }
            Graph::new(n, &edges)
        }
        Named::PendantCycle { n, k } => {
            check_cycle_host("pendant_cycle", n, k)?;
            let mut edges = cycle_edges(k);
            edges.extend((k..n).map(|v| (0, v)));
            Graph::new(n, &edges)
        }
        Named::H1 => {
            let p2 = path(2)?;
            let inner = disjoint_union(&disjoint_union(&p2, &p2), &Graph::empty(1)?);
            Ok(join(&Graph::empty(2)?, &inner))
        }
        Named::H2 => {
            let inner = disjoint_union(&path(4)?, &Graph::empty(1)?);
            Ok(join(&Graph::empty(2)?, &inner))
        }
    }
}

fn check_cycle_host(what: &'static str, n: usize, k: usize) -> Result<()> {
    if k < 3 || n < k {
        return Err(invalid(what, format!("need 3 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
    edges.push((0, k - 1));
    edges
}
