use serde::{Deserialize, Serialize};

use crate::graphcore::{is_connected, Graph, ThetaSpec};

/// Structural family of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Classification {
    Tree,
    /// `k` is the length of the unique cycle.
    Unicyclic {
        k: usize,
    },
    /// The theta subgraph, normalized so that `s >= r >= 2t - 2`.
    Bicyclic {
        theta: ThetaSpec,
    },
    Other,
}

impl std::fmt::Display for Classification {
    /// `tree`, `unicyclic k=4`, `bicyclic r=3 t=2 s=5` (with ` bridge=b`
    /// when `t = 0` and `b > 0`) or `other`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Tree => f.write_str("tree"),
            Classification::Unicyclic { k } => write!(f, "unicyclic k={k}"),
            Classification::Bicyclic { theta } => {
                write!(f, "bicyclic r={} t={} s={}", theta.r, theta.t, theta.s)?;
                if theta.bridge > 0 {
                    write!(f, " bridge={}", theta.bridge)?;
                }
                Ok(())
            }
            Classification::Other => f.write_str("other"),
        }
    }
}

pub fn classify(g: &Graph) -> Classification {
    let n = g.n();
    if n == 0 || !is_connected(g) {
        return Classification::Other;
    }
    let e = g.edge_count();
    if e + 1 == n {
        Classification::Tree
    } else if e == n {
        let core = two_core(g);
        Classification::Unicyclic {
            k: core.iter().filter(|&&inside| inside).count(),
        }
    } else if e == n + 1 {
        match theta_of(g) {
            Some(theta) => Classification::Bicyclic { theta },
            None => Classification::Other,
        }
    } else {
        Classification::Other
    }
}

/// Membership flags of the 2-core (repeatedly strip degree-1 vertices).
fn two_core(g: &Graph) -> Vec<bool> {
    let adj = g.neighbors();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut inside = vec![true; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !inside[v] {
            continue;
        }
        inside[v] = false;
        for &u in &adj[v] {
            if inside[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    inside
}

/// Reads the theta parameters off the 2-core of a connected graph with
/// `|E| = |V| + 1`.
fn theta_of(g: &Graph) -> Option<ThetaSpec> {
    let inside = two_core(g);
    let adj: Vec<Vec<usize>> = g
        .neighbors()
        .into_iter()
        .enumerate()
        .map(|(v, list)| {
            if inside[v] {
                list.into_iter().filter(|&u| inside[u]).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let branch: Vec<usize> = (0..g.n()).filter(|&v| adj[v].len() >= 3).collect();
    // Follows a core path from `start` through `first` until it reaches a
    // branch vertex; returns that vertex, the number of edges walked and
    // the vertex the walk arrived from.
    let walk = |start: usize, first: usize| -> (usize, usize, usize) {
        let (mut prev, mut cur, mut len) = (start, first, 1);
        while adj[cur].len() == 2 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        (cur, len, prev)
    };
    match branch.as_slice() {
        [hub] if adj[*hub].len() == 4 => {
            let mut loops: Vec<usize> = Vec::new();
            let mut used = Vec::new();
            for &first in &adj[*hub] {
                if used.contains(&first) {
                    continue;
                }
                let (_, len, back) = walk(*hub, first);
                used.extend([first, back]);
                loops.push(len);
            }
            loops.sort_unstable();
            let [r, s] = loops.as_slice() else { return None };
            ThetaSpec::new(*r, 1, *s).ok()
        }
        [a, b] if adj[*a].len() == 3 && adj[*b].len() == 3 => {
            let from_a: Vec<(usize, usize)> = adj[*a]
                .iter()
                .map(|&u| {
                    let (end, len, _) = walk(*a, u);
                    (end, len)
                })
                .collect();
            if from_a.iter().all(|&(end, _)| end == *b) {
                let mut lens: Vec<usize> = from_a.iter().map(|&(_, l)| l).collect();
                lens.sort_unstable();
                let (p, q, w) = (lens[0], lens[1], lens[2]);
                ThetaSpec::new(p + q, p + 1, p + w).ok()
            } else {
                let loop_a = from_a.iter().find(|&&(end, _)| end == *a)?.1;
                let bridge = from_a.iter().find(|&&(end, _)| end == *b)?.1;
                let loop_b = adj[*b].iter().map(|&u| walk(*b, u)).find(|&(end, _, _)| end == *b)?.1;
                let (r, s) = (loop_a.min(loop_b), loop_a.max(loop_b));
                ThetaSpec::with_bridge(r, 0, s, bridge - 1).ok()
            }
        }
        _ => None,
    }
}
