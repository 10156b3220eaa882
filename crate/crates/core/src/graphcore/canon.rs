//! Canonical labeling by equitable-partition refinement and an
//! individualize-and-refine search tree.
//!
//! The canonical labeling is the leaf of the search tree whose relabeled
//! adjacency matrix is lexicographically greatest. Subtrees are pruned when
//! an automorphism already found maps them onto explored ones, which keeps
//! the search small for the highly symmetric graphs (empty, complete,
//! many equal components) that dominate desk-scale enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::graph6;

/// graph6 string of the canonically relabeled graph. Equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical form holds valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex that receives canonical label `i`.
    pub order: Vec<usize>,
    /// Automorphisms discovered during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    /// The canonical graph itself.
    pub fn graph(&self) -> Graph {
        self.form.to_graph()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let rows = g.rows();
    let n = g.n();
    let mut search = Search {
        rows: &rows,
        path: Vec::new(),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let root = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    search.descend(root, 0);
    let best = search.best.expect("search visits at least one leaf");
    Canonical {
        form: CanonicalForm(graph6::encode(&Graph::from_rows(&best.cert))),
        order: best.order,
        generators: search.generators,
    }
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    cert: Vec<u64>,
    path: Vec<usize>,
    order: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn descend(&mut self, mut cells: Cells, depth: usize) -> Option<usize> {
        refine(self.rows, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells);
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                let orbits = self.stabilizer_orbits();
                let rep = orbits[v];
                if explored.iter().any(|&w| orbits[w] == rep) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.path.push(v);
            let jump = self.descend(child, depth + 1);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut row = self.rows[v];
                let mut out = 0u64;
                while row != 0 {
                    let u = row.trailing_zeros() as usize;
                    out |= 1 << pos[u];
                    row &= row - 1;
                }
                out
            })
            .collect();
        let leaf = Leaf {
            cert,
            path: self.path.clone(),
            order,
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
                order: leaf.order.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let level = common_prefix(&leaf.path, &first.path);
            self.generators.push(automorphism(&first.order, &leaf.order));
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&leaf.path, &best.path);
                self.generators.push(automorphism(&best.order, &leaf.order));
                Some(level)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    /// Orbit representatives under the known automorphisms that fix the
    /// current path pointwise.
    fn stabilizer_orbits(&self) -> Vec<usize> {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in &self.generators {
            if self.path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for (v, &image) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut map = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        map[a] = b;
    }
    map
}

/// Refines an ordered partition to the coarsest equitable one below it.
/// Cells split by neighbor counts into the splitter, smaller counts first.
fn refine(rows: &[u64], cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let mask = cells[si].iter().fold(0u64, |m, &v| m | (1 << v));
            let mut ci = 0;
            while ci < cells.len() {
                if cells[ci].len() == 1 {
                    ci += 1;
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cells[ci].iter().map(|&v| ((rows[v] & mask).count_ones(), v)).collect();
                let k0 = keyed[0].0;
                if keyed.iter().all(|&(k, _)| k == k0) {
                    ci += 1;
                    continue;
                }
                keyed.sort_unstable();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        groups.push(Vec::new());
                        last = Some(k);
                    }
                    groups.last_mut().expect("group pushed").push(v);
                }
                let added = groups.len();
                cells.splice(ci..=ci, groups);
                ci += added;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}
