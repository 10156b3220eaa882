//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library except to build or read a `Graph`.

#![allow(dead_code)]

use lapspec::Graph;
use rand::Rng;

/// Random labeled graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Component count by depth-first search.
pub fn components(g: &Graph) -> usize {
    let a = adjacency(g);
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for u in 0..g.n() {
                if a[v][u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

/// Spanning trees by checking every `(n-1)`-subset of edges for acyclicity.
pub fn spanning_trees_brute(g: &Graph) -> u64 {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut count = 0;
    let mut pick = Vec::new();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }
    fn rec(edges: &[(usize, usize)], start: usize, need: usize, n: usize, pick: &mut Vec<usize>, count: &mut u64) {
        if pick.len() == need {
            let mut parent: Vec<usize> = (0..n).collect();
            for &i in pick.iter() {
                let (a, b) = edges[i];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return;
                }
                parent[ra] = rb;
            }
            *count += 1;
            return;
        }
        for i in start..edges.len() {
            if edges.len() - i < need - pick.len() {
                break;
            }
            pick.push(i);
            rec(edges, i + 1, need, n, pick, count);
            pick.pop();
        }
    }
    rec(&edges, 0, n - 1, n, &mut pick, &mut count);
    count
}

/// Lexicographically largest upper-triangle bit string over all vertex
/// permutations; equal exactly for isomorphic graphs. Practical for n <= 7.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let a = adjacency(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut bits = Vec::with_capacity(n * n / 2);
        for j in 0..n {
            for i in 0..j {
                bits.push(a[perm[i]][perm[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| bits > *b) {
            best = Some(bits);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// The labeled tree with Prüfer sequence `code` on `code.len() + 2` vertices.
pub fn prufer_tree(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

/// Coefficients, low to high, of `prod (x - r)` over the given roots.
pub fn expand_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= r * ck;
        }
        c = next;
    }
    c
}

/// Eigenvalues of the Laplacian by cyclic Jacobi rotations, descending.
#[allow(clippy::needless_range_loop)]
pub fn laplacian_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let adj = adjacency(g);
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if adj[i][j] {
                a[i][j] = -1.0;
                a[i][i] += 1.0;
            }
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    values
}

/// Exact `d(v) + m(v)` for every vertex of positive degree.
pub fn dm_values(g: &Graph) -> Vec<Option<num_rational::Ratio<i64>>> {
    let adj = adjacency(g);
    let deg: Vec<i64> = adj
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count() as i64)
        .collect();
    (0..g.n())
        .map(|v| {
            if deg[v] == 0 {
                return None;
            }
            let sum: i64 = (0..g.n()).filter(|&u| adj[v][u]).map(|u| deg[u]).sum();
            Some(num_rational::Ratio::new(deg[v] * deg[v] + sum, deg[v]))
        })
        .collect()
}

pub fn max_dm(g: &Graph) -> Option<num_rational::Ratio<i64>> {
    dm_values(g).into_iter().flatten().max()
}
