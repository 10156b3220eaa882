//! Closed-form inequalities: the square-sum bound on integer sequences,
//! eigenvalue bounds from degrees, the unicyclic `d(v) + m(v)` bound, and
//! the spanning-tree / degree / `d(v) + m(v)` formulas for bicyclic graphs
//! built on a theta graph.

pub mod suites;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graphcore::{build_named, build_theta, connected_components, degree_profile, Graph, Named, ThetaSpec};
use crate::spectral::lambda_max;
use crate::Rational;

/// A bound together with an instance that attains it, when one is known.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    #[serde(with = "rational_pair")]
    pub bound_value: Rational,
    pub witness: Option<Witness>,
    pub satisfied: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertex(usize),
    /// graph6 of the extremal graph, plus the attaining vertex.
    Graph {
        graph6: String,
        vertex: usize,
    },
    Sequence(Vec<i64>),
}

/// `(t - ks)^2 + k s^2`, the largest square sum of `k + 1` integers that
/// are each at least `s` and sum to `t`, with the maximizing sequence
/// `(t - ks, s, ..., s)`.
pub fn sum_squares_bound(s: i64, t: i64, k: usize) -> Result<BoundReport> {
    if s < 1 {
        return Err(invalid("sum_squares_bound", format!("need s >= 1, got {s}")));
    }
    let k_i = k as i64;
    if t < (k_i + 1) * s {
        return Err(Error::Infeasible(format!(
            "{} integers >= {s} cannot sum to {t}",
            k + 1
        )));
    }
    let big = t - k_i * s;
    let mut seq = vec![big];
    seq.extend(std::iter::repeat_n(s, k));
    Ok(BoundReport {
        bound_value: Rational::from_integer(big * big + k_i * s * s),
        witness: Some(Witness::Sequence(seq)),
        satisfied: None,
    })
}

/// `max { d(v) + m(v) }`, an upper bound on the largest Laplacian eigenvalue.
pub fn eigen_upper_bound(g: &Graph) -> Result<BoundReport> {
    let (value, vertex) = degree_profile(g).max_dm()?;
    let lambda = lambda_max(g)?;
    Ok(BoundReport {
        bound_value: value,
        witness: Some(Witness::Vertex(vertex)),
        satisfied: Some(lambda <= to_f64(value) + crate::spectral::DEFAULT_TOLERANCE),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundCheck {
    pub lambda_max: f64,
    pub max_degree: usize,
    pub connected: bool,
    /// `lambda_max >= max_degree + 1 - tol`.
    pub bound_holds: bool,
    /// `|lambda_max - (max_degree + 1)| < tol`.
    pub equality_observed: bool,
    /// For connected graphs, whether `max_degree = n - 1`.
    pub equality_predicted: bool,
}

impl LowerBoundCheck {
    /// The bound holds and, for connected graphs, equality occurs exactly
    /// when some vertex is adjacent to all others.
    pub fn consistent(&self) -> bool {
        self.bound_holds && (!self.connected || self.equality_observed == self.equality_predicted)
    }
}

pub fn eigen_lower_bound_check(g: &Graph, tolerance: f64) -> Result<LowerBoundCheck> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let lambda = lambda_max(g)?;
    let delta = g.max_degree();
    let target = delta as f64 + 1.0;
    let connected = connected_components(g).0 == 1;
    Ok(LowerBoundCheck {
        lambda_max: lambda,
        max_degree: delta,
        connected,
        bound_holds: lambda >= target - tolerance,
        equality_observed: (lambda - target).abs() < tolerance,
        equality_predicted: connected && delta + 1 == g.n(),
    })
}

/// `n - k + 3 + 2 / (n - k + 2)`, the largest `d(v) + m(v)` over unicyclic
/// graphs on `n` vertices whose cycle has length `k`. Attained by `C_k`
/// with `n - k` pendant vertices on one cycle vertex.
pub fn unicyclic_alpha_bound(n: usize, k: usize) -> Result<BoundReport> {
    if k < 3 || k > n {
        return Err(invalid(
            "unicyclic bound",
            format!("need 3 <= k <= n, got n={n}, k={k}"),
        ));
    }
    let x = (n - k) as i64;
    let bound = Rational::from_integer(x + 3) + Rational::new(2, x + 2);
    let extremal = build_named(Named::PendantCycle { n, k })?;
    Ok(BoundReport {
        bound_value: bound,
        witness: Some(Witness::Graph {
            graph6: extremal.to_string(),
            vertex: 0,
        }),
        satisfied: None,
    })
}

/// Spanning trees of `Theta(r,t,s)` and of every bicyclic graph built on
/// it: `rs` for `t <= 1`, `rs - (t-1)^2` otherwise.
pub fn theta_spanning_trees(r: usize, t: usize, s: usize) -> Result<BigUint> {
    ThetaSpec::new(r, t, s)?;
    let (r, t, s) = (r as u64, t as u64, s as u64);
    let shared = t.saturating_sub(1);
    Ok(BigUint::from(r * s - shared * shared))
}

/// Class-wide values for bicyclic graphs on `n` vertices containing
/// `Theta(r,t,s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicyclicBounds {
    #[serde(serialize_with = "biguint_decimal")]
    pub tree_count: BigUint,
    pub degree_cap: usize,
    #[serde(with = "rational_pair")]
    pub alpha_cap: Rational,
}

pub fn bicyclic_bounds(n: usize, r: usize, t: usize, s: usize) -> Result<BicyclicBounds> {
    let tree_count = theta_spanning_trees(r, t, s)?;
    if n + t < r + s {
        return Err(invalid(
            "bicyclic bounds",
            format!("need n >= r + s - t, got n={n}, r={r}, t={t}, s={s}"),
        ));
    }
    let x = n as i64 - r as i64 - s as i64;
    let (degree_cap, alpha_cap) = match t {
        0 => (x + 3, Rational::from_integer(x + 4) + Rational::new(4, x + 3)),
        1 | 2 => (x + 5, Rational::from_integer(x + 6) + Rational::new(4, x + 5)),
        _ => {
            let y = x + t as i64;
            (y + 3, Rational::from_integer(y + 4) + Rational::new(3, y + 3))
        }
    };
    Ok(BicyclicBounds {
        tree_count,
        degree_cap: degree_cap as usize,
        alpha_cap,
    })
}

/// `Theta(r,t,s)` (single-edge bridge when `t = 0`) with every remaining
/// vertex pendant on vertex 0, a vertex of maximum degree in the theta.
pub fn bicyclic_extremal(n: usize, r: usize, t: usize, s: usize) -> Result<Graph> {
    let spec = ThetaSpec::new(r, t, s)?;
    let base = build_theta(spec)?;
    if n < base.n() {
        return Err(invalid(
            "bicyclic extremal",
            format!("n={n} below theta size {}", base.n()),
        ));
    }
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    edges.extend((base.n()..n).map(|v| (0, v)));
    Graph::new(n, &edges)
}

pub(crate) fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn biguint_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Serializes a rational as `{"num": .., "den": ..}`.
pub mod rational_pair {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::Rational;

    #[derive(Serialize, Deserialize)]
    struct Pair {
        num: i64,
        den: i64,
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        Pair {
            num: *r.numer(),
            den: *r.denom(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let p = Pair::deserialize(d)?;
        if p.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational::new(p.num, p.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{cycle, join, path};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sum_squares() {
        let b = sum_squares_bound(2, 10, 2).unwrap();
        assert_eq!(b.bound_value, q(44, 1));
        assert_eq!(b.witness, Some(Witness::Sequence(vec![6, 2, 2])));
        assert_eq!(sum_squares_bound(1, 5, 0).unwrap().bound_value, q(25, 1));
        assert!(matches!(sum_squares_bound(2, 5, 2), Err(Error::Infeasible(_))));
        // s = 2, t = n + m, k = m gives (n - m)^2 + 4m
        for (n, m) in [(5i64, 2usize), (9, 3), (6, 4)] {
            let b = sum_squares_bound(2, n + m as i64, m).unwrap();
            assert_eq!(b.bound_value, q((n - m as i64).pow(2) + 4 * m as i64, 1));
        }
    }

    #[test]
    fn upper_bound() {
        let c6 = eigen_upper_bound(&cycle(6).unwrap()).unwrap();
        assert_eq!((c6.bound_value, c6.satisfied), (q(4, 1), Some(true)));
        let pc = eigen_upper_bound(&build_named(Named::PendantCycle { n: 8, k: 6 }).unwrap()).unwrap();
        assert_eq!(pc.bound_value, q(11, 2));
        assert_eq!(eigen_upper_bound(&path(3).unwrap()).unwrap().bound_value, q(3, 1));
        assert_eq!(eigen_upper_bound(&Graph::empty(2).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn lower_bound() {
        let star = join(&Graph::empty(1).unwrap(), &Graph::empty(4).unwrap());
        let c = eigen_lower_bound_check(&star, 1e-9).unwrap();
        assert!(c.equality_observed && c.equality_predicted && c.consistent());
        assert!((c.lambda_max - 5.0).abs() < 1e-9);
        let c6 = eigen_lower_bound_check(&cycle(6).unwrap(), 1e-9).unwrap();
        assert!(!c6.equality_observed && !c6.equality_predicted && c6.consistent());
        let p4 = eigen_lower_bound_check(&path(4).unwrap(), 1e-9).unwrap();
        assert!((p4.lambda_max - (2.0 + 2f64.sqrt())).abs() < 1e-9);
        assert!(p4.consistent());
        assert!(eigen_lower_bound_check(&Graph::empty(3).unwrap(), 1e-9).is_err());
    }

    #[test]
    fn unicyclic_bounds() {
        assert_eq!(unicyclic_alpha_bound(8, 6).unwrap().bound_value, q(11, 2));
        assert_eq!(unicyclic_alpha_bound(16, 7).unwrap().bound_value, q(12, 1) + q(2, 11));
        assert_eq!(unicyclic_alpha_bound(18, 8).unwrap().bound_value, q(13, 1) + q(1, 6));
        assert!(unicyclic_alpha_bound(5, 2).is_err());
        assert!(unicyclic_alpha_bound(5, 6).is_err());
        for (n, k) in [(8, 6), (9, 3), (5, 5)] {
            let report = unicyclic_alpha_bound(n, k).unwrap();
            let g = build_named(Named::PendantCycle { n, k }).unwrap();
            assert_eq!(degree_profile(&g).max_dm().unwrap().0, report.bound_value);
        }
    }

    #[test]
    fn theta_trees() {
        let t = |r, t, s| theta_spanning_trees(r, t, s).unwrap();
        assert_eq!(t(3, 2, 5), BigUint::from(14u32));
        assert_eq!(t(3, 0, 3), BigUint::from(9u32));
        assert_eq!(t(4, 3, 5), BigUint::from(16u32));
        assert_eq!(t(4, 2, 4), BigUint::from(15u32));
        assert!(theta_spanning_trees(3, 3, 5).is_err());
    }

    #[test]
    fn bicyclic_caps() {
        assert_eq!(bicyclic_bounds(9, 3, 1, 7).unwrap().alpha_cap, q(6, 1));
        assert_eq!(bicyclic_bounds(9, 5, 3, 5).unwrap().alpha_cap, q(33, 5));
        for (r, s) in [(3, 3), (4, 7), (5, 5)] {
            assert_eq!(bicyclic_bounds(r + s, r, 0, s).unwrap().alpha_cap, q(16, 3));
        }
        assert!(bicyclic_bounds(5, 3, 0, 3).is_err());
    }

    #[test]
    fn extremal_bicyclic_attains_caps() {
        for (n, r, t, s) in [(8, 3, 0, 3), (9, 3, 1, 4), (9, 3, 2, 5), (9, 4, 3, 4), (10, 5, 3, 5)] {
            let g = bicyclic_extremal(n, r, t, s).unwrap();
            let caps = bicyclic_bounds(n, r, t, s).unwrap();
            let profile = degree_profile(&g);
            assert_eq!(profile.max_dm().unwrap().0, caps.alpha_cap, "({n},{r},{t},{s})");
            assert_eq!(profile.max_degree, caps.degree_cap, "({n},{r},{t},{s})");
        }
    }

    #[test]
    fn rational_json() {
        let b = unicyclic_alpha_bound(8, 6).unwrap();
        let v = serde_json::to_value(&b).unwrap();
        assert_eq!(v["bound_value"], serde_json::json!({"num": 11, "den": 2}));
    }
}
