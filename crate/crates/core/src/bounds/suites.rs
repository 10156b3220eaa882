//! Exhaustive checks of the bounds over every small graph or sequence in a
//! family. Each suite returns the number of instances checked, every
//! violation found, and per-class observed maxima.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{bicyclic_bounds, rational_pair, sum_squares_bound, to_f64, unicyclic_alpha_bound, Witness};
use crate::enumerate::{classify, enumerate_forms, Classification, EnumConfig, Family, FamilyQuery};
use crate::error::Result;
use crate::graphcore::{build_named, canonical_form, connected_components, degree_profile, CanonicalForm, Named};
use crate::parallel::sharded_map;
use crate::spectral::{lambda_max, spanning_trees_matrix_tree};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// graph6 of the offending graph, or the offending sequence.
    pub instance: String,
    pub detail: String,
}

/// Largest values seen over one class, e.g. `U(7,4)` or `B(9,3,1,5)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassObservation {
    pub class: String,
    pub graphs: usize,
    pub max_degree: usize,
    pub degree_cap: Option<usize>,
    #[serde(with = "rational_pair")]
    pub max_dm: Rational,
    #[serde(with = "rational_pair")]
    pub bound: Rational,
    /// graph6 of every class member with `max_dm = bound`.
    pub attained_by: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub observed: Vec<ClassObservation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn config(jobs: usize) -> EnumConfig {
    EnumConfig {
        jobs,
        ..EnumConfig::default()
    }
}

struct Row {
    form: CanonicalForm,
    class: String,
    max_degree: usize,
    degree_cap: Option<usize>,
    max_dm: Rational,
    bound: Rational,
    problems: Vec<String>,
}

fn collect(suite: &str, rows: Vec<Row>) -> SuiteReport {
    let mut report = SuiteReport {
        suite: suite.to_string(),
        checked: rows.len(),
        violations: Vec::new(),
        observed: Vec::new(),
    };
    let mut classes: BTreeMap<(usize, String), ClassObservation> = BTreeMap::new();
    for row in rows {
        for detail in row.problems {
            report.violations.push(Violation {
                instance: row.form.as_str().to_string(),
                detail,
            });
        }
        let n = row.form.to_graph().n();
        let entry = classes
            .entry((n, row.class.clone()))
            .or_insert_with(|| ClassObservation {
                class: row.class,
                graphs: 0,
                max_degree: 0,
                degree_cap: row.degree_cap,
                max_dm: Rational::from_integer(0),
                bound: row.bound,
                attained_by: Vec::new(),
            });
        entry.graphs += 1;
        entry.max_degree = entry.max_degree.max(row.max_degree);
        entry.max_dm = entry.max_dm.max(row.max_dm);
        if row.max_dm == row.bound {
            entry.attained_by.push(row.form.as_str().to_string());
        }
    }
    report.observed = classes.into_values().collect();
    report
}

/// Every unicyclic graph on `3..=n_max` vertices with cycle length `k`
/// has `max d(v) + m(v)` at most the unicyclic bound, with equality only
/// for `C_k` with all other vertices pendant on one cycle vertex.
pub fn unicyclic_suite(n_max: usize, jobs: usize) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let forms = enumerate_forms(&FamilyQuery::new(Family::Unicyclic, n), &config(jobs))?;
        let checked = sharded_map(&forms, jobs, |form| -> Result<Row> {
            let g = form.to_graph();
            let Classification::Unicyclic { k } = classify(&g) else {
                return Err(crate::Error::Inconsistent(format!("{form} is not unicyclic")));
            };
            let bound = unicyclic_alpha_bound(n, k)?.bound_value;
            let profile = degree_profile(&g);
            let (max_dm, _) = profile.max_dm()?;
            let mut problems = Vec::new();
            if max_dm > bound {
                problems.push(format!("max d+m {max_dm} exceeds {bound}"));
            }
            let extremal = canonical_form(&build_named(Named::PendantCycle { n, k })?) == *form;
            if (max_dm == bound) != extremal {
                problems.push(format!(
                    "equality {} but pendant-cycle isomorph {extremal}",
                    max_dm == bound
                ));
            }
            Ok(Row {
                form: form.clone(),
                class: format!("U({n},{k})"),
                max_degree: profile.max_degree,
                degree_cap: None,
                max_dm,
                bound,
                problems,
            })
        });
        for row in checked {
            rows.push(row?);
        }
    }
    Ok(collect("unicyclic_dm_bound", rows))
}

/// Every bicyclic graph on `4..=n_max` vertices in `B(n,r,t,s)` has the
/// theta spanning-tree count, maximum degree at most the degree cap and
/// `max d(v) + m(v)` at most the alpha cap.
pub fn bicyclic_suite(n_max: usize, jobs: usize) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for n in 4..=n_max {
        let forms = enumerate_forms(&FamilyQuery::new(Family::Bicyclic, n), &config(jobs))?;
        let checked = sharded_map(&forms, jobs, |form| -> Result<Row> {
            let g = form.to_graph();
            let Classification::Bicyclic { theta } = classify(&g) else {
                return Err(crate::Error::Inconsistent(format!("{form} is not bicyclic")));
            };
            let caps = bicyclic_bounds(n, theta.r, theta.t, theta.s)?;
            let profile = degree_profile(&g);
            let (max_dm, _) = profile.max_dm()?;
            let trees = spanning_trees_matrix_tree(&g);
            let mut problems = Vec::new();
            if trees != caps.tree_count {
                problems.push(format!("{trees} spanning trees, expected {}", caps.tree_count));
            }
            if profile.max_degree > caps.degree_cap {
                problems.push(format!("max degree {} exceeds {}", profile.max_degree, caps.degree_cap));
            }
            if max_dm > caps.alpha_cap {
                problems.push(format!("max d+m {max_dm} exceeds {}", caps.alpha_cap));
            }
            Ok(Row {
                form: form.clone(),
                class: format!("B({n},{},{},{})", theta.r, theta.t, theta.s),
                max_degree: profile.max_degree,
                degree_cap: Some(caps.degree_cap),
                max_dm,
                bound: caps.alpha_cap,
                problems,
            })
        });
        for row in checked {
            rows.push(row?);
        }
    }
    Ok(collect("bicyclic_theta_bounds", rows))
}

/// Every integer sequence of length `k + 1` with entries at least `s` and
/// sum `t` has square sum at most the bound, with equality exactly at the
/// rearrangements of the extremal sequence. Covers `1 <= s <= s_max`,
/// `k <= k_max`, feasible `t <= t_max`.
pub fn sum_squares_suite(s_max: i64, k_max: usize, t_max: i64) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite: "sum_squares_bound".to_string(),
        checked: 0,
        violations: Vec::new(),
        observed: Vec::new(),
    };
    for s in 1..=s_max {
        for k in 0..=k_max {
            for t in (k as i64 + 1) * s..=t_max {
                let bound = sum_squares_bound(s, t, k)?;
                let Some(Witness::Sequence(mut extremal)) = bound.witness else {
                    unreachable!("sum_squares_bound always returns its sequence")
                };
                extremal.sort_unstable();
                let limit = *bound.bound_value.numer();
                let mut attaining = 0usize;
                let mut seq = Vec::with_capacity(k + 1);
                compositions(t, k + 1, s, &mut seq, &mut |x| {
                    report.checked += 1;
                    let sq: i64 = x.iter().map(|v| v * v).sum();
                    let mut sorted = x.to_vec();
                    sorted.sort_unstable();
                    let is_extremal = sorted == extremal;
                    if sq > limit || (sq == limit) != is_extremal {
                        report.violations.push(Violation {
                            instance: format!("{x:?}"),
                            detail: format!("square sum {sq}, bound {limit}, extremal {is_extremal}"),
                        });
                    }
                    attaining += usize::from(sq == limit);
                });
                let expected = if t - k as i64 * s == s { 1 } else { k + 1 };
                if attaining != expected {
                    report.violations.push(Violation {
                        instance: format!("s={s} t={t} k={k}"),
                        detail: format!("{attaining} sequences attain the bound, expected {expected}"),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Calls `f` on every sequence of `len` integers, each at least `min`,
/// summing to `total`.
fn compositions(total: i64, len: usize, min: i64, prefix: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if len == 1 {
        prefix.push(total);
        f(prefix);
        prefix.pop();
        return;
    }
    let mut first = min;
    while total - first >= min * (len as i64 - 1) {
        prefix.push(first);
        compositions(total - first, len - 1, min, prefix, f);
        prefix.pop();
        first += 1;
    }
}

/// For every graph on at most `n_max` vertices with an edge:
/// `Δ + 1 - tol <= λ_max <= max d(v) + m(v) + tol`, and for connected
/// graphs `|λ_max - (Δ + 1)| < tol` exactly when `Δ = n - 1`.
pub fn eigen_bounds_suite(n_max: usize, tolerance: f64, jobs: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite: "eigenvalue_degree_bounds".to_string(),
        checked: 0,
        violations: Vec::new(),
        observed: Vec::new(),
    };
    for n in 2..=n_max {
        let query = FamilyQuery::new(Family::All, n).with_edges(1, n * (n - 1) / 2);
        let forms = enumerate_forms(&query, &config(jobs))?;
        let results = sharded_map(&forms, jobs, |form| -> Result<Vec<String>> {
            let g = form.to_graph();
            let lambda = lambda_max(&g)?;
            let (upper, _) = degree_profile(&g).max_dm()?;
            let delta = g.max_degree();
            let lower = delta as f64 + 1.0;
            let mut problems = Vec::new();
            if lambda < lower - tolerance {
                problems.push(format!("lambda_max {lambda} below max degree + 1 = {lower}"));
            }
            if lambda > to_f64(upper) + tolerance {
                problems.push(format!("lambda_max {lambda} above max d+m = {upper}"));
            }
            if connected_components(&g).0 == 1 {
                let equal = (lambda - lower).abs() < tolerance;
                if equal != (delta + 1 == n) {
                    problems.push(format!("lambda_max {lambda}, max degree {delta}, n {n}"));
                }
            }
            Ok(problems)
        });
        for (form, problems) in forms.iter().zip(results) {
            report.checked += 1;
            for detail in problems? {
                report.violations.push(Violation {
                    instance: form.as_str().to_string(),
                    detail,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        // sequences of 3 positive integers summing to 6: C(5, 2)
        let mut count = 0;
        compositions(6, 3, 1, &mut Vec::new(), &mut |x| {
            assert_eq!(x.iter().sum::<i64>(), 6);
            count += 1;
        });
        assert_eq!(count, 10);
    }

    #[test]
    fn small_suites_pass() {
        let uni = unicyclic_suite(6, 1).unwrap();
        assert!(uni.passed(), "{:?}", uni.violations);
        // unicyclic graphs on 3..=6 vertices: 1 + 2 + 5 + 13
        assert_eq!(uni.checked, 21);
        let bi = bicyclic_suite(6, 1).unwrap();
        assert!(bi.passed(), "{:?}", bi.violations);
        let sq = sum_squares_suite(2, 2, 8).unwrap();
        assert!(sq.passed(), "{:?}", sq.violations);
        let eig = eigen_bounds_suite(5, 1e-9, 1).unwrap();
        assert!(eig.passed(), "{:?}", eig.violations);
        // graphs on 2..=5 vertices with at least one edge
        assert_eq!(eig.checked, 1 + 3 + 10 + 33);
    }
}
