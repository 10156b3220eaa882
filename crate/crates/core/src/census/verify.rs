use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::{census, lds_in, LdsReport, Universe};
use crate::bounds::suites::{bicyclic_suite, eigen_bounds_suite, sum_squares_suite, unicyclic_suite, SuiteReport};
use crate::enumerate::{trees::free_trees, EnumConfig, Family, FamilyQuery};
use crate::error::Result;
use crate::graphcore::{build_named, build_theta, canonical_form, complete, cycle, join, Graph, Named, ThetaSpec};
use crate::spectral::{charpoly, join_spectrum, CharPoly, DEFAULT_TOLERANCE};

/// Limits for [`verify_paper`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest vertex count for any exhaustive universe.
    pub max_n: usize,
    /// Largest `m` in the `K_m` join identities.
    pub max_m: usize,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 9,
            max_m: 5,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    OutOfBudget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::OutOfBudget => "out_of_budget",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    /// graph6 strings (or a sequence) exhibiting the failure.
    pub graphs: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinRow {
    pub m: usize,
    pub left: CharPoly,
    pub right: CharPoly,
    pub equal: bool,
    /// Whether the two joins have different canonical forms.
    pub non_isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Pair {
        left: String,
        right: String,
        left_charpoly: CharPoly,
        right_charpoly: CharPoly,
    },
    JoinFamily {
        rows: Vec<JoinRow>,
    },
    Lds {
        checks: Vec<LdsReport>,
        /// Seeds whose universe exceeds the vertex budget.
        skipped: Vec<String>,
    },
    Suite(SuiteReport),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub statement: String,
    pub status: Status,
    pub evidence: Evidence,
    pub counterexample: Option<Counterexample>,
    pub runtime_ms: f64,
}

impl VerificationReport {
    /// One-line description of the evidence.
    pub fn summary(&self) -> String {
        match &self.evidence {
            Evidence::Pair { left_charpoly, .. } => format!("shared polynomial {left_charpoly}"),
            Evidence::JoinFamily { rows } => {
                let good = rows.iter().filter(|r| r.equal && r.non_isomorphic).count();
                format!("{good}/{} values of m match", rows.len())
            }
            Evidence::Lds { checks, skipped } => {
                let unique = checks.iter().filter(|c| c.is_lds).count();
                format!(
                    "{unique}/{} joins unique in their universe, {} seeds over budget",
                    checks.len(),
                    skipped.len()
                )
            }
            Evidence::Suite(s) => format!("{} instances, {} violations", s.checked, s.violations.len()),
        }
    }
}

fn timed(
    claim: &str,
    statement: &str,
    run: impl FnOnce() -> Result<(Status, Evidence, Option<Counterexample>)>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (status, evidence, counterexample) = run()?;
    Ok(VerificationReport {
        claim: claim.to_string(),
        statement: statement.to_string(),
        status,
        evidence,
        counterexample,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn k1() -> Graph {
    Graph::empty(1).expect("K1")
}

fn theta325() -> Result<Graph> {
    build_theta(ThetaSpec::new(3, 2, 5)?)
}

/// Runs the whole claim battery. Each claim yields one report; claims
/// that need universes larger than the budget are reported as
/// `out_of_budget` with whatever part did fit.
pub fn verify_paper(budget: &Budget) -> Result<Vec<VerificationReport>> {
    let mut reports = vec![
        timed(
            "c6_cone_pair",
            "C6 x K1 and 2K1 x (2P2 + K1) are cospectral and not isomorphic",
            || cospectral_pair(&join(&k1(), &cycle(6)?), &build_named(Named::H1)?),
        )?,
        timed(
            "theta325_cone_pair",
            "Theta(3,2,5) x K1 and 2K1 x (P4 + K1) are cospectral and not isomorphic",
            || cospectral_pair(&join(&k1(), &theta325()?), &build_named(Named::H2)?),
        )?,
        timed(
            "theta325_join_family",
            "Theta(3,2,5) x K_m and H2 x K_(m-1) are cospectral for every m tested",
            || join_family(&theta325()?, &build_named(Named::H2)?, budget.max_m),
        )?,
        timed(
            "c6_join_family",
            "C6 x K_m and H1 x K_(m-1) are cospectral for every m tested",
            || join_family(&cycle(6)?, &build_named(Named::H1)?, budget.max_m),
        )?,
    ];
    let mut universes = UniverseCache::new(budget);
    reports.push(timed(
        "tree_joins_lds",
        "T x K1 and T x K2 are determined by their spectrum for every tree T on at most 6 vertices",
        || {
            let mut seeds = Vec::new();
            for n in 1..=6 {
                for form in free_trees(n) {
                    for m in [1, 2] {
                        seeds.push((format!("{form} x K{m}"), form.to_graph(), m));
                    }
                }
            }
            lds_seeds(&seeds, &mut universes)
        },
    )?);
    reports.push(timed(
        "cycle_joins_lds",
        "C_n x K1 is determined by its spectrum for 3 <= n <= 8, n != 6",
        || {
            let mut seeds = Vec::new();
            for n in (3..=8).filter(|&n| n != 6) {
                seeds.push((format!("C{n} x K1"), cycle(n)?, 1));
            }
            lds_seeds(&seeds, &mut universes)
        },
    )?);
    reports.push(timed(
        "lollipop_joins_lds",
        "lollipop(n,k) x K1 is determined by its spectrum for 3 <= k < n <= 8",
        || {
            let mut seeds = Vec::new();
            for n in 4..=8 {
                for k in 3..n {
                    let g = build_named(Named::Lollipop { n, k })?;
                    seeds.push((format!("lollipop({n},{k}) x K1"), g, 1));
                }
            }
            lds_seeds(&seeds, &mut universes)
        },
    )?);
    let jobs = budget.jobs;
    reports.push(timed(
        "unicyclic_dm_bound",
        "max d(v)+m(v) <= n-k+3+2/(n-k+2) on unicyclic graphs with n <= 9 and cycle length k, \
         equality only for C_k with n-k pendant vertices on one vertex",
        || suite(9, budget.max_n, |n| unicyclic_suite(n, jobs)),
    )?);
    reports.push(timed(
        "bicyclic_theta_bounds",
        "bicyclic graphs with n <= 9 on Theta(r,t,s) have the theta spanning-tree count and \
         respect the degree and d(v)+m(v) caps",
        || suite(9, budget.max_n, |n| bicyclic_suite(n, jobs)),
    )?);
    reports.push(timed(
        "sum_squares_bound",
        "k+1 <= 5 integers >= s (s <= 3) summing to t <= 20 have square sum <= (t-ks)^2 + ks^2, \
         with equality only at (t-ks, s, ..., s)",
        || suite(0, 0, |_| sum_squares_suite(3, 4, 20)),
    )?);
    reports.push(timed(
        "eigenvalue_degree_bounds",
        "max degree + 1 <= lambda_max <= max d(v)+m(v) on graphs with n <= 8, equality on the \
         left for connected graphs exactly when a vertex is adjacent to all others",
        || suite(8, budget.max_n, |n| eigen_bounds_suite(n, DEFAULT_TOLERANCE, jobs)),
    )?);
    Ok(reports)
}

fn cospectral_pair(a: &Graph, b: &Graph) -> Result<(Status, Evidence, Option<Counterexample>)> {
    let (pa, pb) = (charpoly(a)?, charpoly(b)?);
    let (fa, fb) = (canonical_form(a), canonical_form(b));
    let counterexample = if pa != pb {
        Some("characteristic polynomials differ")
    } else if fa == fb {
        Some("the graphs are isomorphic")
    } else {
        None
    }
    .map(|detail| Counterexample {
        graphs: vec![fa.as_str().to_string(), fb.as_str().to_string()],
        detail: detail.to_string(),
    });
    let status = if counterexample.is_some() {
        Status::Refuted
    } else {
        Status::Verified
    };
    let evidence = Evidence::Pair {
        left: fa.as_str().to_string(),
        right: fb.as_str().to_string(),
        left_charpoly: pa,
        right_charpoly: pb,
    };
    Ok((status, evidence, counterexample))
}

/// Compares `g x K_m` with `h x K_(m-1)` for `m = 1..=max_m`, building
/// both polynomials from the factors' polynomials with the join identity.
fn join_family(g: &Graph, h: &Graph, max_m: usize) -> Result<(Status, Evidence, Option<Counterexample>)> {
    let (pg, ph) = (charpoly(g)?, charpoly(h)?);
    let mut rows = Vec::new();
    let mut counterexample = None;
    for m in 1..=max_m {
        let left = join_spectrum(&pg, &charpoly(&complete(m)?)?)?;
        let right = if m == 1 {
            ph.clone()
        } else {
            join_spectrum(&ph, &charpoly(&complete(m - 1)?)?)?
        };
        let lg = join(g, &complete(m)?);
        let rh = if m == 1 { h.clone() } else { join(h, &complete(m - 1)?) };
        let (fl, fr) = (canonical_form(&lg), canonical_form(&rh));
        let row = JoinRow {
            m,
            equal: left == right,
            non_isomorphic: fl != fr,
            left,
            right,
        };
        if counterexample.is_none() && !(row.equal && row.non_isomorphic) {
            counterexample = Some(Counterexample {
                graphs: vec![fl.as_str().to_string(), fr.as_str().to_string()],
                detail: format!(
                    "m = {m}: equal polynomials {}, isomorphic {}",
                    row.equal, !row.non_isomorphic
                ),
            });
        }
        rows.push(row);
    }
    let status = if counterexample.is_some() {
        Status::Refuted
    } else {
        Status::Verified
    };
    Ok((status, Evidence::JoinFamily { rows }, counterexample))
}

/// Runs `run` up to `min(nominal, max_n)` vertices; a truncated run that
/// finds no violation is out of budget rather than verified.
fn suite(
    nominal: usize,
    max_n: usize,
    run: impl FnOnce(usize) -> Result<SuiteReport>,
) -> Result<(Status, Evidence, Option<Counterexample>)> {
    let report = run(nominal.min(max_n))?;
    let counterexample = report.violations.first().map(|v| Counterexample {
        graphs: vec![v.instance.clone()],
        detail: v.detail.clone(),
    });
    let status = if !report.passed() {
        Status::Refuted
    } else if max_n < nominal {
        Status::OutOfBudget
    } else {
        Status::Verified
    };
    Ok((status, Evidence::Suite(report), counterexample))
}

/// Censuses of "all graphs with `n` vertices and `e` edges", computed once.
struct UniverseCache {
    budget: Budget,
    censuses: BTreeMap<(usize, usize), super::Census>,
}

impl UniverseCache {
    fn new(budget: &Budget) -> UniverseCache {
        UniverseCache {
            budget: *budget,
            censuses: BTreeMap::new(),
        }
    }

    fn get(&mut self, n: usize, e: usize) -> Result<&super::Census> {
        if !self.censuses.contains_key(&(n, e)) {
            let universe = Universe::Family(FamilyQuery::new(Family::All, n).with_edges(e, e));
            let config = EnumConfig {
                max_all: self.budget.max_n,
                jobs: self.budget.jobs,
                ..EnumConfig::default()
            };
            self.censuses.insert((n, e), census(&universe, &config)?);
        }
        Ok(&self.censuses[&(n, e)])
    }
}

fn lds_seeds(
    seeds: &[(String, Graph, usize)],
    universes: &mut UniverseCache,
) -> Result<(Status, Evidence, Option<Counterexample>)> {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut counterexample = None;
    for (label, g, m) in seeds {
        let joined = join(g, &complete(*m)?);
        let n = joined.n();
        if n > universes.budget.max_n {
            skipped.push(format!("{label} needs all graphs on {n} vertices"));
            continue;
        }
        let report = lds_in(universes.get(n, joined.edge_count())?, &joined)?;
        if counterexample.is_none() && !report.is_lds {
            counterexample = Some(Counterexample {
                graphs: vec![report.graph.clone(), report.mates[0].clone()],
                detail: format!("{label} has a cospectral mate"),
            });
        }
        checks.push(report);
    }
    let status = if counterexample.is_some() {
        Status::Refuted
    } else if !skipped.is_empty() {
        Status::OutOfBudget
    } else {
        Status::Verified
    };
    Ok((status, Evidence::Lds { checks, skipped }, counterexample))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_budget_battery() {
        let budget = Budget {
            max_n: 7,
            max_m: 3,
            jobs: 0,
        };
        let reports = verify_paper(&budget).unwrap();
        assert_eq!(reports.len(), 11);
        for r in &reports {
            assert_ne!(r.status, Status::Refuted, "{}: {:?}", r.claim, r.counterexample);
        }
        let status = |claim: &str| reports.iter().find(|r| r.claim == claim).unwrap().status;
        assert_eq!(status("c6_cone_pair"), Status::Verified);
        assert_eq!(status("theta325_join_family"), Status::Verified);
        // trees on 6 vertices joined with K2 need 8 vertices
        assert_eq!(status("tree_joins_lds"), Status::OutOfBudget);
        assert_eq!(status("unicyclic_dm_bound"), Status::OutOfBudget);
        assert_eq!(status("sum_squares_bound"), Status::Verified);
    }

    #[test]
    fn pair_refutation_carries_graphs() {
        let (status, _, cx) = cospectral_pair(&cycle(4).unwrap(), &cycle(4).unwrap()).unwrap();
        assert_eq!(status, Status::Refuted);
        assert_eq!(cx.unwrap().graphs.len(), 2);
    }
}
