//! Partitioning a universe of graphs into Laplacian cospectral classes,
//! deciding whether a graph is determined by its spectrum within a
//! universe, the claim-verification battery, and report output.

pub mod report;
pub mod verify;

use std::collections::BTreeMap;

use serde::Serialize;

pub use report::{emit_census, emit_reports, to_json, write_output, Format, SCHEMA_VERSION};
pub use verify::{verify_paper, Budget, Counterexample, Evidence, Status, VerificationReport};

use crate::enumerate::{enumerate_forms, EnumConfig, Family, FamilyQuery};
use crate::error::{Error, Result};
use crate::graphcore::{canonical_form, CanonicalForm, Graph};
use crate::parallel::sharded_map;
use crate::spectral::{charpoly, direct_invariants, invariants_from_charpoly, CharPoly, SpectralInvariants};

/// The graphs a census ranges over.
#[derive(Debug, Clone)]
pub enum Universe {
    Family(FamilyQuery),
    /// An explicit list; isomorphic duplicates collapse to one member.
    Corpus {
        name: String,
        graphs: Vec<Graph>,
    },
}

impl Universe {
    pub fn describe(&self) -> String {
        match self {
            Universe::Family(q) => {
                let mut text = format!("{} n={}", family_name(q.family), q.n);
                if let Some((lo, hi)) = q.edge_range {
                    if lo == hi {
                        text.push_str(&format!(" edges={lo}"));
                    } else {
                        text.push_str(&format!(" edges={lo}..={hi}"));
                    }
                }
                if let Some(params) = q.cycle_params {
                    text.push_str(&format!(" {params:?}"));
                }
                text
            }
            Universe::Corpus { name, graphs } => format!("corpus {name} ({} graphs)", graphs.len()),
        }
    }

    pub fn admits(&self, g: &Graph) -> bool {
        match self {
            Universe::Family(q) => q.admits(g),
            Universe::Corpus { graphs, .. } => {
                let form = canonical_form(g);
                graphs.iter().any(|h| canonical_form(h) == form)
            }
        }
    }

    /// Canonical forms of the members, sorted and distinct.
    pub fn forms(&self, config: &EnumConfig) -> Result<Vec<CanonicalForm>> {
        match self {
            Universe::Family(q) => enumerate_forms(q, config),
            Universe::Corpus { graphs, .. } => {
                let mut forms = sharded_map(graphs, config.jobs, canonical_form);
                forms.sort_unstable();
                forms.dedup();
                Ok(forms)
            }
        }
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Tree => "tree",
        Family::Unicyclic => "unicyclic",
        Family::Bicyclic => "bicyclic",
        Family::AllConnected => "all_connected",
        Family::All => "all",
    }
}

/// Graphs of a universe sharing one characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CospectralClass {
    pub key: CharPoly,
    /// Canonical graph6 strings, sorted.
    pub members: Vec<String>,
    pub invariants: SpectralInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub universe: String,
    pub size: usize,
    /// Ordered by invariants, then by key.
    pub classes: Vec<CospectralClass>,
}

impl Census {
    /// The class containing a graph with polynomial `key`, if any.
    pub fn class_of(&self, key: &CharPoly) -> Option<&CospectralClass> {
        self.classes.iter().find(|c| &c.key == key)
    }

    /// Classes with two or more members.
    pub fn cospectral_classes(&self) -> impl Iterator<Item = &CospectralClass> {
        self.classes.iter().filter(|c| c.members.len() > 1)
    }
}

/// Partitions `universe` by characteristic polynomial. Graphs are first
/// grouped by their combinatorial invariants, which every cospectral pair
/// shares, and each polynomial is checked against those invariants.
/// The result does not depend on `config.jobs`.
pub fn census(universe: &Universe, config: &EnumConfig) -> Result<Census> {
    let forms = universe.forms(config)?;
    let keyed = sharded_map(&forms, config.jobs, |form| -> Result<(SpectralInvariants, CharPoly)> {
        let g = form.to_graph();
        let direct = direct_invariants(&g);
        let p = charpoly(&g)?;
        if invariants_from_charpoly(&p)? != direct {
            return Err(Error::Inconsistent(format!(
                "polynomial invariants of {form} disagree with direct counts"
            )));
        }
        Ok((direct, p))
    });
    let mut buckets: BTreeMap<SpectralInvariants, BTreeMap<CharPoly, Vec<String>>> = BTreeMap::new();
    for (form, entry) in forms.iter().zip(keyed) {
        let (inv, p) = entry?;
        buckets
            .entry(inv)
            .or_default()
            .entry(p)
            .or_default()
            .push(form.as_str().to_string());
    }
    let classes = buckets
        .into_iter()
        .flat_map(|(inv, by_key)| {
            by_key.into_iter().map(move |(key, mut members)| {
                members.sort_unstable();
                CospectralClass {
                    key,
                    members,
                    invariants: inv.clone(),
                }
            })
        })
        .collect();
    Ok(Census {
        universe: universe.describe(),
        size: forms.len(),
        classes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdsReport {
    /// Canonical graph6 of the graph checked.
    pub graph: String,
    pub universe: String,
    /// Universe members sharing the graph's vertex and edge counts, the
    /// only candidates for a cospectral mate.
    pub compared: usize,
    pub is_lds: bool,
    pub mates: Vec<String>,
}

/// Whether `g` is the only graph of `universe`, up to isomorphism, with
/// its Laplacian spectrum. Only members with the same edge count are
/// examined, since cospectral graphs have equal edge counts.
pub fn lds_check(g: &Graph, universe: &Universe, config: &EnumConfig) -> Result<LdsReport> {
    if !universe.admits(g) {
        return Err(Error::OutsideUniverse(format!(
            "{} is not in {}",
            canonical_form(g),
            universe.describe()
        )));
    }
    let e = g.edge_count();
    let narrowed = match universe {
        Universe::Family(q) => Universe::Family(q.clone().with_edges(e, e)),
        Universe::Corpus { name, graphs } => Universe::Corpus {
            name: name.clone(),
            graphs: graphs
                .iter()
                .filter(|h| h.n() == g.n() && h.edge_count() == e)
                .cloned()
                .collect(),
        },
    };
    let within = census(&narrowed, config)?;
    let mut report = lds_in(&within, g)?;
    report.universe = universe.describe();
    Ok(report)
}

/// [`lds_check`] against an already computed census that contains `g`.
pub fn lds_in(census: &Census, g: &Graph) -> Result<LdsReport> {
    let form = canonical_form(g);
    let key = charpoly(g)?;
    let class = census
        .class_of(&key)
        .filter(|c| c.members.iter().any(|m| m == form.as_str()))
        .ok_or_else(|| Error::OutsideUniverse(format!("{form} is not in {}", census.universe)))?;
    let mates: Vec<String> = class.members.iter().filter(|m| *m != form.as_str()).cloned().collect();
    Ok(LdsReport {
        graph: form.as_str().to_string(),
        universe: census.universe.clone(),
        compared: census
            .classes
            .iter()
            .filter(|c| c.invariants.n_edges == class.invariants.n_edges)
            .map(|c| c.members.len())
            .sum(),
        is_lds: mates.is_empty(),
        mates,
    })
}
