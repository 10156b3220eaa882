//! Exhaustive generation of non-isomorphic graphs by family, and
//! structural classification into trees, unicyclic and bicyclic graphs.

pub mod augment;
pub mod classify;
pub mod trees;

use serde::{Deserialize, Serialize};

pub use classify::{classify, Classification};

use crate::error::{invalid, Error, Result};
use crate::graphcore::{is_connected, CanonicalForm, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Tree,
    Unicyclic,
    Bicyclic,
    AllConnected,
    All,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "tree" => Family::Tree,
            "unicyclic" => Family::Unicyclic,
            "bicyclic" => Family::Bicyclic,
            "all_connected" | "all-connected" | "connected" => Family::AllConnected,
            "all" => Family::All,
            other => return Err(invalid("family", format!("unknown family {other:?}"))),
        })
    }
}

/// Restricts a unicyclic or bicyclic query to `U(n,k)` or `B(n,r,t,s)`.
/// For `t = 0` the bridge length is ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleParams {
    Cycle { k: usize },
    Theta { r: usize, t: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyQuery {
    pub family: Family,
    pub n: usize,
    pub edge_range: Option<(usize, usize)>,
    pub cycle_params: Option<CycleParams>,
}

impl FamilyQuery {
    pub fn new(family: Family, n: usize) -> FamilyQuery {
        FamilyQuery {
            family,
            n,
            edge_range: None,
            cycle_params: None,
        }
    }

    pub fn with_edges(mut self, lo: usize, hi: usize) -> FamilyQuery {
        self.edge_range = Some((lo, hi));
        self
    }

    pub fn with_cycle(mut self, params: CycleParams) -> FamilyQuery {
        self.cycle_params = Some(params);
        self
    }

    /// Whether `g` satisfies every constraint of the query.
    pub fn admits(&self, g: &Graph) -> bool {
        if g.n() != self.n {
            return false;
        }
        if let Some((lo, hi)) = self.edge_range {
            if !(lo..=hi).contains(&g.edge_count()) {
                return false;
            }
        }
        let class = classify(g);
        let family_ok = match self.family {
            Family::All => true,
            Family::AllConnected => is_connected(g),
            Family::Tree => class == Classification::Tree,
            Family::Unicyclic => matches!(class, Classification::Unicyclic { .. }),
            Family::Bicyclic => matches!(class, Classification::Bicyclic { .. }),
        };
        family_ok
            && match (self.cycle_params, class) {
                (None, _) => true,
                (Some(CycleParams::Cycle { k }), Classification::Unicyclic { k: found }) => k == found,
                (Some(CycleParams::Theta { r, t, s }), Classification::Bicyclic { theta }) => {
                    (theta.r, theta.t, theta.s) == (r, t, s)
                }
                _ => false,
            }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest `n` for `all` and `all_connected` queries.
    pub max_all: usize,
    /// Largest `n` for tree, unicyclic and bicyclic queries.
    pub max_family: usize,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_all: 9,
            max_family: 12,
            jobs: 0,
        }
    }
}

pub fn enumerate(query: &FamilyQuery) -> Result<Vec<Graph>> {
    enumerate_with(query, &EnumConfig::default())
}

/// One canonical representative per isomorphism class admitted by `query`,
/// in canonical-form order.
pub fn enumerate_with(query: &FamilyQuery, config: &EnumConfig) -> Result<Vec<Graph>> {
    Ok(enumerate_forms(query, config)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Like [`enumerate_with`] but yields canonical forms.
pub fn enumerate_forms(query: &FamilyQuery, config: &EnumConfig) -> Result<Vec<CanonicalForm>> {
    let n = query.n;
    let (cap, what) = match query.family {
        Family::All | Family::AllConnected => (config.max_all, "all-graph enumeration"),
        _ => (config.max_family, "family enumeration"),
    };
    if n > cap {
        return Err(Error::SizeLimit { what, n, limit: cap });
    }
    let forms = match query.family {
        Family::All | Family::AllConnected => {
            let (mut lo, mut hi) = query.edge_range.unwrap_or((0, usize::MAX));
            if query.family == Family::AllConnected {
                lo = lo.max(n.saturating_sub(1));
            }
            hi = hi.min(n * n.saturating_sub(1) / 2);
            if lo > hi {
                Vec::new()
            } else {
                augment::all_graphs(n, lo, hi, config.jobs)
            }
        }
        Family::Tree => trees::free_trees(n),
        Family::Unicyclic => trees::add_one_edge(&trees::free_trees(n), config.jobs),
        Family::Bicyclic => {
            let unicyclic = trees::add_one_edge(&trees::free_trees(n), config.jobs);
            trees::add_one_edge(&unicyclic, config.jobs)
        }
    };
    let mut forms: Vec<CanonicalForm> = forms
        .into_iter()
        .filter(|form| query.admits(&form.to_graph()))
        .collect();
    forms.sort_unstable();
    Ok(forms)
}
