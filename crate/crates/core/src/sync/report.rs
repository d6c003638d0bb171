use serde::Serialize;

use super::params::{MEntry, SyncParams};
use super::search::NonSyncSearch;

/// Report schema version; bumped on any incompatible change.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    /// Bit `i` set iff pair orbit `i` is an edge class.
    pub mask: u64,
    pub edges: usize,
    pub omega: usize,
    pub chi: usize,
}

/// Serializable summary of a non-synchronizing search. Points are 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct SyncReport {
    pub version: u32,
    pub degree: usize,
    pub pair_orbits: usize,
    pub verdict: &'static str,
    pub graphs: Vec<GraphReport>,
    pub partitions: Vec<Vec<Vec<usize>>>,
    /// `sections[i]`: regular sections of `partitions[i]`.
    pub sections: Vec<Vec<Vec<usize>>>,
    pub sections_complete: Vec<bool>,
    pub m_table: Vec<MEntry>,
    #[serde(rename = "m_G")]
    pub m_g: Option<usize>,
    #[serde(rename = "M_G")]
    pub big_m: Option<String>,
    #[serde(rename = "M_G_vacuous")]
    pub big_m_vacuous: Option<bool>,
    pub caps_hit: Vec<String>,
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|x| x + 1).collect()).collect()
}

impl SyncReport {
    pub fn new(degree: usize, pair_orbits: usize, search: &NonSyncSearch, params: Option<&SyncParams>) -> Self {
        let synchronizing = !search.graphs.iter().any(|x| x.is_witness());
        SyncReport {
            version: SCHEMA_VERSION,
            degree,
            pair_orbits,
            verdict: if synchronizing { "synchronizing" } else { "non-synchronizing" },
            graphs: search
                .graphs
                .iter()
                .map(|x| GraphReport {
                    mask: x.mask,
                    edges: x.graph.edge_count(),
                    omega: x.omega,
                    chi: x.chi,
                })
                .collect(),
            partitions: search.witnesses.iter().map(|w| one_based(w.partition.blocks())).collect(),
            sections: search.witnesses.iter().map(|w| one_based(&w.sections)).collect(),
            sections_complete: search.witnesses.iter().map(|w| w.sections_complete).collect(),
            m_table: params.map(|p| p.m_table.clone()).unwrap_or_default(),
            m_g: params.map(|p| p.m_g),
            big_m: params.map(|p| p.big_m.to_string()),
            big_m_vacuous: params.map(|p| p.big_m_vacuous),
            caps_hit: search.caps_hit.clone(),
        }
    }
}
