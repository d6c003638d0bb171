use num_rational::Ratio;

use crate::perm::PermGroup;
use crate::{Caps, Error, Result};

use super::gamma::{gamma_s_complement, m_in_complement};
use super::search::{nonsync_search, NonSyncWitness};

/// One value `m(S, T)`; indices point into the witness list, its sections
/// and the blocks of its partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MEntry {
    pub partition: usize,
    pub section: usize,
    pub part: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncParams {
    pub m_g: usize,
    pub big_m: Ratio<u64>,
    /// No two distinct partitions share a rank, so `big_m` is 0 by convention.
    pub big_m_vacuous: bool,
    /// False when some witness had its sections truncated.
    pub m_exact: bool,
    pub m_table: Vec<MEntry>,
}

/// `m(G)` and `M(G)` from the complete list of non-synchronizing partitions.
pub fn sync_params(g: &PermGroup, witnesses: &[NonSyncWitness]) -> Result<SyncParams> {
    if witnesses.is_empty() {
        return Err(Error::Undefined);
    }
    let mut table = Vec::new();
    for (pi, w) in witnesses.iter().enumerate() {
        if w.partition.degree() != g.degree() {
            return Err(Error::DegreeMismatch(g.degree(), w.partition.degree()));
        }
        for (si, s) in w.sections.iter().enumerate() {
            let bar = gamma_s_complement(g, s)?;
            for (ti, t) in w.partition.blocks().iter().enumerate() {
                let m = m_in_complement(&bar, s, t)?;
                table.push(MEntry { partition: pi, section: si, part: ti, m });
            }
        }
    }
    let m_g = table.iter().map(|e| e.m).max().ok_or(Error::Undefined)?;

    let mut big_m: Option<Ratio<u64>> = None;
    for (i, a) in witnesses.iter().enumerate() {
        for b in &witnesses[i + 1..] {
            let k = a.partition.rank();
            if b.partition.rank() == k {
                let r = Ratio::new(a.partition.common_blocks(&b.partition) as u64, k as u64);
                big_m = Some(big_m.map_or(r, |m| m.max(r)));
            }
        }
    }
    Ok(SyncParams {
        m_g,
        big_m: big_m.unwrap_or_else(|| Ratio::from_integer(0)),
        big_m_vacuous: big_m.is_none(),
        m_exact: witnesses.iter().all(|w| w.sections_complete),
        m_table: table,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    /// Non-synchronizing with `m(G) = 2` and `M(G) ≤ 1/2`.
    pub holds: bool,
    pub synchronizing: bool,
    pub params: Option<SyncParams>,
}

/// Whether `g` meets the hypotheses under which `m(G) = 2` and
/// `M(G) ≤ 1/2` force almost-synchronization.
pub fn theorem6_gate(g: &PermGroup, caps: &Caps) -> Result<Gate> {
    let search = nonsync_search(g, caps)?;
    if search.witnesses.is_empty() {
        return Ok(Gate { holds: false, synchronizing: true, params: None });
    }
    let params = sync_params(g, &search.witnesses)?;
    Ok(Gate {
        holds: params.m_g == 2 && params.big_m <= Ratio::new(1, 2),
        synchronizing: false,
        params: Some(params),
    })
}

/// Pairs of witnesses that share a regular section yet have two parts
/// meeting in at least two points without being equal.
pub fn two_intersect_violations(witnesses: &[NonSyncWitness]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in witnesses.iter().enumerate() {
        for (j, b) in witnesses.iter().enumerate().skip(i + 1) {
            let shared = a.sections.iter().any(|s| b.sections.binary_search(s).is_ok());
            if !shared {
                continue;
            }
            let bad = a.partition.blocks().iter().any(|x| {
                b.partition.blocks().iter().any(|y| {
                    x != y && x.iter().filter(|v| y.binary_search(v).is_ok()).count() >= 2
                })
            });
            if bad {
                out.push((i, j));
            }
        }
    }
    out
}
