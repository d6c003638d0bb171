use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use crate::bits::Bits;
use crate::exact_cover::exact_covers;
use crate::graphs::{
    chromatic_number_capped, clique_number_capped, cliques_of_size, cliques_of_size_upto, Graph,
};
use crate::perm::PermGroup;
use crate::transform::{is_section, Partition};
use crate::{Caps, Error, Result};

/// Largest number of pair orbits for which all `2^r − 2` invariant graphs
/// are examined.
pub const MAX_PAIR_ORBITS: usize = 24;

/// A nontrivial G-invariant graph with its clique and chromatic numbers.
#[derive(Clone, Debug)]
pub struct InvariantGraph {
    /// Bit `i` set iff pair orbit `i` is an edge class.
    pub mask: u64,
    pub graph: Graph,
    pub omega: usize,
    pub chi: usize,
    pub clique: Vec<usize>,
    pub coloring: Vec<usize>,
}

impl InvariantGraph {
    /// `ω = χ`: the graph witnesses non-synchronization.
    pub fn is_witness(&self) -> bool {
        self.omega == self.chi
    }
}

/// A non-synchronizing partition with its regular sections.
#[derive(Clone, Debug)]
pub struct NonSyncWitness {
    pub partition: Partition,
    /// Sorted G-regular sections (each sorted).
    pub sections: Vec<Vec<usize>>,
    /// False if section enumeration stopped at the cap.
    pub sections_complete: bool,
    /// Mask of the first invariant graph whose colourings produced the partition.
    pub source_mask: u64,
    pub source_graph: Graph,
}

#[derive(Clone, Debug)]
pub struct NonSyncSearch {
    /// All nontrivial invariant graphs, by mask.
    pub graphs: Vec<InvariantGraph>,
    /// Partitions in canonical order.
    pub witnesses: Vec<NonSyncWitness>,
    /// Names of caps that truncated section enumeration.
    pub caps_hit: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SyncVerdict {
    pub synchronizing: bool,
    /// First graph (by mask) with `ω = χ`.
    pub witness: Option<InvariantGraph>,
    /// Every nontrivial invariant graph: the exhaustion certificate.
    pub graphs: Vec<InvariantGraph>,
}

/// The union of the pair orbits selected by `mask`.
pub fn invariant_graph(g: &PermGroup, mask: u64) -> Result<Graph> {
    let orbits = g.pair_orbits();
    if orbits.len() < 64 && mask >> orbits.len() != 0 {
        return Err(Error::Precondition(format!(
            "mask {mask:#x} selects orbits beyond the {} pair orbits",
            orbits.len()
        )));
    }
    let mut x = Graph::new(g.degree());
    for (i, orbit) in orbits.iter().enumerate() {
        if mask >> i & 1 == 1 {
            for &(a, b) in orbit {
                x.add_edge(a, b);
            }
        }
    }
    Ok(x)
}

fn analyze(g: &PermGroup, caps: &Caps) -> Result<Vec<InvariantGraph>> {
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    let r = g.rank_on_pairs();
    if r > MAX_PAIR_ORBITS {
        return Err(Error::cap("pair orbits", MAX_PAIR_ORBITS as u64));
    }
    if r < 2 {
        return Ok(Vec::new());
    }
    let full = (1u64 << r) - 1;
    (1..full)
        .into_par_iter()
        .map(|mask| {
            let graph = invariant_graph(g, mask)?;
            let clique = clique_number_capped(&graph, caps.nodes)?;
            let coloring = chromatic_number_capped(&graph, caps.nodes)?;
            Ok(InvariantGraph {
                mask,
                omega: clique.size,
                chi: coloring.colors,
                clique: clique.vertices,
                coloring: coloring.assignment,
                graph,
            })
        })
        .collect()
}

/// Decides whether the transitive group `g` is synchronizing by examining
/// every nontrivial invariant graph.
pub fn is_synchronizing_group(g: &PermGroup, caps: &Caps) -> Result<SyncVerdict> {
    let graphs = analyze(g, caps)?;
    let witness = graphs.iter().find(|x| x.is_witness()).cloned();
    Ok(SyncVerdict {
        synchronizing: witness.is_none(),
        witness,
        graphs,
    })
}

/// The orbit of the set `s` under `g`, each member sorted, in sorted order.
pub fn set_orbit(g: &PermGroup, s: &[usize], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut start = s.to_vec();
    start.sort_unstable();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = vec![start];
    let mut i = 0;
    while i < queue.len() {
        for h in g.generators() {
            let mut img: Vec<usize> = queue[i].iter().map(|&x| h.apply(x)).collect();
            img.sort_unstable();
            if seen.insert(img.clone()) {
                if queue.len() >= cap {
                    return Err(Error::cap("set orbit", cap as u64));
                }
                queue.push(img);
            }
        }
        i += 1;
    }
    queue.sort();
    Ok(queue)
}

/// Whether every translate of `s` meets every part of `p` exactly once.
pub fn is_regular_section(g: &PermGroup, s: &[usize], p: &Partition, cap: usize) -> Result<bool> {
    if p.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), p.degree()));
    }
    if !is_section(s, p) {
        return Ok(false);
    }
    Ok(set_orbit(g, s, cap)?.iter().all(|t| is_section(t, p)))
}

fn image(h: &crate::Permutation, s: &[usize]) -> Vec<usize> {
    let mut img: Vec<usize> = s.iter().map(|&x| h.apply(x)).collect();
    img.sort_unstable();
    img
}

/// Every non-synchronizing partition of the transitive group `g`, with its
/// regular sections, plus the invariant graphs examined on the way.
pub fn nonsync_search(g: &PermGroup, caps: &Caps) -> Result<NonSyncSearch> {
    let n = g.degree();
    let graphs = analyze(g, caps)?;
    let good: Vec<&InvariantGraph> = graphs
        .iter()
        .filter(|x| x.is_witness() && n.is_multiple_of(x.omega) && x.omega > 1 && x.omega < n)
        .collect();

    let mut found: BTreeMap<Partition, usize> = BTreeMap::new();
    let mut cliques: Vec<(Vec<Vec<usize>>, bool)> = Vec::with_capacity(good.len());
    for (gi, x) in good.iter().enumerate() {
        let c = x.omega;
        let co = x.graph.complement();
        let parts = cliques_of_size(&co, n / c, caps.nodes, caps.sections)?;
        let sets: Vec<Bits> = parts.iter().map(|p| Bits::from_iter(n, p.iter().copied())).collect();
        for cover in exact_covers(n, &sets, caps.sections, caps.nodes)? {
            let blocks = cover.iter().map(|&i| parts[i].clone()).collect();
            let p = Partition::from_blocks(n, blocks)?;
            found.entry(p).or_insert(gi);
        }
        cliques.push(cliques_of_size_upto(&x.graph, c, caps.nodes, caps.sections)?);
    }

    let mut caps_hit = BTreeSet::new();
    let mut witnesses = Vec::with_capacity(found.len());
    for (p, source) in found {
        assert!(p.is_uniform(), "non-synchronizing partition {p} is not uniform");
        let mut sections = BTreeSet::new();
        let mut complete = true;
        for (x, (list, done)) in good.iter().zip(&cliques) {
            if x.omega == p.rank() && p.blocks().iter().all(|b| x.graph.is_independent(b)) {
                sections.extend(list.iter().cloned());
                complete &= *done;
            }
        }
        if sections.len() > caps.sections {
            complete = false;
            sections = sections.into_iter().take(caps.sections).collect();
        }
        if !complete {
            caps_hit.insert("sections".to_string());
        }
        for s in &sections {
            assert!(is_section(s, &p), "clique {s:?} is not a section of {p}");
            for h in g.generators() {
                let t = image(h, s);
                assert!(is_section(&t, &p), "translate of {s:?} is not a section of {p}");
                if complete {
                    assert!(sections.contains(&t), "sections of {p} not closed under G");
                }
            }
            if !complete {
                assert!(is_regular_section(g, s, &p, caps.monoid)?);
            }
        }
        witnesses.push(NonSyncWitness {
            partition: p,
            sections: sections.into_iter().collect(),
            sections_complete: complete,
            source_mask: good[source].mask,
            source_graph: good[source].graph.clone(),
        });
    }
    Ok(NonSyncSearch {
        graphs,
        witnesses,
        caps_hit: caps_hit.into_iter().collect(),
    })
}

/// The non-synchronizing partitions of the transitive group `g`.
pub fn find_nonsync_partitions(g: &PermGroup, caps: &Caps) -> Result<Vec<NonSyncWitness>> {
    Ok(nonsync_search(g, caps)?.witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn cycle_of_four() {
        let c4 = PermGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()])
            .unwrap();
        let v = is_synchronizing_group(&c4, &Caps::default()).unwrap();
        assert!(!v.synchronizing);
        let ws = find_nonsync_partitions(&c4, &Caps::default()).unwrap();
        // {02|13} from the 4-cycle, {01|23} and {03|12} from the 2K2 graphs
        assert_eq!(ws.len(), 3);
        for w in &ws {
            assert!(w.sections_complete);
            for s in &w.sections {
                assert!(is_regular_section(&c4, s, &w.partition, 100).unwrap());
            }
        }
    }

    #[test]
    fn set_orbits() {
        let c4 = PermGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()])
            .unwrap();
        assert_eq!(set_orbit(&c4, &[0, 2], 10).unwrap(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(set_orbit(&c4, &[0, 1], 10).unwrap().len(), 4);
        assert!(set_orbit(&c4, &[0, 1], 2).is_err());
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1]]).unwrap()]).unwrap();
        assert!(matches!(is_synchronizing_group(&g, &Caps::default()), Err(Error::Intransitive)));
    }
}
