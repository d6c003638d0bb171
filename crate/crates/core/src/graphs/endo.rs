use std::ops::ControlFlow;

use super::{clique_number, Graph, GraphMap};
use crate::bits::Bits;
use crate::{Error, Result};

/// Calls `visit` on every endomorphism of `g` in lexicographic order of the
/// image sequence. Fails once more than `node_cap` search nodes are used.
pub fn for_each_endomorphism<F>(g: &Graph, node_cap: u64, mut visit: F) -> Result<()>
where
    F: FnMut(&GraphMap) -> ControlFlow<()>,
{
    let n = g.order();
    let mut images = vec![0usize; n];
    let mut nodes = 0u64;
    // earlier[v]: neighbours of v with smaller index
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&u| u < v).collect())
        .collect();

    fn rec<F: FnMut(&GraphMap) -> ControlFlow<()>>(
        g: &Graph,
        earlier: &[Vec<usize>],
        v: usize,
        images: &mut Vec<usize>,
        nodes: &mut u64,
        cap: u64,
        visit: &mut F,
    ) -> Result<ControlFlow<()>> {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::cap("endomorphism search nodes", cap));
        }
        let n = g.order();
        if v == n {
            return Ok(visit(&GraphMap { images: images.clone() }));
        }
        let mut candidates = Bits::full(n);
        for &u in &earlier[v] {
            candidates.intersect_with(g.neighbors(images[u]));
        }
        for c in candidates.iter() {
            images[v] = c;
            if rec(g, earlier, v + 1, images, nodes, cap, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    let _ = rec(g, &earlier, 0, &mut images, &mut nodes, node_cap, &mut visit)?;
    Ok(())
}

/// All endomorphisms of `g`, lexicographically ordered.
pub fn endomorphisms(g: &Graph, node_cap: u64) -> Result<Vec<GraphMap>> {
    let mut out = Vec::new();
    for_each_endomorphism(g, node_cap, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Outcome of [`is_pseudo_core`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoCore {
    pub is_pseudo_core: bool,
    /// An endomorphism that is neither bijective nor onto an `ω`-clique.
    pub counterexample: Option<GraphMap>,
    pub automorphisms: usize,
    pub colorings: usize,
}

/// Every endomorphism must be an automorphism or a colouring, the latter
/// meaning its image induces a complete graph on exactly `ω(g)` vertices.
pub fn is_pseudo_core(g: &Graph, node_cap: u64) -> Result<PseudoCore> {
    let omega = clique_number(g).size;
    let mut automorphisms = 0;
    let mut colorings = 0;
    let mut counterexample = None;
    for_each_endomorphism(g, node_cap, |m| {
        if m.is_bijective() {
            automorphisms += 1;
            return ControlFlow::Continue(());
        }
        let image = m.image();
        if image.len() == omega && g.is_clique(&image) {
            colorings += 1;
            ControlFlow::Continue(())
        } else {
            counterexample = Some(m.clone());
            ControlFlow::Break(())
        }
    })?;
    Ok(PseudoCore {
        is_pseudo_core: counterexample.is_none(),
        counterexample,
        automorphisms,
        colorings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_endomorphisms_are_automorphisms() {
        let k3 = Graph::complete(3);
        let all = endomorphisms(&k3, 1_000).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(GraphMap::is_bijective));
        assert!(is_pseudo_core(&k3, 1_000).unwrap().is_pseudo_core);
    }

    #[test]
    fn path_folds() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let all = endomorphisms(&p, 1_000).unwrap();
        assert!(all.iter().all(|m| m.is_homomorphism(&p, &p)));
        assert!(all.contains(&GraphMap { images: vec![0, 1, 0] }));
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.images.cmp(&b.images));
        assert_eq!(sorted, all);
    }

    #[test]
    fn cap_is_reported() {
        assert!(matches!(
            endomorphisms(&Graph::complete(4), 3),
            Err(Error::CapExceeded { .. })
        ));
    }
}
