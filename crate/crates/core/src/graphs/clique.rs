//! Maximum cliques by branch and bound, bounding each candidate set with a
//! greedy colouring (largest colour first).

use super::Graph;
use crate::bits::Bits;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Clique {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Greedy sequential colouring of `p`; returns vertices with their colour
/// numbers (1-based), in non-decreasing colour order.
fn color_sort(g: &Graph, p: &Bits) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.count());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbors(v));
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    nodes: u64,
    cap: u64,
    /// Stop quietly at the enumeration limit instead of failing.
    truncate: bool,
    truncated: bool,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::cap("clique search nodes", self.cap));
        }
        Ok(())
    }

    fn max(&mut self, current: &mut Vec<usize>, mut p: Bits, best: &mut Vec<usize>) -> Result<()> {
        self.tick()?;
        let order = color_sort(self.g, &p);
        for &(v, color) in order.iter().rev() {
            if current.len() + color <= best.len() {
                return Ok(());
            }
            current.push(v);
            let next = p.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                self.max(current, next, best)?;
            }
            current.pop();
            p.remove(v);
        }
        Ok(())
    }

    fn all_of_size(
        &mut self,
        target: usize,
        current: &mut Vec<usize>,
        mut p: Bits,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        self.tick()?;
        if current.len() == target {
            if out.len() >= limit {
                if self.truncate {
                    self.truncated = true;
                    return Ok(());
                }
                return Err(Error::cap("maximum cliques", limit));
            }
            let mut c = current.clone();
            c.sort_unstable();
            out.push(c);
            return Ok(());
        }
        let order = color_sort(self.g, &p);
        for &(v, color) in order.iter().rev() {
            if current.len() + color < target {
                return Ok(());
            }
            current.push(v);
            let next = p.intersection(self.g.neighbors(v));
            self.all_of_size(target, current, next, out, limit)?;
            current.pop();
            if self.truncated {
                return Ok(());
            }
            p.remove(v);
        }
        Ok(())
    }
}

/// Exact clique number with a witness clique (sorted). Uncapped.
pub fn clique_number(g: &Graph) -> Clique {
    clique_number_capped(g, u64::MAX).expect("uncapped search cannot hit a cap")
}

pub fn clique_number_capped(g: &Graph, node_cap: u64) -> Result<Clique> {
    if g.order() == 0 {
        return Ok(Clique { size: 0, vertices: vec![] });
    }
    let mut search = Search { g, nodes: 0, cap: node_cap, truncate: false, truncated: false };
    let mut best = vec![0];
    search.max(&mut Vec::new(), Bits::full(g.order()), &mut best)?;
    best.sort_unstable();
    debug_assert!(g.is_clique(&best));
    Ok(Clique { size: best.len(), vertices: best })
}

/// Every clique of size `ω(g)`, each sorted, in sorted order.
pub fn maximum_cliques(g: &Graph, node_cap: u64, limit: usize) -> Result<Vec<Vec<usize>>> {
    let omega = clique_number_capped(g, node_cap)?.size;
    cliques_of_size(g, omega, node_cap, limit)
}

/// Every clique with exactly `size` vertices, each sorted, in sorted order.
/// Fails if there are more than `limit` of them.
pub fn cliques_of_size(
    g: &Graph,
    size: usize,
    node_cap: u64,
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut search = Search { g, nodes: 0, cap: node_cap, truncate: false, truncated: false };
    let mut out = Vec::new();
    search.all_of_size(size, &mut Vec::new(), Bits::full(g.order()), &mut out, limit)?;
    out.sort();
    Ok(out)
}

/// Like [`cliques_of_size`] but stops after `limit` cliques; the flag tells
/// whether the list is complete.
pub fn cliques_of_size_upto(
    g: &Graph,
    size: usize,
    node_cap: u64,
    limit: usize,
) -> Result<(Vec<Vec<usize>>, bool)> {
    let mut search = Search { g, nodes: 0, cap: node_cap, truncate: true, truncated: false };
    let mut out = Vec::new();
    search.all_of_size(size, &mut Vec::new(), Bits::full(g.order()), &mut out, limit)?;
    out.sort();
    Ok((out, !search.truncated))
}
