//! Exact chromatic number: DSATUR branch and bound, with the vertices of a
//! maximum clique pre-coloured to break colour symmetry, tried for each
//! `k` from `ω` up to the greedy bound.

use super::{clique_number_capped, Graph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Coloring {
    pub colors: usize,
    /// Colour of each vertex, in `0..colors`.
    pub assignment: Vec<usize>,
}

const NONE: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    /// `seen[v][c]`: coloured neighbours of `v` with colour `c`.
    seen: Vec<Vec<u32>>,
    sat: Vec<usize>,
    degree: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, max_colors: usize, cap: u64) -> Self {
        let n = g.order();
        Dsatur {
            g,
            color: vec![NONE; n],
            seen: vec![vec![0; max_colors]; n],
            sat: vec![0; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
            cap,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for u in self.g.neighbors(v).iter() {
            if self.seen[u][c] == 0 {
                self.sat[u] += 1;
            }
            self.seen[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.color[v], NONE);
        for u in self.g.neighbors(v).iter() {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, then degree, then least index.
    fn select(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == NONE)
            .max_by(|&a, &b| {
                (self.sat[a], self.degree[a], std::cmp::Reverse(a))
                    .cmp(&(self.sat[b], self.degree[b], std::cmp::Reverse(b)))
            })
    }

    fn solve(&mut self, k: usize, used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::cap("colouring search nodes", self.cap));
        }
        let Some(v) = self.select() else {
            return Ok(true);
        };
        if self.sat[v] >= k {
            return Ok(false);
        }
        for c in 0..k.min(used + 1) {
            if self.seen[v][c] == 0 {
                self.assign(v, c);
                if self.solve(k, used.max(c + 1))? {
                    return Ok(true);
                }
                self.unassign(v);
            }
        }
        Ok(false)
    }

    fn greedy(&mut self) -> usize {
        let mut used = 0;
        while let Some(v) = self.select() {
            let c = (0..).find(|&c| self.seen[v][c] == 0).unwrap();
            self.assign(v, c);
            used = used.max(c + 1);
        }
        used
    }
}

/// Exact chromatic number with a witness colouring. Uncapped.
pub fn chromatic_number(g: &Graph) -> Coloring {
    chromatic_number_capped(g, u64::MAX).expect("uncapped search cannot hit a cap")
}

pub fn chromatic_number_capped(g: &Graph, node_cap: u64) -> Result<Coloring> {
    let n = g.order();
    if n == 0 {
        return Ok(Coloring { colors: 0, assignment: vec![] });
    }
    let clique = clique_number_capped(g, node_cap)?;
    let mut greedy = Dsatur::new(g, n, node_cap);
    let upper = greedy.greedy();
    let mut best = Coloring { colors: upper, assignment: greedy.color.clone() };
    for k in clique.size..upper {
        let mut search = Dsatur::new(g, k, node_cap);
        for (c, &v) in clique.vertices.iter().enumerate() {
            search.assign(v, c);
        }
        if search.solve(k, clique.size)? {
            best = Coloring { colors: k, assignment: search.color };
            break;
        }
    }
    assert!(clique.size <= best.colors, "clique number exceeds chromatic number");
    debug_assert!(g.is_proper_coloring(&best.assignment));
    Ok(best)
}
