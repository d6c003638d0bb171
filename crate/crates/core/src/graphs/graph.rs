use std::fmt;

use crate::bits::Bits;
use crate::perm::PermGroup;
use crate::transform::{CollapseTable, Transformation};
use crate::{Error, Result};

/// A simple undirected graph on `{0..n}`; adjacency rows are bit sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    /// The null graph (no edges).
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bits::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                g.add_edge(x, y);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(x, y) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::PointOutOfRange { point: v, degree: n });
                }
            }
            if x == y {
                return Err(Error::Precondition(format!("loop at vertex {x}")));
            }
            g.add_edge(x, y);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        debug_assert!(x != y);
        self.adj[x].insert(y);
        self.adj[y].insert(x);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| self.adj[x].iter().filter(move |&y| y > x).map(move |y| (x, y)))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_null(&self) -> bool {
        self.adj.iter().all(Bits::is_empty)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.has_edge(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// Edge-set union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut g = self.clone();
        for (row, o) in g.adj.iter_mut().zip(&other.adj) {
            row.union_with(o);
        }
        Ok(g)
    }

    /// The subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::PointOutOfRange { point: v, degree: self.n });
        }
        let mut g = Graph::new(vertices.len());
        for (i, &x) in vertices.iter().enumerate() {
            for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
                if x != y && self.has_edge(x, y) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// True if every generator of `group` maps edges to edges.
    pub fn is_invariant(&self, group: &PermGroup) -> Result<bool> {
        if group.degree() != self.n {
            return Err(Error::DegreeMismatch(group.degree(), self.n));
        }
        Ok(group.generators().iter().all(|g| {
            self.edges()
                .iter()
                .all(|&(x, y)| self.has_edge(g.apply(x), g.apply(y)))
        }))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &x)| {
            vertices[i + 1..].iter().all(|&y| x != y && self.has_edge(x, y))
        })
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &x)| vertices[i + 1..].iter().all(|&y| !self.has_edge(x, y)))
    }

    /// True if adjacent vertices get distinct colours.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n && self.edges().iter().all(|&(x, y)| colors[x] != colors[y])
    }

    /// Vertices adjacent to `v`, plus `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> Bits {
        let mut b = self.adj[v].clone();
        b.insert(v);
        b
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A vertex map between two graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct GraphMap {
    pub images: Vec<usize>,
}

impl GraphMap {
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// True if every edge of `source` maps to an edge of `target`.
    pub fn is_homomorphism(&self, source: &Graph, target: &Graph) -> bool {
        source
            .edges()
            .iter()
            .all(|&(x, y)| target.has_edge(self.images[x], self.images[y]))
    }
}

/// `Gr(M)` for the monoid generated by `gens`: `x ~ y` iff no element of the
/// monoid maps `x` and `y` to the same point.
pub fn gr_of_monoid(gens: &[Transformation]) -> Result<Graph> {
    let table = CollapseTable::new(gens)?;
    let n = table.degree();
    let mut g = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if !table.is_collapsible(x, y) {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn complement_and_union() {
        let g = path3();
        assert_eq!(g.complement().complement(), g);
        assert!(g.union(&g.complement()).unwrap().is_complete());
        assert!(matches!(g.union(&Graph::new(4)), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn induced_relabels() {
        let g = path3();
        let h = g.induced(&[2, 1]).unwrap();
        assert!(h.has_edge(0, 1));
        assert!(g.induced(&[0, 2]).unwrap().is_null());
        assert!(g.induced(&[5]).is_err());
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
    }

    #[test]
    fn single_edge_is_not_invariant_under_a_cycle() {
        let c = PermGroup::new(3, vec![Permutation::from_images(vec![1, 2, 0]).unwrap()]).unwrap();
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(!g.is_invariant(&c).unwrap());
        assert!(Graph::complete(3).is_invariant(&c).unwrap());
    }

    #[test]
    fn gr_trivial_cases() {
        let perms = vec![Transformation::new(vec![1, 2, 0]).unwrap()];
        assert!(gr_of_monoid(&perms).unwrap().is_complete());
        let constant = vec![Transformation::constant(3, 0)];
        assert!(gr_of_monoid(&constant).unwrap().is_null());
    }

    #[test]
    fn map_predicates() {
        let m = GraphMap { images: vec![0, 1, 0] };
        assert!(!m.is_bijective());
        assert_eq!(m.image(), vec![0, 1]);
        assert!(m.is_homomorphism(&path3(), &path3()));
        assert!(!GraphMap { images: vec![0, 0, 1] }.is_homomorphism(&path3(), &path3()));
    }
}
