use crate::bits::Bits;
use crate::graphs::Graph;
use crate::perm::PermGroup;
use crate::{Error, Result};

fn check_set(n: usize, s: &[usize], what: &str) -> Result<Bits> {
    let set = Bits::from_iter(n, s.iter().copied().filter(|&x| x < n));
    if let Some(&x) = s.iter().find(|&&x| x >= n) {
        return Err(Error::PointOutOfRange { point: x, degree: n });
    }
    if set.count() != s.len() {
        return Err(Error::Precondition(format!("{what} has repeated points")));
    }
    Ok(set)
}

/// `Γ_S`: `x ~ y` iff some element of `G` maps `{x, y}` into `S`. This is the
/// union of the pair orbits that meet the 2-subsets of `S`.
pub fn gamma_s(g: &PermGroup, s: &[usize]) -> Result<Graph> {
    let n = g.degree();
    check_set(n, s, "S")?;
    if s.len() < 2 || s.len() >= n {
        return Err(Error::Precondition(format!(
            "need 1 < |S| < n, got |S| = {} with n = {n}",
            s.len()
        )));
    }
    let orbits = g.pair_orbits();
    let mut used = vec![false; orbits.len()];
    for (i, &x) in s.iter().enumerate() {
        for &y in &s[i + 1..] {
            used[g.pair_orbit_of(x, y)] = true;
        }
    }
    let mut out = Graph::new(n);
    for (orbit, _) in orbits.iter().zip(&used).filter(|(_, &u)| u) {
        for &(x, y) in orbit {
            out.add_edge(x, y);
        }
    }
    Ok(out)
}

/// The complement `Γ̄_S`.
pub fn gamma_s_complement(g: &PermGroup, s: &[usize]) -> Result<Graph> {
    Ok(gamma_s(g, s)?.complement())
}

/// Whether the closed neighbourhoods in `x` of the points of `t` intersect in
/// exactly `t`.
pub fn neighborhoods_meet_in(x: &Graph, t: &[usize]) -> bool {
    let mut meet = Bits::full(x.order());
    for &v in t {
        meet.intersect_with(&x.closed_neighborhood(v));
    }
    meet == Bits::from_iter(x.order(), t.iter().copied())
}

/// `m(S, T)`: one more than the largest number of neighbours in `T`, in
/// `Γ̄_S`, of a point outside `T`.
pub fn m_s_t(g: &PermGroup, s: &[usize], t: &[usize]) -> Result<usize> {
    let bar = gamma_s_complement(g, s)?;
    m_in_complement(&bar, s, t)
}

pub(crate) fn m_in_complement(bar: &Graph, s: &[usize], t: &[usize]) -> Result<usize> {
    let n = bar.order();
    let tset = check_set(n, t, "T")?;
    if s.len() * t.len() != n {
        return Err(Error::Precondition(format!(
            "|S|·|T| = {}·{} is not n = {n}",
            s.len(),
            t.len()
        )));
    }
    for (i, &x) in t.iter().enumerate() {
        for &y in &t[i + 1..] {
            if !bar.has_edge(x, y) {
                return Err(Error::Precondition(format!(
                    "T is not a clique of the complement of Γ_S: {} and {} not adjacent",
                    x + 1,
                    y + 1
                )));
            }
        }
    }
    if !neighborhoods_meet_in(bar, t) {
        return Err(Error::Precondition(
            "closed neighbourhoods of T do not intersect in T".into(),
        ));
    }
    let worst = (0..n)
        .filter(|&x| !tset.contains(x))
        .map(|x| bar.neighbors(x).intersection_count(&tset))
        .max()
        .unwrap_or(0);
    Ok(worst + 1)
}

fn components(x: &Graph, within: &Bits) -> Vec<Vec<usize>> {
    let mut seen = Bits::new(x.order());
    let mut out = Vec::new();
    for v in within.iter() {
        if seen.contains(v) {
            continue;
        }
        seen.insert(v);
        let mut comp = vec![v];
        let mut i = 0;
        while i < comp.len() {
            let mut next = x.neighbors(comp[i]).intersection(within);
            next.difference_with(&seen);
            for w in next.iter() {
                seen.insert(w);
                comp.push(w);
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Checks that every vertex neighbourhood has a connected component that is
/// complete. When `group` is given and the edges of `x` form a single orbit
/// of it, also checks that every neighbourhood is a disjoint union of
/// complete graphs. A complete graph passes.
pub fn neighborhood_structure_check(x: &Graph, group: Option<&PermGroup>) -> Result<bool> {
    if x.is_complete() {
        return Ok(true);
    }
    let edge_transitive = match group {
        Some(g) => {
            if g.degree() != x.order() {
                return Err(Error::DegreeMismatch(g.degree(), x.order()));
            }
            let edges = x.edges();
            match edges.first() {
                None => false,
                Some(&(a, b)) => {
                    let o = g.pair_orbit_of(a, b);
                    edges.len() == g.pair_orbits()[o].len()
                        && edges.iter().all(|&(u, v)| g.pair_orbit_of(u, v) == o)
                }
            }
        }
        None => false,
    };
    for v in 0..x.order() {
        let comps = components(x, x.neighbors(v));
        let complete: Vec<bool> = comps.iter().map(|c| x.is_clique(c)).collect();
        if !complete.iter().any(|&c| c) {
            return Ok(false);
        }
        if edge_transitive && !complete.iter().all(|&c| c) {
            return Ok(false);
        }
    }
    Ok(true)
}
