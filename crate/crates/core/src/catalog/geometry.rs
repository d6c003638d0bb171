use std::collections::BTreeSet;

use crate::bits::Bits;
use crate::exact_cover::exact_covers;
use crate::graphs::{cliques_of_size, maximum_cliques, Graph};
use crate::{Error, Result};

use super::gf::Gf;
use super::groups::{concurrence_graph, projective_lines, w2_collinearity, w2_lines};

// ---- directions in AG(2, p) = GF(p²) ----

/// Canonical direction of a nonzero `z`: the least element of `z·GF(p)*`.
pub fn direction(f: &Gf, z: usize) -> usize {
    assert!(z != 0);
    (1..f.characteristic()).map(|s| f.mul(z, s)).min().expect("p ≥ 2")
}

/// Number of directions determined by the points of `set`.
pub fn directions_determined(f: &Gf, set: &[usize]) -> usize {
    let mut dirs = BTreeSet::new();
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            dirs.insert(direction(f, f.sub(x, y)));
        }
    }
    dirs.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedeiReport {
    pub p: usize,
    pub subsets: usize,
    pub lines: usize,
    /// Fewest directions determined by a `p`-set that is not a line.
    pub min_nonline_directions: usize,
    /// `p`-sets that are not lines yet determine fewer than `(p+3)/2` directions.
    pub violations: Vec<Vec<usize>>,
}

/// Exhaustive check over all `p`-subsets of `GF(p²)`: every such set is a
/// line (one direction) or determines at least `(p+3)/2` directions.
pub fn redei_check(p: usize) -> Result<RedeiReport> {
    if !(p == 3 || p == 5) {
        return Err(Error::Precondition(format!("exhaustive check supported for p = 3, 5, not {p}")));
    }
    let f = Gf::new(p, 2)?;
    let q = f.order();
    let dir: Vec<Vec<usize>> = (0..q)
        .map(|x| (0..q).map(|y| if x == y { 0 } else { direction(&f, f.sub(x, y)) }).collect())
        .collect();
    let bound = (p + 3) / 2;
    let mut report = RedeiReport {
        p,
        subsets: 0,
        lines: 0,
        min_nonline_directions: usize::MAX,
        violations: Vec::new(),
    };
    let mut set: Vec<usize> = (0..p).collect();
    loop {
        report.subsets += 1;
        let mut dirs = BTreeSet::new();
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                dirs.insert(dir[x][y]);
            }
        }
        if dirs.len() == 1 {
            report.lines += 1;
        } else {
            report.min_nonline_directions = report.min_nonline_directions.min(dirs.len());
            if dirs.len() < bound {
                report.violations.push(set.clone());
            }
        }
        // next combination
        let mut i = p;
        while i > 0 && set[i - 1] == q - p + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        set[i - 1] += 1;
        for j in i..p {
            set[j] = set[j - 1] + 1;
        }
    }
    Ok(report)
}

// ---- W(2) ----

#[derive(Clone, Debug)]
pub struct W2Analysis {
    pub ovoids: Vec<Vec<usize>>,
    pub spreads: Vec<Vec<Vec<usize>>>,
    pub max_ovoid_intersection: usize,
    pub max_spread_common_lines: usize,
    pub ovoid_partitions: usize,
}

/// Exhaustive ovoid and spread search in `W(2)`.
pub fn w2_analysis(node_cap: u64) -> Result<W2Analysis> {
    let lines = w2_lines();
    let col = w2_collinearity();
    let ovoids = cliques_of_size(&col.complement(), 5, node_cap, 1000)?;
    for o in &ovoids {
        debug_assert!(lines.iter().all(|l| l.iter().filter(|x| o.contains(x)).count() == 1));
    }
    let line_sets: Vec<Bits> = lines.iter().map(|l| Bits::from_iter(15, l.iter().copied())).collect();
    let spreads: Vec<Vec<Vec<usize>>> = exact_covers(15, &line_sets, 1000, node_cap)?
        .into_iter()
        .map(|c| c.into_iter().map(|i| lines[i].clone()).collect())
        .collect();
    let ovoid_sets: Vec<Bits> = ovoids.iter().map(|o| Bits::from_iter(15, o.iter().copied())).collect();
    let ovoid_partitions = exact_covers(15, &ovoid_sets, 1000, node_cap)?.len();
    let mut max_ovoid_intersection = 0;
    for (i, a) in ovoid_sets.iter().enumerate() {
        for b in &ovoid_sets[i + 1..] {
            max_ovoid_intersection = max_ovoid_intersection.max(a.intersection_count(b));
        }
    }
    let mut max_spread_common_lines = 0;
    for (i, a) in spreads.iter().enumerate() {
        for b in &spreads[i + 1..] {
            max_spread_common_lines = max_spread_common_lines.max(a.iter().filter(|l| b.contains(l)).count());
        }
    }
    Ok(W2Analysis { ovoids, spreads, max_ovoid_intersection, max_spread_common_lines, ovoid_partitions })
}

// ---- lines of projective space ----

#[derive(Clone, Debug)]
pub struct ProjectiveLinesAnalysis {
    pub n: usize,
    pub q: usize,
    pub points: usize,
    pub lines: usize,
    pub omega: usize,
    /// Maximum cliques consisting of all lines through a point.
    pub pencils: usize,
    /// Maximum cliques consisting of all lines in a plane.
    pub planes: usize,
    pub other: usize,
    /// `v > k(k² − 2k + 2)` with `v` points and `k = q + 1`.
    pub inequality_holds: bool,
}

fn span_closure(lines: &[Vec<usize>], a: &[usize], b: &[usize]) -> BTreeSet<usize> {
    // points of the plane spanned by two meeting lines: lines joining two
    // points of a ∪ b
    let base: BTreeSet<usize> = a.iter().chain(b).copied().collect();
    let mut pts = base.clone();
    for l in lines {
        if l.iter().filter(|x| base.contains(x)).count() >= 2 {
            pts.extend(l.iter().copied());
        }
    }
    pts
}

/// Concurrence graph of the lines of `PG(n−1, q)` and the classification of
/// its maximum cliques.
pub fn projective_lines_analysis(n: usize, q: usize, node_cap: u64) -> Result<(Graph, ProjectiveLinesAnalysis)> {
    if n < 3 {
        return Err(Error::Precondition("need n ≥ 3".into()));
    }
    let f = Gf::new(q, 1)?;
    let (lines, pts) = projective_lines(n, &f);
    let g = concurrence_graph(&lines);
    let cliques = maximum_cliques(&g, node_cap, 100_000)?;
    let omega = cliques.first().map_or(0, Vec::len);
    let (mut pencils, mut planes, mut other) = (0, 0, 0);
    for c in &cliques {
        let common: Vec<usize> = lines[c[0]]
            .iter()
            .copied()
            .filter(|x| c.iter().all(|&l| lines[l].contains(x)))
            .collect();
        let through = |x: usize| lines.iter().filter(|l| l.contains(&x)).count();
        if common.len() == 1 && c.len() == through(common[0]) {
            pencils += 1;
            continue;
        }
        let plane = span_closure(&lines, &lines[c[0]], &lines[c[1]]);
        let in_plane = lines.iter().filter(|l| l.iter().all(|x| plane.contains(x))).count();
        if c.iter().all(|&l| lines[l].iter().all(|x| plane.contains(x))) && in_plane == c.len() {
            planes += 1;
        } else {
            other += 1;
        }
    }
    let v = pts.len();
    let k = q + 1;
    let analysis = ProjectiveLinesAnalysis {
        n,
        q,
        points: v,
        lines: lines.len(),
        omega,
        pencils,
        planes,
        other,
        inequality_holds: v > k * (k * k - 2 * k + 2),
    };
    Ok((g, analysis))
}
