//! Enumeration of exact covers: subfamilies of a set family that partition
//! the universe. Search follows Algorithm X, always branching on the
//! uncovered point with the fewest usable sets.

use crate::bits::Bits;
use crate::{Error, Result};

struct Cover<'a> {
    sets: &'a [Bits],
    /// `by_point[x]`: indices of the sets containing `x`.
    by_point: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    out: Vec<Vec<usize>>,
    limit: usize,
    nodes: u64,
    cap: u64,
}

impl Cover<'_> {
    fn search(&mut self, covered: &Bits) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::cap("exact cover search nodes", self.cap));
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in 0..covered.capacity() {
            if covered.contains(x) {
                continue;
            }
            let usable: Vec<usize> = self.by_point[x]
                .iter()
                .copied()
                .filter(|&i| self.sets[i].is_disjoint(covered))
                .collect();
            if best.as_ref().is_none_or(|(_, b)| usable.len() < b.len()) {
                let done = usable.is_empty();
                best = Some((x, usable));
                if done {
                    break;
                }
            }
        }
        let Some((_, usable)) = best else {
            if self.out.len() >= self.limit {
                return Err(Error::cap("exact covers", self.limit));
            }
            let mut c = self.chosen.clone();
            c.sort_unstable();
            self.out.push(c);
            return Ok(());
        };
        for i in usable {
            let mut next = covered.clone();
            next.union_with(&self.sets[i]);
            self.chosen.push(i);
            self.search(&next)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

/// All ways to partition `{0..universe}` into members of `sets`; each cover
/// is a sorted list of indices into `sets`. Fails past `limit` covers or
/// `node_cap` search nodes.
pub fn exact_covers(
    universe: usize,
    sets: &[Bits],
    limit: usize,
    node_cap: u64,
) -> Result<Vec<Vec<usize>>> {
    let mut by_point = vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        if s.capacity() != universe {
            return Err(Error::DegreeMismatch(universe, s.capacity()));
        }
        if s.is_empty() {
            return Err(Error::Precondition("empty set in family".into()));
        }
        for x in s.iter() {
            by_point[x].push(i);
        }
    }
    let mut cover = Cover {
        sets,
        by_point,
        chosen: Vec::new(),
        out: Vec::new(),
        limit,
        nodes: 0,
        cap: node_cap,
    };
    cover.search(&Bits::new(universe))?;
    let mut out = cover.out;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: usize, sets: &[&[usize]]) -> Vec<Bits> {
        sets.iter().map(|s| Bits::from_iter(n, s.iter().copied())).collect()
    }

    #[test]
    fn knuth_example() {
        // columns A..G as 0..6
        let sets = family(
            7,
            &[&[2, 4, 5], &[0, 3, 6], &[1, 2, 5], &[0, 3], &[1, 6], &[3, 4, 6]],
        );
        assert_eq!(exact_covers(7, &sets, 10, 1000).unwrap(), vec![vec![0, 3, 4]]);
    }

    #[test]
    fn perfect_matchings_of_k4() {
        let mut sets = Vec::new();
        for x in 0..4 {
            for y in x + 1..4 {
                sets.push(Bits::from_iter(4, [x, y]));
            }
        }
        assert_eq!(exact_covers(4, &sets, 10, 1000).unwrap().len(), 3);
        assert!(matches!(exact_covers(4, &sets, 2, 1000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn no_cover() {
        let sets = family(3, &[&[0, 1], &[1, 2]]);
        assert!(exact_covers(3, &sets, 10, 1000).unwrap().is_empty());
    }
}
