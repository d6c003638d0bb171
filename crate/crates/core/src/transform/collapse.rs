//! Pair-automaton search: which pairs of points can be collapsed by some word
//! over a generating set, and greedy construction of collapsing words.

use std::collections::VecDeque;

use super::{letter_names, Transformation, Word};
use crate::pairs::{all_pairs, pair_count, pair_index};
use crate::perm::PermGroup;
use crate::{Error, Result};

const UNREACHED: u32 = u32::MAX;

/// Backward breadth-first search on the `n(n-1)/2` pair states. For every
/// collapsible pair it records the length of a shortest collapsing word and
/// the first letter of one.
#[derive(Clone, Debug)]
pub struct CollapseTable {
    n: usize,
    gens: Vec<Transformation>,
    dist: Vec<u32>,
    first: Vec<u32>,
}

impl CollapseTable {
    pub fn new(gens: &[Transformation]) -> Result<Self> {
        let n = match gens.first() {
            Some(g) => g.degree(),
            None => return Err(Error::Precondition("empty generating set".into())),
        };
        if let Some(g) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
        let pairs = all_pairs(n);
        let m = pair_count(n);
        let mut dist = vec![UNREACHED; m];
        let mut first = vec![UNREACHED; m];
        let mut reverse: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
        let mut queue = VecDeque::new();
        for (p, &(x, y)) in pairs.iter().enumerate() {
            for (a, g) in gens.iter().enumerate() {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if gx == gy {
                    if dist[p] == UNREACHED {
                        dist[p] = 1;
                        first[p] = a as u32;
                        queue.push_back(p);
                    }
                } else {
                    reverse[pair_index(n, gx, gy)].push((p as u32, a as u32));
                }
            }
        }
        while let Some(q) = queue.pop_front() {
            for &(p, a) in &reverse[q] {
                let p = p as usize;
                if dist[p] == UNREACHED {
                    dist[p] = dist[q] + 1;
                    first[p] = a;
                    queue.push_back(p);
                }
            }
        }
        Ok(CollapseTable {
            n,
            gens: gens.to_vec(),
            dist,
            first,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.gens
    }

    pub fn is_collapsible(&self, x: usize, y: usize) -> bool {
        x == y || self.dist[pair_index(self.n, x, y)] != UNREACHED
    }

    /// Length of a shortest word collapsing `{x, y}`.
    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        match self.dist[pair_index(self.n, x, y)] {
            UNREACHED => None,
            d => Some(d as usize),
        }
    }

    pub fn all_collapsible(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHED)
    }

    /// Collapsible pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        all_pairs(self.n)
            .into_iter()
            .enumerate()
            .filter(|&(p, _)| self.dist[p] != UNREACHED)
            .map(|(_, xy)| xy)
            .collect()
    }

    /// A shortest word collapsing `{x, y}`, read off the search tree.
    pub fn word_for(&self, x: usize, y: usize) -> Option<Word> {
        let (mut x, mut y) = (x, y);
        let mut letters = Vec::new();
        while x != y {
            let p = pair_index(self.n, x, y);
            if self.dist[p] == UNREACHED {
                return None;
            }
            let a = self.first[p] as usize;
            letters.push(a);
            x = self.gens[a].apply(x);
            y = self.gens[a].apply(y);
        }
        Some(Word::new(letters))
    }
}

/// Pairs `{x, y}` for which some word `w` over `gens` has `x·w = y·w`.
pub fn collapsible_pairs(gens: &[Transformation]) -> Result<Vec<(usize, usize)>> {
    Ok(CollapseTable::new(gens)?.pairs())
}

/// Repeatedly collapses the pair of the current image set with the shortest
/// collapsing word (ties: lexicographically least pair) until no collapsible
/// pair remains. Returns the accumulated word and the final image set.
pub fn greedy_merge(table: &CollapseTable, start: &[usize]) -> (Word, Vec<usize>) {
    let mut current: Vec<usize> = start.to_vec();
    current.sort_unstable();
    current.dedup();
    let mut word = Word::default();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, &x) in current.iter().enumerate() {
            for &y in &current[i + 1..] {
                if let Some(d) = table.distance(x, y) {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, x, y));
                    }
                }
            }
        }
        let Some((_, x, y)) = best else {
            return (word, current);
        };
        let w = table.word_for(x, y).expect("pair is collapsible");
        for &a in &w.letters {
            current = table.gens[a].apply_set(&current);
        }
        word.extend(&w);
    }
}

fn group_with_map(g: &PermGroup, t: &Transformation) -> Result<Vec<Transformation>> {
    if t.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), t.degree()));
    }
    if t.is_permutation() {
        return Err(Error::IsPermutation);
    }
    let mut gens: Vec<Transformation> =
        g.generators().iter().map(|p| p.as_transformation()).collect();
    gens.push(t.clone());
    Ok(gens)
}

/// Decides whether `⟨G, t⟩` contains a constant map. When it does, returns a
/// word over `G`'s generators followed by `t` (names from
/// [`letter_names`](super::letter_names)) that evaluates to a constant.
pub fn synchronizes(g: &PermGroup, t: &Transformation) -> Result<Option<Word>> {
    let gens = group_with_map(g, t)?;
    let table = CollapseTable::new(&gens)?;
    if !table.all_collapsible() {
        return Ok(None);
    }
    let all: Vec<usize> = (0..g.degree()).collect();
    let (word, image) = greedy_merge(&table, &all);
    debug_assert_eq!(image.len(), 1);
    Ok(Some(word))
}

/// Minimal rank `k_U` over `⟨G, t⟩ \ G` with a word attaining it.
#[derive(Clone, Debug)]
pub struct MinRank {
    pub k: usize,
    pub word: Word,
    /// Letter names: generators of G, then `t`.
    pub names: Vec<String>,
}

/// The minimal rank in `⟨G, t⟩ \ G`. Greedy merging is exact here: once the
/// current image set has no collapsible pair, no element of the monoid can
/// lower its size.
pub fn min_rank(g: &PermGroup, t: &Transformation) -> Result<MinRank> {
    let gens = group_with_map(g, t)?;
    let table = CollapseTable::new(&gens)?;
    let all: Vec<usize> = (0..g.degree()).collect();
    let (word, image) = greedy_merge(&table, &all);
    Ok(MinRank {
        k: image.len(),
        word,
        names: letter_names(g.generators().len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutations_collapse_nothing() {
        let gens = vec![t(&[1, 2, 0]), t(&[1, 0, 2])];
        assert!(collapsible_pairs(&gens).unwrap().is_empty());
    }

    #[test]
    fn constant_collapses_everything() {
        let pairs = collapsible_pairs(&[Transformation::constant(4, 1)]).unwrap();
        assert_eq!(pairs.len(), 6);
    }

    #[test]
    fn words_collapse_their_pair() {
        let gens = vec![t(&[1, 2, 3, 0]), t(&[1, 1, 2, 3])];
        let table = CollapseTable::new(&gens).unwrap();
        assert!(table.all_collapsible());
        for (x, y) in all_pairs(4) {
            let w = table.word_for(x, y).unwrap();
            assert_eq!(w.len(), table.distance(x, y).unwrap());
            let e = w.evaluate(&gens);
            assert_eq!(e.apply(x), e.apply(y));
        }
        let (w, img) = greedy_merge(&table, &[0, 1, 2, 3]);
        assert_eq!(img.len(), 1);
        assert!(w.evaluate(&gens).is_constant());
    }

    #[test]
    fn cyclic_group_fails_on_block_collapse() {
        let c4 = PermGroup::new(4, vec![Permutation::from_images(vec![1, 2, 3, 0]).unwrap()])
            .unwrap();
        // collapse block {0,2} onto 0, fix the rest
        let collapse = t(&[0, 1, 0, 3]);
        assert_eq!(synchronizes(&c4, &collapse).unwrap(), None);
        assert_eq!(min_rank(&c4, &collapse).unwrap().k, 2);
    }

    #[test]
    fn constant_map_is_synchronized() {
        let c4 = PermGroup::new(4, vec![Permutation::from_images(vec![1, 2, 3, 0]).unwrap()])
            .unwrap();
        let w = synchronizes(&c4, &Transformation::constant(4, 3)).unwrap().unwrap();
        let mut gens: Vec<Transformation> =
            c4.generators().iter().map(|p| p.as_transformation()).collect();
        gens.push(Transformation::constant(4, 3));
        assert!(w.evaluate(&gens).is_constant());
    }

    #[test]
    fn rejects_permutations() {
        let g = PermGroup::new(3, vec![]).unwrap();
        assert_eq!(synchronizes(&g, &t(&[1, 0, 2])), Err(Error::IsPermutation));
        assert_eq!(min_rank(&g, &t(&[1, 0, 2])).err(), Some(Error::IsPermutation));
    }
}
