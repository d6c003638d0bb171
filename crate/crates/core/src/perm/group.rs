use std::collections::VecDeque;

use num_bigint::BigUint;
use rand::Rng;

use super::Permutation;
use crate::pairs::{all_pairs, pair_count, pair_index};
use crate::{Error, Result};

/// One level of a stabilizer chain: the basic orbit of `base` under the strong
/// generators fixing all earlier base points, with coset representatives.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `reps[x]` maps `base` to `x`.
    reps: Vec<Option<Permutation>>,
    inv_reps: Vec<Option<Permutation>>,
}

impl Level {
    fn new(n: usize, base: usize, gens: Vec<Permutation>) -> Self {
        let mut level = Level {
            base,
            gens,
            orbit: Vec::new(),
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild(n);
        level
    }

    fn rebuild(&mut self, n: usize) {
        let mut reps: Vec<Option<Permutation>> = vec![None; n];
        reps[self.base] = Some(Permutation::identity(n));
        let mut orbit = vec![self.base];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.gens {
                let y = g.apply(x);
                if reps[y].is_none() {
                    reps[y] = Some(reps[x].as_ref().unwrap().then(g));
                    orbit.push(y);
                }
            }
            i += 1;
        }
        self.inv_reps = reps.iter().map(|r| r.as_ref().map(|u| u.inverse())).collect();
        self.reps = reps;
        self.orbit = orbit;
    }
}

/// Sifts `g` through `levels[start..]`; returns the residue and the level at
/// which sifting stopped (`levels.len()` if it went all the way through).
fn strip(levels: &[Level], g: Permutation, start: usize) -> (Permutation, usize) {
    let mut h = g;
    for (l, level) in levels.iter().enumerate().skip(start) {
        let x = h.apply(level.base);
        match &level.inv_reps[x] {
            Some(u_inv) => h = h.then(u_inv),
            None => return (h, l),
        }
    }
    (h, levels.len())
}

/// Deterministic Schreier–Sims. Base points are chosen as the least point
/// moved by the generator that forces a new level.
fn schreier_sims(n: usize, gens: &[Permutation]) -> Vec<Level> {
    let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
    let mut base: Vec<usize> = Vec::new();
    for g in &gens {
        if base.iter().all(|&b| g.apply(b) == b) {
            base.push(g.first_moved().unwrap());
        }
    }
    let mut levels: Vec<Level> = (0..base.len())
        .map(|i| {
            let level_gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g.apply(b) == b))
                .map(|g| (*g).clone())
                .collect();
            Level::new(n, base[i], level_gens)
        })
        .collect();

    let mut i = levels.len() as isize - 1;
    'outer: while i >= 0 {
        let li = i as usize;
        let orbit = levels[li].orbit.clone();
        let level_gens = levels[li].gens.clone();
        for &beta in &orbit {
            for gen in &level_gens {
                let gb = gen.apply(beta);
                let g1 = levels[li].reps[beta].as_ref().unwrap().then(gen);
                if &g1 == levels[li].reps[gb].as_ref().unwrap() {
                    continue;
                }
                let schreier = g1.then(levels[li].inv_reps[gb].as_ref().unwrap());
                let (h, j) = strip(&levels, schreier, li + 1);
                if j == levels.len() && h.is_identity() {
                    continue;
                }
                if j == levels.len() {
                    levels.push(Level::new(n, h.first_moved().unwrap(), Vec::new()));
                }
                for level in &mut levels[li + 1..=j] {
                    level.gens.push(h.clone());
                    level.rebuild(n);
                }
                i = j as isize;
                continue 'outer;
            }
        }
        i -= 1;
    }
    levels
}

/// A partition of the points into blocks of equal size `d` with `1 < d < n`,
/// permuted setwise by the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// True if `g` maps every block onto a block.
    pub fn is_invariant_under(&self, g: &Permutation) -> bool {
        let n = g.degree();
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        self.blocks.iter().all(|b| {
            let target = block_of[g.apply(b[0])];
            b.iter().all(|&x| block_of[g.apply(x)] == target)
        })
    }

    pub fn is_nontrivial(&self, n: usize) -> bool {
        let d = self.blocks.first().map_or(0, |b| b.len());
        d > 1 && d < n && self.blocks.iter().all(|b| b.len() == d)
    }
}

/// A permutation group on `{0..n}` given by generators. Orbits on points and
/// on 2-subsets and a stabilizer chain are computed once, at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<Level>,
    orbit_id: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    pair_orbit_id: Vec<usize>,
    pair_orbits: Vec<Vec<(usize, usize)>>,
}

impl PermGroup {
    /// Builds the group generated by `generators`. Duplicate generators are
    /// dropped (first occurrence kept); an empty list means the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        let mut gens: Vec<Permutation> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        let chain = schreier_sims(degree, &gens);
        let (orbit_id, orbits) = point_orbits(degree, &gens);
        let (pair_orbit_id, pair_orbits) = pair_orbits(degree, &gens);
        Ok(PermGroup {
            degree,
            generators: gens,
            chain,
            orbit_id,
            orbits,
            pair_orbit_id,
            pair_orbits,
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The orbit of `x`, sorted.
    pub fn orbit(&self, x: usize) -> Result<&[usize]> {
        if x >= self.degree {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        Ok(&self.orbits[self.orbit_id[x]])
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    /// Orbits on 2-subsets (orbital graphs), ordered by their least pair.
    pub fn pair_orbits(&self) -> &[Vec<(usize, usize)>] {
        &self.pair_orbits
    }

    /// Orbit number of the pair `{x, y}` in [`pair_orbits`](Self::pair_orbits).
    pub fn pair_orbit_of(&self, x: usize, y: usize) -> usize {
        self.pair_orbit_id[pair_index(self.degree, x, y)]
    }

    /// Number of orbits on 2-subsets.
    pub fn rank_on_pairs(&self) -> usize {
        self.pair_orbits.len()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.base).collect()
    }

    /// Lengths of the basic orbits along the stabilizer chain.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// The order if it fits in a `u128`.
    pub fn order_u128(&self) -> Option<u128> {
        self.chain
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = strip(&self.chain, g.clone(), 0);
        j == self.chain.len() && h.is_identity()
    }

    /// Every element of the group, in a fixed order determined by the chain.
    /// Fails if the group has more than `cap` elements.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        match self.order_u128() {
            Some(o) if o <= cap as u128 => {}
            _ => return Err(Error::cap("group elements", cap)),
        }
        let mut out = vec![Permutation::identity(self.degree)];
        // element = u_{k-1} · … · u_1 · u_0, deepest representative applied first
        for level in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for acc in &out {
                for &x in &level.orbit {
                    next.push(acc.then(level.reps[x].as_ref().unwrap()));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// The first `limit` elements in the order of [`elements`](Self::elements),
    /// and whether that covers the whole group.
    pub fn elements_upto(&self, limit: usize) -> (Vec<Permutation>, bool) {
        if let Ok(all) = self.elements(limit) {
            return (all, true);
        }
        let radices: Vec<usize> = self.chain.iter().map(|l| l.orbit.len()).collect();
        let mut digits = vec![0usize; radices.len()];
        let mut out = Vec::with_capacity(limit);
        while out.len() < limit {
            let mut g = Permutation::identity(self.degree);
            for (l, level) in self.chain.iter().enumerate().rev() {
                g = g.then(level.reps[level.orbit[digits[l]]].as_ref().unwrap());
            }
            out.push(g);
            // level 0 varies fastest, matching `elements`
            let mut l = 0;
            loop {
                if l == radices.len() {
                    return (out, true);
                }
                digits[l] += 1;
                if digits[l] < radices[l] {
                    break;
                }
                digits[l] = 0;
                l += 1;
            }
        }
        (out, false)
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.chain.iter().rev() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(level.reps[x].as_ref().unwrap());
        }
        g
    }

    /// `None` if the group is primitive, otherwise a non-trivial block system.
    ///
    /// For each `b != 0` the finest congruence identifying `0` and `b` is
    /// computed by union-find closure under the generators; the group is
    /// primitive iff every such congruence is universal.
    pub fn block_system(&self) -> Result<Option<BlockSystem>> {
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        let n = self.degree;
        for b in 1..n {
            let classes = self.minimal_congruence(0, b);
            let size0 = classes.iter().filter(|&&c| c == classes[0]).count();
            if size0 < n {
                let mut blocks: Vec<Vec<usize>> = Vec::new();
                let mut index = vec![usize::MAX; n];
                for (x, &root) in classes.iter().enumerate() {
                    if index[root] == usize::MAX {
                        index[root] = blocks.len();
                        blocks.push(Vec::new());
                    }
                    blocks[index[root]].push(x);
                }
                return Ok(Some(BlockSystem { blocks }));
            }
        }
        Ok(None)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.block_system()?.is_none())
    }

    /// Class representative of every point in the finest G-congruence that
    /// identifies `a` and `b`.
    fn minimal_congruence(&self, a: usize, b: usize) -> Vec<usize> {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = VecDeque::new();
        parent[b] = a;
        queue.push_back((a, b));
        while let Some((x, y)) = queue.pop_front() {
            for g in &self.generators {
                let rx = find(&mut parent, g.apply(x));
                let ry = find(&mut parent, g.apply(y));
                if rx != ry {
                    let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
                    parent[hi] = lo;
                    queue.push_back((lo, hi));
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }
}

fn point_orbits(n: usize, gens: &[Permutation]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut id = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if id[start] != usize::MAX {
            continue;
        }
        let k = orbits.len();
        id[start] = k;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in gens {
                let y = g.apply(x);
                if id[y] == usize::MAX {
                    id[y] = k;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    (id, orbits)
}

fn pair_orbits(n: usize, gens: &[Permutation]) -> (Vec<usize>, Vec<Vec<(usize, usize)>>) {
    let pairs = all_pairs(n);
    let mut id = vec![usize::MAX; pair_count(n)];
    let mut orbits = Vec::new();
    for start in 0..pairs.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let k = orbits.len();
        id[start] = k;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let (x, y) = pairs[members[i]];
            for g in gens {
                let p = pair_index(n, g.apply(x), g.apply(y));
                if id[p] == usize::MAX {
                    id[p] = k;
                    members.push(p);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        orbits.push(members.into_iter().map(|p| pairs[p]).collect());
    }
    (id, orbits)
}
