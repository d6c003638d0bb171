//! Non-synchronizing partitions recomputed straight from the definition:
//! for every set S (up to G), collect the translates S·g, take as candidate
//! parts every set meeting each translate exactly once, and enumerate the
//! partitions into candidate parts. Compared with the graph-based search.

use std::collections::{BTreeSet, HashSet};

use primsync::catalog;
use primsync::sync::{find_nonsync_partitions, is_synchronizing_group};
use primsync::{Caps, PermGroup};

fn image_mask(g: &PermGroup, h: usize, s: u64) -> u64 {
    let p = &g.generators()[h];
    let mut out = 0;
    let mut rest = s;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << p.apply(x);
    }
    out
}

fn mask_orbit(g: &PermGroup, s: u64) -> Vec<u64> {
    let mut seen = HashSet::from([s]);
    let mut queue = vec![s];
    let mut i = 0;
    while i < queue.len() {
        for h in 0..g.generators().len() {
            let t = image_mask(g, h, queue[i]);
            if seen.insert(t) {
                queue.push(t);
            }
        }
        i += 1;
    }
    queue
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &x| m | 1 << x));
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn covers(full: u64, covered: u64, parts: &[u64], chosen: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
    if covered == full {
        let mut c = chosen.clone();
        c.sort_unstable();
        out.insert(c);
        return;
    }
    let x = (!covered & full).trailing_zeros();
    for &t in parts {
        if t >> x & 1 == 1 && t & covered == 0 {
            chosen.push(t);
            covers(full, covered | t, parts, chosen, out);
            chosen.pop();
        }
    }
}

/// All non-synchronizing partitions, as sorted lists of part masks.
fn oracle(g: &PermGroup) -> BTreeSet<Vec<u64>> {
    let n = g.degree();
    let full = (1u64 << n) - 1;
    let mut out = BTreeSet::new();
    for k in (2..n).filter(|k| n.is_multiple_of(*k)) {
        let part_sets = subsets(n, n / k);
        let mut done: HashSet<u64> = HashSet::new();
        for s in subsets(n, k) {
            if done.contains(&s) {
                continue;
            }
            let orbit = mask_orbit(g, s);
            done.extend(orbit.iter().copied());
            let parts: Vec<u64> = part_sets
                .iter()
                .copied()
                .filter(|&t| orbit.iter().all(|&u| (t & u).count_ones() == 1))
                .collect();
            covers(full, 0, &parts, &mut Vec::new(), &mut out);
        }
    }
    out
}

fn search_masks(g: &PermGroup) -> BTreeSet<Vec<u64>> {
    find_nonsync_partitions(g, &Caps::default())
        .unwrap()
        .iter()
        .map(|w| {
            let mut v: Vec<u64> = w
                .partition
                .blocks()
                .iter()
                .map(|b| b.iter().fold(0u64, |m, &x| m | 1 << x))
                .collect();
            v.sort_unstable();
            v
        })
        .collect()
}

fn check(name: &str) {
    let e = catalog::entry(name).unwrap();
    let expected = oracle(&e.group);
    let found = search_masks(&e.group);
    assert_eq!(found, expected, "{name}");
    assert_eq!(e.facts.nonsync_partitions, Some(expected.len()), "{name}");
    if e.group.is_primitive().unwrap() {
        let v = is_synchronizing_group(&e.group, &Caps::default()).unwrap();
        assert_eq!(v.synchronizing, expected.is_empty(), "{name}");
        assert_eq!(e.facts.synchronizing, Some(v.synchronizing), "{name}");
    }
}

#[test]
fn c4_matches_definition() {
    check("c4");
}

#[test]
fn grid_groups_match_definition() {
    check("grid");
    check("grid-index2");
}

#[test]
fn two_sets_match_definition() {
    check("s5-on-2sets");
    check("s6-on-2sets");
}

#[test]
fn affine_p3_matches_definition() {
    check("affine-half-3");
}

#[test]
fn w2_matches_definition() {
    check("w2");
}

#[test]
fn flags_match_definition() {
    check("flags-q2");
}

#[test]
fn random_small_groups_match_definition() {
    use primsync::Permutation;
    use rand::{seq::SliceRandom, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut tested = 0;
    while tested < 40 {
        let n = [4, 6, 8, 9][tested % 4];
        let gens: Vec<Permutation> = (0..1 + tested % 2)
            .map(|_| {
                let mut v: Vec<usize> = (0..n).collect();
                v.shuffle(&mut rng);
                Permutation::from_images(v).unwrap()
            })
            .collect();
        let g = PermGroup::new(n, gens).unwrap();
        if !g.is_transitive() || g.rank_on_pairs() > 12 {
            continue;
        }
        assert_eq!(search_masks(&g), oracle(&g));
        tested += 1;
    }
}
