//! Brute-force oracles and the randomized suites shared by the property
//! tests and the acceptance run. Every suite returns a description of the
//! first mismatch.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use primsync::catalog;
use primsync::graphs::{chromatic_number, clique_number, gr_of_monoid};
use primsync::perm::conjugate;
use primsync::sync::{
    find_nonsync_partitions, gamma_s_complement, neighborhoods_meet_in, m_s_t, neighborhood_structure_check,
    sync_params, two_intersect_violations,
};
use primsync::transform::{check_block_structure, collapsible_pairs, conjugation_identity_check, find_q, min_rank};
use primsync::{Caps, Error, Graph, PermGroup, Permutation, Transformation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Outcome = Result<String, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_map<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    Transformation::new((0..n).map(|_| rng.gen_range(0..n)).collect()).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

fn mask_of(g: &Graph, v: usize) -> u32 {
    (0..g.order()).filter(|&u| g.has_edge(v, u)).fold(0, |m, u| m | 1 << u)
}

/// Largest clique by checking every vertex subset.
pub fn brute_clique(g: &Graph) -> usize {
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|v| mask_of(g, v)).collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] | 1 << v | !s == u32::MAX))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Chromatic number by dynamic programming over vertex subsets.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n).map(|v| mask_of(g, v)).collect();
    let full = (1u32 << n) - 1;
    let independent: Vec<bool> =
        (0..=full).map(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)).collect();
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for s in 1..=full {
        // the lowest vertex goes in some independent subset of s
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if independent[part as usize] {
                let prev = best[(s ^ part) as usize];
                if prev != usize::MAX {
                    best[s as usize] = best[s as usize].min(prev + 1);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

/// Collapsible pairs by forward search in the pair automaton.
pub fn forward_collapsible(gens: &[Transformation], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut seen = HashSet::from([(x, y)]);
            let mut queue = VecDeque::from([(x, y)]);
            let mut hit = false;
            while let Some((a, b)) = queue.pop_front() {
                for t in gens {
                    let (c, d) = (t.apply(a), t.apply(b));
                    if c == d {
                        hit = true;
                        break;
                    }
                    let key = (c.min(d), c.max(d));
                    if seen.insert(key) {
                        queue.push_back(key);
                    }
                }
                if hit {
                    break;
                }
            }
            if hit {
                out.push((x, y));
            }
        }
    }
    out
}

/// Collapsible pairs read off the full monoid, or `None` above `cap` elements.
pub fn closure_collapsible(gens: &[Transformation], n: usize, cap: usize) -> Option<Vec<(usize, usize)>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<Vec<usize>> = gens.iter().map(|t| t.images().to_vec()).collect();
    for t in &queue {
        seen.insert(t.clone());
    }
    let mut all = Vec::new();
    while let Some(e) = queue.pop_front() {
        for t in gens {
            let next: Vec<usize> = e.iter().map(|&x| t.apply(x)).collect();
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(next);
            }
        }
        all.push(e);
    }
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if all.iter().any(|e| e[x] == e[y]) {
                out.push((x, y));
            }
        }
    }
    Some(out)
}

/// Collapsible pairs against both oracles.
pub fn collapsible_suite(instances: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let mut closure_checked = 0;
    for i in 0..instances {
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Transformation> = (0..k)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    random_perm(&mut rng, n).as_transformation()
                } else {
                    random_map(&mut rng, n)
                }
            })
            .collect();
        let got = collapsible_pairs(&gens).map_err(|e| e.to_string())?;
        if got != forward_collapsible(&gens, n) {
            return Err(format!("instance {i}: forward search disagrees"));
        }
        if let Some(c) = closure_collapsible(&gens, n, 20_000) {
            closure_checked += 1;
            if got != c {
                return Err(format!("instance {i}: monoid closure disagrees"));
            }
        }
    }
    Ok(format!("{instances} instances, {closure_checked} also against the full monoid"))
}

pub fn clique_suite(instances: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    for i in 0..instances {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n);
        let c = clique_number(&g);
        if c.size != brute_clique(&g) || !g.is_clique(&c.vertices) || c.vertices.len() != c.size {
            return Err(format!("instance {i} (n={n}): clique {} vs {}", c.size, brute_clique(&g)));
        }
    }
    Ok(format!("{instances} instances"))
}

pub fn chromatic_suite(instances: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    for i in 0..instances {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n);
        let c = chromatic_number(&g);
        let expected = brute_chromatic(&g);
        let used = c.assignment.iter().collect::<HashSet<_>>().len();
        if c.colors != expected || !g.is_proper_coloring(&c.assignment) || used != c.colors {
            return Err(format!("instance {i} (n={n}): chromatic {} vs {expected}", c.colors));
        }
    }
    Ok(format!("{instances} instances"))
}

/// `Gr(M)` has ω = χ, and every generator is an endomorphism of it.
pub fn gr_suite(instances: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    for i in 0..instances {
        let n = rng.gen_range(2..=10);
        let mut gens: Vec<Transformation> =
            (0..rng.gen_range(1..=2)).map(|_| random_perm(&mut rng, n).as_transformation()).collect();
        gens.push(random_map(&mut rng, n));
        let x = gr_of_monoid(&gens).map_err(|e| e.to_string())?;
        let (w, c) = (clique_number(&x).size, chromatic_number(&x).colors);
        if w != c {
            return Err(format!("instance {i}: ω={w} χ={c}"));
        }
        for t in &gens {
            if x.edges().iter().any(|&(a, b)| !x.has_edge(t.apply(a), t.apply(b))) {
                return Err(format!("instance {i}: a generator is not an endomorphism"));
            }
        }
    }
    Ok(format!("{instances} monoids"))
}

/// Conjugation identity, with both sides also evaluated here.
pub fn conjugation_suite(instances: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    for i in 0..instances {
        let n = rng.gen_range(1..=10);
        let k = rng.gen_range(0..=4);
        let gs: Vec<Permutation> = (0..=k).map(|_| random_perm(&mut rng, n)).collect();
        let maps: Vec<Transformation> = (0..k).map(|_| random_map(&mut rng, n)).collect();
        if !conjugation_identity_check(&gs, &maps).map_err(|e| e.to_string())? {
            return Err(format!("instance {i}: identity reported false"));
        }
        // a^g sends x·g⁻¹ to (x·a)·g⁻¹
        for (g, a) in gs.iter().zip(&maps) {
            let c = conjugate(g, a).map_err(|e| e.to_string())?;
            let gi = g.inverse();
            if (0..n).any(|x| c.apply(gi.apply(x)) != gi.apply(a.apply(x))) {
                return Err(format!("instance {i}: conjugate disagrees"));
            }
        }
    }
    Ok(format!("{instances} instances"))
}

/// On every catalog witness: the closed neighbourhoods of a part meet in
/// exactly that part, and where `m(S,T) = 2` every neighbourhood has a
/// complete component. For groups with `m(G) = 2`, partitions sharing a
/// section have no two distinct parts meeting in two points.
pub fn witness_suite(caps: &Caps) -> Outcome {
    let mut checked = 0;
    let mut structure = 0;
    let mut two_intersect = Vec::new();
    for name in catalog::GROUPS {
        let e = catalog::entry(name).map_err(|e| e.to_string())?;
        if !e.facts.primitive || e.group.degree() > 25 {
            continue;
        }
        let witnesses = find_nonsync_partitions(&e.group, caps).map_err(|e| e.to_string())?;
        for w in &witnesses {
            for s in &w.sections {
                let bar = gamma_s_complement(&e.group, s).map_err(|e| e.to_string())?;
                let mut m_two = false;
                for t in w.partition.blocks() {
                    if !neighborhoods_meet_in(&bar, t) {
                        return Err(format!("{name}: closed neighbourhoods do not meet in part {t:?}"));
                    }
                    m_two |= m_s_t(&e.group, s, t).map_err(|e| e.to_string())? == 2;
                }
                checked += 1;
                if !m_two {
                    continue;
                }
                structure += 1;
                if !neighborhood_structure_check(&bar, Some(&e.group)).map_err(|e| e.to_string())? {
                    return Err(format!("{name}: neighbourhood structure fails for {s:?}"));
                }
            }
        }
        if !witnesses.is_empty() && sync_params(&e.group, &witnesses).map_err(|e| e.to_string())?.m_g == 2 {
            if !two_intersect_violations(&witnesses).is_empty() {
                return Err(format!("{name}: two partitions sharing a section meet in two points"));
            }
            two_intersect.push(*name);
        }
    }
    Ok(format!(
        "neighbourhood intersections on {checked} sections, complete components on the {structure} with m(S,T)=2, shared sections on {}",
        two_intersect.join(", ")
    ))
}

/// Uniform 3-part partitions of {0..9}.
pub fn uniform_three_partitions() -> Vec<[usize; 9]> {
    let mut out = Vec::new();
    let mut label = [usize::MAX; 9];
    fn rec(label: &mut [usize; 9], counts: &mut [usize; 3], x: usize, used: usize, out: &mut Vec<[usize; 9]>) {
        if x == 9 {
            out.push(*label);
            return;
        }
        for c in 0..(used + 1).min(3) {
            if counts[c] < 3 {
                counts[c] += 1;
                label[x] = c;
                rec(label, counts, x + 1, used.max(c + 1), out);
                counts[c] -= 1;
            }
        }
    }
    rec(&mut label, &mut [0; 3], 0, 0, &mut out);
    out
}

#[derive(Debug, Default)]
pub struct BlockScenarioCounts {
    pub maps: usize,
    pub k_above_one: usize,
    pub with_q: usize,
    pub reports: usize,
}

/// Every uniform rank-3 map on `g`: maps with `k_U > 1` are run through
/// `find_q`, and each `g ∈ Q_q` through the kernel-structure check.
pub fn block_structure_scenarios(g: &PermGroup, caps: &Caps) -> Result<BlockScenarioCounts, String> {
    let mut counts = BlockScenarioCounts::default();
    let n = g.degree();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c {
                    triples.push([a, b, c]);
                }
            }
        }
    }
    for kernel in uniform_three_partitions() {
        for img in &triples {
            let t = Transformation::new(kernel.iter().map(|&l| img[l]).collect()).unwrap();
            counts.maps += 1;
            if min_rank(g, &t).map_err(|e| e.to_string())?.k == 1 {
                continue;
            }
            counts.k_above_one += 1;
            let a = match find_q(g, &t, caps) {
                Ok(a) => a,
                Err(Error::Precondition(_)) => continue,
                Err(e) => return Err(e.to_string()),
            };
            counts.with_q += 1;
            if !a.rank_violations.is_empty() {
                return Err(format!("rank(qgq) outside {{rank q, k_U}} for {:?}", t.images()));
            }
            for h in &a.q_set {
                counts.reports += 1;
                let r = check_block_structure(&a, h).map_err(|e| e.to_string())?;
                if !r.passes() {
                    return Err(format!("block structure fails for {:?}: {r:?}", t.images()));
                }
            }
        }
    }
    Ok(counts)
}
