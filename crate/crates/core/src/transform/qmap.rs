//! The map `q` of minimal rank among products that still drop to the minimal
//! rank `k_U` after one group element, and the kernel-structure checks built
//! on it.

use super::{min_rank, MonoidClosure, Partition, Transformation, Word};
use crate::perm::{PermGroup, Permutation};
use crate::{Caps, Error, Result};

/// Result of [`find_q`].
#[derive(Clone, Debug)]
pub struct QAnalysis {
    pub q: Transformation,
    /// Word for `q` over the generators of `G` followed by `t`.
    pub q_word: Word,
    pub names: Vec<String>,
    /// Minimal rank over `⟨G, t⟩ \ G`.
    pub k_u: usize,
    /// Tested group elements `g` with `rank(q·g·q) = k_U`.
    pub q_set: Vec<Permutation>,
    pub tested_group_elements: usize,
    /// All of G was tested for `Q_q` and for membership of `M`.
    pub group_complete: bool,
    /// The monoid was enumerated completely, so `q` has minimal rank in `M`.
    pub minimal_exact: bool,
    /// Tested `g` with `rank(q·g·q)` outside `{rank(q), k_U}`.
    pub rank_violations: Vec<Permutation>,
    /// Singleton blocks of `ker q`.
    pub r: usize,
    /// Non-singleton blocks of `ker q`.
    pub s: usize,
    /// Common size of the non-singleton blocks, when they all agree.
    pub p_block: Option<usize>,
}

impl QAnalysis {
    pub fn kernel(&self) -> Partition {
        self.q.kernel()
    }

    /// `q·g·q` with `g` applied as a transformation.
    pub fn qgq(&self, g: &Permutation) -> Transformation {
        let gt = g.as_transformation();
        self.q.then(&gt).then(&self.q)
    }

    /// Triples `(g, h, h')` of indices into `q_set`, `hs`, `q_set` for which
    /// the image of `q·g·q` moved by `h` fails to be a section of
    /// `ker(q·h'·q)`.
    pub fn section_violations(&self, hs: &[Permutation]) -> Vec<(usize, usize, usize)> {
        let kernels: Vec<Partition> = self.q_set.iter().map(|g| self.qgq(g).kernel()).collect();
        let mut bad = Vec::new();
        for (gi, g) in self.q_set.iter().enumerate() {
            let image = self.qgq(g).image();
            for (hi, h) in hs.iter().enumerate() {
                let moved: Vec<usize> = image.iter().map(|&x| h.apply(x)).collect();
                for (ki, k) in kernels.iter().enumerate() {
                    if !super::is_section(&moved, k) {
                        bad.push((gi, hi, ki));
                    }
                }
            }
        }
        bad
    }
}

fn is_member_of_m(
    a: &Transformation,
    k: usize,
    elements: &[Transformation],
) -> Option<usize> {
    elements.iter().position(|h| a.then(h).then(a).rank() == k)
}

/// Finds `q ∈ ⟨G, t⟩` with `rank(q) > k_U`, `rank(q·h·q) = k_U` for some `h`,
/// and `rank(q)` minimal among such elements.
///
/// A first member of that set is read off the minimal-rank word of `t`: the
/// last prefix of the form `t·x₁·t·…·t` whose rank is still above `k_U`. The
/// monoid is then enumerated breadth-first (up to `caps.monoid`) looking for
/// members of lower rank. Group elements are enumerated through the
/// stabilizer chain, also capped by `caps.monoid`.
pub fn find_q(g: &PermGroup, t: &Transformation, caps: &Caps) -> Result<QAnalysis> {
    let mr = min_rank(g, t)?;
    let k = mr.k;
    if k == 1 {
        return Err(Error::Precondition(
            "k_U = 1: the monoid contains a constant map".into(),
        ));
    }
    let ngens = g.generators().len();
    let t_id = ngens;
    let mut gens: Vec<Transformation> =
        g.generators().iter().map(|p| p.as_transformation()).collect();
    gens.push(t.clone());

    let (group_elements, group_complete) = g.elements_upto(caps.monoid);
    let group_t: Vec<Transformation> =
        group_elements.iter().map(|p| p.as_transformation()).collect();

    // Descent along the witness word.
    let letters = &mr.word.letters;
    let t_pos: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] == t_id).collect();
    let prefix = |j: usize| Word::new(letters[t_pos[0]..=t_pos[j]].to_vec());
    let mut seed: Option<(Transformation, Word)> = None;
    for j in 1..t_pos.len() {
        let w = prefix(j);
        if w.evaluate(&gens).rank() == k {
            let prev = prefix(j - 1);
            seed = Some((prev.evaluate(&gens), prev));
            break;
        }
    }

    let closure = MonoidClosure::enumerate_upto(&gens, caps.monoid)?;
    let upper = seed.as_ref().map_or(g.degree(), |(a, _)| a.rank());
    let mut candidates: Vec<(usize, usize)> = closure
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.rank(), i))
        .filter(|&(r, _)| r > k && r < upper)
        .collect();
    candidates.sort_unstable();
    let mut found: Option<(Transformation, Word)> = None;
    for (_, i) in candidates {
        let a = &closure.elements()[i];
        if is_member_of_m(a, k, &group_t).is_some() {
            found = Some((a.clone(), closure.word(i)));
            break;
        }
    }
    let (q, q_word) = match found.or(seed) {
        Some(x) => x,
        None if closure.is_complete() && group_complete => {
            return Err(Error::Precondition(format!(
                "no element of rank above k_U = {k} drops to k_U after a group element"
            )))
        }
        None => return Err(Error::cap("monoid elements", caps.monoid)),
    };

    let rq = q.rank();
    let mut q_set = Vec::new();
    let mut rank_violations = Vec::new();
    for (p, e) in group_elements.iter().zip(&group_t) {
        let r = q.then(e).then(&q).rank();
        if r == k {
            q_set.push(p.clone());
        } else if r != rq {
            rank_violations.push(p.clone());
        }
    }
    let kernel = q.kernel();
    let sizes = kernel.block_sizes();
    let r = sizes.iter().filter(|&&s| s == 1).count();
    let big: Vec<usize> = sizes.iter().copied().filter(|&s| s > 1).collect();
    let p_block = match big.first() {
        Some(&p) if big.iter().all(|&s| s == p) => Some(p),
        _ => None,
    };
    Ok(QAnalysis {
        q,
        q_word,
        names: mr.names,
        k_u: k,
        q_set,
        tested_group_elements: group_elements.len(),
        group_complete,
        minimal_exact: closure.is_complete() && group_complete,
        rank_violations,
        r,
        s: big.len(),
        p_block,
    })
}

/// Structure of `ker(q·g·q)` relative to `ker q` for one `g ∈ Q_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructureReport {
    /// Blocks of `ker(q·g·q)` that are neither a block of `ker q` nor a union
    /// of singleton blocks of `ker q`.
    pub mixed_blocks: Vec<Vec<usize>>,
    pub r: usize,
    pub s: usize,
    pub p_block: Option<usize>,
    pub r_multiple_of_p: bool,
    pub r_less_than_sp: bool,
    pub r_positive: bool,
    pub s_positive: bool,
}

impl BlockStructureReport {
    pub fn passes(&self) -> bool {
        self.mixed_blocks.is_empty()
            && self.p_block.is_some()
            && self.r_multiple_of_p
            && self.r_less_than_sp
            && self.r_positive
            && self.s_positive
    }
}

/// Checks, for `g ∈ Q_q`, that every block of `ker(q·g·q)` is a block of
/// `ker q` or a union of its singleton blocks, and the arithmetic relating
/// the `r` singleton and `s` size-`p` blocks of `ker q`.
pub fn check_block_structure(a: &QAnalysis, g: &Permutation) -> Result<BlockStructureReport> {
    if a.k_u <= 1 {
        return Err(Error::Precondition("k_U must exceed 1".into()));
    }
    if g.degree() != a.q.degree() {
        return Err(Error::DegreeMismatch(a.q.degree(), g.degree()));
    }
    let kg = a.qgq(g);
    if kg.rank() != a.k_u {
        return Err(Error::Precondition(format!(
            "g is not in Q_q: rank(qgq) = {}",
            kg.rank()
        )));
    }
    let k = a.kernel();
    let label = k.labels();
    let sizes = k.block_sizes();
    let mixed_blocks = kg
        .kernel()
        .blocks()
        .iter()
        .filter(|b| !k.contains_block(b) && b.iter().any(|&x| sizes[label[x]] > 1))
        .cloned()
        .collect();
    let (r, s, p) = (a.r, a.s, a.p_block);
    Ok(BlockStructureReport {
        mixed_blocks,
        r,
        s,
        p_block: p,
        r_multiple_of_p: p.is_some_and(|p| r % p == 0),
        r_less_than_sp: p.is_some_and(|p| r < s * p),
        r_positive: r >= 1,
        s_positive: s >= 1,
    })
}

/// Evaluates both sides of
/// `g₁a₁g₂a₂…g_k a_k g_{k+1} = a₁^{g₁} a₂^{g₁g₂} … a_k^{g₁…g_k} · g₁…g_{k+1}`
/// with `a^g = g·a·g⁻¹`, and reports whether they agree.
pub fn conjugation_identity_check(gs: &[Permutation], maps: &[Transformation]) -> Result<bool> {
    if gs.len() != maps.len() + 1 {
        return Err(Error::Precondition(format!(
            "need k+1 group elements for k maps, got {} and {}",
            gs.len(),
            maps.len()
        )));
    }
    let n = gs[0].degree();
    for d in gs.iter().map(Permutation::degree).chain(maps.iter().map(Transformation::degree)) {
        if d != n {
            return Err(Error::DegreeMismatch(n, d));
        }
    }
    let mut lhs = gs[0].as_transformation();
    for (a, g) in maps.iter().zip(&gs[1..]) {
        lhs = lhs.then(a).then(&g.as_transformation());
    }
    let mut rhs = Transformation::identity(n);
    let mut prefix = Permutation::identity(n);
    for (g, a) in gs.iter().zip(maps) {
        prefix = prefix.then(g);
        rhs = rhs.then(&crate::perm::conjugate(&prefix, a)?);
    }
    let total = gs.iter().fold(Permutation::identity(n), |acc, g| acc.then(g));
    rhs = rhs.then(&total.as_transformation());
    Ok(lhs == rhs)
}
