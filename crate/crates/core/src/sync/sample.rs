use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::PermGroup;
use crate::transform::{min_rank, synchronizes, Transformation, Word};
use crate::{Error, Result};

/// A sampled map that `G` fails to synchronize.
#[derive(Clone, Debug)]
pub struct SampleFailure {
    pub map: Transformation,
    /// Minimal rank reached in `⟨G, t⟩ \ G`.
    pub min_rank: usize,
    /// A word reaching that rank, letters as in [`crate::transform::letter_names`].
    pub word: Word,
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub seed: u64,
    /// Random maps drawn (forced maps excluded).
    pub trials: usize,
    pub forced: usize,
    pub successes: usize,
    pub failures: Vec<SampleFailure>,
}

fn random_nonuniform<R: Rng>(n: usize, rng: &mut R) -> Transformation {
    loop {
        let images: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let t = Transformation::new(images).expect("images in range");
        if !t.kernel().is_uniform() {
            return t;
        }
    }
}

/// Draws `trials` maps with non-uniform kernel (uniformly, by rejection),
/// appends the `forced` maps, and runs the synchronization test on each.
pub fn almost_sync_sample(
    g: &PermGroup,
    trials: usize,
    seed: u64,
    forced: &[Transformation],
) -> Result<SampleReport> {
    let n = g.degree();
    if n < 3 && trials > 0 {
        return Err(Error::Precondition(
            "every kernel is uniform on fewer than 3 points".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut maps: Vec<Transformation> = (0..trials).map(|_| random_nonuniform(n, &mut rng)).collect();
    maps.extend(forced.iter().cloned());
    let mut report = SampleReport {
        seed,
        trials,
        forced: forced.len(),
        successes: 0,
        failures: Vec::new(),
    };
    for t in maps {
        if t.degree() != n {
            return Err(Error::DegreeMismatch(n, t.degree()));
        }
        if t.is_permutation() {
            return Err(Error::IsPermutation);
        }
        match synchronizes(g, &t)? {
            Some(_) => report.successes += 1,
            None => {
                let mr = min_rank(g, &t)?;
                report.failures.push(SampleFailure { map: t, min_rank: mr.k, word: mr.word });
            }
        }
    }
    Ok(report)
}
