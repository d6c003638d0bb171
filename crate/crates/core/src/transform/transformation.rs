use std::fmt;

use super::Partition;
use crate::{Error, Result};

/// A total map `{0..n} → {0..n}`; `images[x]` is `x·t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        if let Some(&y) = images.iter().find(|&&y| y >= n) {
            return Err(Error::PointOutOfRange { point: y, degree: n });
        }
        Ok(Transformation { images })
    }

    pub(crate) fn new_unchecked(images: Vec<usize>) -> Self {
        Transformation { images }
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            images: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        Transformation {
            images: vec![value; n],
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` then `other`, without the degree check.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &y in &self.images {
            seen[y] = true;
        }
        (0..self.degree()).filter(|&y| seen[y]).collect()
    }

    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut r = 0;
        for &y in &self.images {
            if !std::mem::replace(&mut seen[y], true) {
                r += 1;
            }
        }
        r
    }

    pub fn kernel(&self) -> Partition {
        Partition::from_labels(&self.images)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_constant(&self) -> bool {
        self.rank() == 1
    }

    /// Image of a point set, sorted and deduplicated.
    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.images[x]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Image-list form with 1-based points, e.g. `[1,1,2,3]`.
impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", y + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transformation{:?}", self.images)
    }
}

/// `x·(u∘v) = (x·u)·v`.
pub fn compose(u: &Transformation, v: &Transformation) -> Result<Transformation> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch(u.degree(), v.degree()));
    }
    Ok(u.then(v))
}

pub fn kernel(t: &Transformation) -> Partition {
    t.kernel()
}

pub fn rank(t: &Transformation) -> usize {
    t.rank()
}
