use std::fmt;

use crate::{Error, Result};

/// A partition of `{0..n}` in canonical form: every block sorted, blocks
/// ordered by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Partition {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates disjointness and coverage, then canonicalizes.
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut label = vec![usize::MAX; degree];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            for &x in b {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if label[x] != usize::MAX {
                    return Err(Error::Precondition(format!("point {x} in two blocks")));
                }
                label[x] = i;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Precondition(format!("point {x} not covered")));
        }
        Ok(Partition::from_labels(&label))
    }

    /// The partition whose blocks are the fibres of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            let i = *index.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(x);
        }
        Partition {
            degree: labels.len(),
            blocks,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Block index of every point.
    pub fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.degree];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                label[x] = i;
            }
        }
        label
    }

    pub fn contains_block(&self, block: &[usize]) -> bool {
        self.blocks.iter().any(|b| b == block)
    }

    /// True if every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let label = coarser.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| label[x] == label[b[0]]))
    }

    /// Number of blocks the two partitions have in common.
    pub fn common_blocks(&self, other: &Partition) -> usize {
        self.blocks
            .iter()
            .filter(|b| other.contains_block(b))
            .count()
    }

    /// The block containing `x`.
    pub fn block_of(&self, x: usize) -> &[usize] {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&x).is_ok())
            .expect("partition covers every point")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.blocks)
    }
}

pub fn is_uniform(p: &Partition) -> bool {
    p.is_uniform()
}

/// True if `set` meets every block of `p` in exactly one point.
pub fn is_section(set: &[usize], p: &Partition) -> bool {
    if set.len() != p.rank() {
        return false;
    }
    let label = p.labels();
    let mut hit = vec![false; p.rank()];
    set.iter().all(|&x| !std::mem::replace(&mut hit[label[x]], true))
}
