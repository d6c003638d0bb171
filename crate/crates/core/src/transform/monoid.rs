use std::collections::HashMap;

use super::{Transformation, Word};
use crate::{Error, Result};

/// Breadth-first enumeration of the monoid generated by a set of
/// transformations (identity included), with a spanning tree of words.
#[derive(Clone, Debug)]
pub struct MonoidClosure {
    gens: Vec<Transformation>,
    elements: Vec<Transformation>,
    parent: Vec<Option<(usize, usize)>>,
    complete: bool,
}

impl MonoidClosure {
    /// Enumerates the whole monoid or fails when it has more than `cap` elements.
    pub fn enumerate(gens: &[Transformation], cap: usize) -> Result<Self> {
        let m = Self::enumerate_upto(gens, cap)?;
        if m.complete {
            Ok(m)
        } else {
            Err(Error::cap("monoid elements", cap))
        }
    }

    /// Enumerates at most `cap` elements in breadth-first order.
    pub fn enumerate_upto(gens: &[Transformation], cap: usize) -> Result<Self> {
        let n = match gens.first() {
            Some(g) => g.degree(),
            None => return Err(Error::Precondition("empty generating set".into())),
        };
        if let Some(g) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
        let mut elements = vec![Transformation::identity(n)];
        let mut parent = vec![None];
        let mut index: HashMap<Transformation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut complete = true;
        let mut i = 0;
        'bfs: while i < elements.len() {
            for (a, g) in gens.iter().enumerate() {
                let next = elements[i].then(g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= cap {
                    complete = false;
                    break 'bfs;
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
                parent.push(Some((i, a)));
            }
            i += 1;
        }
        Ok(MonoidClosure {
            gens: gens.to_vec(),
            elements,
            parent,
            complete,
        })
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.gens
    }

    /// A shortest word for element `i`.
    pub fn word(&self, mut i: usize) -> Word {
        let mut letters = Vec::new();
        while let Some((p, a)) = self.parent[i] {
            letters.push(a);
            i = p;
        }
        letters.reverse();
        Word::new(letters)
    }

    pub fn min_rank(&self) -> usize {
        self.elements.iter().map(Transformation::rank).min().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_transformation_monoid_of_three_points() {
        let gens = vec![
            Transformation::new(vec![1, 2, 0]).unwrap(),
            Transformation::new(vec![1, 0, 2]).unwrap(),
            Transformation::new(vec![0, 0, 2]).unwrap(),
        ];
        let m = MonoidClosure::enumerate(&gens, 100).unwrap();
        assert_eq!(m.len(), 27);
        for (i, e) in m.elements().iter().enumerate() {
            assert_eq!(&m.word(i).evaluate(&gens), e);
        }
        assert!(matches!(
            MonoidClosure::enumerate(&gens, 10),
            Err(Error::CapExceeded { .. })
        ));
        assert!(!MonoidClosure::enumerate_upto(&gens, 10).unwrap().is_complete());
    }
}
