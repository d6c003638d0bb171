use std::fmt;

use super::Transformation;

/// A product of generators, stored as indices into an ambient generating set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn extend(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    /// The transformation the word denotes; the empty word is the identity.
    pub fn evaluate(&self, gens: &[Transformation]) -> Transformation {
        let n = gens.first().map_or(0, Transformation::degree);
        let mut images: Vec<usize> = (0..n).collect();
        for &a in &self.letters {
            for y in images.iter_mut() {
                *y = gens[a].apply(*y);
            }
        }
        Transformation::new_unchecked(images)
    }

    /// Space-separated letter names, e.g. `g0 t g2 t t`.
    pub fn render(&self, names: &[String]) -> String {
        self.display(names).to_string()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Word, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, &a) in self.0.letters.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", self.1[a])?;
                }
                Ok(())
            }
        }
        D(self, names)
    }
}

/// Names for a generating set `G ∪ {t}`: `g0 … g{k-1}` followed by `t`.
pub fn letter_names(group_generators: usize) -> Vec<String> {
    (0..group_generators)
        .map(|i| format!("g{i}"))
        .chain(std::iter::once("t".to_string()))
        .collect()
}
