//! Complete deterministic automata and reset words.

use std::collections::VecDeque;

use crate::transform::{greedy_merge, CollapseTable, Transformation, Word};
use crate::{Error, Result};

/// Subset search is limited to this many states.
pub const MAX_SUBSET_STATES: usize = 20;

/// A complete DFA without initial or final states: `delta[a][s]` is the
/// state reached from `s` on letter `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    n: usize,
    letters: Vec<String>,
    delta: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn new(letters: Vec<String>, delta: Vec<Vec<usize>>) -> Result<Self> {
        if letters.len() != delta.len() {
            return Err(Error::Precondition(format!(
                "{} letters but {} transition rows",
                letters.len(),
                delta.len()
            )));
        }
        let n = delta.first().map_or(0, Vec::len);
        if n == 0 {
            return Err(Error::Precondition("automaton needs states and letters".into()));
        }
        for row in &delta {
            if row.len() != n {
                return Err(Error::DegreeMismatch(n, row.len()));
            }
            if let Some(&s) = row.iter().find(|&&s| s >= n) {
                return Err(Error::PointOutOfRange { point: s, degree: n });
            }
        }
        for (i, a) in letters.iter().enumerate() {
            if letters[..i].contains(a) {
                return Err(Error::Precondition(format!("letter {a} repeated")));
            }
        }
        Ok(Dfa { n, letters, delta })
    }

    /// The automaton with states 1..4 from the dungeon puzzle (0-based here):
    /// RED = `[3,1,4,2]`, BLUE = `[3,3,1,1]` in 1-based images.
    pub fn dungeon() -> Self {
        Dfa::new(
            vec!["RED".into(), "BLUE".into()],
            vec![vec![2, 0, 3, 1], vec![2, 2, 0, 0]],
        )
        .expect("valid automaton")
    }

    /// Černý automaton `C_n`: `a` rotates, `b` sends state 0 to 1 and fixes the rest.
    pub fn cerny(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition("Černý automaton needs n ≥ 2".into()));
        }
        let a = (0..n).map(|s| (s + 1) % n).collect();
        let b = (0..n).map(|s| if s == 0 { 1 } else { s }).collect();
        Dfa::new(vec!["a".into(), "b".into()], vec![a, b])
    }

    pub fn states(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn next(&self, letter: usize, state: usize) -> usize {
        self.delta[letter][state]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.delta
    }

    pub fn transformations(&self) -> Vec<Transformation> {
        self.delta.iter().map(|r| Transformation::new(r.clone()).expect("validated")).collect()
    }

    pub fn run(&self, word: &Word, state: usize) -> usize {
        word.letters.iter().fold(state, |s, &a| self.delta[a][s])
    }

    /// The set of states reached from all states, sorted.
    pub fn image(&self, word: &Word) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.n).map(|s| self.run(word, s)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The common target state if `word` resets the automaton.
    pub fn reset_target(&self, word: &Word) -> Option<usize> {
        match self.image(word)[..] {
            [s] => Some(s),
            _ => None,
        }
    }

    /// Parses a comma- or space-separated list of letter names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                self.letters
                    .iter()
                    .position(|a| a == s)
                    .ok_or_else(|| Error::UnknownName(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn render(&self, word: &Word) -> String {
        word.letters.iter().map(|&a| self.letters[a].as_str()).collect::<Vec<_>>().join(",")
    }

    /// Every pair of states can be merged by some word.
    pub fn is_synchronizing(&self) -> bool {
        self.n == 1 || CollapseTable::new(&self.transformations()).expect("validated").all_collapsible()
    }

    /// A reset word built by repeatedly merging the closest pair.
    pub fn reset_word(&self) -> Result<Word> {
        let table = CollapseTable::new(&self.transformations())?;
        let all: Vec<usize> = (0..self.n).collect();
        let (word, image) = greedy_merge(&table, &all);
        if image.len() != 1 {
            return Err(Error::NotSynchronizing);
        }
        debug_assert!(word.len() <= self.n.pow(3));
        Ok(word)
    }

    /// A shortest reset word, by breadth-first search over state subsets.
    /// `cap` bounds the number of subsets visited.
    pub fn shortest_reset_word(&self, cap: usize) -> Result<Word> {
        if self.n > MAX_SUBSET_STATES {
            return Err(Error::Precondition(format!(
                "subset search limited to {MAX_SUBSET_STATES} states, automaton has {}",
                self.n
            )));
        }
        let full: u32 = (1u32 << self.n) - 1;
        // parent[s] = (previous subset, letter); u32::MAX marks unvisited
        let mut parent = vec![(u32::MAX, 0u16); 1 << self.n];
        parent[full as usize] = (full, 0);
        let mut queue = VecDeque::from([full]);
        let mut visited = 1usize;
        while let Some(s) = queue.pop_front() {
            if s.count_ones() == 1 {
                let mut letters = Vec::new();
                let mut cur = s;
                while cur != full {
                    let (prev, a) = parent[cur as usize];
                    letters.push(a as usize);
                    cur = prev;
                }
                letters.reverse();
                return Ok(Word::new(letters));
            }
            for (a, row) in self.delta.iter().enumerate() {
                let mut img = 0u32;
                let mut rest = s;
                while rest != 0 {
                    let x = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    img |= 1 << row[x];
                }
                if parent[img as usize].0 == u32::MAX {
                    visited += 1;
                    if visited > cap {
                        return Err(Error::cap("reset word subsets", cap as u64));
                    }
                    parent[img as usize] = (s, a as u16);
                    queue.push_back(img);
                }
            }
        }
        Err(Error::NotSynchronizing)
    }
}
