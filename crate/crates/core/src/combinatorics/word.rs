use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{MultiTableau, Tableau};
use crate::error::{Error, Result};

/// Column reading of a multi-tableau: a permutation of 1..n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.letters.iter().join(","))
    }
}

/// Indices aligned position-wise with a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexWord {
    indices: Vec<usize>,
}

impl IndexWord {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn sum(&self) -> usize {
        self.indices.iter().sum()
    }
}

impl fmt::Display for IndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.indices.iter().join(","))
    }
}

/// Index grid in the shape of a multi-tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexTableau {
    components: Vec<Vec<Vec<usize>>>,
}

impl IndexTableau {
    pub fn components(&self) -> &[Vec<Vec<usize>>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &[Vec<usize>] {
        &self.components[i]
    }

    /// Total of all indices; the degree of the monomial these exponents build.
    pub fn sum(&self) -> usize {
        self.components
            .iter()
            .flat_map(|c| c.iter().flatten())
            .sum()
    }
}

impl fmt::Display for IndexTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|rows| {
                let rs: Vec<String> = rows
                    .iter()
                    .map(|r| format!("[{}]", r.iter().join(",")))
                    .collect();
                format!("[{}]", rs.join(","))
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

/// Column reading of one component: each column bottom to top, columns left
/// to right.
pub(crate) fn component_word(t: &Tableau) -> Vec<usize> {
    t.columns()
        .iter()
        .flat_map(|col| col.iter().rev().copied())
        .collect()
}

/// The word of a multi-tableau: component readings concatenated in block
/// order.
pub fn word(t: &MultiTableau) -> Word {
    Word {
        letters: t.components().iter().flat_map(component_word).collect(),
    }
}

/// Index computation over an arbitrary set of distinct letters: the smallest
/// letter gets index 0, and each next-larger letter gets the previous letter's
/// index, plus one exactly when it sits earlier (further left) in the word.
/// Returns the indices aligned position-wise with the input.
pub fn index_word_relative(letters: &[usize]) -> Vec<usize> {
    let mut pos = BTreeMap::new();
    for (j, &l) in letters.iter().enumerate() {
        pos.insert(l, j);
    }
    assert_eq!(pos.len(), letters.len(), "letters must be distinct");
    let mut idx = BTreeMap::new();
    let mut prev: Option<(usize, usize)> = None; // (letter, index)
    for (&letter, &p) in &pos {
        let value = match prev {
            None => 0,
            Some((pl, pi)) => pi + usize::from(p < pos[&pl]),
        };
        idx.insert(letter, value);
        prev = Some((letter, value));
    }
    letters.iter().map(|l| idx[l]).collect()
}

/// Indices of a full word on 1..n.
pub fn index_word(w: &Word) -> IndexWord {
    IndexWord {
        indices: index_word_relative(w.letters()),
    }
}

fn write_back(t: &Tableau, index_of: &BTreeMap<usize, usize>) -> Vec<Vec<usize>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|e| index_of[e]).collect())
        .collect()
}

/// The index tableau i(T): each letter's index (computed from the full word
/// of T) written back into that letter's box.
pub fn index_tableau(t: &MultiTableau) -> Result<IndexTableau> {
    if !t.is_standard() {
        return Err(Error::Invalid(format!("tableau {t} is not standard")));
    }
    let w = word(t);
    let iw = index_word(&w);
    let index_of: BTreeMap<usize, usize> = w
        .letters()
        .iter()
        .copied()
        .zip(iw.indices().iter().copied())
        .collect();
    Ok(IndexTableau {
        components: t.components().iter().map(|c| write_back(c, &index_of)).collect(),
    })
}

/// Per-block index tableau: every component's indices are computed from that
/// component's own word alone (the component's smallest letter gets 0). This
/// is the exponent source for the higher Specht construction; for r = 1 it
/// agrees with [`index_tableau`].
pub fn block_index_tableau(t: &MultiTableau) -> Result<IndexTableau> {
    if !t.is_standard() {
        return Err(Error::Invalid(format!("tableau {t} is not standard")));
    }
    let components = t
        .components()
        .iter()
        .map(|c| {
            let w = component_word(c);
            let idx = index_word_relative(&w);
            let index_of: BTreeMap<usize, usize> =
                w.into_iter().zip(idx.into_iter()).collect();
            write_back(c, &index_of)
        })
        .collect();
    Ok(IndexTableau { components })
}
