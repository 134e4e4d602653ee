use std::fmt;

use itertools::Itertools;

use crate::combinatorics::BlockStructure;
use crate::error::{Error, Result};

/// A permutation of {1..n} in one-line image notation: images[k] = σ(k+1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Invalid(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= n && b >= 1 && b <= n && a != b);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// σ(k) for 1-based k.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// self ∘ other: other is applied first, so (σ∘τ)(k) = σ(τ(k)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// +1 or −1 by inversion parity.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether σ maps every block range of the structure onto itself.
    pub fn preserves_blocks(&self, block: &BlockStructure) -> bool {
        if self.n() != block.n() {
            return false;
        }
        (1..=self.n()).all(|k| block.block_of(k) == block.block_of(self.apply(k)))
    }

    /// Embeds a permutation of an arbitrary letter set into S_n: `mapping`
    /// lists (letter, image) pairs; all other letters are fixed.
    pub fn from_mapping(n: usize, mapping: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for &(from, to) in mapping {
            if from == 0 || from > n || to == 0 || to > n {
                return Err(Error::Invalid(format!(
                    "letter pair ({from},{to}) out of range 1..={n}"
                )));
            }
            images[from - 1] = to;
        }
        Self::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

/// Parses one-line notation `[2,1,3]`.
pub fn parse_permutation(input: &str) -> Result<Permutation> {
    let inner = input
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("permutation must look like [2,1,3], got '{input}'")))?;
    let images = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad permutation entry '{t}'")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Permutation::from_images(images)
}

/// All n! permutations of {1..n}, in lexicographic image order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect()
}

/// Every element of S_{n_1} × ⋯ × S_{n_r} embedded in S_n: permutations
/// moving each block within itself. Ordered lexicographically by image.
pub fn product_group(block: &BlockStructure) -> Vec<Permutation> {
    let n = block.n();
    let per_block: Vec<Vec<Vec<usize>>> = (0..block.r())
        .map(|i| {
            let letters = block.block_range(i);
            letters
                .iter()
                .copied()
                .permutations(letters.len())
                .collect()
        })
        .collect();
    let mut out: Vec<Permutation> = per_block
        .into_iter()
        .multi_cartesian_product()
        .map(|blocks| {
            let mut images = vec![0; n];
            for (i, perm_of_block) in blocks.iter().enumerate() {
                for (j, &img) in perm_of_block.iter().enumerate() {
                    let letter = block.block_start(i) + j;
                    images[letter - 1] = img;
                }
            }
            Permutation { images }
        })
        .collect();
    out.sort();
    out
}

/// Adjacent transpositions inside each block: a generating set of the
/// product group.
pub fn product_group_generators(block: &BlockStructure) -> Vec<Permutation> {
    let n = block.n();
    let mut gens = Vec::new();
    for i in 0..block.r() {
        let letters = block.block_range(i);
        for w in letters.windows(2) {
            gens.push(Permutation::transposition(n, w[0], w[1]));
        }
    }
    gens
}
