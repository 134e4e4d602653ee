use std::fmt;

use crate::error::{Error, Result};

/// Sizes (n_1, …, n_r) of the factors of S_{n_1} × ⋯ × S_{n_r}, together with
/// the induced splitting of {1..n} into consecutive blocks: block 0 holds
/// 1..=n_1, block 1 holds n_1+1..=n_1+n_2, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockStructure {
    sizes: Vec<usize>,
}

impl BlockStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Invalid("block structure needs at least one block".into()));
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::Invalid("block sizes must be positive".into()));
        }
        Ok(BlockStructure { sizes })
    }

    /// Number of blocks r.
    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of letters n = Σ n_i.
    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, block: usize) -> usize {
        self.sizes[block]
    }

    /// First letter of the given block (1-based).
    pub fn block_start(&self, block: usize) -> usize {
        1 + self.sizes[..block].iter().sum::<usize>()
    }

    /// The letters of the given block, in increasing order.
    pub fn block_range(&self, block: usize) -> Vec<usize> {
        let start = self.block_start(block);
        (start..start + self.sizes[block]).collect()
    }

    /// Which block a letter (1-based) belongs to.
    pub fn block_of(&self, letter: usize) -> Option<usize> {
        if letter == 0 || letter > self.n() {
            return None;
        }
        let mut upper = 0;
        for (i, &s) in self.sizes.iter().enumerate() {
            upper += s;
            if letter <= upper {
                return Some(i);
            }
        }
        None
    }

    /// Order of the product group, Π n_i!.
    pub fn group_order(&self) -> u128 {
        self.sizes.iter().map(|&s| factorial(s)).product()
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub(crate) fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// All ordered compositions of n (used to sweep "every block structure with
/// total size n").
pub fn compositions(n: usize) -> Vec<BlockStructure> {
    fn go(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<BlockStructure>) {
        if rest == 0 {
            out.push(BlockStructure::new(acc.clone()).unwrap());
            return;
        }
        for first in 1..=rest {
            acc.push(first);
            go(rest - first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_partition_letters() {
        let b = BlockStructure::new(vec![5, 3]).unwrap();
        assert_eq!(b.n(), 8);
        assert_eq!(b.r(), 2);
        assert_eq!(b.block_range(0), vec![1, 2, 3, 4, 5]);
        assert_eq!(b.block_range(1), vec![6, 7, 8]);
        assert_eq!(b.block_of(5), Some(0));
        assert_eq!(b.block_of(6), Some(1));
        assert_eq!(b.block_of(9), None);
        assert_eq!(b.group_order(), 720);
    }

    #[test]
    fn rejects_degenerate_structures() {
        assert!(BlockStructure::new(vec![]).is_err());
        assert!(BlockStructure::new(vec![2, 0]).is_err());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(1).len(), 1);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(compositions(5).len(), 16);
    }

    #[test]
    fn displays_comma_separated() {
        let b = BlockStructure::new(vec![2, 2, 1]).unwrap();
        assert_eq!(b.to_string(), "2,2,1");
    }
}
