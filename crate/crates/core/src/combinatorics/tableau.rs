use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{BlockStructure, Partition};
use crate::error::{Error, Result};

use super::block::factorial;
use super::partition::enumerate_partitions;

/// A filling of a Young diagram with distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(shape)?;
        let mut seen = BTreeSet::new();
        for row in &rows {
            for &e in row {
                if e == 0 {
                    return Err(Error::Invalid("tableau entries must be positive".into()));
                }
                if !seen.insert(e) {
                    return Err(Error::Invalid(format!("repeated tableau entry {e}")));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entries in increasing order.
    pub fn entries(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.rows.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row][col]
    }

    /// Columns as vectors of entries, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let ncols = self.rows.first().map_or(0, |r| r.len());
        (0..ncols)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// Rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        self.columns()
            .iter()
            .all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    /// Concatenation of the rows, top to bottom (used as the canonical sort
    /// key for tableau enumerations).
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// An r-tuple of partitions with component i of size n_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDiagram {
    components: Vec<Partition>,
    block: BlockStructure,
}

impl MultiDiagram {
    pub fn new(components: Vec<Partition>, block: BlockStructure) -> Result<Self> {
        if components.len() != block.r() {
            return Err(Error::BlockMismatch(format!(
                "{} diagram components for {} blocks",
                components.len(),
                block.r()
            )));
        }
        for (i, p) in components.iter().enumerate() {
            if p.size() != block.size(i) {
                return Err(Error::BlockMismatch(format!(
                    "component {} has size {}, block has size {}",
                    i,
                    p.size(),
                    block.size(i)
                )));
            }
        }
        Ok(MultiDiagram { components, block })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn block(&self) -> &BlockStructure {
        &self.block
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    /// Π_i f^{λ^i}: the dimension of the attached irreducible module, equal to
    /// the number of natural standard fillings.
    pub fn nst_count(&self) -> u128 {
        self.components.iter().map(count_standard).product()
    }
}

impl fmt::Display for MultiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.components.iter().map(|p| p.to_string()).join("|"))
    }
}

/// An r-tuple of tableaux jointly filled with 1..n, each exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiTableau {
    components: Vec<Tableau>,
    block: BlockStructure,
}

impl MultiTableau {
    pub fn new(components: Vec<Tableau>, block: BlockStructure) -> Result<Self> {
        if components.len() != block.r() {
            return Err(Error::BlockMismatch(format!(
                "{} tableau components for {} blocks",
                components.len(),
                block.r()
            )));
        }
        for (i, t) in components.iter().enumerate() {
            if t.size() != block.size(i) {
                return Err(Error::BlockMismatch(format!(
                    "component {} has {} entries, block has size {}",
                    i,
                    t.size(),
                    block.size(i)
                )));
            }
        }
        let mut all: Vec<usize> = components.iter().flat_map(|t| t.entries()).collect();
        all.sort_unstable();
        let expect: Vec<usize> = (1..=block.n()).collect();
        if all != expect {
            return Err(Error::Invalid(format!(
                "entries must cover 1..={} exactly once, got {:?}",
                block.n(),
                all
            )));
        }
        Ok(MultiTableau { components, block })
    }

    pub fn components(&self) -> &[Tableau] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Tableau {
        &self.components[i]
    }

    pub fn block(&self) -> &BlockStructure {
        &self.block
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    pub fn diagram(&self) -> MultiDiagram {
        MultiDiagram::new(
            self.components.iter().map(|t| t.shape()).collect(),
            self.block.clone(),
        )
        .unwrap()
    }

    pub fn is_standard(&self) -> bool {
        self.components.iter().all(|t| t.is_standard())
    }

    /// Entries of component i are exactly the i-th block range. Natural
    /// standard tableaux and block-respecting standard tableaux coincide:
    /// each component has as many cells as its block has letters.
    pub fn is_natural(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(i, t)| t.entries() == self.block.block_range(i))
    }

    /// Canonical sort key: row words of the components, concatenated.
    pub fn row_word(&self) -> Vec<usize> {
        self.components.iter().flat_map(|t| t.row_word()).collect()
    }
}

impl fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.components.iter().map(|t| t.to_string()).join("|"))
    }
}

/// Number of standard fillings of the shape (hook-length product). The unit
/// tests cross-check this against `enumerate_standard_tableaux` for all
/// shapes of size ≤ 7.
pub fn count_standard(shape: &Partition) -> u128 {
    let m = shape.size();
    let mut hooks: u128 = 1;
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            hooks *= shape.hook_length(r, c) as u128;
        }
    }
    factorial(m) / hooks
}

/// All standard fillings of `shape` with the given entry set, sorted by
/// row word.
pub fn enumerate_standard_tableaux(shape: &Partition, entries: &[usize]) -> Result<Vec<Tableau>> {
    if entries.len() != shape.size() {
        return Err(Error::Invalid(format!(
            "shape {} needs {} entries, got {}",
            shape,
            shape.size(),
            entries.len()
        )));
    }
    let set: BTreeSet<usize> = entries.iter().copied().collect();
    if set.len() != entries.len() {
        return Err(Error::Invalid("entry set has repeats".into()));
    }
    let sorted: Vec<usize> = set.into_iter().collect();

    // Insert entries in increasing order; each goes into a cell whose left and
    // upper neighbours are already filled, which keeps every prefix standard.
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    let mut fill: Vec<usize> = vec![0; parts.len()]; // cells used so far per row
    let mut out = Vec::new();

    fn go(
        k: usize,
        sorted: &[usize],
        parts: &[usize],
        rows: &mut Vec<Vec<usize>>,
        fill: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if k == sorted.len() {
            out.push(Tableau::new(rows.clone()).unwrap());
            return;
        }
        for r in 0..parts.len() {
            let c = fill[r];
            if c < parts[r] && (r == 0 || fill[r - 1] > c) {
                rows[r][c] = sorted[k];
                fill[r] += 1;
                go(k + 1, sorted, parts, rows, fill, out);
                fill[r] -= 1;
            }
        }
    }
    go(0, &sorted, &parts, &mut rows, &mut fill, &mut out);
    out.sort_by_key(|t| t.row_word());
    Ok(out)
}

/// Row-by-row filling with the entry set in increasing order (the canonical
/// tableau of the shape).
pub fn canonical_tableau(shape: &Partition, entries: &[usize]) -> Result<Tableau> {
    if entries.len() != shape.size() {
        return Err(Error::Invalid(format!(
            "shape {} needs {} entries, got {}",
            shape,
            shape.size(),
            entries.len()
        )));
    }
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    let mut it = sorted.into_iter();
    let rows = shape
        .parts()
        .iter()
        .map(|&len| (&mut it).take(len).collect())
        .collect();
    Tableau::new(rows)
}

/// All r-diagrams of the block structure: cartesian product of the per-block
/// partition lists, block 1 varying slowest.
pub fn enumerate_r_diagrams(block: &BlockStructure) -> Vec<MultiDiagram> {
    block
        .sizes()
        .iter()
        .map(|&s| enumerate_partitions(s))
        .multi_cartesian_product()
        .map(|components| MultiDiagram::new(components, block.clone()).unwrap())
        .collect()
}

/// Natural standard multi-tableaux of the diagram: component i filled with
/// block range i. Sorted by row word.
pub fn enumerate_nst(diagram: &MultiDiagram) -> Vec<MultiTableau> {
    let block = diagram.block();
    let per_block: Vec<Vec<Tableau>> = diagram
        .components()
        .iter()
        .enumerate()
        .map(|(i, shape)| enumerate_standard_tableaux(shape, &block.block_range(i)).unwrap())
        .collect();
    let mut out: Vec<MultiTableau> = per_block
        .into_iter()
        .multi_cartesian_product()
        .map(|components| MultiTableau::new(components, block.clone()).unwrap())
        .collect();
    out.sort_by_key(|t| t.row_word());
    out
}

/// All standard multi-tableaux of the diagram with entries 1..n distributed
/// arbitrarily across components. Sorted by row word.
pub fn enumerate_st(diagram: &MultiDiagram) -> Vec<MultiTableau> {
    let block = diagram.block();
    let n = block.n();
    let sizes: Vec<usize> = diagram.components().iter().map(|p| p.size()).collect();
    let mut out = Vec::new();

    // Distribute {1..n} over the components, then fill each standardly.
    fn split(
        letters: &[usize],
        sizes: &[usize],
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if sizes.is_empty() {
            out.push(acc.clone());
            return;
        }
        for combo in letters.iter().copied().combinations(sizes[0]) {
            let rest: Vec<usize> = letters.iter().copied().filter(|l| !combo.contains(l)).collect();
            acc.push(combo);
            split(&rest, &sizes[1..], acc, out);
            acc.pop();
        }
    }
    let letters: Vec<usize> = (1..=n).collect();
    let mut splits = Vec::new();
    split(&letters, &sizes, &mut Vec::new(), &mut splits);

    for assignment in splits {
        let per_block: Vec<Vec<Tableau>> = diagram
            .components()
            .iter()
            .zip(&assignment)
            .map(|(shape, entries)| enumerate_standard_tableaux(shape, entries).unwrap())
            .collect();
        for components in per_block.into_iter().multi_cartesian_product() {
            out.push(MultiTableau::new(components, block.clone()).unwrap());
        }
    }
    out.sort_by_key(|t| t.row_word());
    out
}

/// The canonical multi-tableau S_0: every component numbered left to right in
/// successive rows with its own block range.
pub fn canonical_multi_tableau(diagram: &MultiDiagram) -> MultiTableau {
    let block = diagram.block();
    let components = diagram
        .components()
        .iter()
        .enumerate()
        .map(|(i, shape)| canonical_tableau(shape, &block.block_range(i)).unwrap())
        .collect();
    MultiTableau::new(components, block.clone()).unwrap()
}
