//! Partitions, block structures, multi-tableaux, words and index words — the
//! combinatorial layer everything else is built on.

mod block;
mod partition;
mod tableau;
mod word;

pub use block::{compositions, BlockStructure};
pub use partition::{enumerate_partitions, Partition};
pub use tableau::{
    canonical_multi_tableau, canonical_tableau, count_standard, enumerate_nst,
    enumerate_r_diagrams, enumerate_st, enumerate_standard_tableaux, MultiDiagram, MultiTableau,
    Tableau,
};
pub use word::{
    block_index_tableau, index_tableau, index_word, index_word_relative, word, IndexTableau,
    IndexWord, Word,
};
