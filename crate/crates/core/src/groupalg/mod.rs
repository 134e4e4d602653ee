//! The rational group algebra of S_{n_1} × ⋯ × S_{n_r}: permutations, the
//! convolution algebra, Young symmetrizers and idempotent diagnostics.

mod algebra;
mod perm;
mod symmetrizer;

pub use algebra::{apply_element, GroupAlgebraElement};
pub use perm::{
    all_permutations, parse_permutation, product_group, product_group_generators, Permutation,
};
pub use symmetrizer::{
    column_stabilizer, idempotent_report, product_symmetrizer, row_stabilizer, young_symmetrizer,
    IdempotentReport,
};
