use itertools::Itertools;
use num_rational::BigRational;

use crate::combinatorics::{
    count_standard, enumerate_nst, enumerate_r_diagrams, BlockStructure, MultiTableau, Tableau,
};
use crate::error::{Error, Result};
use crate::polyalg::Coeff;

use super::algebra::GroupAlgebraElement;
use super::perm::Permutation;

/// All permutations of {1..n} fixing each listed letter group setwise and
/// every other letter pointwise.
fn setwise_stabilizer(groups: &[Vec<usize>], n: usize) -> Vec<Permutation> {
    let per_group: Vec<Vec<Vec<usize>>> = groups
        .iter()
        .map(|g| g.iter().copied().permutations(g.len()).collect())
        .collect();
    let mut out: Vec<Permutation> = per_group
        .into_iter()
        .multi_cartesian_product()
        .map(|choice| {
            let mut images: Vec<usize> = (1..=n).collect();
            for (group, perm) in groups.iter().zip(&choice) {
                for (&letter, &img) in group.iter().zip(perm) {
                    images[letter - 1] = img;
                }
            }
            Permutation::from_images(images).unwrap()
        })
        .collect();
    if out.is_empty() {
        out.push(Permutation::identity(n));
    }
    out.sort();
    out
}

/// R(T): permutations of T's entries fixing each row setwise, as elements of
/// S_n (letters outside T fixed).
pub fn row_stabilizer(t: &Tableau, n: usize) -> Vec<Permutation> {
    setwise_stabilizer(t.rows(), n)
}

/// C(T): permutations of T's entries fixing each column setwise.
pub fn column_stabilizer(t: &Tableau, n: usize) -> Vec<Permutation> {
    setwise_stabilizer(&t.columns(), n)
}

/// The normalized Young symmetrizer of one component tableau:
/// e_T = (f^λ / m!) Σ_{σ ∈ R(T)} Σ_{τ ∈ C(T)} sgn(τ)·(τ∘σ),
/// with σ applied first. This normalization makes e_T idempotent.
pub fn young_symmetrizer<C: Coeff>(
    t: &Tableau,
    block: &BlockStructure,
) -> Result<GroupAlgebraElement<C>> {
    if !t.is_standard() {
        return Err(Error::Invalid(format!("tableau {t} is not standard")));
    }
    let entries = t.entries();
    let home = block
        .block_of(entries[0])
        .ok_or_else(|| Error::BlockMismatch(format!("entry {} out of range", entries[0])))?;
    if entries != block.block_range(home) {
        return Err(Error::BlockMismatch(format!(
            "entries of {t} are not exactly one block of ({block})"
        )));
    }

    let n = block.n();
    let m = t.size();
    let f = count_standard(&t.shape());
    let m_factorial: u128 = (1..=m as u128).product();
    let norm = C::from_ratio(f as i64, m_factorial as i64);

    let rows = row_stabilizer(t, n);
    let cols = column_stabilizer(t, n);
    let mut out = GroupAlgebraElement::zero(block.clone());
    for sigma in &rows {
        for tau in &cols {
            let coeff = if tau.sign() == 1 { norm.clone() } else { -norm.clone() };
            let term = GroupAlgebraElement::single(block.clone(), tau.compose(sigma), coeff)?;
            out = &out + &term;
        }
    }
    Ok(out)
}

/// e_T = e_{T^1} ⋯ e_{T^r} for a natural standard multi-tableau. The factors
/// act on disjoint blocks and therefore commute; this is asserted.
pub fn product_symmetrizer<C: Coeff>(t: &MultiTableau) -> Result<GroupAlgebraElement<C>> {
    if !t.is_natural() {
        return Err(Error::BlockMismatch(format!(
            "{t} is not natural: component entries must equal their block range"
        )));
    }
    let block = t.block();
    let factors: Vec<GroupAlgebraElement<C>> = t
        .components()
        .iter()
        .map(|c| young_symmetrizer(c, block))
        .collect::<Result<_>>()?;
    let forward = factors
        .iter()
        .fold(GroupAlgebraElement::identity(block.clone()), |acc, e| &acc * e);
    let backward = factors
        .iter()
        .rev()
        .fold(GroupAlgebraElement::identity(block.clone()), |acc, e| &acc * e);
    assert_eq!(forward, backward, "disjoint-block symmetrizer factors must commute");
    Ok(forward)
}

/// Exact diagnostics for the full idempotent family of a block structure.
#[derive(Clone, Debug)]
pub struct IdempotentReport {
    /// All natural standard multi-tableaux, over every diagram, in
    /// enumeration order.
    pub tableaux: Vec<MultiTableau>,
    /// e_T·e_T = e_T per tableau.
    pub idempotent: Vec<bool>,
    /// Σ_T e_T equals the identity of the group algebra.
    pub sum_is_identity: bool,
    /// product_zero[i][j] = (e_{Ti} · e_{Tj} = 0); diagonal entries are
    /// trivially false.
    pub product_zero: Vec<Vec<bool>>,
}

/// Computes every natural symmetrizer of the block structure and reports
/// idempotency, the resolution Σ e_T = 1, and which pairwise products vanish.
/// Same-shape off-diagonal products are reported, not asserted zero.
pub fn idempotent_report(block: &BlockStructure, max_order: u128) -> Result<IdempotentReport> {
    if block.group_order() > max_order {
        return Err(Error::BoundExceeded(format!(
            "group order {} exceeds {max_order}",
            block.group_order()
        )));
    }
    let mut tableaux = Vec::new();
    for diagram in enumerate_r_diagrams(block) {
        tableaux.extend(enumerate_nst(&diagram));
    }
    let elements: Vec<GroupAlgebraElement<BigRational>> = tableaux
        .iter()
        .map(product_symmetrizer)
        .collect::<Result<_>>()?;

    let idempotent = elements.iter().map(|e| e.is_idempotent()).collect();
    let sum = elements
        .iter()
        .fold(GroupAlgebraElement::zero(block.clone()), |acc, e| &acc + e);
    let sum_is_identity = sum == GroupAlgebraElement::identity(block.clone());
    let product_zero = elements
        .iter()
        .map(|a| elements.iter().map(|b| (a * b).is_zero()).collect())
        .collect();

    Ok(IdempotentReport { tableaux, idempotent, sum_is_identity, product_zero })
}
