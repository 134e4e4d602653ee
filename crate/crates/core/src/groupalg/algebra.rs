use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::combinatorics::BlockStructure;
use crate::error::{Error, Result};
use crate::polyalg::{permute, Coeff, Polynomial};

use super::perm::Permutation;

/// Finite-support combination of block-preserving permutations — an element
/// of the rational group algebra of S_{n_1} × ⋯ × S_{n_r}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement<C> {
    block: BlockStructure,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Coeff> GroupAlgebraElement<C> {
    pub fn zero(block: BlockStructure) -> Self {
        GroupAlgebraElement { block, terms: BTreeMap::new() }
    }

    pub fn identity(block: BlockStructure) -> Self {
        let id = Permutation::identity(block.n());
        let mut out = Self::zero(block);
        out.add_term(id, C::one()).unwrap();
        out
    }

    pub fn single(block: BlockStructure, sigma: Permutation, c: C) -> Result<Self> {
        let mut out = Self::zero(block);
        out.add_term(sigma, c)?;
        Ok(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, C)>>(
        block: BlockStructure,
        iter: I,
    ) -> Result<Self> {
        let mut out = Self::zero(block);
        for (sigma, c) in iter {
            out.add_term(sigma, c)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, sigma: Permutation, c: C) -> Result<()> {
        if !sigma.preserves_blocks(&self.block) {
            return Err(Error::BlockMismatch(format!(
                "{sigma} does not preserve blocks ({})",
                self.block
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&sigma) {
            None => {
                self.terms.insert(sigma, c);
            }
            Some(old) => {
                let merged = old + c;
                if !merged.is_zero() {
                    self.terms.insert(sigma, merged);
                }
            }
        }
        Ok(())
    }

    pub fn block(&self) -> &BlockStructure {
        &self.block
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> C {
        self.terms.get(sigma).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.block.clone());
        }
        GroupAlgebraElement {
            block: self.block.clone(),
            terms: self
                .terms
                .iter()
                .map(|(s, t)| (s.clone(), t.clone() * c.clone()))
                .filter(|(_, t)| !t.is_zero())
                .collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self * self == *self
    }

    fn assert_same_block(&self, other: &Self) {
        assert_eq!(
            self.block, other.block,
            "block mismatch: ({}) vs ({})",
            self.block, other.block
        );
    }
}

impl<C: Coeff> Add for &GroupAlgebraElement<C> {
    type Output = GroupAlgebraElement<C>;
    fn add(self, other: Self) -> GroupAlgebraElement<C> {
        self.assert_same_block(other);
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone()).unwrap();
        }
        out
    }
}

impl<C: Coeff> Sub for &GroupAlgebraElement<C> {
    type Output = GroupAlgebraElement<C>;
    fn sub(self, other: Self) -> GroupAlgebraElement<C> {
        self.assert_same_block(other);
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), -c.clone()).unwrap();
        }
        out
    }
}

impl<C: Coeff> Neg for &GroupAlgebraElement<C> {
    type Output = GroupAlgebraElement<C>;
    fn neg(self) -> GroupAlgebraElement<C> {
        GroupAlgebraElement {
            block: self.block.clone(),
            terms: self.terms.iter().map(|(s, c)| (s.clone(), -c.clone())).collect(),
        }
    }
}

/// Convolution: (a·b) = Σ a_σ b_τ (σ∘τ), matching the left action on
/// polynomials, so apply(a·b, f) = apply(a, apply(b, f)).
impl<C: Coeff> Mul for &GroupAlgebraElement<C> {
    type Output = GroupAlgebraElement<C>;
    fn mul(self, other: Self) -> GroupAlgebraElement<C> {
        self.assert_same_block(other);
        let mut out = GroupAlgebraElement::zero(self.block.clone());
        for (s, cs) in &self.terms {
            for (t, ct) in &other.terms {
                out.add_term(s.compose(t), cs.clone() * ct.clone()).unwrap();
            }
        }
        out
    }
}

/// Σ coeff(σ) · permute(σ, f).
pub fn apply_element<C: Coeff>(a: &GroupAlgebraElement<C>, f: &Polynomial<C>) -> Polynomial<C> {
    assert_eq!(a.n(), f.n(), "ambient mismatch between element and polynomial");
    let mut out = Polynomial::zero(f.n());
    for (sigma, c) in a.terms() {
        out = &out + &permute(sigma, f).scale(c);
    }
    out
}

/// Text form, e.g. `1/2*[1,2] - 1/2*[2,1]`, in lexicographic image order.
impl fmt::Display for GroupAlgebraElement<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (sigma, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{sigma}")?;
            } else {
                write!(f, "{mag}*{sigma}")?;
            }
        }
        Ok(())
    }
}
