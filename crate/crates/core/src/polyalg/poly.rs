use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::BlockStructure;
use crate::error::{Error, Result};
use crate::groupalg::Permutation;

use super::coeff::Coeff;
use super::exponent::ExponentVector;

/// Sparse multivariate polynomial in n variables. Terms live in a BTreeMap
/// keyed by graded-lex exponent order, so iteration (and everything derived
/// from it: display, linear algebra layouts, goldens) is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C> {
    n: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term(ExponentVector::zero(n), c);
        p
    }

    /// The k-th variable, 1-based.
    pub fn variable(n: usize, k: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(ExponentVector::unit(n, k), C::one());
        p
    }

    pub fn monomial(n: usize, exps: ExponentVector, c: C) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length must match ambient n");
        let mut p = Self::zero(n);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, C)>>(n: usize, iter: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in iter {
            assert_eq!(e.len(), n);
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &C)> {
        self.terms.last_key_value()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, exps: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let merged = old + c;
                if !merged.is_zero() {
                    self.terms.insert(exps, merged);
                }
            }
        }
    }

    fn assert_same_ambient(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "ambient mismatch: {} vs {} variables",
            self.n, other.n
        );
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (e.clone(), t.clone() * c.clone()))
                .filter(|(_, t)| !t.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.n);
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.exponents().iter().enumerate() {
                for _ in 0..exp {
                    term = term * point[i].clone();
                }
            }
            total = total + term;
        }
        total
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, other: Self) -> Polynomial<C> {
        self.assert_same_ambient(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, other: Self) -> Polynomial<C> {
        self.assert_same_ambient(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, other: Self) -> Polynomial<C> {
        self.assert_same_ambient(other);
        let mut out = Polynomial::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

/// The action σ·f substituting x_k ↦ x_{σ(k)}; a left action, so
/// permute(σ, permute(τ, f)) = permute(σ∘τ, f).
pub fn permute<C: Coeff>(sigma: &Permutation, f: &Polynomial<C>) -> Polynomial<C> {
    assert_eq!(sigma.n(), f.n(), "permutation degree must match ambient n");
    Polynomial {
        n: f.n,
        terms: f
            .terms
            .iter()
            .map(|(e, c)| (e.permute(sigma.images()), c.clone()))
            .collect(),
    }
}

/// Quotient of f by g when the division is exact, None when it is not.
/// Standard single-divisor reduction: any term of the running remainder whose
/// exponents are not divisible by g's leading monomial certifies
/// non-divisibility of f (for exact division the term order is immaterial).
pub fn exact_divide<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Option<Polynomial<C>>> {
    f.assert_same_ambient(g);
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (ge, gc) = g.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
    let mut rem = f.clone();
    let mut quot = Polynomial::zero(f.n);
    while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
        let Some(qe) = re.checked_sub(&ge) else {
            return Ok(None);
        };
        let qc = rc / gc.clone();
        let step = Polynomial::monomial(f.n, qe, qc);
        rem = &rem - &(&step * g);
        quot = &quot + &step;
    }
    Ok(Some(quot))
}

/// True iff every listed permutation fixes f.
pub fn is_invariant<C: Coeff>(f: &Polynomial<C>, gens: &[Permutation]) -> bool {
    gens.iter().all(|g| permute(g, f) == *f)
}

/// Δ_i: product of (x_a − x_b) over a < b inside the block. Empty product
/// (block of size 1) is 1.
pub fn block_vandermonde<C: Coeff>(block: &BlockStructure, i: usize) -> Polynomial<C> {
    let n = block.n();
    let letters = block.block_range(i);
    let mut out = Polynomial::one(n);
    for (ai, &a) in letters.iter().enumerate() {
        for &b in &letters[ai + 1..] {
            let factor = &Polynomial::variable(n, a) - &Polynomial::variable(n, b);
            out = &out * &factor;
        }
    }
    out
}

/// Δ = Π_i Δ_i over all blocks.
pub fn full_vandermonde<C: Coeff>(block: &BlockStructure) -> Polynomial<C> {
    (0..block.r()).fold(Polynomial::one(block.n()), |acc, i| {
        &acc * &block_vandermonde(block, i)
    })
}
