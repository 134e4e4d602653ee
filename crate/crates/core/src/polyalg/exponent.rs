use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

/// Length-n exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exps: Vec<u32>,
}

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector { exps }
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector { exps: vec![0; n] }
    }

    /// Unit vector for the k-th variable, 1-based.
    pub fn unit(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= n, "variable x{k} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[k - 1] = 1;
        ExponentVector { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn get(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        ExponentVector {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise subtraction; None if any component would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.len(), other.len());
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(|exps| ExponentVector { exps })
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.checked_sub(self).is_some()
    }

    /// Relabel under a permutation of variables: the exponent of x_k moves to
    /// x_{images[k-1]}.
    pub fn permute(&self, images: &[usize]) -> Self {
        assert_eq!(self.len(), images.len());
        let mut exps = vec![0; self.exps.len()];
        for (k, &e) in self.exps.iter().enumerate() {
            exps[images[k] - 1] = e;
        }
        ExponentVector { exps }
    }
}

/// Every exponent vector of total degree exactly d on n variables, in
/// ascending order (lexicographic on the vectors, which within one degree is
/// the graded-lex order). Cardinality is C(d+n−1, n−1).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    fn fill(slot: usize, n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if slot == n - 1 {
            prefix.push(left);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            fill(slot + 1, n, left - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    fill(0, n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Graded lexicographic order: compare total degree first, then the exponent
/// sequence lexicographically (so x1 > x2 > … within a degree). `Ord::max`
/// picks the leading monomial; display iterates descending.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.total_degree() == 0 {
            return write!(f, "1");
        }
        let parts = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .join("*");
        write!(f, "{parts}")
    }
}
