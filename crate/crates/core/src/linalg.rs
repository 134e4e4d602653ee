//! Exact linear algebra over the rationals: fraction-free rank computation
//! and a multi-right-hand-side solver with a full-column-rank certificate.
//! Small dense systems only — the matrices here are coordinate matrices of
//! polynomial families over their monomial support.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type QMatrix = Vec<Vec<BigRational>>;

/// Clears denominators row by row, leaving a BigInt matrix with the same row
/// space.
fn integerize(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
            row.iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        })
        .collect()
}

/// Rank by Bareiss fraction-free Gaussian elimination over BigInt. All
/// intermediate divisions are exact, keeping entry growth polynomial.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = integerize(rows);
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        // pick the first nonzero pivot in this column at or below `row`
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
    }
    row
}

/// Solver for A·x = b with A of full column rank, prepared once and reused
/// across right-hand sides. Construction fails with the achieved rank if the
/// columns are dependent — the caller treats that as falsification evidence.
pub struct ColumnSolver {
    rows: usize,
    cols: usize,
    matrix: QMatrix,
    /// Row indices forming an invertible square submatrix.
    pivot_rows: Vec<usize>,
    /// Inverse of that submatrix.
    inverse: QMatrix,
}

/// Gauss-Jordan inverse; None when the matrix is singular.
fn invert(square: &QMatrix) -> Option<QMatrix> {
    let k = square.len();
    let mut a = square.clone();
    let mut inv: QMatrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..k {
        let p = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let pivot = a[col][col].clone();
        for c in 0..k {
            a[col][c] /= &pivot;
            inv[col][c] /= &pivot;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..k {
                    let va = &a[col][c] * &factor;
                    a[r][c] -= va;
                    let vi = &inv[col][c] * &factor;
                    inv[r][c] -= vi;
                }
            }
        }
    }
    Some(inv)
}

impl ColumnSolver {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, |r| r.len());
        if matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix".into()));
        }
        if cols == 0 {
            return Ok(ColumnSolver { rows, cols, matrix, pivot_rows: vec![], inverse: vec![] });
        }
        // Row-reduce a copy to locate `cols` independent rows.
        let mut work = matrix.clone();
        let mut pivot_rows = Vec::with_capacity(cols);
        let mut used = vec![false; rows];
        for col in 0..cols {
            let Some(p) = (0..rows).find(|&r| !used[r] && !work[r][col].is_zero()) else {
                return Err(Error::Falsified {
                    check: "full-column-rank".into(),
                    instance: format!("{rows}x{cols} system"),
                    detail: format!("columns dependent: rank {} < {cols}", rank(&matrix)),
                });
            };
            used[p] = true;
            pivot_rows.push(p);
            for r in 0..rows {
                if r != p && !work[r][col].is_zero() {
                    let factor = &work[r][col] / &work[p][col];
                    for c in 0..cols {
                        let v = &work[p][c] * &factor;
                        work[r][c] -= v;
                    }
                }
            }
        }
        pivot_rows.sort_unstable();
        let square: QMatrix = pivot_rows
            .iter()
            .map(|&r| matrix[r].clone())
            .collect();
        let inverse = invert(&square).expect("pivot submatrix must be invertible");
        Ok(ColumnSolver { rows, cols, matrix, pivot_rows, inverse })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Solves A·x = b exactly; None when b is outside the column span.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        if self.cols == 0 {
            return b.iter().all(|v| v.is_zero()).then(Vec::new);
        }
        let picked: Vec<&BigRational> = self.pivot_rows.iter().map(|&r| &b[r]).collect();
        let x: Vec<BigRational> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&picked).map(|(m, v)| m * *v).sum())
            .collect();
        // the pivot rows determine x; the remaining rows decide consistency
        for (r, row) in self.matrix.iter().enumerate() {
            let lhs: BigRational = row.iter().zip(&x).map(|(m, v)| m * v).sum();
            if lhs != b[r] {
                return None;
            }
        }
        Some(x)
    }
}

/// Exact rank of the coordinate matrix of a polynomial family over its joint
/// monomial support.
pub fn polynomial_rank(polys: &[crate::QPolynomial]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    let support = joint_support(polys);
    let rows: QMatrix = polys
        .iter()
        .map(|p| support.iter().map(|e| p.coefficient(e)).collect())
        .collect();
    rank(&rows)
}

/// Union of the monomials appearing in the family, in ascending graded-lex
/// order — the deterministic row/column layout used everywhere.
pub fn joint_support(polys: &[crate::QPolynomial]) -> Vec<crate::polyalg::ExponentVector> {
    let mut support: Vec<crate::polyalg::ExponentVector> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
        .collect();
    support.sort();
    support.dedup();
    support
}

#[cfg(test)]
mod tests {
    use crate::polyalg::parse_polynomial;
    use crate::q;

    use super::*;

    fn m(rows: &[&[(i64, i64)]]) -> QMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&(n, d)| q(n, d)).collect())
            .collect()
    }

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(rank(&m(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)]])), 2);
        assert_eq!(rank(&m(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]])), 1);
        assert_eq!(rank(&m(&[&[(0, 1), (0, 1)]])), 0);
        assert_eq!(
            rank(&m(&[&[(1, 2), (1, 3)], &[(1, 5), (1, 7)], &[(2, 3), (1, 1)]])),
            2
        );
    }

    #[test]
    fn solver_round_trip() {
        let a = m(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)], &[(2, 1), (1, 1)]]);
        let s = ColumnSolver::new(a).unwrap();
        // b = A·(3, -2)
        let b = vec![q(1, 1), q(-2, 1), q(4, 1)];
        assert_eq!(s.solve(&b), Some(vec![q(3, 1), q(-2, 1)]));
        // inconsistent b
        let bad = vec![q(1, 1), q(-2, 1), q(5, 1)];
        assert_eq!(s.solve(&bad), None);
    }

    #[test]
    fn solver_rejects_dependent_columns() {
        let a = m(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]);
        assert!(matches!(
            ColumnSolver::new(a),
            Err(Error::Falsified { .. })
        ));
    }

    #[test]
    fn zero_column_solver() {
        let s = ColumnSolver::new(vec![vec![], vec![]]).unwrap();
        assert_eq!(s.solve(&[q(0, 1), q(0, 1)]), Some(vec![]));
        assert_eq!(s.solve(&[q(0, 1), q(1, 1)]), None);
    }

    #[test]
    fn polynomial_rank_detects_dependence() {
        let f1 = parse_polynomial(2, "x1 + x2").unwrap();
        let f2 = parse_polynomial(2, "x1 - x2").unwrap();
        let f3 = parse_polynomial(2, "2*x1").unwrap();
        assert_eq!(polynomial_rank(&[f1.clone(), f2.clone()]), 2);
        assert_eq!(polynomial_rank(&[f1, f2, f3]), 2);
    }

    #[test]
    fn fractional_entries_rank() {
        // row 1 is (1/6)·row 2 after clearing denominators: rank 2
        let a = m(&[&[(1, 2), (1, 3), (1, 6)], &[(3, 1), (2, 1), (1, 1)], &[(1, 1), (0, 1), (0, 1)]]);
        assert_eq!(rank(&a), 2);
    }
}
