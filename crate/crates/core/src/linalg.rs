//! Small dense exact linear algebra: rational inversion and integer row
//! reduction. Matrices are `Vec<Vec<_>>`, row-major.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn to_rational(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect()
}

/// Gauss-Jordan inverse. Returns `None` for singular input.
pub fn invert(m: &[Vec<Rational>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m.to_vec();
    let mut inv: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= factor * x;
                    inv[r][j] -= factor * y;
                }
            }
        }
    }
    Some(inv)
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: RatMatrix = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let factor = a[r][col] / p;
            if !factor.is_zero() {
                for j in col..n {
                    let x = a[col][j];
                    a[r][j] -= factor * x;
                }
            }
        }
    }
    det
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| *a * *b).sum())
        .collect()
}

/// Solve `m · x = b` for square invertible `m`.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    invert(m).map(|inv| mat_vec(&inv, b))
}

/// Row-style Hermite normal form of the lattice spanned by `rows`. Returns a
/// basis (nonzero rows only) in echelon form with positive pivots and reduced
/// entries above each pivot.
pub fn hermite_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(width) = rows.first().map(|r| r.len()) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let mut top = 0;
    for col in 0..width {
        // Euclid on column `col` among rows top.. until one nonzero remains.
        loop {
            let nonzero: Vec<usize> = (top..a.len()).filter(|&r| a[r][col] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&r) = nonzero.first() {
                    a.swap(top, r);
                    if a[top][col] < 0 {
                        for x in a[top].iter_mut() {
                            *x = -*x;
                        }
                    }
                }
                break;
            }
            let &min_row = nonzero
                .iter()
                .min_by_key(|&&r| a[r][col].abs())
                .expect("nonempty");
            for &r in &nonzero {
                if r != min_row {
                    let q = Integer::div_floor(&a[r][col], &a[min_row][col]);
                    let pivot_row = a[min_row].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                        *x -= q * p;
                    }
                }
            }
        }
        if top < a.len() && a[top][col] != 0 {
            let pivot = a[top][col];
            let pivot_row = a[top].clone();
            for r in 0..top {
                let q = Integer::div_floor(&a[r][col], &pivot);
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= q * p;
                }
            }
            top += 1;
        }
    }
    a.truncate(top);
    a.retain(|r| r.iter().any(|x| *x != 0));
    a
}

/// Identity matrix over `i64`.
pub fn identity(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let c = to_rational(&[vec![2, -1], vec![-1, 2]]);
        let inv = invert(&c).unwrap();
        assert_eq!(inv, vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]);
        assert_eq!(determinant(&c), q(3, 1));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let c = to_rational(&[vec![1, 2], vec![2, 4]]);
        assert!(invert(&c).is_none());
        assert_eq!(determinant(&c), Rational::zero());
    }

    #[test]
    fn hermite_basis_of_redundant_generators() {
        let basis = hermite_basis(&[vec![2, 0], vec![0, 2], vec![1, 1], vec![1, -1]]);
        assert_eq!(basis, vec![vec![1, 1], vec![0, 2]]);
        let full = hermite_basis(&[vec![1, 0], vec![1, 1]]);
        assert_eq!(full, vec![vec![1, 0], vec![0, 1]]);
    }
}
