//! Characteristic polynomials by Berkowitz's algorithm.
//!
//! The algorithm only multiplies and adds matrix entries, so it runs over any
//! commutative ring and never has to choose a pivot.

use super::matrix::Matrix;
use super::poly::Poly;
use super::scalar::{Rational, Scalar};

/// Coefficients of `det(λ·id − m)`, constant term first. The result has
/// length `n + 1` and is monic.
pub fn char_poly_coeffs<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    // `p` holds coefficients of the characteristic polynomial of the leading
    // k×k block, highest degree first.
    let mut p = vec![S::one()];
    for k in 0..n {
        // Block structure of the leading (k+1)×(k+1) submatrix:
        //   [ A  s ]
        //   [ r  a ]
        let a = m[(k, k)].clone();
        let mut column = Vec::with_capacity(k + 2);
        column.push(S::one());
        column.push(-a);
        // r · A^j · s for j = 0..k-1
        let mut v: Vec<S> = (0..k).map(|i| m[(i, k)].clone()).collect();
        for _ in 0..k {
            let rv = (0..k).fold(S::zero(), |acc, i| acc + m[(k, i)].clone() * v[i].clone());
            column.push(-rv);
            v = (0..k)
                .map(|i| (0..k).fold(S::zero(), |acc, j| acc + m[(i, j)].clone() * v[j].clone()))
                .collect();
        }
        // Toeplitz product: new[i] = sum_j column[i-j] * p[j]
        let mut next = vec![S::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if j <= i && i - j < column.len() {
                    *slot = slot.clone() + column[i - j].clone() * pj.clone();
                }
            }
        }
        p = next;
    }
    p.reverse();
    p
}

/// `det(λ·id − m)` as a polynomial.
pub fn char_poly(m: &Matrix<Rational>) -> Poly {
    Poly::from_coeffs(char_poly_coeffs(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::int;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_zero_and_swap() {
        assert_eq!(char_poly(&Matrix::identity(2)), Poly::from_i64(&[1, -2, 1]));
        assert_eq!(char_poly(&Matrix::zeros(3, 3)), Poly::from_i64(&[0, 0, 0, 1]));
        assert_eq!(char_poly(&m(&[&[0, 1], &[1, 0]])), Poly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn three_by_three() {
        // det(λ - A) for A = [[2,1,0],[0,3,4],[5,0,1]]: λ^3 - 6λ^2 + 11λ - 26
        let a = m(&[&[2, 1, 0], &[0, 3, 4], &[5, 0, 1]]);
        assert_eq!(char_poly(&a), Poly::from_i64(&[-26, 11, -6, 1]));
    }
}
