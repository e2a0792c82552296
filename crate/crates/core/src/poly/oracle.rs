//! Characteristic polynomial straight from the adjacency matrix.
//!
//! `det(tI - A)` is computed exactly at the integer points `t = 0..=N` with
//! fraction-free (Bareiss) elimination, then the unique degree-`N` polynomial
//! through those values is recovered by Newton interpolation. Nothing here
//! looks at the creation sequence or the block structure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::seq::AdjacencyMatrix;

/// Determinant of an integer matrix by Bareiss elimination with row pivoting.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Exact `det(tI - A)`.
pub fn shifted_determinant(a: &AdjacencyMatrix, t: &BigInt) -> BigInt {
    let n = a.order();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = BigInt::from(a.get(i, j));
                    if i == j {
                        t - e
                    } else {
                        -e
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(m)
}

/// Monic `det(xI - A)` with exact integer coefficients.
pub fn charpoly_oracle(a: &AdjacencyMatrix) -> Result<IntPolynomial> {
    let n = a.order();
    let values: Vec<BigInt> = (0..=n)
        .map(|t| shifted_determinant(a, &BigInt::from(t)))
        .collect();
    // Newton divided differences on the nodes 0..=n. With unit spacing the k-th
    // divided difference is the k-th forward difference over k!.
    let mut diffs = values;
    let mut newton = Vec::with_capacity(n + 1);
    let mut factorial = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        let (q, r) = diffs[0].div_rem(&factorial);
        if !r.is_zero() {
            return Err(Error::Internal("non-integral Newton coefficient".into()));
        }
        newton.push(q);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // sum_k c_k * x (x-1) ... (x-k+1), expanded by Horner from the top.
    let mut acc = IntPolynomial::zero();
    for k in (0..=n).rev() {
        acc = &(&acc * &IntPolynomial::x_plus(-(k as i64)))
            + &IntPolynomial::constant(newton[k].clone());
    }
    if !acc.is_monic() || acc.degree() != Some(n) {
        return Err(Error::Internal(
            "oracle polynomial is not monic of full degree".into(),
        ));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{adjacency_matrix, parse_sequence};

    fn oracle(text: &str) -> IntPolynomial {
        charpoly_oracle(&adjacency_matrix(&parse_sequence(text).unwrap())).unwrap()
    }

    #[test]
    fn triangle_and_single_vertex() {
        assert_eq!(oracle("011"), IntPolynomial::from_i64s(&[-2, -3, 0, 1]));
        assert_eq!(oracle("0"), IntPolynomial::x());
        assert_eq!(oracle("01"), IntPolynomial::from_i64s(&[-1, 0, 1]));
        // P3: x^3 - 2x
        assert_eq!(oracle("001"), IntPolynomial::from_i64s(&[0, -2, 0, 1]));
    }

    #[test]
    fn ten_vertex_graph_has_expected_trivial_factors() {
        let p = oracle("(0^2 1^3 0^3 1^2)");
        assert_eq!(p.degree(), Some(10));
        assert!(p.is_monic());
        let (rest, k0) = p.divide_out(&IntPolynomial::x()).unwrap();
        let (rest, k1) = rest.divide_out(&IntPolynomial::x_plus(1)).unwrap();
        assert_eq!((k0, k1), (3, 3));
        assert_eq!(rest.degree(), Some(4));
    }

    #[test]
    fn bareiss_handles_pivoting() {
        let m = |rows: &[&[i64]]| {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect()
        };
        assert_eq!(
            bareiss_determinant(m(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            bareiss_determinant(m(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]])),
            BigInt::from(-3)
        );
        assert_eq!(bareiss_determinant(m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn rejects_invalid_matrices() {
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![0, 1], vec![1]]),
            Err(Error::NonSquare)
        );
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![0, 1], vec![0, 0]]),
            Err(Error::NotAdjacency)
        );
        assert_eq!(
            AdjacencyMatrix::from_rows(&[vec![1]]),
            Err(Error::NotAdjacency)
        );
        // C4 is not a threshold graph but the oracle handles any simple graph: x^4 - 4x^2
        let c4 = AdjacencyMatrix::from_rows(&[
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ])
        .unwrap();
        assert_eq!(
            charpoly_oracle(&c4).unwrap(),
            IntPolynomial::from_i64s(&[0, 0, -4, 0, 1])
        );
    }
}
