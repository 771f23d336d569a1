use num_bigint::BigInt;
use num_traits::Zero;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count for [`charpoly_exact`] and [`charpoly_signless_exact`].
pub const EXACT_MAX_VERTICES: usize = 12;

/// det(xI − M) by the Faddeev–LeVerrier recursion; every division is exact.
pub fn charpoly_of_matrix(m: &[Vec<BigInt>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = 1.into();
    // mk = M·M_{k−1} + c_{n−k+1} I, starting from M_0 = 0.
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if m[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l][j].is_zero() {
                        next[i][j] += &m[i][l] * &mk[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &m[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    Polynomial::new(coeffs)
}

fn graph_matrix(g: &Graph, with_degrees: bool) -> Result<Vec<Vec<BigInt>>> {
    let n = g.order();
    if n > EXACT_MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "exact characteristic polynomial needs n <= {EXACT_MAX_VERTICES}, got {n}"
        )));
    }
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(if with_degrees { g.degree(i) } else { 0 })
                    } else {
                        BigInt::from(g.has_edge(i, j) as u8)
                    }
                })
                .collect()
        })
        .collect())
}

/// det(xI − A(G)).
pub fn charpoly_exact(g: &Graph) -> Result<Polynomial> {
    Ok(charpoly_of_matrix(&graph_matrix(g, false)?))
}

/// det(xI − Q(G)) with Q = D + A.
pub fn charpoly_signless_exact(g: &Graph) -> Result<Polynomial> {
    Ok(charpoly_of_matrix(&graph_matrix(g, true)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            charpoly_exact(&c5).unwrap(),
            Polynomial::from_i64(&[-2, 5, 0, -5, 0, 1])
        );
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(charpoly_exact(&k3).unwrap(), Polynomial::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(
            charpoly_exact(&Graph::empty(4).unwrap()).unwrap(),
            Polynomial::monomial(4)
        );
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(charpoly_signless_exact(&k2).unwrap(), Polynomial::from_i64(&[0, -2, 1]));
        assert!(charpoly_exact(&Graph::empty(13).unwrap()).is_err());
    }

    #[test]
    fn non_symmetric_matrix() {
        // [[1,2],[3,4]]: x^2 - 5x - 2
        let m = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ];
        assert_eq!(charpoly_of_matrix(&m), Polynomial::from_i64(&[-2, -5, 1]));
    }
}
