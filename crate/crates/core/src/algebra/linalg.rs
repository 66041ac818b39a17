//! Exact linear algebra: rational row reduction and fraction-free
//! (Bareiss) determinants over the polynomial ring.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use crate::error::Result;

/// Reduced row echelon form of a rational matrix.
/// Returns the reduced rows (only the `rank` nonzero ones) and pivot columns.
pub fn rref(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&k| !m[k][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for c in m[r].iter_mut() {
            *c *= &inv;
        }
        for k in 0..m.len() {
            if k != r && !m[k][col].is_zero() {
                let f = m[k][col].clone();
                for c in 0..ncols {
                    let delta = &f * &m[r][c];
                    m[k][c] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the right nullspace `{v : M v = 0}`, one vector per free column,
/// each with a 1 in its free coordinate.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> (usize, Vec<Vec<BigRational>>) {
    let (red, pivots) = rref(rows, ncols);
    let rank = pivots.len();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect();
    (rank, basis)
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Determinant of a square polynomial matrix by Bareiss elimination.
/// Every intermediate division is exact by Sylvester's identity.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut sign_flip = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.divide_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let rows = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        let (rank, basis) = nullspace(&rows, 3);
        assert_eq!(rank, 2);
        assert_eq!(basis, vec![vec![rat(-1, 1), rat(-1, 1), rat(1, 1)]]);
    }

    #[test]
    fn vandermonde_determinant() {
        let m = vec![
            vec![p("1"), p("x1"), p("x1^2")],
            vec![p("1"), p("x2"), p("x2^2")],
            vec![p("1"), p("x3"), p("x3^2")],
        ];
        let expected = p("x2 - x1").mul(&p("x3 - x1")).mul(&p("x3 - x2"));
        assert_eq!(bareiss_det(m).unwrap(), expected);
    }

    #[test]
    fn pivoting_and_singular() {
        let m = vec![vec![p("0"), p("a1")], vec![p("b1"), p("1")]];
        assert_eq!(bareiss_det(m).unwrap(), p("-a1*b1"));
        let s = vec![vec![p("x1"), p("x1")], vec![p("y1"), p("y1")]];
        assert!(bareiss_det(s).unwrap().is_zero());
    }
}
