//! Fraction-free elimination over `A = Q[x1..xk]`.
//!
//! Bareiss elimination keeps every intermediate entry in `A`; the divisions it performs are
//! exact. Pivots are chosen as the first nonzero entry in column order, so results are
//! deterministic.

use crate::poly::Poly;

/// Reduces `m` in place; returns the rank and the sign of the row permutation used.
fn bareiss(m: &mut [Vec<Poly>], nvars: usize) -> (usize, i32) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = Poly::one(nvars);
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &(&m[rank][col] * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                m[r][c] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][col] = Poly::zero(nvars);
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    (rank, sign)
}

/// Rank over the fraction field of `A`.
pub fn rank(matrix: &[Vec<Poly>], nvars: usize) -> usize {
    let mut m = matrix.to_vec();
    bareiss(&mut m, nvars).0
}

/// Determinant of a square matrix over `A`.
pub fn determinant(matrix: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut m = matrix.to_vec();
    let (rank, sign) = bareiss(&mut m, nvars);
    if rank < n {
        return Poly::zero(nvars);
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// True when `p` is a nonzero constant, i.e. a unit of `A`.
pub fn is_unit(p: &Poly) -> bool {
    p.as_constant().is_some_and(|c| c != num_traits::Zero::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn m(rows: &[&[&str]], k: usize) -> Vec<Vec<Poly>> {
        rows.iter().map(|r| r.iter().map(|s| parse_poly(s, k).unwrap()).collect()).collect()
    }

    #[test]
    fn rational_determinants() {
        assert_eq!(determinant(&m(&[&["1", "2"], &["3", "4"]], 1), 1).to_string(), "-2");
        assert_eq!(determinant(&m(&[&["0", "1"], &["1", "0"]], 1), 1).to_string(), "-1");
        assert_eq!(
            determinant(&m(&[&["2", "0", "0"], &["5", "-1", "0"], &["7", "1/2", "3"]], 1), 1).to_string(),
            "-6"
        );
    }

    #[test]
    fn polynomial_entries() {
        let a = m(&[&["x1", "1"], &["x1^2", "x1"]], 1);
        assert!(determinant(&a, 1).is_zero());
        assert_eq!(rank(&a, 1), 1);
        let b = m(&[&["x1", "1"], &["1", "x1"]], 1);
        assert_eq!(determinant(&b, 1).to_string(), "x1^2 - 1");
        let c = m(&[&["x1", "x2", "0"], &["0", "x1", "x2"], &["x2", "0", "x1"]], 2);
        assert_eq!(determinant(&c, 2).to_string(), "x1^3 + x2^3");
    }

    #[test]
    fn rank_of_rectangular() {
        let a = m(&[&["1", "x1", "0"], &["2", "2*x1", "0"], &["0", "0", "0"]], 1);
        assert_eq!(rank(&a, 1), 1);
        assert_eq!(rank(&[], 1), 0);
        assert!(is_unit(&parse_poly("-3", 1).unwrap()));
        assert!(!is_unit(&parse_poly("x1", 1).unwrap()));
    }
}
