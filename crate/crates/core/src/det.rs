//! Determinants of square matrices with polynomial entries.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::Polynomial;

/// Largest size handled by memoized cofactor expansion. Larger matrices use
/// fraction-free elimination.
pub const COFACTOR_LIMIT: usize = 8;

/// Determinant of a square matrix given by rows.
pub fn determinant(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    match n {
        0 => Polynomial::one(),
        1 => rows[0][0].clone(),
        _ if n <= COFACTOR_LIMIT => cofactor(rows),
        _ => bareiss(rows),
    }
}

/// Laplace expansion along successive rows, memoizing each minor by the set
/// of columns it uses.
fn cofactor(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    let full = (1usize << n) - 1;
    let mut memo: Vec<Option<Polynomial>> = vec![None; full + 1];
    memo[0] = Some(Polynomial::one());
    // masks in order of increasing popcount, so every smaller minor is ready
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let row = n - mask.count_ones() as usize;
        let mut acc = Polynomial::zero();
        let mut position = 0;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &rows[row][col];
            if !entry.is_zero() {
                let minor = memo[mask & !(1 << col)].as_ref().expect("smaller minor computed");
                if !minor.is_zero() {
                    let term = entry * minor;
                    if position % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
            }
            position += 1;
        }
        memo[mask] = Some(acc);
    }
    memo[full].take().expect("full determinant")
}

/// Bareiss fraction-free elimination; every division is exact.
fn bareiss(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    let mut m: Vec<Vec<Polynomial>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn c(v: i64) -> Polynomial {
        Polynomial::constant(int(v))
    }

    #[test]
    fn small_integer_determinants() {
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(determinant(&m), c(-2));
        assert_eq!(determinant(&[]), c(1));
    }

    #[test]
    fn cofactor_agrees_with_bareiss() {
        // a 4x4 matrix in t1, t2 with a zero pivot
        let t1 = Polynomial::t(1);
        let t2 = Polynomial::t(2);
        let rows = vec![
            vec![c(0), t1.clone(), c(2), t2.clone()],
            vec![t2.clone(), c(1), &t1 * &t1, c(0)],
            vec![c(3), &t1 + &t2, c(0), c(1)],
            vec![t1.clone(), c(0), t2.clone(), c(5)],
        ];
        assert_eq!(cofactor(&rows), bareiss(&rows));
    }

    #[test]
    fn vandermonde_product() {
        // det(x_j^{i}) for 3 points is the Vandermonde
        let xs: Vec<Polynomial> = (1..=3).map(Polynomial::x).collect();
        let rows: Vec<Vec<Polynomial>> = (0..3u32)
            .map(|i| xs.iter().map(|x| x.pow(i)).collect())
            .collect();
        let expected = &(&(&xs[1] - &xs[0]) * &(&xs[2] - &xs[0])) * &(&xs[2] - &xs[1]);
        assert_eq!(determinant(&rows), expected);
        assert_eq!(bareiss(&rows), expected);
    }
}
