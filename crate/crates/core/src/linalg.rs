//! Dense Gaussian elimination over the rationals and over `F_q`.

use crate::cyclotomic::Rational;
use crate::field::{Field, FqElem};

/// Solves the augmented system `m` (each row: `k` coefficients followed by
/// the right-hand side). Returns `None` if inconsistent; free variables are
/// set to zero.
pub fn solve_rational(m: &mut [Vec<Rational>], k: usize) -> Option<Vec<Rational>> {
    let zero = Rational::from_integer(0);
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(piv) = (r..rows).find(|&i| m[i][col] != zero) else { continue };
        m.swap(r, piv);
        let inv = Rational::from_integer(1) / m[r][col];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && m[i][col] != zero {
                let f = m[i][col];
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| row[k] != zero) {
        return None;
    }
    let mut sol = vec![zero; k];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = m[i][k];
    }
    Some(sol)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce_fq(f: &Field, m: &mut Vec<Vec<FqElem>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, piv);
        let inv = f.inv(m[r][col]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, *p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank_fq(f: &Field, rows: &[Vec<FqElem>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce_fq(f, &mut m).len()
}

/// Coefficients `c` with `sum c_i vectors[i] = target`, if any.
pub fn solve_fq(f: &Field, vectors: &[Vec<FqElem>], target: &[FqElem]) -> Option<Vec<FqElem>> {
    let k = vectors.len();
    let n = target.len();
    let mut m: Vec<Vec<FqElem>> = (0..n)
        .map(|i| {
            let mut row: Vec<FqElem> = vectors.iter().map(|v| v[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let pivots = row_reduce_fq(f, &mut m);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut sol = vec![0; k];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][k];
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_detects_inconsistency() {
        let q = |a: i128| Rational::from_integer(a);
        let mut m = vec![vec![q(2), q(1), q(5)], vec![q(1), q(-1), q(1)]];
        assert_eq!(solve_rational(&mut m, 2).unwrap(), vec![q(2), q(1)]);
        let mut bad = vec![vec![q(1), q(1)], vec![q(1), q(2)]];
        assert!(solve_rational(&mut bad, 1).is_none());
    }

    #[test]
    fn finite_field_elimination() {
        let f = Field::new(3, 1).unwrap();
        let rows = vec![vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]];
        assert_eq!(rank_fq(&f, &rows), 2);
        let v = vec![vec![1, 0, 2], vec![0, 1, 1]];
        assert_eq!(solve_fq(&f, &v, &[2, 1, 2]).unwrap(), vec![2, 1]);
        assert!(solve_fq(&f, &v, &[0, 0, 1]).is_none());
    }
}
