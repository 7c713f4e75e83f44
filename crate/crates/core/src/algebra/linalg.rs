//! Dense Gaussian elimination over a field.

use super::field::Field;

/// Row-reduces in place and returns the pivot columns.
fn echelon<F: Field>(field: &F, m: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                let v = field.mul(&factor, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    echelon(field, &mut m).len()
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]);
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for j in c..n {
                let v = field.mul(&factor, &a[c][j]);
                a[i][j] = field.sub(&a[i][j], &v);
            }
        }
    }
    det
}

/// Some solution `x` of `a x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(field, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_and_det_over_q() {
        let m = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(rank(&Rationals, &m), 1);
        assert_eq!(determinant(&Rationals, &m), r(0));
        let m = vec![vec![r(0), r(3)], vec![r(2), r(1)]];
        assert_eq!(determinant(&Rationals, &m), r(-6));
    }

    #[test]
    fn solve_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let a = vec![vec![1, 2], vec![3, 4]];
        let x = solve(&f5, &a, &[1, 0]).unwrap();
        assert_eq!((x[0] + 2 * x[1]) % 5, 1);
        assert_eq!((3 * x[0] + 4 * x[1]) % 5, 0);
        let singular = vec![vec![1, 1], vec![2, 2]];
        assert!(solve(&f5, &singular, &[1, 0]).is_none());
    }
}
