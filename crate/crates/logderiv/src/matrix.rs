//! Dense exact linear algebra over a coefficient field: just enough for
//! graded-piece computations (minimal generators, linear systems of curves).

use crate::field::Field;

pub struct Rref<F: Field> {
    pub rows: Vec<Vec<F::Elem>>,
    pub pivots: Vec<usize>,
}

/// Row-reduce `rows` in place to reduced row echelon form.
pub fn rref<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> Rref<F> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        for j in c..ncols {
            rows[r][j] = field.mul(&rows[r][j], &inv);
        }
        for i in 0..nrows {
            if i != r && !field.is_zero(&rows[i][c]) {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let s = field.mul(&f, &rows[r][j]);
                    rows[i][j] = field.sub(&rows[i][j], &s);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots }
}

pub fn rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    rref(field, rows).pivots.len()
}

/// Basis of the right null space of the matrix (vectors v with A·v = 0).
pub fn nullspace<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>) -> Vec<Vec<F::Elem>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let red = rref(field, rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (ri, &pc) in red.pivots.iter().enumerate() {
            v[pc] = field.neg(&red.rows[ri][free]);
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<F: Field>(field: &F, mat: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    for (i, row) in mat.iter().enumerate() {
        assert_eq!(row.len(), n);
        let mut r = row.clone();
        for j in 0..n {
            r.push(if i == j { field.one() } else { field.zero() });
        }
        aug.push(r);
    }
    let red = rref(field, aug);
    if red.pivots.len() != n || red.pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(red.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Rationals;
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ];
        assert_eq!(rank(&f, m.clone()), 2);
        let ns = nullspace(&f, m.clone());
        assert_eq!(ns.len(), 1);
        // check A v = 0
        for row in &m {
            let mut acc = q(0);
            for (a, v) in row.iter().zip(&ns[0]) {
                acc += a * v;
            }
            assert_eq!(acc, q(0));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Rationals;
        let m = vec![
            vec![q(1), q(0), q(0)],
            vec![q(3), q(1), q(0)],
            vec![q(5), q(0), q(1)],
        ];
        let inv = inverse(&f, &m).unwrap();
        // m * inv = I
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = q(0);
                for k in 0..3 {
                    acc += &m[i][k] * &inv[k][j];
                }
                assert_eq!(acc, if i == j { q(1) } else { q(0) });
            }
        }
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(inverse(&f, &sing).is_none());
    }
}
