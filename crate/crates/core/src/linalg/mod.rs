//! Exact dense linear algebra over any [`Scalar`].

mod inner;
mod matrix;
mod subspace;

pub use inner::{gram_schmidt_by_degree, orthogonal_complement, orthogonal_projection, InnerProduct};
pub use matrix::{
    dot, is_zero_vec, unit_vector, vec_add, vec_axpy, vec_scale, vec_sub, vector_from_json, vector_to_json, Matrix,
    Vector,
};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<S: Scalar> {
    pub matrix: Matrix<S>,
    pub rank: usize,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form.
///
/// Pivot choice: leftmost column with a nonzero entry at or below the current row,
/// first such row. Pivot rows are scaled to a leading one.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> Echelon<S> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].try_inv().expect("pivot is nonzero");
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = a[(r, j)].clone() * &inv;
            }
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    let delta = factor.clone() * &a[(r, j)];
                    a[(i, j)] = a[(i, j)].clone() - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { matrix: a, rank: r, pivots }
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    rref(m).rank
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace_vectors<S: Scalar>(m: &Matrix<S>) -> Vec<Vector<S>> {
    let ech = rref(m);
    let cols = m.cols();
    let mut free = vec![true; cols];
    for &p in &ech.pivots {
        free[p] = false;
    }
    (0..cols)
        .filter(|&f| free[f])
        .map(|f| {
            let mut x = vec![S::zero(); cols];
            x[f] = S::one();
            for (row, &p) in ech.pivots.iter().enumerate() {
                x[p] = -ech.matrix[(row, f)].clone();
            }
            x
        })
        .collect()
}

pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::from_vectors(m.cols(), nullspace_vectors(m)).expect("nullspace vectors have ambient length")
}

/// Some exact solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve_linear<S: Scalar>(m: &Matrix<S>, b: &[S]) -> Result<Option<Vector<S>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            m.rows()
        )));
    }
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let ech = rref(&aug);
    if ech.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![S::zero(); cols];
    for (row, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.matrix[(row, cols)].clone();
    }
    Ok(Some(x))
}

/// Exact inverse, or `None` for a singular matrix.
pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Result<Option<Matrix<S>>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, &Matrix::identity(n));
    let ech = rref(&aug);
    if !ech.pivots.iter().copied().take(n).eq(0..n) {
        return Ok(None);
    }
    Ok(Some(ech.matrix.block(0, n, n, n)))
}

/// Determinant by exact elimination.
pub fn determinant<S: Scalar>(m: &Matrix<S>) -> Result<S> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut det = S::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(S::zero());
        };
        if p != c {
            for j in 0..n {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = tmp;
            }
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det = det * &pivot;
        let inv = pivot.try_inv()?;
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone() * &inv;
            for j in c..n {
                let delta = factor.clone() * &a[(c, j)];
                a[(i, j)] = a[(i, j)].clone() - &delta;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::scalar::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), cols).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::<Rational>::identity(3);
        let e = rref(&id);
        assert_eq!((e.matrix, e.rank, e.pivots), (id, 3, vec![0, 1, 2]));

        let z = Matrix::<Rational>::zeros(2, 2);
        let e = rref(&z);
        assert_eq!((e.matrix, e.rank), (z, 0));

        let e = rref(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(e.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::<Rational>::identity(4)).dim(), 0);
        let ns = nullspace(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(ns.basis(), &[vec![int(1), crate::exactnum::rat(-1, 2)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), int(-1)];
        assert_eq!(solve_linear(&Matrix::identity(2), &b).unwrap(), Some(b));
        assert_eq!(solve_linear(&m(&[&[1, 1], &[2, 2]]), &[int(1), int(3)]).unwrap(), None);
        assert_eq!(solve_linear(&m(&[&[2, 0], &[0, 3]]), &[int(4), int(9)]).unwrap(), Some(vec![int(2), int(3)]));
        assert!(matches!(solve_linear(&m(&[&[2, 0], &[0, 3]]), &[int(4)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&m(&[&[2, 1], &[7, 4]])).unwrap(), int(1));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(), int(0));
    }

    #[test]
    fn inverses() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&a).unwrap().unwrap();
        assert_eq!(inv, m(&[&[4, -1], &[-7, 2]]));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])).unwrap(), None);
    }
}
