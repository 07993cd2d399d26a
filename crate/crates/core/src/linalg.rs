//! Small dense matrices over `Q`.

use num_traits::{One, Zero};

use crate::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn from_integer(m: &[Vec<i32>]) -> Matrix {
    m.iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x as i64)).collect())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + row[k] * b[k][j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// Gauss-Jordan inverse; `None` when the matrix is singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| {
            assert_eq!(row.len(), n);
            row.iter().copied().chain(id).collect()
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col];
        m[col].iter_mut().for_each(|x| *x /= p);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                let pivot_row = m[col].clone();
                m[r].iter_mut()
                    .zip(pivot_row)
                    .for_each(|(x, y)| *x -= factor * y);
            }
        }
    }

    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}
