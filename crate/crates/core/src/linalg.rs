//! Dense Gauss-Jordan elimination over [`Scalar`].

use crate::scalar::Scalar;

/// Solution set of `A x = b`.
#[derive(Debug, Clone)]
pub(crate) struct LinearSolution {
    /// Free variables set to zero; `None` when the system is inconsistent.
    pub particular: Option<Vec<Scalar>>,
    /// Null-space basis, one vector per free column in increasing column order. Each vector
    /// has a 1 in its free column and 0 in every other free column.
    pub kernel: Vec<Vec<Scalar>>,
    pub rank: usize,
}

/// Row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }
}

/// Reduces `[A | b]` to reduced row echelon form and reads off the solution set.
pub(crate) fn solve(a: &Matrix, b: &[Scalar]) -> LinearSolution {
    assert_eq!(a.rows, b.len());
    let cols = a.cols;
    let mut rows: Vec<Vec<Scalar>> = (0..a.rows)
        .map(|r| {
            let mut row = a.data[r * cols..(r + 1) * cols].to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..cols {
        let rank = pivots.len();
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for x in rows[rank][col..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
    }

    let rank = pivots.len();
    let consistent = rows[rank..].iter().all(|row| row[cols].is_zero());
    let particular = consistent.then(|| {
        let mut x = vec![Scalar::zero(); cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = rows[i][cols].clone();
        }
        x
    });

    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let kernel = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&rows[i][f];
            }
            v
        })
        .collect();

    LinearSolution {
        particular,
        kernel,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_integer(v)
    }

    fn matrix(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().map(|&v| s(v))).collect(),
        }
    }

    fn apply(a: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
        (0..a.rows)
            .map(|r| {
                (0..a.cols).fold(Scalar::zero(), |acc, c| &acc + &(a.get(r, c) * &x[c]))
            })
            .collect()
    }

    #[test]
    fn full_rank_square() {
        let a = matrix(&[&[2, 1], &[1, 3]]);
        let sol = solve(&a, &[s(3), s(5)]);
        assert_eq!(sol.rank, 2);
        assert!(sol.kernel.is_empty());
        assert_eq!(sol.particular.unwrap(), vec![Scalar::from_ratio(4, 5), Scalar::from_ratio(7, 5)]);
    }

    #[test]
    fn rank_deficient_with_kernel() {
        let a = matrix(&[&[1, 2, 3], &[2, 4, 6]]);
        let sol = solve(&a, &[s(1), s(2)]);
        assert_eq!(sol.rank, 1);
        assert_eq!(sol.kernel.len(), 2);
        for k in &sol.kernel {
            assert!(apply(&a, k).iter().all(Scalar::is_zero));
        }
        let x = sol.particular.unwrap();
        assert_eq!(apply(&a, &x), vec![s(1), s(2)]);
    }

    #[test]
    fn inconsistent() {
        let a = matrix(&[&[1, 1], &[1, 1]]);
        let sol = solve(&a, &[s(1), s(2)]);
        assert!(sol.particular.is_none());
        assert_eq!(sol.rank, 1);
    }
}
