use std::collections::HashMap;

use super::snf::IntMatrix;
use crate::complex::{Complex, Simplex};

/// Simplicial boundary `∂_d` from `d`-faces to `(d−1)`-faces.
///
/// Rows and columns are the sorted faces. Dropping the `i`-th vertex of a
/// column simplex contributes `(−1)^i`. For `d = 0` the single row is the
/// empty simplex and every entry is `+1` (the augmentation), which makes the
/// resulting homology reduced.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub rows: Vec<Simplex>,
    pub cols: Vec<Simplex>,
    /// Nonzero entries of each column as `(row, sign)`.
    columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, s)| s as i64)
    }

    pub fn column(&self, col: usize) -> &[(usize, i8)] {
        &self.columns[col]
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.nrows(), self.ncols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m.set(i, j, s as i64);
            }
        }
        m
    }
}

pub fn boundary_matrix(k: &Complex, d: usize) -> BoundaryMatrix {
    let cols = k.faces(d);
    let rows = if d == 0 {
        if cols.is_empty() {
            Vec::new()
        } else {
            vec![Simplex::default()]
        }
    } else {
        k.faces(d - 1)
    };
    boundary_between(rows, cols)
}

pub(crate) fn boundary_between(rows: Vec<Simplex>, cols: Vec<Simplex>) -> BoundaryMatrix {
    let index: HashMap<&Simplex, usize> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let columns = cols
        .iter()
        .map(|s| {
            let mut col: Vec<(usize, i8)> = s
                .vertices()
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let face = s.without(v);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    (index[&face], sign)
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    BoundaryMatrix {
        rows,
        cols,
        columns,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::skeleton;

    #[test]
    fn single_edge() {
        let b = boundary_matrix(&Complex::full_simplex(2), 1);
        assert_eq!(b.rows, vec![Simplex::new([0]), Simplex::new([1])]);
        assert_eq!((b.entry(0, 0), b.entry(1, 0)), (-1, 1));
    }

    #[test]
    fn triangle_column_pattern() {
        let b = boundary_matrix(&Complex::full_simplex(3), 2);
        // rows {0,1}, {0,2}, {1,2}
        let col: Vec<i64> = (0..3).map(|i| b.entry(i, 0)).collect();
        assert_eq!(col, vec![1, -1, 1]);
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let bd = skeleton(&Complex::full_simplex(4), 2);
        let d2 = boundary_matrix(&bd, 2).to_int_matrix();
        let d1 = boundary_matrix(&bd, 1).to_int_matrix();
        let d0 = boundary_matrix(&bd, 0).to_int_matrix();
        assert!(d1.mul(&d2).is_zero());
        assert!(d0.mul(&d1).is_zero());
        assert_eq!((d0.rows(), d0.cols()), (1, 4));
    }
}
