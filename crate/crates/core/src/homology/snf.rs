//! Smith normal form over the integers.
//!
//! Elimination runs on checked `i64` arithmetic first and restarts on
//! `BigInt` entries if any intermediate value overflows, so results are
//! always exact. Pivots are the smallest nonzero entry by absolute value.
//! The diagonal produced by elimination is then normalized into invariant
//! factors `d_1 | d_2 | …` by repeated gcd/lcm exchange.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product; panics on shape mismatch or overflow.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        f.debug_struct("IntMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

/// Invariant factors `d_1 | d_2 | … | d_r` of a matrix; `r` is its rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigUint>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

trait Entry: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// Truncating quotient.
    fn quot(&self, d: &Self) -> Self;
    /// `self -= q * x`; `false` on overflow.
    fn sub_mul(&mut self, q: &Self, x: &Self) -> bool;
    fn magnitude(&self) -> BigUint;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quot(&self, d: &Self) -> Self {
        self.wrapping_div(*d)
    }
    fn sub_mul(&mut self, q: &Self, x: &Self) -> bool {
        match q.checked_mul(*x).and_then(|p| self.checked_sub(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn magnitude(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn sub_mul(&mut self, q: &Self, x: &Self) -> bool {
        *self -= q * x;
        true
    }
    fn magnitude(&self) -> BigUint {
        self.abs()
            .to_biguint()
            .expect("absolute value is nonnegative")
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = |conv: fn(i64) -> _| -> Vec<Vec<_>> {
        (0..m.rows)
            .map(|i| (0..m.cols).map(|j| conv(m.get(i, j))).collect())
            .collect()
    };
    let diagonal: Vec<BigUint> = match diagonalize::<i64>(rows(i64::from_i64), m.cols) {
        Some(d) => d.iter().map(Entry::magnitude).collect(),
        None => {
            log::debug!("i64 overflow in elimination, retrying with big integers");
            let big: Vec<Vec<BigInt>> = (0..m.rows)
                .map(|i| (0..m.cols).map(|j| BigInt::from(m.get(i, j))).collect())
                .collect();
            diagonalize::<BigInt>(big, m.cols)
                .expect("big-integer elimination cannot overflow")
                .iter()
                .map(Entry::magnitude)
                .collect()
        }
    };
    SnfResult {
        invariant_factors: normalize_diagonal(diagonal),
    }
}

/// Turns any nonzero diagonal into the divisibility chain of invariant factors.
fn normalize_diagonal(mut d: Vec<BigUint>) -> Vec<BigUint> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

fn smallest_entry<T: Entry>(a: &[Vec<T>], t: usize, ncols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().take(ncols).skip(t) {
            if x.is_zero() {
                continue;
            }
            if x.is_unit() {
                return Some((i, j));
            }
            if best.is_none_or(|(bi, bj)| x.abs_lt(&a[bi][bj])) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn move_to<T>(a: &mut [Vec<T>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

/// Diagonalizes by unimodular row and column operations; returns the nonzero
/// diagonal, or `None` if fixed-width arithmetic overflowed.
fn diagonalize<T: Entry>(mut a: Vec<Vec<T>>, ncols: usize) -> Option<Vec<T>> {
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(ncols) {
        let Some((pi, pj)) = smallest_entry(&a, t, ncols) else {
            break;
        };
        move_to(&mut a, t, pi, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].quot(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let (pivot_row, row) = (&head[t], &mut tail[0]);
                for j in t..ncols {
                    if !pivot_row[j].is_zero() && !row[j].sub_mul(&q, &pivot_row[j]) {
                        return None;
                    }
                }
                clean &= row[t].is_zero();
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quot(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    if !row[t].is_zero() {
                        let x = row[t].clone();
                        if !row[j].sub_mul(&q, &x) {
                            return None;
                        }
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            let mut best = (t, t);
            for i in t + 1..m {
                if !a[i][t].is_zero() && a[i][t].abs_lt(&a[best.0][best.1]) {
                    best = (i, t);
                }
            }
            for j in t + 1..ncols {
                if !a[t][j].is_zero() && a[t][j].abs_lt(&a[best.0][best.1]) {
                    best = (t, j);
                }
            }
            move_to(&mut a, t, best.0, best.1);
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    Some(diag)
}

/// Converts a factor to `u64`; desk-scale complexes never exceed it.
pub(crate) fn factor_to_u64(d: &BigUint) -> u64 {
    d.to_u64().expect("torsion coefficient exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&IntMatrix::from_rows(rows))
            .invariant_factors
            .iter()
            .map(factor_to_u64)
            .collect()
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(smith_normal_form(&IntMatrix::zeros(3, 4)).rank(), 0);
        assert_eq!(
            factors(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 0)).rank(), 0);
    }

    #[test]
    fn coprime_diagonal_merges() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn known_examples() {
        // Presentation of Z/2 x Z/4 x Z.
        assert_eq!(
            factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert_eq!(factors(&[vec![1, 2], vec![3, 4]]), vec![1, 2]);
        assert_eq!(factors(&[vec![6, 4], vec![4, 6]]), vec![2, 10]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 2;
        // Clearing under the pivot 2 produces 2 - (big/2)*big, far outside i64.
        let f = smith_normal_form(&IntMatrix::from_rows(&[vec![2, big], vec![big, 2]]));
        assert_eq!(f.rank(), 2);
        let b = BigUint::from(big as u64);
        assert_eq!(f.invariant_factors[0], BigUint::one());
        assert_eq!(f.invariant_factors[1], &b * &b - BigUint::from(4u8));
    }
}
