//! Exact dense linear algebra over a [`Field`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::scalar::{Field, Scalar};

/// A dense matrix with entries in one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Panics when the rows are ragged or mix fields.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let data: Vec<Scalar> = rows
            .into_iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix rows");
                r
            })
            .collect();
        assert!(data.iter().all(|c| c.field() == field), "matrix entries from another field");
        Matrix { rows: n, cols, field, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        (0..k).fold(Matrix::identity(self.rows, self.field), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows, self.field) && self.rows == self.cols
    }
}

/// Rows separated by newlines, entries by single spaces.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    Infeasible,
    /// Consistent with `free` unknowns left undetermined.
    Underdetermined { rank: usize, free: Vec<usize> },
}

/// Scales a rational row by the lcm of its denominators so every entry is
/// an integer.
fn clear_denominators(row: &mut [Scalar]) {
    let mut lcm = BigInt::one();
    for c in row.iter() {
        if let Scalar::Rational(r) = c {
            lcm = lcm.lcm(r.denom());
        }
    }
    if lcm.is_one() {
        return;
    }
    let factor = Scalar::Rational(BigRational::from_integer(lcm));
    for c in row.iter_mut() {
        *c = c.mul(&factor);
    }
}

/// Solves `A x = b` by fraction-free (Bareiss) elimination.
///
/// Rational rows are first scaled to integers; every intermediate entry is
/// then a minor of the scaled system, so divisions are exact. Columns
/// without a pivot are skipped and reported as free.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Solution {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Scalar> = (0..cols).map(|c| a.get(r, c).clone()).collect();
            row.push(b[r].clone());
            clear_denominators(&mut row);
            row
        })
        .collect();

    let field = a.field;
    let mut prev = field.one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        let (upper, lower) = m.split_at_mut(r + 1);
        let pivot_row = &upper[r];
        for row in lower.iter_mut() {
            let lead = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row).skip(c + 1) {
                *x = pivot.mul(x).sub(&lead.mul(y)).div(&prev).expect("previous pivot is nonzero");
            }
            row[c] = field.zero();
        }
        // Rows above the pivot row are left as they are; back substitution
        // below only needs the echelon form.
        prev = pivot;
        pivots.push(c);
        r += 1;
    }

    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Solution::Infeasible;
    }
    if pivots.len() < cols {
        let free = (0..cols).filter(|c| !pivots.contains(c)).collect();
        return Solution::Underdetermined { rank: pivots.len(), free };
    }
    let mut x = vec![field.zero(); cols];
    for (i, &c) in pivots.iter().enumerate().rev() {
        let mut acc = m[i][cols].clone();
        for j in (c + 1)..cols {
            acc = acc.sub(&m[i][j].mul(&x[j]));
        }
        x[c] = acc.div(&m[i][c]).expect("pivot is nonzero");
    }
    Solution::Unique(x)
}
