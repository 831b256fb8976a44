//! Dense exact matrices over the session field.
//!
//! Conventions used throughout the crate: a linear map `f: U -> V` is stored
//! as the `dim U x dim V` matrix acting on row vectors, `y = x * F`. The
//! matrix of a composite `U -> V -> W` is then the ordinary product `F * G`.
//! This matches the row-by-source block layout of all differential matrices
//! in this library.
//!
//! Rank over the rationals goes through fraction-free (Bareiss) elimination
//! on a denominator-cleared integer copy; structural outputs (kernels,
//! solutions, echelon forms) use exact rational elimination.

use crate::scalar::{Field, Scalar};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, field, entries: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, field, entries }
    }

    pub fn from_i64_rows(field: Field, data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        Mat::from_fn(field, rows, cols, |i, j| Scalar::from_i64(field, data[i][j]))
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).neg())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Writes `block` into `self` with upper-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn row(&self, i: usize) -> Mat {
        Mat::from_fn(self.field, 1, self.cols, |_, j| self.get(i, j).clone())
    }

    pub fn vstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let field = blocks[0].field;
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut r = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            out.set_block(r, 0, b);
            r += b.rows;
        }
        out
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let piv = (r..m.rows).find(|&i| !m.get(i, c).is_zero());
            let Some(piv) = piv else { continue };
            if piv != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(piv, j).clone();
                    m.set(r, j, b);
                    m.set(piv, j, a);
                }
            }
            let inv = m.get(r, c).inv();
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank. Over the rationals this clears denominators and runs
    /// fraction-free Bareiss elimination on integers; over a prime field it
    /// falls back to plain elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match self.field {
            Field::Prime(_) => self.rref().1.len(),
            Field::Rationals => {
                let m = self.to_integer_rows();
                bareiss_rank(m, self.rows, self.cols)
            }
        }
    }

    fn to_integer_rows(&self) -> Vec<BigInt> {
        // scale each row by the lcm of its denominators; rank is unchanged
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            let mut lcm = BigInt::from(1);
            for j in 0..self.cols {
                let r = self.get(i, j).as_rational().expect("rational matrix");
                let d = r.denom();
                let g = num_integer::Integer::gcd(&lcm, d);
                lcm = &lcm / g * d;
            }
            for j in 0..self.cols {
                let r = self.get(i, j).as_rational().unwrap();
                out.push(r.numer() * (&lcm / r.denom()));
            }
        }
        out
    }

    /// Basis of the right null space `{x : self * x = 0}` as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{x : x * self = 0}`, as the rows of the
    /// returned matrix.
    pub fn left_kernel(&self) -> Mat {
        let cols = self.transpose().kernel_basis();
        let mut out = Mat::zero(self.field, cols.len(), self.rows);
        for (i, v) in cols.iter().enumerate() {
            for (j, s) in v.iter().enumerate() {
                out.set(i, j, s.clone());
            }
        }
        out
    }

    /// Solves `self * x = b` in the column convention of the public API.
    /// Returns the solution together with the dimension of the solution space.
    pub fn solve(&self, b: &Mat) -> Option<(Mat, usize)> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        // eliminate on the augmented matrix
        let aug = Mat::from_fn(self.field, self.rows, self.cols + b.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { b.get(i, j - self.cols).clone() }
        });
        let (r, pivots) = aug.rref();
        // inconsistent if a pivot lands in the augmented block
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        let sol_dim = self.cols - pivots.len();
        Some((x, sol_dim))
    }

    /// Solves `x * self = b` in the row convention used internally.
    pub fn solve_left(&self, b: &Mat) -> Option<Mat> {
        let (xt, _) = self.transpose().solve(&b.transpose())?;
        Some(xt.transpose())
    }

    /// The row space of `self` reduced to RREF, zero rows dropped.
    pub fn row_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        Mat::from_fn(self.field, pivots.len(), self.cols, |i, j| r.get(i, j).clone())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Mat::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one(self.field)
            } else {
                Scalar::zero(self.field)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero(self.field);
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn bareiss_rank(mut m: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * cols + j].clone();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let piv = (r..rows).find(|&i| !at(&m, i, c).is_zero());
        let Some(piv) = piv else { continue };
        if piv != r {
            for j in 0..cols {
                m.swap(r * cols + j, piv * cols + j);
            }
        }
        let pivot = at(&m, r, c);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let v = (&pivot * at(&m, i, j) - at(&m, i, c) * at(&m, r, j)) / &prev;
                m[i * cols + j] = v;
            }
            m[i * cols + c] = BigInt::zero();
        }
        prev = pivot.abs();
        rank += 1;
        r += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rank_examples() {
        // 0x0 -> 0; identity 3 -> 3; all-ones 2x2 -> 1
        assert_eq!(Mat::zero(q(), 0, 0).rank(), 0);
        assert_eq!(Mat::identity(q(), 3).rank(), 3);
        assert_eq!(Mat::from_i64_rows(q(), &[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(q(), 2).kernel_basis().is_empty());
        assert_eq!(Mat::zero(q(), 2, 3).kernel_basis().len(), 3);
        let k = Mat::from_i64_rows(q(), &[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(k[0][0], k[0][1].neg());
    }

    #[test]
    fn solve_examples() {
        let b = Mat::from_i64_rows(q(), &[&[4], &[7]]);
        let (x, d) = Mat::identity(q(), 2).solve(&b).unwrap();
        assert_eq!(x, b);
        assert_eq!(d, 0);

        let a = Mat::zero(q(), 2, 2);
        let b = Mat::from_i64_rows(q(), &[&[1], &[0]]);
        assert!(a.solve(&b).is_none());

        let a = Mat::from_i64_rows(q(), &[&[1, 0], &[0, 0]]);
        let (x, d) = a.solve(&b).unwrap();
        assert_eq!(x.get(0, 0), &Scalar::from_i64(q(), 1));
        assert_eq!(d, 1);
    }

    #[test]
    fn rank_plus_kernel_is_cols() {
        let m = Mat::from_i64_rows(q(), &[&[2, 4, 6], &[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn rank_agrees_across_fields() {
        // small integer matrices with p greater than all pivots encountered
        let data: [&[i64]; 3] = [&[2, 4, 6], &[1, 2, 3], &[0, 1, 1]];
        let mq = Mat::from_i64_rows(Field::Rationals, &data);
        let mp = Mat::from_i64_rows(Field::Prime(101), &data);
        assert_eq!(mq.rank(), mp.rank());
        assert_eq!(mq.kernel_basis().len(), mp.kernel_basis().len());
    }

    #[test]
    fn solve_recomputes_exactly() {
        let a = Mat::from_i64_rows(q(), &[&[1, 2], &[3, 5]]);
        let b = Mat::from_i64_rows(q(), &[&[1], &[2]]);
        let (x, _) = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Mat::from_i64_rows(q(), &[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(q(), 2));
    }
}
