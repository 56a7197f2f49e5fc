//! Dense exact matrices over a field handed in as a context object, with
//! Gaussian elimination for rank, reduced row echelon form and null spaces.
//! Pivots are always the first nonzero entry of a column: arithmetic is
//! exact, so no numerical pivoting is involved and results are
//! reproducible entry-for-entry.

use super::cyclotomic::{CycField, CycNumber};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field arithmetic as a context object, so extension fields can carry
/// their modulus around without embedding it in every element.
pub trait FieldOps {
    type Elem: Clone + PartialEq + Send + Sync + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalField;

impl FieldOps for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

impl FieldOps for CycField {
    type Elem = CycNumber;

    fn zero(&self) -> CycNumber {
        CycField::zero(self)
    }

    fn one(&self) -> CycNumber {
        CycField::one(self)
    }

    fn is_zero(&self, a: &CycNumber) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycField::add(self, a, b)
    }

    fn sub(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycField::sub(self, a, b)
    }

    fn mul(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycField::mul(self, a, b)
    }

    fn inv(&self, a: &CycNumber) -> Option<CycNumber> {
        CycField::inv(self, a)
    }
}

/// Dense row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq + Send + Sync + std::fmt::Debug> ExactMatrix<E> {
    pub fn new<F: FieldOps<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> usize {
        self.rows * self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn matmul<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::new(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if field.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(r, c), &field.mul(a, b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref<F: FieldOps<Elem = E>>(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            // first nonzero entry at or below pivot_row
            let Some(src) = (pivot_row..self.rows).find(|&r| !field.is_zero(self.get(r, col))) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..self.cols {
                    self.data.swap(src * self.cols + c, pivot_row * self.cols + c);
                }
            }
            let inv = field.inv(self.get(pivot_row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = field.mul(self.get(pivot_row, c), &inv);
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row || field.is_zero(self.get(r, col)) {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = field.sub(self.get(r, c), &field.mul(&factor, self.get(pivot_row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank<F: FieldOps<Elem = E>>(&self, field: &F) -> usize {
        let mut work = self.clone();
        work.rref(field).len()
    }

    /// Basis of the right null space {v : Av = 0}, one vector per row of
    /// the returned matrix. Rows are the standard free-variable basis from
    /// the reduced echelon form, in increasing free-column order.
    pub fn nullspace<F: FieldOps<Elem = E>>(&self, field: &F) -> Self {
        let mut work = self.clone();
        let pivots = work.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = ExactMatrix::new(field, free.len(), self.cols);
        for (idx, &fc) in free.iter().enumerate() {
            out.set(idx, fc, field.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                let coeff = work.get(prow, fc).clone();
                if !field.is_zero(&coeff) {
                    let neg = field.sub(&field.zero(), &coeff);
                    out.set(idx, pc, neg);
                }
            }
        }
        out
    }

    /// Basis of the left null space {y : yA = 0}, one vector per row.
    pub fn left_nullspace<F: FieldOps<Elem = E>>(&self, field: &F) -> Self {
        self.transpose().nullspace(field)
    }
}
