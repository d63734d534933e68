//! Exact linear algebra over the rationals.
//!
//! Matrices store arbitrary-precision rationals, so rank and kernel are
//! exact: no tolerances anywhere. Reduction picks the first nonzero entry
//! of each column as pivot, which makes the reduced form, and with it the
//! kernel basis, deterministic for a given matrix.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::graded::BasisSpace;

/// Exact scalar type used throughout.
pub type Rational = num_rational::BigRational;

/// Dense matrix over [`Rational`], row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from row slices; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != width {
                return Err(Error::DimensionMismatch {
                    what: "matrix row",
                    expected: width,
                    got: row.len(),
                });
            }
        }
        Ok(RationalMatrix { rows: height, cols: width, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer entries in row-major order; handy in tests.
    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                what: "matrix entries",
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries: entries.iter().map(|&e| Rational::from_integer(e.into())).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &Rational {
        debug_assert!(row < self.rows && col < self.cols);
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        debug_assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col] = value;
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &Rational) {
        let e = &mut self.entries[row * self.cols + col];
        *e += value;
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    let e = self.at(r, c);
                    if !e.is_zero() {
                        acc += e * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns, in order.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // First nonzero entry at or below pivot_row; deterministic.
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.at(pivot_row, col).recip();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.subtract_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one vector per free column, in column order.
    /// The free coordinate of each vector is 1 and the pivot coordinates
    /// are read off the reduced form, so the basis is deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Rational) {
        for c in 0..self.cols {
            let e = &mut self.entries[row * self.cols + c];
            if !e.is_zero() {
                *e *= factor;
            }
        }
    }

    fn subtract_scaled_row(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.cols {
            let s = self.entries[source * self.cols + c].clone();
            if !s.is_zero() {
                let e = &mut self.entries[target * self.cols + c];
                *e -= s * factor;
            }
        }
    }
}

/// A degree-preserving linear map between based spaces: the matrix of the
/// map in the given bases, with shape and homogeneity checked once at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMapData {
    matrix: RationalMatrix,
    domain: BasisSpace,
    codomain: BasisSpace,
}

impl LinearMapData {
    /// Checks `matrix` is `|codomain| x |domain|` and every nonzero entry
    /// connects equal degrees.
    pub fn new(
        matrix: RationalMatrix,
        domain: BasisSpace,
        codomain: BasisSpace,
    ) -> Result<Self, Error> {
        if matrix.rows() != codomain.len() {
            return Err(Error::DimensionMismatch {
                what: "map rows vs codomain",
                expected: codomain.len(),
                got: matrix.rows(),
            });
        }
        if matrix.cols() != domain.len() {
            return Err(Error::DimensionMismatch {
                what: "map columns vs domain",
                expected: domain.len(),
                got: matrix.cols(),
            });
        }
        for row in 0..matrix.rows() {
            for col in 0..matrix.cols() {
                if !matrix.at(row, col).is_zero()
                    && codomain.element(row).degree != domain.element(col).degree
                {
                    return Err(Error::DegreeMismatch { row, col });
                }
            }
        }
        Ok(LinearMapData { matrix, domain, codomain })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn domain(&self) -> &BasisSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &BasisSpace {
        &self.codomain
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.matrix.kernel_basis()
    }

    /// Kernel vectors rendered against the domain labels, dropping zero
    /// coefficients: `(coefficient, label)` pairs per vector.
    pub fn kernel_described(&self) -> Vec<Vec<(Rational, alloc::string::String)>> {
        self.kernel_basis()
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (c, self.domain.element(i).label.to_string()))
                    .collect()
            })
            .collect()
    }
}
