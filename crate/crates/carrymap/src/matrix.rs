//! Dense matrices over [`Rational`]. Everything in this crate is at most
//! ~10x10, so there is no sparsity and no cleverness: row-major storage and
//! schoolbook products, all exact.

use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>, // row-major, length rows * cols
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::domain(format!(
                "matrix needs {} entries for shape {rows}x{cols}, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::domain("ragged rows in matrix literal".into()));
        }
        Ok(RatMatrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn construct(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(entry(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        RatMatrix::construct(size, size, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        assert!(row < self.rows, "row out of range");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.cols.max(1))
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::construct(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Exact matrix product.
    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(RatMatrix::construct(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        }))
    }

    /// Exact matrix power by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, exponent: u64) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = RatMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Row vector times matrix: `(v * M)_j = sum_i v_i M(i, j)`.
    pub fn left_apply(&self, vector: &[Rational]) -> Result<Vec<Rational>> {
        if vector.len() != self.rows {
            return Err(Error::domain(format!(
                "row vector of length {} against {}x{} matrix",
                vector.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.cols)
            .map(|j| (0..self.rows).map(|i| &vector[i] * self.get(i, j)).sum())
            .collect())
    }

    /// Matrix times column vector: `(M * v)_i = sum_j M(i, j) v_j`.
    pub fn apply(&self, vector: &[Rational]) -> Result<Vec<Rational>> {
        if vector.len() != self.cols {
            return Err(Error::domain(format!(
                "column vector of length {} against {}x{} matrix",
                vector.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &vector[j]).sum())
            .collect())
    }

    /// Drop the first and last row and column. Requires at least 3x3.
    pub fn interior(&self) -> Result<RatMatrix> {
        if self.rows < 3 || self.cols < 3 {
            return Err(Error::domain(format!(
                "no interior to take from a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(RatMatrix::construct(self.rows - 2, self.cols - 2, |i, j| {
            self.get(i + 1, j + 1).clone()
        }))
    }

    pub fn scale(&self, factor: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_rational(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.row_iter()
                .map(|row| row.iter().map(format_rational).collect::<Vec<_>>()),
        )
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let rows = raw
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        RatMatrix::from_rows(rows).map_err(|e| D::Error::custom(e.to_string()))
    }
}
