use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid(format!("matrix shape {rows}x{cols} is empty")));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Build from integer rows. All rows must have the same nonzero length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().map(|&x| Rational::from_integer(BigInt::from(x))));
        }
        RatMatrix::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        RatMatrix::new(rows, cols, alloc::vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = RatMatrix::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|x| x.denom().is_one())
    }

    /// Entry `(i, j)` as `i64`, if it is an integer that fits.
    pub fn get_i64(&self, i: usize, j: usize) -> Option<i64> {
        let x = self.get(i, j);
        if x.denom().is_one() {
            x.numer().to_i64()
        } else {
            None
        }
    }

    /// Integer rows, or `NotIntegerMatrix`.
    pub fn integer_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_integer() {
            return Err(Error::NotIntegerMatrix);
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.numer().clone()).collect())
            .collect())
    }

    /// Each row scaled by the lcm of its denominators. Same row space, same
    /// kernel, same column matroid.
    pub fn scaled_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Columns of [`Self::scaled_integer_rows`].
    pub fn scaled_integer_columns(&self) -> Vec<Vec<BigInt>> {
        let rows = self.scaled_integer_rows();
        (0..self.cols)
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        RatMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<RatMatrix> {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                if j >= self.cols {
                    return Err(Error::Invalid(format!("column {j} out of range")));
                }
                entries.push(self.get(i, j).clone());
            }
        }
        RatMatrix::new(self.rows, cols.len(), entries)
    }

    /// `out[i][j] = self[row_order[i]][col_order[j]]`.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> Result<RatMatrix> {
        if !is_permutation(row_order, self.rows) || !is_permutation(col_order, self.cols) {
            return Err(Error::Invalid("not a permutation".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for &i in row_order {
            for &j in col_order {
                entries.push(self.get(i, j).clone());
            }
        }
        RatMatrix::new(self.rows, self.cols, entries)
    }

    /// Place `blocks[r][c]` (all blocks in a block-row share a height, all in
    /// a block-column share a width).
    pub fn from_blocks(blocks: &[Vec<&RatMatrix>]) -> Result<RatMatrix> {
        let heights: Vec<usize> = blocks.iter().map(|b| b[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let (h, w) = (heights.iter().sum(), widths.iter().sum());
        let mut out = RatMatrix::zeros(h, w)?;
        let mut r0 = 0;
        for (bi, brow) in blocks.iter().enumerate() {
            if brow.len() != widths.len() {
                return Err(Error::DimensionMismatch {
                    expected: widths.len(),
                    found: brow.len(),
                });
            }
            let mut c0 = 0;
            for (bj, b) in brow.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::Invalid("inconsistent block shapes".into()));
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `A·v` for an integer vector, exactly.
    pub fn mul_int_vec(&self, v: &[i64]) -> Result<Vec<Rational>> {
        let v: Vec<Rational> = v
            .iter()
            .map(|&x| Rational::from_integer(BigInt::from(x)))
            .collect();
        self.mul_vec(&v)
    }
}

pub(crate) fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    p.iter().all(|&i| i < n && !core::mem::replace(&mut seen[i], true))
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Display for RatMatrix {
    /// The repository-wide matrix text format: `d n` then `d` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
