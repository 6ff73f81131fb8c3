//! Fraction-free Gauss–Jordan elimination over [`Int`].

use alloc::vec::Vec;

use super::int::{cross, divide_content, make_primitive, Int};

/// Reduced row form of an integer matrix.
///
/// `rows[k]` has a positive pivot at column `pivots[k]`, and every pivot
/// column is zero outside its own row. Rows are primitive. The row space is
/// that of the input.
#[derive(Clone, Debug)]
pub(crate) struct Reduced<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<T: Int> Reduced<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Primitive integer basis of the right kernel, one vector per free
    /// column, in increasing free-column order.
    pub fn kernel(&self) -> Option<Vec<Vec<T>>> {
        let mut is_pivot = alloc::vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            // x_f = L, x_{p_k} = -row_k[f] * L / row_k[p_k]
            let mut l = T::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    l = l.lcm(&row[p]);
                }
            }
            let mut v = alloc::vec![T::zero(); self.cols];
            v[f] = l.clone();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    let scale = l.div_floor(&row[p]);
                    v[p] = -row[f].mul_c(&scale)?;
                }
            }
            make_primitive(&mut v);
            basis.push(v);
        }
        Some(basis)
    }
}

/// Eliminate `rows` (each of length `cols`).
pub(crate) fn reduce<T: Int>(mut rows: Vec<Vec<T>>, cols: usize) -> Option<Reduced<T>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        // smallest nonzero magnitude keeps growth down
        let Some(sel) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()))
        else {
            continue;
        };
        rows.swap(r, sel);
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        divide_content(&mut rows[r]);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        let p = pivot_row[c].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let q = row[c].clone();
            let g = p.gcd(&q);
            let (a, b) = (p.div_floor(&g), q.div_floor(&g));
            for j in 0..cols {
                row[j] = if pivot_row[j].is_zero() {
                    row[j].mul_c(&a)?
                } else {
                    cross(&a, &row[j], &b, &pivot_row[j])?
                };
            }
            divide_content(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    // zero rows may survive above r when the loop stopped early
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    Some(Reduced { rows, pivots, cols })
}

/// Rows of the matrix whose columns are `cols` (all of equal length).
pub(crate) fn rows_of<T: Int>(cols: &[&[T]]) -> Vec<Vec<T>> {
    let d = cols.first().map_or(0, |c| c.len());
    (0..d)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

pub(crate) fn rank_of_columns<T: Int>(cols: &[&[T]]) -> Option<usize> {
    if cols.is_empty() {
        return Some(0);
    }
    Some(reduce(rows_of(cols), cols.len())?.rank())
}

/// Bareiss determinant of a square matrix.
pub(crate) fn determinant<T: Int>(mut m: Vec<Vec<T>>) -> Option<T> {
    let n = m.len();
    if n == 0 {
        return Some(T::one());
    }
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Some(T::zero());
            };
            m.swap(k, s);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = cross(&m[i][j], &m[k][k], &m[i][k], &m[k][j])?;
                m[i][j] = num.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Some(if sign { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mat(rows: &[&[i128]]) -> Vec<Vec<i128>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn rank_and_kernel_of_single_row() {
        let red = reduce(mat(&[&[1, 1, 1]]), 3).unwrap();
        assert_eq!(red.rank(), 1);
        let ker = red.kernel().unwrap();
        assert_eq!(ker, vec![vec![1, -1, 0], vec![1, 0, -1]]);
    }

    #[test]
    fn kernel_needs_lcm_scaling() {
        // 2a + 3b = 0
        let red = reduce(mat(&[&[2, 3]]), 2).unwrap();
        assert_eq!(red.kernel().unwrap(), vec![vec![3, -2]]);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(mat(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]])), Some(2));
        assert_eq!(determinant(mat(&[&[0, 1], &[1, 0]])), Some(-1));
        assert_eq!(determinant(mat(&[&[1, 2], &[2, 4]])), Some(0));
    }

    #[test]
    fn reduced_rows_have_clean_pivot_columns() {
        let red = reduce(mat(&[&[2, 4, 1], &[1, 3, 5], &[3, 7, 6]]), 3).unwrap();
        assert_eq!(red.rank(), 2);
        for (k, &p) in red.pivots.iter().enumerate() {
            for (i, row) in red.rows.iter().enumerate() {
                assert_eq!(row[p] != 0, i == k);
            }
        }
    }
}
