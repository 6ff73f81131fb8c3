//! Exact linear algebra over the rationals: rank, kernels, total
//! unimodularity and circuit enumeration.
//!
//! Nothing here touches floating point. Rational matrices are cleared of
//! denominators row by row and then handled with fraction-free integer
//! elimination.

mod circuits;
mod elim;
pub(crate) mod int;
mod matrix;
mod tu;

pub use circuits::{all_circuits_even, circuits, Circuit, Parity};
pub use matrix::{RatMatrix, Rational};
pub use tu::{is_totally_unimodular, is_totally_unimodular_by_minors, TuOptions};

pub(crate) use elim::{determinant, rank_of_columns, reduce, rows_of};
pub(crate) use matrix::is_permutation;

use alloc::vec::Vec;
use num_bigint::BigInt;

use int::{to_big_vec, with_fallback};

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    let rows = m.scaled_integer_rows();
    let cols = m.cols();
    with_fallback!(&rows, |r: T| Some(reduce::<T>(r, cols)?.rank()))
}

/// Primitive integer vectors spanning the rational kernel of `m`. The first
/// nonzero entry of each vector is positive.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    let rows = m.scaled_integer_rows();
    let cols = m.cols();
    with_fallback!(&rows, |r: T| {
        let ker = reduce::<T>(r, cols)?.kernel()?;
        Some(ker.iter().map(|v| to_big_vec(v)).collect::<Vec<_>>())
    })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::RatMatrix;
    use alloc::vec::Vec;

    /// The 4×5 totally unimodular matrix with three circuits (sizes 4, 3, 3)
    /// and eight bases.
    pub fn five_column_example() -> RatMatrix {
        RatMatrix::from_rows(&[
            [-1, 0, 0, 1, 1],
            [1, 1, 0, 0, 0],
            [0, -1, 1, 0, -1],
            [0, 0, -1, -1, 0],
        ])
        .unwrap()
    }

    /// Unsigned incidence matrix of `K(m1, m2)`: left vertices first, edge
    /// `(i, j)` at column `i*m2 + j`.
    pub fn complete_bipartite(m1: usize, m2: usize) -> RatMatrix {
        let mut rows: Vec<Vec<i64>> = alloc::vec![alloc::vec![0; m1 * m2]; m1 + m2];
        for i in 0..m1 {
            for j in 0..m2 {
                rows[i][i * m2 + j] = 1;
                rows[m1 + j][i * m2 + j] = 1;
            }
        }
        RatMatrix::from_rows(&rows).unwrap()
    }

    pub fn triangle() -> RatMatrix {
        RatMatrix::from_rows(&[[1, 0, 1], [1, 1, 0], [0, 1, 1]]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use alloc::vec;
    use num_rational::BigRational;
    use num_traits::Zero;

    #[test]
    fn ranks() {
        assert_eq!(rank(&five_column_example()), 3);
        assert_eq!(rank(&RatMatrix::identity(3).unwrap()), 3);
        // |V| - #components for bipartite K(2,3)
        assert_eq!(rank(&complete_bipartite(2, 3)), 4);
    }

    #[test]
    fn rank_of_fractional_matrix() {
        let half = BigRational::new(1.into(), 2.into());
        let m = RatMatrix::new(
            2,
            2,
            vec![half.clone(), BigRational::from_integer(1.into()), half, BigRational::from_integer(1.into())],
        )
        .unwrap();
        assert_eq!(rank(&m), 1);
        let ker = kernel_basis(&m);
        assert_eq!(ker, vec![vec![BigInt::from(2), BigInt::from(-1)]]);
    }

    #[test]
    fn kernel_of_ones_row() {
        let m = RatMatrix::from_rows(&[[1, 1, 1]]).unwrap();
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 2);
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(ker, vec![big(&[1, -1, 0]), big(&[1, 0, -1])]);
    }

    #[test]
    fn kernel_of_full_column_rank_is_empty() {
        assert!(kernel_basis(&RatMatrix::identity(4).unwrap()).is_empty());
        assert!(kernel_basis(&triangle()).is_empty());
    }

    #[test]
    fn kernel_of_example_contains_listed_circuit() {
        let a = five_column_example();
        let ker = kernel_basis(&a);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let v64: Vec<i64> = v.iter().map(|x| i64::try_from(x).unwrap()).collect();
            assert!(a.mul_int_vec(&v64).unwrap().iter().all(Zero::is_zero));
        }
        // (-1,1,1,-1,0) lies in the span: solve against the two basis vectors
        let target = [-1i64, 1, 1, -1, 0];
        let span = RatMatrix::from_rows(&[
            ker[0].iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>(),
            ker[1].iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>(),
            target.to_vec(),
        ])
        .unwrap();
        assert_eq!(rank(&span), 2);
    }
}
