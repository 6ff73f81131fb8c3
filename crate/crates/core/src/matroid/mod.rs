//! Column matroids of rational matrices: rank, bases, activities and the
//! Tutte polynomial computed three independent ways.
//!
//! * [`tutte_census`] sums corank–nullity monomials over all subsets.
//! * [`tutte_activity`] counts bases by internal and external activity.
//! * [`tutte_dc`] runs memoized deletion–contraction and is the fast path.

mod activity;
mod dc;
mod tutte;

pub use activity::{
    bases, external_activity, fundamental_circuits, internal_activity, tutte_activity,
    tutte_census, GroundOrder,
};
pub use dc::tutte_dc;
pub use tutte::TuttePoly;

use alloc::vec::Vec;
use core::cell::OnceCell;

use num_bigint::BigInt;

use crate::exactlin::int::{convert, Int};
use crate::exactlin::{circuits, rank_of_columns, Circuit, RatMatrix};

/// Limits on the exponential routines.
#[derive(Clone, Copy, Debug)]
pub struct MatroidCaps {
    /// Largest ground set for subset or basis exhaustion.
    pub max_ground: usize,
}

impl Default for MatroidCaps {
    fn default() -> Self {
        MatroidCaps { max_ground: 22 }
    }
}

/// The column matroid `M(A)` on ground set `{0, …, n-1}`.
#[derive(Clone, Debug)]
pub struct Matroid {
    matrix: RatMatrix,
    big: Vec<Vec<BigInt>>,
    small: Option<Vec<Vec<i128>>>,
    rank: usize,
    caps: MatroidCaps,
    circuits: OnceCell<Vec<Circuit>>,
}

impl Matroid {
    pub fn new(matrix: &RatMatrix) -> Self {
        Self::with_caps(matrix, MatroidCaps::default())
    }

    pub fn with_caps(matrix: &RatMatrix, caps: MatroidCaps) -> Self {
        let big = matrix.scaled_integer_columns();
        let small = convert::<i128>(&big);
        let rank = crate::exactlin::rank(matrix);
        Matroid {
            matrix: matrix.clone(),
            big,
            small,
            rank,
            caps,
            circuits: OnceCell::new(),
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn ground_size(&self) -> usize {
        self.big.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn caps(&self) -> MatroidCaps {
        self.caps
    }

    /// Run `small` on the `i128` columns when available and fall back to
    /// `big` on overflow.
    pub(crate) fn dispatch<R>(
        &self,
        small: impl FnOnce(&[Vec<i128>]) -> Option<R>,
        big: impl FnOnce(&[Vec<BigInt>]) -> Option<R>,
    ) -> R {
        if let Some(cols) = &self.small {
            if let Some(r) = small(cols) {
                return r;
            }
        }
        big(&self.big).expect("BigInt arithmetic does not overflow")
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of(&self, subset: &[usize]) -> usize {
        fn go<T: Int>(cols: &[Vec<T>], s: &[usize]) -> Option<usize> {
            let sel: Vec<&[T]> = s.iter().map(|&i| cols[i].as_slice()).collect();
            rank_of_columns(&sel)
        }
        self.dispatch(|c| go(c, subset), |c| go(c, subset))
    }

    pub fn is_independent(&self, subset: &[usize]) -> bool {
        self.rank_of(subset) == subset.len()
    }

    pub fn is_basis(&self, subset: &[usize]) -> bool {
        subset.len() == self.rank && self.is_independent(subset)
    }

    /// Circuits of the backing matrix, computed once.
    pub fn circuits(&self) -> &[Circuit] {
        self.circuits.get_or_init(|| circuits(&self.matrix))
    }

    /// Circuit supports, i.e. the minimal dependent sets.
    pub fn circuit_supports(&self) -> Vec<Vec<usize>> {
        self.circuits().iter().map(|c| c.support().to_vec()).collect()
    }

    /// Zero columns.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.ground_size())
            .filter(|&e| self.rank_of(&[e]) == 0)
            .collect()
    }

    /// Elements whose removal drops the rank.
    pub fn coloops(&self) -> Vec<usize> {
        let n = self.ground_size();
        (0..n)
            .filter(|&e| {
                let rest: Vec<usize> = (0..n).filter(|&f| f != e).collect();
                self.rank_of(&rest) < self.rank
            })
            .collect()
    }

    /// `M \ e`, with the remaining elements renumbered in order. Fails on a
    /// one-element matroid, since matrices have at least one column.
    pub fn delete(&self, e: usize) -> crate::Result<Matroid> {
        let keep: Vec<usize> = (0..self.ground_size()).filter(|&f| f != e).collect();
        let m = self.matrix.select_columns(&keep)?;
        Ok(Matroid::with_caps(&m, self.caps))
    }
}

/// Every circuit has exactly two elements. Vacuously true without circuits.
pub fn has_only_two_circuits(m: &Matroid) -> bool {
    m.circuits().iter().all(|c| c.len() == 2)
}
