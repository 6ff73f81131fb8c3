use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::int::{cross, divide_content, make_primitive, with_fallback, Int};
use super::RatMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A primitive integer kernel vector of inclusion-minimal support, with its
/// first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    support: Vec<usize>,
    v: Vec<i64>,
}

impl Circuit {
    /// Wrap a kernel vector, normalizing its sign and content. Returns `None`
    /// for the zero vector. Minimality is not checked.
    pub fn from_vector(mut v: Vec<i64>) -> Option<Self> {
        let mut big: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        make_primitive(&mut big);
        for (dst, src) in v.iter_mut().zip(&big) {
            *dst = *src as i64;
        }
        let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
        if support.is_empty() {
            None
        } else {
            Some(Circuit { support, v })
        }
    }

    pub fn vector(&self) -> &[i64] {
        &self.v
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Size of the support.
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn parity(&self) -> Parity {
        if self.support.len() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Indices with positive entries.
    pub fn positive(&self) -> Vec<usize> {
        self.support.iter().copied().filter(|&i| self.v[i] > 0).collect()
    }

    /// Indices with negative entries.
    pub fn negative(&self) -> Vec<usize> {
        self.support.iter().copied().filter(|&i| self.v[i] < 0).collect()
    }

    /// All entries in `{-1, 0, 1}`.
    pub fn is_unit(&self) -> bool {
        self.v.iter().all(|x| x.abs() <= 1)
    }
}

/// All circuits of `m` up to sign, sorted by support and then by vector.
///
/// Walks the independent column sets in increasing index order. Every
/// circuit `C` is found exactly once, as `I + max(C)` with `I = C - max(C)`
/// independent, so supports never exceed `rank + 1`.
///
/// # Panics
/// If a circuit entry does not fit in `i64`.
pub fn circuits(m: &RatMatrix) -> Vec<Circuit> {
    let cols = m.scaled_integer_columns();
    let mut out = with_fallback!(&cols, |c: T| enumerate::<T>(&c));
    out.sort();
    out
}

struct Echelon<T> {
    vec: Vec<T>,
    coeffs: Vec<T>,
    pivot: usize,
}

fn enumerate<T: Int>(cols: &[Vec<T>]) -> Option<Vec<Circuit>> {
    let n = cols.len();
    let mut found = Vec::new();
    let mut basis: Vec<Echelon<T>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    dfs(cols, n, 0, &mut basis, &mut chosen, &mut found)?;
    Some(found)
}

fn dfs<T: Int>(
    cols: &[Vec<T>],
    n: usize,
    start: usize,
    basis: &mut Vec<Echelon<T>>,
    chosen: &mut Vec<usize>,
    found: &mut Vec<Circuit>,
) -> Option<()> {
    for j in start..n {
        let mut vec = cols[j].clone();
        let mut coeffs = alloc::vec![T::zero(); n];
        coeffs[j] = T::one();
        for b in basis.iter() {
            let x = vec[b.pivot].clone();
            if x.is_zero() {
                continue;
            }
            let p = &b.vec[b.pivot];
            for (dst, src) in vec.iter_mut().zip(&b.vec) {
                *dst = cross(p, dst, &x, src)?;
            }
            for (dst, src) in coeffs.iter_mut().zip(&b.coeffs) {
                *dst = cross(p, dst, &x, src)?;
            }
            let mut joint: Vec<T> = vec.iter().chain(coeffs.iter()).cloned().collect();
            divide_content(&mut joint);
            let (a, c) = joint.split_at(vec.len());
            vec.clone_from_slice(a);
            coeffs.clone_from_slice(c);
        }
        match vec.iter().position(|x| !x.is_zero()) {
            None => {
                // dependent: coeffs is the unique relation on chosen + {j}
                if chosen.iter().all(|&s| !coeffs[s].is_zero()) {
                    make_primitive(&mut coeffs);
                    let v: Vec<i64> = coeffs
                        .iter()
                        .map(|x| x.to_big().to_i64().expect("circuit entry fits in i64"))
                        .collect();
                    found.push(Circuit::from_vector(v).expect("relation is nonzero"));
                }
            }
            Some(pivot) => {
                basis.push(Echelon { vec, coeffs, pivot });
                chosen.push(j);
                dfs(cols, n, j + 1, basis, chosen, found)?;
                chosen.pop();
                basis.pop();
            }
        }
    }
    Some(())
}

/// Every circuit has even support size. Vacuously true for no circuits.
pub fn all_circuits_even(circs: &[Circuit]) -> bool {
    circs.iter().all(|c| c.parity() == Parity::Even)
}
