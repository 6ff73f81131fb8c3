//! Total unimodularity by exhaustive search.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::elim::determinant;
use super::RatMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct TuOptions {
    /// Largest number of vectors (the smaller of rows and columns) that
    /// the exhaustive search will enumerate subsets of.
    pub max_dim: usize,
}

impl Default for TuOptions {
    fn default() -> Self {
        TuOptions { max_dim: 18 }
    }
}

fn unit_entries(m: &RatMatrix) -> Result<Option<Vec<Vec<i8>>>> {
    let rows = m.integer_rows()?;
    let mut out = Vec::with_capacity(rows.len());
    for r in &rows {
        let mut row = Vec::with_capacity(r.len());
        for x in r {
            match x.to_i8() {
                Some(v) if (-1..=1).contains(&v) => row.push(v),
                _ => return Ok(None),
            }
        }
        out.push(row);
    }
    Ok(Some(out))
}

/// Every square minor of `m` lies in `{-1, 0, 1}`.
///
/// After the entry check, each subset of columns (or of rows, whichever is
/// fewer) is tested for an equitable signing: signs `±1` such that the
/// signed sum has all coordinates in `{-1, 0, 1}`. A matrix is totally
/// unimodular exactly when every subset admits one. The search exits at the
/// first subset without a signing.
pub fn is_totally_unimodular(m: &RatMatrix, opts: TuOptions) -> Result<bool> {
    let Some(rows) = unit_entries(m)? else {
        return Ok(false);
    };
    let (r, c) = (m.rows(), m.cols());
    // vectors to be signed: columns when there are fewer of them
    let vectors: Vec<Vec<i8>> = if c <= r {
        (0..c).map(|j| rows.iter().map(|row| row[j]).collect()).collect()
    } else {
        rows
    };
    let k = vectors.len();
    if k > opts.max_dim {
        return Err(Error::cap("total-unimodularity search", k, opts.max_dim));
    }
    let len = vectors[0].len();
    let mut chosen: Vec<&[i8]> = Vec::with_capacity(k);
    let mut rem: Vec<Vec<i8>> = Vec::with_capacity(k + 1);
    let mut partial = alloc::vec![0i8; len];
    for mask in 1u32..(1u32 << k) {
        chosen.clear();
        chosen.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| vectors[i].as_slice()));
        // rem[t][row] = sum over s >= t of |chosen[s][row]|
        rem.clear();
        rem.resize(chosen.len() + 1, alloc::vec![0i8; len]);
        for t in (0..chosen.len()).rev() {
            for row in 0..len {
                rem[t][row] = rem[t + 1][row] + chosen[t][row].abs();
            }
        }
        partial.iter_mut().for_each(|x| *x = 0);
        // the first vector's sign is free by symmetry
        if !signable(&chosen, &rem, 1, add(&mut partial, chosen[0], 1)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn add<'a>(partial: &'a mut [i8], v: &[i8], sign: i8) -> &'a mut [i8] {
    for (p, x) in partial.iter_mut().zip(v) {
        *p += sign * x;
    }
    partial
}

fn signable(chosen: &[&[i8]], rem: &[Vec<i8>], t: usize, partial: &mut [i8]) -> bool {
    if t == chosen.len() {
        return partial.iter().all(|x| x.abs() <= 1);
    }
    for sign in [1i8, -1] {
        add(partial, chosen[t], sign);
        let feasible = partial
            .iter()
            .zip(&rem[t + 1])
            .all(|(p, r)| p.abs() - r <= 1);
        if feasible && signable(chosen, rem, t + 1, partial) {
            add(partial, chosen[t], -sign);
            return true;
        }
        add(partial, chosen[t], -sign);
    }
    false
}

/// Brute-force check over every square submatrix, smallest first, with
/// early exit. Exponential in both dimensions; meant as an oracle for small
/// matrices.
pub fn is_totally_unimodular_by_minors(m: &RatMatrix, opts: TuOptions) -> Result<bool> {
    let rows = m.integer_rows()?;
    if rows.iter().flatten().any(|x| x.abs() > BigInt::from(1)) {
        return Ok(false);
    }
    let (r, c) = (m.rows(), m.cols());
    if r.min(c) > opts.max_dim || r > 30 || c > 30 {
        return Err(Error::cap("minor enumeration", r.max(c), opts.max_dim.min(30)));
    }
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128().expect("unit entry")).collect())
        .collect();
    for k in 2..=r.min(c) {
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| small[i][j]).collect())
                    .collect();
                let d = determinant(sub).expect("unit minors stay small");
                if d.abs() > 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    core::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = cur.as_mut()?;
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}
