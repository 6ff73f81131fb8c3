//! Exhaustive routes: bases, activities, and the subset census.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;

use super::{Matroid, TuttePoly};
use crate::error::{Error, Result};
use crate::exactlin::int::{cross, divide_content, Int};
use crate::exactlin::{is_permutation, reduce, rows_of};

/// A total order on the ground set, smallest element first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundOrder {
    position: Vec<usize>,
}

impl GroundOrder {
    /// Column index order.
    pub fn natural(n: usize) -> Self {
        GroundOrder {
            position: (0..n).collect(),
        }
    }

    /// `sequence` lists the ground set from smallest to largest.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        if !is_permutation(sequence, sequence.len()) {
            return Err(Error::Invalid("order is not a permutation".into()));
        }
        let mut position = alloc::vec![0; sequence.len()];
        for (k, &e) in sequence.iter().enumerate() {
            position[e] = k;
        }
        Ok(GroundOrder { position })
    }

    pub fn len(&self) -> usize {
        self.position.len()
    }

    pub fn is_empty(&self) -> bool {
        self.position.is_empty()
    }

    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// The order-minimal element of a nonempty set.
    pub fn min_of(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().min_by_key(|&e| self.position[e])
    }
}

fn check_ground(m: &Matroid) -> Result<()> {
    let n = m.ground_size();
    if n > m.caps.max_ground {
        return Err(Error::cap("ground set", n, m.caps.max_ground));
    }
    Ok(())
}

/// All bases in lexicographic order.
pub fn bases(m: &Matroid) -> Result<Vec<Vec<usize>>> {
    check_ground(m)?;
    let r = m.rank();
    Ok(m.dispatch(|c| run_bases(c, r), |c| run_bases(c, r)))
}

fn run_bases<T: Int>(cols: &[Vec<T>], r: usize) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    bases_dfs(cols, r, &mut Vec::new(), 0, &mut Vec::new(), &mut out)?;
    Some(out)
}

/// Echelon vector with its pivot coordinate.
type Pivoted<T> = (Vec<T>, usize);

fn bases_dfs<T: Int>(
    cols: &[Vec<T>],
    r: usize,
    chosen: &mut Vec<usize>,
    start: usize,
    echelon: &mut Vec<Pivoted<T>>,
    out: &mut Vec<Vec<usize>>,
) -> Option<()> {
    if chosen.len() == r {
        out.push(chosen.clone());
        return Some(());
    }
    let n = cols.len();
    // not enough elements left to reach rank r
    if n - start < r - chosen.len() {
        return Some(());
    }
    for j in start..n {
        let mut v = cols[j].clone();
        for (b, p) in echelon.iter() {
            if v[*p].is_zero() {
                continue;
            }
            let x = v[*p].clone();
            for (dst, src) in v.iter_mut().zip(b) {
                *dst = cross(&b[*p], dst, &x, src)?;
            }
            divide_content(&mut v);
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((v, p));
            chosen.push(j);
            bases_dfs(cols, r, chosen, j + 1, echelon, out)?;
            chosen.pop();
            echelon.pop();
        }
    }
    Some(())
}

/// For each `e` outside the basis, the support of the unique circuit in
/// `basis + e` (which contains `e`). Returned in increasing `e`.
pub fn fundamental_circuits(m: &Matroid, basis: &[usize]) -> Result<Vec<(usize, Vec<usize>)>> {
    let n = m.ground_size();
    if basis.iter().any(|&b| b >= n) || !m.is_basis(basis) {
        return Err(Error::NotABasis);
    }
    let mut in_basis = alloc::vec![false; n];
    for &b in basis {
        in_basis[b] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&e| !in_basis[e]).collect();
    let order: Vec<usize> = basis.iter().chain(&rest).copied().collect();
    let r = basis.len();
    let rows: Vec<Vec<bool>> = m.dispatch(
        |c: &[Vec<i128>]| fundamental_in(c, &order, r),
        |c: &[Vec<BigInt>]| fundamental_in(c, &order, r),
    );
    Ok(rest
        .iter()
        .enumerate()
        .map(|(t, &e)| {
            let mut sup: Vec<usize> = (0..r).filter(|&k| rows[k][r + t]).map(|k| basis[k]).collect();
            sup.push(e);
            sup.sort_unstable();
            (e, sup)
        })
        .collect())
}

/// Reduce with the basis columns first; `out[k][j]` tells whether column `j`
/// (in `order`) has a nonzero coordinate on basis element `k`.
fn fundamental_in<T: Int>(cols: &[Vec<T>], order: &[usize], r: usize) -> Option<Vec<Vec<bool>>> {
    let sel: Vec<&[T]> = order.iter().map(|&i| cols[i].as_slice()).collect();
    let red = reduce(rows_of(&sel), sel.len())?;
    debug_assert_eq!(red.pivots, (0..r).collect::<Vec<_>>());
    Some(
        red.rows
            .iter()
            .map(|row| row.iter().map(|x| !x.is_zero()).collect())
            .collect(),
    )
}

/// Number of `e` outside `basis` that are order-minimal in their
/// fundamental circuit.
pub fn external_activity(m: &Matroid, basis: &[usize], order: &GroundOrder) -> Result<usize> {
    let fc = fundamental_circuits(m, basis)?;
    Ok(fc
        .iter()
        .filter(|(e, sup)| order.min_of(sup) == Some(*e))
        .count())
}

/// Number of `e` in `basis` that are order-minimal in their fundamental
/// cocircuit `{e} ∪ {f ∉ B : e ∈ C(B, f)}`.
pub fn internal_activity(m: &Matroid, basis: &[usize], order: &GroundOrder) -> Result<usize> {
    let fc = fundamental_circuits(m, basis)?;
    Ok(internal_from(&fc, basis, order))
}

fn internal_from(fc: &[(usize, Vec<usize>)], basis: &[usize], order: &GroundOrder) -> usize {
    basis
        .iter()
        .filter(|&&e| {
            fc.iter()
                .filter(|(_, sup)| sup.contains(&e))
                .all(|(f, _)| order.less(e, *f))
        })
        .count()
}

/// `t_ij` = number of bases with internal activity `i` and external
/// activity `j`.
pub fn tutte_activity(m: &Matroid, order: &GroundOrder) -> Result<TuttePoly> {
    if order.len() != m.ground_size() {
        return Err(Error::DimensionMismatch {
            expected: m.ground_size(),
            found: order.len(),
        });
    }
    let mut t = TuttePoly::zero();
    for b in bases(m)? {
        let fc = fundamental_circuits(m, &b)?;
        let ext = fc
            .iter()
            .filter(|(e, sup)| order.min_of(sup) == Some(*e))
            .count();
        let int = internal_from(&fc, &b, order);
        t.add_term(int, ext, 1);
    }
    Ok(t)
}

/// `Σ_S (a-1)^{r - r(S)} (b-1)^{|S| - r(S)}` over every subset `S`.
pub fn tutte_census(m: &Matroid) -> Result<TuttePoly> {
    check_ground(m)?;
    let n = m.ground_size();
    let r = m.rank();
    // counts[corank][nullity]
    let mut counts = alloc::vec![alloc::vec![0u128; n + 1]; r + 1];
    let mut subset = Vec::with_capacity(n);
    for mask in 0u64..(1u64 << n) {
        subset.clear();
        subset.extend((0..n).filter(|&i| mask >> i & 1 == 1));
        let rs = m.rank_of(&subset);
        counts[r - rs][subset.len() - rs] += 1;
    }
    // expand (a-1)^p (b-1)^q with signed accumulation
    let mut signed = alloc::vec![alloc::vec![0i128; n + 1]; r + 1];
    for (p, row) in counts.iter().enumerate() {
        for (q, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..=p {
                for j in 0..=q {
                    let sign = if (p - i + q - j) % 2 == 0 { 1 } else { -1 };
                    let term = binomial(p as i128, i as i128) * binomial(q as i128, j as i128);
                    signed[i][j] += sign * term * c as i128;
                }
            }
        }
    }
    let mut t = TuttePoly::zero();
    for (i, row) in signed.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            assert!(c >= 0, "negative Tutte coefficient t_{i}{j} = {c}");
            t.add_term(i, j, c as u128);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fixtures::*;
    use crate::exactlin::RatMatrix;
    use alloc::vec;

    #[test]
    fn example_bases() {
        let m = Matroid::new(&five_column_example());
        let want: Vec<Vec<usize>> = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 3, 5], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 4, 5]]
            .iter()
            .map(|b| b.iter().map(|x| x - 1).collect())
            .collect();
        assert_eq!(bases(&m).unwrap(), want);
    }

    #[test]
    fn identity_and_bipartite_bases() {
        let m = Matroid::new(&RatMatrix::identity(3).unwrap());
        assert_eq!(bases(&m).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(bases(&Matroid::new(&complete_bipartite(2, 3))).unwrap().len(), 12);
    }

    #[test]
    fn bases_cap() {
        let m = Matroid::with_caps(&complete_bipartite(2, 3), crate::matroid::MatroidCaps { max_ground: 5 });
        assert!(matches!(bases(&m), Err(Error::CapExceeded { .. })));
        assert!(matches!(tutte_census(&m), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn external_activity_cases() {
        // K(2,3), edges 11,12,13,21,22,23; star of left vertex 1 plus edge 21
        let m = Matroid::new(&complete_bipartite(2, 3));
        let order = GroundOrder::natural(6);
        assert_eq!(external_activity(&m, &[0, 1, 2, 3], &order), Ok(0));
        // free matroid: no external elements
        let free = Matroid::new(&RatMatrix::identity(3).unwrap());
        assert_eq!(external_activity(&free, &[0, 1, 2], &GroundOrder::natural(3)), Ok(0));
        // 4-cycle, basis missing the smallest edge: that edge is externally active
        let c4 = Matroid::new(&complete_bipartite(2, 2));
        assert_eq!(external_activity(&c4, &[1, 2, 3], &GroundOrder::natural(4)), Ok(1));
        assert_eq!(external_activity(&c4, &[0, 1, 2], &GroundOrder::natural(4)), Ok(0));
    }

    #[test]
    fn not_a_basis() {
        let m = Matroid::new(&five_column_example());
        let order = GroundOrder::natural(5);
        assert_eq!(external_activity(&m, &[0, 1, 4], &order), Err(Error::NotABasis));
        assert_eq!(external_activity(&m, &[0, 1], &order), Err(Error::NotABasis));
        assert_eq!(external_activity(&m, &[0, 1, 9], &order), Err(Error::NotABasis));
    }

    #[test]
    fn fundamental_circuit_of_example() {
        let m = Matroid::new(&five_column_example());
        let fc = fundamental_circuits(&m, &[0, 1, 2]).unwrap();
        assert_eq!(fc, vec![(3, vec![0, 1, 2, 3]), (4, vec![0, 1, 4])]);
    }

    #[test]
    fn census_and_activity_on_four_cycle() {
        let m = Matroid::new(&complete_bipartite(2, 2));
        let want = TuttePoly::from_terms([(3, 0, 1), (2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(tutte_census(&m).unwrap(), want);
        assert_eq!(tutte_activity(&m, &GroundOrder::natural(4)).unwrap(), want);
    }

    #[test]
    fn order_from_sequence() {
        let o = GroundOrder::from_sequence(&[2, 0, 1]).unwrap();
        assert!(o.less(2, 0));
        assert_eq!(o.min_of(&[0, 1, 2]), Some(2));
        assert!(GroundOrder::from_sequence(&[0, 0]).is_err());
    }
}
