//! Memoized deletion–contraction.
//!
//! A state is a list of columns. Each state is first brought to a compact
//! form: reduced row echelon form, primitive columns, loops and coloops
//! split off as factors, columns sorted. Direct sums are split, parallel
//! classes are collapsed in one step, and only then does the recursion
//! branch.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Matroid, TuttePoly};
use crate::exactlin::int::{cross, make_primitive, Int};
use crate::exactlin::{reduce, rows_of};

/// Tutte polynomial by deletion–contraction.
pub fn tutte_dc(m: &Matroid) -> TuttePoly {
    m.dispatch(
        |c| Dc::default().run(c.to_vec()),
        |c| Dc::default().run(c.to_vec()),
    )
}

type Cols<T> = Vec<Vec<T>>;

struct Dc<T> {
    memo: BTreeMap<Cols<T>, TuttePoly>,
}

impl<T> Default for Dc<T> {
    fn default() -> Self {
        Dc {
            memo: BTreeMap::new(),
        }
    }
}

impl<T: Int> Dc<T> {
    fn run(&mut self, cols: Cols<T>) -> Option<TuttePoly> {
        let (cols, loops, coloops) = compact(cols)?;
        let factor = TuttePoly::monomial(coloops, loops, 1);
        if cols.is_empty() {
            return Some(factor);
        }
        if let Some(t) = self.memo.get(&cols) {
            return Some(t.mul(&factor));
        }
        let t = self.connected_parts(&cols)?;
        self.memo.insert(cols, t.clone());
        Some(t.mul(&factor))
    }

    /// `cols` is compact and nonempty.
    fn connected_parts(&mut self, cols: &Cols<T>) -> Option<TuttePoly> {
        let parts = components(cols);
        if parts.len() > 1 {
            let mut t = TuttePoly::one();
            for part in parts {
                let sub: Cols<T> = part.iter().map(|&j| cols[j].clone()).collect();
                t = t.mul(&self.run(sub)?);
            }
            return Some(t);
        }
        self.branch(cols)
    }

    fn branch(&mut self, cols: &Cols<T>) -> Option<TuttePoly> {
        // columns are sorted, so parallel elements are adjacent
        let mut best = (0, 1);
        let mut start = 0;
        for j in 1..=cols.len() {
            if j == cols.len() || cols[j] != cols[start] {
                if j - start > best.1 {
                    best = (start, j - start);
                }
                start = j;
            }
        }
        let (s, k) = best;
        let e = s;
        // everything outside the class P of e
        let mut rest: Cols<T> = cols[..s].to_vec();
        rest.extend_from_slice(&cols[s + k..]);
        // M \ (P - e) for a class, plain M \ e otherwise
        let mut deleted = rest.clone();
        if k > 1 {
            deleted.push(cols[e].clone());
        }
        let t_del = self.run(deleted)?;
        // M / e, with the rest of P (now loops) removed
        let t_con = self.run(contract(&rest, &cols[e])?)?;
        let mut geo = TuttePoly::zero();
        if k == 1 {
            geo.add_term(0, 0, 1);
        } else {
            for j in 1..k {
                geo.add_term(0, j, 1);
            }
        }
        Some(t_del.add(&t_con.mul(&geo)))
    }
}

/// Contract the nonzero vector `c` out of every column of `cols`.
fn contract<T: Int>(cols: &Cols<T>, c: &[T]) -> Option<Cols<T>> {
    let p = c.iter().position(|x| !x.is_zero()).expect("contracted column is a loop");
    cols.iter()
        .map(|x| {
            let mut y = Vec::with_capacity(x.len() - 1);
            for i in (0..x.len()).filter(|&i| i != p) {
                y.push(cross(&c[p], &x[i], &x[p], &c[i])?);
            }
            make_primitive(&mut y);
            Some(y)
        })
        .collect()
}

/// Reduce, drop loops and coloops, and sort. Returns the remaining columns
/// with the numbers of loops and coloops removed.
fn compact<T: Int>(cols: Cols<T>) -> Option<(Cols<T>, usize, usize)> {
    let nonzero: Vec<&[T]> = cols
        .iter()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .map(|c| c.as_slice())
        .collect();
    let loops = cols.len() - nonzero.len();
    if nonzero.is_empty() {
        return Some((Vec::new(), loops, 0));
    }
    let red = reduce(rows_of(&nonzero), nonzero.len())?;
    let n = nonzero.len();
    // a pivot whose row is otherwise zero is a coloop
    let mut drop_row = alloc::vec![false; red.rows.len()];
    let mut drop_col = alloc::vec![false; n];
    for (k, (row, &p)) in red.rows.iter().zip(&red.pivots).enumerate() {
        if row.iter().enumerate().all(|(j, x)| j == p || x.is_zero()) {
            drop_row[k] = true;
            drop_col[p] = true;
        }
    }
    let coloops = drop_col.iter().filter(|&&d| d).count();
    let mut out: Cols<T> = (0..n)
        .filter(|&j| !drop_col[j])
        .map(|j| {
            let mut c: Vec<T> = red
                .rows
                .iter()
                .zip(&drop_row)
                .filter(|(_, &d)| !d)
                .map(|(row, _)| row[j].clone())
                .collect();
            make_primitive(&mut c);
            c
        })
        .collect();
    out.sort_unstable();
    Some((out, loops, coloops))
}

/// Connected components of the column–row incidence graph, as column index
/// lists in increasing order. For a reduced matrix without coloops these are
/// the connected components of the matroid.
fn components<T: Int>(cols: &Cols<T>) -> Vec<Vec<usize>> {
    let d = cols[0].len();
    let n = cols.len();
    // union-find over rows; a column joins all rows in its support
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for c in cols {
        let mut first = None;
        for (i, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match first {
                None => first = Some(find(&mut parent, i)),
                Some(f) => {
                    let r = find(&mut parent, i);
                    parent[r] = f;
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, c) in cols.iter().enumerate().take(n) {
        let i = c.iter().position(|x| !x.is_zero()).expect("no loops here");
        by_root.entry(find(&mut parent, i)).or_default().push(j);
    }
    by_root.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fixtures::*;
    use crate::exactlin::RatMatrix;
    use crate::matroid::tests::small_matrix;
    use crate::matroid::{tutte_activity, tutte_census, GroundOrder};
    use proptest::prelude::*;

    fn dc(m: &RatMatrix) -> TuttePoly {
        tutte_dc(&Matroid::new(m))
    }

    #[test]
    fn bipartite_values() {
        for (m1, m2, b, e) in [(2, 2, 4, 3), (2, 3, 12, 7), (3, 3, 81, 31)] {
            let t = dc(&complete_bipartite(m1, m2));
            assert_eq!(t.bases_count(), b);
            assert_eq!(t.external_zero_count(), e);
        }
    }

    #[test]
    fn example_degree_is_eight() {
        assert_eq!(dc(&five_column_example()).bases_count(), 8);
    }

    #[test]
    fn loops_kill_the_ml_degree() {
        let m = RatMatrix::from_rows(&[[1, 0, 1], [0, 0, 1]]).unwrap();
        let t = dc(&m);
        assert_eq!(t, TuttePoly::from_terms([(2, 1, 1)]));
        assert_eq!(t.external_zero_count(), 0);
    }

    #[test]
    fn triangle_graph() {
        let directed = RatMatrix::from_rows(&[[1, 0, -1], [-1, 1, 0], [0, -1, 1]]).unwrap();
        let want = TuttePoly::from_terms([(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(dc(&directed), want);
        // the unsigned odd cycle is independent
        assert_eq!(dc(&triangle()), TuttePoly::monomial(3, 0, 1));
    }

    #[test]
    fn parallel_class() {
        let m = RatMatrix::from_rows(&[[1, 2, -3, 1]]).unwrap();
        let want = TuttePoly::from_terms([(1, 0, 1), (0, 1, 1), (0, 2, 1), (0, 3, 1)]);
        assert_eq!(dc(&m), want);
    }

    #[test]
    fn large_entries_fall_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = RatMatrix::from_rows(&[[big, 1, big - 1, 7], [1, big, 5, big - 2], [3, 2, big, 1]]).unwrap();
        let mat = Matroid::new(&m);
        assert_eq!(tutte_dc(&mat), tutte_census(&mat).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn three_routes_agree(m in small_matrix(4, 8)) {
            let mat = Matroid::new(&m);
            let census = tutte_census(&mat).unwrap();
            prop_assert_eq!(&tutte_dc(&mat), &census);
            prop_assert_eq!(&tutte_activity(&mat, &GroundOrder::natural(mat.ground_size())).unwrap(), &census);
        }

        #[test]
        fn activity_ignores_the_order(m in small_matrix(3, 7), seed in any::<u64>()) {
            let mat = Matroid::new(&m);
            let n = mat.ground_size();
            let mut seq: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                seq.swap(i, (s >> 33) as usize % (i + 1));
            }
            let order = GroundOrder::from_sequence(&seq).unwrap();
            prop_assert_eq!(tutte_activity(&mat, &order).unwrap(), tutte_dc(&mat));
        }

        #[test]
        fn ml_degree_one_iff_only_two_circuits(m in small_matrix(3, 6)) {
            let mat = Matroid::new(&m);
            let t = tutte_dc(&mat);
            prop_assert_eq!(t.external_zero_count() == 1, super::super::has_only_two_circuits(&mat));
        }

        #[test]
        fn deleting_a_coloop_keeps_the_ml_degree(m in small_matrix(3, 6)) {
            let mat = Matroid::new(&m);
            if let Some(&e) = mat.coloops().first() {
                if let Ok(del) = mat.delete(e) {
                    prop_assert_eq!(tutte_dc(&del).external_zero_count(), tutte_dc(&mat).external_zero_count());
                }
            }
        }
    }
}
