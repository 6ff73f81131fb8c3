//! Combinatorial degree of `X_{Λ(A)}`: maximal subsets of the doubled
//! ground set that contain no initial monomial of a circuit binomial.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::binomial::{circuit_binomial, monomial_support, MonomialOrder};
use super::require_tu;
use crate::error::{Error, Result};
use crate::exactlin::{Circuit, RatMatrix};
use crate::matroid::{bases, fundamental_circuits, Matroid};

/// Largest `n` for the exhaustive search over subsets of the `2n` variables.
pub const ORACLE_MAX_GROUND: usize = 16;

/// Both counts from [`degree_oracle_lawrence`] next to the number of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub bases: usize,
    /// Distinct sets `T_B` built from bases, each checked to be maximal and
    /// initial-term free, with `B` recovered from it.
    pub constructed: usize,
    /// Inclusion-maximal initial-term free sets found by search.
    pub maximal_sets: usize,
    /// Those of the maximal sets whose size is `n + rank`.
    pub top_sets: usize,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.constructed == self.bases
            && self.maximal_sets == self.bases
            && self.top_sets == self.bases
    }

    /// The degree read off the search.
    pub fn degree(&self) -> usize {
        self.maximal_sets
    }
}

/// Variables `x_i` are `i`, `y_i` are `n + i`. Returns the initial-monomial
/// supports, one per circuit, as bitmasks over the `2n` variables.
fn lead_supports(circs: &[Circuit], order: &MonomialOrder) -> Vec<u64> {
    circs
        .iter()
        .map(|c| {
            let b = circuit_binomial(c);
            monomial_support(b.lead(order))
                .into_iter()
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect()
}

/// Count maximal subsets of `{x_1..x_n, y_1..y_n}` containing no initial
/// monomial of `{f_v}`, both through the `T_B` bijection and by search.
pub fn degree_oracle_lawrence(a: &RatMatrix, order: &MonomialOrder) -> Result<OracleReport> {
    require_tu(a)?;
    let n = a.cols();
    if n > ORACLE_MAX_GROUND {
        return Err(Error::cap("degree oracle ground set", n, ORACLE_MAX_GROUND));
    }
    if order.arity() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: order.arity(),
        });
    }
    let m = Matroid::new(a);
    let circs = m.circuits().to_vec();
    let leads = lead_supports(&circs, order);
    let all_bases = bases(&m)?;
    let constructed = construct_all(&m, &all_bases, &circs, &leads, n)?;
    let (maximal_sets, top_sets) = search(&leads, 2 * n, n + m.rank());
    Ok(OracleReport {
        bases: all_bases.len(),
        constructed,
        maximal_sets,
        top_sets,
    })
}

fn blocked(t: u64, leads: &[u64]) -> bool {
    leads.iter().any(|&l| l & t == l)
}

/// Build `T_B` for every basis and check it.
fn construct_all(
    m: &Matroid,
    all_bases: &[Vec<usize>],
    circs: &[Circuit],
    leads: &[u64],
    n: usize,
) -> Result<usize> {
    let by_support: BTreeMap<&[usize], usize> = circs
        .iter()
        .enumerate()
        .map(|(k, c)| (c.support(), k))
        .collect();
    let full: u64 = if 2 * n == 64 { !0 } else { (1u64 << (2 * n)) - 1 };
    let mut seen = BTreeSet::new();
    for b in all_bases {
        let mut t: u64 = 0;
        for &i in b {
            t |= 1 << i | 1 << (n + i);
        }
        for (e, sup) in fundamental_circuits(m, b)? {
            let k = by_support[sup.as_slice()];
            // the lead contains exactly one of e_x, e_y; take the other
            if leads[k] >> e & 1 == 1 {
                t |= 1 << (n + e);
            } else {
                t |= 1 << e;
            }
        }
        let maximal = (0..2 * n)
            .filter(|&i| t >> i & 1 == 0)
            .all(|i| blocked(t | 1 << i, leads));
        let recovered: Vec<usize> = (0..n).filter(|&i| t >> i & 1 == 1 && t >> (n + i) & 1 == 1).collect();
        if blocked(t, leads) || !maximal || recovered != *b || t & !full != 0 {
            return Err(Error::Invalid("T_B construction failed".into()));
        }
        seen.insert(t);
    }
    Ok(seen.len())
}

/// Count inclusion-maximal sets avoiding every lead support, and those of
/// size `top`.
fn search(leads: &[u64], vars: usize, top: usize) -> (usize, usize) {
    // leads containing each variable
    let mut touching: Vec<Vec<u64>> = alloc::vec![Vec::new(); vars];
    for &l in leads {
        for (i, t) in touching.iter_mut().enumerate() {
            if l >> i & 1 == 1 {
                t.push(l);
            }
        }
    }
    let mut counts = (0, 0);
    walk(leads, &touching, vars, top, 0, 0, 0, &mut counts);
    counts
}

#[allow(clippy::too_many_arguments)]
fn walk(
    leads: &[u64],
    touching: &[Vec<u64>],
    vars: usize,
    top: usize,
    i: usize,
    taken: u64,
    dropped: u64,
    counts: &mut (usize, usize),
) {
    if i == vars {
        // every dropped variable must be blocked by the final set
        let maximal = (0..vars)
            .filter(|&j| dropped >> j & 1 == 1)
            .all(|j| touching[j].iter().any(|&l| l & !(taken | 1 << j) == 0));
        if maximal {
            counts.0 += 1;
            if taken.count_ones() as usize == top {
                counts.1 += 1;
            }
        }
        return;
    }
    let with = taken | 1 << i;
    if !touching[i].iter().any(|&l| l & with == l) {
        walk(leads, touching, vars, top, i + 1, with, dropped, counts);
    }
    // dropping i only pays off if some lead through i can still be completed
    if touching[i].iter().any(|&l| l & dropped == 0) {
        walk(leads, touching, vars, top, i + 1, taken, dropped | 1 << i, counts);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fixtures::*;
    use crate::toric::binomial::TieBreak;

    #[test]
    fn example_degree_eight() {
        let a = five_column_example();
        for order in [MonomialOrder::deglex(10), MonomialOrder::degrevlex(10)] {
            let r = degree_oracle_lawrence(&a, &order).unwrap();
            assert_eq!(r.bases, 8);
            assert!(r.agrees(), "{r:?}");
        }
    }

    #[test]
    fn free_matroid_has_one_maximal_set() {
        let a = RatMatrix::identity(4).unwrap();
        let r = degree_oracle_lawrence(&a, &MonomialOrder::degrevlex(8)).unwrap();
        assert_eq!(r.degree(), 1);
        assert!(r.agrees());
    }

    #[test]
    fn bipartite_two_three() {
        let r = degree_oracle_lawrence(&complete_bipartite(2, 3), &MonomialOrder::degrevlex(12)).unwrap();
        assert_eq!(r.degree(), 12);
        assert!(r.agrees());
    }

    #[test]
    fn reversed_priority_still_agrees() {
        let a = complete_bipartite(2, 3);
        let order = MonomialOrder::with_priority(TieBreak::Lex, (0..12).rev().collect()).unwrap();
        assert!(degree_oracle_lawrence(&a, &order).unwrap().agrees());
    }

    #[test]
    fn rejects_non_tu_and_bad_order() {
        assert_eq!(
            degree_oracle_lawrence(&triangle(), &MonomialOrder::degrevlex(6)),
            Err(Error::NotTotallyUnimodular)
        );
        assert!(matches!(
            degree_oracle_lawrence(&five_column_example(), &MonomialOrder::degrevlex(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
