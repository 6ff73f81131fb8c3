//! Lawrence lifts, their circuit binomials, and the degree and ML degree
//! of the toric varieties they define.

mod binomial;
mod oracle;
mod poly;
mod system;

pub use binomial::{circuit_binomial, monomial_support, Binomial, MonomialOrder, TieBreak};
pub use oracle::{degree_oracle_lawrence, OracleReport, ORACLE_MAX_GROUND};
pub use poly::{Exponent, SparsePoly};
pub use system::{
    build_ml_system, expand_g, h_formula, parse_system, random_data, variable_names, Form,
    MLSystem, ParsedSystem,
};

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{all_circuits_even, is_totally_unimodular, Circuit, Parity, RatMatrix, TuOptions};
use crate::matroid::{tutte_dc, Matroid, TuttePoly};

/// `Λ(A) = [A 0; 0 A; I I]`.
pub fn lawrence_lift(a: &RatMatrix) -> Result<RatMatrix> {
    higher_lawrence_lift(a, 2)
}

/// `k` diagonal copies of `A` above a row of `k` identity blocks.
pub fn higher_lawrence_lift(a: &RatMatrix, k: usize) -> Result<RatMatrix> {
    if k < 2 {
        return Err(Error::Invalid("Lawrence lift needs k >= 2".into()));
    }
    if !a.is_integer() {
        return Err(Error::NotIntegerMatrix);
    }
    let (d, n) = (a.rows(), a.cols());
    let zero = RatMatrix::zeros(d, n)?;
    let id = RatMatrix::identity(n)?;
    let mut blocks: Vec<Vec<&RatMatrix>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { a } else { &zero }).collect())
        .collect();
    blocks.push(vec![&id; k]);
    RatMatrix::from_blocks(&blocks)
}

/// `(v, -v)`, the circuit of `Λ(A)` matching a circuit `v` of `A`.
pub fn lift_circuit(v: &Circuit) -> Circuit {
    let mut w = v.vector().to_vec();
    w.extend(v.vector().iter().map(|x| -x));
    Circuit::from_vector(w).expect("a circuit is nonzero")
}

pub(crate) fn require_tu(a: &RatMatrix) -> Result<()> {
    if !a.is_integer() {
        return Err(Error::NotIntegerMatrix);
    }
    if !is_totally_unimodular(a, TuOptions::default())? {
        return Err(Error::NotTotallyUnimodular);
    }
    Ok(())
}

/// The Tutte polynomial of `M(A)` once `A` is known to be totally
/// unimodular.
pub fn checked_tutte(a: &RatMatrix) -> Result<TuttePoly> {
    require_tu(a)?;
    Ok(tutte_dc(&Matroid::new(a)))
}

/// `deg X_{Λ(A)} = τ(1,1)` for totally unimodular `A`.
pub fn degree(a: &RatMatrix) -> Result<u128> {
    Ok(checked_tutte(a)?.bases_count())
}

/// Errors unless every circuit of `A` has even support; the error carries
/// one odd circuit.
pub fn require_even_circuits(circs: &[Circuit]) -> Result<()> {
    if all_circuits_even(circs) {
        return Ok(());
    }
    let odd = circs
        .iter()
        .find(|c| c.parity() == Parity::Odd)
        .expect("some circuit is odd");
    Err(Error::OddCircuitPresent {
        circuit: odd.vector().to_vec(),
    })
}

/// `mldeg X_{Λ(A)} = τ(1,0)` for totally unimodular `A` with only even
/// circuits.
pub fn mldeg(a: &RatMatrix) -> Result<u128> {
    require_tu(a)?;
    let m = Matroid::new(a);
    require_even_circuits(m.circuits())?;
    Ok(tutte_dc(&m).external_zero_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fixtures::*;
    use crate::exactlin::circuits;

    #[test]
    fn lift_of_one_by_one() {
        let a = RatMatrix::from_rows(&[[1]]).unwrap();
        let want = RatMatrix::from_rows(&[[1, 0], [0, 1], [1, 1]]).unwrap();
        assert_eq!(lawrence_lift(&a).unwrap(), want);
        assert_eq!(higher_lawrence_lift(&a, 2).unwrap(), want);
        assert!(higher_lawrence_lift(&a, 1).is_err());
    }

    #[test]
    fn lift_shapes() {
        let k22 = complete_bipartite(2, 2);
        let l = lawrence_lift(&k22).unwrap();
        assert_eq!((l.rows(), l.cols()), (12, 8));
        assert!(is_totally_unimodular(&l, TuOptions::default()).unwrap());
        let k33 = complete_bipartite(3, 3);
        let l3 = higher_lawrence_lift(&k33, 3).unwrap();
        assert_eq!((l3.rows(), l3.cols()), (27, 27));
    }

    #[test]
    fn lift_circuits_are_doubled() {
        let a = five_column_example();
        let mut want: Vec<Circuit> = circuits(&a).iter().map(lift_circuit).collect();
        want.sort();
        assert_eq!(circuits(&lawrence_lift(&a).unwrap()), want);
    }

    #[test]
    fn rational_matrix_has_no_lift() {
        let mut a = RatMatrix::identity(2).unwrap();
        a.set(0, 1, crate::Rational::new(1.into(), 2.into()));
        assert_eq!(lawrence_lift(&a), Err(Error::NotIntegerMatrix));
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&five_column_example()), Ok(8));
        assert_eq!(degree(&complete_bipartite(4, 4)), Ok(4096));
        assert_eq!(mldeg(&complete_bipartite(2, 3)), Ok(7));
        assert_eq!(mldeg(&complete_bipartite(4, 4)), Ok(675));
        let parallel = RatMatrix::from_rows(&[[1, 1]]).unwrap();
        assert_eq!(mldeg(&parallel), Ok(1));
    }

    #[test]
    fn hypothesis_failures() {
        assert!(matches!(
            mldeg(&five_column_example()),
            Err(Error::OddCircuitPresent { circuit }) if circuit.iter().filter(|x| **x != 0).count() % 2 == 1
        ));
        assert_eq!(degree(&triangle()), Err(Error::NotTotallyUnimodular));
        assert_eq!(mldeg(&triangle()), Err(Error::NotTotallyUnimodular));
    }
}
