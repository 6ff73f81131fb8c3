//! Lawrence binomials and monomial orders.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::One;

use super::poly::{Exponent, SparsePoly};
use crate::error::{Error, Result};
use crate::exactlin::{is_permutation, Circuit, Rational};

/// `x^plus - x^minus` over `x_1..x_n, y_1..y_n` (x block first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub plus: Exponent,
    pub minus: Exponent,
}

impl Binomial {
    /// Number of variables, `2n`.
    pub fn arity(&self) -> usize {
        self.plus.len()
    }

    pub fn to_poly(&self) -> SparsePoly {
        let mut p = SparsePoly::monomial(self.plus.clone(), Rational::one());
        p.add_term(self.minus.clone(), -Rational::one());
        p
    }

    /// Whichever of the two monomials is larger under `order`.
    pub fn lead(&self, order: &MonomialOrder) -> &Exponent {
        match order.cmp(&self.plus, &self.minus) {
            Ordering::Less => &self.minus,
            _ => &self.plus,
        }
    }
}

/// Variables appearing in a monomial.
pub fn monomial_support(e: &[u32]) -> Vec<usize> {
    (0..e.len()).filter(|&i| e[i] > 0).collect()
}

/// `f_v(x, y) = x^{v+} y^{v-} - x^{v-} y^{v+}`.
pub fn circuit_binomial(v: &Circuit) -> Binomial {
    let n = v.vector().len();
    let mut plus = alloc::vec![0u32; 2 * n];
    let mut minus = alloc::vec![0u32; 2 * n];
    for (i, &c) in v.vector().iter().enumerate() {
        let k = c.unsigned_abs() as u32;
        if c > 0 {
            plus[i] = k;
            minus[n + i] = k;
        } else if c < 0 {
            plus[n + i] = k;
            minus[i] = k;
        }
    }
    Binomial { plus, minus }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Lex,
    RevLex,
}

/// A degree-compatible monomial order: total degree first, then lex or
/// reverse lex along a variable priority list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    tie: TieBreak,
    // priority[0] is the largest variable
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Degree reverse lexicographic with `x_1 > … > x_n > y_1 > … > y_n`.
    pub fn degrevlex(arity: usize) -> Self {
        MonomialOrder {
            tie: TieBreak::RevLex,
            priority: (0..arity).collect(),
        }
    }

    pub fn deglex(arity: usize) -> Self {
        MonomialOrder {
            tie: TieBreak::Lex,
            priority: (0..arity).collect(),
        }
    }

    /// `priority` lists the variables from largest to smallest.
    pub fn with_priority(tie: TieBreak, priority: Vec<usize>) -> Result<Self> {
        if !is_permutation(&priority, priority.len()) {
            return Err(Error::Invalid("variable priority is not a permutation".into()));
        }
        Ok(MonomialOrder { tie, priority })
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| match self.tie {
            TieBreak::Lex => self
                .priority
                .iter()
                .map(|&i| a[i].cmp(&b[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            TieBreak::RevLex => self
                .priority
                .iter()
                .rev()
                .map(|&i| b[i].cmp(&a[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn circ(v: &[i64]) -> Circuit {
        Circuit::from_vector(v.to_vec()).unwrap()
    }

    // x_i -> i, y_i -> n + i, 1-based in the arguments
    fn mono(n: usize, xs: &[usize], ys: &[usize]) -> Exponent {
        let mut e = vec![0; 2 * n];
        for &i in xs {
            e[i - 1] = 1;
        }
        for &i in ys {
            e[n + i - 1] = 1;
        }
        e
    }

    #[test]
    fn example_binomials() {
        let b = circuit_binomial(&circ(&[1, -1, 0, 0, 1]));
        assert_eq!(b.plus, mono(5, &[1, 5], &[2]));
        assert_eq!(b.minus, mono(5, &[2], &[1, 5]));
        let b = circuit_binomial(&circ(&[0, 0, 1, -1, 1]));
        assert_eq!(b.plus, mono(5, &[3, 5], &[4]));
        assert_eq!(b.minus, mono(5, &[4], &[3, 5]));
        let b = circuit_binomial(&circ(&[1, -1]));
        assert_eq!(b.plus, mono(2, &[1], &[2]));
        assert_eq!(b.minus, mono(2, &[2], &[1]));
    }

    #[test]
    fn deglex_leads_of_example() {
        let o = MonomialOrder::deglex(10);
        let lead = |v: &[i64]| circuit_binomial(&circ(v)).lead(&o).clone();
        assert_eq!(lead(&[-1, 1, 1, -1, 0]), mono(5, &[1, 4], &[2, 3]));
        assert_eq!(lead(&[1, -1, 0, 0, 1]), mono(5, &[1, 5], &[2]));
        assert_eq!(lead(&[0, 0, 1, -1, 1]), mono(5, &[3, 5], &[4]));
    }

    #[test]
    fn orders_compare_degree_first() {
        let lex = MonomialOrder::deglex(3);
        let rev = MonomialOrder::degrevlex(3);
        // x1*x3 vs x2^2: lex prefers x1*x3, revlex prefers x2^2
        assert_eq!(lex.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(rev.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(lex.cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
        assert_eq!(rev.cmp(&[1, 1, 0], &[1, 1, 0]), Ordering::Equal);
        let flipped = MonomialOrder::with_priority(TieBreak::Lex, vec![2, 1, 0]).unwrap();
        assert_eq!(flipped.cmp(&[1, 0, 0], &[0, 0, 1]), Ordering::Less);
        assert!(MonomialOrder::with_priority(TieBreak::Lex, vec![0, 0]).is_err());
    }
}
