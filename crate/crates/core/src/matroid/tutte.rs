use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

/// Tutte polynomial `Σ t_ij a^i b^j` with nonnegative integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TuttePoly {
    // coeffs[i][j] = t_ij; no trailing zero rows, each row without trailing zeros
    coeffs: Vec<Vec<u128>>,
}

impl TuttePoly {
    pub fn zero() -> Self {
        TuttePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(i: usize, j: usize, c: u128) -> Self {
        let mut p = TuttePoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// Build from `(i, j, t_ij)` triples; repeated keys are summed.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, u128)>>(terms: I) -> Self {
        let mut p = TuttePoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: u128) {
        if c == 0 {
            return;
        }
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, Vec::new());
        }
        let row = &mut self.coeffs[i];
        if row.len() <= j {
            row.resize(j + 1, 0);
        }
        row[j] = row[j].checked_add(c).expect("Tutte coefficient overflow");
    }

    pub fn coeff(&self, i: usize, j: usize) -> u128 {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms `(i, j, t_ij)` in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, u128)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(move |(j, c)| (i, j, *c))
        })
    }

    /// `τ(a, b)` with `0^0 = 1`.
    pub fn eval(&self, a: i64, b: i64) -> BigInt {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        self.terms().fold(BigInt::zero(), |acc, (i, j, c)| {
            acc + BigInt::from(c) * Pow::pow(&a, i as u32) * Pow::pow(&b, j as u32)
        })
    }

    /// `τ(1, 1)`, the number of bases.
    pub fn bases_count(&self) -> u128 {
        self.terms().map(|(_, _, c)| c).sum()
    }

    /// `τ(1, 0)`, the number of bases of external activity zero.
    pub fn external_zero_count(&self) -> u128 {
        self.terms().filter(|t| t.1 == 0).map(|(_, _, c)| c).sum()
    }

    /// Multiply by `a^da b^db`.
    pub fn shifted(&self, da: usize, db: usize) -> Self {
        TuttePoly::from_terms(self.terms().map(|(i, j, c)| (i + da, j + db, c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TuttePoly::zero();
        for (i, j, c) in self.terms() {
            for (k, l, d) in other.terms() {
                out.add_term(i + k, j + l, c.checked_mul(d).expect("Tutte coefficient overflow"));
            }
        }
        out
    }

    /// Largest `i` with a nonzero `t_ij`, i.e. the rank for a loopless matroid.
    pub fn degree_a(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl One for TuttePoly {
    fn one() -> Self {
        TuttePoly::one()
    }
}

impl core::ops::Mul for TuttePoly {
    type Output = TuttePoly;
    fn mul(self, rhs: Self) -> Self {
        TuttePoly::mul(&self, &rhs)
    }
}

impl fmt::Debug for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match (i, j) {
                (0, 0) => None,
                _ => Some(()),
            };
            if c != 1 || mono.is_none() {
                write!(f, "{c}")?;
                if mono.is_some() {
                    f.write_str("*")?;
                }
            }
            match (i, j) {
                (0, 0) => {}
                (i, 0) => write_pow(f, "x", i)?,
                (0, j) => write_pow(f, "y", j)?,
                (i, j) => {
                    write_pow(f, "x", i)?;
                    f.write_str("*")?;
                    write_pow(f, "y", j)?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn write_pow(f: &mut fmt::Formatter<'_>, v: &str, e: usize) -> fmt::Result {
    if e == 1 {
        f.write_str(v)
    } else {
        write!(f, "{v}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn four_cycle_polynomial() {
        // x^3 + x^2 + x + y
        let t = TuttePoly::from_terms([(3, 0, 1), (2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(t.eval(1, 1), BigInt::from(4));
        assert_eq!(t.eval(1, 0), BigInt::from(3));
        assert_eq!(t.eval(2, 0), BigInt::from(14));
        assert_eq!(t.bases_count(), 4);
        assert_eq!(t.external_zero_count(), 3);
        assert_eq!(t.to_string(), "y + x + x^2 + x^3");
    }

    #[test]
    fn zero_power_zero_is_one() {
        assert_eq!(TuttePoly::one().eval(0, 0), BigInt::from(1));
        // free matroid on three elements
        let t = TuttePoly::monomial(3, 0, 1);
        assert_eq!(t.eval(1, 0), BigInt::from(1));
    }

    #[test]
    fn arithmetic() {
        let x = TuttePoly::monomial(1, 0, 1);
        let y = TuttePoly::monomial(0, 1, 1);
        let p = x.add(&y).mul(&x.add(&y));
        assert_eq!(p.coeff(1, 1), 2);
        assert_eq!(p.shifted(1, 2).coeff(2, 3), 2);
        let terms: Vec<_> = p.terms().collect();
        assert_eq!(terms, alloc::vec![(0, 2, 1), (1, 1, 2), (2, 0, 1)]);
    }
}
