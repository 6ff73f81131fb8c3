//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::Rational;

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    arity: usize,
    // never stores a zero coefficient
    terms: BTreeMap<Exponent, Rational>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(alloc::vec![0; arity], c);
        p
    }

    /// The variable with index `i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; arity];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// Affine linear form `Σ coeffs[i] x_i + c`.
    pub fn linear(coeffs: &[Rational], c: Rational) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, c);
        for (i, a) in coeffs.iter().enumerate() {
            let mut e = alloc::vec![0; n];
            e[i] = 1;
            p.add_term(e, a.clone());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rational) {
        assert_eq!(exp.len(), self.arity, "exponent arity");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Terms by exponent vector, descending lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The sum of the terms of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous part of top degree (zero for the zero polynomial).
    pub fn top_part(&self) -> Self {
        match self.degree() {
            Some(k) => self.homogeneous_part(k),
            None => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.arity, Rational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Render with the given variable names. Terms appear in descending
    /// lexicographic exponent order, each as `c*v1^e1*v2...` with unit
    /// exponents elided.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            if c.is_negative() {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            write_rational(&mut s, &c.abs());
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => {
                        let _ = write!(s, "*{}", names[i]);
                    }
                    _ => {
                        let _ = write!(s, "*{}^{}", names[i], p);
                    }
                }
            }
        }
        s
    }

    /// Inverse of [`SparsePoly::to_text`]. Whitespace is ignored.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let arity = names.len();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Self::zero(arity);
        if compact == "0" {
            return Ok(out);
        }
        let bad = |what: &str| Error::Invalid(alloc::format!("bad polynomial term {what:?}"));
        // split at signs that start a term
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let mut factors = body.split('*');
            let coeff_text = factors.next().ok_or_else(|| bad(term))?;
            let mut c = parse_rational(coeff_text).ok_or_else(|| bad(term))?;
            if neg {
                c = -c;
            }
            let mut e = alloc::vec![0u32; arity];
            for f in factors {
                let (name, pow) = match f.split_once('^') {
                    Some((n, p)) => (n, p.parse::<u32>().map_err(|_| bad(term))?),
                    None => (f, 1),
                };
                let i = names.iter().position(|x| x == name).ok_or_else(|| bad(term))?;
                e[i] += pow;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

pub(crate) fn write_rational(s: &mut String, c: &Rational) {
    if c.denom().is_one() {
        let _ = write!(s, "{}", c.numer());
    } else {
        let _ = write!(s, "{}/{}", c.numer(), c.denom());
    }
}

pub(crate) fn parse_rational(t: &str) -> Option<Rational> {
    let parse_int = |x: &str| x.parse::<BigInt>().ok();
    match t.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(parse_int(p)?, q))
        }
        None => Some(Rational::from_integer(parse_int(t)?)),
    }
}
