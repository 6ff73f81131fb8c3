//! Likelihood systems of `X_{Λ(A)}` in polynomial form, and their text
//! emission.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Zero};
use rand::Rng;

use super::binomial::circuit_binomial;
use super::poly::{parse_rational, write_rational, SparsePoly};
use crate::error::{Error, Result};
use crate::exactlin::{circuits, Circuit, RatMatrix, Rational};

/// `x1..xn` and, for the full form, `y1..yn`.
pub fn variable_names(n: usize, with_y: bool) -> Vec<String> {
    let mut v: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    if with_y {
        v.extend((1..=n).map(|i| format!("y{i}")));
    }
    v
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn require_unit(v: &Circuit) -> Result<()> {
    if v.is_unit() {
        Ok(())
    } else {
        Err(Error::NonUnitCircuitEntry)
    }
}

/// `f_v(x, s - x)` in the variables `x`.
fn substitute(v: &Circuit, s: &[Rational]) -> SparsePoly {
    let n = s.len();
    let x = |i| SparsePoly::var(n, i);
    let y = |i: usize| SparsePoly::constant(n, s[i].clone()).sub(&x(i));
    let one = SparsePoly::constant(n, Rational::one());
    let (mut left, mut right) = (one.clone(), one);
    for (i, &c) in v.vector().iter().enumerate() {
        let k = c.unsigned_abs() as u32;
        if c > 0 {
            left = left.mul(&x(i).pow(k));
            right = right.mul(&y(i).pow(k));
        } else if c < 0 {
            left = left.mul(&y(i).pow(k));
            right = right.mul(&x(i).pow(k));
        }
    }
    left.sub(&right)
}

fn sum(u: &[Rational], w: &[Rational]) -> Vec<Rational> {
    u.iter().zip(w).map(|(a, b)| a + b).collect()
}

/// `g_v(x, u, w) = f_v(x, u + w - x)`, fully expanded.
pub fn expand_g(v: &Circuit, u: &[Rational], w: &[Rational]) -> Result<SparsePoly> {
    require_unit(v)?;
    let n = v.vector().len();
    check_len(n, u.len())?;
    check_len(n, w.len())?;
    Ok(substitute(v, &sum(u, w)))
}

/// Closed form of the top-degree part of `g_v` with `s = u + w`.
///
/// Odd support: `2 (-1)^{|v-|} x^v`. Even support:
/// `(-1)^{|v-|} (Σ_{i∈v+} s_i x^{v-e_i} - Σ_{i∈v-} s_i x^{v-e_i})`, where
/// `x^v` is the product over the support.
pub fn h_formula(v: &Circuit, s: &[Rational]) -> Result<SparsePoly> {
    require_unit(v)?;
    let n = v.vector().len();
    check_len(n, s.len())?;
    let sup = v.support();
    let neg = v.negative();
    let sign = if neg.len() % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let mut xv = alloc::vec![0u32; n];
    for &i in sup {
        xv[i] = 1;
    }
    let mut h = SparsePoly::zero(n);
    if sup.len() % 2 == 1 {
        h.add_term(xv, sign * Rational::from_integer(2.into()));
        return Ok(h);
    }
    for &i in sup {
        let mut e = xv.clone();
        e[i] = 0;
        let c = if v.vector()[i] > 0 {
            s[i].clone()
        } else {
            -s[i].clone()
        };
        h.add_term(e, &sign * c);
    }
    Ok(h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// Binomials, `Ax = Au` and `x + y = u + w` on `2n` variables.
    Full,
    /// `g_v` and `Ax = Au` on `n` variables.
    Eliminated,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Form::Full => "full",
            Form::Eliminated => "eliminated",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MLSystem {
    pub form: Form,
    pub matrix: RatMatrix,
    /// One polynomial per circuit.
    pub polynomials: Vec<SparsePoly>,
    pub linear_rows: RatMatrix,
    pub rhs: Vec<Rational>,
    pub names: Vec<String>,
    pub u: Vec<Rational>,
    pub w: Vec<Rational>,
    /// Recorded in the emitted header when the data was drawn at random.
    pub seed: Option<u64>,
}

/// Assemble the likelihood system of `X_{Λ(A)}` for data `(u, w)`.
pub fn build_ml_system(a: &RatMatrix, u: &[Rational], w: &[Rational], form: Form) -> Result<MLSystem> {
    let n = a.cols();
    check_len(n, u.len())?;
    check_len(n, w.len())?;
    let circs = circuits(a);
    let au = a.mul_vec(u)?;
    let (polynomials, linear_rows, rhs, names) = match form {
        Form::Full => {
            let polys = circs.iter().map(|c| circuit_binomial(c).to_poly()).collect();
            let id = RatMatrix::identity(n)?;
            let zero = RatMatrix::zeros(a.rows(), n)?;
            let rows = RatMatrix::from_blocks(&[alloc::vec![a, &zero], alloc::vec![&id, &id]])?;
            let mut rhs = au;
            rhs.extend(sum(u, w));
            (polys, rows, rhs, variable_names(n, true))
        }
        Form::Eliminated => {
            let s = sum(u, w);
            let polys = circs.iter().map(|c| substitute(c, &s)).collect();
            (polys, a.clone(), au, variable_names(n, false))
        }
    };
    Ok(MLSystem {
        form,
        matrix: a.clone(),
        polynomials,
        linear_rows,
        rhs,
        names,
        u: u.to_vec(),
        w: w.to_vec(),
        seed: None,
    })
}

impl MLSystem {
    /// Linear equations as polynomials `row · vars - rhs`.
    pub fn linear_polys(&self) -> Vec<SparsePoly> {
        (0..self.linear_rows.rows())
            .map(|i| SparsePoly::linear(self.linear_rows.row(i), -self.rhs[i].clone()))
            .collect()
    }

    /// Every equation, nonlinear ones first.
    pub fn all_polynomials(&self) -> Vec<SparsePoly> {
        let mut v = self.polynomials.clone();
        v.extend(self.linear_polys());
        v
    }

    /// Deterministic text: `#` header lines, then one polynomial per line.
    pub fn emit(&self) -> String {
        let mut s = String::new();
        s.push_str("# lawrence ml-system v1\n");
        let _ = writeln!(s, "# form: {}", self.form.as_str());
        let _ = writeln!(s, "# A: {} {}", self.matrix.rows(), self.matrix.cols());
        for i in 0..self.matrix.rows() {
            s.push_str("#  ");
            push_vector(&mut s, self.matrix.row(i));
            s.push('\n');
        }
        for (label, v) in [("u", &self.u), ("w", &self.w)] {
            let _ = write!(s, "# {label}: ");
            push_vector(&mut s, v);
            s.push('\n');
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "# seed: {seed}");
        }
        let _ = writeln!(s, "# variables: {}", self.names.join(" "));
        for p in self.all_polynomials() {
            s.push_str(&p.to_text(&self.names));
            s.push('\n');
        }
        s
    }
}

fn push_vector(s: &mut String, v: &[Rational]) {
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        write_rational(s, x);
    }
}

/// What [`parse_system`] reads back from emitted text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedSystem {
    pub form: Form,
    pub names: Vec<String>,
    pub u: Vec<Rational>,
    pub w: Vec<Rational>,
    pub polynomials: Vec<SparsePoly>,
}

pub fn parse_system(text: &str) -> Result<ParsedSystem> {
    let mut form = None;
    let mut names = None;
    let (mut u, mut w) = (Vec::new(), Vec::new());
    let mut polynomials = Vec::new();
    let vector = |t: &str| -> Result<Vec<Rational>> {
        t.split_whitespace()
            .map(|x| parse_rational(x).ok_or_else(|| Error::Invalid(format!("bad rational {x:?}"))))
            .collect()
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            let h = h.trim();
            if let Some(f) = h.strip_prefix("form:") {
                form = Some(match f.trim() {
                    "full" => Form::Full,
                    "eliminated" => Form::Eliminated,
                    other => return Err(Error::Invalid(format!("unknown form {other:?}"))),
                });
            } else if let Some(v) = h.strip_prefix("variables:") {
                names = Some(v.split_whitespace().map(ToString::to_string).collect::<Vec<_>>());
            } else if let Some(v) = h.strip_prefix("u:") {
                u = vector(v)?;
            } else if let Some(v) = h.strip_prefix("w:") {
                w = vector(v)?;
            }
            continue;
        }
        let names = names
            .as_ref()
            .ok_or_else(|| Error::Invalid("polynomial before the variables header".into()))?;
        polynomials.push(SparsePoly::parse(line, names)?);
    }
    Ok(ParsedSystem {
        form: form.ok_or_else(|| Error::Invalid("missing form header".into()))?,
        names: names.ok_or_else(|| Error::Invalid("missing variables header".into()))?,
        u,
        w,
        polynomials,
    })
}

/// Random data `(u, w)` with small nonzero numerators and denominators,
/// redrawn until `Σ (u_i + w_i) ≠ 0`.
pub fn random_data<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Vec<Rational>, Vec<Rational>) {
    let draw = |rng: &mut R| -> Rational {
        let p: i64 = loop {
            let p = rng.random_range(-9..=9);
            if p != 0 {
                break p;
            }
        };
        let q: i64 = rng.random_range(1..=5);
        Rational::new(p.into(), q.into())
    };
    loop {
        let u: Vec<Rational> = (0..n).map(|_| draw(rng)).collect();
        let w: Vec<Rational> = (0..n).map(|_| draw(rng)).collect();
        let total: Rational = u.iter().chain(&w).sum();
        if !total.is_zero() || n == 0 {
            return (u, w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fixtures::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(p: i64) -> Rational {
        Rational::from_integer(p.into())
    }

    fn circ(v: &[i64]) -> Circuit {
        Circuit::from_vector(v.to_vec()).unwrap()
    }

    #[test]
    fn two_circuit_expansion() {
        let (u, w) = (vec![r(1), r(2)], vec![r(3), r(5)]);
        let g = expand_g(&circ(&[1, -1]), &u, &w).unwrap();
        // s2 x1 - s1 x2 with s = (4, 7)
        let mut want = SparsePoly::zero(2);
        want.add_term(vec![1, 0], r(7));
        want.add_term(vec![0, 1], r(-4));
        assert_eq!(g, want);
        assert_eq!(h_formula(&circ(&[1, -1]), &[r(4), r(7)]).unwrap(), want);
    }

    #[test]
    fn odd_circuit_top_term() {
        // kernel of [[1,-1,0],[0,1,-1]] is spanned by (1,1,1)
        let v = circuits(&RatMatrix::from_rows(&[[1, -1, 0], [0, 1, -1]]).unwrap());
        assert_eq!(v[0].vector(), &[1, 1, 1]);
        let s = vec![r(1), r(2), r(3)];
        let g = expand_g(&v[0], &s, &[r(0), r(0), r(0)]).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.top_part(), SparsePoly::monomial(vec![1, 1, 1], r(2)));
        assert_eq!(h_formula(&v[0], &s).unwrap(), g.top_part());
    }

    #[test]
    fn lemma_on_example_circuits() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for c in circuits(&five_column_example()) {
            for _ in 0..5 {
                let (u, w) = random_data(5, &mut rng);
                let g = expand_g(&c, &u, &w).unwrap();
                let h = h_formula(&c, &sum(&u, &w)).unwrap();
                assert_eq!(g.top_part(), h);
                if c.len() % 2 == 0 {
                    assert!(g.homogeneous_part(c.len() as u32).is_zero());
                }
            }
        }
    }

    #[test]
    fn non_unit_and_length_errors() {
        let v = circ(&[2, -1]);
        assert_eq!(expand_g(&v, &[r(1), r(1)], &[r(1), r(1)]), Err(Error::NonUnitCircuitEntry));
        assert!(matches!(
            expand_g(&circ(&[1, -1]), &[r(1)], &[r(1), r(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn example_system_shapes() {
        let a = five_column_example();
        let u: Vec<Rational> = (1..=5).map(r).collect();
        let w: Vec<Rational> = (1..=5).map(|i| r(2 * i)).collect();
        let full = build_ml_system(&a, &u, &w, Form::Full).unwrap();
        assert_eq!(full.polynomials.len(), 3);
        assert_eq!(full.linear_rows.rows(), 4 + 5);
        assert_eq!(full.names.len(), 10);
        let el = build_ml_system(&a, &u, &w, Form::Eliminated).unwrap();
        assert_eq!(el.polynomials.len(), 3);
        assert_eq!(el.linear_rows.rows(), 4);
        assert_eq!(el.names.len(), 5);
        let free = build_ml_system(&RatMatrix::identity(2).unwrap(), &u[..2], &w[..2], Form::Full).unwrap();
        assert!(free.polynomials.is_empty());
    }

    #[test]
    fn data_point_satisfies_the_linear_part() {
        // x = u, y = w solves the linear equations
        let a = complete_bipartite(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (u, w) = random_data(4, &mut rng);
        let s = build_ml_system(&a, &u, &w, Form::Full).unwrap();
        let point: Vec<Rational> = u.iter().chain(&w).cloned().collect();
        for p in s.linear_polys() {
            assert!(p.eval(&point).is_zero());
        }
    }

    #[test]
    fn emission_round_trip() {
        let a = five_column_example();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (u, w) = random_data(5, &mut rng);
        for form in [Form::Full, Form::Eliminated] {
            let mut s = build_ml_system(&a, &u, &w, form).unwrap();
            s.seed = Some(7);
            let text = s.emit();
            assert_eq!(text, s.emit());
            let back = parse_system(&text).unwrap();
            assert_eq!(back.form, form);
            assert_eq!(back.polynomials, s.all_polynomials());
            assert_eq!((back.u, back.w), (u.clone(), w.clone()));
        }
    }

    #[test]
    fn random_data_is_seeded() {
        let a = random_data(6, &mut ChaCha8Rng::seed_from_u64(1));
        let b = random_data(6, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
        let total: Rational = a.0.iter().chain(&a.1).sum();
        assert!(!total.is_zero());
    }
}
