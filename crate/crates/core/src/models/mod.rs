//! Model matrices from algebraic statistics: no-three-way interaction,
//! hierarchical and quasi-independence models, plus closed formulas for
//! complete bipartite graphs.
//!
//! States are 0-based and enumerated lexicographically with the last
//! variable changing fastest. Facets are 0-based sorted index sets.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::RatMatrix;
use crate::graphs::{incidence, Graph};
use crate::toric::{degree, lawrence_lift, mldeg};

/// A simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Facets are sorted and deduplicated; they must lie in `0..n` and be
    /// pairwise incomparable.
    pub fn new(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::Invalid("complex needs at least one facet".into()));
        }
        let mut fs = Vec::with_capacity(facets.len());
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if f.iter().any(|&i| i >= n) {
                return Err(Error::Invalid(format!("facet {f:?} leaves the ground set")));
            }
            fs.push(f);
        }
        for (a, fa) in fs.iter().enumerate() {
            for (b, fb) in fs.iter().enumerate() {
                if a != b && fa.iter().all(|x| fb.binary_search(x).is_ok()) {
                    return Err(Error::Invalid(format!("facet {fa:?} lies in {fb:?}")));
                }
            }
        }
        Ok(SimplicialComplex { n, facets: fs })
    }

    /// All `(n-1)`-subsets of `0..n`, lexicographically.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets = (0..n)
            .rev()
            .map(|skip| (0..n).filter(|&i| i != skip).collect())
            .collect();
        SimplicialComplex { n, facets }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }
}

fn check_states(n: usize, r: &[usize]) -> Result<()> {
    if r.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: r.len() });
    }
    if r.contains(&0) {
        return Err(Error::Invalid("every variable needs at least one state".into()));
    }
    Ok(())
}

/// `r_F`, with `r_∅ = 1`.
pub fn r_of(r: &[usize], f: &[usize]) -> usize {
    f.iter().map(|&i| r[i]).product()
}

// lexicographic index of `state` restricted to `axes`
fn lex(state: &[usize], axes: &[usize], r: &[usize]) -> usize {
    axes.iter().fold(0, |acc, &i| acc * r[i] + state[i])
}

fn states(r: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = r.iter().product();
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0; r.len()];
    for _ in 0..total {
        out.push(cur.clone());
        for i in (0..r.len()).rev() {
            cur[i] += 1;
            if cur[i] < r[i] {
                break;
            }
            cur[i] = 0;
        }
    }
    out
}

/// `A_{(F,i),k} = 1` when `k` restricted to `F` is `i`. Rows: facets in
/// the given order, marginal states lexicographically. Columns: joint
/// states lexicographically.
pub fn hierarchical_matrix(g: &SimplicialComplex, r: &[usize]) -> Result<RatMatrix> {
    check_states(g.n, r)?;
    let mut offs = Vec::with_capacity(g.facets.len());
    let mut d = 0;
    for f in &g.facets {
        offs.push(d);
        d += r_of(r, f);
    }
    let all = states(r);
    let mut a = RatMatrix::zeros(d, all.len())?;
    for (col, k) in all.iter().enumerate() {
        for (f, off) in g.facets.iter().zip(&offs) {
            a.set(off + lex(k, f, r), col, One::one());
        }
    }
    Ok(a)
}

/// Rows `(a,ij)`, `(b,jk)`, `(c,ik)`; columns `(i,j,k)` lexicographically.
pub fn no_three_way_matrix(m1: usize, m2: usize, m3: usize) -> Result<RatMatrix> {
    let g = SimplicialComplex {
        n: 3,
        facets: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
    };
    hierarchical_matrix(&g, &[m1, m2, m3])
}

/// Last binary axis of `m` and the sizes of the other two.
fn binary_axis(m: [usize; 3]) -> Result<(usize, usize, usize)> {
    let b = (0..3)
        .rev()
        .find(|&i| m[i] == 2)
        .ok_or_else(|| Error::Invalid("no axis has two states".into()))?;
    let (p, q) = match b {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    Ok((b, p, q))
}

/// `(R, C)` with `N.permuted(R, C) = Λ(A_{K(p,q)})`, where `N` is the
/// no-three-way matrix for `m` and `p, q` are the sizes of the axes other
/// than the last binary one.
pub fn no_three_way_lawrence_permutation(m: [usize; 3]) -> Result<(Vec<usize>, Vec<usize>)> {
    let (b, p, q) = binary_axis(m)?;
    let facets = [[0, 1], [1, 2], [0, 2]];
    let offs = [0, m[0] * m[1], m[0] * m[1] + m[1] * m[2]];
    let row = |state: [usize; 3], x: usize, y: usize| {
        let f = facets
            .iter()
            .position(|f| f.contains(&x) && f.contains(&y))
            .expect("every pair of axes is a facet");
        offs[f] + lex(&state, &facets[f], &m)
    };
    let at = |tp: usize, tq: usize, tb: usize| {
        let mut s = [0; 3];
        s[p] = tp;
        s[q] = tq;
        s[b] = tb;
        s
    };
    let mut rows = Vec::new();
    for c in 0..2 {
        rows.extend((0..m[p]).map(|tp| row(at(tp, 0, c), p, b)));
        rows.extend((0..m[q]).map(|tq| row(at(0, tq, c), q, b)));
    }
    for tp in 0..m[p] {
        rows.extend((0..m[q]).map(|tq| row(at(tp, tq, 0), p, q)));
    }
    let mut cols = Vec::new();
    for c in 0..2 {
        for tp in 0..m[p] {
            cols.extend((0..m[q]).map(|tq| lex(&at(tp, tq, c), &[0, 1, 2], &m)));
        }
    }
    Ok((rows, cols))
}

/// Facets `[n]` followed by each `F ∪ {n+1}`.
pub fn lawrence_complex(g: &SimplicialComplex) -> Result<SimplicialComplex> {
    let mut facets = vec![(0..g.n).collect::<Vec<_>>()];
    for f in &g.facets {
        let mut h = f.clone();
        h.push(g.n);
        facets.push(h);
    }
    SimplicialComplex::new(g.n + 1, facets)
}

/// `(R, C)` with `A_{Λ(Γ),(r,2)}.permuted(R, C) = Λ(A_{Γ,r})`.
pub fn lawrence_complex_permutation(g: &SimplicialComplex, r: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    check_states(g.n, r)?;
    let total: usize = r.iter().product();
    let sizes: Vec<usize> = g.facets.iter().map(|f| r_of(r, f)).collect();
    let mut rows = Vec::new();
    for s in 0..2 {
        let mut off = total;
        for &size in &sizes {
            rows.extend((0..size).map(|t| off + 2 * t + s));
            off += 2 * size;
        }
    }
    rows.extend(0..total);
    let cols = (0..2).flat_map(|s| (0..total).map(move |k| 2 * k + s)).collect();
    Ok((rows, cols))
}

/// Carry `M.permuted(R, C) = M'` for a `d × n` matrix `M` to the lifts:
/// `Λ(M).permuted(R', C') = Λ(M')`.
pub fn lift_permutation(rows: &[usize], cols: &[usize], d: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut r = rows.to_vec();
    r.extend(rows.iter().map(|&x| x + d));
    r.extend(cols.iter().map(|&x| x + 2 * d));
    let mut c = cols.to_vec();
    c.extend(cols.iter().map(|&x| x + n));
    (r, c)
}

/// Drop the given columns.
pub fn quasi_independence_matrix(base: &RatMatrix, removed: &[usize]) -> Result<RatMatrix> {
    if let Some(&bad) = removed.iter().find(|&&c| c >= base.cols()) {
        return Err(Error::Invalid(format!("column {bad} out of range")));
    }
    let keep: Vec<usize> = (0..base.cols()).filter(|c| !removed.contains(c)).collect();
    base.select_columns(&keep)
}

/// `m1^{m2-1} m2^{m1-1}`, the number of spanning trees of `K(m1, m2)`.
pub fn closed_degree_k(m1: usize, m2: usize) -> BigUint {
    assert!(m1 >= 1 && m2 >= 1, "K(m1, m2) needs m1, m2 >= 1");
    Pow::pow(BigUint::from(m1), m2 - 1) * Pow::pow(BigUint::from(m2), m1 - 1)
}

/// `Σ_{k=1}^{m1} (1/k Σ_{i=1}^{k} (-1)^{m1-i} C(k,i) i^{m1}) k^{m2}`.
///
/// # Panics
/// If an inner sum is not divisible by `k`.
pub fn closed_mldeg_k(m1: usize, m2: usize) -> BigUint {
    assert!(m1 >= 1 && m2 >= 1, "K(m1, m2) needs m1, m2 >= 1");
    let mut total = BigInt::zero();
    for k in 1..=m1 {
        let mut inner = BigInt::zero();
        for i in 1..=k {
            let term = binomial(BigInt::from(k), BigInt::from(i)) * Pow::pow(BigInt::from(i), m1);
            if (m1 - i) % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        let (q, rem) = inner.div_rem(&BigInt::from(k));
        assert!(rem.is_zero(), "inner sum for k = {k} is not divisible by k");
        total += q * Pow::pow(BigInt::from(k), m2);
    }
    assert!(!total.is_negative(), "negative ML degree");
    total.to_biguint().expect("nonnegative")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Pipeline,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Pipeline => "pipeline",
        }
    }
}

/// Degree and ML degree of a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelValues {
    pub degree: BigUint,
    pub mldeg: BigUint,
    pub method: Method,
    /// The other route also ran and agreed.
    pub cross_checked: bool,
}

/// Tutte pipeline on `A`, giving the values for `X_{Λ(A)}`.
pub fn pipeline_values(a: &RatMatrix) -> Result<(BigUint, BigUint)> {
    Ok((BigUint::from(degree(a)?), BigUint::from(mldeg(a)?)))
}

fn agree(closed: (BigUint, BigUint), piped: Option<(BigUint, BigUint)>) -> Result<ModelValues> {
    let cross_checked = match &piped {
        Some(p) if *p != closed => {
            return Err(Error::Invalid(format!(
                "closed form {closed:?} disagrees with pipeline {p:?}"
            )))
        }
        Some(_) => true,
        None => false,
    };
    Ok(ModelValues {
        degree: closed.0,
        mldeg: closed.1,
        method: Method::ClosedForm,
        cross_checked,
    })
}

/// `X_{Λ(A_{K(m1,m2)})}`; the pipeline also runs when `m1 * m2 <= cap`.
pub fn complete_bipartite_values(m1: usize, m2: usize, cap: usize) -> Result<ModelValues> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::Invalid("K(m1, m2) needs m1, m2 >= 1".into()));
    }
    let closed = (closed_degree_k(m1, m2), closed_mldeg_k(m1, m2));
    let piped = if m1 * m2 <= cap {
        Some(pipeline_values(&incidence(&Graph::complete_bipartite(m1, m2))?)?)
    } else {
        None
    };
    agree(closed, piped)
}

/// `M_{m1,m2,m3}` with a binary axis, through `Λ(A_{K(p,q)})`.
pub fn no_three_way_values(m: [usize; 3], cap: usize) -> Result<ModelValues> {
    let (_, p, q) = binary_axis(m)?;
    let (mp, mq) = (m[p], m[q]);
    if mp == 0 || mq == 0 {
        return Err(Error::Invalid("every axis needs at least one state".into()));
    }
    if mp * mq <= cap {
        let (rows, cols) = no_three_way_lawrence_permutation(m)?;
        let n = no_three_way_matrix(m[0], m[1], m[2])?;
        let k = incidence(&Graph::complete_bipartite(mp, mq))?;
        if n.permuted(&rows, &cols)? != lawrence_lift(&k)? {
            return Err(Error::Invalid("no-three-way identification failed".into()));
        }
    }
    complete_bipartite_values(mp, mq, cap)
}

/// For two facets `F, T` covering the ground set, with `S = F ∩ T`:
/// `(τ_{K(m1,m2)}(1,1))^{r_S}` and `(τ_{K(m1,m2)}(1,0))^{r_S}` where
/// `m1 = r_{F∖S}`, `m2 = r_{T∖S}`. These are the values for
/// `X_{A_{Λ(Γ),(r,2)}}`.
pub fn two_facet_formulas(g: &SimplicialComplex, r: &[usize]) -> Result<(BigUint, BigUint)> {
    check_states(g.n, r)?;
    let [f, t] = g.facets.as_slice() else {
        return Err(Error::Invalid("complex must have exactly two facets".into()));
    };
    if (0..g.n).any(|i| !f.contains(&i) && !t.contains(&i)) {
        return Err(Error::Invalid("the two facets must cover the ground set".into()));
    }
    let s: Vec<usize> = f.iter().copied().filter(|i| t.contains(i)).collect();
    let f_only: Vec<usize> = f.iter().copied().filter(|i| !s.contains(i)).collect();
    let t_only: Vec<usize> = t.iter().copied().filter(|i| !s.contains(i)).collect();
    let (m1, m2) = (r_of(r, &f_only), r_of(r, &t_only));
    let rs = u32::try_from(r_of(r, &s)).map_err(|_| Error::Invalid("r_S too large".into()))?;
    Ok((
        Pow::pow(closed_degree_k(m1, m2), rs),
        Pow::pow(closed_mldeg_k(m1, m2), rs),
    ))
}

/// [`two_facet_formulas`], checked against the pipeline on `A_{Γ,r}` when
/// it has at most `cap` columns. The check also confirms
/// `A_{Λ(Γ),(r,2)} ≅ Λ(A_{Γ,r})`.
pub fn two_facet_values(g: &SimplicialComplex, r: &[usize], cap: usize) -> Result<ModelValues> {
    let closed = two_facet_formulas(g, r)?;
    let cols: usize = r.iter().product();
    let piped = if cols <= cap {
        let a = hierarchical_matrix(g, r)?;
        let mut r2 = r.to_vec();
        r2.push(2);
        let lifted = hierarchical_matrix(&lawrence_complex(g)?, &r2)?;
        let (rows, cs) = lawrence_complex_permutation(g, r)?;
        if lifted.permuted(&rows, &cs)? != lawrence_lift(&a)? {
            return Err(Error::Invalid("Lawrence complex identification failed".into()));
        }
        Some(pipeline_values(&a)?)
    } else {
        None
    };
    agree(closed, piped)
}

/// `(2^n, 2^n - 1)` for the boundary of the `n`-simplex with binary states.
/// Its matrix is `Λ(B)` with `B = Λ^{n-2}(A_{K(2,2)})`, which has `2^n`
/// columns; the pipeline runs on `B` when `n <= cap`.
pub fn simplex_boundary_values(n: usize, cap: usize) -> Result<ModelValues> {
    if n < 2 {
        return Err(Error::Invalid("simplex boundary needs n >= 2".into()));
    }
    let e = u32::try_from(n).map_err(|_| Error::Invalid("n too large".into()))?;
    let top = Pow::pow(BigUint::from(2u8), e);
    let closed = (top.clone(), top - 1u8);
    let piped = if n <= cap {
        let mut b = incidence(&Graph::complete_bipartite(2, 2))?;
        for _ in 2..n {
            b = lawrence_lift(&b)?;
        }
        Some(pipeline_values(&b)?)
    } else {
        None
    };
    agree(closed, piped)
}
