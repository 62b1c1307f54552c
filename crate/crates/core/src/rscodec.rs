//! Interpolation and unique decoding of univariate polynomials from
//! evaluation pairs that may include the point at infinity.
//!
//! A pair `(∞, c)` pins the coefficient of `X^d`. Decoding is
//! Berlekamp-Welch over a linear system, trying error counts in ascending
//! order; every candidate is checked against the received pairs before it is
//! returned, so a result always lies within the unique-decoding radius.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::polynomial::{dense, UnivariatePoly};
use crate::projspace::LineParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalPair {
    pub param: LineParam,
    pub value: FieldElement,
}

impl EvalPair {
    pub fn finite(x: FieldElement, value: FieldElement) -> Self {
        EvalPair { param: LineParam::Finite(x), value }
    }

    pub fn infinity(value: FieldElement) -> Self {
        EvalPair { param: LineParam::Infinity, value }
    }
}

/// A successful decode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub poly: UnivariatePoly,
    /// Number of pairs the polynomial disagrees with.
    pub errors: usize,
}

fn check_distinct(pairs: &[EvalPair]) -> Result<()> {
    let mut seen = HashSet::with_capacity(pairs.len());
    if pairs.iter().all(|p| seen.insert(p.param)) {
        Ok(())
    } else {
        Err(Error::DuplicateParam)
    }
}

/// Lagrange interpolation through `(xs[i], ys[i])`; the result has `len`
/// coefficients.
fn lagrange(field: &FieldSpec, xs: &[FieldElement], ys: &[FieldElement], len: usize) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ZERO; len];
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = vec![FieldElement::ONE];
        let mut denom = FieldElement::ONE;
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                basis = dense::mul(field, &basis, &[field.neg(xj), FieldElement::ONE]);
                denom = field.mul(denom, field.sub(xi, xj));
            }
        }
        let scale = field.mul(yi, field.inv(denom).expect("distinct nodes"));
        for (o, b) in out.iter_mut().zip(&basis) {
            *o = field.add(*o, field.mul(scale, *b));
        }
    }
    out
}

/// The unique `H` with degree bound `d` through exactly `d + 1` pairs.
pub fn interpolate(field: &FieldSpec, pairs: &[EvalPair], d: u32) -> Result<UnivariatePoly> {
    let d = d as usize;
    if pairs.len() != d + 1 {
        return Err(Error::PairCount { expected: d + 1, actual: pairs.len() });
    }
    check_distinct(pairs)?;
    let mut xs = Vec::with_capacity(d + 1);
    let mut ys = Vec::with_capacity(d + 1);
    let mut lead = None;
    for p in pairs {
        match p.param {
            LineParam::Finite(x) => {
                xs.push(x);
                ys.push(p.value);
            }
            LineParam::Infinity => lead = Some(p.value),
        }
    }
    let coeffs = match lead {
        None => lagrange(field, &xs, &ys, d + 1),
        Some(c) => {
            // H = c X^d + G with deg G <= d - 1 through the adjusted values.
            let adjusted: Vec<_> =
                xs.iter().zip(&ys).map(|(&x, &y)| field.sub(y, field.mul(c, field.pow(x, d as u64)))).collect();
            let mut g = lagrange(field, &xs, &adjusted, d + 1);
            g[d] = c;
            g
        }
    };
    UnivariatePoly::new(coeffs)
}

/// Solves `A x = b` (rows are `[A | b]`), setting free variables to zero.
fn solve(field: &FieldSpec, mut rows: Vec<Vec<FieldElement>>, unknowns: usize) -> Option<Vec<FieldElement>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][col]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = field.sub(*x, field.mul(factor, pv));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    // inconsistent if some zero row has a nonzero right-hand side
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![FieldElement::ZERO; unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][unknowns];
    }
    Some(x)
}

/// One Berlekamp-Welch attempt with a monic error locator of degree `e`.
/// When `lead` is set, the `X^(e+d)` coefficient of `Q` is pinned to it.
fn berlekamp_welch(
    field: &FieldSpec,
    finite: &[(FieldElement, FieldElement)],
    lead: Option<FieldElement>,
    e: usize,
    d: usize,
) -> Option<Vec<FieldElement>> {
    // unknowns: E_0..E_{e-1}, then Q_0..Q_{e+d}
    let q_len = e + d + 1;
    let unknowns = e + q_len;
    let mut rows = Vec::with_capacity(finite.len() + 1);
    for &(x, y) in finite {
        let mut row = Vec::with_capacity(unknowns + 1);
        let mut xp = FieldElement::ONE;
        let mut powers = Vec::with_capacity(q_len);
        for _ in 0..q_len {
            powers.push(xp);
            xp = field.mul(xp, x);
        }
        for &pw in &powers[..e] {
            row.push(field.neg(field.mul(y, pw)));
        }
        row.extend_from_slice(&powers);
        row.push(field.mul(y, powers[e]));
        rows.push(row);
    }
    if let Some(c) = lead {
        let mut row = vec![FieldElement::ZERO; unknowns + 1];
        row[unknowns - 1] = FieldElement::ONE;
        row[unknowns] = c;
        rows.push(row);
    }
    if rows.is_empty() {
        return None;
    }
    let sol = solve(field, rows, unknowns)?;
    let mut locator = sol[..e].to_vec();
    locator.push(FieldElement::ONE);
    let (quot, rem) = dense::div_rem(field, &sol[e..], &locator);
    if dense::degree(&rem).is_some() {
        return None;
    }
    // deg Q <= e + d and deg E = e, so the quotient has exactly d + 1 slots
    let mut h = quot;
    h.resize(d + 1, FieldElement::ZERO);
    Some(h)
}

fn disagreements(field: &FieldSpec, h: &UnivariatePoly, pairs: &[EvalPair]) -> usize {
    pairs.iter().filter(|p| h.eval(field, p.param) != p.value).count()
}

/// Largest number of errors correctable from `n` pairs at degree bound `d`.
pub fn decoding_radius(n: usize, d: u32) -> usize {
    n.saturating_sub(d as usize + 1) / 2
}

/// Finds the polynomial with degree bound `d` that disagrees with at most
/// `⌊(N - d - 1) / 2⌋` pairs, or `None` if there is none.
pub fn decode(field: &FieldSpec, pairs: &[EvalPair], d: u32) -> Result<Option<Decoded>> {
    if pairs.len() < d as usize + 1 {
        return Err(Error::PairCount { expected: d as usize + 1, actual: pairs.len() });
    }
    check_distinct(pairs)?;
    let mut finite = Vec::with_capacity(pairs.len());
    let mut lead = None;
    for p in pairs {
        match p.param {
            LineParam::Finite(x) => finite.push((x, p.value)),
            LineParam::Infinity => lead = Some(p.value),
        }
    }
    // With N >= 2e + d + 1 every solution of the system satisfies Q = hE, so
    // the full radius also covers fewer errors.
    let e = decoding_radius(pairs.len(), d);
    let d = d as usize;
    let mut candidates = vec![berlekamp_welch(field, &finite, lead, e, d)];
    // The ∞ pair itself may be one of the errors: drop it and look for at
    // most e - 1 errors among the finite pairs.
    if lead.is_some() && e >= 1 {
        candidates.push(berlekamp_welch(field, &finite, None, e - 1, d));
    }
    for coeffs in candidates.into_iter().flatten() {
        let poly = UnivariatePoly::new(coeffs)?;
        let errors = disagreements(field, &poly, pairs);
        if errors <= e {
            return Ok(Some(Decoded { poly, errors }));
        }
    }
    Ok(None)
}
