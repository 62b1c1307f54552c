//! Polynomials over GF(q): homogeneous forms, bounded-degree multivariate
//! polynomials, and univariate polynomials with an evaluation at infinity.
//!
//! Monomial order for homogeneous polynomials in `X_0, ..., X_m` of degree
//! `d`: exponent vectors `(d_0, ..., d_m)` with `Σ d_j = d`, lexicographically
//! descending with `d_0` most significant. For `X_0^2, X_0 X_1, X_1^2` the
//! coefficient vector is `[c_20, c_11, c_02]`.
//!
//! Bounded-degree polynomials in `X_1, ..., X_m` order monomials by total
//! degree ascending, then lexicographically descending within a degree.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::projspace::{LineParam, ProjPoint};

/// `C(n, k)` with saturation on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Exponent vectors of the degree-`d` monomials in `num_vars` variables, in
/// lexicographically descending order.
pub fn homogeneous_monomials(num_vars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, vars_left: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
        if vars_left == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            rec(prefix, vars_left - 1, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(num_vars), num_vars, d, &mut out);
    out
}

/// Exponent vectors of all monomials of total degree at most `d`.
pub fn bounded_monomials(num_vars: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|t| homogeneous_monomials(num_vars, t)).collect()
}

/// `Π x_j^{e_j}` using per-variable power tables.
fn monomial_value(field: &FieldSpec, powers: &[Vec<FieldElement>], exps: &[u32]) -> FieldElement {
    exps.iter().zip(powers).fold(FieldElement::ONE, |acc, (&e, pw)| field.mul(acc, pw[e as usize]))
}

fn power_table(field: &FieldSpec, point: &[FieldElement], d: u32) -> Vec<Vec<FieldElement>> {
    point
        .iter()
        .map(|&x| {
            let mut row = Vec::with_capacity(d as usize + 1);
            let mut acc = FieldElement::ONE;
            row.push(acc);
            for _ in 0..d {
                acc = field.mul(acc, x);
                row.push(acc);
            }
            row
        })
        .collect()
}

fn eval_sum(
    field: &FieldSpec,
    monomials: &[Vec<u32>],
    coeffs: &[FieldElement],
    point: &[FieldElement],
    d: u32,
) -> FieldElement {
    let powers = power_table(field, point, d);
    monomials.iter().zip(coeffs).fold(FieldElement::ZERO, |acc, (exps, &c)| {
        if c.is_zero() {
            acc
        } else {
            field.add(acc, field.mul(c, monomial_value(field, &powers, exps)))
        }
    })
}

/// A homogeneous polynomial of degree `d` in `m + 1` variables. The zero
/// polynomial is the all-zero coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoly {
    num_vars: usize,
    degree: u32,
    coeffs: Vec<FieldElement>,
    monomials: Vec<Vec<u32>>,
}

impl HomogeneousPoly {
    pub fn new(num_vars: usize, degree: u32, coeffs: Vec<FieldElement>) -> Result<Self> {
        let monomials = homogeneous_monomials(num_vars, degree);
        if coeffs.len() != monomials.len() {
            return Err(Error::DimensionMismatch { expected: monomials.len(), actual: coeffs.len() });
        }
        Ok(HomogeneousPoly { num_vars, degree, coeffs, monomials })
    }

    pub fn zero(num_vars: usize, degree: u32) -> Self {
        let monomials = homogeneous_monomials(num_vars, degree);
        let coeffs = vec![FieldElement::ZERO; monomials.len()];
        HomogeneousPoly { num_vars, degree, coeffs, monomials }
    }

    /// Builds a polynomial from `(exponents, coefficient)` terms; repeated
    /// exponents accumulate.
    pub fn from_terms(field: &FieldSpec, num_vars: usize, degree: u32, terms: &[(&[u32], u32)]) -> Result<Self> {
        let mut poly = Self::zero(num_vars, degree);
        for (exps, c) in terms {
            let idx = poly
                .monomials
                .iter()
                .position(|m| m.as_slice() == *exps)
                .ok_or_else(|| Error::InvalidSpec(format!("{exps:?} is not a degree-{degree} monomial")))?;
            poly.coeffs[idx] = field.add(poly.coeffs[idx], field.element(*c)?);
        }
        Ok(poly)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn eval(&self, field: &FieldSpec, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, actual: point.len() });
        }
        Ok(eval_sum(field, &self.monomials, &self.coeffs, point, self.degree))
    }

    /// Restricts the form to the line through `w` and `v`: returns `H` with
    /// `H(λ) = F(w + λv)` for every finite λ and leading coefficient `F(v)`.
    pub fn restrict_to_line(&self, field: &FieldSpec, w: &ProjPoint, v: &ProjPoint) -> Result<UnivariatePoly> {
        for pt in [w, v] {
            if pt.len() != self.num_vars {
                return Err(Error::DimensionMismatch { expected: self.num_vars, actual: pt.len() });
            }
        }
        if w == v {
            return Err(Error::SamePoint);
        }
        let d = self.degree as usize;
        // factor_powers[j][e] = (w_j + v_j X)^e
        let factor_powers: Vec<Vec<Vec<FieldElement>>> = w
            .coords()
            .iter()
            .zip(v.coords())
            .map(|(&wj, &vj)| {
                let linear = [wj, vj];
                let mut row = vec![vec![FieldElement::ONE]];
                for e in 0..d {
                    row.push(dense::mul(field, &row[e], &linear));
                }
                row
            })
            .collect();
        let mut out = vec![FieldElement::ZERO; d + 1];
        for (exps, &c) in self.monomials.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut term = vec![FieldElement::ONE];
            for (j, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = dense::mul(field, &term, &factor_powers[j][e as usize]);
                }
            }
            for (o, t) in out.iter_mut().zip(&term) {
                *o = field.add(*o, field.mul(c, *t));
            }
        }
        Ok(UnivariatePoly { coeffs: out })
    }
}

/// A polynomial of total degree at most `d` in `m` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedDegreePoly {
    num_vars: usize,
    degree_bound: u32,
    coeffs: Vec<FieldElement>,
    monomials: Vec<Vec<u32>>,
}

impl BoundedDegreePoly {
    pub fn new(num_vars: usize, degree_bound: u32, coeffs: Vec<FieldElement>) -> Result<Self> {
        let monomials = bounded_monomials(num_vars, degree_bound);
        if coeffs.len() != monomials.len() {
            return Err(Error::DimensionMismatch { expected: monomials.len(), actual: coeffs.len() });
        }
        Ok(BoundedDegreePoly { num_vars, degree_bound, coeffs, monomials })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn eval(&self, field: &FieldSpec, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, actual: point.len() });
        }
        Ok(eval_sum(field, &self.monomials, &self.coeffs, point, self.degree_bound))
    }
}

/// A univariate polynomial with a fixed degree bound `d`. Its value at ∞ is
/// the coefficient of `X^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnivariatePoly {
    coeffs: Vec<FieldElement>,
}

impl UnivariatePoly {
    /// Coefficients low-order first; the length fixes the degree bound.
    pub fn new(coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec("univariate polynomial needs at least one coefficient".into()));
        }
        Ok(UnivariatePoly { coeffs })
    }

    pub fn zero(degree_bound: u32) -> Self {
        UnivariatePoly { coeffs: vec![FieldElement::ZERO; degree_bound as usize + 1] }
    }

    pub fn degree_bound(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn at_infinity(&self) -> FieldElement {
        *self.coeffs.last().unwrap()
    }

    /// Horner evaluation at a field element.
    pub fn eval_at(&self, field: &FieldSpec, x: FieldElement) -> FieldElement {
        dense::eval(field, &self.coeffs, x)
    }

    pub fn eval(&self, field: &FieldSpec, at: LineParam) -> FieldElement {
        match at {
            LineParam::Finite(x) => self.eval_at(field, x),
            LineParam::Infinity => self.at_infinity(),
        }
    }
}

/// Dense univariate arithmetic on coefficient slices (low-order first).
pub(crate) mod dense {
    use crate::field::{FieldElement, FieldSpec};

    pub fn eval(field: &FieldSpec, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
        coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn mul(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(x, y));
            }
        }
        out
    }

    pub fn degree(a: &[FieldElement]) -> Option<usize> {
        a.iter().rposition(|c| !c.is_zero())
    }

    /// Quotient and remainder of `a / b`; `b` must be nonzero.
    pub fn div_rem(
        field: &FieldSpec,
        a: &[FieldElement],
        b: &[FieldElement],
    ) -> (Vec<FieldElement>, Vec<FieldElement>) {
        let db = degree(b).expect("division by the zero polynomial");
        let lead_inv = field.inv(b[db]).expect("nonzero leading coefficient");
        let mut rem = a.to_vec();
        let qlen = a.len().saturating_sub(db).max(1);
        let mut quot = vec![FieldElement::ZERO; qlen];
        while let Some(dr) = degree(&rem) {
            if dr < db {
                break;
            }
            let factor = field.mul(rem[dr], lead_inv);
            let shift = dr - db;
            quot[shift] = factor;
            for (i, &bi) in b[..=db].iter().enumerate() {
                rem[shift + i] = field.sub(rem[shift + i], field.mul(factor, bi));
            }
        }
        (quot, rem)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    m: usize,
    d: u32,
    coeffs: Vec<FieldElement>,
}

impl Serialize for HomogeneousPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr { m: self.num_vars - 1, d: self.degree, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        HomogeneousPoly::new(r.m + 1, r.d, r.coeffs).map_err(serde::de::Error::custom)
    }
}

impl Serialize for BoundedDegreePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr { m: self.num_vars, d: self.degree_bound, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundedDegreePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        BoundedDegreePoly::new(r.m, r.d, r.coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projspace::{enumerate_points, normalize};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(v: u32) -> FieldElement {
        FieldElement(v)
    }

    fn fes(v: &[u32]) -> Vec<FieldElement> {
        v.iter().map(|&x| fe(x)).collect()
    }

    fn random_hom(field: &FieldSpec, num_vars: usize, d: u32, rng: &mut impl Rng) -> HomogeneousPoly {
        let len = homogeneous_monomials(num_vars, d).len();
        let coeffs = (0..len).map(|_| fe(rng.gen_range(0..field.q()))).collect();
        HomogeneousPoly::new(num_vars, d, coeffs).unwrap()
    }

    // Counts compositions directly, independent of the recursive generator.
    fn count_exponent_vectors(num_vars: usize, max_total: u32, exact: bool) -> usize {
        let mut count = 0;
        let total = (max_total as usize + 1).pow(num_vars as u32);
        for code in 0..total {
            let mut c = code;
            let mut sum = 0;
            for _ in 0..num_vars {
                sum += c % (max_total as usize + 1);
                c /= max_total as usize + 1;
            }
            if (exact && sum == max_total as usize) || (!exact && sum <= max_total as usize) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn monomial_order_and_counts() {
        assert_eq!(homogeneous_monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(bounded_monomials(2, 1), vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        for vars in 1..=4usize {
            for d in 0..=4u32 {
                let hom = homogeneous_monomials(vars, d).len();
                let bounded = bounded_monomials(vars, d).len();
                assert_eq!(hom, count_exponent_vectors(vars, d, true));
                assert_eq!(bounded, count_exponent_vectors(vars, d, false));
                // C(m + d, d) with m + 1 homogeneous variables, or m affine ones
                assert_eq!(hom as u128, binomial((vars - 1) as u64 + d as u64, d as u64));
                assert_eq!(bounded as u128, binomial(vars as u64 + d as u64, d as u64));
            }
        }
    }

    #[test]
    fn eval_hom_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        let xy = HomogeneousPoly::from_terms(&f, 2, 2, &[(&[1, 1], 1)]).unwrap();
        assert_eq!(xy.eval(&f, &fes(&[1, 2])).unwrap(), fe(2));
        assert_eq!(xy.eval(&f, &fes(&[2, 2])).unwrap(), fe(1));
        assert_eq!(xy.eval(&f, &fes(&[1, 1])).unwrap(), fe(1));
        assert_eq!(xy.eval(&f, &fes(&[0, 0])).unwrap(), fe(0));
        assert!(xy.eval(&f, &fes(&[1, 1, 1])).is_err());
        // 0^0 = 1: X0^2 at (1, 0)
        let x0sq = HomogeneousPoly::from_terms(&f, 2, 2, &[(&[2, 0], 1)]).unwrap();
        assert_eq!(x0sq.eval(&f, &fes(&[1, 0])).unwrap(), fe(1));
    }

    #[test]
    fn restrict_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        let p = |c: &[u32]| ProjPoint::from_normalized(fes(c)).unwrap();
        let xy = HomogeneousPoly::from_terms(&f, 2, 2, &[(&[1, 1], 1)]).unwrap();
        let h = xy.restrict_to_line(&f, &p(&[1, 0]), &p(&[0, 1])).unwrap();
        assert_eq!(h.coeffs(), fes(&[0, 1, 0]).as_slice());

        let sum = HomogeneousPoly::from_terms(&f, 2, 1, &[(&[1, 0], 1), (&[0, 1], 1)]).unwrap();
        let h = sum.restrict_to_line(&f, &p(&[0, 1]), &p(&[1, 0])).unwrap();
        assert_eq!(h.coeffs(), fes(&[1, 1]).as_slice());
        assert_eq!(h.at_infinity(), sum.eval(&f, &fes(&[1, 0])).unwrap());

        assert!(matches!(sum.restrict_to_line(&f, &p(&[1, 1]), &p(&[1, 1])), Err(Error::SamePoint)));
    }

    #[test]
    fn eval_univariate_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        let h = UnivariatePoly::new(fes(&[1, 1])).unwrap();
        assert_eq!(h.eval(&f, LineParam::Finite(fe(2))), fe(0));
        assert_eq!(h.eval(&f, LineParam::Infinity), fe(1));
        let c = UnivariatePoly::new(fes(&[2])).unwrap();
        for x in f.elements() {
            assert_eq!(c.eval_at(&f, x), fe(2));
        }
    }

    #[test]
    fn homogeneity_and_line_restriction_exhaustive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u32, 3, 5] {
            let f = FieldSpec::new(p, 1).unwrap();
            for m in 1..=2usize {
                let pts = enumerate_points(&f, m).unwrap();
                for d in 0..p {
                    let poly = random_hom(&f, m + 1, d, &mut rng);
                    for pt in &pts {
                        let base = poly.eval(&f, pt.coords()).unwrap();
                        for lambda in f.nonzero_elements() {
                            let scaled: Vec<_> = pt.coords().iter().map(|&c| f.mul(lambda, c)).collect();
                            let expect = f.mul(f.pow(lambda, d as u64), base);
                            assert_eq!(poly.eval(&f, &scaled).unwrap(), expect);
                        }
                    }
                    for w in pts.iter().step_by(2) {
                        for v in pts.iter().filter(|v| *v != w) {
                            let h = poly.restrict_to_line(&f, w, v).unwrap();
                            assert_eq!(h.degree_bound(), d);
                            assert_eq!(h.at_infinity(), poly.eval(&f, v.coords()).unwrap());
                            for lambda in f.elements() {
                                let raw: Vec<_> = w
                                    .coords()
                                    .iter()
                                    .zip(v.coords())
                                    .map(|(&a, &b)| f.add(a, f.mul(lambda, b)))
                                    .collect();
                                assert_eq!(h.eval_at(&f, lambda), poly.eval(&f, &raw).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_gf5_degree3_direct_oracle() {
        let f = FieldSpec::new(5, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts = enumerate_points(&f, 2).unwrap();
        for _ in 0..20 {
            let poly = random_hom(&f, 3, 3, &mut rng);
            let w = &pts[rng.gen_range(0..pts.len())];
            let v = loop {
                let v = &pts[rng.gen_range(0..pts.len())];
                if v != w {
                    break v;
                }
            };
            let h = poly.restrict_to_line(&f, w, v).unwrap();
            for lambda in f.elements() {
                let raw: Vec<_> =
                    w.coords().iter().zip(v.coords()).map(|(&a, &b)| f.add(a, f.mul(lambda, b))).collect();
                assert_eq!(h.eval_at(&f, lambda), poly.eval(&f, &raw).unwrap());
            }
        }
    }

    #[test]
    fn normalization_compatibility() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = FieldSpec::new(5, 1).unwrap();
        for d in 0..5 {
            let poly = random_hom(&f, 3, d, &mut rng);
            for _ in 0..50 {
                let raw: Vec<_> = (0..3).map(|_| fe(rng.gen_range(0..5))).collect();
                if raw.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let (n, dscale) = normalize(&f, &raw).unwrap();
                let lhs = poly.eval(&f, n.coords()).unwrap();
                let dinv = f.inv(dscale).unwrap();
                let rhs = f.mul(f.pow(dinv, d as u64), poly.eval(&f, &raw).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dense_div_rem() {
        let f = FieldSpec::new(7, 1).unwrap();
        let a = fes(&[3, 0, 5, 1]);
        let b = fes(&[2, 1]);
        let (q, r) = dense::div_rem(&f, &a, &b);
        let mut back = dense::mul(&f, &q, &b);
        back.resize(a.len(), FieldElement::ZERO);
        for (x, y) in back.iter_mut().zip(&r) {
            *x = f.add(*x, *y);
        }
        assert_eq!(back, a);
        assert!(dense::degree(&r).is_none_or(|dr| dr < 1));
    }

    #[test]
    fn json_shapes() {
        let f = FieldSpec::new(3, 1).unwrap();
        let poly = HomogeneousPoly::from_terms(&f, 3, 1, &[(&[0, 1, 0], 2)]).unwrap();
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"{"m":2,"d":1,"coeffs":[0,2,0]}"#);
        let back: HomogeneousPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
        assert!(serde_json::from_str::<HomogeneousPoly>(r#"{"m":2,"d":1,"coeffs":[0]}"#).is_err());
    }
}
