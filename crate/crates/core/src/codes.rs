//! Evaluation codes: projective Reed-Muller (PRM), generalized Reed-Muller
//! (GRM), Reed-Solomon (RS) and extended Reed-Solomon (ERS).
//!
//! Symbol order is fixed per family:
//! - PRM: canonical projective enumeration (see [`crate::projspace`]).
//! - GRM: affine points in lexicographic order, first coordinate most
//!   significant.
//! - RS: field elements in canonical order.
//! - ERS: the RS order followed by the value at ∞ (the `X^d` coefficient).
//!
//! With these orders `PRM_q(d, 1)` and `ERS_q(d)` coincide symbol for
//! symbol: the projective points `(1, λ)` come first in λ order and `(0, 1)`
//! last.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::polynomial::{
    binomial, bounded_monomials, homogeneous_monomials, BoundedDegreePoly, HomogeneousPoly, UnivariatePoly,
};
use crate::projspace::{point_count, ProjectiveSpace};

/// Default bound on the number of codewords [`min_distance_bruteforce`]
/// will enumerate.
pub const DEFAULT_DISTANCE_CAP: u128 = 1 << 20;

/// Largest code length [`Code::new`] will materialize.
pub const MAX_CODE_LENGTH: u128 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "PRM")]
    Prm,
    #[serde(rename = "GRM")]
    Grm,
    #[serde(rename = "RS")]
    Rs,
    #[serde(rename = "ERS")]
    Ers,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Prm => "PRM",
            Family::Grm => "GRM",
            Family::Rs => "RS",
            Family::Ers => "ERS",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "prm" => Ok(Family::Prm),
            "grm" => Ok(Family::Grm),
            "rs" => Ok(Family::Rs),
            "ers" => Ok(Family::Ers),
            other => Err(Error::InvalidSpec(format!("unknown code family {other:?}"))),
        }
    }
}

/// A code family instance: field, degree and (for PRM/GRM) the number of
/// variables parameter `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    family: Family,
    field: FieldSpec,
    d: u32,
    m: Option<usize>,
}

/// Row of Table-1 style parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub query_complexity: u32,
    pub message_length: u128,
    pub code_length: u128,
    /// `(q - d) q^(m-1)`, the tabulated distance formula. It is not the true
    /// minimum distance of PRM codes; see [`min_distance_bruteforce`].
    pub table_distance: u128,
}

impl CodeSpec {
    pub fn new(family: Family, field: FieldSpec, d: u32, m: Option<usize>) -> Result<Self> {
        let q = field.q();
        let max_d = match family {
            Family::Grm => q.checked_sub(2).ok_or(Error::DegreeTooLarge { d, max: 0 })?,
            _ => q - 1,
        };
        if d > max_d {
            return Err(Error::DegreeTooLarge { d, max: max_d });
        }
        match (family, m) {
            (Family::Prm | Family::Grm, None) => {
                return Err(Error::InvalidSpec(format!("{family} requires m")));
            }
            (Family::Prm | Family::Grm, Some(0)) => {
                return Err(Error::InvalidSpec("m must be at least 1".into()));
            }
            (Family::Rs | Family::Ers, Some(_)) => {
                return Err(Error::InvalidSpec(format!("{family} takes no m")));
            }
            _ => {}
        }
        Ok(CodeSpec { family, field, d, m })
    }

    pub fn prm(field: FieldSpec, d: u32, m: usize) -> Result<Self> {
        Self::new(Family::Prm, field, d, Some(m))
    }

    pub fn grm(field: FieldSpec, d: u32, m: usize) -> Result<Self> {
        Self::new(Family::Grm, field, d, Some(m))
    }

    pub fn rs(field: FieldSpec, d: u32) -> Result<Self> {
        Self::new(Family::Rs, field, d, None)
    }

    pub fn ers(field: FieldSpec, d: u32) -> Result<Self> {
        Self::new(Family::Ers, field, d, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    fn m_or_one(&self) -> usize {
        self.m.unwrap_or(1)
    }

    pub fn code_params(&self) -> CodeParams {
        let q = self.field.q() as u128;
        let d = self.d as u128;
        let m = self.m_or_one();
        let message_length = binomial(m as u64 + self.d as u64, self.d as u64);
        let code_length = match self.family {
            Family::Prm => point_count(self.field.q(), m),
            Family::Grm => q.saturating_pow(m as u32),
            Family::Rs => q,
            Family::Ers => q + 1,
        };
        CodeParams {
            query_complexity: self.d + 1,
            message_length,
            code_length,
            table_distance: (q - d).saturating_mul(q.saturating_pow(m as u32 - 1)),
        }
    }

    pub fn length(&self) -> u128 {
        self.code_params().code_length
    }

    pub fn message_length(&self) -> u128 {
        self.code_params().message_length
    }
}

/// A materialized code: evaluation points and generator rows.
#[derive(Clone, Debug)]
pub struct Code {
    spec: CodeSpec,
    // generator[i][j] = value of message monomial i at symbol position j
    generator: Vec<Vec<FieldElement>>,
    space: Option<ProjectiveSpace>,
}

/// Affine point with lexicographic rank `index`, first coordinate most
/// significant.
pub fn affine_point(q: u32, m: usize, mut index: usize) -> Vec<FieldElement> {
    let mut coords = vec![FieldElement::ZERO; m];
    for c in coords.iter_mut().rev() {
        *c = FieldElement((index % q as usize) as u32);
        index /= q as usize;
    }
    coords
}

pub fn affine_index(q: u32, point: &[FieldElement]) -> usize {
    point.iter().fold(0usize, |acc, c| acc * q as usize + c.value() as usize)
}

impl Code {
    pub fn new(spec: CodeSpec) -> Result<Self> {
        let params = spec.code_params();
        if params.code_length > MAX_CODE_LENGTH {
            return Err(Error::CapExceeded { size: params.code_length, cap: MAX_CODE_LENGTH });
        }
        let field = spec.field.clone();
        let q = field.q();
        let d = spec.d;
        let n = params.code_length as usize;
        let mut space = None;
        let generator = match spec.family {
            Family::Prm => {
                let m = spec.m_or_one();
                let s = ProjectiveSpace::new(field.clone(), m)?;
                let monomials = homogeneous_monomials(m + 1, d);
                let rows = monomial_rows(&field, &monomials, s.points().map(|p| p.coords().to_vec()));
                space = Some(s);
                rows
            }
            Family::Grm => {
                let m = spec.m_or_one();
                let monomials = bounded_monomials(m, d);
                monomial_rows(&field, &monomials, (0..n).map(|i| affine_point(q, m, i)))
            }
            Family::Rs | Family::Ers => (0..=d)
                .map(|e| {
                    let mut row: Vec<FieldElement> = field.elements().map(|x| field.pow(x, e as u64)).collect();
                    if spec.family == Family::Ers {
                        row.push(if e == d { FieldElement::ONE } else { FieldElement::ZERO });
                    }
                    row
                })
                .collect(),
        };
        Ok(Code { spec, generator, space })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn field(&self) -> &FieldSpec {
        &self.spec.field
    }

    pub fn len(&self) -> usize {
        self.generator.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn message_length(&self) -> usize {
        self.generator.len()
    }

    /// The projective evaluation set, for PRM codes.
    pub fn projective_space(&self) -> Option<&ProjectiveSpace> {
        self.space.as_ref()
    }

    /// Encodes a message given as coefficients in the family's monomial
    /// order (univariate coefficients low-order first for RS/ERS).
    pub fn encode_message(&self, message: &[FieldElement]) -> Result<Codeword> {
        if message.len() != self.generator.len() {
            return Err(Error::DimensionMismatch { expected: self.generator.len(), actual: message.len() });
        }
        check_coeffs(&self.spec.field, message)?;
        let symbols = self.combine(message);
        Ok(Codeword { spec: self.spec.clone(), symbols })
    }

    fn combine(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.spec.field;
        let mut out = vec![FieldElement::ZERO; self.len()];
        for (row, &c) in self.generator.iter().zip(message) {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }
}

fn monomial_rows(
    field: &FieldSpec,
    monomials: &[Vec<u32>],
    points: impl Iterator<Item = Vec<FieldElement>>,
) -> Vec<Vec<FieldElement>> {
    let mut rows: Vec<Vec<FieldElement>> = vec![Vec::new(); monomials.len()];
    for pt in points {
        for (row, exps) in rows.iter_mut().zip(monomials) {
            let v =
                exps.iter().zip(&pt).fold(FieldElement::ONE, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)));
            row.push(v);
        }
    }
    rows
}

/// A word of a code, indexed by the family's canonical symbol order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    pub spec: CodeSpec,
    pub symbols: Vec<FieldElement>,
}

impl Codeword {
    pub fn new(spec: CodeSpec, symbols: Vec<FieldElement>) -> Result<Self> {
        let n = spec.length();
        if symbols.len() as u128 != n {
            return Err(Error::DimensionMismatch { expected: n as usize, actual: symbols.len() });
        }
        for s in &symbols {
            spec.field.element(s.value())?;
        }
        Ok(Codeword { spec, symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn weight(&self) -> usize {
        hamming_weight(&self.symbols)
    }
}

pub fn hamming_weight(symbols: &[FieldElement]) -> usize {
    symbols.iter().filter(|s| !s.is_zero()).count()
}

pub fn hamming_distance(a: &[FieldElement], b: &[FieldElement]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn check_family(spec: &CodeSpec, family: Family) -> Result<()> {
    if spec.family != family {
        return Err(Error::InvalidSpec(format!("expected a {family} spec, got {}", spec.family)));
    }
    Ok(())
}

fn check_coeffs(field: &FieldSpec, coeffs: &[FieldElement]) -> Result<()> {
    coeffs.iter().try_for_each(|c| field.element(c.value()).map(drop))
}

/// Evaluates a homogeneous form at every normalized projective point.
pub fn prm_encode(f: &HomogeneousPoly, spec: &CodeSpec) -> Result<Codeword> {
    check_family(spec, Family::Prm)?;
    let m = spec.m_or_one();
    if f.num_vars() != m + 1 || f.degree() != spec.d {
        return Err(Error::InvalidSpec(format!(
            "message has {} variables and degree {}, spec wants {} and {}",
            f.num_vars(),
            f.degree(),
            m + 1,
            spec.d
        )));
    }
    check_coeffs(&spec.field, f.coeffs())?;
    let space = ProjectiveSpace::with_cap(spec.field.clone(), m, MAX_CODE_LENGTH)?;
    let symbols = space.points().map(|p| f.eval(&spec.field, p.coords())).collect::<Result<Vec<_>>>()?;
    Ok(Codeword { spec: spec.clone(), symbols })
}

/// Evaluates a bounded-degree polynomial at every affine point.
pub fn grm_encode(f: &BoundedDegreePoly, spec: &CodeSpec) -> Result<Codeword> {
    check_family(spec, Family::Grm)?;
    let m = spec.m_or_one();
    if f.num_vars() != m || f.degree_bound() > spec.d {
        return Err(Error::InvalidSpec(format!(
            "message has {} variables and degree bound {}, spec wants {} and <= {}",
            f.num_vars(),
            f.degree_bound(),
            m,
            spec.d
        )));
    }
    check_coeffs(&spec.field, f.coeffs())?;
    let n = spec.length();
    if n > MAX_CODE_LENGTH {
        return Err(Error::CapExceeded { size: n, cap: MAX_CODE_LENGTH });
    }
    let q = spec.field.q();
    let symbols = (0..n as usize).map(|i| f.eval(&spec.field, &affine_point(q, m, i))).collect::<Result<Vec<_>>>()?;
    Ok(Codeword { spec: spec.clone(), symbols })
}

/// RS or ERS encoding of a univariate polynomial with degree bound `d`.
pub fn ers_encode(h: &UnivariatePoly, spec: &CodeSpec) -> Result<Codeword> {
    if !matches!(spec.family, Family::Rs | Family::Ers) {
        return Err(Error::InvalidSpec(format!("expected an RS or ERS spec, got {}", spec.family)));
    }
    if h.degree_bound() != spec.d {
        return Err(Error::DegreeTooLarge { d: h.degree_bound(), max: spec.d });
    }
    check_coeffs(&spec.field, h.coeffs())?;
    let f = &spec.field;
    let mut symbols: Vec<FieldElement> = f.elements().map(|x| h.eval_at(f, x)).collect();
    if spec.family == Family::Ers {
        symbols.push(h.at_infinity());
    }
    Ok(Codeword { spec: spec.clone(), symbols })
}

/// Minimum Hamming weight over all nonzero codewords, by enumeration of all
/// `q^k - 1` nonzero messages. Fails if `q^k` exceeds `cap`.
pub fn min_distance_bruteforce(spec: &CodeSpec, cap: u128) -> Result<usize> {
    let q = spec.field.q() as u128;
    let k = spec.message_length();
    let total = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(q).filter(|&t| t <= cap));
    let total = total.ok_or(Error::CapExceeded { size: u128::MAX, cap })?;
    let code = Code::new(spec.clone())?;
    let k = k as usize;
    let min = (1..total as u64)
        .into_par_iter()
        .map_init(
            || vec![FieldElement::ZERO; k],
            |msg, idx| {
                let mut rest = idx;
                for c in msg.iter_mut() {
                    *c = FieldElement((rest % q as u64) as u32);
                    rest /= q as u64;
                }
                hamming_weight(&code.combine(msg))
            },
        )
        .min();
    Ok(min.unwrap_or(0))
}

#[derive(Serialize, Deserialize)]
struct CodewordRepr {
    family: Family,
    p: u32,
    k: u32,
    d: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    m: Option<usize>,
    symbols: Vec<FieldElement>,
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodewordRepr {
            family: self.spec.family,
            p: self.spec.field.p(),
            k: self.spec.field.k(),
            d: self.spec.d,
            m: self.spec.m,
            symbols: self.symbols.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = CodewordRepr::deserialize(d)?;
        let field = FieldSpec::new(r.p, r.k).map_err(D::Error::custom)?;
        let spec = CodeSpec::new(r.family, field, r.d, r.m).map_err(D::Error::custom)?;
        Codeword::new(spec, r.symbols).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(v: u32) -> FieldElement {
        FieldElement(v)
    }

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p, 1).unwrap()
    }

    #[test]
    fn code_params_examples() {
        let prm = CodeSpec::prm(gf(3), 2, 2).unwrap();
        let p = prm.code_params();
        assert_eq!((p.query_complexity, p.message_length, p.code_length, p.table_distance), (3, 6, 13, 3));

        let grm = CodeSpec::grm(FieldSpec::new(2, 2).unwrap(), 2, 2).unwrap();
        let p = grm.code_params();
        assert_eq!((p.query_complexity, p.message_length, p.code_length, p.table_distance), (3, 6, 16, 8));

        assert!(matches!(CodeSpec::prm(gf(3), 3, 2), Err(Error::DegreeTooLarge { d: 3, max: 2 })));
        assert!(matches!(CodeSpec::grm(gf(3), 2, 2), Err(Error::DegreeTooLarge { d: 2, max: 1 })));
        assert!(CodeSpec::new(Family::Prm, gf(3), 1, None).is_err());
        assert!(CodeSpec::new(Family::Rs, gf(3), 1, Some(1)).is_err());
    }

    #[test]
    fn prm_encode_examples() {
        let f = gf(3);
        let spec = CodeSpec::prm(f.clone(), 1, 1).unwrap();
        let poly = HomogeneousPoly::from_terms(&f, 2, 1, &[(&[1, 0], 1), (&[0, 1], 1)]).unwrap();
        let cw = prm_encode(&poly, &spec).unwrap();
        assert_eq!(cw.symbols, vec![fe(1), fe(2), fe(0), fe(1)]);

        let zero = prm_encode(&HomogeneousPoly::zero(2, 1), &spec).unwrap();
        assert_eq!(zero.weight(), 0);

        // wrong shape
        assert!(prm_encode(&HomogeneousPoly::zero(3, 1), &spec).is_err());
    }

    #[test]
    fn grm_encode_examples() {
        let f = gf(3);
        let spec = CodeSpec::grm(f.clone(), 1, 1).unwrap();
        let poly = BoundedDegreePoly::new(1, 1, vec![fe(1), fe(1)]).unwrap();
        assert_eq!(grm_encode(&poly, &spec).unwrap().symbols, vec![fe(1), fe(2), fe(0)]);
        let c = BoundedDegreePoly::new(1, 1, vec![fe(2), fe(0)]).unwrap();
        assert_eq!(grm_encode(&c, &spec).unwrap().symbols, vec![fe(2); 3]);
    }

    #[test]
    fn ers_encode_examples() {
        let f = gf(3);
        let spec = CodeSpec::ers(f.clone(), 1).unwrap();
        let x = UnivariatePoly::new(vec![fe(0), fe(1)]).unwrap();
        assert_eq!(ers_encode(&x, &spec).unwrap().symbols, vec![fe(0), fe(1), fe(2), fe(1)]);
        let c = UnivariatePoly::new(vec![fe(2), fe(0)]).unwrap();
        assert_eq!(ers_encode(&c, &spec).unwrap().symbols, vec![fe(2), fe(2), fe(2), fe(0)]);
        let rs = CodeSpec::rs(f, 1).unwrap();
        assert_eq!(ers_encode(&x, &rs).unwrap().symbols, vec![fe(0), fe(1), fe(2)]);
        assert!(ers_encode(&UnivariatePoly::zero(2), &spec).is_err());
    }

    #[test]
    fn generator_matches_direct_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (p, k, d, m) in [(3, 1, 2, 2), (5, 1, 3, 2), (2, 2, 2, 2), (2, 1, 1, 3)] {
            let f = FieldSpec::new(p, k).unwrap();
            let spec = CodeSpec::prm(f.clone(), d, m).unwrap();
            let code = Code::new(spec.clone()).unwrap();
            for _ in 0..5 {
                let msg: Vec<_> = (0..code.message_length()).map(|_| fe(rng.gen_range(0..f.q()))).collect();
                let poly = HomogeneousPoly::new(m + 1, d, msg.clone()).unwrap();
                assert_eq!(code.encode_message(&msg).unwrap(), prm_encode(&poly, &spec).unwrap());
            }
            if d + 2 <= f.q() {
                let spec = CodeSpec::grm(f.clone(), d, m).unwrap();
                let code = Code::new(spec.clone()).unwrap();
                let msg: Vec<_> = (0..code.message_length()).map(|_| fe(rng.gen_range(0..f.q()))).collect();
                let poly = BoundedDegreePoly::new(m, d, msg.clone()).unwrap();
                assert_eq!(code.encode_message(&msg).unwrap(), grm_encode(&poly, &spec).unwrap());
            }
        }
    }

    #[test]
    fn linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = gf(5);
        let specs = [
            CodeSpec::prm(f.clone(), 3, 2).unwrap(),
            CodeSpec::grm(f.clone(), 2, 2).unwrap(),
            CodeSpec::rs(f.clone(), 3).unwrap(),
            CodeSpec::ers(f.clone(), 4).unwrap(),
        ];
        for spec in specs {
            let code = Code::new(spec).unwrap();
            for _ in 0..10 {
                let a: Vec<_> = (0..code.message_length()).map(|_| fe(rng.gen_range(0..5))).collect();
                let b: Vec<_> = (0..code.message_length()).map(|_| fe(rng.gen_range(0..5))).collect();
                let sum: Vec<_> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
                let ca = code.encode_message(&a).unwrap().symbols;
                let cb = code.encode_message(&b).unwrap().symbols;
                let expect: Vec<_> = ca.iter().zip(&cb).map(|(&x, &y)| f.add(x, y)).collect();
                assert_eq!(code.encode_message(&sum).unwrap().symbols, expect);
            }
        }
    }

    #[test]
    fn injectivity_small() {
        use std::collections::HashSet;
        for q in [2u32, 3] {
            for m in 1..=2usize {
                for d in 0..=2u32.min(q - 1) {
                    let mut specs = vec![CodeSpec::prm(gf(q), d, m).unwrap()];
                    if d + 2 <= q {
                        specs.push(CodeSpec::grm(gf(q), d, m).unwrap());
                    }
                    for spec in specs {
                        let code = Code::new(spec).unwrap();
                        let k = code.message_length();
                        let total = (q as usize).pow(k as u32);
                        let mut seen = HashSet::new();
                        for idx in 0..total {
                            let msg = affine_point(q, k, idx);
                            assert!(seen.insert(code.encode_message(&msg).unwrap().symbols));
                        }
                        assert_eq!(seen.len(), total);
                    }
                }
            }
        }
    }

    #[test]
    fn lengths_match_params() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)] {
            let f = FieldSpec::new(p, k).unwrap();
            for m in 1..=4 {
                for d in 0..f.q() {
                    for spec in
                        [CodeSpec::prm(f.clone(), d, m).ok(), CodeSpec::grm(f.clone(), d, m).ok()].into_iter().flatten()
                    {
                        if spec.length() > 10_000 {
                            continue;
                        }
                        let code = Code::new(spec.clone()).unwrap();
                        assert_eq!(code.len() as u128, spec.length());
                        assert_eq!(code.message_length() as u128, spec.message_length());
                    }
                }
            }
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_distance_bruteforce(&CodeSpec::prm(gf(2), 1, 2).unwrap(), DEFAULT_DISTANCE_CAP).unwrap(), 4);
        assert_eq!(min_distance_bruteforce(&CodeSpec::prm(gf(3), 1, 2).unwrap(), DEFAULT_DISTANCE_CAP).unwrap(), 9);
        assert_eq!(min_distance_bruteforce(&CodeSpec::grm(gf(3), 1, 2).unwrap(), DEFAULT_DISTANCE_CAP).unwrap(), 6);
        // RS is MDS: n - k + 1
        assert_eq!(min_distance_bruteforce(&CodeSpec::rs(gf(5), 2).unwrap(), DEFAULT_DISTANCE_CAP).unwrap(), 3);
        assert_eq!(min_distance_bruteforce(&CodeSpec::ers(gf(5), 2).unwrap(), DEFAULT_DISTANCE_CAP).unwrap(), 4);
        assert!(matches!(
            min_distance_bruteforce(&CodeSpec::prm(gf(3), 2, 2).unwrap(), 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn grm_weights_meet_table_distance() {
        let f = FieldSpec::new(2, 2).unwrap();
        let spec = CodeSpec::grm(f.clone(), 2, 2).unwrap();
        let code = Code::new(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..500 {
            let msg: Vec<_> = (0..6).map(|_| fe(rng.gen_range(0..4))).collect();
            let w = code.encode_message(&msg).unwrap().weight();
            assert!(w == 0 || w >= 8, "weight {w}");
        }
    }

    #[test]
    fn codeword_json() {
        let f = gf(3);
        let spec = CodeSpec::prm(f.clone(), 1, 1).unwrap();
        let cw = Codeword::new(spec, vec![fe(1), fe(2), fe(0), fe(1)]).unwrap();
        let json = serde_json::to_string(&cw).unwrap();
        assert_eq!(json, r#"{"family":"PRM","p":3,"k":1,"d":1,"m":1,"symbols":[1,2,0,1]}"#);
        assert_eq!(serde_json::from_str::<Codeword>(&json).unwrap(), cw);

        let ers = Codeword::new(CodeSpec::ers(f, 1).unwrap(), vec![fe(0); 4]).unwrap();
        assert_eq!(serde_json::to_string(&ers).unwrap(), r#"{"family":"ERS","p":3,"k":1,"d":1,"symbols":[0,0,0,0]}"#);

        // wrong length and out-of-range symbol
        assert!(serde_json::from_str::<Codeword>(r#"{"family":"RS","p":3,"k":1,"d":1,"symbols":[0,0]}"#).is_err());
        assert!(serde_json::from_str::<Codeword>(r#"{"family":"RS","p":3,"k":1,"d":1,"symbols":[0,0,3]}"#).is_err());
    }
}
