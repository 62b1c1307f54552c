//! Arithmetic in small prime-power fields GF(p^k).
//!
//! Elements are encoded as integers `0..q`. For extension fields the base-`p`
//! digits of the integer (least significant first) are the coefficients of
//! the residue polynomial modulo the field's irreducible modulus. The integer
//! order is the canonical element order used by every enumeration in the
//! crate.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// Extension fields at or below this size use precomputed tables.
const TABLE_LIMIT: u32 = 1 << 8;

/// An element of GF(q), encoded as an integer in `0..q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary field operations, for callers that select the operation at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// A finite field GF(p^k) together with its irreducible modulus.
///
/// Cloning is cheap; lookup tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec").field("p", &self.p).field("k", &self.k).field("modulus", &self.modulus).finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u32;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn checked_pow(p: u32, k: u32) -> Option<u32> {
    let mut acc: u32 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(p)?;
        if acc > MAX_FIELD_SIZE {
            return None;
        }
    }
    Some(acc)
}

// Polynomials over GF(p) as digit vectors, low-order first.

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * bi) % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn digits_of(mut value: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(value % p);
        value /= p;
    }
    out
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    // A reducible polynomial of degree k has a monic factor of degree <= k/2.
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for low in 0..count {
            let mut divisor = digits_of(low, p, deg);
            divisor.push(1);
            if poly_rem_p(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^k) using the least irreducible monic modulus, where moduli
    /// are ordered by the integer value of their base-`p` digit vector.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = checked_pow(p, k).ok_or(Error::FieldTooLarge { p, k })?;
        if k == 1 {
            return Self::with_modulus(p, vec![0, 1]);
        }
        for low in 0..q {
            let mut modulus = digits_of(low, p, k as usize);
            modulus.push(1);
            if is_irreducible(&modulus, p) {
                return Self::with_modulus(p, modulus);
            }
        }
        unreachable!("an irreducible polynomial exists in every degree")
    }

    /// Builds GF(p^k) from an explicit modulus (digits low-order first).
    ///
    /// For prime fields the only accepted modulus is `X`, i.e. `[0, 1]`.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        let k = (modulus.len() - 1) as u32;
        let q = checked_pow(p, k).ok_or(Error::FieldTooLarge { p, k })?;
        let monic = modulus.last() == Some(&1);
        let digits_ok = modulus.iter().all(|&c| c < p);
        let valid = if k == 1 { modulus == [0, 1] } else { monic && digits_ok && is_irreducible(&modulus, p) };
        if !valid {
            return Err(Error::InvalidModulus(modulus));
        }
        let mut spec = FieldSpec { p, k, q, modulus, tables: None };
        if k > 1 && q <= TABLE_LIMIT {
            spec.tables = Some(Arc::new(spec.build_tables()));
        }
        Ok(spec)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let (x, y) = (FieldElement(a as u32), FieldElement(b as u32));
                add[a * q + b] = self.add_slow(x, y).0 as u16;
                mul[a * q + b] = self.mul_slow(x, y).0 as u16;
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u16;
                }
                if a != 0 && mul[a * q + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of field elements.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Checks that `value` encodes an element of this field.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::InvalidElement { value, q: self.q })
        }
    }

    /// All `q` elements in canonical (ascending) order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    /// The `q - 1` nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> impl ExactSizeIterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.k == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= self.p { s - self.p } else { s });
        }
        match &self.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.q + b.0) as usize] as u32),
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q);
        if self.k == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        match &self.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize] as u32),
            None => self.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.k == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        match &self.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.q + b.0) as usize] as u32),
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            return Ok(FieldElement(t.inv[a.0 as usize] as u32));
        }
        // a^(q-2) = a^-1 in the multiplicative group of order q-1.
        Ok(self.pow(a, (self.q - 2) as u64))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn arith(&self, op: ArithOp, a: FieldElement, b: FieldElement) -> FieldElement {
        match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
        }
    }

    fn to_digits(&self, a: FieldElement) -> Vec<u32> {
        digits_of(a.0, self.p, self.k as usize)
    }

    fn compose(&self, digits: &[u32]) -> FieldElement {
        let v = digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d);
        FieldElement(v)
    }

    fn add_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.compose(&sum)
    }

    fn neg_slow(&self, a: FieldElement) -> FieldElement {
        let d: Vec<u32> = self.to_digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.compose(&d)
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let mut prod = vec![0u32; da.len() + db.len() - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem_p(&prod, &self.modulus, self.p);
        r.resize(self.k as usize, 0);
        self.compose(&r)
    }
}

#[derive(Serialize, Deserialize)]
struct FieldSpecRepr {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FieldSpecRepr { p: self.p, k: self.k, modulus: self.modulus.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FieldSpecRepr::deserialize(deserializer)?;
        if repr.modulus.len() as u64 != repr.k as u64 + 1 {
            return Err(serde::de::Error::custom("modulus length must be k + 1"));
        }
        FieldSpec::with_modulus(repr.p, repr.modulus).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u32) -> FieldElement {
        FieldElement(v)
    }

    #[test]
    fn make_field_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f.q(), 3);
        assert_eq!(f.modulus(), &[0, 1]);

        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.q(), 4);
        assert_eq!(f.modulus(), &[1, 1, 1]);

        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FieldSpec::new(3, 0), Err(Error::ZeroDegree)));
    }

    #[test]
    fn arith_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.mul(fe(2), fe(2)), fe(1));
        assert_eq!(f3.add(fe(2), fe(2)), fe(1));
        assert_eq!(f3.arith(ArithOp::Sub, fe(0), fe(1)), fe(2));
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.mul(fe(2), fe(2)), fe(3));
    }

    #[test]
    fn inv_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.inv(fe(2)).unwrap(), fe(2));
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.inv(fe(3)).unwrap(), fe(2));
        assert!(matches!(f5.inv(fe(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn enumerate_examples() {
        for (p, k, expect) in [(3, 1, vec![0, 1, 2]), (2, 2, vec![0, 1, 2, 3]), (2, 1, vec![0, 1])] {
            let f = FieldSpec::new(p, k).unwrap();
            let got: Vec<u32> = f.elements().map(FieldElement::value).collect();
            assert_eq!(got, expect);
        }
    }

    fn small_fields() -> Vec<FieldSpec> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (11, 1), (13, 1)]
            .into_iter()
            .map(|(p, k)| FieldSpec::new(p, k).unwrap())
            .collect()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, FieldElement::ZERO), a);
                assert_eq!(f.mul(a, FieldElement::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                    assert_eq!(f.pow(a, (f.q() - 1) as u64), FieldElement::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = FieldSpec::new(3, 3).unwrap();
        assert!(f.tables.is_some());
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                assert_eq!(f.add(a, b), f.add_slow(a, b));
            }
        }
    }

    #[test]
    fn large_extension_without_tables() {
        let f = FieldSpec::new(2, 10).unwrap();
        assert!(f.tables.is_none());
        for a in (1..f.q()).step_by(37).map(FieldElement) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn modulus_is_deterministic() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (2, 8)] {
            assert_eq!(FieldSpec::new(p, k).unwrap(), FieldSpec::new(p, k).unwrap());
        }
        // x^3 + x + 1 is the least irreducible cubic over GF(2).
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        // x^2 + 1 is irreducible over GF(3) since -1 is a non-residue.
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn json_round_trip() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"p":3,"k":1,"modulus":[0,1]}"#);
        let g: FieldSpec = serde_json::from_str(r#"{"p":2,"k":2,"modulus":[1,1,1]}"#).unwrap();
        assert_eq!(g, FieldSpec::new(2, 2).unwrap());
        assert!(serde_json::from_str::<FieldSpec>(r#"{"p":2,"k":2,"modulus":[1,0,1]}"#).is_err());
    }
}
