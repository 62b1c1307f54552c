//! Projective space over GF(q) with canonical representatives.
//!
//! A point of the projective space of dimension `m` is stored as its
//! normalized representative: `m + 1` coordinates whose first nonzero entry
//! is 1. Points are indexed by stratum (position of the leading 1, ascending)
//! and then lexicographically on the trailing coordinates, leftmost most
//! significant.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Default bound on the number of points a [`ProjectiveSpace`] may hold.
pub const DEFAULT_POINT_CAP: u128 = 1 << 24;

/// A normalized projective point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Number of homogeneous coordinates (`m + 1`).
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Position of the leading 1.
    pub fn leading_index(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("normalized point is nonzero")
    }

    /// Wraps coordinates that are already in normal form.
    pub fn from_normalized(coords: Vec<FieldElement>) -> Result<Self> {
        match coords.iter().find(|c| !c.is_zero()) {
            None => Err(Error::ZeroVector),
            Some(&lead) if lead == FieldElement::ONE => Ok(ProjPoint { coords }),
            Some(_) => Err(Error::InvalidSpec("point is not normalized".into())),
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<FieldElement>::deserialize(deserializer)?;
        ProjPoint::from_normalized(coords).map_err(serde::de::Error::custom)
    }
}

/// A line parameter: a field element or the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineParam {
    Finite(FieldElement),
    Infinity,
}

impl fmt::Display for LineParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineParam::Finite(x) => write!(f, "{x}"),
            LineParam::Infinity => f.write_str("inf"),
        }
    }
}

/// Returns the normalized point of a nonzero vector together with its
/// leading coordinate `d`, so that `raw = d * point`.
pub fn normalize(field: &FieldSpec, raw: &[FieldElement]) -> Result<(ProjPoint, FieldElement)> {
    let lead = *raw.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
    let scale = field.inv(lead)?;
    let coords = raw.iter().map(|&c| field.mul(c, scale)).collect();
    Ok((ProjPoint { coords }, lead))
}

/// The projective space of dimension `m` over a field, i.e. the evaluation
/// set of a projective Reed-Muller code with `m + 1` variables.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: FieldSpec,
    m: usize,
    len: usize,
    // stratum_offsets[i] = index of the first point whose leading 1 is at i.
    stratum_offsets: Vec<usize>,
}

impl ProjectiveSpace {
    pub fn new(field: FieldSpec, m: usize) -> Result<Self> {
        Self::with_cap(field, m, DEFAULT_POINT_CAP)
    }

    pub fn with_cap(field: FieldSpec, m: usize, cap: u128) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("projective dimension must be at least 1".into()));
        }
        let size = point_count(field.q(), m);
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        let q = field.q() as usize;
        let mut stratum_offsets = Vec::with_capacity(m + 1);
        let mut acc = 0usize;
        for i in 0..=m {
            stratum_offsets.push(acc);
            acc += q.pow((m - i) as u32);
        }
        Ok(ProjectiveSpace { field, m, len: size as usize, stratum_offsets })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Projective dimension; points carry `m + 1` coordinates.
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The point at position `index` of the canonical enumeration.
    pub fn point(&self, index: usize) -> ProjPoint {
        assert!(index < self.len, "point index {index} out of range");
        let stratum = self.stratum_offsets.partition_point(|&off| off <= index) - 1;
        let mut rank = index - self.stratum_offsets[stratum];
        let q = self.field.q() as usize;
        let mut coords = vec![FieldElement::ZERO; self.m + 1];
        coords[stratum] = FieldElement::ONE;
        for c in coords[stratum + 1..].iter_mut().rev() {
            *c = FieldElement((rank % q) as u32);
            rank /= q;
        }
        ProjPoint { coords }
    }

    /// Position of a normalized point in the canonical enumeration.
    pub fn index_of(&self, point: &ProjPoint) -> Result<usize> {
        if point.len() != self.m + 1 {
            return Err(Error::DimensionMismatch { expected: self.m + 1, actual: point.len() });
        }
        let stratum = point.leading_index();
        let q = self.field.q() as usize;
        let rank = point.coords[stratum + 1..].iter().fold(0usize, |acc, c| acc * q + c.value() as usize);
        Ok(self.stratum_offsets[stratum] + rank)
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = ProjPoint> + '_ {
        (0..self.len).map(move |i| self.point(i))
    }

    /// `(N(w + λv), D(w + λv))` for finite λ, `(v, 1)` for λ = ∞.
    pub fn line_point(&self, w: &ProjPoint, v: &ProjPoint, param: LineParam) -> Result<(ProjPoint, FieldElement)> {
        line_point(&self.field, w, v, param)
    }
}

/// `(q^(m+1) - 1) / (q - 1)`.
pub fn point_count(q: u32, m: usize) -> u128 {
    (0..=m as u32).map(|i| (q as u128).pow(i)).sum()
}

/// All normalized points of the `m`-dimensional projective space, in
/// canonical order.
pub fn enumerate_points(field: &FieldSpec, m: usize) -> Result<Vec<ProjPoint>> {
    let space = ProjectiveSpace::new(field.clone(), m)?;
    Ok(space.points().collect())
}

fn line_point(field: &FieldSpec, w: &ProjPoint, v: &ProjPoint, param: LineParam) -> Result<(ProjPoint, FieldElement)> {
    match param {
        LineParam::Infinity => Ok((v.clone(), FieldElement::ONE)),
        LineParam::Finite(lambda) => {
            let raw: Vec<FieldElement> =
                w.coords.iter().zip(&v.coords).map(|(&a, &b)| field.add(a, field.mul(lambda, b))).collect();
            normalize(field, &raw)
        }
    }
}

/// The `q + 1` points of the line through `w` and `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePoints {
    pub params: Vec<LineParam>,
    pub points: Vec<ProjPoint>,
    pub scalars: Vec<FieldElement>,
}

/// Builds the line `{N(w + λv) : λ ∈ F_q} ∪ {v}`, listing finite parameters
/// in canonical order followed by ∞. The λ = 0 entry is `w` itself.
pub fn line(field: &FieldSpec, w: &ProjPoint, v: &ProjPoint) -> Result<LinePoints> {
    if w.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: w.len(), actual: v.len() });
    }
    if w == v {
        return Err(Error::SamePoint);
    }
    let params: Vec<LineParam> =
        field.elements().map(LineParam::Finite).chain(std::iter::once(LineParam::Infinity)).collect();
    let mut points = Vec::with_capacity(params.len());
    let mut scalars = Vec::with_capacity(params.len());
    for &param in &params {
        let (pt, d) = line_point(field, w, v, param)?;
        points.push(pt);
        scalars.push(d);
    }
    Ok(LinePoints { params, points, scalars })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn fe(v: u32) -> FieldElement {
        FieldElement(v)
    }

    fn pt(c: &[u32]) -> ProjPoint {
        ProjPoint::from_normalized(c.iter().map(|&x| fe(x)).collect()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        let (p, d) = normalize(&f, &[fe(0), fe(2), fe(1)]).unwrap();
        assert_eq!(p, pt(&[0, 1, 2]));
        assert_eq!(d, fe(2));
        let (p, d) = normalize(&f, &[fe(1), fe(0), fe(2)]).unwrap();
        assert_eq!(p, pt(&[1, 0, 2]));
        assert_eq!(d, fe(1));
        assert!(matches!(normalize(&f, &[fe(0); 3]), Err(Error::ZeroVector)));
    }

    #[test]
    fn enumerate_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let pts = enumerate_points(&f3, 1).unwrap();
        assert_eq!(pts, vec![pt(&[1, 0]), pt(&[1, 1]), pt(&[1, 2]), pt(&[0, 1])]);

        let f2 = FieldSpec::new(2, 1).unwrap();
        let pts = enumerate_points(&f2, 2).unwrap();
        assert_eq!(pts.len(), 7);
        assert_eq!(pts[0], pt(&[1, 0, 0]));
        assert_eq!(pts[6], pt(&[0, 0, 1]));

        assert_eq!(enumerate_points(&f3, 2).unwrap().len(), 13);
    }

    #[test]
    fn enumeration_cap() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert!(matches!(ProjectiveSpace::with_cap(f.clone(), 3, 39), Err(Error::CapExceeded { size: 40, cap: 39 })));
        assert!(ProjectiveSpace::new(f, 0).is_err());
    }

    #[test]
    fn enumeration_complete_and_indexable() {
        for (p, k, m) in [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2), (3, 2, 1)] {
            let f = FieldSpec::new(p, k).unwrap();
            let space = ProjectiveSpace::new(f.clone(), m).unwrap();
            let pts: Vec<_> = space.points().collect();
            assert_eq!(pts.len() as u128, point_count(f.q(), m));
            let unique: HashSet<_> = pts.iter().collect();
            assert_eq!(unique.len(), pts.len());
            for (i, p) in pts.iter().enumerate() {
                assert_eq!(space.index_of(p).unwrap(), i);
                // normalization is idempotent
                assert_eq!(normalize(&f, p.coords()).unwrap(), (p.clone(), FieldElement::ONE));
            }
        }
    }

    #[test]
    fn scaling_is_projectively_invisible() {
        for p in [2, 3, 5] {
            let f = FieldSpec::new(p, 1).unwrap();
            for m in 1..=2 {
                for point in enumerate_points(&f, m).unwrap() {
                    for lambda in f.nonzero_elements() {
                        let scaled: Vec<_> = point.coords().iter().map(|&c| f.mul(lambda, c)).collect();
                        let (n, d) = normalize(&f, &scaled).unwrap();
                        assert_eq!(n, point);
                        assert_eq!(d, lambda);
                    }
                }
            }
        }
    }

    #[test]
    fn line_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        let l = line(&f, &pt(&[1, 0]), &pt(&[0, 1])).unwrap();
        assert_eq!(l.points, vec![pt(&[1, 0]), pt(&[1, 1]), pt(&[1, 2]), pt(&[0, 1])]);
        assert_eq!(l.scalars, vec![fe(1); 4]);
        assert_eq!(l.params[3], LineParam::Infinity);

        let l = line(&f, &pt(&[0, 1]), &pt(&[1, 0])).unwrap();
        assert_eq!((l.points[1].clone(), l.scalars[1]), (pt(&[1, 1]), fe(1)));
        assert_eq!((l.points[2].clone(), l.scalars[2]), (pt(&[1, 2]), fe(2)));
        assert_eq!((l.points[0].clone(), l.scalars[0]), (pt(&[0, 1]), fe(1)));

        assert!(matches!(line(&f, &pt(&[1, 2]), &pt(&[1, 2])), Err(Error::SamePoint)));
    }

    #[test]
    fn lines_have_q_plus_one_distinct_points() {
        for (p, k, m) in [(3, 1, 2), (2, 2, 2), (5, 1, 2)] {
            let f = FieldSpec::new(p, k).unwrap();
            let pts = enumerate_points(&f, m).unwrap();
            for w in &pts {
                for v in pts.iter().filter(|v| *v != w) {
                    let l = line(&f, w, v).unwrap();
                    let distinct: HashSet<_> = l.points.iter().collect();
                    assert_eq!(distinct.len(), f.q() as usize + 1);
                    assert!(l.scalars.iter().all(|s| !s.is_zero()));
                }
            }
        }
    }

    #[test]
    fn line_membership_is_symmetric_and_counts_q() {
        let f = FieldSpec::new(3, 1).unwrap();
        let pts = enumerate_points(&f, 2).unwrap();
        let q = f.q() as usize;
        for w in &pts {
            let others: Vec<_> = pts.iter().filter(|p| *p != w).collect();
            let lines: Vec<HashSet<ProjPoint>> =
                others.iter().map(|v| line(&f, w, v).unwrap().points.into_iter().collect()).collect();
            for (pi, p) in others.iter().enumerate() {
                let mut hits = 0;
                for (vi, _v) in others.iter().enumerate() {
                    let p_on_wv = lines[vi].contains(*p);
                    let v_on_wp = lines[pi].contains(others[vi]);
                    assert_eq!(p_on_wv, v_on_wp);
                    hits += p_on_wv as usize;
                }
                assert_eq!(hits, q);
            }
        }
    }

    #[test]
    fn json_form() {
        let p = pt(&[0, 1, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[0,1,2]");
        assert!(serde_json::from_str::<ProjPoint>("[0,2,1]").is_err());
        assert_eq!(serde_json::from_str::<ProjPoint>("[0,1,2]").unwrap(), p);
    }
}
