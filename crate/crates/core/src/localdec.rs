//! Local decoders for projective and affine Reed-Muller codes.
//!
//! The PRM decoder recovers the symbol at a point `w` from the line through
//! `w` and a uniformly random second point `v`. Points on that line are
//! addressed by a parameter λ ∈ F_q* ∪ {∞}: finite λ names `N(w + λv)` and ∞
//! names `v` itself. The restriction of the message to the line is a
//! univariate polynomial `H` of degree at most `d` with `H(0) = F(w)`.
//!
//! [`PrmLocalDecoder::plan`] draws randomness in a fixed order so that a seed
//! reproduces a plan exactly:
//! 1. one uniform index in `[0, n - 1)` selecting `v` among the points other
//!    than `w`;
//! 2. a Fisher-Yates shuffle of the `q` parameters `[1, 2, ..., q - 1, ∞]`,
//!    whose first `d + 1` entries become the query parameters.
//!
//! Shuffling the whole parameter list, rather than permuting a fixed subset,
//! makes every query slot uniform over all `q` parameters, which is what
//! makes each individual query uniform over the other `n - 1` positions.
//! [`QueryOrder::FixedSubset`] keeps the subset fixed and is not uniform in
//! general once `d + 1 < q - 1`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::{affine_index, affine_point, CodeSpec, Family};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::projspace::{LineParam, ProjPoint, ProjectiveSpace};
use crate::rscodec::{self, EvalPair};

/// The deterministic generator behind every randomized decoder.
pub type DecoderRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> DecoderRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Read access to a received word.
pub trait SymbolReader {
    fn read(&mut self, index: usize) -> FieldElement;
}

impl<F: FnMut(usize) -> FieldElement> SymbolReader for F {
    fn read(&mut self, index: usize) -> FieldElement {
        self(index)
    }
}

/// Reads from an in-memory word and records every index accessed.
#[derive(Debug)]
pub struct CountingReader<'a> {
    symbols: &'a [FieldElement],
    reads: Vec<usize>,
}

impl<'a> CountingReader<'a> {
    pub fn new(symbols: &'a [FieldElement]) -> Self {
        CountingReader { symbols, reads: Vec::new() }
    }

    pub fn reads(&self) -> &[usize] {
        &self.reads
    }

    pub fn count(&self) -> usize {
        self.reads.len()
    }
}

impl SymbolReader for CountingReader<'_> {
    fn read(&mut self, index: usize) -> FieldElement {
        self.reads.push(index);
        self.symbols[index]
    }
}

/// `[1, 2, ..., q - 1, ∞]`: every line parameter except 0.
pub fn query_parameters(field: &FieldSpec) -> Vec<LineParam> {
    field.nonzero_elements().map(LineParam::Finite).chain([LineParam::Infinity]).collect()
}

/// The queries of one decoding attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryPlan {
    pub target: ProjPoint,
    pub direction: ProjPoint,
    pub lambdas: Vec<LineParam>,
    pub coords: Vec<ProjPoint>,
    pub scalars: Vec<FieldElement>,
    /// Codeword positions of `coords`.
    pub indices: Vec<usize>,
}

/// Local decoder for `PRM_q(d, m)`.
#[derive(Clone, Debug)]
pub struct PrmLocalDecoder {
    space: ProjectiveSpace,
    d: u32,
}

impl PrmLocalDecoder {
    pub fn new(spec: &CodeSpec) -> Result<Self> {
        if spec.family() != Family::Prm {
            return Err(Error::InvalidSpec(format!("PRM decoder given a {} spec", spec.family())));
        }
        let space = ProjectiveSpace::new(spec.field().clone(), spec.m().unwrap_or(1))?;
        Ok(PrmLocalDecoder { space, d: spec.d() })
    }

    pub fn space(&self) -> &ProjectiveSpace {
        &self.space
    }

    pub fn field(&self) -> &FieldSpec {
        self.space.field()
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    fn point_at(&self, index: usize) -> Result<ProjPoint> {
        if index >= self.space.len() {
            return Err(Error::InvalidSpec(format!("index {index} out of range for length {}", self.space.len())));
        }
        Ok(self.space.point(index))
    }

    /// Uniform `v` among the `n - 1` points other than `w`.
    fn draw_direction<R: Rng + ?Sized>(&self, w_index: usize, rng: &mut R) -> ProjPoint {
        let mut idx = rng.gen_range(0..self.space.len() - 1);
        if idx >= w_index {
            idx += 1;
        }
        self.space.point(idx)
    }

    /// Randomized query selection for the point `w`.
    pub fn plan<R: Rng + ?Sized>(&self, w: &ProjPoint, rng: &mut R) -> Result<QueryPlan> {
        let w_index = self.space.index_of(w)?;
        let v = self.draw_direction(w_index, rng);
        let mut params = query_parameters(self.field());
        params.shuffle(rng);
        params.truncate(self.d as usize + 1);
        self.plan_with(w, &v, params)
    }

    /// Builds the plan for a given direction and parameter list.
    pub fn plan_with(&self, w: &ProjPoint, v: &ProjPoint, lambdas: Vec<LineParam>) -> Result<QueryPlan> {
        let q = self.field().q();
        if self.d > q - 1 {
            return Err(Error::DegreeTooLarge { d: self.d, max: q - 1 });
        }
        if w == v {
            return Err(Error::SamePoint);
        }
        if lambdas.contains(&LineParam::Finite(FieldElement::ZERO)) {
            return Err(Error::InvalidSpec("query parameter 0 would read the target".into()));
        }
        let mut coords = Vec::with_capacity(lambdas.len());
        let mut scalars = Vec::with_capacity(lambdas.len());
        let mut indices = Vec::with_capacity(lambdas.len());
        for &lambda in &lambdas {
            let (pt, scale) = self.space.line_point(w, v, lambda)?;
            indices.push(self.space.index_of(&pt)?);
            coords.push(pt);
            scalars.push(scale);
        }
        Ok(QueryPlan { target: w.clone(), direction: v.clone(), lambdas, coords, scalars, indices })
    }

    /// Recovers `F(w)` from responses `e_i = F(coords[i])` by interpolating
    /// `H(λ_i) = D_i^d e_i` and returning `H(0)`.
    pub fn reconstruct(&self, plan: &QueryPlan, responses: &[FieldElement]) -> Result<FieldElement> {
        if responses.len() != self.d as usize + 1 || plan.lambdas.len() != responses.len() {
            return Err(Error::PairCount { expected: plan.lambdas.len(), actual: responses.len() });
        }
        let pairs = self.scaled_pairs(plan, responses);
        let h = rscodec::interpolate(self.field(), &pairs, self.d)?;
        Ok(h.coeffs()[0])
    }

    fn scaled_pairs(&self, plan: &QueryPlan, responses: &[FieldElement]) -> Vec<EvalPair> {
        let f = self.field();
        plan.lambdas
            .iter()
            .zip(&plan.scalars)
            .zip(responses)
            .map(|((&param, &scale), &e)| EvalPair { param, value: f.mul(f.pow(scale, self.d as u64), e) })
            .collect()
    }

    fn read_plan<S: SymbolReader + ?Sized>(&self, plan: &QueryPlan, reader: &mut S) -> Vec<FieldElement> {
        plan.indices.iter().map(|&i| reader.read(i)).collect()
    }

    /// Best-effort correction from `d + 1` queries. The whole plan is fixed
    /// before the first read.
    pub fn correct_t1<S, R>(&self, reader: &mut S, index: usize, rng: &mut R) -> Result<FieldElement>
    where
        S: SymbolReader + ?Sized,
        R: Rng + ?Sized,
    {
        let w = self.point_at(index)?;
        let plan = self.plan(&w, rng)?;
        let responses = self.read_plan(&plan, reader);
        self.reconstruct(&plan, &responses)
    }

    /// The `q` queries of the error-correcting variant for direction `v`:
    /// every point of the line except `w`.
    pub fn line_plan(&self, w: &ProjPoint, v: &ProjPoint) -> Result<QueryPlan> {
        self.plan_with(w, v, query_parameters(self.field()))
    }

    /// Error-correcting local decoding along the whole line; `None` when the
    /// line holds too many errors to decode uniquely.
    pub fn correct_t2<S, R>(&self, reader: &mut S, index: usize, rng: &mut R) -> Result<Option<FieldElement>>
    where
        S: SymbolReader + ?Sized,
        R: Rng + ?Sized,
    {
        let w = self.point_at(index)?;
        let v = self.draw_direction(index, rng);
        self.correct_along(reader, &w, &v)
    }

    /// [`Self::correct_t2`] with a caller-chosen direction.
    pub fn correct_along<S: SymbolReader + ?Sized>(
        &self,
        reader: &mut S,
        w: &ProjPoint,
        v: &ProjPoint,
    ) -> Result<Option<FieldElement>> {
        let plan = self.line_plan(w, v)?;
        let responses = self.read_plan(&plan, reader);
        let pairs = self.scaled_pairs(&plan, &responses);
        Ok(rscodec::decode(self.field(), &pairs, self.d)?.map(|dec| dec.poly.coeffs()[0]))
    }
}

/// Reference local decoder for `GRM_q(d, m)` over affine lines.
#[derive(Clone, Debug)]
pub struct GrmLocalDecoder {
    field: FieldSpec,
    m: usize,
    d: u32,
    len: usize,
}

impl GrmLocalDecoder {
    pub fn new(spec: &CodeSpec) -> Result<Self> {
        if spec.family() != Family::Grm {
            return Err(Error::InvalidSpec(format!("GRM decoder given a {} spec", spec.family())));
        }
        Ok(GrmLocalDecoder {
            field: spec.field().clone(),
            m: spec.m().unwrap_or(1),
            d: spec.d(),
            len: spec.length() as usize,
        })
    }

    /// Codeword positions queried for target `index`, direction index
    /// `v_index` (nonzero), and parameters `lambdas`.
    pub fn query_indices(&self, index: usize, v_index: usize, lambdas: &[FieldElement]) -> Vec<usize> {
        let q = self.field.q();
        let w = affine_point(q, self.m, index);
        let v = affine_point(q, self.m, v_index);
        lambdas
            .iter()
            .map(|&l| {
                let pt: Vec<_> = w.iter().zip(&v).map(|(&a, &b)| self.field.add(a, self.field.mul(l, b))).collect();
                affine_index(q, &pt)
            })
            .collect()
    }

    /// Queries `d + 1` points of `{w + λv : λ ≠ 0}` for a uniform nonzero
    /// `v` and returns `H(0)`.
    pub fn correct<S, R>(&self, reader: &mut S, index: usize, rng: &mut R) -> Result<FieldElement>
    where
        S: SymbolReader + ?Sized,
        R: Rng + ?Sized,
    {
        if index >= self.len {
            return Err(Error::InvalidSpec(format!("index {index} out of range for length {}", self.len)));
        }
        let v_index = rng.gen_range(1..self.len);
        let mut lambdas: Vec<FieldElement> = self.field.nonzero_elements().take(self.d as usize + 1).collect();
        lambdas.shuffle(rng);
        let indices = self.query_indices(index, v_index, &lambdas);
        let pairs: Vec<EvalPair> =
            indices.iter().zip(&lambdas).map(|(&i, &l)| EvalPair::finite(l, reader.read(i))).collect();
        let h = rscodec::interpolate(&self.field, &pairs, self.d)?;
        Ok(h.coeffs()[0])
    }
}

/// Which query-parameter distribution a smoothness census evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryOrder {
    /// The decoder's own distribution: each slot's parameter is uniform over
    /// all of `F_q* ∪ {∞}`.
    Permuted,
    /// A fixed subset `S` (the first `d + 1` of `[1, ..., q - 1, ∞]`) in
    /// random order: each slot is uniform over `S` only.
    FixedSubset,
    /// No randomization at all: slot `i` queries `N(w + ω_i v)` for the
    /// `i`-th field element `ω_i`, one slot per element of `F_q`.
    Unpermuted,
}

impl std::str::FromStr for QueryOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "permuted" => Ok(QueryOrder::Permuted),
            "fixed-subset" => Ok(QueryOrder::FixedSubset),
            "unpermuted" => Ok(QueryOrder::Unpermuted),
            other => Err(Error::InvalidSpec(format!("unknown query order {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotCensus {
    /// Parameters the slot ranges over, each with equal weight.
    pub support: Vec<String>,
    /// `counts[p]` = number of (v, λ) pairs for which this slot reads `p`.
    /// The probability of reading `p` is `counts[p] / ((n - 1) |support|)`.
    pub counts: Vec<u64>,
}

impl SlotCensus {
    /// Whether the slot reads every point other than `target` equally often
    /// and never reads `target`.
    pub fn is_uniform(&self, target: usize) -> bool {
        if self.counts[target] != 0 {
            return false;
        }
        let mut others = self.counts.iter().enumerate().filter(|&(i, _)| i != target).map(|(_, &c)| c);
        match others.next() {
            None => true,
            Some(first) => others.all(|c| c == first),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub target: usize,
    pub order: QueryOrder,
    pub slots: Vec<SlotCensus>,
}

impl CensusTable {
    pub fn is_uniform(&self) -> bool {
        self.slots.iter().all(|s| s.is_uniform(self.target))
    }

    pub fn non_uniform_slots(&self) -> Vec<usize> {
        (0..self.slots.len()).filter(|&j| !self.slots[j].is_uniform(self.target)).collect()
    }
}

/// Largest code length the census will enumerate.
pub const CENSUS_CAP: usize = 10_000;

impl PrmLocalDecoder {
    /// Exhaustive per-slot query distribution for target `index`, over every
    /// direction `v ≠ w` and every parameter in the slot's support.
    pub fn smoothness_census(&self, index: usize, order: QueryOrder) -> Result<CensusTable> {
        let n = self.space.len();
        if n > CENSUS_CAP {
            return Err(Error::CapExceeded { size: n as u128, cap: CENSUS_CAP as u128 });
        }
        let field = self.field();
        let slots_support: Vec<Vec<LineParam>> = match order {
            QueryOrder::Permuted => vec![query_parameters(field); self.d as usize + 1],
            QueryOrder::FixedSubset => {
                let mut s = query_parameters(field);
                s.truncate(self.d as usize + 1);
                vec![s; self.d as usize + 1]
            }
            QueryOrder::Unpermuted => field.elements().map(|x| vec![LineParam::Finite(x)]).collect(),
        };
        let w = self.point_at(index)?;
        let mut slots = Vec::with_capacity(slots_support.len());
        for support in slots_support {
            let mut counts = vec![0u64; n];
            for v_index in (0..n).filter(|&i| i != index) {
                let v = self.space.point(v_index);
                for &lambda in &support {
                    let (pt, _) = self.space.line_point(&w, &v, lambda)?;
                    counts[self.space.index_of(&pt)?] += 1;
                }
            }
            slots.push(SlotCensus { support: support.iter().map(ToString::to_string).collect(), counts });
        }
        Ok(CensusTable { target: index, order, slots })
    }

    /// `counts[p]` = number of directions `v ≠ w` whose line through `w`
    /// contains `p`.
    pub fn line_membership_counts(&self, index: usize) -> Result<Vec<u64>> {
        let n = self.space.len();
        if n > CENSUS_CAP {
            return Err(Error::CapExceeded { size: n as u128, cap: CENSUS_CAP as u128 });
        }
        let w = self.point_at(index)?;
        let params = query_parameters(self.field());
        let mut counts = vec![0u64; n];
        for v_index in (0..n).filter(|&i| i != index) {
            let v = self.space.point(v_index);
            for &lambda in &params {
                let (pt, _) = self.space.line_point(&w, &v, lambda)?;
                counts[self.space.index_of(&pt)?] += 1;
            }
        }
        Ok(counts)
    }
}
