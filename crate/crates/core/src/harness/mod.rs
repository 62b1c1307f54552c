//! Corruption model and Monte-Carlo estimation of local-correction failure
//! rates.

pub mod cli;

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{Code, CodeSpec, Codeword, Family};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::localdec::{rng_from_seed, CountingReader, GrmLocalDecoder, PrmLocalDecoder};

/// Number of positions `corrupt` changes: `⌊δn⌋`.
pub fn corruption_count(delta: f64, n: usize) -> usize {
    // absorb representation error such as 0.29 * 100 = 28.999...
    let raw = (delta * n as f64 + 1e-9).floor();
    (raw.max(0.0) as usize).min(n)
}

/// Replaces exactly `⌊δn⌋` distinct, uniformly chosen positions with a
/// uniformly chosen different symbol. Returns the new word and the sorted
/// positions.
pub fn corrupt<R: Rng + ?Sized>(codeword: &Codeword, delta: f64, rng: &mut R) -> Result<(Codeword, Vec<usize>)> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::InvalidSpec(format!("delta must lie in [0, 1], got {delta}")));
    }
    let (symbols, positions) = corrupt_symbols(codeword.spec.field(), &codeword.symbols, delta, rng);
    Ok((Codeword { spec: codeword.spec.clone(), symbols }, positions))
}

fn corrupt_symbols<R: Rng + ?Sized>(
    field: &FieldSpec,
    symbols: &[FieldElement],
    delta: f64,
    rng: &mut R,
) -> (Vec<FieldElement>, Vec<usize>) {
    let n = symbols.len();
    let count = corruption_count(delta, n);
    let mut positions = rand::seq::index::sample(rng, n, count).into_vec();
    positions.sort_unstable();
    let mut out = symbols.to_vec();
    let q = field.q();
    for &pos in &positions {
        let r = rng.gen_range(0..q - 1);
        let old = out[pos].value();
        out[pos] = FieldElement(if r < old { r } else { r + 1 });
    }
    (out, positions)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `d + 1` queries, no error detection.
    T1,
    /// `q` queries along the whole line with unique decoding.
    T2,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t1" => Ok(Mode::T1),
            "t2" => Ok(Mode::T2),
            other => Err(Error::InvalidSpec(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimConfig {
    pub family: Family,
    pub p: u32,
    pub k: u32,
    pub d: u32,
    pub m: Option<usize>,
    pub delta: f64,
    pub sigma: f64,
    pub trials: u64,
    pub seed: u64,
    pub mode: Mode,
}

impl SimConfig {
    /// The failure-probability bound the decoder is supposed to meet:
    /// `(d + 1)δ` for T1 and the GRM decoder, `2δ / (1 - σ)` for T2.
    pub fn bound(&self) -> f64 {
        match self.mode {
            Mode::T1 => (self.d as f64 + 1.0) * self.delta,
            Mode::T2 => 2.0 * self.delta / (1.0 - self.sigma),
        }
    }
}

/// Smallest σ with `d <= σq - 1`.
pub fn default_sigma(d: u32, q: u32) -> f64 {
    (d as f64 + 1.0) / q as f64
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Outcomes {
    pub success: u64,
    pub wrong: u64,
    pub failed: u64,
}

impl Outcomes {
    fn merge(self, o: Outcomes) -> Outcomes {
        Outcomes { success: self.success + o.success, wrong: self.wrong + o.wrong, failed: self.failed + o.failed }
    }

    pub fn total(&self) -> u64 {
        self.success + self.wrong + self.failed
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimReport {
    pub config: SimConfig,
    pub outcomes: Outcomes,
    pub failure_rate: f64,
    pub bound: f64,
    pub wall_time: f64,
}

impl SimReport {
    pub const CSV_HEADER: &'static str = "family,p,k,d,m,delta,sigma,trials,seed,success,wrong,failed,bound";

    pub fn csv_row(&self) -> String {
        let c = &self.config;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            c.family,
            c.p,
            c.k,
            c.d,
            c.m.map(|m| m.to_string()).unwrap_or_default(),
            c.delta,
            c.sigma,
            c.trials,
            c.seed,
            self.outcomes.success,
            self.outcomes.wrong,
            self.outcomes.failed,
            self.bound
        )
    }
}

pub fn write_csv<W: Write>(out: &mut W, reports: &[SimReport]) -> std::io::Result<()> {
    writeln!(out, "{}", SimReport::CSV_HEADER)?;
    for r in reports {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

enum Decoder {
    Prm(PrmLocalDecoder),
    Grm(GrmLocalDecoder),
}

/// Runs `trials` independent trials. Trial `i` uses the generator seeded
/// with `seed ^ i` to draw, in order: a uniform message, the corruption, the
/// target index, and the decoder's own randomness.
pub fn simulate(config: &SimConfig) -> Result<SimReport> {
    let start = Instant::now();
    let field = FieldSpec::new(config.p, config.k)?;
    let spec = CodeSpec::new(config.family, field.clone(), config.d, config.m)?;
    let decoder = match (config.family, config.mode) {
        (Family::Prm, _) => Decoder::Prm(PrmLocalDecoder::new(&spec)?),
        (Family::Grm, Mode::T1) => Decoder::Grm(GrmLocalDecoder::new(&spec)?),
        (family, mode) => {
            return Err(Error::InvalidSpec(format!("no local decoder for {family} in mode {mode:?}")));
        }
    };
    if !(0.0..=1.0).contains(&config.delta) {
        return Err(Error::InvalidSpec(format!("delta must lie in [0, 1], got {}", config.delta)));
    }
    let code = Code::new(spec)?;
    let q = field.q();
    let outcomes = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<Outcomes> {
            let mut rng = rng_from_seed(config.seed ^ trial);
            let msg: Vec<_> = (0..code.message_length()).map(|_| FieldElement(rng.gen_range(0..q))).collect();
            let clean = code.encode_message(&msg)?;
            let (word, _) = corrupt_symbols(&field, &clean.symbols, config.delta, &mut rng);
            let index = rng.gen_range(0..word.len());
            let mut reader = CountingReader::new(&word);
            let got = match (&decoder, config.mode) {
                (Decoder::Prm(dec), Mode::T1) => Some(dec.correct_t1(&mut reader, index, &mut rng)?),
                (Decoder::Prm(dec), Mode::T2) => dec.correct_t2(&mut reader, index, &mut rng)?,
                (Decoder::Grm(dec), _) => Some(dec.correct(&mut reader, index, &mut rng)?),
            };
            let mut o = Outcomes::default();
            match got {
                Some(v) if v == clean.symbols[index] => o.success = 1,
                Some(_) => o.wrong = 1,
                None => o.failed = 1,
            }
            Ok(o)
        })
        .try_reduce(Outcomes::default, |a, b| Ok(a.merge(b)))?;
    let failure_rate =
        if config.trials == 0 { 0.0 } else { (outcomes.wrong + outcomes.failed) as f64 / config.trials as f64 };
    Ok(SimReport {
        config: config.clone(),
        outcomes,
        failure_rate,
        bound: config.bound(),
        wall_time: start.elapsed().as_secs_f64(),
    })
}
