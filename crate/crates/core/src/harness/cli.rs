//! Command-line front end for the `prm` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{corrupt, default_sigma, simulate, write_csv, Mode, SimConfig};
use crate::codes::{
    ers_encode, grm_encode, min_distance_bruteforce, prm_encode, Code, CodeSpec, Codeword, Family, DEFAULT_DISTANCE_CAP,
};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::localdec::{rng_from_seed, CountingReader, GrmLocalDecoder, PrmLocalDecoder, QueryOrder};
use crate::polynomial::{BoundedDegreePoly, HomogeneousPoly, UnivariatePoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DECODE_FAILURE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "prm", version, about = "Projective Reed-Muller codes and local correction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long, default_value = "prm")]
    family: Family,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    m: Option<usize>,
}

impl CodeArgs {
    fn spec(&self) -> Result<CodeSpec> {
        CodeSpec::new(self.family, FieldSpec::new(self.p, self.k)?, self.d, self.m)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print length, dimension, query complexity and tabulated distance.
    Params(CodeArgs),
    /// Encode a message (or polynomial file) and print the codeword.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated message symbols in monomial order.
        #[arg(long, value_delimiter = ',', conflicts_with = "poly")]
        message: Option<Vec<u32>>,
        /// JSON polynomial file.
        #[arg(long)]
        poly: Option<PathBuf>,
        /// Seed for a uniformly random message when neither is given.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corrupt exactly floor(delta * n) positions of a codeword file.
    Corrupt {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locally correct one symbol of a (possibly corrupted) codeword file.
    LocalCorrect {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value = "t1")]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte-Carlo failure rate of the local decoder.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        /// One or more comma-separated corruption rates.
        #[arg(long, value_delimiter = ',', required = true)]
        delta: Vec<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "t1")]
        mode: Mode,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive per-slot query distribution of the PRM local decoder.
    Census {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: usize,
        /// Single target index; every target when absent.
        #[arg(long)]
        w: Option<usize>,
        #[arg(long, default_value = "permuted")]
        order: QueryOrder,
    },
    /// Brute-force minimum distance over all nonzero messages.
    MinDistance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_CAP)]
        cap: u128,
    },
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_json_to<T: Serialize>(path: Option<&Path>, out: &mut dyn Write, value: &T) -> Result<()> {
    match path {
        Some(path) => {
            let mut text = serde_json::to_string(value)?;
            text.push('\n');
            fs::write(path, text)?;
            Ok(())
        }
        None => print_json(out, value),
    }
}

fn read_codeword(path: &Path) -> Result<Codeword> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Params(code) => {
            let spec = code.spec()?;
            let params = spec.code_params();
            print_json(
                out,
                &json!({
                    "family": spec.family(),
                    "p": code.p,
                    "k": code.k,
                    "q": spec.field().q(),
                    "d": code.d,
                    "m": code.m,
                    "query_complexity": params.query_complexity,
                    "message_length": params.message_length,
                    "code_length": params.code_length,
                    "table_distance": params.table_distance,
                }),
            )?;
        }
        Command::Encode { code, message, poly, seed, out: path } => {
            let spec = code.spec()?;
            let word = match poly {
                Some(file) => encode_poly_file(&spec, &file)?,
                None => {
                    let code = Code::new(spec)?;
                    let q = code.field().q();
                    let msg: Vec<FieldElement> = match message {
                        Some(values) => values.into_iter().map(FieldElement).collect(),
                        None => {
                            let mut rng = rng_from_seed(seed);
                            (0..code.message_length()).map(|_| FieldElement(rng.gen_range(0..q))).collect()
                        }
                    };
                    code.encode_message(&msg)?
                }
            };
            write_json_to(path.as_deref(), out, &word)?;
        }
        Command::Corrupt { input, delta, seed, out: path } => {
            let word = read_codeword(&input)?;
            let mut rng = rng_from_seed(seed);
            let (bad, positions) = corrupt(&word, delta, &mut rng)?;
            write_json_to(path.as_deref(), out, &bad)?;
            print_json(err, &json!({ "corrupted_positions": positions }))?;
        }
        Command::LocalCorrect { input, index, mode, seed } => {
            let word = read_codeword(&input)?;
            if index >= word.len() {
                return Err(Error::InvalidSpec(format!("index {index} out of range for length {}", word.len())));
            }
            let mut rng = rng_from_seed(seed);
            let mut reader = CountingReader::new(&word.symbols);
            let value = match (word.spec.family(), mode) {
                (Family::Prm, Mode::T1) => {
                    Some(PrmLocalDecoder::new(&word.spec)?.correct_t1(&mut reader, index, &mut rng)?)
                }
                (Family::Prm, Mode::T2) => {
                    PrmLocalDecoder::new(&word.spec)?.correct_t2(&mut reader, index, &mut rng)?
                }
                (Family::Grm, Mode::T1) => {
                    Some(GrmLocalDecoder::new(&word.spec)?.correct(&mut reader, index, &mut rng)?)
                }
                (family, mode) => {
                    return Err(Error::InvalidSpec(format!("no local decoder for {family} in mode {mode:?}")));
                }
            };
            print_json(
                out,
                &json!({
                    "index": index,
                    "mode": mode,
                    "value": value,
                    "reads": reader.reads(),
                }),
            )?;
            if value.is_none() {
                return Ok(EXIT_DECODE_FAILURE);
            }
        }
        Command::Simulate { code, delta, sigma, trials, seed, mode, out: path } => {
            let q = FieldSpec::new(code.p, code.k)?.q();
            let sigma = sigma.unwrap_or_else(|| default_sigma(code.d, q));
            let mut reports = Vec::with_capacity(delta.len());
            for delta in delta {
                let config = SimConfig {
                    family: code.family,
                    p: code.p,
                    k: code.k,
                    d: code.d,
                    m: code.m,
                    delta,
                    sigma,
                    trials,
                    seed,
                    mode,
                };
                let report = simulate(&config)?;
                print_json(out, &report)?;
                reports.push(report);
            }
            if let Some(path) = path {
                let mut file = std::io::BufWriter::new(fs::File::create(path)?);
                write_csv(&mut file, &reports)?;
                file.flush()?;
            }
        }
        Command::Census { p, k, d, m, w, order } => {
            let spec = CodeSpec::prm(FieldSpec::new(p, k)?, d, m)?;
            let decoder = PrmLocalDecoder::new(&spec)?;
            let n = decoder.space().len();
            let mut base = json!({ "p": p, "k": k, "d": d, "m": m, "order": order });
            match w {
                Some(target) => {
                    if target >= n {
                        return Err(Error::InvalidSpec(format!("target {target} out of range for length {n}")));
                    }
                    let table = decoder.smoothness_census(target, order)?;
                    base["uniform"] = json!(table.is_uniform());
                    base["target"] = json!(target);
                    base["slots"] = json!(table.slots);
                }
                None => {
                    let tables = (0..n)
                        .into_par_iter()
                        .map(|t| decoder.smoothness_census(t, order))
                        .collect::<Result<Vec<_>>>()?;
                    let summary: Vec<_> = tables
                        .iter()
                        .map(|t| json!({ "target": t.target, "uniform": t.is_uniform(), "non_uniform_slots": t.non_uniform_slots() }))
                        .collect();
                    base["uniform"] = json!(tables.iter().all(|t| t.is_uniform()));
                    base["targets"] = json!(summary);
                }
            }
            print_json(out, &base)?;
        }
        Command::MinDistance { code, cap } => {
            let spec = code.spec()?;
            let distance = min_distance_bruteforce(&spec, cap)?;
            print_json(
                out,
                &json!({
                    "family": spec.family(),
                    "p": code.p,
                    "k": code.k,
                    "d": code.d,
                    "m": code.m,
                    "min_distance": distance,
                    "table_distance": spec.code_params().table_distance,
                }),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn encode_poly_file(spec: &CodeSpec, file: &Path) -> Result<Codeword> {
    let text = fs::read_to_string(file)?;
    match spec.family() {
        Family::Prm => prm_encode(&serde_json::from_str::<HomogeneousPoly>(&text)?, spec),
        Family::Grm => grm_encode(&serde_json::from_str::<BoundedDegreePoly>(&text)?, spec),
        Family::Rs | Family::Ers => ers_encode(&serde_json::from_str::<UnivariatePoly>(&text)?, spec),
    }
}
