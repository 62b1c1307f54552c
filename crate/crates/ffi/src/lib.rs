//! C ABI over `prm-lcc`.
//!
//! Codes are opaque `PrmCode` handles created by [`prm_code_new`] and
//! released with [`prm_code_free`]. Symbols cross the boundary as `uint32_t`
//! field elements. Every fallible call returns a [`PrmStatus`].

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use prm_lcc::codes::{min_distance_bruteforce, Code, CodeSpec, Codeword, Family, DEFAULT_DISTANCE_CAP};
use prm_lcc::harness::corrupt;
use prm_lcc::localdec::{rng_from_seed, GrmLocalDecoder, PrmLocalDecoder, SymbolReader};
use prm_lcc::{Error, FieldElement, FieldSpec};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The error-correcting decoder found too many errors on its line.
    DecodeFailure = 3,
    /// No local decoder exists for this family and mode.
    Unsupported = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrmFamily {
    Prm = 0,
    Grm = 1,
    Rs = 2,
    Ers = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrmMode {
    /// `d + 1` queries, best effort.
    T1 = 0,
    /// `q` queries with unique decoding along the line.
    T2 = 1,
}

enum Decoder {
    Prm(PrmLocalDecoder),
    Grm(GrmLocalDecoder),
    None,
}

/// Opaque code handle.
pub struct PrmCode {
    code: Code,
    decoder: Decoder,
}

fn status_of(e: &Error) -> PrmStatus {
    match e {
        Error::Io(_) | Error::Json(_) => PrmStatus::Internal,
        _ => PrmStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> PrmStatus) -> PrmStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PrmStatus::Internal)
}

unsafe fn word_from(code: &PrmCode, word: *const u32, len: usize) -> Result<Codeword, PrmStatus> {
    if word.is_null() {
        return Err(PrmStatus::NullPointer);
    }
    if len != code.code.len() {
        return Err(PrmStatus::InvalidArgument);
    }
    let symbols = slice::from_raw_parts(word, len).iter().map(|&v| FieldElement(v)).collect();
    Codeword::new(code.code.spec().clone(), symbols).map_err(|e| status_of(&e))
}

/// Builds a code. `m` is ignored for RS and ERS. On success `*out` owns a
/// handle that must be released with `prm_code_free`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn prm_code_new(
    family: PrmFamily,
    p: u32,
    k: u32,
    d: u32,
    m: u32,
    out: *mut *mut PrmCode,
) -> PrmStatus {
    guard(|| {
        if out.is_null() {
            return PrmStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let family = match family {
            PrmFamily::Prm => Family::Prm,
            PrmFamily::Grm => Family::Grm,
            PrmFamily::Rs => Family::Rs,
            PrmFamily::Ers => Family::Ers,
        };
        let m = matches!(family, Family::Prm | Family::Grm).then_some(m as usize);
        let built = FieldSpec::new(p, k).and_then(|f| CodeSpec::new(family, f, d, m)).and_then(|spec| {
            let decoder = match family {
                Family::Prm => Decoder::Prm(PrmLocalDecoder::new(&spec)?),
                Family::Grm => Decoder::Grm(GrmLocalDecoder::new(&spec)?),
                _ => Decoder::None,
            };
            Ok(PrmCode { code: Code::new(spec)?, decoder })
        });
        match built {
            Ok(code) => {
                *out = Box::into_raw(Box::new(code));
                PrmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `code` must be null or a handle from `prm_code_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn prm_code_free(code: *mut PrmCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Codeword length `n`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn prm_code_length(code: *const PrmCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.len())
}

/// Message length `k`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn prm_code_message_length(code: *const PrmCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.message_length())
}

/// Field size `q`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn prm_code_field_size(code: *const PrmCode) -> u32 {
    code.as_ref().map_or(0, |c| c.code.field().q())
}

/// Encodes `message` (monomial order) into `out`.
///
/// # Safety
/// `message` must hold `message_len` values and `out` must have room for
/// `out_len` values.
#[no_mangle]
pub unsafe extern "C" fn prm_code_encode(
    code: *const PrmCode,
    message: *const u32,
    message_len: usize,
    out: *mut u32,
    out_len: usize,
) -> PrmStatus {
    guard(|| {
        let (Some(code), false, false) = (code.as_ref(), message.is_null(), out.is_null()) else {
            return PrmStatus::NullPointer;
        };
        if out_len != code.code.len() {
            return PrmStatus::InvalidArgument;
        }
        let msg: Vec<_> = slice::from_raw_parts(message, message_len).iter().map(|&v| FieldElement(v)).collect();
        match code.code.encode_message(&msg) {
            Ok(word) => {
                let dst = slice::from_raw_parts_mut(out, out_len);
                for (d, s) in dst.iter_mut().zip(&word.symbols) {
                    *d = s.value();
                }
                PrmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Writes `word` with exactly `floor(delta * n)` positions changed to `out`.
///
/// # Safety
/// `word` and `out` must each hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn prm_code_corrupt(
    code: *const PrmCode,
    word: *const u32,
    len: usize,
    delta: f64,
    seed: u64,
    out: *mut u32,
) -> PrmStatus {
    guard(|| {
        let Some(code) = code.as_ref() else {
            return PrmStatus::NullPointer;
        };
        if out.is_null() {
            return PrmStatus::NullPointer;
        }
        let word = match word_from(code, word, len) {
            Ok(w) => w,
            Err(s) => return s,
        };
        let mut rng = rng_from_seed(seed);
        match corrupt(&word, delta, &mut rng) {
            Ok((bad, _)) => {
                let dst = slice::from_raw_parts_mut(out, len);
                for (d, s) in dst.iter_mut().zip(&bad.symbols) {
                    *d = s.value();
                }
                PrmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Locally corrects symbol `index` of `word`. Returns `DecodeFailure` when
/// mode T2 cannot decode the sampled line; `*value` is then untouched.
///
/// # Safety
/// `word` must hold `len` values and `value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn prm_local_correct(
    code: *const PrmCode,
    word: *const u32,
    len: usize,
    index: usize,
    mode: PrmMode,
    seed: u64,
    value: *mut u32,
) -> PrmStatus {
    guard(|| {
        let Some(code) = code.as_ref() else {
            return PrmStatus::NullPointer;
        };
        if value.is_null() {
            return PrmStatus::NullPointer;
        }
        let word = match word_from(code, word, len) {
            Ok(w) => w,
            Err(s) => return s,
        };
        if index >= len {
            return PrmStatus::InvalidArgument;
        }
        let mut rng = rng_from_seed(seed);
        let mut reader = |i: usize| word.symbols[i];
        let reader: &mut dyn SymbolReader = &mut reader;
        let got = match (&code.decoder, mode) {
            (Decoder::Prm(dec), PrmMode::T1) => dec.correct_t1(reader, index, &mut rng).map(Some),
            (Decoder::Prm(dec), PrmMode::T2) => dec.correct_t2(reader, index, &mut rng),
            (Decoder::Grm(dec), PrmMode::T1) => dec.correct(reader, index, &mut rng).map(Some),
            _ => return PrmStatus::Unsupported,
        };
        match got {
            Ok(Some(v)) => {
                *value = v.value();
                PrmStatus::Ok
            }
            Ok(None) => PrmStatus::DecodeFailure,
            Err(e) => status_of(&e),
        }
    })
}

/// Brute-force minimum distance. Fails with `InvalidArgument` when `q^k`
/// exceeds 2^20 messages.
///
/// # Safety
/// `distance` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn prm_code_min_distance(code: *const PrmCode, distance: *mut usize) -> PrmStatus {
    guard(|| {
        let Some(code) = code.as_ref() else {
            return PrmStatus::NullPointer;
        };
        if distance.is_null() {
            return PrmStatus::NullPointer;
        }
        match min_distance_bruteforce(code.code.spec(), DEFAULT_DISTANCE_CAP) {
            Ok(dist) => {
                *distance = dist;
                PrmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn prm_status_message(status: PrmStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        PrmStatus::Ok => b"ok\0",
        PrmStatus::NullPointer => b"null pointer argument\0",
        PrmStatus::InvalidArgument => b"invalid argument\0",
        PrmStatus::DecodeFailure => b"too many errors to decode\0",
        PrmStatus::Unsupported => b"no local decoder for this family and mode\0",
        PrmStatus::Internal => b"internal error\0",
    };
    msg.as_ptr().cast()
}
