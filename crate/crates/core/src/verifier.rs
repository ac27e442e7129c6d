//! The defining predicate and the brute-force oracle.
//!
//! `M` is a `(g, k)`-reverse multiple when the reversal of its base-`g`
//! expansion is the base-`g` expansion of `k * M`. Everything else in the
//! crate is checked against [`brute_force_enumerate`].

use std::fmt;

use rayon::prelude::*;

use crate::digits::{check_base, check_multiplier, DigitSequence};
use crate::error::{Error, Result};

/// Default cap on the number of canonical sequences the oracle may scan.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Which producer discovered a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    Oracle,
    Automaton,
    Structural,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Oracle => "oracle",
            Source::Automaton => "automaton",
            Source::Structural => "structural",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRecord {
    pub value: DigitSequence,
    pub k: u32,
    pub base: u32,
    pub length: usize,
    pub source: Source,
}

impl EnumerationRecord {
    pub(crate) fn new(value: DigitSequence, k: u32, source: Source) -> Self {
        Self {
            base: value.base(),
            length: value.len(),
            value,
            k,
            source,
        }
    }
}

/// Digit-by-digit check that `reverse(digits) == k * digits` in `base`.
///
/// Walks the product from the least significant position, comparing each
/// output digit against the mirrored input digit, and rejects as soon as one
/// differs or a carry is left over at the top.
fn reverses_under(digits: &[u8], base: u32, k: u32) -> bool {
    let n = digits.len() - 1;
    if digits[n] == 0 {
        return false;
    }
    let mut carry = 0u32;
    for j in 0..=n {
        let t = k * u32::from(digits[n - j]) + carry;
        if t % base != u32::from(digits[j]) {
            return false;
        }
        carry = t / base;
    }
    carry == 0
}

pub fn is_reverse_multiple(d: &DigitSequence, k: u32) -> Result<bool> {
    check_multiplier(d.base(), k)?;
    Ok(reverses_under(d.digits(), d.base(), k))
}

/// Every `k` in `[1, base)` for which `d` is a reverse multiple, ascending.
pub fn classify(d: &DigitSequence) -> Vec<u32> {
    (1..d.base())
        .filter(|&k| reverses_under(d.digits(), d.base(), k))
        .collect()
}

pub fn brute_force_enumerate(base: u32, k: u32, length: usize) -> Result<Vec<EnumerationRecord>> {
    brute_force_enumerate_with_budget(base, k, length, DEFAULT_BUDGET)
}

/// Number of canonical `length`-digit sequences in `base`, or `None` on overflow.
fn canonical_count(base: u32, length: usize) -> Option<u128> {
    let exp = u32::try_from(length - 1).ok()?;
    u128::from(base)
        .checked_pow(exp)
        .and_then(|p| p.checked_mul(u128::from(base - 1)))
}

/// Scans every canonical `length`-digit sequence, skipping outer digit pairs
/// that violate `a_n = k * a_0 (mod base)`.
pub fn brute_force_enumerate_with_budget(
    base: u32,
    k: u32,
    length: usize,
    budget: u128,
) -> Result<Vec<EnumerationRecord>> {
    check_base(base)?;
    check_multiplier(base, k)?;
    if length == 0 {
        return Err(Error::ZeroLength);
    }
    let candidates = canonical_count(base, length).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }

    let g = base as u8;
    let mut found: Vec<Vec<u8>> = if length == 1 {
        (1..g)
            .map(|d| vec![d])
            .filter(|v| reverses_under(v, base, k))
            .collect()
    } else {
        let outer: Vec<(u8, u8)> = (1..g)
            .flat_map(|hi| (1..g).map(move |lo| (hi, lo)))
            .filter(|&(hi, lo)| u32::from(hi) % base == (k * u32::from(lo)) % base)
            .collect();
        outer
            .par_iter()
            .flat_map_iter(|&(hi, lo)| scan_middle(base, k, length, hi, lo))
            .collect()
    };
    found.sort();

    found
        .into_iter()
        .map(|digits| {
            let value = DigitSequence::new(base, digits).expect("scan yields canonical digits");
            Ok(EnumerationRecord::new(value, k, Source::Oracle))
        })
        .collect()
}

/// Odometer over all middle digits with the outer pair fixed.
fn scan_middle(base: u32, k: u32, length: usize, hi: u8, lo: u8) -> Vec<Vec<u8>> {
    let g = base as u8;
    let mut digits = vec![0u8; length];
    digits[0] = hi;
    digits[length - 1] = lo;
    let mut out = Vec::new();
    loop {
        if reverses_under(&digits, base, k) {
            out.push(digits.clone());
        }
        // Advance the middle positions as a little-endian counter.
        let mut pos = length - 2;
        loop {
            if pos == 0 {
                return out;
            }
            digits[pos] += 1;
            if digits[pos] < g {
                break;
            }
            digits[pos] = 0;
            pos -= 1;
        }
    }
}
