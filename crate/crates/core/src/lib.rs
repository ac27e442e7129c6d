//! Digit-reversing multiples.
//!
//! A positive integer `M` is a `(g, k)`-reverse multiple when reversing its
//! base-`g` digits gives the base-`g` digits of `k * M`, as with
//! `4 * 2178 = 8712` and `9 * 1089 = 9801`.
//!
//! - [`digits`]: canonical digit sequences, reversal and small-scalar products.
//! - [`verifier`]: the defining predicate and a brute-force oracle.
//! - [`younggraph`]: a carry-pair automaton that enumerates, counts and
//!   decides existence for any base and multiplier.
//! - [`structural`]: the block forms of the decimal `k = 4` and `k = 9` cases.

pub mod digits;
pub mod error;
pub mod structural;
pub mod verifier;
pub mod younggraph;

pub use digits::DigitSequence;
pub use error::{Error, Result};
pub use structural::{
    block, count_structural, generate_up_to, palindrome_count, recognize, BlockForm,
    RecognitionResult, Rejection,
};
pub use verifier::{
    brute_force_enumerate, brute_force_enumerate_with_budget, classify, is_reverse_multiple,
    EnumerationRecord, Source, DEFAULT_BUDGET,
};
pub use younggraph::{CarryPairAutomaton, CarryPairState, Move};
