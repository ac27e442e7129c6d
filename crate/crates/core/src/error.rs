use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty digit string")]
    Empty,

    #[error("base {0} is outside the supported range [2, 36]")]
    BaseOutOfRange(u32),

    #[error("invalid digit {found:?} at position {position} for base {base}")]
    InvalidDigit {
        found: char,
        position: usize,
        base: u32,
    },

    #[error("digit value {value} at position {position} is not below base {base}")]
    DigitOutOfRange {
        value: u32,
        position: usize,
        base: u32,
    },

    #[error("leading zero: a canonical expansion starts with a non-zero digit")]
    LeadingZero,

    #[error("multiplier {k} is outside [1, {base})")]
    MultiplierOutOfRange { k: u32, base: u32 },

    #[error("digit sequences have different bases ({0} and {1})")]
    BaseMismatch(u32, u32),

    #[error("length must be at least 1")]
    ZeroLength,

    #[error(
        "brute force would scan {candidates} candidates, over the budget of {budget}; \
         use the automaton enumerator instead"
    )]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("block forms exist only for k = 4 and k = 9 in base 10, got k = {0}")]
    UnsupportedBlockMultiplier(u32),

    #[error("a block form needs at least one block")]
    NoBlocks,

    #[error("{blocks} blocks need {} separators, got {separators}", blocks - 1)]
    SeparatorCount { blocks: usize, separators: usize },

    #[error("{0} parameters are not palindromic")]
    NonPalindromicParams(&'static str),
}
