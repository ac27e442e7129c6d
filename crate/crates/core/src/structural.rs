//! Closed-form description of the decimal reverse multiples for `k = 4` and
//! `k = 9`.
//!
//! Each one is a chain of blocks `21 9..9 78` (k = 4) or `10 9..9 89`
//! (k = 9) separated by runs of zeros, where both the list of nine-run
//! lengths and the list of zero-run lengths read the same in both
//! directions. Adjacent blocks may touch (a zero-run of length 0).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::digits::{numeric_cmp, DigitSequence};
use crate::error::{Error, Result};
use crate::verifier::{EnumerationRecord, Source};

const BLOCK_OVERHEAD: usize = 4;

/// Leading and trailing digit pairs of a block.
fn block_ends(k: u32) -> Result<([u8; 2], [u8; 2])> {
    match k {
        4 => Ok(([2, 1], [7, 8])),
        9 => Ok(([1, 0], [8, 9])),
        _ => Err(Error::UnsupportedBlockMultiplier(k)),
    }
}

fn is_palindromic(v: &[usize]) -> bool {
    v.iter().eq(v.iter().rev())
}

fn push_block(out: &mut Vec<u8>, head: [u8; 2], tail: [u8; 2], nines: usize) {
    out.extend_from_slice(&head);
    out.extend(std::iter::repeat_n(9, nines));
    out.extend_from_slice(&tail);
}

/// A single block with `nines` nines in the middle.
pub fn block(k: u32, nines: usize) -> Result<DigitSequence> {
    let (head, tail) = block_ends(k)?;
    let mut digits = Vec::with_capacity(nines + BLOCK_OVERHEAD);
    push_block(&mut digits, head, tail, nines);
    DigitSequence::new(10, digits)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockForm {
    k: u32,
    block_params: Vec<usize>,
    separator_params: Vec<usize>,
}

impl BlockForm {
    pub fn new(k: u32, block_params: Vec<usize>, separator_params: Vec<usize>) -> Result<Self> {
        block_ends(k)?;
        if block_params.is_empty() {
            return Err(Error::NoBlocks);
        }
        if separator_params.len() + 1 != block_params.len() {
            return Err(Error::SeparatorCount {
                blocks: block_params.len(),
                separators: separator_params.len(),
            });
        }
        if !is_palindromic(&block_params) {
            return Err(Error::NonPalindromicParams("block"));
        }
        if !is_palindromic(&separator_params) {
            return Err(Error::NonPalindromicParams("separator"));
        }
        Ok(Self {
            k,
            block_params,
            separator_params,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Nine-run lengths `l_1 ..= l_t`.
    pub fn block_params(&self) -> &[usize] {
        &self.block_params
    }

    /// Zero-run lengths `m_1 ..= m_{t-1}`.
    pub fn separator_params(&self) -> &[usize] {
        &self.separator_params
    }

    pub fn block_count(&self) -> usize {
        self.block_params.len()
    }

    /// Total digit count.
    pub fn len(&self) -> usize {
        self.block_params
            .iter()
            .map(|l| l + BLOCK_OVERHEAD)
            .sum::<usize>()
            + self.separator_params.iter().sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The independent parameters: the first `ceil(t/2)` nine-runs and the
    /// first `ceil((t-1)/2)` zero-runs. The rest mirror them.
    pub fn free_params(&self) -> (&[usize], &[usize]) {
        let t = self.block_count();
        (
            &self.block_params[..t.div_ceil(2)],
            &self.separator_params[..t / 2],
        )
    }

    pub fn assemble(&self) -> DigitSequence {
        let (head, tail) = block_ends(self.k).expect("validated in new");
        let mut digits = Vec::with_capacity(self.len());
        for (i, &nines) in self.block_params.iter().enumerate() {
            if i > 0 {
                digits.extend(std::iter::repeat_n(0, self.separator_params[i - 1]));
            }
            push_block(&mut digits, head, tail, nines);
        }
        DigitSequence::new(10, digits).expect("blocks start with a non-zero digit")
    }
}

/// Renders the free parameters interleaved, `l1=.., m1=.., l2=.., ...`.
impl fmt::Display for BlockForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ls, ms) = self.free_params();
        for (i, l) in ls.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "l{}={}", i + 1, l)?;
            if let Some(m) = ms.get(i) {
                write!(f, ", m{}={}", i + 1, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    /// Index of the offending digit, counted from the most significant end.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    Matched(BlockForm),
    Rejected(Rejection),
}

impl RecognitionResult {
    pub fn is_matched(&self) -> bool {
        matches!(self, RecognitionResult::Matched(_))
    }

    pub fn form(&self) -> Option<&BlockForm> {
        match self {
            RecognitionResult::Matched(form) => Some(form),
            RecognitionResult::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            RecognitionResult::Matched(_) => None,
            RecognitionResult::Rejected(r) => Some(r),
        }
    }
}

struct Cursor<'a> {
    digits: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn found(&self) -> String {
        match self.digits.get(self.pos) {
            Some(d) => d.to_string(),
            None => "end of input".to_string(),
        }
    }

    fn expect(&mut self, want: u8, context: &str) -> std::result::Result<(), Rejection> {
        if self.digits.get(self.pos) == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Rejection {
                position: self.pos,
                expected: format!("{want} {context}"),
                found: self.found(),
            })
        }
    }

    fn run_of(&mut self, want: u8) -> usize {
        let start = self.pos;
        while self.digits.get(self.pos) == Some(&want) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn at_end(&self) -> bool {
        self.pos == self.digits.len()
    }
}

fn parse_blocks(
    digits: &[u8],
    head: [u8; 2],
    tail: [u8; 2],
) -> std::result::Result<(Vec<usize>, Vec<usize>), Rejection> {
    let mut cur = Cursor { digits, pos: 0 };
    let mut ls = Vec::new();
    let mut ms = Vec::new();
    loop {
        cur.expect(head[0], "to open a block")?;
        cur.expect(head[1], "to open a block")?;
        ls.push(cur.run_of(9));
        cur.expect(tail[0], "after the nines")?;
        cur.expect(tail[1], "to close a block")?;
        if cur.at_end() {
            return Ok((ls, ms));
        }
        ms.push(cur.run_of(0));
    }
}

/// Parses `d` left to right as block, zero-run, block, ... and checks that
/// the extracted parameters are palindromic.
pub fn recognize(d: &DigitSequence, k: u32) -> Result<RecognitionResult> {
    let (head, tail) = block_ends(k)?;
    if d.base() != 10 {
        return Ok(RecognitionResult::Rejected(Rejection {
            position: 0,
            expected: "a base-10 expansion".into(),
            found: format!("base {}", d.base()),
        }));
    }
    let (ls, ms) = match parse_blocks(d.digits(), head, tail) {
        Ok(params) => params,
        Err(rejection) => return Ok(RecognitionResult::Rejected(rejection)),
    };
    for (name, params) in [("nine-run", &ls), ("zero-run", &ms)] {
        if !is_palindromic(params) {
            return Ok(RecognitionResult::Rejected(Rejection {
                position: d.len(),
                expected: format!("palindromic {name} lengths"),
                found: format!("{params:?}"),
            }));
        }
    }
    Ok(RecognitionResult::Matched(BlockForm::new(k, ls, ms)?))
}

/// Fills free parameters with total weighted length at most `budget`.
/// Mirrored entries weigh 2, the central entry (if any) weighs 1.
fn fill_free(weights: &[usize], budget: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some((&w, rest)) = weights.split_first() else {
        out.push(acc.clone());
        return;
    };
    let mut value = 0;
    while value * w <= budget {
        acc.push(value);
        fill_free(rest, budget - value * w, acc, out);
        acc.pop();
        value += 1;
    }
}

/// Expands the first half of a palindrome of length `len`.
fn mirror(half: &[usize], len: usize) -> Vec<usize> {
    (0..len).map(|i| half[i.min(len - 1 - i)]).collect()
}

/// Every block-form number with at most `max_length` digits, ascending.
pub fn generate_up_to(k: u32, max_length: usize) -> Result<Vec<EnumerationRecord>> {
    block_ends(k)?;
    let mut values = Vec::new();
    let mut t = 1;
    while BLOCK_OVERHEAD * t <= max_length {
        let budget = max_length - BLOCK_OVERHEAD * t;
        let l_free = t.div_ceil(2);
        let m_free = t / 2;
        // Weights of the free parameters: l's first, then m's.
        let weights: Vec<usize> = (0..l_free)
            .map(|i| if 2 * i + 1 == t { 1 } else { 2 })
            .chain((0..m_free).map(|i| if 2 * i + 2 == t { 1 } else { 2 }))
            .collect();
        let mut choices = Vec::new();
        fill_free(&weights, budget, &mut Vec::new(), &mut choices);
        for choice in choices {
            let ls = mirror(&choice[..l_free], t);
            let ms = if t > 1 {
                mirror(&choice[l_free..], t - 1)
            } else {
                Vec::new()
            };
            values.push(BlockForm::new(k, ls, ms)?.assemble());
        }
        t += 1;
    }
    values.sort_by(|a, b| numeric_cmp(a.digits(), b.digits()));
    values.dedup();
    Ok(values
        .into_iter()
        .map(|v| EnumerationRecord::new(v, k, Source::Structural))
        .collect())
}

fn binomial(n: usize, r: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of block forms with exactly `length` digits.
///
/// With `t` blocks, exactly one free parameter sits in the middle (the
/// central nine-run for odd `t`, the central zero-run for even `t`) and the
/// other `t - 1` are mirrored. The central one absorbs the parity of the
/// leftover `R = length - 4t`, so the count is the number of ways to spread
/// at most `R / 2` over `t - 1` mirrored parameters: `C(R/2 + t - 1, t - 1)`.
pub fn count_structural(k: u32, length: usize) -> Result<BigUint> {
    block_ends(k)?;
    Ok((1..=length / BLOCK_OVERHEAD)
        .map(|t| binomial((length - BLOCK_OVERHEAD * t) / 2 + t - 1, t - 1))
        .sum())
}

/// Number of decimal palindromes with `length` digits: `9 * 10^(ceil(length/2) - 1)`.
pub fn palindrome_count(length: usize) -> BigUint {
    if length == 0 {
        return BigUint::zero();
    }
    let half = u32::try_from(length.div_ceil(2) - 1).expect("length fits in u32");
    BigUint::from(9u32) * BigUint::from(10u32).pow(half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::is_reverse_multiple;

    fn dec(s: &str) -> DigitSequence {
        s.parse().unwrap()
    }

    fn values(records: &[EnumerationRecord]) -> Vec<String> {
        records.iter().map(|r| r.value.to_string()).collect()
    }

    #[test]
    fn block_examples() {
        assert_eq!(block(4, 0).unwrap(), dec("2178"));
        assert_eq!(block(4, 1).unwrap(), dec("21978"));
        assert_eq!(block(9, 0).unwrap(), dec("1089"));
        assert_eq!(block(9, 2).unwrap(), dec("109989"));
        assert_eq!(block(5, 0), Err(Error::UnsupportedBlockMultiplier(5)));
    }

    #[test]
    fn assemble_table_rows() {
        let rows = [
            (4, vec![0, 0], vec![0], "21782178"),
            (4, vec![0, 1, 1, 0], vec![0, 2, 0], "21782197800219782178"),
            (9, vec![0, 3, 0], vec![1, 1], "10890109998901089"),
        ];
        for (k, ls, ms, text) in rows {
            let form = BlockForm::new(k, ls, ms).unwrap();
            let d = form.assemble();
            assert_eq!(d.to_string(), text);
            assert_eq!(form.len(), text.len());
            assert_eq!(is_reverse_multiple(&d, k), Ok(true));
        }
    }

    #[test]
    fn form_validation() {
        assert_eq!(
            BlockForm::new(4, vec![0, 1], vec![0]),
            Err(Error::NonPalindromicParams("block"))
        );
        assert_eq!(
            BlockForm::new(4, vec![0, 0, 0], vec![1, 2]),
            Err(Error::NonPalindromicParams("separator"))
        );
        assert_eq!(
            BlockForm::new(4, vec![0, 0], vec![]),
            Err(Error::SeparatorCount {
                blocks: 2,
                separators: 0
            })
        );
        assert_eq!(BlockForm::new(4, vec![], vec![]), Err(Error::NoBlocks));
        assert_eq!(
            BlockForm::new(1, vec![0], vec![]),
            Err(Error::UnsupportedBlockMultiplier(1))
        );
    }

    #[test]
    fn free_params_and_display() {
        let form = BlockForm::new(4, vec![0, 1, 1, 0], vec![0, 2, 0]).unwrap();
        assert_eq!(form.free_params(), (&[0, 1][..], &[0, 2][..]));
        assert_eq!(form.to_string(), "l1=0, m1=0, l2=1, m2=2");
        let form = BlockForm::new(9, vec![0, 3, 0], vec![1, 1]).unwrap();
        assert_eq!(form.to_string(), "l1=0, m1=1, l2=3");
        let form = BlockForm::new(4, vec![2], vec![]).unwrap();
        assert_eq!(form.to_string(), "l1=2");
    }

    #[test]
    fn recognize_examples() {
        let r = recognize(&dec("219978"), 4).unwrap();
        assert_eq!(r.form(), Some(&BlockForm::new(4, vec![2], vec![]).unwrap()));

        let r = recognize(&dec("10890109998901089"), 9).unwrap();
        assert_eq!(
            r.form(),
            Some(&BlockForm::new(9, vec![0, 3, 0], vec![1, 1]).unwrap())
        );

        let r = recognize(&dec("2179"), 4).unwrap();
        assert!(!r.is_matched());
        let rej = r.rejection().unwrap();
        assert_eq!(rej.position, 3);
        assert_eq!(rej.found, "9");
        assert!(rej.expected.starts_with('8'));
    }

    #[test]
    fn recognize_rejections() {
        // Ends on a zero-run.
        let r = recognize(&dec("21780"), 4).unwrap();
        assert_eq!(r.rejection().unwrap().found, "end of input");
        // Parses, but the nine-runs are not palindromic.
        let r = recognize(&dec("217821978"), 4).unwrap();
        assert!(r.rejection().unwrap().expected.contains("nine-run"));
        // Zero-runs not palindromic.
        let r = recognize(&dec("21780217800217821978"), 4).unwrap();
        assert!(!r.is_matched());
        // A k = 4 number is not a k = 9 form.
        assert!(!recognize(&dec("2178"), 9).unwrap().is_matched());
        assert!(recognize(&dec("2178"), 3).is_err());
        let b7 = DigitSequence::parse("2156", 7).unwrap();
        assert!(!recognize(&b7, 4).unwrap().is_matched());
    }

    #[test]
    fn generate_examples() {
        assert_eq!(
            values(&generate_up_to(4, 7).unwrap()),
            ["2178", "21978", "219978", "2199978"]
        );
        assert_eq!(
            values(&generate_up_to(4, 9).unwrap()),
            [
                "2178",
                "21978",
                "219978",
                "2199978",
                "21782178",
                "21999978",
                "217802178",
                "219999978"
            ]
        );
        assert_eq!(values(&generate_up_to(9, 4).unwrap()), ["1089"]);
        assert!(generate_up_to(4, 3).unwrap().is_empty());
        assert!(generate_up_to(7, 10).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_structural(4, 8).unwrap(), BigUint::from(2u32));
        assert_eq!(count_structural(4, 4).unwrap(), BigUint::from(1u32));
        assert_eq!(count_structural(4, 3).unwrap(), BigUint::zero());
        assert_eq!(count_structural(9, 12).unwrap(), BigUint::from(5u32));
        assert!(count_structural(2, 8).is_err());
    }

    #[test]
    fn count_matches_generation() {
        for k in [4, 9] {
            let generated = generate_up_to(k, 30).unwrap();
            for n in 1..=30 {
                let by_len = generated.iter().filter(|r| r.length == n).count();
                assert_eq!(
                    count_structural(k, n).unwrap(),
                    BigUint::from(by_len),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn palindrome_count_examples() {
        assert_eq!(palindrome_count(1), BigUint::from(9u32));
        assert_eq!(palindrome_count(2), BigUint::from(9u32));
        assert_eq!(palindrome_count(3), BigUint::from(90u32));
        assert_eq!(palindrome_count(0), BigUint::zero());
        // Enumerate 100..=999 directly.
        let threes = (100..1000u32)
            .filter(|n| {
                let s = n.to_string();
                s.chars().eq(s.chars().rev())
            })
            .count();
        assert_eq!(palindrome_count(3), BigUint::from(threes));
    }
}
