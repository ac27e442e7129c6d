//! Base-g digit sequences.
//!
//! A [`DigitSequence`] is the canonical expansion of a positive integer,
//! stored most significant digit first. Positions used by carry equations
//! (`a_0` is the least significant digit) are computed from the length.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MIN_BASE: u32 = 2;
pub const MAX_BASE: u32 = 36;

pub(crate) fn check_base(base: u32) -> Result<()> {
    if (MIN_BASE..=MAX_BASE).contains(&base) {
        Ok(())
    } else {
        Err(Error::BaseOutOfRange(base))
    }
}

pub(crate) fn check_multiplier(base: u32, k: u32) -> Result<()> {
    if k >= 1 && k < base {
        Ok(())
    } else {
        Err(Error::MultiplierOutOfRange { k, base })
    }
}

/// Numeric order of two canonical digit strings in the same base.
pub(crate) fn numeric_cmp(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitSequence {
    base: u32,
    digits: Vec<u8>,
}

impl DigitSequence {
    /// Builds a sequence from digit values, most significant first.
    pub fn new(base: u32, digits: Vec<u8>) -> Result<Self> {
        check_base(base)?;
        if digits.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((position, &d)) = digits
            .iter()
            .enumerate()
            .find(|(_, &d)| u32::from(d) >= base)
        {
            return Err(Error::DigitOutOfRange {
                value: d.into(),
                position,
                base,
            });
        }
        if digits[0] == 0 {
            return Err(Error::LeadingZero);
        }
        Ok(Self { base, digits })
    }

    pub fn parse(text: &str, base: u32) -> Result<Self> {
        check_base(base)?;
        if text.is_empty() {
            return Err(Error::Empty);
        }
        let digits = text
            .chars()
            .enumerate()
            .map(|(position, ch)| {
                ch.to_digit(base)
                    .map(|v| v as u8)
                    .ok_or(Error::InvalidDigit {
                        found: ch,
                        position,
                        base,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, digits)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `j` counted from the least significant end (`a_j`).
    pub fn digit_at(&self, j: usize) -> u8 {
        self.digits[self.digits.len() - 1 - j]
    }

    /// The digits in reverse order. The result is a raw digit vector: it is a
    /// canonical expansion only when the last digit of `self` is non-zero.
    pub fn reverse(&self) -> Vec<u8> {
        self.digits.iter().rev().copied().collect()
    }

    /// `k` times this number, by schoolbook multiplication.
    pub fn scalar_multiply(&self, k: u32) -> Result<DigitSequence> {
        self.scalar_multiply_with_carries(k)
            .map(|(product, _)| product)
    }

    /// `k` times this number together with the carries `c_0 ..= c_{n+1}`,
    /// where `c_j` is the carry flowing into position `j` and
    /// `k * a_j + c_j = out_j + base * c_{j+1}`. `c_0` is always zero and the
    /// final carry becomes the extra leading digit when it is non-zero.
    pub fn scalar_multiply_with_carries(&self, k: u32) -> Result<(DigitSequence, Vec<u32>)> {
        check_multiplier(self.base, k)?;
        let g = self.base;
        let mut carries = Vec::with_capacity(self.digits.len() + 1);
        let mut out = Vec::with_capacity(self.digits.len() + 1);
        let mut carry = 0u32;
        carries.push(carry);
        for &d in self.digits.iter().rev() {
            let t = k * u32::from(d) + carry;
            out.push((t % g) as u8);
            carry = t / g;
            carries.push(carry);
        }
        if carry > 0 {
            out.push(carry as u8);
        }
        out.reverse();
        Ok((
            DigitSequence {
                base: g,
                digits: out,
            },
            carries,
        ))
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.digits.len();
        (0..n / 2).all(|j| self.digits[j] == self.digits[n - 1 - j])
    }

    /// Numeric comparison. Fewer digits means smaller.
    pub fn compare(&self, other: &DigitSequence) -> Result<Ordering> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(self.base, other.base));
        }
        Ok(numeric_cmp(&self.digits, &other.digits))
    }
}

impl fmt::Display for DigitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            let ch = char::from_digit(d.into(), self.base).expect("digit below base");
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

/// Parses a decimal digit string.
impl FromStr for DigitSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DigitSequence::parse(s, 10)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn dec(s: &str) -> DigitSequence {
        s.parse().unwrap()
    }

    fn value(d: &DigitSequence) -> BigUint {
        BigUint::parse_bytes(d.to_string().as_bytes(), d.base()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(dec("2178").digits(), &[2, 1, 7, 8]);
        assert_eq!(dec("1089").digits(), &[1, 0, 8, 9]);
        assert_eq!(DigitSequence::parse("0123", 10), Err(Error::LeadingZero));
        assert_eq!(DigitSequence::parse("", 10), Err(Error::Empty));
        assert_eq!(
            DigitSequence::parse("10x9", 10),
            Err(Error::InvalidDigit {
                found: 'x',
                position: 2,
                base: 10
            })
        );
        assert_eq!(
            DigitSequence::parse("12", 2),
            Err(Error::InvalidDigit {
                found: '2',
                position: 1,
                base: 2
            })
        );
        assert_eq!(
            DigitSequence::parse("1", 37),
            Err(Error::BaseOutOfRange(37))
        );
        assert_eq!(DigitSequence::parse("1", 1), Err(Error::BaseOutOfRange(1)));
    }

    #[test]
    fn parse_and_render_letters() {
        let d = DigitSequence::parse("zA0", 36).unwrap();
        assert_eq!(d.digits(), &[35, 10, 0]);
        assert_eq!(d.to_string(), "za0");
    }

    #[test]
    fn new_rejects_bad_digits() {
        assert!(matches!(
            DigitSequence::new(10, vec![1, 10]),
            Err(Error::DigitOutOfRange { value: 10, .. })
        ));
        assert_eq!(DigitSequence::new(10, vec![]), Err(Error::Empty));
        assert_eq!(DigitSequence::new(10, vec![0]), Err(Error::LeadingZero));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(dec("2178").reverse(), vec![8, 7, 1, 2]);
        assert_eq!(dec("121").reverse(), vec![1, 2, 1]);
        assert_eq!(dec("120").reverse(), vec![0, 2, 1]);
    }

    #[test]
    fn scalar_multiply_examples() {
        assert_eq!(dec("2178").scalar_multiply(4).unwrap(), dec("8712"));
        assert_eq!(dec("1089").scalar_multiply(9).unwrap(), dec("9801"));
        assert_eq!(dec("9").scalar_multiply(9).unwrap(), dec("81"));
        assert_eq!(
            dec("9").scalar_multiply(10),
            Err(Error::MultiplierOutOfRange { k: 10, base: 10 })
        );
        assert!(dec("9").scalar_multiply(0).is_err());
    }

    #[test]
    fn carries_of_2178_times_4() {
        // 4*8 = 32, 4*7+3 = 31, 4*1+3 = 7, 4*2 = 8
        let (_, carries) = dec("2178").scalar_multiply_with_carries(4).unwrap();
        assert_eq!(carries, vec![0, 3, 3, 0, 0]);
    }

    #[test]
    fn palindrome_examples() {
        assert!(!dec("1089").is_palindrome());
        assert!(dec("121").is_palindrome());
        assert!(dec("7").is_palindrome());
        assert!(dec("1221").is_palindrome());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(dec("2178").compare(&dec("21978")), Ok(Ordering::Less));
        assert_eq!(
            dec("21999978").compare(&dec("217802178")),
            Ok(Ordering::Less)
        );
        assert_eq!(
            dec("217802178").compare(&dec("219999978")),
            Ok(Ordering::Less)
        );
        assert_eq!(dec("5").compare(&dec("5")), Ok(Ordering::Equal));
        let b7 = DigitSequence::parse("5", 7).unwrap();
        assert_eq!(dec("5").compare(&b7), Err(Error::BaseMismatch(10, 7)));
    }

    fn arb_digits() -> impl Strategy<Value = DigitSequence> {
        (2u32..=36).prop_flat_map(|base| {
            (
                1u8..base as u8,
                prop::collection::vec(0u8..base as u8, 0..40),
            )
                .prop_map(move |(lead, rest)| {
                    let mut v = vec![lead];
                    v.extend(rest);
                    DigitSequence::new(base, v).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(d in arb_digits()) {
            let once = d.reverse();
            let twice: Vec<u8> = once.iter().rev().copied().collect();
            prop_assert_eq!(twice.as_slice(), d.digits());
        }

        #[test]
        fn multiply_by_one_is_identity(d in arb_digits()) {
            prop_assert_eq!(d.scalar_multiply(1).unwrap(), d);
        }

        #[test]
        fn multiply_matches_bigint(d in arb_digits()) {
            for k in 1..d.base() {
                let (product, carries) = d.scalar_multiply_with_carries(k).unwrap();
                prop_assert_eq!(value(&product), value(&d) * k);
                prop_assert!(carries.iter().all(|&c| c < k));
                prop_assert!(product.len() == d.len() || product.len() == d.len() + 1);
            }
        }

        #[test]
        fn render_parse_round_trip(d in arb_digits()) {
            let text = d.to_string();
            prop_assert_eq!(DigitSequence::parse(&text, d.base()).unwrap(), d);
        }
    }
}
