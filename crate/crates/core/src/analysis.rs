//! Prefix counts, the anatomy of a non-maximal word, and Catalan numbers.
//!
//! Positions are 1-based and MSB-first everywhere in this module: position 1
//! is the leftmost symbol.

use std::fmt;

use num_bigint::BigUint;

use crate::bitcore::DyckWord;
use crate::error::{Error, Result};
use crate::strcore::DyckString;
use crate::word::Word;

/// Random access to the symbols of a word, 1-based.
pub trait Positional {
    fn word_len(&self) -> usize;

    /// Whether position `position` holds a one. `1 <= position <= word_len()`.
    fn is_one_at(&self, position: usize) -> bool;
}

impl<W: Word> Positional for DyckWord<W> {
    fn word_len(&self) -> usize {
        self.len()
    }

    fn is_one_at(&self, position: usize) -> bool {
        self.bit(position)
    }
}

impl<T: Copy + PartialEq + fmt::Debug> Positional for DyckString<T> {
    fn word_len(&self) -> usize {
        self.len()
    }

    fn is_one_at(&self, position: usize) -> bool {
        DyckString::is_one_at(self, position)
    }
}

impl Positional for [bool] {
    fn word_len(&self) -> usize {
        self.len()
    }

    fn is_one_at(&self, position: usize) -> bool {
        self[position - 1]
    }
}

/// Ones and zeros among positions `1..=i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrefixCounts {
    pub ones: usize,
    pub zeros: usize,
}

impl PrefixCounts {
    /// `ones − zeros`; never negative on a Dyck word.
    pub fn excess(self) -> isize {
        self.ones as isize - self.zeros as isize
    }
}

pub fn prefix_counts<P: Positional + ?Sized>(w: &P, i: usize) -> Result<PrefixCounts> {
    let len = w.word_len();
    if !(1..=len).contains(&i) {
        return Err(Error::PositionOutOfRange { position: i, len });
    }
    let ones = (1..=i).filter(|&p| w.is_one_at(p)).count();
    Ok(PrefixCounts {
        ones,
        zeros: i - ones,
    })
}

/// Why a symbol sequence fails to be a Dyck word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    OddLength(usize),
    /// The prefix ending at `position` holds more zeros than ones.
    Prefix {
        position: usize,
    },
    Unbalanced {
        ones: usize,
        zeros: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => f.write_str("empty word"),
            Violation::OddLength(len) => write!(f, "odd length {len}"),
            Violation::Prefix { position } => write!(f, "prefix violation at position {position}"),
            Violation::Unbalanced { ones, zeros } => {
                write!(f, "unbalanced word: {ones} ones and {zeros} zeros")
            }
        }
    }
}

/// The first reason `symbols` (`true` for one) is not a Dyck word, or
/// `None` if it is one. Prefix violations are reported before length or
/// balance problems, at the earliest position.
pub fn first_violation(symbols: impl IntoIterator<Item = bool>) -> Option<Violation> {
    let (mut ones, mut zeros) = (0usize, 0usize);
    for (i, one) in symbols.into_iter().enumerate() {
        if one {
            ones += 1;
        } else {
            zeros += 1;
            if zeros > ones {
                return Some(Violation::Prefix { position: i + 1 });
            }
        }
    }
    let len = ones + zeros;
    if len == 0 {
        Some(Violation::Empty)
    } else if len % 2 != 0 {
        Some(Violation::OddLength(len))
    } else if ones != zeros {
        Some(Violation::Unbalanced { ones, zeros })
    } else {
        None
    }
}

/// A non-maximal word read as `prefix · 0 · 1 · 1^x · 0^y`, where `k` is the
/// last position holding a zero that is followed by a one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    /// Position of the zero in the last `01` pair; `1 < k < 2n`.
    pub k: usize,
    /// Ones after position `k + 1`.
    pub x: usize,
    /// Trailing zeros; at least one.
    pub y: usize,
}

impl Decomposition {
    /// Length of the prefix shared with the successor, `k − 1`.
    pub fn prefix_len(&self) -> usize {
        self.k - 1
    }

    /// Zeros written right after the new `10` in the successor.
    pub fn gap(&self) -> usize {
        self.y - self.x
    }
}

/// Splits a non-maximal word into `(k, x, y)`.
pub fn decompose<P: Positional + ?Sized>(w: &P) -> Result<Decomposition> {
    let len = w.word_len();
    let mut y = 0;
    let mut pos = len;
    while pos > 0 && !w.is_one_at(pos) {
        y += 1;
        pos -= 1;
    }
    let mut ones = 0;
    while pos > 0 && w.is_one_at(pos) {
        ones += 1;
        pos -= 1;
    }
    // `pos` is now the zero before the last run of ones, if any.
    if pos == 0 || y == 0 {
        return Err(Error::NoDecomposition);
    }
    Ok(Decomposition {
        k: pos,
        x: ones - 1,
        y,
    })
}

/// Builds the successor of `w` symbol by symbol from its decomposition:
/// the prefix, then `1 0`, then `y − x` zeros, then `x` copies of `1 0`.
///
/// `d` must be `decompose(&w)`.
pub fn successor_from_decomposition<W: Word>(w: &DyckWord<W>, d: &Decomposition) -> DyckWord<W> {
    debug_assert_eq!(decompose(w).ok().as_ref(), Some(d));
    let symbols = (1..=d.prefix_len())
        .map(|p| w.bit(p))
        .chain([true, false])
        .chain(std::iter::repeat_n(false, d.gap()))
        .chain((0..d.x).flat_map(|_| [true, false]));
    let value = symbols.fold(W::zero(), |acc, one| {
        (acc << 1) | if one { W::one() } else { W::zero() }
    });
    DyckWord::from_raw(value, w.half_length())
}

/// `C_n` exactly, by `C_0 = 1`, `C_{m+1} = C_m · 2(2m + 1) / (m + 2)`.
pub fn catalan(n: u32) -> BigUint {
    let mut c = BigUint::from(1u32);
    for m in 0..u64::from(n) {
        c = c * (2 * (2 * m + 1)) / (m + 2);
    }
    c
}

/// `C_n` as a `u64`; `n <= 36` fits.
pub fn catalan_u64(n: u32) -> Result<u64> {
    let mut c: u128 = 1;
    for m in 0..u128::from(n) {
        c = c
            .checked_mul(2 * (2 * m + 1))
            .ok_or(Error::CatalanOverflow(n))?
            / (m + 2);
    }
    u64::try_from(c).map_err(|_| Error::CatalanOverflow(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcore::HalfLength;

    fn word(v: u8, n: u32) -> DyckWord<u8> {
        DyckWord::new(v, HalfLength::new(n).unwrap()).unwrap()
    }

    #[test]
    fn prefix_count_examples() {
        assert_eq!(
            prefix_counts(&word(0b1011_1000, 4), 3).unwrap(),
            PrefixCounts { ones: 2, zeros: 1 }
        );
        assert_eq!(
            prefix_counts(&word(0b1010_1010, 4), 8).unwrap(),
            PrefixCounts { ones: 4, zeros: 4 }
        );
        assert_eq!(
            prefix_counts(&word(210, 4), 5).unwrap(),
            PrefixCounts { ones: 3, zeros: 2 }
        );
    }

    #[test]
    fn prefix_counts_range() {
        let w = word(0b1100, 2);
        assert!(matches!(
            prefix_counts(&w, 0),
            Err(Error::PositionOutOfRange {
                position: 0,
                len: 4
            })
        ));
        assert!(prefix_counts(&w, 5).is_err());
        assert!(prefix_counts(&w, 4).is_ok());
    }

    #[test]
    fn prefix_counts_on_strings() {
        let s = DyckString::parse("()((()))", crate::strcore::SymbolPair::PARENS).unwrap();
        assert_eq!(
            prefix_counts(&s, 3).unwrap(),
            PrefixCounts { ones: 2, zeros: 1 }
        );
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose(&word(0b1011_1000, 4)).unwrap(),
            Decomposition { k: 2, x: 2, y: 3 }
        );
        assert_eq!(
            decompose(&word(0b1010_1010, 4)).unwrap(),
            Decomposition { k: 6, x: 0, y: 1 }
        );
        assert!(matches!(
            decompose(&word(0b1100, 2)),
            Err(Error::NoDecomposition)
        ));
        assert!(matches!(
            decompose(&word(0b10, 1)),
            Err(Error::NoDecomposition)
        ));
    }

    #[test]
    fn decomposition_prefix_len() {
        let d = decompose(&word(0b1011_1000, 4)).unwrap();
        assert_eq!(d.prefix_len(), 1);
        assert_eq!(d.gap(), 1);
    }

    #[test]
    fn successor_template_examples() {
        let cases = [
            (0b1011_1000, 4, 0b1100_1010),
            (0b1010_1010, 4, 0b1010_1100),
            (0b1010, 2, 0b1100),
        ];
        for (from, n, to) in cases {
            let w = word(from, n);
            let d = decompose(&w).unwrap();
            assert_eq!(successor_from_decomposition(&w, &d).value(), to, "{w}");
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(4), BigUint::from(14u32));
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(10), BigUint::from(16796u32));
        assert_eq!(catalan_u64(14).unwrap(), 2_674_440);
    }

    #[test]
    fn catalan_u64_boundary() {
        assert_eq!(catalan_u64(34).unwrap(), 812_944_042_149_730_764);
        assert_eq!(catalan_u64(36).unwrap(), 11_959_798_385_860_453_492);
        assert!(matches!(catalan_u64(37), Err(Error::CatalanOverflow(37))));
        assert_eq!(catalan(37).to_string(), "45950804324621742364");
    }

    #[test]
    fn violations() {
        let bits = |s: &str| s.chars().map(|c| c == '1').collect::<Vec<_>>();
        assert_eq!(
            first_violation(bits("1001")),
            Some(Violation::Prefix { position: 3 })
        );
        assert_eq!(
            first_violation(bits("0110")),
            Some(Violation::Prefix { position: 1 })
        );
        assert_eq!(first_violation(bits("")), Some(Violation::Empty));
        assert_eq!(first_violation(bits("110")), Some(Violation::OddLength(3)));
        assert_eq!(
            first_violation(bits("1110")),
            Some(Violation::Unbalanced { ones: 3, zeros: 1 })
        );
        assert_eq!(first_violation(bits("10101010")), None);
        assert_eq!(
            Violation::Prefix { position: 3 }.to_string(),
            "prefix violation at position 3"
        );
    }
}
