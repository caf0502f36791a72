//! Dyck words packed into fixed-width unsigned integers.
//!
//! A word `w = (w_1, …, w_2n)` is stored as `Σ w_i · 2^(2n−i)`: position 1
//! is the most significant bit of the low `2n`-bit window and every bit above
//! the window is zero. Numeric order on the stored integers is the
//! generation order.

use std::fmt;
use std::iter::FusedIterator;

use crate::error::{Error, Result};
use crate::strcore::SymbolPair;
use crate::word::{low_mask, Word};

/// Enumerations above this half length will not finish in practice
/// (there are about 6.56e9 words at `n = 20`).
pub const ENUMERATION_WARN_THRESHOLD: u32 = 20;

/// The number of ones in a Dyck word, `1..=32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfLength(u32);

impl HalfLength {
    pub const MAX: u32 = 32;

    pub fn new(n: u32) -> Result<Self> {
        if (1..=Self::MAX).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::HalfLengthOutOfRange(n))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of symbols, `2n`.
    #[inline]
    pub fn word_len(self) -> u32 {
        2 * self.0
    }

    pub(crate) fn check_width<W: Word>(self) -> Result<()> {
        if self.word_len() <= W::BITS {
            Ok(())
        } else {
            Err(Error::WidthTooSmall {
                len: self.word_len(),
                bits: W::BITS,
            })
        }
    }
}

impl TryFrom<u32> for HalfLength {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

impl fmt::Display for HalfLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A validated Dyck word held in an unsigned integer of type `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord<W: Word> {
    value: W,
    n: HalfLength,
}

impl<W: Word> DyckWord<W> {
    pub fn new(value: W, n: HalfLength) -> Result<Self> {
        n.check_width::<W>()?;
        if is_dyck(value, n) {
            Ok(Self { value, n })
        } else {
            Err(Error::NotDyck {
                value: value.widen(),
                n: n.get(),
            })
        }
    }

    /// Wraps `value` without checking it. Callers guarantee validity.
    #[inline]
    pub(crate) fn from_raw(value: W, n: HalfLength) -> Self {
        debug_assert!(
            is_dyck(value, n),
            "{value:#b} is not a Dyck word of half length {n}"
        );
        Self { value, n }
    }

    #[inline]
    pub fn value(self) -> W {
        self.value
    }

    #[inline]
    pub fn half_length(self) -> HalfLength {
        self.n
    }

    /// Number of symbols, `2n`.
    #[inline]
    pub fn len(self) -> usize {
        self.n.word_len() as usize
    }

    /// Always false: a Dyck word here has at least one pair.
    #[inline]
    pub fn is_empty(self) -> bool {
        false
    }

    /// Whether this is `1…10…0`, the last word of its size.
    #[inline]
    pub fn is_max(self) -> bool {
        self.value == max_value::<W>(self.n)
    }

    /// The symbol at 1-based, MSB-first `position` (`true` for a one).
    ///
    /// Panics if `position` is outside `1..=2n`.
    #[inline]
    pub fn bit(self, position: usize) -> bool {
        assert!(
            (1..=self.len()).contains(&position),
            "position {position} outside 1..={}",
            self.len()
        );
        let shift = self.len() - position;
        (self.value >> shift) & W::one() == W::one()
    }

    /// Symbols MSB-first.
    pub fn bits(self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator {
        (0..self.len()).map(move |i| self.bit(i + 1))
    }

    #[inline]
    pub fn next(self) -> Option<Self> {
        next(self)
    }

    /// Spells the word with the given symbols.
    pub fn to_symbols<T: Copy + PartialEq>(self, symbols: &SymbolPair<T>) -> Vec<T> {
        self.bits()
            .map(|b| if b { symbols.one() } else { symbols.zero() })
            .collect()
    }

    /// Reads a word spelled with `symbols`. The length gives `n`.
    pub fn from_symbols<T: Copy + PartialEq + fmt::Debug>(
        text: &[T],
        symbols: &SymbolPair<T>,
    ) -> Result<Self> {
        if text.is_empty() || !text.len().is_multiple_of(2) {
            return Err(Error::InvalidSymbols(format!(
                "length {} is not a positive even number",
                text.len()
            )));
        }
        let n = u32::try_from(text.len() / 2)
            .map_err(|_| Error::HalfLengthOutOfRange(u32::MAX))
            .and_then(HalfLength::new)?;
        n.check_width::<W>()?;
        let mut value = W::zero();
        for (i, &c) in text.iter().enumerate() {
            let bit = if c == symbols.one() {
                W::one()
            } else if c == symbols.zero() {
                W::zero()
            } else {
                return Err(Error::InvalidSymbols(format!(
                    "unexpected symbol {c:?} at position {}",
                    i + 1
                )));
            };
            value = (value << 1) | bit;
        }
        Self::new(value, n)
    }

    /// Widens to a 64-bit carrier.
    pub fn to_u64(self) -> DyckWord<u64> {
        DyckWord {
            value: self.value.widen(),
            n: self.n,
        }
    }
}

impl<W: Word> fmt::Display for DyckWord<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.len())
    }
}

/// The successor of a Dyck word, on the raw integer.
///
/// `w` must be a Dyck word that is not the maximum of its size. On any other
/// input the result is unspecified, and `w == 0` panics on the division.
/// The negation wraps modulo `2^W`. The final mask is [`Word::ALTERNATING`]
/// at the width of `W`.
#[inline]
pub fn next_unchecked<W: Word>(w: W) -> W {
    let a = w & w.wrapping_neg();
    let b = w.wrapping_add(&a);
    let mut c = w ^ b;
    c = ((c / a) >> 2).wrapping_add(&W::one());
    c = (c.wrapping_mul(&c).wrapping_sub(&W::one()) & W::ALTERNATING) | b;
    c
}

/// Intermediate values of [`next_unchecked`], for inspection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuccessorTrace<W: Word> {
    /// `w & -w`: the lowest one of `w`, which closes the last run of ones.
    pub lowest_one: W,
    /// `w + a`: the successor up to position `2(n − x)`, zero afterwards.
    pub carried: W,
    /// `((w ^ b) / a >> 2) + 1`, equal to `2^x`.
    pub tail_unit: W,
    /// `c·c − 1`, equal to `2^(2x) − 1`.
    pub tail_mask: W,
    pub successor: W,
}

/// Runs the same five statements as [`next_unchecked`], keeping every
/// intermediate value.
pub fn trace_unchecked<W: Word>(w: W) -> SuccessorTrace<W> {
    let lowest_one = w & w.wrapping_neg();
    let carried = w.wrapping_add(&lowest_one);
    let flipped = w ^ carried;
    let tail_unit = ((flipped / lowest_one) >> 2).wrapping_add(&W::one());
    let tail_mask = tail_unit.wrapping_mul(&tail_unit).wrapping_sub(&W::one());
    let successor = (tail_mask & W::ALTERNATING) | carried;
    SuccessorTrace {
        lowest_one,
        carried,
        tail_unit,
        tail_mask,
        successor,
    }
}

/// The next Dyck word of the same size, or `None` after the maximum.
#[inline]
pub fn next<W: Word>(w: DyckWord<W>) -> Option<DyckWord<W>> {
    if w.is_max() {
        None
    } else {
        Some(DyckWord::from_raw(next_unchecked(w.value), w.n))
    }
}

#[inline]
fn min_value<W: Word>(n: HalfLength) -> W {
    W::ALTERNATING >> (W::BITS - n.word_len()) as usize
}

#[inline]
fn max_value<W: Word>(n: HalfLength) -> W {
    // n <= W/2, so neither shift reaches the full width.
    let ones: W = low_mask(n.get());
    ones << n.get() as usize
}

/// `1010…10`, the smallest Dyck word of half length `n`.
pub fn min_word<W: Word>(n: HalfLength) -> Result<DyckWord<W>> {
    n.check_width::<W>()?;
    Ok(DyckWord::from_raw(min_value(n), n))
}

/// `1…10…0`, the largest Dyck word of half length `n`.
pub fn max_word<W: Word>(n: HalfLength) -> Result<DyckWord<W>> {
    n.check_width::<W>()?;
    Ok(DyckWord::from_raw(max_value(n), n))
}

/// Whether `value` is a Dyck word of half length `n`: nothing above the
/// `2n`-bit window, `n` ones in it, and no MSB-first prefix with more
/// zeros than ones.
pub fn is_dyck<W: Word>(value: W, n: HalfLength) -> bool {
    let len = n.word_len();
    if len > W::BITS {
        return false;
    }
    let window: W = low_mask(len);
    if value & !window != W::zero() || value.count_ones() != n.get() {
        return false;
    }
    let mut excess: u32 = 0;
    for shift in (0..len).rev() {
        if (value >> shift as usize) & W::one() == W::one() {
            excess += 1;
        } else if excess == 0 {
            return false;
        } else {
            excess -= 1;
        }
    }
    true
}

/// All Dyck words of half length `n` in increasing order.
///
/// The stream is lazy and unbounded in cost: it yields `catalan(n)` items,
/// which is impractical past [`ENUMERATION_WARN_THRESHOLD`].
pub fn enumerate<W: Word>(n: HalfLength) -> Result<Enumerate<W>> {
    Ok(Enumerate {
        pending: Some(min_word(n)?),
    })
}

/// Iterator returned by [`enumerate`].
#[derive(Clone, Debug)]
pub struct Enumerate<W: Word> {
    pending: Option<DyckWord<W>>,
}

impl<W: Word> Iterator for Enumerate<W> {
    type Item = DyckWord<W>;

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        let current = self.pending?;
        self.pending = next(current);
        Some(current)
    }
}

impl<W: Word> FusedIterator for Enumerate<W> {}
