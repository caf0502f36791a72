//! In-place successor on symbol strings.
//!
//! Works on any pair of distinct symbols (`'1'`/`'0'`, `'('`/`')'`, bytes,
//! chars). Each cell holds one symbol, so a multi-byte character is only
//! usable as a `char` cell, never as bytes of a `String`.

use std::fmt;

use crate::analysis::first_violation;
use crate::error::{Error, Result};

/// The symbols playing the roles of one and zero. They always differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymbolPair<T> {
    one: T,
    zero: T,
}

impl<T: Copy + PartialEq> SymbolPair<T> {
    pub fn new(one: T, zero: T) -> Result<Self> {
        if one == zero {
            return Err(Error::IdenticalSymbols);
        }
        Ok(Self { one, zero })
    }

    #[inline]
    pub fn one(&self) -> T {
        self.one
    }

    #[inline]
    pub fn zero(&self) -> T {
        self.zero
    }
}

impl SymbolPair<char> {
    pub const BITS: Self = Self {
        one: '1',
        zero: '0',
    };
    pub const PARENS: Self = Self {
        one: '(',
        zero: ')',
    };
}

impl SymbolPair<u8> {
    pub const ASCII_BITS: Self = Self {
        one: b'1',
        zero: b'0',
    };
    pub const ASCII_PARENS: Self = Self {
        one: b'(',
        zero: b')',
    };
}

/// Counts of cells touched by one call to [`advance`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Visits {
    /// Cells examined walking back from the end.
    pub scanned: usize,
    /// Cells overwritten walking forward.
    pub written: usize,
}

impl Visits {
    pub fn total(self) -> usize {
        self.scanned + self.written
    }
}

/// Rewrites `w` into its successor, leaving it empty if `w` was the maximum
/// (or empty to begin with).
///
/// `w` must be a Dyck word over `symbols`. Nothing is validated: on other
/// input the contents afterwards are unspecified and the call may panic.
/// Runs in one backward and one forward pass with no allocation.
#[inline]
pub fn next_in_place<T: Copy + PartialEq>(w: &mut Vec<T>, symbols: &SymbolPair<T>) {
    if advance(w, symbols).is_none() {
        w.clear();
    }
}

/// The successor step on a slice. Returns `None`, leaving the slice
/// untouched, when no successor exists.
///
/// Walks back from the end for the last `zero, one` pair, counting the `x`
/// ones and `y` trailing zeros behind it, then rewrites the pair as
/// `one, zero`, writes `y − x` zeros and finishes with `x` alternating
/// `one, zero` pairs.
pub fn advance<T: Copy + PartialEq>(w: &mut [T], symbols: &SymbolPair<T>) -> Option<Visits> {
    let (one, zero) = (symbols.one, symbols.zero);
    let last = w.len().checked_sub(1)?;
    let mut trailing_zeros = 0usize;
    let mut ones = 0usize;
    let mut visits = Visits::default();

    // The guard stops at index 1, so index 0 is only ever read as `w[i - 1]`.
    // A Dyck word never has its last `zero, one` pair starting at index 0.
    let mut i = last;
    while i > 0 {
        visits.scanned += 1;
        if w[i] == zero {
            trailing_zeros += 1;
        } else if w[i - 1] == zero {
            visits.scanned += 1;
            w[i - 1] = one;
            w[i] = zero;
            visits.written += 2;
            for _ in 0..trailing_zeros.saturating_sub(ones) {
                i += 1;
                w[i] = zero;
                visits.written += 1;
            }
            while i < last {
                w[i + 1] = one;
                w[i + 2] = zero;
                i += 2;
                visits.written += 2;
            }
            return Some(visits);
        } else {
            ones += 1;
        }
        i -= 1;
    }
    None
}

/// A validated Dyck word spelled with a [`SymbolPair`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckString<T> {
    text: Vec<T>,
    symbols: SymbolPair<T>,
}

impl<T: Copy + PartialEq + fmt::Debug> DyckString<T> {
    /// Checks every symbol and prefix before accepting `text`.
    /// The empty word is rejected.
    pub fn new(text: Vec<T>, symbols: SymbolPair<T>) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for (i, &c) in text.iter().enumerate() {
            if c == symbols.one {
                bits.push(true);
            } else if c == symbols.zero {
                bits.push(false);
            } else {
                return Err(Error::InvalidSymbols(format!(
                    "unexpected symbol {c:?} at position {}",
                    i + 1
                )));
            }
        }
        match first_violation(bits) {
            None => Ok(Self { text, symbols }),
            Some(v) => Err(Error::InvalidSymbols(v.to_string())),
        }
    }

    pub fn as_slice(&self) -> &[T] {
        &self.text
    }

    pub fn symbols(&self) -> SymbolPair<T> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Whether the symbol at 1-based `position` is the one symbol.
    pub fn is_one_at(&self, position: usize) -> bool {
        self.text[position - 1] == self.symbols.one
    }

    pub fn into_inner(self) -> Vec<T> {
        self.text
    }
}

impl DyckString<char> {
    pub fn parse(text: &str, symbols: SymbolPair<char>) -> Result<Self> {
        Self::new(text.chars().collect(), symbols)
    }
}

impl fmt::Display for DyckString<char> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.text
            .iter()
            .try_for_each(|c| fmt::Write::write_char(f, *c))
    }
}

/// The successor of `w`, or `None` if `w` is the maximum of its length.
pub fn next_string<T: Copy + PartialEq>(w: &DyckString<T>) -> Option<DyckString<T>> {
    let mut text = w.text.clone();
    advance(&mut text, &w.symbols)?;
    Some(DyckString {
        text,
        symbols: w.symbols,
    })
}
