//! Brute-force ground truth.
//!
//! Tests every integer below `4^n` against the definition directly: `n` ones
//! in the `2n`-bit window and no prefix, read from the most significant end,
//! with more zeros than ones. Shares no code with the rest of the crate.

use crate::bitcore::HalfLength;
use crate::error::{Error, Result};

/// Largest half length the oracle will scan (`4^12` candidates).
pub const MAX_HALF_LENGTH: u32 = 12;

fn checked_size(n: HalfLength) -> Result<u32> {
    let n = n.get();
    if n > MAX_HALF_LENGTH {
        Err(Error::OracleTooLarge {
            n,
            limit: MAX_HALF_LENGTH,
        })
    } else {
        Ok(n)
    }
}

fn satisfies_definition(v: u64, n: u32) -> bool {
    let len = 2 * n;
    if v >> len != 0 {
        return false;
    }
    let mut ones = 0u32;
    let mut zeros = 0u32;
    for i in 1..=len {
        if (v >> (len - i)) & 1 == 1 {
            ones += 1;
        } else {
            zeros += 1;
        }
        if ones < zeros {
            return false;
        }
    }
    ones == n && zeros == n
}

/// Every Dyck word of half length `n`, ascending.
pub fn brute_force_all(n: HalfLength) -> Result<Vec<u64>> {
    let n = checked_size(n)?;
    Ok((0..1u64 << (2 * n))
        .filter(|&v| satisfies_definition(v, n))
        .collect())
}

/// The smallest Dyck word above `v` found by linear search.
pub fn brute_force_next(v: u64, n: HalfLength) -> Result<Option<u64>> {
    let n = checked_size(n)?;
    if !satisfies_definition(v, n) {
        return Err(Error::NotDyck { value: v, n });
    }
    Ok((v + 1..1u64 << (2 * n)).find(|&c| satisfies_definition(c, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hl(n: u32) -> HalfLength {
        HalfLength::new(n).unwrap()
    }

    #[test]
    fn all_examples() {
        assert_eq!(brute_force_all(hl(2)).unwrap(), [10, 12]);
        assert_eq!(brute_force_all(hl(1)).unwrap(), [2]);
        let four = brute_force_all(hl(4)).unwrap();
        assert_eq!(four.len(), 14);
        assert_eq!((four[0], four[13]), (170, 240));
    }

    #[test]
    fn hand_checked_n2() {
        // Of the 16 four-bit values only 1010 and 1100 pass.
        let passing: Vec<u64> = (0..16).filter(|&v| satisfies_definition(v, 2)).collect();
        assert_eq!(passing, [0b1010, 0b1100]);
    }

    #[test]
    fn next_examples() {
        assert_eq!(brute_force_next(170, hl(4)).unwrap(), Some(172));
        assert_eq!(brute_force_next(240, hl(4)).unwrap(), None);
        assert_eq!(brute_force_next(184, hl(4)).unwrap(), Some(202));
        assert!(matches!(
            brute_force_next(171, hl(4)),
            Err(Error::NotDyck { value: 171, n: 4 })
        ));
    }

    #[test]
    fn refuses_large_sizes() {
        assert!(matches!(
            brute_force_all(hl(13)),
            Err(Error::OracleTooLarge { n: 13, limit: 12 })
        ));
        assert!(brute_force_next(2, hl(20)).is_err());
    }
}
