//! Unsigned machine words usable as Dyck word carriers.

use std::fmt::{Binary, Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned, WrappingAdd, WrappingMul, WrappingNeg, WrappingSub};

/// An unsigned integer type of width 8, 16, 32 or 64 bits.
pub trait Word:
    PrimInt
    + Unsigned
    + WrappingAdd
    + WrappingSub
    + WrappingMul
    + WrappingNeg
    + Hash
    + Debug
    + Display
    + Binary
    + Default
    + Send
    + Sync
    + 'static
{
    const BITS: u32;

    /// `0xAA…AA` at this width: the minimum full-width Dyck word and the
    /// mask of the "one" slots in an alternating tail.
    const ALTERNATING: Self;

    fn from_u64_truncating(v: u64) -> Self;

    fn widen(self) -> u64;
}

macro_rules! impl_word {
    ($($t:ty),*) => {$(
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;
            const ALTERNATING: Self = 0xAAAA_AAAA_AAAA_AAAA_u64 as $t;

            #[inline]
            fn from_u64_truncating(v: u64) -> Self {
                v as $t
            }

            #[inline]
            fn widen(self) -> u64 {
                self as u64
            }
        }
    )*};
}

impl_word!(u8, u16, u32, u64);

/// Mask selecting the low `len` bits, `1 <= len <= W::BITS`.
#[inline]
pub(crate) fn low_mask<W: Word>(len: u32) -> W {
    debug_assert!(len >= 1 && len <= W::BITS);
    W::max_value() >> (W::BITS - len) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_constant_per_width() {
        assert_eq!(<u8 as Word>::ALTERNATING, 0xAA);
        assert_eq!(<u16 as Word>::ALTERNATING, 0xAAAA);
        assert_eq!(<u32 as Word>::ALTERNATING, 0xAAAA_AAAA);
        assert_eq!(<u64 as Word>::ALTERNATING, 0xAAAA_AAAA_AAAA_AAAA);
    }

    #[test]
    fn low_mask_full_width() {
        assert_eq!(low_mask::<u8>(8), 0xFF);
        assert_eq!(low_mask::<u64>(64), u64::MAX);
        assert_eq!(low_mask::<u64>(1), 1);
        assert_eq!(low_mask::<u16>(6), 0b11_1111);
    }
}
