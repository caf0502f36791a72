//! Dyck word generation in increasing numeric order.
//!
//! A Dyck word of half length `n` is a string of `n` ones and `n` zeros in
//! which no prefix holds more zeros than ones. Reading the string MSB-first
//! as a `2n`-bit number orders the words; [`bitcore::next_unchecked`] maps a
//! word to its successor with five branch-free integer operations.
//!
//! - [`bitcore`]: fixed-width words, min/max, the successor and enumeration
//! - [`strcore`]: in-place successor on symbol strings over any alphabet pair
//! - [`analysis`]: prefix counts, the `(k, x, y)` decomposition, Catalan numbers
//! - [`paths`]: lattice path bijection and an SVG renderer
//! - [`oracle`]: brute-force ground truth for small sizes

pub mod analysis;
pub mod bitcore;
pub mod error;
pub mod oracle;
pub mod paths;
pub mod strcore;
pub mod word;

pub use analysis::{catalan, catalan_u64, decompose, prefix_counts, Decomposition, PrefixCounts};
pub use bitcore::{
    enumerate, is_dyck, max_word, min_word, next, next_unchecked, DyckWord, HalfLength,
};
pub use error::{Error, Result};
pub use paths::{from_path, render_grid, to_path, LatticePath, Step};
pub use strcore::{next_in_place, next_string, DyckString, SymbolPair};
pub use word::Word;
