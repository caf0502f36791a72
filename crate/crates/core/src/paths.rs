//! Dyck words as monotonic lattice paths, and an SVG sheet of all of them.
//!
//! A one is a step right and a zero a step up. Starting from the lower-left
//! corner of an `n×n` grid the path ends at the upper-right corner and never
//! rises above the diagonal.

use std::fmt;
use std::io::Write;

use crate::analysis::catalan_u64;
use crate::bitcore::{enumerate, DyckWord, HalfLength};
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest grid the renderer accepts (1430 tiles).
pub const MAX_RENDER_HALF_LENGTH: u32 = 8;

/// Side of one grid cell, in SVG user units.
pub const CELL: u32 = 20;

/// Space between tiles and around the sheet.
pub const GUTTER: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::Right => 'R',
            Step::Up => 'U',
        }
    }
}

/// A path of `n` rights and `n` ups that never has more ups than rights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    moves: Vec<Step>,
}

impl LatticePath {
    pub fn new(moves: Vec<Step>) -> Result<Self> {
        if moves.is_empty() {
            return Err(Error::InvalidPath("no moves".into()));
        }
        let (mut rights, mut ups) = (0usize, 0usize);
        for (i, step) in moves.iter().enumerate() {
            match step {
                Step::Right => rights += 1,
                Step::Up => ups += 1,
            }
            if ups > rights {
                return Err(Error::InvalidPath(format!(
                    "crosses the diagonal at step {}",
                    i + 1
                )));
            }
        }
        if rights != ups {
            return Err(Error::InvalidPath(format!("{rights} rights and {ups} ups")));
        }
        Ok(Self { moves })
    }

    pub fn moves(&self) -> &[Step] {
        &self.moves
    }

    /// Grid side `n`.
    pub fn size(&self) -> usize {
        self.moves.len() / 2
    }

    /// The `2n + 1` lattice points visited, from `(0, 0)` to `(n, n)`.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        let mut at = (0u32, 0u32);
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(at);
        for step in &self.moves {
            match step {
                Step::Right => at.0 += 1,
                Step::Up => at.1 += 1,
            }
            out.push(at);
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.moves.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", step.letter())?;
        }
        Ok(())
    }
}

pub fn to_path<W: Word>(w: &DyckWord<W>) -> LatticePath {
    let moves = w
        .bits()
        .map(|one| if one { Step::Right } else { Step::Up })
        .collect();
    LatticePath { moves }
}

pub fn from_path<W: Word>(p: &LatticePath) -> Result<DyckWord<W>> {
    let n = u32::try_from(p.size())
        .map_err(|_| Error::HalfLengthOutOfRange(u32::MAX))
        .and_then(HalfLength::new)?;
    n.check_width::<W>()?;
    let value = p.moves.iter().fold(W::zero(), |acc, step| {
        (acc << 1)
            | if *step == Step::Right {
                W::one()
            } else {
                W::zero()
            }
    });
    DyckWord::new(value, n)
}

fn columns(tiles: u64) -> u64 {
    let mut cols = 1;
    while cols * cols < tiles {
        cols += 1;
    }
    cols
}

/// Writes one SVG document with a tile per Dyck word of half length `n`, in
/// increasing order, laid out row by row. Returns the number of tiles.
///
/// Each tile draws the grid, the dashed diagonal and the path as a polyline.
/// Tile contents use lattice coordinates (origin lower-left, y up) under a
/// flipping transform. The output is byte-for-byte deterministic.
pub fn render_grid<Wr: Write + ?Sized>(n: HalfLength, out: &mut Wr) -> Result<usize> {
    let size = n.get();
    if size > MAX_RENDER_HALF_LENGTH {
        return Err(Error::RenderTooLarge {
            n: size,
            limit: MAX_RENDER_HALF_LENGTH,
        });
    }
    let tiles = catalan_u64(size)?;
    let cols = columns(tiles);
    let rows = tiles.div_ceil(cols);
    let side = u64::from(size * CELL);
    let pitch = side + u64::from(GUTTER);
    let width = u64::from(GUTTER) + cols * pitch;
    let height = u64::from(GUTTER) + rows * pitch;

    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )?;
    writeln!(
        out,
        "<title>Dyck paths on a {size}x{size} grid ({tiles} tiles)</title>"
    )?;
    writeln!(
        out,
        r##"<rect width="{width}" height="{height}" fill="#ffffff"/>"##
    )?;

    let mut grid = String::new();
    for i in 0..=u64::from(size) {
        let at = i * u64::from(CELL);
        grid.push_str(&format!("M0 {at}H{side}M{at} 0V{side}"));
    }

    let mut drawn = 0usize;
    for (index, word) in enumerate::<u64>(n)?.enumerate() {
        let index = index as u64;
        let tx = u64::from(GUTTER) + (index % cols) * pitch;
        let ty = u64::from(GUTTER) + (index / cols) * pitch + side;
        let points = to_path(&word)
            .vertices()
            .iter()
            .map(|&(x, y)| format!("{},{}", x * CELL, y * CELL))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(
            out,
            r#"<g class="tile" id="tile-{}" data-word="{word}" transform="translate({tx} {ty}) scale(1 -1)">"#,
            index + 1
        )?;
        writeln!(
            out,
            r##"<path class="grid" d="{grid}" fill="none" stroke="#c8c8c8" stroke-width="1"/>"##
        )?;
        writeln!(
            out,
            r##"<line class="diagonal" x1="0" y1="0" x2="{side}" y2="{side}" stroke="#808080" stroke-width="1" stroke-dasharray="4 3"/>"##
        )?;
        writeln!(
            out,
            r##"<polyline class="path" points="{points}" fill="none" stroke="#c0392b" stroke-width="3" stroke-linejoin="round" stroke-linecap="round"/>"##
        )?;
        writeln!(out, "</g>")?;
        drawn += 1;
    }
    writeln!(out, "</svg>")?;
    debug_assert_eq!(drawn as u64, tiles);
    Ok(drawn)
}
