//! Monochrome rasters of digits and ligatures, and `#`/`.` text art.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::digit::SegmentSet;
use crate::geometry::{segment_endpoints, CellMatrix, LigatureGlyph};
use crate::{Error, Result};

pub const INK: char = '#';
pub const BLANK: char = '.';

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Raster {
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl Raster {
    pub fn new(width: usize, height: usize) -> Raster {
        Raster {
            width,
            height,
            cells: vec![false; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, column: usize, row: usize) -> bool {
        self.cells[row * self.width + column]
    }

    pub fn set(&mut self, column: usize, row: usize) {
        self.cells[row * self.width + column] = true;
    }

    pub fn ink_count(&self) -> usize {
        self.cells.iter().filter(|c| **c).count()
    }

    /// One string per row, top row first.
    pub fn to_text_art(&self) -> Vec<String> {
        (0..self.height)
            .map(|r| {
                (0..self.width)
                    .map(|c| if self.get(c, r) { INK } else { BLANK })
                    .collect()
            })
            .collect()
    }

    /// Inverse of [`Raster::to_text_art`]. The offset in errors counts
    /// characters across all lines, newlines included.
    pub fn from_text_art<S: AsRef<str>>(lines: &[S]) -> Result<Raster> {
        let width = lines.first().map_or(0, |l| l.as_ref().chars().count());
        let mut raster = Raster::new(width, lines.len());
        let mut offset = 0;
        for (row, line) in lines.iter().enumerate() {
            let line = line.as_ref();
            let mut count = 0;
            for (col, ch) in line.chars().enumerate() {
                match ch {
                    INK if col < width => raster.set(col, row),
                    BLANK if col < width => {}
                    INK | BLANK => return Err(Error::parse(offset + col, "row longer than the first")),
                    _ => return Err(Error::parse(offset + col, "expected '#' or '.'")),
                }
                count += 1;
            }
            if count != width {
                return Err(Error::parse(offset + count, "row shorter than the first"));
            }
            offset += count + 1;
        }
        Ok(raster)
    }

    /// Copies `other` with its top-left corner at `column`.
    fn blit(&mut self, other: &Raster, column: usize) {
        for r in 0..other.height {
            for c in 0..other.width {
                if other.get(c, r) {
                    self.set(column + c, r);
                }
            }
        }
    }
}

/// Blank columns between ligature halves at `scale`: the quarter-box gap
/// rounded up, never less than one column.
pub fn gap_cells(scale: usize) -> usize {
    scale.div_ceil(4).max(1)
}

/// What can be rasterized.
#[derive(Debug, Clone, Copy)]
pub enum GlyphRef<'a> {
    Digit(&'a CellMatrix),
    Ligature(&'a LigatureGlyph),
}

impl<'a> From<&'a CellMatrix> for GlyphRef<'a> {
    fn from(m: &'a CellMatrix) -> Self {
        GlyphRef::Digit(m)
    }
}

impl<'a> From<&'a LigatureGlyph> for GlyphRef<'a> {
    fn from(g: &'a LigatureGlyph) -> Self {
        GlyphRef::Ligature(g)
    }
}

fn rasterize_segments(s: SegmentSet, scale: usize) -> Raster {
    let mut r = Raster::new(scale + 1, 2 * scale + 1);
    for seg in s.iter() {
        let (a, b) = segment_endpoints(seg);
        let (c0, c1) = (a.x as usize * scale, b.x as usize * scale);
        // y grows upward, rows grow downward
        let (r0, r1) = (
            (2 - b.y as usize) * scale,
            (2 - a.y as usize) * scale,
        );
        for row in r0..=r1 {
            for col in c0..=c1 {
                r.set(col, row);
            }
        }
    }
    r
}

/// Rasterizes a digit into `(s+1) × (2s+1)` cells, or a ligature into
/// `(2s+2+gap) × (2s+1)` cells.
pub fn rasterize<'a>(glyph: impl Into<GlyphRef<'a>>, scale: usize) -> Result<Raster> {
    if scale < 2 {
        return Err(Error::ScaleTooSmall(scale));
    }
    Ok(match glyph.into() {
        GlyphRef::Digit(m) => rasterize_segments(m.segments(), scale),
        GlyphRef::Ligature(g) => {
            let high = rasterize_segments(g.high.segments(), scale);
            let low = rasterize_segments(g.low.segments(), scale);
            let mut r = Raster::new(2 * scale + 2 + gap_cells(scale), 2 * scale + 1);
            r.blit(&high, 0);
            r.blit(&low, scale + 1 + gap_cells(scale));
            r
        }
    })
}

/// Places rasters of equal height side by side with `spacing` blank
/// columns between them, returning text rows. Spacing columns are spaces.
pub fn join_text_art(rasters: &[Raster], spacing: usize) -> Vec<String> {
    let height = rasters.iter().map(Raster::height).max().unwrap_or(0);
    let mut rows = vec![String::new(); height];
    for (i, r) in rasters.iter().enumerate() {
        let art = r.to_text_art();
        for (row, line) in rows.iter_mut().enumerate() {
            if i > 0 {
                line.extend(core::iter::repeat_n(' ', spacing));
            }
            match art.get(row) {
                Some(text) => line.push_str(text),
                None => line.extend(core::iter::repeat_n(BLANK, r.width())),
            }
        }
    }
    rows
}
