//! Digit and ligature layouts on a lattice of nodes, plus style profiles.
//!
//! A digit box spans `x ∈ [0,1]`, `y ∈ [0,2]`: two columns by three rows of
//! nodes, the top bar at `y = 2`, the middle bar at `y = 1`, the bottom bar
//! at `y = 0`, rails at `x = 0` and `x = 1`. A ligature puts two boxes side
//! by side, giving four node columns by three rows: twelve cells.

use crate::digit::{decode_segments, encode_nibble, ByteValue, Nibble, Segment, SegmentSet};
use crate::{Error, Result};
use alloc::format;

/// Horizontal separation between the two halves of a ligature, in box widths.
pub const LIGATURE_GAP: f64 = 0.25;

pub const ROWS: usize = 3;

/// A node of the lattice, in node units within one glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: u8,
    pub y: u8,
}

impl Point {
    pub const fn new(x: u8, y: u8) -> Point {
        Point { x, y }
    }
}

/// End points of a segment in a digit box, lower/left end first.
pub const fn segment_endpoints(s: Segment) -> (Point, Point) {
    match s {
        Segment::A => (Point::new(0, 2), Point::new(1, 2)),
        Segment::G => (Point::new(0, 1), Point::new(1, 1)),
        Segment::D => (Point::new(0, 0), Point::new(1, 0)),
        Segment::F => (Point::new(0, 1), Point::new(0, 2)),
        Segment::E => (Point::new(0, 0), Point::new(0, 1)),
        Segment::B => (Point::new(1, 1), Point::new(1, 2)),
        Segment::C => (Point::new(1, 0), Point::new(1, 1)),
    }
}

/// Which half of a ligature a digit sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    High,
    Low,
}

/// Shape deviations that leave the topology alone.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct StyleProfile {
    /// Radius of rounded corners, in box widths. Zero keeps corners sharp.
    pub corner_rounding: f64,
    /// How far each bar bows upward at its middle, in box widths.
    pub curvature: f64,
    /// Shear angle in degrees; positive leans right.
    pub slope: f64,
    /// Vertical shift magnitude; superscript for high digits, subscript for
    /// low digits.
    pub prolongation: f64,
    /// Pen width in box widths.
    pub stroke_width: f64,
}

impl Default for StyleProfile {
    fn default() -> Self {
        StyleProfile {
            corner_rounding: 0.0,
            curvature: 0.0,
            slope: 0.0,
            prolongation: 0.0,
            stroke_width: 0.12,
        }
    }
}

impl StyleProfile {
    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.corner_rounding,
            self.curvature,
            self.slope,
            self.prolongation,
            self.stroke_width,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidConfig("style values must be finite".into()));
        }
        if !(0.0..=0.5).contains(&self.corner_rounding) {
            return Err(Error::InvalidConfig(format!(
                "corner_rounding {} outside [0, 0.5]",
                self.corner_rounding
            )));
        }
        if self.slope.abs() >= 60.0 {
            return Err(Error::InvalidConfig(format!(
                "slope {} must be within (-60, 60) degrees",
                self.slope
            )));
        }
        if self.stroke_width <= 0.0 {
            return Err(Error::InvalidConfig("stroke_width must be positive".into()));
        }
        Ok(())
    }

    /// Style of the digit at `index` within a numeral.
    ///
    /// High digits are raised by `prolongation`, low digits lowered; corner
    /// rounding applies to even indices only so neighbours alternate.
    pub fn positioned(&self, index: usize, half: Half) -> StyleProfile {
        let mut s = *self;
        s.prolongation = match half {
            Half::High => self.prolongation.abs(),
            Half::Low => -self.prolongation.abs(),
        };
        if index % 2 == 1 {
            s.corner_rounding = 0.0;
        }
        s
    }

    /// Horizontal shear factor.
    pub fn shear(&self) -> f64 {
        libm::tan(self.slope.to_radians())
    }
}

/// Ink flags for the edges between lattice nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellMatrix {
    columns: usize,
    /// `horizontal[c][r]`: edge from node `(c, r)` to `(c + 1, r)`.
    horizontal: [[bool; ROWS]; 3],
    /// `vertical[c][r]`: edge from node `(c, r)` to `(c, r + 1)`.
    vertical: [[bool; ROWS - 1]; 4],
    pub style: StyleProfile,
}

impl CellMatrix {
    fn blank(columns: usize, style: StyleProfile) -> CellMatrix {
        CellMatrix {
            columns,
            horizontal: [[false; ROWS]; 3],
            vertical: [[false; ROWS - 1]; 4],
            style,
        }
    }

    fn set_segment(&mut self, column_offset: usize, s: Segment) {
        let (a, b) = segment_endpoints(s);
        let c = column_offset + a.x as usize;
        if a.y == b.y {
            self.horizontal[c][a.y as usize] = true;
        } else {
            self.vertical[c][a.y as usize] = true;
        }
    }

    fn has_segment(&self, column_offset: usize, s: Segment) -> bool {
        let (a, b) = segment_endpoints(s);
        let c = column_offset + a.x as usize;
        if a.y == b.y {
            self.horizontal[c][a.y as usize]
        } else {
            self.vertical[c][a.y as usize]
        }
    }

    /// Places a segment set into a two-column digit matrix.
    pub fn from_segments(s: SegmentSet, style: StyleProfile) -> CellMatrix {
        let mut m = CellMatrix::blank(2, style);
        for seg in s.iter() {
            m.set_segment(0, seg);
        }
        m
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        ROWS
    }

    pub fn cell_count(&self) -> usize {
        self.columns * ROWS
    }

    /// The segment set of digit box `box_index` (0 for a digit, 0 or 1 in a
    /// ligature matrix).
    pub fn segments_in_box(&self, box_index: usize) -> SegmentSet {
        Segment::ALL
            .into_iter()
            .filter(|s| self.has_segment(2 * box_index, *s))
            .collect()
    }

    pub fn segments(&self) -> SegmentSet {
        self.segments_in_box(0)
    }

    /// Ink flags with the style stripped; equal topologies compare equal.
    pub fn topology(&self) -> ([[bool; ROWS]; 3], [[bool; ROWS - 1]; 4]) {
        (self.horizontal, self.vertical)
    }

    pub fn horizontal_ink(&self, column: usize, row: usize) -> bool {
        self.horizontal[column][row]
    }

    pub fn vertical_ink(&self, column: usize, row: usize) -> bool {
        self.vertical[column][row]
    }
}

/// The digit matrix of `n`.
pub fn digit_grid(n: Nibble, style: &StyleProfile) -> CellMatrix {
    CellMatrix::from_segments(encode_nibble(n), *style)
}

/// A byte's glyph: the high digit on the left, the low digit on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LigatureGlyph {
    pub byte: ByteValue,
    pub high: CellMatrix,
    pub low: CellMatrix,
    /// Separation between halves, in box widths.
    pub gap: f64,
}

impl LigatureGlyph {
    /// The combined four-column matrix; column pair 1..2 is the gap and
    /// never carries ink.
    pub fn matrix(&self) -> CellMatrix {
        let mut m = CellMatrix::blank(4, self.high.style);
        for s in self.high.segments().iter() {
            m.set_segment(0, s);
        }
        for s in self.low.segments().iter() {
            m.set_segment(2, s);
        }
        m
    }

    /// Left edge of each half, in box widths.
    pub fn half_x(&self, half: Half) -> f64 {
        match half {
            Half::High => 0.0,
            Half::Low => 1.0 + self.gap,
        }
    }

    pub fn decode(&self) -> Result<ByteValue> {
        Ok(ByteValue::from_nibbles(
            decode_segments(self.high.segments())?,
            decode_segments(self.low.segments())?,
        ))
    }

    /// Both halves packed into one fourteen-bit layout.
    pub fn layout(&self) -> u16 {
        (self.high.segments().bits() as u16) << 7 | self.low.segments().bits() as u16
    }
}

/// The ligature of byte `b`, each half styled by its position.
pub fn ligature_grid(b: ByteValue, style: &StyleProfile) -> LigatureGlyph {
    LigatureGlyph {
        byte: b,
        high: digit_grid(b.high(), &style.positioned(0, Half::High)),
        low: digit_grid(b.low(), &style.positioned(1, Half::Low)),
        gap: LIGATURE_GAP,
    }
}

/// The digit as lit segments of a seven-segment display.
pub fn seven_segment_map(n: Nibble) -> SegmentSet {
    encode_nibble(n)
}

/// Anything whose ink can be compared edge by edge.
pub trait InkLayout {
    fn ink_bits(&self) -> u64;
}

impl InkLayout for SegmentSet {
    fn ink_bits(&self) -> u64 {
        self.bits() as u64
    }
}

impl InkLayout for LigatureGlyph {
    fn ink_bits(&self) -> u64 {
        self.layout() as u64
    }
}

impl InkLayout for CellMatrix {
    fn ink_bits(&self) -> u64 {
        let mut bits = 0u64;
        let mut i = 0;
        for col in self.horizontal.iter() {
            for &ink in col.iter() {
                bits |= (ink as u64) << i;
                i += 1;
            }
        }
        for col in self.vertical.iter() {
            for &ink in col.iter() {
                bits |= (ink as u64) << i;
                i += 1;
            }
        }
        bits
    }
}

/// Smallest number of differing segments over all pairs. Zero means two
/// glyphs are identical.
pub fn distinctness<T: InkLayout>(glyphs: &[T]) -> Result<usize> {
    if glyphs.len() < 2 {
        return Err(Error::EmptyInput(glyphs.len()));
    }
    let bits: alloc::vec::Vec<u64> = glyphs.iter().map(InkLayout::ink_bits).collect();
    let mut best = usize::MAX;
    for (i, a) in bits.iter().enumerate() {
        for b in &bits[i + 1..] {
            best = best.min((a ^ b).count_ones() as usize);
        }
    }
    Ok(best)
}
