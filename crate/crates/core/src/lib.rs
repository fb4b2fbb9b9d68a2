//! Binary-encoding hexadecimal digits and their base-256 ligatures.
//!
//! Each hexadecimal digit is drawn on a seven-segment skeleton so that its
//! bits stay visible: a full rail on the left marks `+8`, a full rail on the
//! right marks its absence, and the top, middle and bottom bars carry `+4`,
//! `+2` and `+1`. Zero and eight are the exceptional "bottom square" and
//! "top square". Two digits joined side by side make a ligature naming one
//! byte.
//!
//! The crate is `no_std` and only needs `alloc`. File IO, the CLI and the
//! editor service live in the `hexsticks` companion crate.

#![no_std]

extern crate alloc;

pub mod criteria;
pub mod digit;
pub mod dump;
mod error;
pub mod geometry;
pub mod naming;
pub mod render;
pub mod strokes;
pub mod svg;

pub use crate::digit::{
    add_numerals, decode_segments, encode_nibble, sticks_add, validate_constraints, AddTrace,
    ByteValue, ConstraintReport, Nibble, Segment, SegmentSet,
};
pub use crate::error::Error;
pub use crate::geometry::{
    digit_grid, distinctness, ligature_grid, seven_segment_map, CellMatrix, LigatureGlyph,
    StyleProfile,
};
pub use crate::naming::{byte_name, digit_syllable, parse_name, ByteName, Syllable};
pub use crate::strokes::{stroke_plan, StrokePlan};

pub type Result<T, E = Error> = core::result::Result<T, E>;
