//! Quality criteria for hexadecimal symbol sets, the published comparison
//! table, and the machine-checkable subset evaluated against the model.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::digit::{decode_segments, encode_nibble, ByteValue, Nibble, SegmentSet};
use crate::geometry::{distinctness, ligature_grid, seven_segment_map, LigatureGlyph, StyleProfile};
use crate::strokes::stroke_plan;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    /// Mnemonic.
    Mne,
    /// At most two pen strokes per symbol.
    Str,
    /// Combinable into base-256 ligatures.
    Lig,
    /// Low ambiguity when drawn quickly.
    Amb,
    /// Shown on a seven-segment display.
    Dsp,
    /// Binary-encoded.
    Bin,
    /// Keeps the shape of `0`.
    Zero,
    /// Keeps the shape of `1`.
    One,
    /// Easy translation to and from binary.
    Trn,
}

impl Criterion {
    pub const ALL: [Criterion; 9] = [
        Criterion::Mne,
        Criterion::Str,
        Criterion::Lig,
        Criterion::Amb,
        Criterion::Dsp,
        Criterion::Bin,
        Criterion::Zero,
        Criterion::One,
        Criterion::Trn,
    ];

    pub const fn key(self) -> &'static str {
        match self {
            Criterion::Mne => "MNE",
            Criterion::Str => "STR",
            Criterion::Lig => "LIG",
            Criterion::Amb => "AMB",
            Criterion::Dsp => "DSP",
            Criterion::Bin => "BIN",
            Criterion::Zero => "ZERO",
            Criterion::One => "ONE",
            Criterion::Trn => "TRN",
        }
    }

    pub fn from_key(key: &str) -> Option<Criterion> {
        Criterion::ALL.into_iter().find(|c| c.key() == key)
    }

    const fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Manual,
    Computed,
}

/// One symbol set's flags, one per criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSetProfile {
    pub name: String,
    flags: [bool; 9],
    provenance: [Provenance; 9],
}

impl SymbolSetProfile {
    /// A profile with every flag set by hand.
    pub fn manual(name: impl Into<String>, flags: [bool; 9]) -> SymbolSetProfile {
        SymbolSetProfile {
            name: name.into(),
            flags,
            provenance: [Provenance::Manual; 9],
        }
    }

    pub fn flag(&self, c: Criterion) -> bool {
        self.flags[c.index()]
    }

    pub fn provenance(&self, c: Criterion) -> Provenance {
        self.provenance[c.index()]
    }

    pub fn set_computed(&mut self, c: Criterion, value: bool) {
        self.flags[c.index()] = value;
        self.provenance[c.index()] = Provenance::Computed;
    }

    pub fn flags(&self) -> impl Iterator<Item = (Criterion, bool)> + '_ {
        Criterion::ALL.into_iter().map(|c| (c, self.flag(c)))
    }
}

/// Number of criteria a profile meets.
pub fn score(p: &SymbolSetProfile) -> usize {
    p.flags.iter().filter(|f| **f).count()
}

/// A row of the comparison table with its published score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub profile: SymbolSetProfile,
    pub published_score: usize,
}

pub const PROPOSED_SET: &str = "Hexsticks 2017";

// Column order: MNE STR LIG AMB DSP BIN ZERO ONE TRN.
const T: bool = true;
const F: bool = false;
const ROWS: [(&str, [bool; 9], usize); 9] = [
    ("Standard Hexadecimal", [F, T, F, T, T, F, T, T, F], 5),
    ("Martin 1968", [T, F, F, F, F, T, F, F, T], 3),
    ("Laponte 1969", [T, T, F, T, F, T, T, T, F], 6),
    ("MEJD 2009", [T, F, F, T, F, F, T, T, F], 4),
    ("Stick digits 2009", [T, T, F, T, T, T, T, T, F], 7),
    ("Hexy Digits 2011", [T, F, F, T, F, T, T, T, F], 5),
    ("Trismarck 2012", [F, F, F, F, T, T, F, F, F], 2),
    ("Stick digits 2015", [T, T, T, F, T, T, T, F, T], 7),
    // Eight marks over nine columns; ONE is the unchecked one here.
    (PROPOSED_SET, [T, T, T, T, T, T, T, F, T], 8),
];

/// The comparison table, one row per symbol set.
pub fn table1() -> Vec<TableRow> {
    ROWS.iter()
        .map(|(name, flags, published)| TableRow {
            profile: SymbolSetProfile::manual(name.to_string(), *flags),
            published_score: *published,
        })
        .collect()
}

/// Flags that can be checked against the model, with evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelChecks {
    pub max_strokes: usize,
    pub seven_segment: bool,
    pub round_trip: bool,
    pub ligature_distinctness: usize,
    pub ligature_cells: usize,
}

impl ModelChecks {
    pub fn run() -> ModelChecks {
        let max_strokes = Nibble::all().map(|n| stroke_plan(n).len()).max().unwrap_or(0);
        let seven_segment = Nibble::all().all(|n| {
            let s = seven_segment_map(n);
            !s.is_empty() && SegmentSet::from_bits(0x7f).contains_all(s)
        });
        let round_trip = Nibble::all().all(|n| decode_segments(encode_nibble(n)) == Ok(n));
        let style = StyleProfile::default();
        let ligatures: Vec<LigatureGlyph> = ByteValue::all().map(|b| ligature_grid(b, &style)).collect();
        let ligature_distinctness = distinctness(&ligatures).unwrap_or(0);
        let ligature_cells = ligatures
            .iter()
            .map(|g| g.matrix().cell_count())
            .max()
            .unwrap_or(0);
        let ligature_round_trip = ligatures.iter().all(|g| g.decode() == Ok(g.byte));
        ModelChecks {
            max_strokes,
            seven_segment,
            round_trip: round_trip && ligature_round_trip,
            ligature_distinctness,
            ligature_cells,
        }
    }

    pub fn flag(&self, c: Criterion) -> Option<bool> {
        match c {
            Criterion::Str => Some(self.max_strokes <= 2),
            Criterion::Dsp => Some(self.seven_segment),
            Criterion::Bin => Some(self.round_trip),
            Criterion::Lig => Some(self.ligature_distinctness >= 1 && self.ligature_cells == 12),
            _ => None,
        }
    }
}

/// The proposed set's profile with STR, DSP, BIN and LIG computed from the
/// model; the rest come from the stored row.
pub fn auto_evaluate_proposed() -> Result<SymbolSetProfile> {
    let stored = table1()
        .into_iter()
        .find(|r| r.profile.name == PROPOSED_SET)
        .map(|r| r.profile)
        .expect("proposed set row is part of the table");
    evaluate_against(&stored, &ModelChecks::run())
}

/// Overlays computed flags on `stored`, refusing to drop a stored `true`.
pub fn evaluate_against(stored: &SymbolSetProfile, checks: &ModelChecks) -> Result<SymbolSetProfile> {
    let mut profile = stored.clone();
    for c in Criterion::ALL {
        if let Some(value) = checks.flag(c) {
            if stored.flag(c) && !value {
                return Err(Error::ModelContradiction { criterion: c.key() });
            }
            profile.set_computed(c, value);
        }
    }
    Ok(profile)
}
