//! Value to shape encoding of the sixteen digits, the line-count constraints
//! every digit obeys, and "sticks arithmetic".

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// One of the seven display segments.
///
/// `A` top bar, `G` middle bar, `D` bottom bar; `F`/`E` are the upper and
/// lower halves of the left rail, `B`/`C` the upper and lower halves of the
/// right rail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Segment {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Segment {
    /// Canonical order, used for every iteration and for rendering.
    pub const ALL: [Segment; 7] = [
        Segment::A,
        Segment::B,
        Segment::C,
        Segment::D,
        Segment::E,
        Segment::F,
        Segment::G,
    ];

    pub const fn bit(self) -> u8 {
        1 << self as u8
    }

    pub const fn label(self) -> char {
        match self {
            Segment::A => 'A',
            Segment::B => 'B',
            Segment::C => 'C',
            Segment::D => 'D',
            Segment::E => 'E',
            Segment::F => 'F',
            Segment::G => 'G',
        }
    }

    pub fn from_label(c: char) -> Option<Segment> {
        Segment::ALL
            .into_iter()
            .find(|s| s.label() == c.to_ascii_uppercase())
    }

    pub const fn is_vertical(self) -> bool {
        matches!(self, Segment::B | Segment::C | Segment::E | Segment::F)
    }
}

/// A hexadecimal digit value in `0..=15`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nibble(u8);

impl Nibble {
    pub const ZERO: Nibble = Nibble(0);
    pub const ONE: Nibble = Nibble(1);

    pub const fn new(value: u8) -> Option<Nibble> {
        if value < 16 {
            Some(Nibble(value))
        } else {
            None
        }
    }

    /// Low four bits of `value`.
    pub const fn truncate(value: u8) -> Nibble {
        Nibble(value & 0x0f)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Nibble> + Clone {
        (0..16).map(Nibble)
    }

    /// Conventional digit `0-9A-F`.
    pub const fn hex_char(self) -> char {
        let b = if self.0 < 10 {
            b'0' + self.0
        } else {
            b'A' + self.0 - 10
        };
        b as char
    }

    pub fn from_hex_char(c: char) -> Option<Nibble> {
        c.to_digit(16).map(|v| Nibble(v as u8))
    }
}

impl TryFrom<u8> for Nibble {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Nibble::new(value).ok_or(Error::NibbleRange(value as u32))
    }
}

impl From<Nibble> for u8 {
    fn from(n: Nibble) -> u8 {
        n.0
    }
}

impl fmt::Display for Nibble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex_char())
    }
}

/// A byte, seen as a pair of digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ByteValue(pub u8);

impl ByteValue {
    pub const fn from_nibbles(high: Nibble, low: Nibble) -> ByteValue {
        ByteValue(high.0 << 4 | low.0)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn high(self) -> Nibble {
        Nibble(self.0 >> 4)
    }

    pub const fn low(self) -> Nibble {
        Nibble(self.0 & 0x0f)
    }

    pub fn all() -> impl Iterator<Item = ByteValue> + Clone {
        (0..=255).map(ByteValue)
    }
}

impl From<u8> for ByteValue {
    fn from(b: u8) -> Self {
        ByteValue(b)
    }
}

/// Set of lit segments, stored as a bitmask in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SegmentSet(u8);

impl SegmentSet {
    pub const EMPTY: SegmentSet = SegmentSet(0);
    pub const LEFT_RAIL: SegmentSet = SegmentSet(Segment::F.bit() | Segment::E.bit());
    pub const RIGHT_RAIL: SegmentSet = SegmentSet(Segment::B.bit() | Segment::C.bit());
    /// Zero: the square under the middle bar.
    pub const BOTTOM_SQUARE: SegmentSet =
        SegmentSet(Segment::G.bit() | Segment::E.bit() | Segment::C.bit() | Segment::D.bit());
    /// Eight: the square above the middle bar.
    pub const TOP_SQUARE: SegmentSet =
        SegmentSet(Segment::A.bit() | Segment::F.bit() | Segment::B.bit() | Segment::G.bit());

    pub const fn from_bits(bits: u8) -> SegmentSet {
        SegmentSet(bits & 0x7f)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn with(self, s: Segment) -> SegmentSet {
        SegmentSet(self.0 | s.bit())
    }

    pub const fn union(self, other: SegmentSet) -> SegmentSet {
        SegmentSet(self.0 | other.0)
    }

    pub const fn contains(self, s: Segment) -> bool {
        self.0 & s.bit() != 0
    }

    pub const fn contains_all(self, other: SegmentSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn symmetric_difference(self, other: SegmentSet) -> SegmentSet {
        SegmentSet(self.0 ^ other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Segment> + Clone {
        Segment::ALL.into_iter().filter(move |s| self.contains(*s))
    }

    /// Segment labels in canonical order, e.g. `"ADEFG"`.
    pub fn labels(self) -> String {
        self.iter().map(Segment::label).collect()
    }

    /// Parses a run of segment labels in any order and case.
    pub fn parse(text: &str) -> Result<SegmentSet> {
        text.char_indices().try_fold(SegmentSet::EMPTY, |acc, (i, c)| {
            Segment::from_label(c)
                .map(|s| acc.with(s))
                .ok_or_else(|| Error::parse(i, "not a segment label"))
        })
    }
}

impl FromIterator<Segment> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        iter.into_iter().fold(SegmentSet::EMPTY, SegmentSet::with)
    }
}

impl fmt::Debug for SegmentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s.label())?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for SegmentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shape of digit `n`.
///
/// Bit `+8` selects the left rail, its absence the right rail; `+4`, `+2`
/// and `+1` light the top, middle and bottom bars. Zero and eight would be
/// bare rails under that rule, so they take the bottom and top squares.
pub const fn encode_nibble(n: Nibble) -> SegmentSet {
    match n.0 {
        0 => SegmentSet::BOTTOM_SQUARE,
        8 => SegmentSet::TOP_SQUARE,
        v => {
            let mut bits = if v >= 8 {
                SegmentSet::LEFT_RAIL.0
            } else {
                SegmentSet::RIGHT_RAIL.0
            };
            if v & 4 != 0 {
                bits |= Segment::A.bit();
            }
            if v & 2 != 0 {
                bits |= Segment::G.bit();
            }
            if v & 1 != 0 {
                bits |= Segment::D.bit();
            }
            SegmentSet(bits)
        }
    }
}

/// Exact inverse of [`encode_nibble`] on the sixteen canonical sets.
pub fn decode_segments(s: SegmentSet) -> Result<Nibble> {
    if s == SegmentSet::BOTTOM_SQUARE {
        return Ok(Nibble(0));
    }
    if s == SegmentSet::TOP_SQUARE {
        return Ok(Nibble(8));
    }
    let bars = Segment::A.bit() | Segment::G.bit() | Segment::D.bit();
    let rail = SegmentSet(s.0 & !bars);
    let high = if rail == SegmentSet::LEFT_RAIL {
        8
    } else if rail == SegmentSet::RIGHT_RAIL {
        0
    } else {
        return Err(Error::InvalidGlyph(s.labels()));
    };
    let value = high
        | (s.contains(Segment::A) as u8) << 2
        | (s.contains(Segment::G) as u8) << 1
        | s.contains(Segment::D) as u8;
    // A bare rail would be 0 or 8, which use the squares instead.
    if value & 7 == 0 {
        return Err(Error::InvalidGlyph(s.labels()));
    }
    Ok(Nibble(value))
}

/// Line and vertical-line counts of a segment set, and the three
/// structural checks every digit must pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintReport {
    pub lines: usize,
    pub vertical_lines: usize,
    /// The set is one of the zero/eight squares.
    pub square_exception: bool,
    pub at_least_one_line: bool,
    pub at_most_one_vertical: bool,
    pub at_most_four_lines: bool,
}

impl ConstraintReport {
    pub fn passes(&self) -> bool {
        self.at_least_one_line && self.at_most_one_vertical && self.at_most_four_lines
    }
}

/// Counts lines with a full rail as one line; inside the zero/eight squares
/// each half-rail is a side of the square and counts on its own.
pub fn validate_constraints(s: SegmentSet) -> ConstraintReport {
    let square = s == SegmentSet::BOTTOM_SQUARE || s == SegmentSet::TOP_SQUARE;
    let bars = [Segment::A, Segment::G, Segment::D]
        .into_iter()
        .filter(|b| s.contains(*b))
        .count();
    let rail_lines = |rail: SegmentSet| -> usize {
        let halves = SegmentSet(s.0 & rail.0).len();
        if square || halves < 2 {
            halves
        } else {
            1
        }
    };
    let verticals = rail_lines(SegmentSet::LEFT_RAIL) + rail_lines(SegmentSet::RIGHT_RAIL);
    let lines = bars + verticals;
    ConstraintReport {
        lines,
        vertical_lines: verticals,
        square_exception: square,
        at_least_one_line: lines >= 1,
        at_most_one_vertical: verticals <= 1 || square,
        at_most_four_lines: lines <= 4,
    }
}

/// Bit position of a stick: `+1`, `+2`, `+4` or `+8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitPosition(u8);

impl BitPosition {
    pub const ALL: [BitPosition; 4] = [BitPosition(0), BitPosition(1), BitPosition(2), BitPosition(3)];

    pub const fn weight(self) -> u8 {
        1 << self.0
    }
}

/// A merge of two sticks at one position, promoted to the next position up
/// (or out of the digit as a carry when the position is `+8`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeStep {
    pub position: BitPosition,
    /// A stick carried in from the position below took part.
    pub carried: bool,
}

/// Record of a sticks addition, one step per merged position, lowest first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AddTrace {
    pub steps: Vec<MergeStep>,
}

impl AddTrace {
    /// Re-runs the addition letting the recorded steps decide every carry.
    /// Fails if a step is missing, superfluous, or carries the wrong flag.
    pub fn replay(&self, a: Nibble, b: Nibble) -> Result<(Nibble, bool)> {
        let mut steps = self.steps.iter().peekable();
        let mut carry = false;
        let mut sum = 0u8;
        for pos in BitPosition::ALL {
            let sticks = ((a.0 >> pos.0) & 1) + ((b.0 >> pos.0) & 1) + carry as u8;
            let merged = match steps.peek() {
                Some(step) if step.position == pos => {
                    if step.carried != carry {
                        return Err(Error::InvalidConfig(String::from(
                            "trace carry flag disagrees with replay",
                        )));
                    }
                    steps.next();
                    true
                }
                _ => false,
            };
            let left = sticks as i8 - 2 * merged as i8;
            if !(0..=1).contains(&left) {
                return Err(Error::InvalidConfig(String::from(
                    "trace does not match the operand sticks",
                )));
            }
            sum |= (left as u8) << pos.0;
            carry = merged;
        }
        if steps.next().is_some() {
            return Err(Error::InvalidConfig(String::from("trailing trace steps")));
        }
        Ok((Nibble(sum), carry))
    }
}

/// Adds two digits stick by stick: two sticks at the same position merge
/// into one stick at the next position, `+8 + +8` leaves the digit as a
/// carry.
pub fn sticks_add(a: Nibble, b: Nibble) -> (Nibble, bool, AddTrace) {
    let mut trace = AddTrace::default();
    let mut carry = false;
    let mut sum = 0u8;
    for pos in BitPosition::ALL {
        let sticks = ((a.0 >> pos.0) & 1) + ((b.0 >> pos.0) & 1) + carry as u8;
        let merged = sticks >= 2;
        if merged {
            trace.steps.push(MergeStep {
                position: pos,
                carried: carry,
            });
        }
        sum |= (sticks & 1) << pos.0;
        carry = merged;
    }
    (Nibble(sum), carry, trace)
}

/// Adds two base-16 numerals (most significant digit first) by chaining
/// [`sticks_add`] from the right. The result has no leading zeros, except
/// for a lone `0`.
pub fn add_numerals(x: &[Nibble], y: &[Nibble]) -> Vec<Nibble> {
    let mut out = Vec::with_capacity(x.len().max(y.len()) + 1);
    let mut xs = x.iter().rev();
    let mut ys = y.iter().rev();
    let mut carry = false;
    loop {
        let (a, b) = match (xs.next(), ys.next()) {
            (None, None) => break,
            (a, b) => (
                a.copied().unwrap_or(Nibble::ZERO),
                b.copied().unwrap_or(Nibble::ZERO),
            ),
        };
        let (partial, c1, _) = sticks_add(a, b);
        let (digit, c2) = if carry {
            let (d, c, _) = sticks_add(partial, Nibble::ONE);
            (d, c)
        } else {
            (partial, false)
        };
        out.push(digit);
        carry = c1 || c2;
    }
    if carry {
        out.push(Nibble::ONE);
    }
    while out.len() > 1 && out.last() == Some(&Nibble::ZERO) {
        out.pop();
    }
    if out.is_empty() {
        out.push(Nibble::ZERO);
    }
    out.reverse();
    out
}

/// Parses `0-9A-Fa-f` digits, most significant first.
pub fn parse_hex_digits(text: &str) -> Result<Vec<Nibble>> {
    if text.is_empty() {
        return Err(Error::parse(0, "empty numeral"));
    }
    text.char_indices()
        .map(|(i, c)| Nibble::from_hex_char(c).ok_or_else(|| Error::parse(i, "not a hex digit")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn n(v: u8) -> Nibble {
        Nibble::new(v).unwrap()
    }

    fn set(labels: &str) -> SegmentSet {
        SegmentSet::parse(labels).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_nibble(n(15)), set("FEAGD"));
        assert_eq!(encode_nibble(n(0)), set("GECD"));
        assert_eq!(encode_nibble(n(5)), set("BCAD"));
        assert_eq!(encode_nibble(n(8)), set("AFBG"));
        assert_eq!(encode_nibble(n(2)), set("BCG"));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_segments(set("AFBG")).unwrap(), n(8));
        assert_eq!(decode_segments(set("FED")).unwrap(), n(9));
        assert!(matches!(decode_segments(set("BC")), Err(Error::InvalidGlyph(_))));
        assert!(matches!(decode_segments(set("FE")), Err(Error::InvalidGlyph(_))));
        assert!(decode_segments(SegmentSet::EMPTY).is_err());
        assert!(decode_segments(set("BCFE")).is_err());
        assert!(decode_segments(set("BA")).is_err());
    }

    #[test]
    fn decode_rejects_every_non_canonical_set() {
        let canonical: Vec<_> = Nibble::all().map(encode_nibble).collect();
        for bits in 0..128u8 {
            let s = SegmentSet::from_bits(bits);
            match canonical.iter().position(|c| *c == s) {
                Some(i) => assert_eq!(decode_segments(s).unwrap().value() as usize, i),
                None => assert!(decode_segments(s).is_err(), "{s:?}"),
            }
        }
    }

    #[test]
    fn constraint_examples() {
        let seven = validate_constraints(encode_nibble(n(7)));
        assert_eq!(seven.lines, 4);
        assert_eq!(seven.vertical_lines, 1);
        assert!(seven.passes());

        let zero = validate_constraints(encode_nibble(n(0)));
        assert_eq!(zero.vertical_lines, 2);
        assert_eq!(zero.lines, 4);
        assert!(zero.square_exception);
        assert!(zero.passes());

        let empty = validate_constraints(SegmentSet::EMPTY);
        assert!(!empty.at_least_one_line);
        assert!(!empty.passes());

        let both_rails = validate_constraints(set("BCEF"));
        assert!(!both_rails.at_most_one_vertical);

        let too_many = validate_constraints(set("ABCDEFG"));
        assert!(!too_many.at_most_four_lines);
    }

    #[test]
    fn sticks_add_examples() {
        let (s, c, t) = sticks_add(n(1), n(1));
        assert_eq!((s, c), (n(2), false));
        assert_eq!(
            t.steps,
            vec![MergeStep {
                position: BitPosition(0),
                carried: false
            }]
        );
        let (s, c, _) = sticks_add(n(8), n(8));
        assert_eq!((s, c), (n(0), true));
        let (s, c, t) = sticks_add(n(15), n(15));
        assert_eq!((s, c), (n(14), true));
        assert_eq!(t.steps.len(), 4);
        assert!(!t.steps[0].carried && t.steps[1].carried);
    }

    #[test]
    fn replay_rejects_tampered_trace() {
        let (_, _, mut t) = sticks_add(n(3), n(1));
        assert_eq!(t.replay(n(3), n(1)).unwrap(), (n(4), false));
        t.steps.pop();
        assert!(t.replay(n(3), n(1)).is_err());
    }

    #[test]
    fn add_numerals_examples() {
        let p = |s| parse_hex_digits(s).unwrap();
        assert_eq!(add_numerals(&p("FF"), &p("01")), p("100"));
        assert_eq!(add_numerals(&p("00A3"), &p("0")), p("A3"));
        // 0xAB + 0xCD = 171 + 205 = 376 = 0x178
        assert_eq!(add_numerals(&p("AB"), &p("CD")), p("178"));
        assert_eq!(add_numerals(&p("0"), &p("0")), p("0"));
    }

    #[test]
    fn hex_digit_parsing() {
        assert_eq!(parse_hex_digits("fA").unwrap(), vec![n(15), n(10)]);
        assert_eq!(
            parse_hex_digits("1g"),
            Err(Error::parse(1, "not a hex digit"))
        );
    }
}
