//! Bibi-binary syllable names: one syllable per digit, two per byte.
//!
//! The consonant carries the upper two bits (H, B, K, D) and the vowel the
//! lower two (o, a, e, i).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::digit::{ByteValue, Nibble};
use crate::{Error, Result};

const SYLLABLES: [&str; 16] = [
    "Ho", "Ha", "He", "Hi", "Bo", "Ba", "Be", "Bi", "Ko", "Ka", "Ke", "Ki", "Do", "Da", "De", "Di",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable(Nibble);

impl Syllable {
    pub fn value(self) -> Nibble {
        self.0
    }

    /// Capitalized form, e.g. `"Ko"`.
    pub fn text(self) -> &'static str {
        SYLLABLES[self.0.value() as usize]
    }

    /// Case-insensitive lookup of a two-letter syllable.
    pub fn parse(text: &str) -> Option<Syllable> {
        SYLLABLES
            .iter()
            .position(|s| s.eq_ignore_ascii_case(text))
            .map(|i| Syllable(Nibble::truncate(i as u8)))
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

pub fn digit_syllable(n: Nibble) -> Syllable {
    Syllable(n)
}

/// Two-syllable name of a byte, high digit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ByteName {
    pub high: Syllable,
    pub low: Syllable,
}

impl ByteName {
    /// `"Koka"`: leading capital only.
    pub fn text(&self) -> String {
        let mut s = String::with_capacity(4);
        s.push_str(self.high.text());
        s.extend(self.low.text().chars().map(|c| c.to_ascii_lowercase()));
        s
    }

    pub fn byte(&self) -> ByteValue {
        ByteValue::from_nibbles(self.high.value(), self.low.value())
    }
}

impl fmt::Display for ByteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.high.text())?;
        for c in self.low.text().chars() {
            write!(f, "{}", c.to_ascii_lowercase())?;
        }
        Ok(())
    }
}

pub fn byte_name(b: ByteValue) -> ByteName {
    ByteName {
        high: Syllable(b.high()),
        low: Syllable(b.low()),
    }
}

/// Splits names into digits, two letters at a time, ignoring case.
/// Whitespace separates words; a syllable never spans words.
pub fn parse_name(text: &str) -> Result<Vec<Nibble>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let syllable = match chars.peek() {
            Some(&(j, d)) if !d.is_whitespace() => {
                chars.next();
                text.get(i..j + d.len_utf8()).and_then(Syllable::parse)
            }
            _ => None,
        };
        match syllable {
            Some(s) => out.push(s.value()),
            None => return Err(Error::parse(i, "not a syllable")),
        }
    }
    Ok(out)
}

/// Parses whitespace-separated two-syllable names into bytes.
pub fn parse_byte_names(text: &str) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices().chain(core::iter::once((text.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                let digits = parse_name(&text[s..i]).map_err(|e| match e {
                    Error::Parse { offset, detail } => Error::Parse {
                        offset: offset + s,
                        detail,
                    },
                    other => other,
                })?;
                match digits.as_slice() {
                    [h, l] => out.push(ByteValue::from_nibbles(*h, *l).value()),
                    _ => return Err(Error::parse(s, "a byte name has exactly two syllables")),
                }
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn n(v: u8) -> Nibble {
        Nibble::new(v).unwrap()
    }

    #[test]
    fn digit_syllables() {
        assert_eq!(digit_syllable(n(5)).text(), "Ba");
        assert_eq!(digit_syllable(n(0)).text(), "Ho");
        assert_eq!(digit_syllable(n(15)).text(), "Di");
    }

    #[test]
    fn byte_names() {
        assert_eq!(byte_name(ByteValue(0x89)).text(), "Koka");
        assert_eq!(byte_name(ByteValue(0xEF)).text(), "Dedi");
        assert_eq!(byte_name(ByteValue(0x00)).text(), "Hoho");
        assert_eq!(byte_name(ByteValue(0xAB)).to_string(), "Keki");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_name("Dedi Koka").unwrap(),
            vec![n(14), n(15), n(8), n(9)]
        );
        assert_eq!(parse_name("hoho").unwrap(), vec![n(0), n(0)]);
        assert_eq!(parse_name("Hox"), Err(Error::parse(2, "not a syllable")));
        assert_eq!(parse_name("  KI  ").unwrap(), vec![n(11)]);
        assert_eq!(parse_name("").unwrap(), vec![]);
        // no syllable across a word break
        assert!(parse_name("H o").is_err());
        assert!(parse_name("Hé").is_err());
    }

    #[test]
    fn parse_byte_name_list() {
        assert_eq!(parse_byte_names("Koka dedi").unwrap(), vec![0x89, 0xEF]);
        assert_eq!(
            parse_byte_names("Koka Hoxo"),
            Err(Error::parse(7, "not a syllable"))
        );
        assert!(parse_byte_names("Kokaho").is_err());
    }
}
