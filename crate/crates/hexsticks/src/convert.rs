//! Value-preserving conversion between decimal, standard hex, syllable
//! names and digit text art. Values have arbitrary precision.

use hexsticks_core::digit::parse_hex_digits;
use hexsticks_core::render::{join_text_art, rasterize};
use hexsticks_core::{byte_name, digit_grid, parse_name, ByteValue, Error, Nibble, StyleProfile};
use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Repr {
    Dec,
    Hex,
    Names,
    Art,
}

fn parse_error(offset: usize, detail: &str) -> Error {
    Error::Parse {
        offset,
        detail: detail.to_owned(),
    }
}

fn from_nibbles(digits: &[Nibble]) -> BigUint {
    digits
        .iter()
        .fold(BigUint::default(), |acc, d| (acc << 4u8) + d.value())
}

/// Parses `input` in representation `from`. Surrounding whitespace is
/// ignored; offsets in errors refer to the untrimmed input.
pub fn parse_value(input: &str, from: Repr) -> Result<BigUint, Error> {
    let lead = input.len() - input.trim_start().len();
    let text = input.trim();
    let shift = |e: Error| match e {
        Error::Parse { offset, detail } => Error::Parse {
            offset: offset + lead,
            detail,
        },
        other => other,
    };
    match from {
        Repr::Dec => {
            if text.is_empty() {
                return Err(parse_error(lead, "empty numeral"));
            }
            if let Some(i) = text.find(|c: char| !c.is_ascii_digit()) {
                return Err(parse_error(lead + i, "not a decimal digit"));
            }
            Ok(BigUint::parse_bytes(text.as_bytes(), 10).expect("digits checked"))
        }
        Repr::Hex => {
            let (skip, body) = match text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
                Some(rest) => (2, rest),
                None => (0, text),
            };
            let digits = parse_hex_digits(body).map_err(|e| match shift(e) {
                Error::Parse { offset, detail } => Error::Parse {
                    offset: offset + skip,
                    detail,
                },
                other => other,
            })?;
            Ok(from_nibbles(&digits))
        }
        Repr::Names => {
            let digits = parse_name(text).map_err(shift)?;
            if digits.is_empty() {
                return Err(parse_error(lead, "empty numeral"));
            }
            Ok(from_nibbles(&digits))
        }
        Repr::Art => Err(parse_error(0, "text art is an output-only representation")),
    }
}

/// Renders `value` in representation `to`.
pub fn render_value(value: &BigUint, to: Repr) -> String {
    match to {
        Repr::Dec => value.to_str_radix(10),
        Repr::Hex => value.to_str_radix(16).to_uppercase(),
        Repr::Names => value
            .to_bytes_be()
            .into_iter()
            .map(|b| byte_name(ByteValue(b)).text())
            .collect::<Vec<_>>()
            .join(" "),
        Repr::Art => {
            let style = StyleProfile::default();
            let rasters: Vec<_> = value
                .to_str_radix(16)
                .chars()
                .map(|c| {
                    let n = Nibble::from_hex_char(c).expect("radix 16 output");
                    rasterize(&digit_grid(n, &style), 2).expect("scale 2 is valid")
                })
                .collect();
            join_text_art(&rasters, 1).join("\n")
        }
    }
}

pub fn convert(input: &str, from: Repr, to: Repr) -> Result<String, Error> {
    Ok(render_value(&parse_value(input, from)?, to))
}

/// Names for a value written in hex (with `0x`) or decimal.
pub fn name_of(input: &str) -> Result<String, Error> {
    let trimmed = input.trim();
    let from = if trimmed.starts_with("0x") || trimmed.starts_with("0X") {
        Repr::Hex
    } else {
        Repr::Dec
    };
    convert(input, from, Repr::Names)
}
