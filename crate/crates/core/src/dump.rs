//! Hex-dump formatting in three modes: ligature text art, syllable names,
//! and conventional hex pairs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::digit::ByteValue;
use crate::geometry::{ligature_grid, StyleProfile};
use crate::naming::{byte_name, parse_byte_names};
use crate::render::{join_text_art, rasterize, Raster};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpMode {
    Art,
    Names,
    Std,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OffsetStyle {
    Std,
    Glyph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DumpConfig {
    pub bytes_per_line: usize,
    pub mode: DumpMode,
    pub scale: usize,
    pub offsets: OffsetStyle,
    pub ascii_gutter: bool,
}

impl Default for DumpConfig {
    fn default() -> Self {
        DumpConfig {
            bytes_per_line: 16,
            mode: DumpMode::Names,
            scale: 2,
            offsets: OffsetStyle::Std,
            ascii_gutter: true,
        }
    }
}

impl DumpConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bytes_per_line == 0 {
            return Err(Error::InvalidConfig("bytes per line must be at least 1".into()));
        }
        if self.mode == DumpMode::Art && self.scale < 2 {
            return Err(Error::ScaleTooSmall(self.scale));
        }
        Ok(())
    }
}

fn ascii(chunk: &[u8]) -> String {
    chunk
        .iter()
        .map(|&b| if (0x20..0x7f).contains(&b) { b as char } else { '.' })
        .collect()
}

/// Big-endian bytes of an offset, at least four.
fn offset_bytes(offset: u64) -> Vec<u8> {
    let be = offset.to_be_bytes();
    let skip = be.iter().take(4).take_while(|b| **b == 0).count();
    be[skip..].to_vec()
}

fn offset_text(offset: u64, style: OffsetStyle) -> String {
    match style {
        OffsetStyle::Std => format!("{offset:08x}"),
        OffsetStyle::Glyph => {
            let names: Vec<String> = offset_bytes(offset)
                .into_iter()
                .map(|b| byte_name(ByteValue(b)).text())
                .collect();
            names.join("-")
        }
    }
}

/// Formats one line group at a time, so callers can stream.
#[derive(Debug, Clone)]
pub struct Dumper {
    cfg: DumpConfig,
    style: StyleProfile,
    offset: u64,
}

impl Dumper {
    pub fn new(cfg: DumpConfig) -> Result<Dumper> {
        cfg.validate()?;
        Ok(Dumper {
            cfg,
            style: StyleProfile::default(),
            offset: 0,
        })
    }

    pub fn config(&self) -> &DumpConfig {
        &self.cfg
    }

    /// Appends the group for `chunk` (at most `bytes_per_line` bytes) and
    /// advances the offset.
    pub fn push_group(&mut self, chunk: &[u8], out: &mut String) {
        debug_assert!(chunk.len() <= self.cfg.bytes_per_line);
        if chunk.is_empty() {
            return;
        }
        match self.cfg.mode {
            DumpMode::Names => self.text_line(chunk, out, 5, |b| byte_name(ByteValue(b)).text()),
            DumpMode::Std => self.text_line(chunk, out, 3, |b| format!("{b:02x}")),
            DumpMode::Art => self.art_group(chunk, out),
        }
        self.offset += chunk.len() as u64;
    }

    fn text_line(&self, chunk: &[u8], out: &mut String, cell: usize, render: impl Fn(u8) -> String) {
        out.push_str(&offset_text(self.offset, self.cfg.offsets));
        out.push_str(": ");
        let cells: Vec<String> = chunk.iter().map(|b| render(*b)).collect();
        out.push_str(&cells.join(" "));
        if self.cfg.ascii_gutter {
            let missing = self.cfg.bytes_per_line - chunk.len();
            out.extend(core::iter::repeat_n(' ', missing * cell));
            let _ = write!(out, "  |{}|", ascii(chunk));
        }
        out.push('\n');
    }

    fn ligature(&self, b: u8) -> Raster {
        rasterize(&ligature_grid(ByteValue(b), &self.style), self.cfg.scale)
            .expect("scale validated")
    }

    fn art_group(&self, chunk: &[u8], out: &mut String) {
        let scale = self.cfg.scale;
        let glyphs: Vec<Raster> = chunk.iter().map(|b| self.ligature(*b)).collect();
        let data = join_text_art(&glyphs, 1);
        let prefix: Vec<String> = match self.cfg.offsets {
            OffsetStyle::Std => {
                let head = format!("{}: ", offset_text(self.offset, OffsetStyle::Std));
                let indent: String = core::iter::repeat_n(' ', head.len()).collect();
                (0..2 * scale + 1)
                    .map(|r| if r == 0 { head.clone() } else { indent.clone() })
                    .collect()
            }
            OffsetStyle::Glyph => {
                let offs: Vec<Raster> = offset_bytes(self.offset)
                    .into_iter()
                    .map(|b| self.ligature(b))
                    .collect();
                join_text_art(&offs, 1)
                    .into_iter()
                    .map(|mut row| {
                        row.push_str("  ");
                        row
                    })
                    .collect()
            }
        };
        let glyph_width = glyphs[0].width() + 1;
        for (r, (p, d)) in prefix.iter().zip(data.iter()).enumerate() {
            out.push_str(p);
            out.push_str(d);
            if r == 0 && self.cfg.ascii_gutter {
                let missing = self.cfg.bytes_per_line - chunk.len();
                out.extend(core::iter::repeat_n(' ', missing * glyph_width));
                let _ = write!(out, "  |{}|", ascii(chunk));
            }
            out.push('\n');
        }
        out.push('\n');
    }
}

/// Dumps a whole buffer.
pub fn dump_bytes(data: &[u8], cfg: &DumpConfig) -> Result<String> {
    let mut dumper = Dumper::new(*cfg)?;
    let mut out = String::new();
    for chunk in data.chunks(cfg.bytes_per_line) {
        dumper.push_group(chunk, &mut out);
    }
    Ok(out)
}

/// Recovers the bytes of a names-mode dump with standard offsets. An ASCII
/// gutter, if present, is ignored.
pub fn parse_names_dump(text: &str) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches('\n');
        if !body.is_empty() {
            let sep = body
                .find(": ")
                .ok_or_else(|| Error::parse(line_start, "missing offset separator"))?;
            let names_start = sep + 2;
            let names_end = body.find("  |").unwrap_or(body.len());
            let bytes = parse_byte_names(&body[names_start..names_end]).map_err(|e| match e {
                Error::Parse { offset, detail } => Error::Parse {
                    offset: offset + line_start + names_start,
                    detail,
                },
                other => other,
            })?;
            out.extend(bytes);
        }
        line_start += line.len();
    }
    Ok(out)
}
