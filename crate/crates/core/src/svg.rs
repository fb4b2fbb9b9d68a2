//! Deterministic SVG 1.1 output: single glyphs and the full glyph sheet.
//!
//! Segments are emitted in the order A..G, high half before low half, and
//! every coordinate is printed with two decimals, so equal inputs give
//! byte-identical documents.

use alloc::format;
use alloc::string::String;
use core::fmt::Write;

use crate::digit::{ByteValue, Nibble, Segment, SegmentSet};
use crate::geometry::{digit_grid, ligature_grid, segment_endpoints, Half, Point, StyleProfile};
use crate::render::GlyphRef;

/// Pixels per box width.
pub const UNIT: f64 = 40.0;
/// Blank border around each glyph, in pixels.
pub const MARGIN: f64 = 10.0;

/// A complete SVG document.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SvgDoc(pub String);

impl SvgDoc {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl core::fmt::Display for SvgDoc {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        String::from("0.00")
    } else {
        s
    }
}

/// Canvas shared by every glyph drawn with one base style.
#[derive(Debug, Clone, Copy)]
struct Canvas {
    shear: f64,
    /// Units added left of x = 0 so negative shear stays on the canvas.
    shift_x: f64,
    /// Units reserved above and below the box for prolongation and bowing.
    pad_y: f64,
}

impl Canvas {
    fn new(style: &StyleProfile) -> Canvas {
        let shear = style.shear();
        Canvas {
            shear,
            shift_x: if shear < 0.0 { -2.0 * shear } else { 0.0 },
            pad_y: style.prolongation.abs() + style.curvature.abs(),
        }
    }

    fn size(&self, box_width: f64) -> (f64, f64) {
        (
            2.0 * MARGIN + (box_width + 2.0 * self.shear.abs()) * UNIT,
            2.0 * MARGIN + (2.0 + 2.0 * self.pad_y) * UNIT,
        )
    }
}

/// A point in box units, after style placement, in pixels.
#[derive(Debug, Clone, Copy)]
struct Pen<'a> {
    canvas: &'a Canvas,
    origin_x: f64,
    lift: f64,
}

impl Pen<'_> {
    fn at(&self, x: f64, y: f64) -> String {
        let px = MARGIN + (self.canvas.shift_x + self.origin_x + x + self.canvas.shear * y) * UNIT;
        let py = MARGIN + (self.canvas.pad_y + 2.0 - y - self.lift) * UNIT;
        format!("{} {}", num(px), num(py))
    }
}

/// Whether node `p` is an L-shaped corner of `s`: exactly one horizontal
/// and one vertical segment meet there. Returns the vertical's far end.
fn corner(s: SegmentSet, p: Point) -> Option<Point> {
    let mut horizontal = 0;
    let mut vertical = None;
    let mut count = 0;
    for seg in s.iter() {
        let (a, b) = segment_endpoints(seg);
        if a != p && b != p {
            continue;
        }
        count += 1;
        if seg.is_vertical() {
            vertical = Some(if a == p { b } else { a });
        } else {
            horizontal += 1;
        }
    }
    match (count, horizontal, vertical) {
        (2, 1, Some(far)) => Some(far),
        _ => None,
    }
}

fn segment_path(s: SegmentSet, seg: Segment, style: &StyleProfile, pen: &Pen<'_>) -> String {
    let (a, b) = segment_endpoints(seg);
    let r = style.corner_rounding;
    let (ax, ay, bx, by) = (a.x as f64, a.y as f64, b.x as f64, b.y as f64);
    let rounded = |p: Point| if r > 0.0 { corner(s, p) } else { None };
    // Corner arcs end on the vertical segment, `r` away from the corner.
    let toward = |p: Point, far: Point| -> (f64, f64) {
        let dir = if far.y > p.y { 1.0 } else { -1.0 };
        (p.x as f64, p.y as f64 + dir * r)
    };
    let mut d = String::new();
    if seg.is_vertical() {
        let start = if rounded(a).is_some() { (ax, ay + r) } else { (ax, ay) };
        let end = if rounded(b).is_some() { (bx, by - r) } else { (bx, by) };
        let _ = write!(d, "M {} L {}", pen.at(start.0, start.1), pen.at(end.0, end.1));
        return d;
    }
    let start = match rounded(a) {
        Some(far) => {
            let (qx, qy) = toward(a, far);
            let _ = write!(d, "M {} Q {} {}", pen.at(qx, qy), pen.at(ax, ay), pen.at(ax + r, ay));
            ax + r
        }
        None => {
            let _ = write!(d, "M {}", pen.at(ax, ay));
            ax
        }
    };
    let end = if rounded(b).is_some() { bx - r } else { bx };
    if style.curvature != 0.0 {
        let mid = (start + end) / 2.0;
        let _ = write!(
            d,
            " Q {} {}",
            pen.at(mid, ay + 2.0 * style.curvature),
            pen.at(end, by)
        );
    } else {
        let _ = write!(d, " L {}", pen.at(end, by));
    }
    if let Some(far) = rounded(b) {
        let (qx, qy) = toward(b, far);
        let _ = write!(d, " Q {} {}", pen.at(bx, by), pen.at(qx, qy));
    }
    d
}

fn write_paths(out: &mut String, s: SegmentSet, style: &StyleProfile, pen: &Pen<'_>) {
    for seg in s.iter() {
        let _ = writeln!(
            out,
            "<path data-seg=\"{}\" d=\"{}\"/>",
            seg.label(),
            segment_path(s, seg, style, pen)
        );
    }
}

fn stroke_attrs(style: &StyleProfile) -> String {
    format!(
        "fill=\"none\" stroke=\"#000\" stroke-width=\"{}\" stroke-linecap=\"{}\" stroke-linejoin=\"round\"",
        num(style.stroke_width * UNIT),
        if style.corner_rounding > 0.0 { "round" } else { "square" }
    )
}

fn write_digit_group(out: &mut String, n: Nibble, style: &StyleProfile, canvas: &Canvas, translate: Option<(f64, f64)>) {
    let m = digit_grid(n, style);
    let _ = write!(out, "<g class=\"glyph digit\" data-value=\"{}\"", n.hex_char());
    if let Some((x, y)) = translate {
        let _ = write!(out, " transform=\"translate({} {})\"", num(x), num(y));
    }
    let _ = writeln!(out, " {}>", stroke_attrs(style));
    let pen = Pen {
        canvas,
        origin_x: 0.0,
        lift: style.prolongation,
    };
    write_paths(out, m.segments(), style, &pen);
    out.push_str("</g>\n");
}

fn write_ligature_group(
    out: &mut String,
    b: ByteValue,
    style: &StyleProfile,
    canvas: &Canvas,
    extra_attrs: &str,
) {
    let g = ligature_grid(b, style);
    let _ = writeln!(
        out,
        "<g class=\"glyph ligature\" data-value=\"{:02X}\"{}>",
        b.value(),
        extra_attrs
    );
    for (half, cells, class) in [(Half::High, &g.high, "high"), (Half::Low, &g.low, "low")] {
        let digit = match half {
            Half::High => b.high(),
            Half::Low => b.low(),
        };
        let _ = writeln!(
            out,
            "<g class=\"half {class}\" data-digit=\"{}\" {}>",
            digit.hex_char(),
            stroke_attrs(&cells.style)
        );
        let pen = Pen {
            canvas,
            origin_x: g.half_x(half),
            lift: cells.style.prolongation,
        };
        write_paths(out, cells.segments(), &cells.style, &pen);
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n");
}

fn open_document(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(width),
        h = num(height)
    );
}

/// A standalone document holding one digit or ligature, drawn with the
/// style carried by the glyph.
pub fn to_svg<'a>(glyph: impl Into<GlyphRef<'a>>) -> SvgDoc {
    let mut out = String::new();
    match glyph.into() {
        GlyphRef::Digit(m) => {
            let canvas = Canvas::new(&m.style);
            let (w, h) = canvas.size(1.0);
            open_document(&mut out, w, h);
            let _ = writeln!(out, "<g class=\"glyph digit\" {}>", stroke_attrs(&m.style));
            let pen = Pen {
                canvas: &canvas,
                origin_x: 0.0,
                lift: m.style.prolongation,
            };
            write_paths(&mut out, m.segments(), &m.style, &pen);
            out.push_str("</g>\n");
        }
        GlyphRef::Ligature(g) => {
            // Both halves share the high half's canvas; positioned styles
            // differ only in sign of prolongation and in rounding.
            let canvas = Canvas::new(&g.high.style);
            let (w, h) = canvas.size(2.0 + g.gap);
            open_document(&mut out, w, h);
            let _ = writeln!(out, "<g class=\"glyph ligature\" data-value=\"{:02X}\">", g.byte.value());
            for (half, cells, class) in [(Half::High, &g.high, "high"), (Half::Low, &g.low, "low")] {
                let _ = writeln!(out, "<g class=\"half {class}\" {}>", stroke_attrs(&cells.style));
                let pen = Pen {
                    canvas: &canvas,
                    origin_x: g.half_x(half),
                    lift: cells.style.prolongation,
                };
                write_paths(&mut out, cells.segments(), &cells.style, &pen);
                out.push_str("</g>\n");
            }
            out.push_str("</g>\n");
        }
    }
    out.push_str("</svg>\n");
    SvgDoc(out)
}

/// The sixteen digits in a row, then the 256 ligatures in a 16×16 table
/// with the high digit selecting the row and the low digit the column.
pub fn glyph_sheet(style: &StyleProfile) -> SvgDoc {
    let canvas = Canvas::new(style);
    let (cell_w, cell_h) = canvas.size(2.0 + crate::geometry::LIGATURE_GAP);
    let mut out = String::new();
    open_document(&mut out, 16.0 * cell_w, 17.0 * cell_h);
    out.push_str("<g class=\"digits\">\n");
    for n in Nibble::all() {
        let x = n.value() as f64 * cell_w;
        write_digit_group(&mut out, n, style, &canvas, Some((x, 0.0)));
    }
    out.push_str("</g>\n<g class=\"ligatures\">\n");
    for b in ByteValue::all() {
        let (row, col) = (b.high().value(), b.low().value());
        let attrs = format!(
            " data-row=\"{row}\" data-col=\"{col}\" transform=\"translate({} {})\"",
            num(col as f64 * cell_w),
            num((row as f64 + 1.0) * cell_h)
        );
        write_ligature_group(&mut out, b, style, &canvas, &attrs);
    }
    out.push_str("</g>\n</svg>\n");
    SvgDoc(out)
}

/// Segment sets named by the `data-seg` paths of each top-level glyph or
/// half group, in document order. Used to check that styling leaves the
/// topology alone.
pub fn segments_in_document(doc: &SvgDoc) -> alloc::vec::Vec<SegmentSet> {
    let mut sets = alloc::vec::Vec::new();
    let mut current: Option<SegmentSet> = None;
    for line in doc.0.lines() {
        if line.starts_with("<g class=\"glyph digit\"") || line.starts_with("<g class=\"half") {
            current = Some(SegmentSet::EMPTY);
        } else if let Some(rest) = line.strip_prefix("<path data-seg=\"") {
            let label = rest.chars().next().and_then(Segment::from_label);
            if let (Some(set), Some(seg)) = (current.as_mut(), label) {
                *set = set.with(seg);
            }
        } else if line == "</g>" {
            if let Some(set) = current.take() {
                sets.push(set);
            }
        }
    }
    sets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::encode_nibble;
    use crate::geometry::digit_grid;
    use alloc::vec;

    fn n(v: u8) -> Nibble {
        Nibble::new(v).unwrap()
    }

    fn count(doc: &SvgDoc, needle: &str) -> usize {
        doc.as_str().matches(needle).count()
    }

    #[test]
    fn eight_is_four_elements() {
        let doc = to_svg(&digit_grid(n(8), &StyleProfile::default()));
        assert_eq!(count(&doc, "<path data-seg="), 4);
        assert_eq!(segments_in_document(&doc), vec![SegmentSet::TOP_SQUARE]);
        assert!(doc.as_str().starts_with("<?xml"));
        assert!(doc.as_str().ends_with("</svg>\n"));
    }

    #[test]
    fn digit_paths_unstyled() {
        let doc = to_svg(&digit_grid(n(1), &StyleProfile::default()));
        let paths: alloc::vec::Vec<&str> = doc
            .as_str()
            .lines()
            .filter(|l| l.starts_with("<path"))
            .collect();
        assert_eq!(
            paths,
            [
                "<path data-seg=\"B\" d=\"M 50.00 50.00 L 50.00 10.00\"/>",
                "<path data-seg=\"C\" d=\"M 50.00 90.00 L 50.00 50.00\"/>",
                "<path data-seg=\"D\" d=\"M 10.00 90.00 L 50.00 90.00\"/>",
            ]
        );
    }

    #[test]
    fn deterministic() {
        let style = StyleProfile {
            corner_rounding: 0.2,
            curvature: 0.1,
            slope: 8.0,
            prolongation: 0.15,
            ..StyleProfile::default()
        };
        let g = ligature_grid(ByteValue(0x3C), &style);
        assert_eq!(to_svg(&g), to_svg(&g));
        assert_eq!(glyph_sheet(&style), glyph_sheet(&style));
    }

    #[test]
    fn ligature_ef_elements() {
        let doc = to_svg(&ligature_grid(ByteValue(0xEF), &StyleProfile::default()));
        assert_eq!(count(&doc, "<path data-seg="), 9);
        assert_eq!(
            segments_in_document(&doc),
            vec![encode_nibble(n(14)), encode_nibble(n(15))]
        );
    }

    #[test]
    fn rounded_corners_stay_inside_segment_elements() {
        let style = StyleProfile {
            corner_rounding: 0.25,
            ..StyleProfile::default()
        };
        let doc = to_svg(&digit_grid(n(0), &style));
        assert_eq!(count(&doc, "<path data-seg="), 4);
        // two bars each carry two arcs
        assert_eq!(count(&doc, " Q "), 4);
        assert_eq!(segments_in_document(&doc), vec![SegmentSet::BOTTOM_SQUARE]);
    }

    #[test]
    fn sheet_layout() {
        let doc = glyph_sheet(&StyleProfile::default());
        assert_eq!(count(&doc, "<g class=\"glyph "), 272);
        assert_eq!(count(&doc, "<g class=\"glyph digit\""), 16);
        assert!(doc
            .as_str()
            .contains("<g class=\"glyph ligature\" data-value=\"89\" data-row=\"8\" data-col=\"9\""));
        let sets = segments_in_document(&doc);
        assert_eq!(sets.len(), 16 + 512);
        assert_eq!(sets[16 + 2 * 0x89], encode_nibble(n(8)));
        assert_eq!(sets[16 + 2 * 0x89 + 1], encode_nibble(n(9)));
    }

    #[test]
    fn styled_topology_unchanged() {
        let style = StyleProfile {
            corner_rounding: 0.3,
            curvature: -0.2,
            slope: -12.0,
            prolongation: 0.2,
            stroke_width: 0.2,
        };
        for d in Nibble::all() {
            let doc = to_svg(&digit_grid(d, &style));
            assert_eq!(segments_in_document(&doc), vec![encode_nibble(d)]);
        }
    }
}
