//! Deterministic SVG 1.1 output for linear and mosaic layouts.
//!
//! Elements are always emitted in the same order: background, guides,
//! shapes, borders, legend swatches, legend labels. Every number is printed
//! with two decimals.

use std::fmt::{self, Write as _};

use crate::color::{Palette, Rgb};
use crate::error::Result;
use crate::linear::LinearLayout;
use crate::mosaic::MosaicLayout;
use crate::style::Style;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SvgDocument(String);

impl SvgDocument {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for SvgDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Fixed two-decimal formatting; `-0.00` is normalised to `0.00`.
struct Num(f64);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rounded = (self.0 * 100.0).round() / 100.0;
        let rounded = if rounded == 0.0 { 0.0 } else { rounded };
        write!(f, "{rounded:.2}")
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            // Control characters other than tab/newline are not legal XML 1.0.
            c if (c as u32) < 0x20 && c != '\t' && c != '\n' && c != '\r' => out.push('\u{fffd}'),
            c => out.push(c),
        }
    }
    out
}

struct Writer {
    out: String,
}

impl Writer {
    fn open(style: &Style, kind: &str) -> Self {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" class=\"{kind}\" \
             width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
            w = Num(style.width),
            h = Num(style.height),
        );
        let _ = writeln!(
            out,
            "<rect class=\"background\" x=\"0.00\" y=\"0.00\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
            Num(style.width),
            Num(style.height),
            style.background
        );
        Self { out }
    }

    #[allow(clippy::too_many_arguments)]
    fn line(&mut self, class: &str, x1: f64, y1: f64, x2: f64, y2: f64, stroke: Rgb, width: f64) {
        let _ = writeln!(
            self.out,
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"{}\" stroke-linecap=\"butt\"/>",
            Num(x1),
            Num(y1),
            Num(x2),
            Num(y2),
            Num(width)
        );
    }

    fn rect(&mut self, class: &str, x0: f64, y0: f64, x1: f64, y1: f64, paint: &str) {
        let (x0, y0, x1, y1) = (round2(x0), round2(y0), round2(x1), round2(y1));
        let _ = writeln!(
            self.out,
            "<rect class=\"{class}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"{paint}/>",
            Num(x0),
            Num(y0),
            Num(x1 - x0),
            Num(y1 - y0)
        );
    }

    fn raw(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn finish(mut self) -> SvgDocument {
        self.out.push_str("</svg>\n");
        SvgDocument(self.out)
    }
}

fn round2(v: f64) -> f64 {
    (v * 100.0).round() / 100.0
}

/// Swatch and label per legend entry, one per row of the plot area.
fn legend(w: &mut Writer, labels: &[String], colors: &[Rgb], style: &Style) {
    let pitch = style.row_pitch(labels.len());
    let size = style.font_size.min(pitch * 0.8);
    w.raw("<g class=\"legend\">");
    for (i, color) in colors.iter().enumerate() {
        let cy = style.plot_top() + (i as f64 + 0.5) * pitch;
        w.rect(
            "swatch",
            style.margin,
            cy - size / 2.0,
            style.margin + size,
            cy + size / 2.0,
            &format!(" fill=\"{color}\""),
        );
    }
    w.raw("</g>");
    w.raw(&format!(
        "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"{}\" fill=\"#000000\">",
        Num(style.font_size)
    ));
    for (i, label) in labels.iter().enumerate() {
        let cy = style.plot_top() + (i as f64 + 0.5) * pitch;
        w.raw(&format!(
            "<text x=\"{}\" y=\"{}\" dominant-baseline=\"middle\">{}</text>",
            Num(style.margin + size + 4.0),
            Num(cy),
            escape(label)
        ));
    }
    w.raw("</g>");
}

fn colors_for(labels: &[String], palette: &Palette) -> Result<Vec<Rgb>> {
    labels.iter().map(|l| palette.color_of(l)).collect()
}

/// One thin horizontal line per run, vertical guides at every guide boundary.
pub fn render_linear(
    layout: &LinearLayout,
    palette: &Palette,
    style: &Style,
) -> Result<SvgDocument> {
    let rows = layout.legend.len();
    style.validate_rows(rows)?;
    let colors = colors_for(&layout.legend, palette)?;

    let columns = layout.columns.len().max(1) as f64;
    let left = style.plot_left();
    let top = style.plot_top();
    let bottom = top + style.plot_height();
    let col_width = style.plot_width() / columns;
    let pitch = style.row_pitch(rows);

    let mut w = Writer::open(style, "linear-diagram");
    w.raw("<g class=\"guides\">");
    for &g in &layout.guides {
        let x = left + g as f64 * col_width;
        w.line(
            "guide",
            x,
            top,
            x,
            bottom,
            style.guide_color,
            style.guide_width,
        );
    }
    w.raw("</g>");

    w.raw("<g class=\"segments\">");
    for (row, (set_runs, &color)) in layout.runs.iter().zip(&colors).enumerate() {
        let y = top + (row as f64 + 0.5) * pitch;
        for run in &set_runs.runs {
            w.line(
                "segment",
                left + run.start as f64 * col_width,
                y,
                left + run.end as f64 * col_width,
                y,
                color,
                style.line_thickness,
            );
        }
    }
    w.raw("</g>");

    legend(&mut w, &layout.legend, &colors, style);
    Ok(w.finish())
}

/// One filled rectangle per tile, then tile borders drawn on top.
pub fn render_mosaic(
    layout: &MosaicLayout,
    palette: &Palette,
    style: &Style,
) -> Result<SvgDocument> {
    style.validate()?;
    let colors = colors_for(&layout.legend, palette)?;
    let color_of = |set: &str| {
        let i = layout
            .legend
            .iter()
            .position(|l| l == set)
            .expect("tile set is in legend");
        colors[i]
    };

    let left = style.plot_left();
    let top = style.plot_top();
    let width = style.plot_width();
    let height = style.plot_height();
    // Neighbouring tiles share edge values exactly, so nothing shows through.
    let corners = |t: &crate::mosaic::Tile| {
        (
            left + layout.column_edges[t.column] * width,
            top + t.y * height,
            left + layout.column_edges[t.column + 1] * width,
            top + (t.y + t.height) * height,
        )
    };

    let mut w = Writer::open(style, "mosaic-diagram");
    w.raw("<g class=\"tiles\">");
    for tile in &layout.tiles {
        let (x0, y0, x1, y1) = corners(tile);
        w.rect(
            "tile",
            x0,
            y0,
            x1,
            y1,
            &format!(" fill=\"{}\"", color_of(&tile.set)),
        );
    }
    w.raw("</g>");

    if style.border_width > 0.0 {
        w.raw(&format!(
            "<g class=\"borders\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\">",
            style.border_color(),
            Num(style.border_width)
        ));
        for tile in &layout.tiles {
            let (x0, y0, x1, y1) = corners(tile);
            w.rect("border", x0, y0, x1, y1, "");
        }
        w.raw("</g>");
    }

    legend(&mut w, &layout.legend, &colors, style);
    Ok(w.finish())
}
