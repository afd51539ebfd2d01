use serde::{Deserialize, Serialize};

use crate::color::{grey, Rgb};
use crate::error::{Error, Result};

/// Rendering parameters, all in pixels unless noted.
///
/// Deserializes from a JSON object in which every field is optional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Style {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    /// Width of the legend column on the left.
    pub legend_width: f64,
    /// Stroke width of linear-diagram segments.
    pub line_thickness: f64,
    pub guide_color: Rgb,
    pub guide_width: f64,
    /// Tile border width in mosaics; 0 disables borders.
    pub border_width: f64,
    /// CIE L* of the tile border grey, 0 (black) to 100 (white).
    pub border_luminance: f64,
    pub font_size: f64,
    pub background: Rgb,
}

impl Default for Style {
    fn default() -> Self {
        Self {
            width: 600.0,
            height: 300.0,
            margin: 10.0,
            legend_width: 140.0,
            line_thickness: 2.0,
            guide_color: Rgb([0xc8, 0xc8, 0xc8]),
            guide_width: 1.0,
            border_width: 1.0,
            border_luminance: 100.0,
            font_size: 12.0,
            background: Rgb([0xff, 0xff, 0xff]),
        }
    }
}

impl Style {
    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let style: Style =
            serde_json::from_slice(bytes).map_err(|e| Error::InvalidStyle(e.to_string()))?;
        style.validate()?;
        Ok(style)
    }

    pub fn border_color(&self) -> Rgb {
        grey(self.border_luminance)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("width", self.width),
            ("height", self.height),
            ("line_thickness", self.line_thickness),
            ("font_size", self.font_size),
        ];
        for (name, value) in positive {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidStyle(format!("{name} must be positive")));
            }
        }
        let non_negative = [
            ("margin", self.margin),
            ("legend_width", self.legend_width),
            ("guide_width", self.guide_width),
            ("border_width", self.border_width),
        ];
        for (name, value) in non_negative {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidStyle(format!("{name} must not be negative")));
            }
        }
        if !(0.0..=100.0).contains(&self.border_luminance) {
            return Err(Error::InvalidStyle(
                "border_luminance must lie in 0..=100".into(),
            ));
        }
        if self.plot_width() <= 0.0 || self.plot_height() <= 0.0 {
            return Err(Error::InvalidStyle(
                "margins and legend leave no room for the diagram".into(),
            ));
        }
        Ok(())
    }

    /// Lines must stay thinner than a third of the row pitch.
    pub fn validate_rows(&self, rows: usize) -> Result<()> {
        self.validate()?;
        let pitch = self.row_pitch(rows);
        if self.line_thickness >= pitch / 3.0 {
            return Err(Error::InvalidStyle(format!(
                "line thickness {} is not thin for a row pitch of {pitch:.2}",
                self.line_thickness
            )));
        }
        Ok(())
    }

    pub fn plot_left(&self) -> f64 {
        self.margin + self.legend_width
    }

    pub fn plot_top(&self) -> f64 {
        self.margin
    }

    pub fn plot_width(&self) -> f64 {
        self.width - self.plot_left() - self.margin
    }

    pub fn plot_height(&self) -> f64 {
        self.height - 2.0 * self.margin
    }

    pub fn row_pitch(&self, rows: usize) -> f64 {
        self.plot_height() / rows.max(1) as f64
    }
}
