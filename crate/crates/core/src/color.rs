//! Categorical palettes in CIELUV and the sRGB conversions behind them.
//!
//! Generated colours sit at equally spaced hue angles on the L* = 60 plane,
//! each pushed out to the largest chroma sRGB can display at that hue. At
//! most ten hues are handed out.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// Hard cap on distinguishable hues.
pub const MAX_COLORS: usize = 10;
/// Default minimum pairwise CIELUV distance.
pub const DEFAULT_SEPARATION: f64 = 25.0;
/// Lightness of the generated hue ring.
pub const RING_LIGHTNESS: f64 = 60.0;

// D65 reference white.
const WHITE_X: f64 = 0.95047;
const WHITE_Y: f64 = 1.0;
const WHITE_Z: f64 = 1.08883;
const KAPPA: f64 = 24389.0 / 27.0;
const EPSILON: f64 = 216.0 / 24389.0;

/// 8-bit sRGB colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rgb(pub [u8; 3]);

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [r, g, b] = self.0;
        write!(f, "#{r:02x}{g:02x}{b:02x}")
    }
}

impl FromStr for Rgb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadColor(s.to_string());
        let hex = s.trim().strip_prefix('#').unwrap_or(s.trim());
        if hex.len() != 6 || !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(bad());
        }
        let channel = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| bad());
        Ok(Rgb([channel(0)?, channel(2)?, channel(4)?]))
    }
}

impl Serialize for Rgb {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rgb {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of `#rrggbb` values.
pub fn parse_color_list(list: &str) -> Result<Vec<Rgb>> {
    list.split(',').map(str::parse).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Luv {
    pub l: f64,
    pub u: f64,
    pub v: f64,
}

impl Luv {
    pub fn from_polar(l: f64, chroma: f64, hue_degrees: f64) -> Self {
        let h = hue_degrees.to_radians();
        Self {
            l,
            u: chroma * h.cos(),
            v: chroma * h.sin(),
        }
    }

    pub fn distance(&self, other: &Luv) -> f64 {
        ((self.l - other.l).powi(2) + (self.u - other.u).powi(2) + (self.v - other.v).powi(2))
            .sqrt()
    }
}

fn white_uv() -> (f64, f64) {
    let d = WHITE_X + 15.0 * WHITE_Y + 3.0 * WHITE_Z;
    (4.0 * WHITE_X / d, 9.0 * WHITE_Y / d)
}

fn decode_channel(c: u8) -> f64 {
    let c = f64::from(c) / 255.0;
    if c <= 0.04045 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

fn encode_channel(c: f64) -> f64 {
    if c <= 0.0031308 {
        12.92 * c
    } else {
        1.055 * c.powf(1.0 / 2.4) - 0.055
    }
}

fn to_byte(c: f64) -> u8 {
    (encode_channel(c.clamp(0.0, 1.0)) * 255.0).round() as u8
}

/// CIELUV to linear-light sRGB; channels may fall outside [0, 1].
fn luv_to_linear(luv: Luv) -> [f64; 3] {
    if luv.l <= 0.0 {
        return [0.0; 3];
    }
    let (un, vn) = white_uv();
    let y = if luv.l > KAPPA * EPSILON {
        ((luv.l + 16.0) / 116.0).powi(3)
    } else {
        luv.l / KAPPA
    } * WHITE_Y;
    let up = luv.u / (13.0 * luv.l) + un;
    let vp = luv.v / (13.0 * luv.l) + vn;
    let x = y * 9.0 * up / (4.0 * vp);
    let z = y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp);
    [
        3.2404542 * x - 1.5371385 * y - 0.4985314 * z,
        -0.9692660 * x + 1.8760108 * y + 0.0415560 * z,
        0.0556434 * x - 0.2040259 * y + 1.0572252 * z,
    ]
}

pub fn luv_to_rgb(luv: Luv) -> Rgb {
    Rgb(luv_to_linear(luv).map(to_byte))
}

pub fn rgb_to_luv(rgb: Rgb) -> Luv {
    let [r, g, b] = rgb.0.map(decode_channel);
    let x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
    let y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
    let z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;
    let yr = y / WHITE_Y;
    let l = if yr > EPSILON {
        116.0 * yr.cbrt() - 16.0
    } else {
        KAPPA * yr
    };
    let d = x + 15.0 * y + 3.0 * z;
    if d == 0.0 {
        return Luv { l, u: 0.0, v: 0.0 };
    }
    let (un, vn) = white_uv();
    Luv {
        l,
        u: 13.0 * l * (4.0 * x / d - un),
        v: 13.0 * l * (9.0 * y / d - vn),
    }
}

/// Neutral grey with the given CIE lightness.
pub fn grey(lightness: f64) -> Rgb {
    luv_to_rgb(Luv {
        l: lightness.clamp(0.0, 100.0),
        u: 0.0,
        v: 0.0,
    })
}

fn in_gamut(luv: Luv) -> bool {
    luv_to_linear(luv).iter().all(|c| (0.0..=1.0).contains(c))
}

/// Largest chroma at this lightness and hue that still maps inside sRGB.
pub fn max_chroma(lightness: f64, hue_degrees: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, 250.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if in_gamut(Luv::from_polar(lightness, mid, hue_degrees)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Generates `n` colours `360/n` degrees apart starting at hue 0.
///
/// Fails if `n` is outside `1..=10` or if the rounded colours cannot keep
/// every pair at least `threshold` apart in CIELUV.
pub fn generate_palette(n: usize, threshold: f64) -> Result<Vec<Rgb>> {
    if n == 0 {
        return Err(Error::NoColors);
    }
    if n > MAX_COLORS {
        return Err(Error::TooManyColors { requested: n });
    }
    let colors: Vec<Rgb> = (0..n)
        .map(|k| {
            let hue = 360.0 * k as f64 / n as f64;
            let chroma = max_chroma(RING_LIGHTNESS, hue);
            luv_to_rgb(Luv::from_polar(RING_LIGHTNESS, chroma, hue))
        })
        .collect();
    check_separation(&colors, threshold)?;
    Ok(colors)
}

/// Smallest pairwise CIELUV distance, or infinity for fewer than two colours.
pub fn min_separation(colors: &[Rgb]) -> f64 {
    let luv: Vec<Luv> = colors.iter().map(|&c| rgb_to_luv(c)).collect();
    let mut min = f64::INFINITY;
    for (i, a) in luv.iter().enumerate() {
        for b in &luv[i + 1..] {
            min = min.min(a.distance(b));
        }
    }
    min
}

fn check_separation(colors: &[Rgb], threshold: f64) -> Result<()> {
    let achievable = min_separation(colors);
    if achievable < threshold {
        return Err(Error::SeparationUnattainable {
            count: colors.len(),
            threshold,
            achievable,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaletteEntry {
    pub set: String,
    pub rgb: Rgb,
    pub luv: Luv,
}

/// Colour assignment for the sets of one diagram.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Palette {
    entries: Vec<PaletteEntry>,
}

impl Palette {
    /// Generated colours, assigned to `labels` in order.
    pub fn generate(labels: &[String], threshold: f64) -> Result<Self> {
        let colors = generate_palette(labels.len(), threshold)?;
        Ok(Self::assign(labels, &colors))
    }

    /// User-supplied colours. `threshold` of `None` skips the distance check;
    /// the ten-colour cap always applies. Extra colours are ignored.
    pub fn from_colors(labels: &[String], colors: &[Rgb], threshold: Option<f64>) -> Result<Self> {
        if colors.len() > MAX_COLORS {
            return Err(Error::TooManyColors {
                requested: colors.len(),
            });
        }
        if labels.len() > MAX_COLORS {
            return Err(Error::TooManyColors {
                requested: labels.len(),
            });
        }
        if let Some(missing) = labels.get(colors.len()) {
            return Err(Error::MissingColor(missing.clone()));
        }
        let colors = &colors[..labels.len()];
        if let Some(threshold) = threshold {
            check_separation(colors, threshold)?;
        }
        Ok(Self::assign(labels, colors))
    }

    fn assign(labels: &[String], colors: &[Rgb]) -> Self {
        Self {
            entries: labels
                .iter()
                .zip(colors)
                .map(|(set, &rgb)| PaletteEntry {
                    set: set.clone(),
                    rgb,
                    luv: rgb_to_luv(rgb),
                })
                .collect(),
        }
    }

    pub fn entries(&self) -> &[PaletteEntry] {
        &self.entries
    }

    pub fn color_of(&self, set: &str) -> Result<Rgb> {
        self.entries
            .iter()
            .find(|e| e.set == set)
            .map(|e| e.rgb)
            .ok_or_else(|| Error::MissingColor(set.to_string()))
    }
}
