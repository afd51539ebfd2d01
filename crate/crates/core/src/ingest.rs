//! Readers for the three input formats.
//!
//! * `tsv`: one `element<TAB>set_label` record per line; `#` comments and
//!   blank lines are skipped.
//! * `snap-circles`: one `circle_name<TAB>id<TAB>id...` line per set, as in
//!   the SNAP ego-network `.circles` files.
//! * `zone-json`: an abstract diagram given directly as zones.
//!
//! All readers accept LF or CRLF line endings and reject invalid UTF-8.

use std::collections::HashSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{SetSystem, ZoneSet};

/// Input format, always chosen explicitly by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Tsv,
    SnapCircles,
    ZoneJson,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Self::Tsv),
            "snap-circles" => Ok(Self::SnapCircles),
            "zone-json" => Ok(Self::ZoneJson),
            other => Err(format!(
                "unknown format {other:?} (expected tsv, snap-circles or zone-json)"
            )),
        }
    }
}

/// Parses `bytes` in the given format straight to zones.
pub fn load_zones(format: InputFormat, bytes: &[u8]) -> Result<ZoneSet> {
    match format {
        InputFormat::Tsv => parse_membership_tsv(bytes)?.zones(),
        InputFormat::SnapCircles => parse_snap_circles(bytes)?.zones(),
        InputFormat::ZoneJson => parse_zone_json(bytes),
    }
}

fn decode(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let line = 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        Error::Parse {
            line,
            message: "invalid UTF-8".into(),
        }
    })
}

/// Numbered lines with any trailing `\r` removed.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_membership_tsv(bytes: &[u8]) -> Result<SetSystem> {
    let text = decode(bytes)?;
    let mut labels: Vec<&str> = Vec::new();
    let mut seen = HashSet::new();
    let mut memberships = Vec::new();

    for (n, line) in lines(text) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [element, label] = fields[..] else {
            return Err(parse_error(n, "expected 2 tab-separated fields"));
        };
        if element.is_empty() {
            return Err(parse_error(n, "empty element field"));
        }
        if label.is_empty() {
            return Err(parse_error(n, "empty set label field"));
        }
        if seen.insert(label) {
            labels.push(label);
        }
        memberships.push((element, label));
    }
    SetSystem::new(labels, memberships)
}

pub fn parse_snap_circles(bytes: &[u8]) -> Result<SetSystem> {
    let text = decode(bytes)?;
    let mut labels: Vec<&str> = Vec::new();
    let mut seen = HashSet::new();
    let mut memberships = Vec::new();

    for (n, line) in lines(text) {
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let name = fields.next().unwrap_or_default();
        let ids: Vec<&str> = fields.collect();
        if ids.is_empty() {
            return Err(parse_error(n, "expected a circle name and at least one id"));
        }
        if name.is_empty() {
            return Err(parse_error(n, "empty circle name"));
        }
        if ids.iter().any(|id| id.is_empty()) {
            return Err(parse_error(n, "empty member id"));
        }
        if !seen.insert(name) {
            return Err(parse_error(n, format!("duplicate circle name {name:?}")));
        }
        labels.push(name);
        memberships.extend(ids.into_iter().map(|id| (id, name)));
    }
    SetSystem::new(labels, memberships)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZoneJson {
    sets: Vec<String>,
    zones: Vec<ZoneEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZoneEntry {
    members: Vec<String>,
    #[serde(default = "one")]
    cardinality: u64,
}

fn one() -> u64 {
    1
}

pub fn parse_zone_json(bytes: &[u8]) -> Result<ZoneSet> {
    let text = decode(bytes)?;
    let doc: ZoneJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    ZoneSet::from_named(
        doc.sets,
        doc.zones.into_iter().map(|z| (z.members, z.cardinality)),
    )
}

/// Serializes to the `zone-json` schema; [`parse_zone_json`] reads it back
/// to an identical [`ZoneSet`].
pub fn to_zone_json(zones: &ZoneSet) -> String {
    let doc = ZoneJson {
        sets: zones.labels().to_vec(),
        zones: zones
            .zones()
            .iter()
            .map(|z| ZoneEntry {
                members: zones
                    .signature_labels(z)
                    .into_iter()
                    .map(String::from)
                    .collect(),
                cardinality: z.cardinality(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("zone json serializes")
}
