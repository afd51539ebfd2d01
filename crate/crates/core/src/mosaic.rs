//! Space-filling mosaic geometry in unit-square coordinates.
//!
//! Each column is one zone. Its full height is shared equally by the sets
//! present in that zone, stacked top to bottom in legend order, so there is
//! never any background inside the diagram.

use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;
use crate::model::ZoneSet;
use crate::order::ZoneOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MosaicMode {
    /// Every column has width `1/N`.
    Equal,
    /// Column width is the zone's share of all elements.
    Cardinality,
}

impl FromStr for MosaicMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "equal" => Ok(Self::Equal),
            "cardinality" => Ok(Self::Cardinality),
            other => Err(format!(
                "unknown mosaic mode {other:?} (expected equal or cardinality)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tile {
    pub column: usize,
    pub set: String,
    pub x: f64,
    pub width: f64,
    pub y: f64,
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MosaicLayout {
    pub mode: MosaicMode,
    pub legend: Vec<String>,
    pub order: ZoneOrder,
    /// `N + 1` sorted x-boundaries from 0 to 1.
    pub column_edges: Vec<f64>,
    /// Column-major; within a column, top to bottom.
    pub tiles: Vec<Tile>,
}

impl MosaicLayout {
    pub fn column_count(&self) -> usize {
        self.column_edges.len() - 1
    }

    pub fn column_tiles(&self, column: usize) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(move |t| t.column == column)
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("layout serializes");
        value["diagram"] = "mosaic".into();
        serde_json::to_string_pretty(&value).expect("layout serializes")
    }
}

pub fn mosaic_layout(zones: &ZoneSet, order: &ZoneOrder, mode: MosaicMode) -> Result<MosaicLayout> {
    order.check(zones)?;
    let zs = zones.zones();
    let n = order.len();

    let (column_edges, widths): (Vec<f64>, Vec<f64>) = match mode {
        MosaicMode::Equal => (
            (0..=n).map(|i| i as f64 / n as f64).collect(),
            vec![1.0 / n as f64; n],
        ),
        MosaicMode::Cardinality => {
            let total = zones.element_count() as f64;
            let mut prefix = 0u64;
            let mut edges = vec![0.0];
            let mut widths = Vec::with_capacity(n);
            for &z in order.as_slice() {
                prefix += zs[z].cardinality();
                edges.push(prefix as f64 / total);
                widths.push(zs[z].cardinality() as f64 / total);
            }
            (edges, widths)
        }
    };

    let mut tiles = Vec::new();
    for (column, &z) in order.as_slice().iter().enumerate() {
        let present = zs[z].signature();
        let share = present.len() as f64;
        // Signatures are sorted by label index, which is legend order.
        for (k, &s) in present.iter().enumerate() {
            tiles.push(Tile {
                column,
                set: zones.labels()[s].clone(),
                x: column_edges[column],
                width: widths[column],
                y: k as f64 / share,
                height: 1.0 / share,
            });
        }
    }

    Ok(MosaicLayout {
        mode,
        legend: zones.labels().to_vec(),
        order: order.clone(),
        column_edges,
        tiles,
    })
}
