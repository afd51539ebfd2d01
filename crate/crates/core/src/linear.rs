//! Geometry of a linear diagram: one row per set, one column per zone.

use serde::Serialize;

use crate::error::Result;
use crate::model::ZoneSet;
use crate::order::ZoneOrder;

/// Half-open column interval `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
}

impl Run {
    pub fn contains(&self, column: usize) -> bool {
        self.start <= column && column < self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetRuns {
    pub set: String,
    pub runs: Vec<Run>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearLayout {
    /// Set labels top to bottom; also the legend order.
    pub legend: Vec<String>,
    /// Zone index shown in each column.
    pub order: ZoneOrder,
    /// Signature labels of each column's zone.
    pub columns: Vec<Vec<String>>,
    /// One entry per set, in legend order.
    pub runs: Vec<SetRuns>,
    /// Column boundaries where some run starts or ends, always including
    /// `0` and `columns.len()`.
    pub guides: Vec<usize>,
}

impl LinearLayout {
    pub fn segment_count(&self) -> usize {
        self.runs.iter().map(|r| r.runs.len()).sum()
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("layout serializes");
        value["diagram"] = "linear".into();
        serde_json::to_string_pretty(&value).expect("layout serializes")
    }
}

pub fn linear_layout(zones: &ZoneSet, order: &ZoneOrder) -> Result<LinearLayout> {
    order.check(zones)?;
    let zs = zones.zones();
    let columns: Vec<&crate::model::Zone> = order.as_slice().iter().map(|&z| &zs[z]).collect();
    let n = columns.len();

    let mut boundary = vec![false; n + 1];
    boundary[0] = true;
    boundary[n] = true;

    let runs = zones
        .labels()
        .iter()
        .enumerate()
        .map(|(s, label)| {
            let mut runs = Vec::new();
            let mut open: Option<usize> = None;
            for (i, zone) in columns.iter().enumerate() {
                match (zone.contains(s), open) {
                    (true, None) => open = Some(i),
                    (false, Some(start)) => {
                        runs.push(Run { start, end: i });
                        open = None;
                    }
                    _ => {}
                }
            }
            if let Some(start) = open {
                runs.push(Run { start, end: n });
            }
            for r in &runs {
                boundary[r.start] = true;
                boundary[r.end] = true;
            }
            SetRuns {
                set: label.clone(),
                runs,
            }
        })
        .collect();

    Ok(LinearLayout {
        legend: zones.labels().to_vec(),
        order: order.clone(),
        columns: columns
            .iter()
            .map(|z| {
                zones
                    .signature_labels(z)
                    .into_iter()
                    .map(String::from)
                    .collect()
            })
            .collect(),
        runs,
        guides: (0..=n).filter(|&b| boundary[b]).collect(),
    })
}
