//! Set relationships from membership data, drawn as linear and mosaic
//! diagrams.
//!
//! The pipeline is: parse input ([`ingest`]) into a [`SetSystem`], group it
//! into a [`ZoneSet`], pick a column order ([`order`]), lay it out
//! ([`linear`], [`mosaic`]) and render SVG ([`svg`]) with a [`Palette`] and
//! [`Style`]. [`quiz`] builds task questions whose answer keys come from the
//! same query engine.

pub mod color;
pub mod error;
pub mod ingest;
pub mod linear;
pub mod model;
pub mod mosaic;
pub mod order;
pub mod quiz;
pub mod rng;
pub mod style;
pub mod svg;

pub use color::{generate_palette, Palette, Rgb};
pub use error::{Error, Result};
pub use ingest::{
    load_zones, parse_membership_tsv, parse_snap_circles, parse_zone_json, to_zone_json,
    InputFormat,
};
pub use linear::{linear_layout, LinearLayout};
pub use model::{
    count_pairwise_relations, zones_from_membership, Difficulty, Query, Relation, RelationCounts,
    SetSystem, Targets, Zone, ZoneSet,
};
pub use mosaic::{mosaic_layout, MosaicLayout, MosaicMode};
pub use order::{
    order_exact, order_heuristic, order_zones, segment_count, OrderStrategy, ZoneOrder,
};
pub use quiz::{generate_question, generate_task_set, TaskKind, TaskQuestion, TaskSet};
pub use style::Style;
pub use svg::{render_linear, render_mosaic, SvgDocument};
