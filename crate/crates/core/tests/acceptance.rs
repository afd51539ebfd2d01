//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p setmosaic --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{
    brute_force_min_segments, colour_oracle, interests_system, random_system, random_zone_set, rng,
    runs_oracle, zone_map, Members, INTERESTS_TSV,
};
use setmosaic::color::{generate_palette, Palette, DEFAULT_SEPARATION};
use setmosaic::linear::linear_layout;
use setmosaic::mosaic::{mosaic_layout, MosaicMode};
use setmosaic::order::{order_exact, order_heuristic, segment_count};
use setmosaic::quiz::generate_task_set;
use setmosaic::svg::{render_linear, render_mosaic};
use setmosaic::{parse_membership_tsv, Error, Query, Relation, SetSystem, Style, ZoneSet};

const HEIGHT_TOLERANCE: f64 = 1e-9;
const AREA_TOLERANCE: f64 = 1e-9;
const WIDTH_TOLERANCE: f64 = 1e-9;
const MIN_SEPARATION: f64 = 25.0;
const EQUALITY_RATE: f64 = 0.90;

fn report(id: u8, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS AC{id} {name}: {detail}"),
        Err(why) => {
            println!("FAIL AC{id} {name}: {why}");
            panic!("AC{id} {name} failed: {why}");
        }
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

/// The 100 instances shared by criteria 4 and 5.
fn query_instances() -> Vec<SetSystem> {
    let mut r = rng(0x5e7_0004);
    (0..100).map(|_| random_system(&mut r, 12, 200)).collect()
}

#[test]
fn ac1_interests_scenario() {
    let outcome = (|| {
        let start = Instant::now();
        let system = parse_membership_tsv(INTERESTS_TSV.as_bytes()).map_err(|e| e.to_string())?;
        let zones = system.zones().map_err(|e| e.to_string())?;

        let named: Vec<Vec<&str>> = zones
            .zones()
            .iter()
            .map(|z| {
                let mut v = zones.signature_labels(z);
                v.sort();
                v
            })
            .collect();
        let expected = vec![
            vec!["Books"],
            vec!["Cars"],
            vec!["Books", "Technology"],
            vec!["Books", "Cars", "Technology"],
        ];
        ensure(named == expected, || format!("zones {named:?}"))?;
        ensure(zones.subset_of("Technology", "Books").unwrap(), || {
            "Technology is not a subset of Books".into()
        })?;
        for a in zones.labels() {
            for b in zones.labels() {
                if a != b {
                    ensure(!zones.disjoint(a, b).unwrap(), || {
                        format!("{a} and {b} disjoint")
                    })?;
                }
            }
        }
        let counts = zones.relation_counts();
        let oracle = Members::of(&system).relation_counts(zones.labels());
        ensure(
            (counts.intersections, counts.disjoint, counts.subsets) == oracle,
            || format!("{counts} vs pair scan {oracle:?}"),
        )?;
        ensure(counts.to_string() == "I=3 D=0 S=1", || counts.to_string())?;
        ensure(
            zone_map(&zones) == zone_map(&interests_system().zones().unwrap()),
            || "tsv and in-memory scenarios disagree".into(),
        )?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(1), || {
            format!("took {elapsed:?}")
        })?;
        Ok(format!("{counts}, {elapsed:?}"))
    })();
    report(1, "interests scenario", outcome);
}

#[test]
fn ac2_ordering_optimality() {
    let outcome = (|| {
        let start = Instant::now();
        let mut r = rng(0x5e7_0002);
        let mut equal = 0usize;
        for i in 0..200 {
            let zones = random_zone_set(&mut r, 4, 6);
            let exact = order_exact(&zones).map_err(|e| e.to_string())?;
            let heuristic = order_heuristic(&zones);
            let e = segment_count(&zones, &exact).unwrap();
            let h = segment_count(&zones, &heuristic).unwrap();
            let optimum = brute_force_min_segments(&zones);
            ensure(
                e == optimum && e == runs_oracle(&zones, exact.as_slice()),
                || format!("instance {i}: exact {e} but brute force {optimum}"),
            )?;
            ensure(h >= e, || {
                format!("instance {i}: heuristic {h} < exact {e}")
            })?;
            ensure(e >= zones.set_count() && h >= zones.set_count(), || {
                format!("instance {i}: below one segment per set")
            })?;
            equal += usize::from(h == e);
        }
        let rate = equal as f64 / 200.0;
        ensure(rate >= EQUALITY_RATE, || format!("equality on {equal}/200"))?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(10), || {
            format!("took {elapsed:?}")
        })?;
        Ok(format!("heuristic optimal on {equal}/200, {elapsed:?}"))
    })();
    report(2, "ordering optimality", outcome);
}

#[test]
fn ac3_replication_sequences() {
    let outcome = (|| {
        let zones = ZoneSet::from_named(
            ["A", "B", "C", "D", "E", "F"],
            [
                (vec!["A", "B"], 1),
                (vec!["B", "C", "D"], 1),
                (vec!["E"], 1),
                (vec!["F", "A"], 1),
            ],
        )
        .unwrap();
        let inputs = vec![zones; 12];
        let expected = [
            "LEI MED LES MEI LED MES LHI MHD LHS MHI LHD MHS",
            "MEI LED MES LEI MED LES MHI LHD MHS LHI MHD LHS",
        ];
        let mut matched = 0;
        for (replication, want) in [1u8, 2].into_iter().zip(expected) {
            let set = generate_task_set(&inputs, replication, 2024).map_err(|e| e.to_string())?;
            let got = set.codes();
            let want: Vec<&str> = want.split(' ').collect();
            for (pos, (g, w)) in got.iter().zip(&want).enumerate() {
                ensure(g == w, || {
                    format!("replication {replication} position {}: {g} != {w}", pos + 1)
                })?;
                matched += 1;
            }
            ensure(got.len() == 12 && set.invariants_hold(), || {
                "sequence invariants".into()
            })?;
        }
        ensure(matched == 24, || format!("{matched} tuples matched"))?;
        Ok("24/24 tuples".into())
    })();
    report(3, "replication sequences", outcome);
}

#[test]
fn ac4_oracle_equivalence() {
    let outcome = (|| {
        let mut checked = 0usize;
        let mut mismatches = Vec::new();
        for (i, system) in query_instances().iter().enumerate() {
            let zones = system.zones().map_err(|e| e.to_string())?;
            let members = Members::of(system);
            let labels = zones.labels();
            for relation in Relation::ALL {
                for x in labels {
                    let got = zones
                        .sets_satisfying(&Query::easy(relation, x.clone()))
                        .unwrap();
                    let want = members.satisfying(labels, relation, &[x]);
                    checked += 1;
                    if got != want {
                        mismatches.push(format!("#{i} E{relation:?} {x}: {got:?} vs {want:?}"));
                    }
                    for y in labels.iter().filter(|y| *y != x) {
                        let got = zones
                            .sets_satisfying(&Query::hard(relation, x.clone(), y.clone()))
                            .unwrap();
                        let want = members.satisfying(labels, relation, &[x, y]);
                        checked += 1;
                        if got != want {
                            mismatches
                                .push(format!("#{i} H{relation:?} {x},{y}: {got:?} vs {want:?}"));
                        }
                    }
                }
            }
        }
        ensure(mismatches.is_empty(), || {
            format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
        })?;
        Ok(format!("{checked} queries, 0 mismatches"))
    })();
    report(4, "oracle equivalence", outcome);
}

#[test]
fn ac5_mosaic_tiling() {
    let outcome = (|| {
        let mut violations = 0usize;
        let mut columns = 0usize;
        for system in query_instances() {
            let zones = system.zones().map_err(|e| e.to_string())?;
            let order = order_heuristic(&zones);
            let linear = linear_layout(&zones, &order).map_err(|e| e.to_string())?;
            for mode in [MosaicMode::Equal, MosaicMode::Cardinality] {
                let mosaic = mosaic_layout(&zones, &order, mode).map_err(|e| e.to_string())?;
                let area: f64 = mosaic.tiles.iter().map(|t| t.width * t.height).sum();
                ensure((area - 1.0).abs() <= AREA_TOLERANCE, || {
                    format!("area {area}")
                })?;
                for col in 0..mosaic.column_count() {
                    columns += 1;
                    let height: f64 = mosaic.column_tiles(col).map(|t| t.height).sum();
                    ensure((height - 1.0).abs() <= HEIGHT_TOLERANCE, || {
                        format!("column {col} height {height}")
                    })?;
                    for runs in &linear.runs {
                        let in_mosaic = mosaic.column_tiles(col).any(|t| t.set == runs.set);
                        let in_linear = runs.runs.iter().any(|r| r.contains(col));
                        violations += usize::from(in_mosaic != in_linear);
                    }
                }
            }
        }
        ensure(violations == 0, || {
            format!("{violations} consistency violations")
        })?;
        Ok(format!("{columns} columns, 0 violations"))
    })();
    report(5, "mosaic tiling", outcome);
}

#[test]
fn ac6_palette_constraints() {
    let outcome = (|| {
        let mut worst = f64::INFINITY;
        for n in 1..=10 {
            let colors =
                generate_palette(n, DEFAULT_SEPARATION).map_err(|e| format!("n={n}: {e}"))?;
            ensure(colors.len() == n, || {
                format!("n={n}: got {} colours", colors.len())
            })?;
            for (i, a) in colors.iter().enumerate() {
                for b in &colors[i + 1..] {
                    let d = colour_oracle::distance(a.0, b.0);
                    worst = worst.min(d);
                    ensure(d >= MIN_SEPARATION, || {
                        format!("n={n}: {a} vs {b} distance {d:.2}")
                    })?;
                }
            }
        }
        match generate_palette(11, DEFAULT_SEPARATION) {
            Err(Error::TooManyColors { requested: 11 }) => {}
            other => return Err(format!("n=11 gave {other:?}")),
        }
        Ok(format!("closest pair {worst:.2} (oracle), n=11 rejected"))
    })();
    report(6, "palette constraints", outcome);
}

#[test]
fn ac7_determinism() {
    let outcome = (|| {
        let zones = interests_system().zones().unwrap();
        let order = order_exact(&zones).map_err(|e| e.to_string())?;
        let palette =
            Palette::generate(zones.labels(), DEFAULT_SEPARATION).map_err(|e| e.to_string())?;
        let style = Style::default();
        let render = || {
            let linear =
                render_linear(&linear_layout(&zones, &order).unwrap(), &palette, &style).unwrap();
            let mosaic = render_mosaic(
                &mosaic_layout(&zones, &order, MosaicMode::Equal).unwrap(),
                &palette,
                &style,
            )
            .unwrap();
            (linear.into_string(), mosaic.into_string())
        };
        let (l1, m1) = render();
        let (l2, m2) = render();
        ensure(l1 == l2 && m1 == m2, || "renders differ".into())?;
        let segments = l1.matches("class=\"segment\"").count();
        let tiles = m1.matches("class=\"tile\"").count();
        ensure(segments == 3, || format!("{segments} segments"))?;
        ensure(tiles == 7, || format!("{tiles} tiles"))?;
        Ok("byte-identical; 3 segments, 7 tiles".into())
    })();
    report(7, "determinism", outcome);
}

#[test]
fn ac8_cardinality_mode() {
    let outcome = (|| {
        let mut r = rng(0x5e7_0008);
        let mut checked = 0usize;
        for _ in 0..100 {
            let zones = random_zone_set(&mut r, 6, 20);
            let order = order_heuristic(&zones);
            let total = zones.element_count() as f64;
            let mosaic = mosaic_layout(&zones, &order, MosaicMode::Cardinality)
                .map_err(|e| e.to_string())?;
            for (col, &z) in order.as_slice().iter().enumerate() {
                let want = zones.zones()[z].cardinality() as f64 / total;
                for tile in mosaic.column_tiles(col) {
                    ensure((tile.width - want).abs() <= WIDTH_TOLERANCE, || {
                        format!("column {col}: width {} vs {want}", tile.width)
                    })?;
                }
                let edge_width = mosaic.column_edges[col + 1] - mosaic.column_edges[col];
                ensure((edge_width - want).abs() <= WIDTH_TOLERANCE, || {
                    format!("column {col}: edges give {edge_width} vs {want}")
                })?;
                checked += 1;
            }
            let bumped: Vec<u64> = zones
                .zones()
                .iter()
                .map(|z| z.cardinality() * 7 + 3)
                .collect();
            let perturbed = zones.with_cardinalities(&bumped).unwrap();
            ensure(
                mosaic_layout(&zones, &order, MosaicMode::Equal).unwrap()
                    == mosaic_layout(&perturbed, &order, MosaicMode::Equal).unwrap(),
                || "equal mode changed with cardinalities".into(),
            )?;
        }
        Ok(format!("{checked} columns within {WIDTH_TOLERANCE:e}"))
    })();
    report(8, "cardinality mode", outcome);
}
