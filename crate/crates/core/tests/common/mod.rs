//! Instance generators and brute-force oracles shared by the integration
//! tests. Nothing here calls the query, ordering or colour code under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setmosaic::{Relation, SetSystem, ZoneSet};

pub fn interests_system() -> SetSystem {
    SetSystem::new(
        ["Books", "Technology", "Cars"],
        [
            ("e1", "Books"),
            ("e2", "Cars"),
            ("e3", "Books"),
            ("e3", "Technology"),
            ("e4", "Books"),
            ("e4", "Technology"),
            ("e4", "Cars"),
        ],
    )
    .unwrap()
}

pub const INTERESTS_TSV: &str = "e1\tBooks\ne2\tCars\ne3\tBooks\ne3\tTechnology\n\
                            e4\tBooks\ne4\tTechnology\ne4\tCars\n";

/// Random membership data with up to `max_sets` sets and `max_elements`
/// elements. Unused labels are dropped so every set is populated.
pub fn random_system(rng: &mut ChaCha8Rng, max_sets: usize, max_elements: usize) -> SetSystem {
    let n = rng.gen_range(1..=max_sets);
    let m = rng.gen_range(1..=max_elements);
    let labels: Vec<String> = (0..n).map(|i| format!("S{i}")).collect();
    // A small pool of signatures makes repeated zones and containment likely.
    let pool: Vec<Vec<usize>> = (0..rng.gen_range(1..=2 * n))
        .map(|_| {
            let k = rng.gen_range(1..=n.min(4));
            let mut sig: Vec<usize> = (0..n).collect();
            sig.shuffle(rng);
            sig.truncate(k);
            sig
        })
        .collect();
    let mut memberships = Vec::new();
    for e in 0..m {
        let sig = &pool[rng.gen_range(0..pool.len())];
        for &s in sig {
            memberships.push((format!("e{e}"), labels[s].clone()));
        }
    }
    let used: BTreeSet<&String> = memberships.iter().map(|(_, l)| l).collect();
    let labels: Vec<String> = labels
        .iter()
        .filter(|l| used.contains(l))
        .cloned()
        .collect();
    SetSystem::new(labels, memberships).unwrap()
}

/// Random zone set with at most `max_sets` sets and `max_zones` zones.
pub fn random_zone_set(rng: &mut ChaCha8Rng, max_sets: usize, max_zones: usize) -> ZoneSet {
    loop {
        let n = rng.gen_range(1..=max_sets);
        let cap = ((1usize << n) - 1).min(max_zones);
        let k = rng.gen_range(1..=cap);
        let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
        masks.shuffle(rng);
        masks.truncate(k);
        let covered = masks.iter().fold(0, |acc, m| acc | m);
        if covered != (1 << n) - 1 {
            continue;
        }
        let labels: Vec<String> = (0..n).map(|i| format!("S{i}")).collect();
        let zones: Vec<(Vec<String>, u64)> = masks
            .iter()
            .map(|&m| {
                let members = (0..n)
                    .filter(|b| m & (1 << b) != 0)
                    .map(|b| labels[b].clone())
                    .collect();
                (members, rng.gen_range(1..=5))
            })
            .collect();
        return ZoneSet::from_named(labels, zones).unwrap();
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Element-level view of a set system: label -> members.
pub struct Members(pub BTreeMap<String, BTreeSet<String>>);

impl Members {
    pub fn of(system: &SetSystem) -> Self {
        let mut map: BTreeMap<String, BTreeSet<String>> = system
            .labels()
            .iter()
            .map(|l| (l.clone(), BTreeSet::new()))
            .collect();
        for (e, l) in system.memberships() {
            map.get_mut(l).unwrap().insert(e.clone());
        }
        Self(map)
    }

    fn get(&self, label: &str) -> &BTreeSet<String> {
        &self.0[label]
    }

    pub fn intersects(&self, a: &str, b: &str) -> bool {
        !self.get(a).is_disjoint(self.get(b))
    }

    pub fn subset(&self, a: &str, b: &str) -> bool {
        self.get(a).is_subset(self.get(b))
    }

    /// Candidates outside the targets satisfying the query, in label order.
    pub fn satisfying(
        &self,
        labels: &[String],
        relation: Relation,
        targets: &[&str],
    ) -> Vec<String> {
        let reference: BTreeSet<String> = match (relation, targets) {
            (_, [x]) => self.get(x).clone(),
            (Relation::Disjoint, [x, y]) => {
                self.get(x).intersection(self.get(y)).cloned().collect()
            }
            (_, [x, y]) => self.get(x).union(self.get(y)).cloned().collect(),
            _ => unreachable!(),
        };
        labels
            .iter()
            .filter(|l| !targets.contains(&l.as_str()))
            .filter(|l| {
                let a = self.get(l);
                match relation {
                    Relation::Intersect => !a.is_disjoint(&reference),
                    Relation::Subset => a.is_subset(&reference),
                    Relation::Disjoint => a.is_disjoint(&reference),
                }
            })
            .cloned()
            .collect()
    }

    /// Pair scan: (intersections, disjoint, ordered subsets).
    pub fn relation_counts(&self, labels: &[String]) -> (usize, usize, usize) {
        let (mut i, mut d, mut s) = (0, 0, 0);
        for (x, a) in labels.iter().enumerate() {
            for b in &labels[x + 1..] {
                if self.intersects(a, b) {
                    i += 1;
                } else {
                    d += 1;
                }
                s += usize::from(self.subset(a, b)) + usize::from(self.subset(b, a));
            }
        }
        (i, d, s)
    }
}

/// Groups elements by sorted signature, independently of `SetSystem::zones`.
pub fn brute_force_zones(system: &SetSystem) -> BTreeMap<BTreeSet<String>, u64> {
    let mut per_element: BTreeMap<&str, BTreeSet<String>> = BTreeMap::new();
    for (e, l) in system.memberships() {
        per_element.entry(e.as_str()).or_default().insert(l.clone());
    }
    let mut sorted: Vec<BTreeSet<String>> = per_element.into_values().collect();
    sorted.sort();
    let mut out = BTreeMap::new();
    for sig in sorted {
        *out.entry(sig).or_insert(0) += 1;
    }
    out
}

pub fn zone_map(zones: &ZoneSet) -> BTreeMap<BTreeSet<String>, u64> {
    zones
        .zones()
        .iter()
        .map(|z| {
            (
                zones
                    .signature_labels(z)
                    .into_iter()
                    .map(String::from)
                    .collect(),
                z.cardinality(),
            )
        })
        .collect()
}

/// Segments by walking each set's presence across columns.
pub fn runs_oracle(zones: &ZoneSet, order: &[usize]) -> usize {
    (0..zones.set_count())
        .map(|s| {
            let present: Vec<bool> = order
                .iter()
                .map(|&z| zones.zones()[z].contains(s))
                .collect();
            (0..present.len())
                .filter(|&i| present[i] && (i == 0 || !present[i - 1]))
                .count()
        })
        .sum()
}

/// Minimum segment count over every permutation.
pub fn brute_force_min_segments(zones: &ZoneSet) -> usize {
    fn permute(k: usize, items: &mut Vec<usize>, zones: &ZoneSet, best: &mut usize) {
        if k == items.len() {
            *best = (*best).min(runs_oracle(zones, items));
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(k + 1, items, zones, best);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..zones.zone_count()).collect();
    let mut best = usize::MAX;
    permute(0, &mut items, zones, &mut best);
    best
}

/// sRGB to CIELUV built from first principles: the RGB-to-XYZ matrix is
/// derived from the sRGB primaries' chromaticities and the D65 white point
/// rather than taken from published tables.
pub mod colour_oracle {
    const PRIMARIES: [(f64, f64); 3] = [(0.64, 0.33), (0.30, 0.60), (0.15, 0.06)];
    const WHITE: (f64, f64) = (0.3127, 0.3290);

    fn xyz_of(xy: (f64, f64)) -> [f64; 3] {
        [xy.0 / xy.1, 1.0, (1.0 - xy.0 - xy.1) / xy.1]
    }

    fn det(m: [[f64; 3]; 3]) -> f64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Columns are the primaries' XYZ scaled so that RGB (1,1,1) maps to white.
    fn rgb_to_xyz_matrix() -> [[f64; 3]; 3] {
        let p = PRIMARIES.map(xyz_of);
        let m = [
            [p[0][0], p[1][0], p[2][0]],
            [p[0][1], p[1][1], p[2][1]],
            [p[0][2], p[1][2], p[2][2]],
        ];
        let w = xyz_of(WHITE);
        let d = det(m);
        // Cramer's rule for the per-primary scale factors.
        let mut scale = [0.0; 3];
        for (c, s) in scale.iter_mut().enumerate() {
            let mut mc = m;
            for r in 0..3 {
                mc[r][c] = w[r];
            }
            *s = det(mc) / d;
        }
        let mut out = m;
        for row in out.iter_mut() {
            for c in 0..3 {
                row[c] *= scale[c];
            }
        }
        out
    }

    fn linear(c: u8) -> f64 {
        let c = c as f64 / 255.0;
        if c <= 0.04045 {
            c / 12.92
        } else {
            ((c + 0.055) / 1.055).powf(2.4)
        }
    }

    fn uv_prime(xyz: [f64; 3]) -> (f64, f64) {
        let d = xyz[0] + 15.0 * xyz[1] + 3.0 * xyz[2];
        (4.0 * xyz[0] / d, 9.0 * xyz[1] / d)
    }

    pub fn srgb_to_luv(rgb: [u8; 3]) -> [f64; 3] {
        let m = rgb_to_xyz_matrix();
        let lin = rgb.map(linear);
        let xyz: [f64; 3] = std::array::from_fn(|r| (0..3).map(|c| m[r][c] * lin[c]).sum::<f64>());
        let y = xyz[1];
        let l = if y > (6.0f64 / 29.0).powi(3) {
            116.0 * y.powf(1.0 / 3.0) - 16.0
        } else {
            (29.0f64 / 3.0).powi(3) * y
        };
        if l == 0.0 {
            return [0.0; 3];
        }
        let (u, v) = uv_prime(xyz);
        let (un, vn) = uv_prime(xyz_of(WHITE));
        [l, 13.0 * l * (u - un), 13.0 * l * (v - vn)]
    }

    pub fn distance(a: [u8; 3], b: [u8; 3]) -> f64 {
        let (p, q) = (srgb_to_luv(a), srgb_to_luv(b));
        ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt()
    }
}
