//! Column orderings of zones and the segment count they induce.
//!
//! A set's segments are its maximal runs of consecutive columns. Fewer
//! segments mean fewer line breaks in a linear diagram, so orderings try to
//! keep each set's zones contiguous.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ZoneSet;

/// Largest zone count [`order_exact`] accepts.
pub const EXACT_MAX_ZONES: usize = 10;

/// A permutation of zone indices: `order[column] = zone`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ZoneOrder(Vec<usize>);

impl ZoneOrder {
    /// Validates that `permutation` is a bijection on `0..zone_count`.
    pub fn new(permutation: Vec<usize>, zone_count: usize) -> Result<Self> {
        if permutation.len() != zone_count {
            return Err(Error::InvalidOrder(format!(
                "expected {zone_count} zone indices, got {}",
                permutation.len()
            )));
        }
        let mut seen = vec![false; zone_count];
        for &z in &permutation {
            if z >= zone_count {
                return Err(Error::InvalidOrder(format!(
                    "zone index {z} out of range 0..{zone_count}"
                )));
            }
            if std::mem::replace(&mut seen[z], true) {
                return Err(Error::InvalidOrder(format!("zone index {z} repeated")));
            }
        }
        Ok(Self(permutation))
    }

    pub fn identity(zone_count: usize) -> Self {
        Self((0..zone_count).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub(crate) fn check(&self, zones: &ZoneSet) -> Result<()> {
        Self::new(self.0.clone(), zones.zone_count()).map(|_| ())
    }
}

/// Which ordering procedure to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderStrategy {
    Heuristic,
    Exact,
}

pub fn order_zones(zones: &ZoneSet, strategy: OrderStrategy) -> Result<ZoneOrder> {
    match strategy {
        OrderStrategy::Heuristic => Ok(order_heuristic(zones)),
        OrderStrategy::Exact => order_exact(zones),
    }
}

/// Total number of maximal column runs over all sets.
pub fn segment_count(zones: &ZoneSet, order: &ZoneOrder) -> Result<usize> {
    order.check(zones)?;
    Ok(Costs::new(zones).total(order.as_slice()))
}

/// `starts[p][z]` is how many sets of zone `z` are absent from zone `p`,
/// i.e. how many segments begin when `z` directly follows `p`.
struct Costs {
    first: Vec<usize>,
    starts: Vec<Vec<usize>>,
}

impl Costs {
    fn new(zones: &ZoneSet) -> Self {
        let zs = zones.zones();
        let first = zs.iter().map(|z| z.len()).collect();
        let starts = zs
            .iter()
            .map(|prev| {
                zs.iter()
                    .map(|z| z.signature().iter().filter(|&&s| !prev.contains(s)).count())
                    .collect()
            })
            .collect();
        Self { first, starts }
    }

    fn total(&self, order: &[usize]) -> usize {
        match order.first() {
            None => 0,
            Some(&head) => {
                self.first[head]
                    + order
                        .windows(2)
                        .map(|w| self.starts[w[0]][w[1]])
                        .sum::<usize>()
            }
        }
    }
}

fn shared(zones: &ZoneSet, a: usize, b: usize) -> usize {
    let zs = zones.zones();
    zs[b]
        .signature()
        .iter()
        .filter(|&&s| zs[a].contains(s))
        .count()
}

/// Globally segment-minimal order by branch and bound.
///
/// Among optimal orders the lexicographically smallest permutation of
/// original zone indices is returned.
pub fn order_exact(zones: &ZoneSet) -> Result<ZoneOrder> {
    let n = zones.zone_count();
    if n > EXACT_MAX_ZONES {
        return Err(Error::TooManyZones {
            zones: n,
            max: EXACT_MAX_ZONES,
        });
    }
    let costs = Costs::new(zones);
    // Any order the heuristic reaches is feasible, so it caps the search.
    let ceiling = costs.total(order_heuristic(zones).as_slice());
    let mut search = Exact {
        zones,
        costs: &costs,
        floor: zones.set_count(),
        ceiling,
        best: None,
        prefix: Vec::with_capacity(n),
        used: vec![false; n],
        seen: vec![0; zones.set_count()],
        seen_sets: 0,
    };
    search.descend(0);
    let (_, order) = search.best.expect("the heuristic order bounds the search");
    Ok(ZoneOrder(order))
}

struct Exact<'a> {
    zones: &'a ZoneSet,
    costs: &'a Costs,
    /// Every set needs at least one segment.
    floor: usize,
    ceiling: usize,
    best: Option<(usize, Vec<usize>)>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    /// Per set, how many placed zones contain it.
    seen: Vec<usize>,
    seen_sets: usize,
}

impl Exact<'_> {
    fn done(&self) -> bool {
        matches!(self.best, Some((c, _)) if c == self.floor)
    }

    fn pruned(&self, bound: usize) -> bool {
        match &self.best {
            Some((c, _)) => bound >= *c,
            None => bound > self.ceiling,
        }
    }

    fn descend(&mut self, count: usize) {
        let n = self.used.len();
        if self.prefix.len() == n {
            if !self.pruned(count) {
                self.best = Some((count, self.prefix.clone()));
            }
            return;
        }
        for z in 0..n {
            if self.used[z] {
                continue;
            }
            let step = match self.prefix.last() {
                None => self.costs.first[z],
                Some(&p) => self.costs.starts[p][z],
            };
            self.place(z);
            let unseen = self.zones.set_count() - self.seen_sets;
            if !self.pruned(count + step + unseen) {
                self.descend(count + step);
            }
            self.unplace(z);
            if self.done() {
                return;
            }
        }
    }

    fn place(&mut self, z: usize) {
        self.used[z] = true;
        self.prefix.push(z);
        for &s in self.zones.zones()[z].signature() {
            if self.seen[s] == 0 {
                self.seen_sets += 1;
            }
            self.seen[s] += 1;
        }
    }

    fn unplace(&mut self, z: usize) {
        self.used[z] = false;
        self.prefix.pop();
        for &s in self.zones.zones()[z].signature() {
            self.seen[s] -= 1;
            if self.seen[s] == 0 {
                self.seen_sets -= 1;
            }
        }
    }
}

/// Deterministic greedy chaining followed by local search.
///
/// Greedy: start from the largest zone, then keep appending the unplaced
/// zone sharing the most sets with the last one (ties: larger zone, then
/// lower index). Local search: apply the best adjacent swap or single-zone
/// relocation until none lowers the segment count. The same local search is
/// also run from the identity order and the better result kept (ties go to
/// the greedy start), so the result never does worse than input order.
pub fn order_heuristic(zones: &ZoneSet) -> ZoneOrder {
    let costs = Costs::new(zones);
    let greedy = local_search(&costs, greedy_chain(zones));
    let plain = local_search(&costs, (0..zones.zone_count()).collect());
    if costs.total(&plain) < costs.total(&greedy) {
        ZoneOrder(plain)
    } else {
        ZoneOrder(greedy)
    }
}

fn greedy_chain(zones: &ZoneSet) -> Vec<usize> {
    let zs = zones.zones();
    let n = zs.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);

    // max_by_key keeps the last maximum, so iterate indices in reverse to
    // break ties toward the lowest index.
    let start = (0..n)
        .rev()
        .max_by_key(|&z| zs[z].len())
        .expect("zone sets are never empty");
    placed[start] = true;
    order.push(start);

    while order.len() < n {
        let last = *order.last().unwrap();
        let next = (0..n)
            .rev()
            .filter(|&z| !placed[z])
            .max_by_key(|&z| (shared(zones, last, z), zs[z].len()))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn local_search(costs: &Costs, mut order: Vec<usize>) -> Vec<usize> {
    let n = order.len();
    let mut current = costs.total(&order);
    loop {
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut consider = |candidate: Vec<usize>| {
            let cost = costs.total(&candidate);
            if cost < best.as_ref().map_or(current, |b| b.0) {
                best = Some((cost, candidate));
            }
        };
        for i in 0..n.saturating_sub(1) {
            let mut candidate = order.clone();
            candidate.swap(i, i + 1);
            consider(candidate);
        }
        for from in 0..n {
            for to in 0..n {
                if to == from || to == from + 1 || to + 1 == from {
                    continue;
                }
                let mut candidate = order.clone();
                let z = candidate.remove(from);
                candidate.insert(to, z);
                consider(candidate);
            }
        }
        match best {
            Some((cost, candidate)) => {
                current = cost;
                order = candidate;
            }
            None => return order,
        }
    }
}
