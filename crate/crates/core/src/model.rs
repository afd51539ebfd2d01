//! Set systems, zones and the set-relation queries answered over them.
//!
//! A [`SetSystem`] is raw membership data. Grouping elements by the exact
//! combination of sets they belong to yields a [`ZoneSet`]: one [`Zone`]
//! per non-empty region of the diagram. Every query here is answered from
//! zones alone, so zone order never affects a result.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Declared set labels plus element/set membership pairs.
///
/// Label order is preserved exactly as given and becomes legend order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    labels: Vec<String>,
    elements: Vec<String>,
    memberships: Vec<(String, String)>,
}

impl SetSystem {
    /// Builds a system whose elements are exactly those named in `memberships`.
    ///
    /// Repeated `(element, label)` pairs are collapsed. Unpopulated labels are
    /// accepted here and rejected by [`SetSystem::zones`].
    pub fn new<L, M, E, S>(labels: L, memberships: M) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        M: IntoIterator<Item = (E, S)>,
        E: Into<String>,
        S: Into<String>,
    {
        Self::with_elements(labels, Vec::<String>::new(), memberships)
    }

    /// Like [`SetSystem::new`] but also declares elements up front, which may
    /// include elements with no membership at all.
    pub fn with_elements<L, D, M, E, S>(labels: L, elements: D, memberships: M) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        D: IntoIterator,
        D::Item: Into<String>,
        M: IntoIterator<Item = (E, S)>,
        E: Into<String>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut known = HashSet::with_capacity(labels.len());
        for label in &labels {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if !known.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }

        let mut element_seen = HashSet::new();
        let mut element_order = Vec::new();
        for element in elements.into_iter().map(Into::into) {
            if element.is_empty() {
                return Err(Error::EmptyElement);
            }
            if element_seen.insert(element.clone()) {
                element_order.push(element);
            }
        }

        let mut pair_seen = HashSet::new();
        let mut pairs = Vec::new();
        for (element, label) in memberships {
            let (element, label): (String, String) = (element.into(), label.into());
            if element.is_empty() {
                return Err(Error::EmptyElement);
            }
            if !known.contains(label.as_str()) {
                return Err(Error::UnknownLabel(label));
            }
            if element_seen.insert(element.clone()) {
                element_order.push(element.clone());
            }
            if pair_seen.insert((element.clone(), label.clone())) {
                pairs.push((element, label));
            }
        }

        Ok(Self {
            labels,
            elements: element_order,
            memberships: pairs,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Distinct elements in first-appearance order.
    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn memberships(&self) -> &[(String, String)] {
        &self.memberships
    }

    /// Groups elements by exact membership.
    ///
    /// Zones are listed in the order their signature first occurs when
    /// walking elements in first-appearance order.
    pub fn zones(&self) -> Result<ZoneSet> {
        let index: HashMap<&str, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();

        let mut per_element: HashMap<&str, Vec<usize>> = HashMap::new();
        for (element, label) in &self.memberships {
            per_element
                .entry(element.as_str())
                .or_default()
                .push(index[label.as_str()]);
        }

        let mut populated = vec![false; self.labels.len()];
        let mut zone_of: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut zones: Vec<Zone> = Vec::new();
        for element in &self.elements {
            let mut signature = match per_element.remove(element.as_str()) {
                Some(sets) => sets,
                None => return Err(Error::ElementWithoutSets(element.clone())),
            };
            signature.sort_unstable();
            for &s in &signature {
                populated[s] = true;
            }
            match zone_of.get(&signature) {
                Some(&z) => zones[z].cardinality += 1,
                None => {
                    zone_of.insert(signature.clone(), zones.len());
                    zones.push(Zone {
                        signature,
                        cardinality: 1,
                    });
                }
            }
        }

        if let Some(i) = populated.iter().position(|p| !p) {
            return Err(Error::EmptySet(self.labels[i].clone()));
        }
        ZoneSet::new(self.labels.clone(), zones)
    }
}

/// Free-function form of [`SetSystem::zones`].
pub fn zones_from_membership(system: &SetSystem) -> Result<ZoneSet> {
    system.zones()
}

/// One non-empty region: the elements whose membership is exactly `signature`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Zone {
    signature: Vec<usize>,
    cardinality: u64,
}

impl Zone {
    /// `signature` holds indices into the owning [`ZoneSet`]'s labels.
    pub fn new(mut signature: Vec<usize>, cardinality: u64) -> Self {
        signature.sort_unstable();
        signature.dedup();
        Self {
            signature,
            cardinality,
        }
    }

    /// Sorted set indices.
    pub fn signature(&self) -> &[usize] {
        &self.signature
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn contains(&self, set: usize) -> bool {
        self.signature.binary_search(&set).is_ok()
    }

    pub fn len(&self) -> usize {
        self.signature.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signature.is_empty()
    }
}

/// The non-empty zones of a set system together with its ordered labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneSet {
    labels: Vec<String>,
    zones: Vec<Zone>,
}

impl ZoneSet {
    pub fn new(labels: Vec<String>, zones: Vec<Zone>) -> Result<Self> {
        let mut known = HashSet::with_capacity(labels.len());
        for label in &labels {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if !known.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if zones.is_empty() {
            return Err(Error::NoZones);
        }

        let mut used = vec![false; labels.len()];
        let mut seen = HashSet::with_capacity(zones.len());
        for zone in &zones {
            if zone.signature.is_empty() {
                return Err(Error::EmptySignature);
            }
            if !zone.signature.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidOrder(
                    "zone signature is not sorted and duplicate-free".into(),
                ));
            }
            for &s in &zone.signature {
                if s >= labels.len() {
                    return Err(Error::UnknownLabel(format!("#{s}")));
                }
                used[s] = true;
            }
            let names = || zone.signature.iter().map(|&s| labels[s].clone()).collect();
            if zone.cardinality == 0 {
                return Err(Error::ZeroCardinality(names()));
            }
            if !seen.insert(zone.signature.as_slice()) {
                return Err(Error::DuplicateSignature(names()));
            }
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::EmptySet(labels[i].clone()));
        }
        Ok(Self { labels, zones })
    }

    /// Builds a zone set from label-named zones, e.g. `[(["B", "T"], 1)]`.
    pub fn from_named<L, Z, S>(labels: L, zones: Z) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        Z: IntoIterator<Item = (Vec<S>, u64)>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut built = Vec::new();
        for (members, cardinality) in zones {
            let mut signature = Vec::with_capacity(members.len());
            for m in &members {
                let m = m.as_ref();
                match labels.iter().position(|l| l == m) {
                    Some(i) => signature.push(i),
                    None => return Err(Error::UnknownLabel(m.to_string())),
                }
            }
            let len = signature.len();
            let zone = Zone::new(signature, cardinality);
            if zone.len() != len {
                return Err(Error::Json(format!(
                    "zone lists a set more than once: {:?}",
                    members.iter().map(AsRef::as_ref).collect::<Vec<_>>()
                )));
            }
            built.push(zone);
        }
        Self::new(labels, built)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zones(&self) -> &[Zone] {
        &self.zones
    }

    pub fn set_count(&self) -> usize {
        self.labels.len()
    }

    pub fn zone_count(&self) -> usize {
        self.zones.len()
    }

    /// Number of distinct elements, i.e. the sum of zone cardinalities.
    pub fn element_count(&self) -> u64 {
        self.zones.iter().map(|z| z.cardinality).sum()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Labels of a zone's signature, in legend order.
    pub fn signature_labels(&self, zone: &Zone) -> Vec<&str> {
        zone.signature
            .iter()
            .map(|&s| self.labels[s].as_str())
            .collect()
    }

    /// Returns a copy with the zone list permuted by `order[i]` = old index.
    /// Only used to reorder; the result answers every query identically.
    pub fn reordered(&self, order: &[usize]) -> Self {
        Self {
            labels: self.labels.clone(),
            zones: order.iter().map(|&i| self.zones[i].clone()).collect(),
        }
    }

    /// Replaces zone cardinalities, keeping everything else.
    pub fn with_cardinalities(&self, cardinalities: &[u64]) -> Result<Self> {
        if cardinalities.len() != self.zones.len() {
            return Err(Error::InvalidOrder(format!(
                "expected {} cardinalities, got {}",
                self.zones.len(),
                cardinalities.len()
            )));
        }
        let zones = self
            .zones
            .iter()
            .zip(cardinalities)
            .map(|(z, &c)| Zone::new(z.signature.clone(), c))
            .collect();
        Self::new(self.labels.clone(), zones)
    }

    fn pair(&self, a: &str, b: &str) -> Result<(usize, usize)> {
        let a_idx = self.index_of(a)?;
        let b_idx = self.index_of(b)?;
        if a_idx == b_idx {
            return Err(Error::SelfComparison(a.to_string()));
        }
        Ok((a_idx, b_idx))
    }

    /// True iff some zone holds both sets.
    pub fn intersects(&self, a: &str, b: &str) -> Result<bool> {
        let (a, b) = self.pair(a, b)?;
        Ok(self.intersects_idx(a, b))
    }

    /// True iff every zone holding `a` also holds `b`.
    pub fn subset_of(&self, a: &str, b: &str) -> Result<bool> {
        let (a, b) = self.pair(a, b)?;
        Ok(self.subset_idx(a, b))
    }

    pub fn disjoint(&self, a: &str, b: &str) -> Result<bool> {
        self.intersects(a, b).map(|i| !i)
    }

    pub(crate) fn intersects_idx(&self, a: usize, b: usize) -> bool {
        self.zones.iter().any(|z| z.contains(a) && z.contains(b))
    }

    pub(crate) fn subset_idx(&self, a: usize, b: usize) -> bool {
        self.zones
            .iter()
            .filter(|z| z.contains(a))
            .all(|z| z.contains(b))
    }

    /// All sets outside the query targets that satisfy it, in legend order.
    pub fn sets_satisfying(&self, query: &Query) -> Result<Vec<String>> {
        let resolved = self.resolve(query)?;
        Ok((0..self.labels.len())
            .filter(|&s| !resolved.is_target(s) && self.satisfies(s, &resolved))
            .map(|s| self.labels[s].clone())
            .collect())
    }

    pub(crate) fn resolve(&self, query: &Query) -> Result<ResolvedQuery> {
        let targets = match &query.targets {
            Targets::Single(x) => ResolvedTargets::Single(self.index_of(x)?),
            Targets::Pair(x, y) => {
                let (x, y) = self.pair(x, y)?;
                ResolvedTargets::Pair(x, y)
            }
        };
        Ok(ResolvedQuery {
            relation: query.relation,
            targets,
        })
    }

    pub(crate) fn satisfies(&self, set: usize, query: &ResolvedQuery) -> bool {
        let with_set = || self.zones.iter().filter(move |z| z.contains(set));
        match (query.relation, query.targets) {
            (Relation::Intersect, ResolvedTargets::Single(x)) => self.intersects_idx(set, x),
            (Relation::Subset, ResolvedTargets::Single(x)) => self.subset_idx(set, x),
            (Relation::Disjoint, ResolvedTargets::Single(x)) => !self.intersects_idx(set, x),
            (Relation::Intersect, ResolvedTargets::Pair(x, y)) => {
                with_set().any(|z| z.contains(x) || z.contains(y))
            }
            (Relation::Subset, ResolvedTargets::Pair(x, y)) => {
                with_set().all(|z| z.contains(x) || z.contains(y))
            }
            (Relation::Disjoint, ResolvedTargets::Pair(x, y)) => {
                !with_set().any(|z| z.contains(x) && z.contains(y))
            }
        }
    }

    /// Pairwise intersection, disjointness and subset counts.
    pub fn relation_counts(&self) -> RelationCounts {
        let n = self.labels.len();
        let mut counts = RelationCounts::default();
        for a in 0..n {
            for b in a + 1..n {
                if self.intersects_idx(a, b) {
                    counts.intersections += 1;
                } else {
                    counts.disjoint += 1;
                }
                counts.subsets += usize::from(self.subset_idx(a, b));
                counts.subsets += usize::from(self.subset_idx(b, a));
            }
        }
        counts
    }
}

/// Free-function form of [`ZoneSet::relation_counts`].
pub fn count_pairwise_relations(zones: &ZoneSet) -> RelationCounts {
    zones.relation_counts()
}

/// Intersection and disjointness are counted over unordered pairs, so they
/// always sum to n(n-1)/2. Subsets are counted over ordered pairs: two sets
/// with identical zones contribute two subset relations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RelationCounts {
    pub intersections: usize,
    pub disjoint: usize,
    pub subsets: usize,
}

impl std::fmt::Display for RelationCounts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "I={} D={} S={}",
            self.intersections, self.disjoint, self.subsets
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Intersect,
    Subset,
    Disjoint,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Intersect, Relation::Subset, Relation::Disjoint];

    /// Single-letter code used in task names: I, S or D.
    pub fn code(self) -> char {
        match self {
            Relation::Intersect => 'I',
            Relation::Subset => 'S',
            Relation::Disjoint => 'D',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Difficulty {
    Easy,
    Hard,
}

impl Difficulty {
    pub fn code(self) -> char {
        match self {
            Difficulty::Easy => 'E',
            Difficulty::Hard => 'H',
        }
    }
}

/// Query targets: a single set X (easy), or X and Y (hard). Hard
/// intersection and subset queries read X ∪ Y, hard disjointness X ∩ Y.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Targets {
    Single(String),
    Pair(String, String),
}

impl Targets {
    pub fn difficulty(&self) -> Difficulty {
        match self {
            Targets::Single(_) => Difficulty::Easy,
            Targets::Pair(..) => Difficulty::Hard,
        }
    }

    pub fn labels(&self) -> Vec<&str> {
        match self {
            Targets::Single(x) => vec![x.as_str()],
            Targets::Pair(x, y) => vec![x.as_str(), y.as_str()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Query {
    pub relation: Relation,
    pub targets: Targets,
}

impl Query {
    pub fn easy(relation: Relation, x: impl Into<String>) -> Self {
        Self {
            relation,
            targets: Targets::Single(x.into()),
        }
    }

    pub fn hard(relation: Relation, x: impl Into<String>, y: impl Into<String>) -> Self {
        Self {
            relation,
            targets: Targets::Pair(x.into(), y.into()),
        }
    }

    pub fn difficulty(&self) -> Difficulty {
        self.targets.difficulty()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum ResolvedTargets {
    Single(usize),
    Pair(usize, usize),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ResolvedQuery {
    pub relation: Relation,
    pub targets: ResolvedTargets,
}

impl ResolvedQuery {
    pub fn is_target(&self, set: usize) -> bool {
        match self.targets {
            ResolvedTargets::Single(x) => set == x,
            ResolvedTargets::Pair(x, y) => set == x || set == y,
        }
    }
}
