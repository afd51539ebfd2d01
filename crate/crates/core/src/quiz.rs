//! Study-style task questions with computed answer keys.
//!
//! A question asks which of several candidate sets stand in a relation to
//! one target set (easy) or to a union or intersection of two (hard). The
//! wording follows fixed templates whose quantifier words are reported as
//! highlight spans. Twelve questions make a task set, presented alternately
//! as linear and mosaic diagrams in one of two counterbalanced sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::{Difficulty, Query, Relation, Targets, ZoneSet};
use crate::rng::SplitMix64;

pub const NONE_OF_THE_ABOVE: &str = "None of the above";

/// Relation plus difficulty, e.g. `EI` or `HD`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TaskKind {
    pub difficulty: Difficulty,
    pub relation: Relation,
}

impl TaskKind {
    pub const fn new(difficulty: Difficulty, relation: Relation) -> Self {
        Self {
            difficulty,
            relation,
        }
    }

    pub fn target_count(self) -> usize {
        match self.difficulty {
            Difficulty::Easy => 1,
            Difficulty::Hard => 2,
        }
    }

    /// Five candidate sets for easy questions, four for hard ones.
    pub fn default_choice_count(self) -> usize {
        match self.difficulty {
            Difficulty::Easy => 5,
            Difficulty::Hard => 4,
        }
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.difficulty.code(), self.relation.code())
    }
}

impl FromStr for TaskKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut chars = s.chars();
        let difficulty = match chars.next() {
            Some('E') => Difficulty::Easy,
            Some('H') => Difficulty::Hard,
            _ => return Err(format!("unknown task {s:?} (expected e.g. EI, HS, ED)")),
        };
        let relation = match (chars.next(), chars.next()) {
            (Some('I'), None) => Relation::Intersect,
            (Some('S'), None) => Relation::Subset,
            (Some('D'), None) => Relation::Disjoint,
            _ => return Err(format!("unknown task {s:?} (expected e.g. EI, HS, ED)")),
        };
        Ok(Self::new(difficulty, relation))
    }
}

impl Serialize for TaskKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Byte range `[start, end)` of a highlighted word in the prompt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Highlight {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaskQuestion {
    pub task: TaskKind,
    pub targets: Vec<String>,
    pub prompt: String,
    /// Quantifier and connective words to emphasise.
    pub highlights: Vec<Highlight>,
    /// Candidate sets in legend order, then [`NONE_OF_THE_ABOVE`].
    pub choices: Vec<String>,
    pub answer_key: Vec<String>,
}

impl TaskQuestion {
    pub fn highlighted_words(&self) -> Vec<&str> {
        self.highlights
            .iter()
            .map(|h| &self.prompt[h.start..h.end])
            .collect()
    }
}

/// Optional overrides for [`generate_question_with`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuestionOptions {
    /// Number of candidate sets; defaults to 5 (easy) or 4 (hard).
    pub choice_count: Option<usize>,
    /// Fixed targets instead of seeded ones.
    pub targets: Option<Vec<String>>,
}

/// Builds the prompt and its highlight spans.
fn prompt(task: TaskKind, targets: &[String]) -> (String, Vec<Highlight>) {
    let mut text = String::from("Tick the check boxes where ");
    let mut highlights = Vec::new();
    let mut emphasise = |text: &mut String, word: &str| {
        highlights.push(Highlight {
            start: text.len(),
            end: text.len() + word.len(),
        });
        text.push_str(word);
    };

    let quantifier = match task.relation {
        Relation::Intersect => "some",
        Relation::Subset => "all",
        Relation::Disjoint => "none",
    };
    emphasise(&mut text, quantifier);
    text.push_str(" of the people are also interested in ");
    match (task.relation, targets) {
        (_, [x]) => text.push_str(x),
        (Relation::Disjoint, [x, y]) => {
            emphasise(&mut text, "both");
            text.push_str(&format!(" {x} and {y}"));
        }
        (_, [x, y]) => {
            emphasise(&mut text, "either");
            text.push_str(&format!(" {x} "));
            emphasise(&mut text, "or");
            text.push_str(&format!(" {y}"));
        }
        _ => unreachable!("questions have one or two targets"),
    }
    text.push('.');
    (text, highlights)
}

/// Question with default choice count and seeded targets.
pub fn generate_question(zones: &ZoneSet, task: TaskKind, seed: u64) -> Result<TaskQuestion> {
    generate_question_with(zones, task, seed, &QuestionOptions::default())
}

/// Targets (unless fixed) and then candidate sets are drawn from the labels
/// with [`SplitMix64::sample`]; candidates are listed in legend order. The
/// answer key holds every candidate satisfying the query, or only
/// [`NONE_OF_THE_ABOVE`] when none does.
pub fn generate_question_with(
    zones: &ZoneSet,
    task: TaskKind,
    seed: u64,
    options: &QuestionOptions,
) -> Result<TaskQuestion> {
    let choice_count = options
        .choice_count
        .unwrap_or_else(|| task.default_choice_count());
    let needed = choice_count + task.target_count();
    if zones.set_count() < needed {
        return Err(Error::TooFewSets {
            needed,
            available: zones.set_count(),
        });
    }

    let mut rng = SplitMix64::new(seed);
    let all: Vec<usize> = (0..zones.set_count()).collect();
    let targets: Vec<usize> = match &options.targets {
        Some(fixed) => {
            if fixed.len() != task.target_count() {
                return Err(Error::InvalidQuestion(format!(
                    "{task} questions take {} target(s), got {}",
                    task.target_count(),
                    fixed.len()
                )));
            }
            fixed
                .iter()
                .map(|t| zones.index_of(t))
                .collect::<Result<_>>()?
        }
        None => rng.sample(&all, task.target_count()),
    };
    let target_labels: Vec<String> = targets.iter().map(|&t| zones.labels()[t].clone()).collect();
    let query = Query {
        relation: task.relation,
        targets: match &target_labels[..] {
            [x] => Targets::Single(x.clone()),
            [x, y] => Targets::Pair(x.clone(), y.clone()),
            _ => unreachable!(),
        },
    };
    let resolved = zones.resolve(&query)?;

    let pool: Vec<usize> = all.into_iter().filter(|s| !targets.contains(s)).collect();
    let mut picked = rng.sample(&pool, choice_count);
    picked.sort_unstable();

    let mut answer_key: Vec<String> = picked
        .iter()
        .filter(|&&s| zones.satisfies(s, &resolved))
        .map(|&s| zones.labels()[s].clone())
        .collect();
    if answer_key.is_empty() {
        answer_key.push(NONE_OF_THE_ABOVE.to_string());
    }
    let mut choices: Vec<String> = picked.iter().map(|&s| zones.labels()[s].clone()).collect();
    choices.push(NONE_OF_THE_ABOVE.to_string());

    let (prompt, highlights) = prompt(task, &target_labels);
    Ok(TaskQuestion {
        task,
        targets: target_labels,
        prompt,
        highlights,
        choices,
        answer_key,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Visualization {
    Linear,
    Mosaic,
}

impl Visualization {
    pub fn code(self) -> char {
        match self {
            Visualization::Linear => 'L',
            Visualization::Mosaic => 'M',
        }
    }

    pub fn other(self) -> Self {
        match self {
            Visualization::Linear => Visualization::Mosaic,
            Visualization::Mosaic => Visualization::Linear,
        }
    }
}

const EI: TaskKind = TaskKind::new(Difficulty::Easy, Relation::Intersect);
const ES: TaskKind = TaskKind::new(Difficulty::Easy, Relation::Subset);
const ED: TaskKind = TaskKind::new(Difficulty::Easy, Relation::Disjoint);
const HI: TaskKind = TaskKind::new(Difficulty::Hard, Relation::Intersect);
const HS: TaskKind = TaskKind::new(Difficulty::Hard, Relation::Subset);
const HD: TaskKind = TaskKind::new(Difficulty::Hard, Relation::Disjoint);

/// Task of question number `i + 1`.
pub const QUESTION_TASKS: [TaskKind; 12] = [EI, ES, ED, EI, ES, ED, HI, HS, HD, HI, HS, HD];

/// Question numbers in presentation order, shared by both replications.
pub const PRESENTATION_ORDER: [usize; 12] = [1, 6, 2, 4, 3, 5, 7, 12, 8, 10, 9, 11];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaskEntry {
    /// 1-based position in the sequence.
    pub position: usize,
    /// 1-based question number; selects the zone set.
    pub question_number: usize,
    pub visualization: Visualization,
    pub question: TaskQuestion,
}

impl TaskEntry {
    /// Three-letter code such as `LEI`.
    pub fn code(&self) -> String {
        format!("{}{}", self.visualization.code(), self.question.task)
    }

    /// Default diagram file name, e.g. `q07-linear.svg`.
    pub fn diagram_file(&self) -> String {
        let kind = match self.visualization {
            Visualization::Linear => "linear",
            Visualization::Mosaic => "mosaic",
        };
        format!("q{:02}-{kind}.svg", self.question_number)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaskSet {
    pub replication: u8,
    pub seed: u64,
    pub entries: Vec<TaskEntry>,
}

impl TaskSet {
    pub fn codes(&self) -> Vec<String> {
        self.entries.iter().map(TaskEntry::code).collect()
    }

    /// Alternating visualizations, no repeated task type back to back, and
    /// every easy question before every hard one.
    pub fn invariants_hold(&self) -> bool {
        let pairs = self.entries.windows(2).all(|w| {
            w[0].visualization != w[1].visualization
                && w[0].question.task.relation != w[1].question.task.relation
        });
        let first_hard = self
            .entries
            .iter()
            .position(|e| e.question.task.difficulty == Difficulty::Hard)
            .unwrap_or(self.entries.len());
        pairs
            && self.entries[first_hard..]
                .iter()
                .all(|e| e.question.task.difficulty == Difficulty::Hard)
    }

    /// JSON bundle of every entry with its code and diagram file name.
    pub fn to_bundle_json(&self) -> String {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut v = serde_json::to_value(e).expect("entry serializes");
                v["code"] = e.code().into();
                v["diagram"] = e.diagram_file().into();
                v
            })
            .collect();
        let bundle = serde_json::json!({
            "replication": self.replication,
            "seed": self.seed,
            "entries": entries,
        });
        serde_json::to_string_pretty(&bundle).expect("bundle serializes")
    }
}

/// Builds the 12-question sequence for `replication` 1 (starting with a
/// linear diagram) or 2 (starting with a mosaic). `zone_sets[i]` backs
/// question number `i + 1`. Question seeds are the first twelve draws of
/// `SplitMix64::new(seed)`, so both replications ask identical questions.
pub fn generate_task_set(zone_sets: &[ZoneSet], replication: u8, seed: u64) -> Result<TaskSet> {
    if zone_sets.len() != 12 {
        return Err(Error::TaskSetSize(zone_sets.len()));
    }
    let start = match replication {
        1 => Visualization::Linear,
        2 => Visualization::Mosaic,
        other => {
            return Err(Error::InvalidQuestion(format!(
                "replication must be 1 or 2, got {other}"
            )))
        }
    };
    let mut rng = SplitMix64::new(seed);
    let seeds: Vec<u64> = (0..12).map(|_| rng.next_u64()).collect();

    let mut visualization = start;
    let mut entries = Vec::with_capacity(12);
    for (i, &q) in PRESENTATION_ORDER.iter().enumerate() {
        let question = generate_question(&zone_sets[q - 1], QUESTION_TASKS[q - 1], seeds[q - 1])?;
        entries.push(TaskEntry {
            position: i + 1,
            question_number: q,
            visualization,
            question,
        });
        visualization = visualization.other();
    }
    let set = TaskSet {
        replication,
        seed,
        entries,
    };
    debug_assert!(set.invariants_hold());
    Ok(set)
}
