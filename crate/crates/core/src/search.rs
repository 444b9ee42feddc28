//! Exhaustive search over short words in `B_4`, and sampling of the coset
//! `H σ₂ K′` with `H = ⟨σ₂σ₁σ₃σ₂⟩` and `K′ = ⟨σ₁, σ₃⟩`.
//!
//! The search is an experiment, not an assertion: every interchanging class
//! it finds is classified, and any disagreement with the classification
//! (or with one of the necessary-condition screens) is reported as an
//! anomaly rather than raised as an error.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cabling;
use crate::error::{BraidError, Result};
use crate::garside::{self, CanonicalKey};
use crate::interchange::{self, ClassificationResult, EquivalenceClass, Screen};
use crate::word::BraidWord;

pub const DEFAULT_HARD_CAP: usize = 9;

/// Generators of `B_4` and their inverses, in enumeration order.
pub const GENERATORS: [i32; 6] = [1, -1, 2, -2, 3, -3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_len: usize,
    /// Skip the `B_6` checks for classes whose inner/outer profile already rules them out.
    pub screens_enabled: bool,
    pub workers: usize,
    pub hard_cap: usize,
    /// JSON-lines report destination, if any.
    pub output_path: Option<PathBuf>,
}

impl SearchConfig {
    pub fn new(max_len: usize) -> Self {
        SearchConfig {
            max_len,
            screens_enabled: true,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            hard_cap: DEFAULT_HARD_CAP,
            output_path: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_len == 0 {
            return Err(BraidError::Config("max_len must be positive".into()));
        }
        if self.workers == 0 {
            return Err(BraidError::Config("workers must be positive".into()));
        }
        if self.max_len > self.hard_cap {
            return Err(BraidError::SearchCap {
                requested: self.max_len,
                cap: self.hard_cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub key: CanonicalKey,
    pub witness: BraidWord,
    pub classification: ClassificationResult,
    pub equivalence_class: Option<EquivalenceClass>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AnomalyKind {
    /// Interchanging, but `classify` does not place it in the family.
    InterchangingOutsideFamily,
    /// `classify` places it in the family, but it is not interchanging.
    FamilyMemberNotInterchanging,
    /// Interchanging, yet it violates the inner/outer exponent pattern.
    ProfileContradiction,
    /// Interchanging, yet an applicable screen says it cannot be.
    ScreenContradiction { screen: Screen },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    pub witness: BraidWord,
    #[serde(flatten)]
    pub kind: AnomalyKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_len: usize,
    pub screens_enabled: bool,
    /// Freely reduced words of length `0..=max_len`.
    pub words_enumerated: u64,
    /// Words passing the candidate screen.
    pub candidates: u64,
    /// Distinct braids among the candidate words.
    pub candidate_classes: usize,
    /// Candidate classes skipped by the profile screen.
    pub profile_rejected: usize,
    /// Checked classes with `Lb = Rb` but `L′b ≠ R′b`.
    pub internal_only: usize,
    /// Checked classes with `L′b = R′b` but `Lb ≠ Rb`.
    pub external_only: usize,
    pub interchanging: Vec<ClassRecord>,
    pub anomalies: Vec<Anomaly>,
}

#[derive(Serialize)]
struct Summary<'a> {
    summary: SummaryBody<'a>,
}

#[derive(Serialize)]
struct SummaryBody<'a> {
    max_len: usize,
    screens_enabled: bool,
    words_enumerated: u64,
    candidates: u64,
    candidate_classes: usize,
    profile_rejected: usize,
    internal_only: usize,
    external_only: usize,
    interchanging_classes: usize,
    anomalies: &'a [Anomaly],
}

impl SearchReport {
    /// The `(n, sign)` of every interchanging class that classified into the family.
    pub fn family_members(&self) -> Vec<(u32, interchange::Sign)> {
        self.interchanging
            .iter()
            .filter_map(|r| r.classification.in_family())
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.anomalies.is_empty()
    }

    /// One JSON object per interchanging class, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for record in &self.interchanging {
            out.push_str(&serde_json::to_string(record).expect("class records serialize"));
            out.push('\n');
        }
        let summary = Summary {
            summary: SummaryBody {
                max_len: self.max_len,
                screens_enabled: self.screens_enabled,
                words_enumerated: self.words_enumerated,
                candidates: self.candidates,
                candidate_classes: self.candidate_classes,
                profile_rejected: self.profile_rejected,
                internal_only: self.internal_only,
                external_only: self.external_only,
                interchanging_classes: self.interchanging.len(),
                anomalies: &self.anomalies,
            },
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// Shorter words first, then lexicographic on letters.
fn better_witness(a: &[i32], b: &[i32]) -> bool {
    (a.len(), a) < (b.len(), b)
}

#[derive(Default)]
struct Shard {
    words: u64,
    candidates: u64,
    classes: BTreeMap<CanonicalKey, Vec<i32>>,
}

impl Shard {
    fn visit(&mut self, letters: &[i32]) {
        self.words += 1;
        let word = BraidWord::from_raw(4, letters.to_vec());
        let cand = interchange::is_candidate(&word).expect("four-strand word");
        if !cand.candidate {
            return;
        }
        self.candidates += 1;
        let key = garside::canonical_key(&word);
        match self.classes.get_mut(&key) {
            Some(best) => {
                if better_witness(letters, best) {
                    *best = letters.to_vec();
                }
            }
            None => {
                self.classes.insert(key, letters.to_vec());
            }
        }
    }

    /// Visits every freely reduced extension of `prefix` up to `max_len` letters.
    fn extend(&mut self, prefix: &mut Vec<i32>, max_len: usize) {
        self.visit(prefix);
        if prefix.len() == max_len {
            return;
        }
        for g in GENERATORS {
            if prefix.last() == Some(&-g) {
                continue;
            }
            prefix.push(g);
            self.extend(prefix, max_len);
            prefix.pop();
        }
    }

    fn merge(mut self, other: Shard) -> Shard {
        self.words += other.words;
        self.candidates += other.candidates;
        for (key, witness) in other.classes {
            match self.classes.get_mut(&key) {
                Some(best) => {
                    if better_witness(&witness, best) {
                        *best = witness;
                    }
                }
                None => {
                    self.classes.insert(key, witness);
                }
            }
        }
        self
    }
}

/// All freely reduced words of exactly `len` letters.
fn reduced_words(len: usize) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i32>| {
                let last = w.last().copied();
                GENERATORS
                    .iter()
                    .filter(move |&&g| last != Some(-g))
                    .map(move |&g| {
                        let mut next = w.clone();
                        next.push(g);
                        next
                    })
            })
            .collect();
    }
    out
}

enum ClassOutcome {
    Skipped,
    Checked {
        internal: bool,
        external: bool,
        record: Option<ClassRecord>,
        anomalies: Vec<Anomaly>,
    },
}

fn examine_class(key: &CanonicalKey, witness: &[i32], screens: bool) -> Result<ClassOutcome> {
    let word = BraidWord::from_raw(4, witness.to_vec());
    let profile = interchange::inner_outer_profile(&word)?;
    if screens && !profile.pattern_ok {
        return Ok(ClassOutcome::Skipped);
    }
    let report = interchange::is_interchanging(&word)?;
    let classification = interchange::classify(&word)?;
    let mut anomalies = Vec::new();
    let mut flag = |kind| {
        anomalies.push(Anomaly {
            witness: word.clone(),
            kind,
        })
    };
    if report.interchanging {
        if classification.in_family().is_none() {
            flag(AnomalyKind::InterchangingOutsideFamily);
        }
        if !profile.pattern_ok {
            flag(AnomalyKind::ProfileContradiction);
        }
        for outcome in interchange::obstruction_screens(&word)? {
            if outcome.verdict.failed() {
                flag(AnomalyKind::ScreenContradiction {
                    screen: outcome.screen,
                });
            }
        }
    } else if classification.in_family().is_some() {
        flag(AnomalyKind::FamilyMemberNotInterchanging);
    }
    let record = report.interchanging.then(|| ClassRecord {
        key: key.clone(),
        witness: word.clone(),
        classification,
        equivalence_class: interchange::equivalence_class(&classification).ok(),
    });
    Ok(ClassOutcome::Checked {
        internal: report.internal_assoc,
        external: report.external_assoc,
        record,
        anomalies,
    })
}

/// Enumerates every freely reduced word in `B_4` of length at most
/// `max_len`, keeps the interchange candidates, deduplicates them by normal
/// form, and checks each distinct braid for the associativity conditions.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| BraidError::Config(e.to_string()))?;

    let prefix_len = cfg.max_len.min(2);
    let prefixes = reduced_words(prefix_len);

    let (merged, outcomes) = pool.install(|| -> Result<_> {
        let mut short = Shard::default();
        for len in 0..prefix_len {
            for w in reduced_words(len) {
                short.visit(&w);
            }
        }
        let merged = prefixes
            .into_par_iter()
            .map(|mut prefix| {
                let mut shard = Shard::default();
                shard.extend(&mut prefix, cfg.max_len);
                shard
            })
            .reduce(Shard::default, Shard::merge)
            .merge(short);
        let classes: Vec<_> = merged.classes.iter().collect();
        let outcomes = classes
            .into_par_iter()
            .map(|(key, witness)| examine_class(key, witness, cfg.screens_enabled))
            .collect::<Result<Vec<_>>>()?;
        Ok((merged, outcomes))
    })?;

    let mut report = SearchReport {
        max_len: cfg.max_len,
        screens_enabled: cfg.screens_enabled,
        words_enumerated: merged.words,
        candidates: merged.candidates,
        candidate_classes: merged.classes.len(),
        profile_rejected: 0,
        internal_only: 0,
        external_only: 0,
        interchanging: Vec::new(),
        anomalies: Vec::new(),
    };
    // outcomes follow the key order of the class map
    for outcome in outcomes {
        match outcome {
            ClassOutcome::Skipped => report.profile_rejected += 1,
            ClassOutcome::Checked {
                internal,
                external,
                record,
                anomalies,
            } => {
                report.internal_only += usize::from(internal && !external);
                report.external_only += usize::from(external && !internal);
                report.interchanging.extend(record);
                report.anomalies.extend(anomalies);
            }
        }
    }
    for anomaly in &report.anomalies {
        log::warn!("search anomaly: {:?} for {}", anomaly.kind, anomaly.witness);
    }

    if let Some(path) = &cfg.output_path {
        let mut out = BufWriter::new(File::create(path)?);
        out.write_all(report.to_json_lines().as_bytes())?;
        out.flush()?;
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetSample {
    pub h: i64,
    pub a: i64,
    pub c: i64,
    pub word: BraidWord,
    pub internal_assoc: bool,
    pub candidate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReport {
    pub max_h: i64,
    pub max_k: i64,
    pub samples: Vec<CosetSample>,
    /// Samples where `Lb ≠ Rb`.
    pub violations: Vec<CosetSample>,
}

/// `(σ₂σ₁σ₃σ₂)^h σ₂ σ₁^a σ₃^c`.
pub fn coset_word(h: i64, a: i64, c: i64) -> BraidWord {
    let block = BraidWord::from_raw(4, vec![2, 1, 3, 2]).pow(h);
    let mid = BraidWord::from_raw(4, vec![2]);
    let s1 = BraidWord::from_raw(4, vec![1]).pow(a);
    let s3 = BraidWord::from_raw(4, vec![3]).pow(c);
    BraidWord::chain(4, [&block, &mid, &s1, &s3])
}

/// Checks `Lb = Rb` on every `(σ₂σ₁σ₃σ₂)^h σ₂ σ₁^a σ₃^c` with
/// `|h| ≤ max_h` and `|a|, |c| ≤ max_k`.
pub fn coset_property_sample(max_h: i64, max_k: i64) -> Result<CosetReport> {
    if max_h < 0 || max_k < 0 {
        return Err(BraidError::Config(
            "coset bounds must be nonnegative".into(),
        ));
    }
    let mut grid = Vec::new();
    for h in -max_h..=max_h {
        for a in -max_k..=max_k {
            for c in -max_k..=max_k {
                grid.push((h, a, c));
            }
        }
    }
    let samples = grid
        .into_par_iter()
        .map(|(h, a, c)| -> Result<CosetSample> {
            let word = coset_word(h, a, c);
            let internal_assoc =
                garside::equals(&cabling::derive_l(&word)?, &cabling::derive_r(&word)?)?;
            let candidate = interchange::is_candidate(&word)?.candidate;
            Ok(CosetSample {
                h,
                a,
                c,
                word,
                internal_assoc,
                candidate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let violations = samples
        .iter()
        .filter(|s| !s.internal_assoc)
        .cloned()
        .collect();
    Ok(CosetReport {
        max_h,
        max_k,
        samples,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interchange::Sign;

    #[test]
    fn reduced_word_counts() {
        assert_eq!(reduced_words(0).len(), 1);
        assert_eq!(reduced_words(1).len(), 6);
        assert_eq!(reduced_words(3).len(), 6 * 5 * 5);
    }

    #[test]
    fn length_one() {
        let mut cfg = SearchConfig::new(1);
        cfg.workers = 2;
        let report = run_search(&cfg).unwrap();
        assert_eq!(report.words_enumerated, 7);
        let mut members = report.family_members();
        members.sort();
        assert_eq!(members, vec![(0, Sign::Plus), (0, Sign::Minus)]);
        assert!(report.is_consistent());
    }

    #[test]
    fn cap_and_config_errors() {
        let mut cfg = SearchConfig::new(10);
        assert_eq!(
            run_search(&cfg),
            Err(BraidError::SearchCap {
                requested: 10,
                cap: 9
            })
        );
        cfg.max_len = 0;
        assert!(matches!(run_search(&cfg), Err(BraidError::Config(_))));
        cfg.max_len = 2;
        cfg.workers = 0;
        assert!(matches!(run_search(&cfg), Err(BraidError::Config(_))));
    }

    #[test]
    fn witnesses_prefer_short_words() {
        assert!(better_witness(&[2], &[1, 2]));
        assert!(better_witness(&[-1, 2], &[1, 2]));
        assert!(!better_witness(&[2, 1], &[2, 1]));
    }

    #[test]
    fn coset_words() {
        assert_eq!(coset_word(0, 0, 0).to_string(), "4: 2");
        assert_eq!(coset_word(1, -1, -1).to_string(), "4: 2 1 3 2 2 -1 -3");
        assert_eq!(coset_word(-1, 2, 0).to_string(), "4: -2 -3 -1 -2 2 1 1");
        assert!(coset_property_sample(-1, 0).is_err());
    }
}
