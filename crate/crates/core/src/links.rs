//! Closures of braids: components and pairwise linking numbers.
//!
//! The components of the closure are the cycles of the braid's permutation.
//! Every crossing joins either two components (contributing its sign to
//! their linking tally) or one component with itself. Linking numbers are
//! half the inter-component tallies and are invariant under conjugation,
//! which makes them a certificate that two braids are *not* conjugate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLinking {
    /// Indices into `components`, `first < second`.
    pub first: usize,
    pub second: usize,
    pub lk: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkSummary {
    /// 1-based strands of each component, ordered by smallest strand.
    pub components: Vec<Vec<usize>>,
    pub pairwise_lk: Vec<PairLinking>,
    /// Signed self-crossing count of each component.
    pub writhe_per_component: Vec<i64>,
}

impl LinkSummary {
    /// Component sizes, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.components.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Linking numbers of all component pairs, sorted.
    pub fn lk_multiset(&self) -> Vec<i64> {
        let mut lks: Vec<i64> = self.pairwise_lk.iter().map(|p| p.lk).collect();
        lks.sort_unstable();
        lks
    }

    pub fn lk(&self, first: usize, second: usize) -> Option<i64> {
        let (a, b) = if first < second {
            (first, second)
        } else {
            (second, first)
        };
        self.pairwise_lk
            .iter()
            .find(|p| p.first == a && p.second == b)
            .map(|p| p.lk)
    }
}

pub fn closure_summary(b: &BraidWord) -> LinkSummary {
    let perm = b.perm();
    let cycles = perm.cycles();
    let mut component_of = vec![0; b.strands()];
    for (c, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            component_of[s] = c;
        }
    }
    let mut self_tally = vec![0i64; cycles.len()];
    let mut pair_tally: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    b.for_each_crossing(|left, right, sign| {
        let (a, c) = (component_of[left], component_of[right]);
        if a == c {
            self_tally[a] += i64::from(sign);
        } else {
            *pair_tally.entry((a.min(c), a.max(c))).or_default() += i64::from(sign);
        }
    });
    let mut pairwise_lk = Vec::new();
    for first in 0..cycles.len() {
        for second in first + 1..cycles.len() {
            let tally = pair_tally.get(&(first, second)).copied().unwrap_or(0);
            assert!(
                tally % 2 == 0,
                "odd crossing tally {tally} between closure components of {b}"
            );
            pairwise_lk.push(PairLinking {
                first,
                second,
                lk: tally / 2,
            });
        }
    }
    LinkSummary {
        components: cycles
            .into_iter()
            .map(|cycle| {
                let mut strands: Vec<usize> = cycle.into_iter().map(|s| s + 1).collect();
                strands.sort_unstable();
                strands
            })
            .collect(),
        pairwise_lk,
        writhe_per_component: self_tally,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distinction {
    CycleType,
    LinkingNumbers,
    ExponentSum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConjugacyVerdict {
    /// The closures differ, so the braids are not conjugate.
    DistinctClosures { reasons: Vec<Distinction> },
    /// No invariant here tells them apart; conjugacy is not claimed.
    Inconclusive,
}

impl ConjugacyVerdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, ConjugacyVerdict::DistinctClosures { .. })
    }
}

pub fn conjugacy_certificate(u: &BraidWord, v: &BraidWord) -> Result<ConjugacyVerdict> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let (su, sv) = (closure_summary(u), closure_summary(v));
    let mut reasons = Vec::new();
    if su.cycle_type() != sv.cycle_type() {
        reasons.push(Distinction::CycleType);
    }
    if su.lk_multiset() != sv.lk_multiset() {
        reasons.push(Distinction::LinkingNumbers);
    }
    if u.exponent_sum() != v.exponent_sum() {
        reasons.push(Distinction::ExponentSum);
    }
    Ok(if reasons.is_empty() {
        ConjugacyVerdict::Inconclusive
    } else {
        ConjugacyVerdict::DistinctClosures { reasons }
    })
}

/// The two sides of the conjugation identity a braiding on enriched
/// categories built from `c^k` would need: `(σ₁σ₃)^k` and `(σ₂σ₁σ₃σ₂)^k`.
pub fn braiding_obstruction_pair(k: i64) -> Result<(BraidWord, BraidWord)> {
    if k % 2 == 0 {
        return Err(BraidError::EvenExponent(k));
    }
    let parallel = BraidWord::new(4, vec![1, 3])?.pow(k);
    let crossed = BraidWord::new(4, vec![2, 1, 3, 2])?.pow(k);
    Ok((parallel, crossed))
}

/// True when the closures certify that `(σ₁σ₃)^k` and `(σ₂σ₁σ₃σ₂)^k` are
/// not conjugate, so no braid can conjugate one into the other.
pub fn braiding_obstruction(k: i64) -> Result<bool> {
    let (parallel, crossed) = braiding_obstruction_pair(k)?;
    Ok(conjugacy_certificate(&parallel, &crossed)?.is_distinct())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub k: i64,
    pub parallel: BraidWord,
    pub crossed: BraidWord,
    pub parallel_lk: Vec<i64>,
    pub crossed_lk: Vec<i64>,
    pub verdict: ConjugacyVerdict,
}

pub fn obstruction_report(k: i64) -> Result<ObstructionReport> {
    let (parallel, crossed) = braiding_obstruction_pair(k)?;
    Ok(ObstructionReport {
        k,
        parallel_lk: closure_summary(&parallel).lk_multiset(),
        crossed_lk: closure_summary(&crossed).lk_multiset(),
        verdict: conjugacy_certificate(&parallel, &crossed)?,
        parallel,
        crossed,
    })
}
