//! Left-greedy Garside normal form and the word problem in `B_n`.
//!
//! Every braid is written uniquely as `Δ^p · s_1 ⋯ s_k` where `Δ` is the
//! half twist and the `s_j` are positive permutation braids, none equal to
//! the identity or to `Δ`, with each adjacent pair left-weighted: the
//! starting set of `s_{j+1}` lies inside the finishing set of `s_j`.
//!
//! Simple elements are stored as their permutations. For a simple `s` with
//! permutation `π` (strand starting at `i` ends at `π(i)`):
//!
//! * `σ_i` left-divides `s` iff `π(i) > π(i+1)` (starting set),
//! * `σ_i` right-divides `s` iff `π⁻¹(i) > π⁻¹(i+1)` (finishing set),
//! * `Δ s Δ⁻¹` has permutation `r ∘ π ∘ r` with `r` the reversal.

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::word::BraidWord;

/// A positive permutation braid, identified with its permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimpleElement(Permutation);

impl SimpleElement {
    pub fn from_permutation(perm: Permutation) -> Self {
        SimpleElement(perm)
    }

    pub fn identity(n: usize) -> Self {
        SimpleElement(Permutation::identity(n))
    }

    pub fn delta(n: usize) -> Self {
        SimpleElement(Permutation::reversal(n))
    }

    /// The simple braid `σ_i` (1-based `i`).
    pub fn generator(n: usize, i: usize) -> Self {
        SimpleElement(Permutation::transposition(n, i - 1, i))
    }

    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.0
            .images()
            .iter()
            .enumerate()
            .all(|(i, &img)| img == n - 1 - i)
    }

    /// Length of the positive word, i.e. the number of crossing pairs.
    pub fn crossings(&self) -> usize {
        let p = self.0.images();
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// 1-based generators that left-divide this simple.
    pub fn starting_set(&self) -> Vec<usize> {
        let p = self.0.images();
        (0..p.len().saturating_sub(1))
            .filter(|&i| p[i] > p[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// 1-based generators that right-divide this simple.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.0.inverse();
        let q = inv.images();
        (0..q.len().saturating_sub(1))
            .filter(|&i| q[i] > q[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// A positive word for this simple (bubble sort of the final order).
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands();
        let target = self.0.images();
        // at[pos] = strand currently at pos; sort strands by final position
        let mut at: Vec<usize> = (0..n).collect();
        let mut letters = Vec::with_capacity(self.crossings());
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if target[at[i]] > target[at[i + 1]] {
                    at.swap(i, i + 1);
                    letters.push(i as i32 + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        BraidWord::from_raw(n, letters)
    }

    fn conjugate_by_delta(&self) -> SimpleElement {
        let n = self.strands();
        let p = self.0.images();
        SimpleElement(Permutation::from_images_unchecked(
            (0..n).map(|i| n - 1 - p[n - 1 - i]).collect(),
        ))
    }
}

// Pair normalisation works on raw 0-based images for speed.

#[inline]
fn inverse_into(p: &[usize], inv: &mut [usize]) {
    for (i, &img) in p.iter().enumerate() {
        inv[img] = i;
    }
}

/// Rewrites `(s, t)` in place into its left-weighted form `s' t'` with
/// `s t = s' t'`. Returns whether anything moved.
fn left_weight(s: &mut [usize], t: &mut [usize], s_inv: &mut [usize]) -> bool {
    let n = s.len();
    let mut moved = false;
    inverse_into(s, s_inv);
    loop {
        // find i with σ_i left-dividing t but not right-dividing s
        let found = (0..n - 1).find(|&i| t[i] > t[i + 1] && s_inv[i] < s_inv[i + 1]);
        let Some(i) = found else { break };
        // s ← s σ_i: exchange final positions i and i+1
        let (a, b) = (s_inv[i], s_inv[i + 1]);
        s[a] = i + 1;
        s[b] = i;
        s_inv.swap(i, i + 1);
        // t ← σ_i^{-1} t
        t.swap(i, i + 1);
        moved = true;
    }
    moved
}

/// Canonical form `Δ^delta · factors` of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub strands: usize,
    #[serde(rename = "delta")]
    pub delta_power: i64,
    pub factors: Vec<SimpleElement>,
}

impl NormalForm {
    pub fn is_trivial(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Canonical length (number of non-Δ factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Each adjacent pair satisfies the left-weightedness condition and no
    /// factor is trivial or the half twist.
    pub fn is_left_weighted(&self) -> bool {
        let proper = self
            .factors
            .iter()
            .all(|f| !f.is_identity() && !f.is_delta());
        let weighted = self.factors.windows(2).all(|pair| {
            let fin = pair[0].finishing_set();
            pair[1].starting_set().iter().all(|i| fin.contains(i))
        });
        proper && weighted
    }

    /// A braid word representing this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = SimpleElement::delta(n).to_word();
        let mut parts = vec![delta.pow(self.delta_power)];
        parts.extend(self.factors.iter().map(SimpleElement::to_word));
        BraidWord::chain(n, parts.iter())
    }
}

/// Incremental builder of left-weighted forms.
struct Builder {
    n: usize,
    delta_power: i64,
    factors: Vec<Vec<usize>>,
    scratch: Vec<usize>,
}

impl Builder {
    fn new(n: usize, delta_power: i64) -> Self {
        Builder {
            n,
            delta_power,
            factors: Vec::new(),
            scratch: vec![0; n],
        }
    }

    fn push(&mut self, simple: Vec<usize>) {
        self.factors.push(simple);
        let mut idx = self.factors.len() - 1;
        while idx > 0 {
            let (head, tail) = self.factors.split_at_mut(idx);
            if !left_weight(&mut head[idx - 1], &mut tail[0], &mut self.scratch) {
                break;
            }
            idx -= 1;
        }
        let n = self.n;
        let is_delta = |p: &Vec<usize>| p.iter().enumerate().all(|(i, &img)| img == n - 1 - i);
        let lead = self.factors.iter().take_while(|p| is_delta(p)).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.delta_power += lead as i64;
        }
        while self
            .factors
            .last()
            .is_some_and(|p| p.iter().enumerate().all(|(i, &img)| i == img))
        {
            self.factors.pop();
        }
    }

    fn finish(self) -> NormalForm {
        NormalForm {
            strands: self.n,
            delta_power: self.delta_power,
            factors: self
                .factors
                .into_iter()
                .map(|p| SimpleElement(Permutation::from_images_unchecked(p)))
                .collect(),
        }
    }
}

/// Left-greedy normal form of a word.
///
/// Each `σ_i⁻¹` is rewritten as `Δ⁻¹ · (Δσ_i⁻¹)`; the `Δ⁻¹` is then slid to
/// the front, conjugating every simple it passes by `Δ`. Only the parity of
/// the number of negative letters to the right of a letter matters.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let letters = w.letters();
    let negatives = letters.iter().filter(|&&k| k < 0).count();
    let mut builder = Builder::new(n, -(negatives as i64));
    if n == 1 {
        return builder.finish();
    }
    let mut negatives_after = negatives;
    for &k in letters {
        if k < 0 {
            negatives_after -= 1;
        }
        let i = k.unsigned_abs() as usize - 1;
        let mut simple: Vec<usize> = if k > 0 {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            p
        } else {
            // Δσ_i⁻¹: reversal followed by swapping final positions i, i+1
            (0..n)
                .map(|j| {
                    let img = n - 1 - j;
                    if img == i {
                        i + 1
                    } else if img == i + 1 {
                        i
                    } else {
                        img
                    }
                })
                .collect()
        };
        if negatives_after % 2 == 1 {
            simple = (0..n).map(|j| n - 1 - simple[n - 1 - j]).collect();
        }
        builder.push(simple);
    }
    builder.finish()
}

/// Decides whether two words represent the same braid.
pub fn equals(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u) == normal_form(v))
}

pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_trivial()
}

/// Totally ordered, hashable key with `key(u) == key(v)` iff `u` and `v` are equal braids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(NormalForm);

impl CanonicalKey {
    pub fn normal_form(&self) -> &NormalForm {
        &self.0
    }
}

pub fn canonical_key(w: &BraidWord) -> CanonicalKey {
    CanonicalKey(normal_form(w))
}

/// `Δ s Δ⁻¹` for a simple `s`.
pub fn conjugate_by_delta(s: &SimpleElement) -> SimpleElement {
    s.conjugate_by_delta()
}
