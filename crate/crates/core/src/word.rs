//! Braid words and the operations on them that need no normal form.
//!
//! A word on `n` strands is a list of nonzero letters `k` with `|k| < n`;
//! the letter `k` stands for the Artin generator `σ_|k|` raised to the sign
//! of `k`. Words are read left to right, which is top to bottom in a
//! diagram. The positive generator `σ_i` is the strand at position `i`
//! crossing over the strand at position `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BraidError, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &k in &letters {
            if k == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if k.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: k, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Only for letters already known to be in range.
    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(Self::new(strands, letters.clone()).is_ok());
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "braid groups need at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `σ_|k|^sign(k)`.
    pub fn generator(strands: usize, k: i32) -> Result<Self> {
        Self::new(strands, vec![k])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Concatenation of words that are known to share a strand count.
    pub(crate) fn chain<'a>(
        strands: usize,
        parts: impl IntoIterator<Item = &'a BraidWord>,
    ) -> Self {
        let mut letters = Vec::new();
        for part in parts {
            assert_eq!(
                part.strands, strands,
                "chained words must share a strand count"
            );
            letters.extend_from_slice(&part.letters);
        }
        BraidWord { strands, letters }
    }

    /// `self` repeated `e` times; negative `e` repeats the inverse.
    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let reps = e.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    /// The word drawn rotated by half a turn in the plane of the diagram:
    /// letter order reversed and `σ_i` replaced by `σ_{n-i}` of the same sign.
    pub fn rotate180(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&k| k.signum() * (n - k.abs()))
                .collect(),
        }
    }

    /// Cancels adjacent `k, -k` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if out.last() == Some(&-k) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&k| i64::from(k.signum())).sum()
    }

    /// Image under the canonical map to the symmetric group.
    pub fn perm(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_images_unchecked(images)
    }

    /// Calls `f(left_strand, right_strand, sign)` for every letter, naming
    /// the two crossing strands by their 0-based initial positions.
    pub fn for_each_crossing(&self, mut f: impl FnMut(usize, usize, i32)) {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            f(at[i - 1], at[i], k.signum());
            at.swap(i - 1, i);
        }
    }

    /// The sub-braid left after removing the strands in `dead` (named by
    /// their initial positions), freely reduced.
    pub fn delete_strands(&self, dead: &StrandSet) -> Result<BraidWord> {
        let n = self.strands;
        if let Some(&bad) = dead.members.iter().find(|&&s| s == 0 || s > n) {
            return Err(BraidError::StrandOutOfRange {
                strand: bad,
                strands: n,
            });
        }
        if dead.members.len() >= n {
            return Err(BraidError::DeleteAll { strands: n });
        }
        let alive: Vec<bool> = (1..=n).map(|s| !dead.members.contains(&s)).collect();
        let mut at: Vec<usize> = (0..n).collect();
        let mut letters = Vec::new();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            let (left, right) = (at[i - 1], at[i]);
            if alive[left] && alive[right] {
                let survivors_through_left = at[..i].iter().filter(|&&s| alive[s]).count();
                letters.push(k.signum() * survivors_through_left as i32);
            }
            at.swap(i - 1, i);
        }
        Ok(BraidWord {
            strands: n - dead.members.len(),
            letters,
        }
        .free_reduce())
    }

    /// Places this word on strands `offset ..= offset + n - 1` of `B_total`.
    pub fn embed(&self, total: usize, offset: usize) -> Result<BraidWord> {
        if offset == 0 || offset + self.strands - 1 > total {
            return Err(BraidError::EmbedRange {
                strands: self.strands,
                total,
                offset,
            });
        }
        let shift = (offset - 1) as i32;
        Ok(BraidWord {
            strands: total,
            letters: self
                .letters
                .iter()
                .map(|&k| k.signum() * (k.abs() + shift))
                .collect(),
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        if self.letters.is_empty() {
            return write!(f, " ");
        }
        for k in &self.letters {
            write!(f, " {k}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `"n: k1 k2 ... km"`.
    fn from_str(text: &str) -> Result<Self> {
        let malformed = |reason: &str| BraidError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| malformed("missing ':' after the strand count"))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| malformed("strand count is not a positive integer"))?;
        let letters = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| malformed("letters must be integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of strands named by 1-based initial position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StrandSet {
    members: BTreeSet<usize>,
}

impl StrandSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        StrandSet {
            members: members.into_iter().collect(),
        }
    }

    pub fn contains(&self, strand: usize) -> bool {
        self.members.contains(&strand)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Where these strands sit after `perm`, as 1-based positions.
    pub fn push_forward(&self, perm: &Permutation) -> StrandSet {
        StrandSet::new(self.members.iter().map(|&s| perm.apply(s - 1) + 1))
    }
}

impl<const N: usize> From<[usize; N]> for StrandSet {
    fn from(members: [usize; N]) -> Self {
        StrandSet::new(members)
    }
}
