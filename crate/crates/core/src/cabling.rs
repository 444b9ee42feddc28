//! Cabling (replacing strands by parallel bundles) and the four six-strand
//! braids derived from a four-strand braid `b`.
//!
//! * `Lb  = b on strands 1-4, then b on the cables (2,2,1,1)`
//! * `Rb  = b on strands 3-6, then b on the cables (1,1,2,2)`
//! * `L′b = b on the cables (1,2,1,2), then b on strands 3-6`
//! * `R′b = b on the cables (2,1,2,1), then b on strands 1-4`
//!
//! Internal associativity is `Lb = Rb`, external associativity `L′b = R′b`.

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::garside;
use crate::perm::Permutation;
use crate::word::BraidWord;

/// Bundle widths, one per strand of the braid being cabled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CableWidths(Vec<usize>);

impl CableWidths {
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        if widths.contains(&0) {
            return Err(BraidError::ZeroWidth);
        }
        Ok(CableWidths(widths))
    }

    pub fn widths(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The widths as seen at the bottom of a braid with permutation `perm`.
    pub fn push_forward(&self, perm: &Permutation) -> CableWidths {
        let mut out = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            out[perm.apply(i)] = w;
        }
        CableWidths(out)
    }

    /// 1-based initial position of the first strand in each cable.
    pub fn first_strands(&self) -> Vec<usize> {
        let mut start = 1;
        self.0
            .iter()
            .map(|&w| {
                let s = start;
                start += w;
                s
            })
            .collect()
    }
}

/// Replaces strand `j` of `w` by a bundle of `widths[j]` parallel strands.
///
/// A crossing of bundles of widths `P` (left) and `Q` (right) becomes a
/// `P·Q`-letter block transposition of the same sign.
pub fn cable(w: &BraidWord, widths: &CableWidths) -> Result<BraidWord> {
    if widths.len() != w.strands() {
        return Err(BraidError::WidthMismatch {
            widths: widths.len(),
            strands: w.strands(),
        });
    }
    let mut current = widths.0.clone();
    let mut letters = Vec::new();
    for &k in w.letters() {
        let i = k.unsigned_abs() as usize;
        let sign = k.signum();
        let start: usize = 1 + current[..i - 1].iter().sum::<usize>();
        let (p_width, q_width) = (current[i - 1], current[i]);
        for p in (1..=p_width).rev() {
            for q in 0..q_width {
                letters.push(sign * (start + p - 1 + q) as i32);
            }
        }
        current.swap(i - 1, i);
    }
    Ok(BraidWord::from_raw(widths.total(), letters))
}

fn require_four(b: &BraidWord) -> Result<()> {
    if b.strands() != 4 {
        return Err(BraidError::WrongStrandCount {
            expected: 4,
            actual: b.strands(),
        });
    }
    Ok(())
}

fn widths(w: [usize; 4]) -> CableWidths {
    CableWidths(w.to_vec())
}

fn then(first: BraidWord, second: BraidWord) -> BraidWord {
    BraidWord::chain(6, [&first, &second])
}

pub fn derive_l(b: &BraidWord) -> Result<BraidWord> {
    require_four(b)?;
    Ok(then(b.embed(6, 1)?, cable(b, &widths([2, 2, 1, 1]))?))
}

pub fn derive_r(b: &BraidWord) -> Result<BraidWord> {
    require_four(b)?;
    Ok(then(b.embed(6, 3)?, cable(b, &widths([1, 1, 2, 2]))?))
}

pub fn derive_lp(b: &BraidWord) -> Result<BraidWord> {
    require_four(b)?;
    Ok(then(cable(b, &widths([1, 2, 1, 2]))?, b.embed(6, 3)?))
}

pub fn derive_rp(b: &BraidWord) -> Result<BraidWord> {
    require_four(b)?;
    Ok(then(cable(b, &widths([2, 1, 2, 1]))?, b.embed(6, 1)?))
}

/// All four derived braids with both associativity verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedBraids {
    pub braid: BraidWord,
    #[serde(rename = "L")]
    pub l: BraidWord,
    #[serde(rename = "R")]
    pub r: BraidWord,
    #[serde(rename = "Lp")]
    pub lp: BraidWord,
    #[serde(rename = "Rp")]
    pub rp: BraidWord,
    pub internal_assoc: bool,
    pub external_assoc: bool,
}

pub fn derive_all(b: &BraidWord) -> Result<DerivedBraids> {
    let (l, r, lp, rp) = (derive_l(b)?, derive_r(b)?, derive_lp(b)?, derive_rp(b)?);
    let internal_assoc = garside::equals(&l, &r)?;
    let external_assoc = garside::equals(&lp, &rp)?;
    Ok(DerivedBraids {
        braid: b.clone(),
        l,
        r,
        lp,
        rp,
        internal_assoc,
        external_assoc,
    })
}
