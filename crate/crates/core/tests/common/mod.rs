#![allow(dead_code)]

pub mod props;

use interbraid::BraidWord;
use proptest::prelude::*;
use rand::Rng;

/// Reduced word in the free group on `x_1..x_n`; letters are signed 1-based.
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

fn invert(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|x| -x).collect()
}

/// Images of the free generators under the Artin action of `w`.
///
/// `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`.
pub fn artin_action(w: &BraidWord) -> Vec<FreeWord> {
    let n = w.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for &k in w.letters() {
        let i = k.unsigned_abs() as usize - 1;
        let (a, b) = (images[i].clone(), images[i + 1].clone());
        let (new_i, new_next) = if k > 0 {
            // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            (concat_reduced(&[&a, &b, &invert(&a)]), a)
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
            (b.clone(), concat_reduced(&[&invert(&b), &a, &b]))
        };
        images[i] = new_i;
        images[i + 1] = new_next;
    }
    images
}

fn concat_reduced(parts: &[&[i32]]) -> FreeWord {
    let mut out = Vec::new();
    for part in parts {
        for &x in *part {
            push_reduced(&mut out, x);
        }
    }
    out
}

/// Word problem decided by faithfulness of the Artin representation.
pub fn oracle_equal(u: &BraidWord, v: &BraidWord) -> bool {
    u.strands() == v.strands() && artin_action(u) == artin_action(v)
}

pub fn oracle_trivial(w: &BraidWord) -> bool {
    oracle_equal(w, &BraidWord::identity(w.strands()))
}

pub fn word(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let gens = (1..n as i32).flat_map(|i| [i, -i]).collect::<Vec<_>>();
    prop::collection::vec(prop::sample::select(gens), 0..=max_len)
}

pub fn braid(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

pub fn braid_any(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| braid(n, max_len))
}

/// Applies one random braid relation, commutation or free insertion.
pub fn rewrite_once<R: Rng>(w: &BraidWord, rng: &mut R) -> BraidWord {
    let n = w.strands() as i32;
    let mut l = w.letters().to_vec();
    for _ in 0..8 {
        match rng.gen_range(0..4) {
            0 => {
                let pos = rng.gen_range(0..=l.len());
                let g = rng.gen_range(1..n) * if rng.gen() { 1 } else { -1 };
                l.splice(pos..pos, [g, -g]);
                return BraidWord::new(w.strands(), l).unwrap();
            }
            1 if l.len() >= 2 => {
                let pos = rng.gen_range(0..l.len() - 1);
                if (l[pos].abs() - l[pos + 1].abs()).abs() >= 2 {
                    l.swap(pos, pos + 1);
                    return BraidWord::new(w.strands(), l).unwrap();
                }
            }
            2 if l.len() >= 3 => {
                let pos = rng.gen_range(0..l.len() - 2);
                let (a, b, c) = (l[pos], l[pos + 1], l[pos + 2]);
                let same_sign = a.signum() == b.signum() && b.signum() == c.signum();
                if same_sign && a == c && (a.abs() - b.abs()).abs() == 1 {
                    l[pos] = b;
                    l[pos + 1] = a;
                    l[pos + 2] = b;
                    return BraidWord::new(w.strands(), l).unwrap();
                }
            }
            3 if l.len() >= 2 => {
                let pos = rng.gen_range(0..l.len() - 1);
                if l[pos] == -l[pos + 1] {
                    l.drain(pos..pos + 2);
                    return BraidWord::new(w.strands(), l).unwrap();
                }
            }
            _ => {}
        }
    }
    // fall back to a free insertion, which always applies
    let pos = rng.gen_range(0..=l.len());
    l.splice(pos..pos, [1, -1]);
    BraidWord::new(w.strands(), l).unwrap()
}

/// A chain of `steps` random rewrites; the result equals `w` in the braid group.
pub fn rewrite<R: Rng>(w: &BraidWord, steps: usize, rng: &mut R) -> BraidWord {
    let mut out = w.clone();
    for _ in 0..steps {
        out = rewrite_once(&out, rng);
    }
    out
}

/// Appends a positive permutation braid so the result has permutation (2 3).
pub fn with_middle_permutation(w: &BraidWord) -> BraidWord {
    use interbraid::{Permutation, SimpleElement};
    let target = Permutation::transposition(4, 1, 2);
    let fix = w.perm().inverse().then(&target);
    let tail = SimpleElement::from_permutation(fix).to_word();
    w.concat(&tail).unwrap()
}
