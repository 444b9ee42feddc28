//! Deciding which four-strand braids can serve as a coherent interchange.
//!
//! A four-strand braid `b` is an *interchange candidate* when its
//! permutation is the transposition `(2 3)` and deleting any of the strand
//! pairs `{1,2}`, `{3,4}`, `{1,3}`, `{2,4}` leaves the trivial braid. It is
//! *interchanging* when additionally `Lb = Rb` and `L′b = R′b` in `B_6`.
//!
//! The interchanging braids are exactly the family
//! `b_{n±} = (σ₂σ₁σ₃σ₂)^{±n} σ₂^{±1} (σ₁σ₃)^{∓n}`. Classification here does
//! not take that for granted: it narrows to a single `(n, ±)` using the
//! inner/outer sub-braid exponents and then checks equality with the
//! family member directly.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cabling::{self, cable, CableWidths};
use crate::error::{BraidError, Result};
use crate::garside;
use crate::perm::Permutation;
use crate::word::{BraidWord, StrandSet};

/// The strand pairs whose deletion must leave the trivial braid.
pub const UNIT_DELETIONS: [(usize, usize); 4] = [(1, 2), (3, 4), (1, 3), (2, 4)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn as_i32(self) -> i32 {
        self.as_i64() as i32
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(format!("sign must be '+' or '-', got {other:?}")),
        }
    }
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

fn b4(letters: &[i32]) -> BraidWord {
    BraidWord::from_raw(4, letters.to_vec())
}

/// `(σ₂σ₁σ₃σ₂)^{±n} σ₂^{±1} (σ₁σ₃)^{∓n}`, spelled letter for letter with
/// the sign applied to each generator.
pub fn family(n: u32, sign: Sign) -> BraidWord {
    let s = sign.as_i32();
    let mut letters = Vec::with_capacity(7 * n as usize + 1);
    for _ in 0..n {
        letters.extend([2 * s, s, 3 * s, 2 * s]);
    }
    letters.push(2 * s);
    for _ in 0..n {
        letters.extend([-s, -3 * s]);
    }
    b4(&letters)
}

/// `(σ₁σ₃)^{∓n} σ₂^{±1} (σ₂σ₁σ₃σ₂)^{±n}`, the second spelling of `b_{n±}`.
pub fn family_alternate(n: u32, sign: Sign) -> BraidWord {
    let s = sign.as_i32();
    let mut letters = Vec::new();
    for _ in 0..n {
        letters.extend([-s, -3 * s]);
    }
    letters.push(2 * s);
    for _ in 0..n {
        letters.extend([2 * s, s, 3 * s, 2 * s]);
    }
    b4(&letters)
}

/// The permutation `(2 3)` required of every candidate.
pub fn middle_transposition() -> Permutation {
    Permutation::transposition(4, 1, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub candidate: bool,
    pub permutation_ok: bool,
    pub unit_failures: Vec<(usize, usize)>,
}

pub fn is_candidate(b: &BraidWord) -> Result<CandidateReport> {
    require_four(b)?;
    let permutation_ok = b.perm() == middle_transposition();
    let mut unit_failures = Vec::new();
    for (x, y) in UNIT_DELETIONS {
        let sub = b.delete_strands(&StrandSet::from([x, y]))?;
        if !garside::is_trivial(&sub) {
            unit_failures.push((x, y));
        }
    }
    Ok(CandidateReport {
        candidate: permutation_ok && unit_failures.is_empty(),
        permutation_ok,
        unit_failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterchangeReport {
    pub candidate: bool,
    pub permutation_ok: bool,
    pub unit_failures: Vec<(usize, usize)>,
    pub internal_assoc: bool,
    pub external_assoc: bool,
    pub interchanging: bool,
}

pub fn is_interchanging(b: &BraidWord) -> Result<InterchangeReport> {
    let cand = is_candidate(b)?;
    let internal_assoc = garside::equals(&cabling::derive_l(b)?, &cabling::derive_r(b)?)?;
    let external_assoc = garside::equals(&cabling::derive_lp(b)?, &cabling::derive_rp(b)?)?;
    Ok(InterchangeReport {
        interchanging: cand.candidate && internal_assoc && external_assoc,
        candidate: cand.candidate,
        permutation_ok: cand.permutation_ok,
        unit_failures: cand.unit_failures,
        internal_assoc,
        external_assoc,
    })
}

/// Exponents of the two-strand sub-braids: `inner` after deleting strands
/// 1 and 4, `outer` after deleting strands 2 and 3. `B_2` is infinite
/// cyclic, so each sub-braid is `σ₁^e` with `e` its exponent sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerOuterProfile {
    pub inner: i64,
    pub outer: i64,
    pub pattern_ok: bool,
}

impl InnerOuterProfile {
    pub fn from_exponents(inner: i64, outer: i64) -> Self {
        let pattern_ok =
            inner % 2 != 0 && (inner - outer).abs() == 1 && inner.signum() * outer.signum() >= 0;
        InnerOuterProfile {
            inner,
            outer,
            pattern_ok,
        }
    }

    /// The only family member with this profile, if the pattern holds.
    pub fn family_index(&self) -> Option<(u32, Sign)> {
        if !self.pattern_ok {
            return None;
        }
        let n = self.inner.abs().min(self.outer.abs());
        let sign = if self.inner > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Some((u32::try_from(n).ok()?, sign))
    }

    /// Expected profile of `b_{n±}`.
    pub fn of_family(n: u32, sign: Sign) -> Self {
        let n = i64::from(n);
        let s = sign.as_i64();
        if n % 2 == 1 {
            Self::from_exponents(s * n, s * (n + 1))
        } else {
            Self::from_exponents(s * (n + 1), s * n)
        }
    }
}

pub fn inner_outer_profile(b: &BraidWord) -> Result<InnerOuterProfile> {
    require_four(b)?;
    let inner = b.delete_strands(&StrandSet::from([1, 4]))?.exponent_sum();
    let outer = b.delete_strands(&StrandSet::from([2, 3]))?.exponent_sum();
    Ok(InnerOuterProfile::from_exponents(inner, outer))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefusalReason {
    BadPermutation,
    UnitFailure,
    ProfileMismatch,
    AssociativityFailure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ClassificationResult {
    InFamily { n: u32, sign: Sign },
    NotInterchanging { reason: RefusalReason },
}

impl ClassificationResult {
    pub fn in_family(&self) -> Option<(u32, Sign)> {
        match *self {
            ClassificationResult::InFamily { n, sign } => Some((n, sign)),
            ClassificationResult::NotInterchanging { .. } => None,
        }
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationResult::InFamily { n, sign } => write!(f, "b_{{{n}{sign}}}"),
            ClassificationResult::NotInterchanging { reason } => {
                write!(f, "not interchanging ({reason:?})")
            }
        }
    }
}

/// Locates `b` in the family `b_{n±}` or says which condition it violates.
///
/// When the candidate and profile screens pass but `b` differs from the
/// family member they point to, the associativity checks decide between
/// `AssociativityFailure` and an anomalous `ProfileMismatch`; the latter
/// would be an interchanging braid outside the family and is logged.
pub fn classify(b: &BraidWord) -> Result<ClassificationResult> {
    use ClassificationResult::NotInterchanging;
    let cand = is_candidate(b)?;
    if !cand.permutation_ok {
        return Ok(NotInterchanging {
            reason: RefusalReason::BadPermutation,
        });
    }
    if !cand.unit_failures.is_empty() {
        return Ok(NotInterchanging {
            reason: RefusalReason::UnitFailure,
        });
    }
    let profile = inner_outer_profile(b)?;
    let Some((n, sign)) = profile.family_index() else {
        return Ok(NotInterchanging {
            reason: RefusalReason::ProfileMismatch,
        });
    };
    if garside::equals(b, &family(n, sign))? {
        return Ok(ClassificationResult::InFamily { n, sign });
    }
    let report = is_interchanging(b)?;
    if report.interchanging {
        log::warn!(
            "interchanging braid {b} has the profile of b_{{{n}{sign}}} but is not equal to it"
        );
        Ok(NotInterchanging {
            reason: RefusalReason::ProfileMismatch,
        })
    } else {
        Ok(NotInterchanging {
            reason: RefusalReason::AssociativityFailure,
        })
    }
}

/// The two classes of interchanging braids, represented by `σ₂` and `σ₂⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquivalenceClass {
    Plus,
    Minus,
}

impl EquivalenceClass {
    pub fn representative(self) -> BraidWord {
        match self {
            EquivalenceClass::Plus => family(0, Sign::Plus),
            EquivalenceClass::Minus => family(0, Sign::Minus),
        }
    }

    /// The class whose composite outer-inverse-then-inner crossing is `σ₁^{inner-outer}`.
    pub fn from_profile(profile: &InnerOuterProfile) -> Option<Self> {
        match profile.inner - profile.outer {
            1 => Some(EquivalenceClass::Plus),
            -1 => Some(EquivalenceClass::Minus),
            _ => None,
        }
    }
}

pub fn equivalence_class(r: &ClassificationResult) -> Result<EquivalenceClass> {
    let (n, sign) = r.in_family().ok_or(BraidError::NotInFamily)?;
    let even = n % 2 == 0;
    Ok(match (sign, even) {
        (Sign::Plus, true) | (Sign::Minus, false) => EquivalenceClass::Plus,
        _ => EquivalenceClass::Minus,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Screen {
    /// Strands 2 and 3 each deletable to the identity: only `σ₂^{±1}` survive.
    MiddleStrandsFree,
    /// Inner pair deletable to the identity: strands 2 and 3 must each be.
    InnerPairFree,
    /// Deleting strand 1 or 4 leaves a power of the middle crossing: it must be a single crossing.
    SingleMiddleCrossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ScreenVerdict {
    NotApplicable,
    Applicable { pass: bool },
}

impl ScreenVerdict {
    pub fn failed(&self) -> bool {
        matches!(self, ScreenVerdict::Applicable { pass: false })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenOutcome {
    pub screen: Screen,
    pub verdict: ScreenVerdict,
}

/// If deleting `dead` leaves `σ_middle^m` in `B_3`, returns `m`.
fn middle_power(b: &BraidWord, dead: usize, middle: i32) -> Result<Option<i64>> {
    let sub = b.delete_strands(&StrandSet::from([dead]))?;
    let m = sub.exponent_sum();
    let power = BraidWord::from_raw(3, vec![middle]).pow(m);
    Ok(garside::equals(&sub, &power)?.then_some(m))
}

/// Cheap necessary conditions for being interchanging, each applicable only
/// to candidates meeting its hypothesis. A failing screen rules `b` out
/// without any work in `B_6`.
pub fn obstruction_screens(b: &BraidWord) -> Result<Vec<ScreenOutcome>> {
    let cand = is_candidate(b)?;
    let free = |dead: &[usize]| -> Result<bool> {
        Ok(garside::is_trivial(
            &b.delete_strands(&StrandSet::new(dead.iter().copied()))?,
        ))
    };
    let second_free = free(&[2])?;
    let third_free = free(&[3])?;

    let a = if cand.candidate && second_free && third_free {
        let pass = garside::equals(b, &b4(&[2]))? || garside::equals(b, &b4(&[-2]))?;
        ScreenVerdict::Applicable { pass }
    } else {
        ScreenVerdict::NotApplicable
    };

    let b_screen = if cand.candidate && free(&[2, 3])? {
        ScreenVerdict::Applicable {
            pass: second_free && third_free,
        }
    } else {
        ScreenVerdict::NotApplicable
    };

    // deleting strand 1 puts the middle strands at positions 1,2; deleting strand 4 at 2,3
    let c = match (middle_power(b, 1, 1)?, middle_power(b, 4, 2)?) {
        (Some(m1), Some(m4)) if cand.candidate && m1 == m4 => ScreenVerdict::Applicable {
            pass: m1.abs() == 1,
        },
        _ => ScreenVerdict::NotApplicable,
    };

    Ok(vec![
        ScreenOutcome {
            screen: Screen::MiddleStrandsFree,
            verdict: a,
        },
        ScreenOutcome {
            screen: Screen::InnerPairFree,
            verdict: b_screen,
        },
        ScreenOutcome {
            screen: Screen::SingleMiddleCrossing,
            verdict: c,
        },
    ])
}

fn require_odd(k: i64) -> Result<()> {
    if k % 2 == 0 {
        return Err(BraidError::EvenExponent(k));
    }
    Ok(())
}

/// The two legs of the first hexagon with `c^k` in place of `c`:
/// `σ₁^k σ₂^k` against the `(1,2)`-cabling of `σ₁^k`.
pub fn hexagon_legs(k: i64) -> Result<(BraidWord, BraidWord)> {
    require_odd(k)?;
    let g1 = BraidWord::from_raw(3, vec![1]).pow(k);
    let g2 = BraidWord::from_raw(3, vec![2]).pow(k);
    let left = BraidWord::chain(3, [&g1, &g2]);
    let right = cable(
        &BraidWord::from_raw(2, vec![1]).pow(k),
        &CableWidths::new(vec![1, 2])?,
    )?;
    Ok((left, right))
}

/// Whether `c^k` passes the first hexagon at the level of braids.
pub fn hexagon_check(k: i64) -> Result<bool> {
    let (left, right) = hexagon_legs(k)?;
    garside::equals(&left, &right)
}

/// The second hexagon: `σ₂^k σ₁^k` against the `(2,1)`-cabling of `σ₁^k`.
pub fn hexagon_check_second(k: i64) -> Result<bool> {
    require_odd(k)?;
    let g1 = BraidWord::from_raw(3, vec![1]).pow(k);
    let g2 = BraidWord::from_raw(3, vec![2]).pow(k);
    let left = BraidWord::chain(3, [&g2, &g1]);
    let right = cable(
        &BraidWord::from_raw(2, vec![1]).pow(k),
        &CableWidths::new(vec![2, 1])?,
    )?;
    garside::equals(&left, &right)
}

/// Both hexagon checks for `c^k`, with the legs of the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonReport {
    pub k: i64,
    pub left: BraidWord,
    pub right: BraidWord,
    pub first: bool,
    pub second: bool,
}

pub fn hexagon_report(k: i64) -> Result<HexagonReport> {
    let (left, right) = hexagon_legs(k)?;
    let first = garside::equals(&left, &right)?;
    Ok(HexagonReport {
        k,
        left,
        right,
        first,
        second: hexagon_check_second(k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equals;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn hexagon_report_matches_checks() {
        let r = hexagon_report(3).unwrap();
        assert_eq!(r.left, "3: 1 1 1 2 2 2".parse().unwrap());
        assert!(!r.first && !r.second);
        assert!(hexagon_report(-1).unwrap().first);
        assert!(hexagon_report(4).is_err());
    }

    #[test]
    fn family_words() {
        assert_eq!(family(0, Sign::Plus), w("4: 2"));
        assert_eq!(family(0, Sign::Minus), w("4: -2"));
        assert_eq!(family(1, Sign::Minus), w("4: -2 -1 -3 -2 -2 1 3"));
        assert_eq!(family(2, Sign::Plus), w("4: 2 1 3 2 2 1 3 2 2 -1 -3 -1 -3"));
        assert_eq!(family_alternate(1, Sign::Plus), w("4: -1 -3 2 2 1 3 2"));
    }

    #[test]
    fn candidate_examples() {
        assert!(is_candidate(&w("4: 2")).unwrap().candidate);
        assert!(is_candidate(&w("4: 2 2 2")).unwrap().candidate);
        let r = is_candidate(&w("4: 1 1 2")).unwrap();
        assert!(!r.candidate);
        assert!(r.permutation_ok);
        assert!(r.unit_failures.contains(&(3, 4)));
        let r = is_candidate(&w("4: 1")).unwrap();
        assert!(!r.permutation_ok);
        assert!(is_candidate(&w("3: 1")).is_err());
    }

    #[test]
    fn interchanging_examples() {
        assert!(is_interchanging(&w("4: 2")).unwrap().interchanging);
        let r = is_interchanging(&w("4: 2 2 2")).unwrap();
        assert!(r.candidate && !r.internal_assoc && !r.external_assoc && !r.interchanging);
        assert!(
            is_interchanging(&family(1, Sign::Minus))
                .unwrap()
                .interchanging
        );
    }

    #[test]
    fn profiles() {
        assert_eq!(
            inner_outer_profile(&w("4: 2")).unwrap(),
            InnerOuterProfile {
                inner: 1,
                outer: 0,
                pattern_ok: true
            }
        );
        assert_eq!(
            inner_outer_profile(&family(1, Sign::Minus)).unwrap(),
            InnerOuterProfile {
                inner: -1,
                outer: -2,
                pattern_ok: true
            }
        );
        let p = inner_outer_profile(&w("4: 2 2 2")).unwrap();
        assert_eq!((p.inner, p.outer, p.pattern_ok), (3, 0, false));
        assert!(!InnerOuterProfile::from_exponents(2, 1).pattern_ok);
        assert!(!InnerOuterProfile::from_exponents(1, -1).pattern_ok);
        assert_eq!(
            InnerOuterProfile::from_exponents(3, 2).family_index(),
            Some((2, Sign::Plus))
        );
        assert_eq!(
            InnerOuterProfile::from_exponents(-3, -4).family_index(),
            Some((3, Sign::Minus))
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&w("4: 2")).unwrap(),
            ClassificationResult::InFamily {
                n: 0,
                sign: Sign::Plus
            }
        );
        let b1 = ClassificationResult::InFamily {
            n: 1,
            sign: Sign::Plus,
        };
        assert_eq!(classify(&w("4: 2 1 3 2 2 -1 -3")).unwrap(), b1);
        assert_eq!(classify(&w("4: -1 -3 2 2 1 3 2")).unwrap(), b1);
        assert_eq!(
            classify(&w("4: 2 2 2")).unwrap(),
            ClassificationResult::NotInterchanging {
                reason: RefusalReason::ProfileMismatch
            }
        );
        assert_eq!(
            classify(&w("4: 1")).unwrap(),
            ClassificationResult::NotInterchanging {
                reason: RefusalReason::BadPermutation
            }
        );
        assert_eq!(
            classify(&w("4: 1 1 2")).unwrap(),
            ClassificationResult::NotInterchanging {
                reason: RefusalReason::UnitFailure
            }
        );
    }

    #[test]
    fn classify_refuses_brunnian_lookalikes() {
        // σ₂ times the Brunnian commutator [σ₁², σ₂²]: every two-strand
        // deletion matches σ₂, yet the braid differs from it
        let x = w("4: 1 1");
        let y = w("4: 2 2");
        let comm = BraidWord::chain(4, [&x, &y, &x.inverse(), &y.inverse()]);
        let b = BraidWord::chain(4, [&w("4: 2"), &comm]);
        assert!(is_candidate(&b).unwrap().candidate);
        assert_eq!(
            inner_outer_profile(&b).unwrap(),
            inner_outer_profile(&w("4: 2")).unwrap()
        );
        assert!(!equals(&b, &w("4: 2")).unwrap());
        assert_eq!(
            classify(&b).unwrap(),
            ClassificationResult::NotInterchanging {
                reason: RefusalReason::AssociativityFailure
            }
        );
        assert!(obstruction_screens(&b).unwrap()[0].verdict.failed());
    }

    #[test]
    fn classes() {
        let class =
            |n, sign| equivalence_class(&ClassificationResult::InFamily { n, sign }).unwrap();
        assert_eq!(class(0, Sign::Plus), EquivalenceClass::Plus);
        assert_eq!(class(1, Sign::Minus), EquivalenceClass::Plus);
        assert_eq!(class(1, Sign::Plus), EquivalenceClass::Minus);
        assert_eq!(class(0, Sign::Minus), EquivalenceClass::Minus);
        let refused = ClassificationResult::NotInterchanging {
            reason: RefusalReason::UnitFailure,
        };
        assert_eq!(equivalence_class(&refused), Err(BraidError::NotInFamily));
    }

    #[test]
    fn screens_examples() {
        let s = obstruction_screens(&w("4: 2 2 2")).unwrap();
        assert_eq!(s[0].verdict, ScreenVerdict::Applicable { pass: false });
        let s = obstruction_screens(&family(0, Sign::Plus)).unwrap();
        assert_eq!(s[0].verdict, ScreenVerdict::Applicable { pass: true });
        assert_eq!(s[1].verdict, ScreenVerdict::Applicable { pass: true });
        assert_eq!(s[2].verdict, ScreenVerdict::Applicable { pass: true });
        let s = obstruction_screens(&family(2, Sign::Plus)).unwrap();
        assert_eq!(s[0].verdict, ScreenVerdict::NotApplicable);
    }

    #[test]
    fn screen_c_rules_out_triple_middle_crossing() {
        let s = obstruction_screens(&w("4: 2 2 2")).unwrap();
        assert_eq!(s[2].verdict, ScreenVerdict::Applicable { pass: false });
    }

    #[test]
    fn hexagon() {
        assert!(hexagon_check(1).unwrap());
        assert!(hexagon_check(-1).unwrap());
        assert!(!hexagon_check(3).unwrap());
        assert_eq!(hexagon_check(2), Err(BraidError::EvenExponent(2)));
        let (l, r) = hexagon_legs(3).unwrap();
        assert_eq!((l, r), (w("3: 1 1 1 2 2 2"), w("3: 1 2 2 1 1 2")));
        for k in [-7, -5, -3, -1, 1, 3, 5, 7] {
            assert_eq!(
                hexagon_check(k).unwrap(),
                hexagon_check_second(k).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn family_is_its_own_rotation() {
        for n in 0..4 {
            for sign in [Sign::Plus, Sign::Minus] {
                let b = family(n, sign);
                assert!(equals(&b.rotate180(), &b).unwrap());
                assert!(equals(&family_alternate(n, sign), &b).unwrap());
            }
        }
    }
}
