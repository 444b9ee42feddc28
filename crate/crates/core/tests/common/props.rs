#![allow(dead_code)]

use interbraid::cabling::{cable, CableWidths};
use interbraid::{closure_summary, derive_l, derive_r, is_candidate, BraidWord, StrandSet};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use super::{braid, braid_any, with_middle_permutation};

type Outcome = Result<(), TestCaseError>;

pub fn perm_homomorphism((u, v): (BraidWord, BraidWord)) -> Outcome {
    let joined = u.concat(&v).unwrap();
    prop_assert_eq!(joined.perm(), u.perm().then(&v.perm()));
    Ok(())
}

pub fn rotate_involution_and_antihomomorphism((u, v): (BraidWord, BraidWord)) -> Outcome {
    prop_assert_eq!(u.rotate180().rotate180(), u.clone());
    let lhs = u.concat(&v).unwrap().rotate180();
    let rhs = v.rotate180().concat(&u.rotate180()).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn cable_compositional((u, v, widths): (BraidWord, BraidWord, Vec<usize>)) -> Outcome {
    let w = CableWidths::new(widths).unwrap();
    let lhs = cable(&u.concat(&v).unwrap(), &w).unwrap();
    let rhs = cable(&u, &w)
        .unwrap()
        .concat(&cable(&v, &w.push_forward(&u.perm())).unwrap())
        .unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn cable_collapse((w, widths): (BraidWord, Vec<usize>)) -> Outcome {
    let cw = CableWidths::new(widths).unwrap();
    let cabled = cable(&w, &cw).unwrap();
    let keep: Vec<usize> = cw.first_strands();
    let dead = StrandSet::new((1..=cw.total()).filter(|s| !keep.contains(s)));
    prop_assert_eq!(cabled.delete_strands(&dead).unwrap(), w.free_reduce());
    Ok(())
}

pub fn derive_unit_compatible(b: BraidWord) -> Outcome {
    if !is_candidate(&b).unwrap().candidate {
        return Ok(());
    }
    let l = derive_l(&b)
        .unwrap()
        .delete_strands(&StrandSet::from([5, 6]))
        .unwrap();
    let r = derive_r(&b)
        .unwrap()
        .delete_strands(&StrandSet::from([1, 2]))
        .unwrap();
    prop_assert!(interbraid::equals(&l, &b).unwrap());
    prop_assert!(interbraid::equals(&r, &b).unwrap());
    Ok(())
}

pub fn delete_functorial((u, v, dead): (BraidWord, BraidWord, Vec<usize>)) -> Outcome {
    let s = StrandSet::new(dead);
    if s.len() >= u.strands() {
        return Ok(());
    }
    let lhs = u.concat(&v).unwrap().delete_strands(&s).unwrap();
    let rhs = u
        .delete_strands(&s)
        .unwrap()
        .concat(&v.delete_strands(&s.push_forward(&u.perm())).unwrap())
        .unwrap()
        .free_reduce();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn lk_conjugation_invariant((w, g): (BraidWord, BraidWord)) -> Outcome {
    let conj = g.inverse().concat(&w).unwrap().concat(&g).unwrap();
    let (a, b) = (closure_summary(&w), closure_summary(&conj));
    prop_assert_eq!(a.cycle_type(), b.cycle_type());
    prop_assert_eq!(a.lk_multiset(), b.lk_multiset());
    Ok(())
}

pub fn same_strands(
    max_strands: usize,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |n| (braid(n, max_len), braid(n, max_len)))
}

pub fn widths_for(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, n)
}

pub fn cable_pair() -> impl Strategy<Value = (BraidWord, BraidWord, Vec<usize>)> {
    (2usize..=4).prop_flat_map(|n| (braid(n, 8), braid(n, 8), widths_for(n)))
}

pub fn cable_single() -> impl Strategy<Value = (BraidWord, Vec<usize>)> {
    (2usize..=4).prop_flat_map(|n| (braid(n, 10), widths_for(n)))
}

/// Four-strand braids with permutation (2 3); the second branch hides family
/// members behind a cancelling prefix so that candidates occur often.
pub fn near_candidate() -> impl Strategy<Value = BraidWord> {
    prop_oneof![
        braid(4, 10).prop_map(|w| with_middle_permutation(&w)),
        (braid(4, 4), any::<bool>(), 0u32..3).prop_map(|(w, s, n)| {
            let sign = if s {
                interbraid::Sign::Plus
            } else {
                interbraid::Sign::Minus
            };
            w.concat(&interbraid::family(n, sign))
                .unwrap()
                .concat(&w.inverse())
                .unwrap()
        }),
    ]
}

pub fn deletion_case() -> impl Strategy<Value = (BraidWord, BraidWord, Vec<usize>)> {
    (3usize..=6).prop_flat_map(|n| {
        (
            braid(n, 8),
            braid(n, 8),
            prop::collection::btree_set(1..=n, 1..n).prop_map(|s| s.into_iter().collect()),
        )
    })
}

pub fn conjugation_case() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=6).prop_flat_map(|n| (braid(n, 12), braid(n, 8)))
}

pub fn any_braid() -> impl Strategy<Value = BraidWord> {
    braid_any(6, 12)
}

/// Runs `check` on `cases` generated inputs with a fixed seed.
pub fn run<S, F>(cases: u32, strategy: S, check: F) -> Result<(), String>
where
    S: Strategy,
    S::Value: Clone + std::fmt::Debug,
    F: Fn(S::Value) -> Outcome,
{
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(
        config,
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    runner.run(&strategy, check).map_err(|e| e.to_string())
}
