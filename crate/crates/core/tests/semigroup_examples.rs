use vanishing_core::semigroup::Frobenius;
use vanishing_core::{Gaps, SemigroupSpec};

fn sg(primes: &[u64]) -> SemigroupSpec {
    SemigroupSpec::build(primes).unwrap()
}

#[test]
fn gap_sets() {
    assert_eq!(sg(&[2, 3]).gaps(), Gaps::Finite(vec![1]));
    assert_eq!(sg(&[3, 5]).gaps(), Gaps::Finite(vec![1, 2, 4, 7]));
    assert_eq!(sg(&[2, 5]).gaps(), Gaps::Finite(vec![1, 3]));
    assert_eq!(sg(&[2, 3, 5]).gaps(), Gaps::Finite(vec![1]));
    assert_eq!(sg(&[2]).gaps(), Gaps::NonMultiples(2));
    assert_eq!(sg(&[]).gaps(), Gaps::Everything);
    assert_eq!(sg(&[3, 5]).frobenius(), Frobenius::Largest(7));
}

#[test]
fn membership() {
    assert!(!sg(&[2, 5]).contains(3));
    assert!(sg(&[3, 5]).contains(8));
    assert!(sg(&[5]).contains(10));
    assert!(sg(&[]).contains(0));
    assert!(!sg(&[]).contains(1));
}

#[test]
fn representations() {
    assert_eq!(sg(&[2, 3]).representation(5), Some(vec![1, 1]));
    assert_eq!(sg(&[2, 3]).representation(7), Some(vec![2, 1]));
    assert_eq!(sg(&[3, 5]).representation(7), None);
}

#[test]
fn rejects_composites() {
    let err = SemigroupSpec::build(&[2, 9]).unwrap_err();
    assert!(err.to_string().contains('9'));
}
