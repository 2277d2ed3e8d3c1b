use vanishing_core::witness::{base_vanishing_sum, lift_witness};
use vanishing_core::{
    construct, exists_witness, reduce, verify_certificate, ExponentMultiset, SearchSpec, WQuery,
    DEFAULT_BUDGET,
};

fn q(n: u64, ell: u64, m: u64) -> WQuery {
    WQuery::new(n, ell, m).unwrap()
}

fn found(spec: SearchSpec) -> bool {
    exists_witness(&spec).unwrap().as_bool().expect("within budget")
}

#[test]
fn construction_examples() {
    let s = base_vanishing_sum(5, 6, &[2, 3], &[1, 1]).unwrap();
    assert_eq!(s.pairs(), vec![(0, 2), (2, 1), (3, 1), (4, 1)]);
    let s = base_vanishing_sum(3, 3, &[3], &[1]).unwrap();
    assert_eq!(s.pairs(), vec![(0, 1), (1, 1), (2, 1)]);
    let s = base_vanishing_sum(4, 2, &[2], &[2]).unwrap();
    assert_eq!(s.pairs(), vec![(0, 2), (1, 2)]);
    assert!(base_vanishing_sum(6, 6, &[2, 3], &[1, 1]).is_err());

    let cycle = ExponentMultiset::from_exponents(3, [0, 1, 2]).unwrap();
    assert_eq!(lift_witness(&cycle, 8, 12, true).unwrap().exponents, vec![(0, 1), (1, 1), (2, 1)]);
    let pair = ExponentMultiset::from_exponents(2, [0, 1]).unwrap();
    assert_eq!(lift_witness(&pair, 2, 4, false).unwrap().exponents, vec![(0, 1), (1, 1)]);
    let doubled = ExponentMultiset::from_exponents(2, [0, 0, 1, 1]).unwrap();
    assert_eq!(lift_witness(&doubled, 2, 4, true).unwrap().exponents, vec![(0, 1), (1, 1), (2, 1), (3, 1)]);
    assert!(lift_witness(&doubled, 1, 2, true).is_err());

    let c = construct(q(5, 1, 6), false, DEFAULT_BUDGET).unwrap().unwrap();
    assert_eq!(c.exponents, vec![(0, 2), (2, 1), (3, 1), (4, 1)]);
    let c = construct(q(6, 8, 12), true, DEFAULT_BUDGET).unwrap().unwrap();
    assert_eq!(c.exponents, (0..6).map(|e| (e, 1)).collect::<Vec<_>>());
    assert_eq!(construct(q(5, 1, 6), true, DEFAULT_BUDGET).unwrap(), None);
}

#[test]
fn construct_succeeds_whenever_search_does() {
    for m in 1..=16 {
        for ell in 1..=16 {
            for n in 1..=24 {
                let cert = construct(q(n, ell, m), false, DEFAULT_BUDGET).unwrap();
                assert_eq!(cert.is_some(), found(SearchSpec::unbounded(m, n, ell)), "(n,l,m)=({n},{ell},{m})");
                if let Some(c) = cert {
                    assert!(verify_certificate(&c));
                    assert_eq!(c.multiset().unwrap().size(), n);
                }
            }
        }
    }
}

#[test]
fn distinct_construct_succeeds_exactly_when_distinct_search_does() {
    for m in 2..=14 {
        for ell in 1..=14 {
            let d = reduce(ell, m).d;
            for n in 2..=m {
                let cert = construct(q(n, ell, m), true, DEFAULT_BUDGET).unwrap();
                assert_eq!(cert.is_some(), found(SearchSpec::distinct(m, n, ell)), "(n,l,m)=({n},{ell},{m})");
                if let Some(c) = cert {
                    assert!(c.distinct && verify_certificate(&c));
                    assert_eq!(c.exponents.len() as u64, n);
                    // at most d lifted points over any base point
                    let m_prime = m / d;
                    let mut per_class = vec![0u64; m_prime as usize];
                    for &(e, _) in &c.exponents {
                        per_class[(e % m_prime) as usize] += 1;
                    }
                    assert!(per_class.iter().all(|&k| k <= d));
                }
            }
        }
    }
}

#[test]
fn construction_is_deterministic() {
    for (n, ell, m) in [(5, 1, 6), (10, 24, 60), (7, 1, 30), (13, 3, 15)] {
        for distinct in [false, true] {
            let a = construct(q(n, ell, m), distinct, DEFAULT_BUDGET).unwrap();
            let b = construct(q(n, ell, m), distinct, DEFAULT_BUDGET).unwrap();
            assert_eq!(a.map(|c| c.to_json()), b.map(|c| c.to_json()));
        }
    }
}
