use vanishing_core::oracle::enumerate_w;
use vanishing_core::{decide, exists_witness, reduce, SearchOutcome, SearchSpec, WQuery, DEFAULT_BUDGET};

fn q(n: u64, ell: u64, m: u64) -> WQuery {
    WQuery::new(n, ell, m).unwrap()
}

#[test]
fn decide_matches_exhaustive_search() {
    for m in 1..=16 {
        for ell in 1..=16 {
            let column = enumerate_w(m, ell, 24, DEFAULT_BUDGET).unwrap();
            for (i, found) in column.into_iter().enumerate() {
                let n = i as u64 + 1;
                assert_eq!(found, Some(decide(q(n, ell, m))), "(n,l,m)=({n},{ell},{m})");
            }
        }
    }
}

#[test]
fn reduction_matches_search_on_the_base_modulus() {
    for m in 2..=16 {
        for ell in 1..=16 {
            let red = reduce(ell, m);
            assert_eq!(red.d * red.m_prime, m);
            for n in 1..=16 {
                let here = exists_witness(&SearchSpec::unbounded(m, n, ell)).unwrap().as_bool();
                let base = exists_witness(&SearchSpec::unbounded(red.m_prime, n, 1)).unwrap().as_bool();
                assert_eq!(here, base, "(n,l,m)=({n},{ell},{m})");
            }
        }
    }
}

#[test]
fn witnesses_found_by_search_vanish() {
    for m in 2..=12 {
        for ell in 1..=12 {
            for n in 2..=12 {
                if let SearchOutcome::Found(s) = exists_witness(&SearchSpec::unbounded(m, n, ell)).unwrap() {
                    assert_eq!(s.size(), n);
                    assert!(s.multiplicity(0) > 0, "rotation puts 0 in the witness");
                }
            }
        }
    }
}
