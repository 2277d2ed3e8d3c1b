//! Heights: the least possible maximum multiplicity of a witness.
//!
//! `H(n;ℓ,m)` is the smallest `h` such that some `n` roots in `Ω_m`, none
//! repeated more than `h` times, have vanishing `ℓ`-th power sum. Deciding
//! `H = 1` reduces to the base modulus `m' = m/d`: a distinct witness exists
//! iff `H(n;m') ≤ d`, and for `d = 1` this is Sivek's criterion (both `n`
//! and `m − n` lie in the monoid of prime factors of `m`).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{self, SearchError, SearchOutcome, SearchSpec};
use crate::semigroup::SemigroupSpec;
use crate::solver::{self, WQuery};
use crate::witness::{self, WitnessCertificate, WitnessError};
use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error("distinct witnesses need 2 <= n <= m (got n={n}, m={m})")]
    OutOfRange { n: u64, m: u64 },
    #[error("parameters must be positive")]
    NonPositive,
    #[error("search ran out of budget after {0} nodes")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Sivek's criterion on `n` and `m − n` (only for `d = 1`, `h = 1`).
    Sivek,
    /// The fibre bound `H(n; m/d) ≤ d` (for `d > 1`, `h = 1`).
    FibreBound,
    /// Increasing-`h` exhaustive search.
    Exhaustive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sivek => "sivek",
            Method::FibreBound => "fibre-bound",
            Method::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightValue {
    Exact(u64),
    /// `n ∉ W_ℓ(m)`.
    Undefined,
    /// The budget ran out: `lower ≤ H ≤ upper`.
    Unknown { lower: u64, upper: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightResult {
    pub n: u64,
    pub ell: u64,
    pub m: u64,
    pub h: HeightValue,
    pub witness: Option<WitnessCertificate>,
    pub method: Method,
}

impl HeightResult {
    pub fn exact(&self) -> Option<u64> {
        match self.h {
            HeightValue::Exact(h) => Some(h),
            _ => None,
        }
    }
}

/// How [`compute_height_with`] settles whether `h = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Search only.
    #[default]
    Exhaustive,
    /// Use [`height_one`] for `h = 1`, then search upward from 2.
    Criteria,
}

/// Both `n` and `m − n` are non-negative combinations of the primes
/// dividing `m`. Meaningful for `2 ≤ n ≤ m`; `false` when `n > m`.
pub fn sivek_criterion(n: u64, m: u64) -> bool {
    if n > m {
        return false;
    }
    let sg = SemigroupSpec::build(&arith::prime_support(m)).expect("prime support is prime");
    sg.contains(n) && sg.contains(m - n)
}

/// Whether `n` distinct `m`-th roots of unity can have vanishing `ℓ`-th
/// power sum, for `2 ≤ n ≤ m`.
pub fn height_one(n: u64, ell: u64, m: u64, node_budget: u64) -> Result<bool, HeightError> {
    if ell == 0 || m == 0 {
        return Err(HeightError::NonPositive);
    }
    if n < 2 || n > m {
        return Err(HeightError::OutOfRange { n, m });
    }
    let red = solver::reduce(ell, m);
    if red.m_prime == 1 {
        return Ok(false);
    }
    if red.d == 1 {
        return Ok(sivek_criterion(n, m));
    }
    if !red.semigroup().contains(n) {
        return Ok(false);
    }
    let spec = SearchSpec::bounded(red.m_prime, n, 1, red.d).with_budget(node_budget);
    match oracle::exists_witness(&spec)? {
        SearchOutcome::Found(_) => Ok(true),
        SearchOutcome::NotFound => Ok(false),
        SearchOutcome::BudgetExceeded { nodes } => Err(HeightError::BudgetExceeded(nodes)),
    }
}

/// `H(n;ℓ,m)` by exhaustive search, `h` increasing from `max(1, ⌈n/m⌉)`.
pub fn compute_height(n: u64, ell: u64, m: u64, node_budget: u64) -> Result<HeightResult, HeightError> {
    compute_height_with(n, ell, m, node_budget, Strategy::Exhaustive)
}

pub fn compute_height_with(
    n: u64,
    ell: u64,
    m: u64,
    node_budget: u64,
    strategy: Strategy,
) -> Result<HeightResult, HeightError> {
    let q = WQuery::new(n, ell, m).ok_or(HeightError::NonPositive)?;
    let mut result = HeightResult { n, ell, m, h: HeightValue::Undefined, witness: None, method: Method::Exhaustive };
    if !solver::decide(q) {
        return Ok(result);
    }
    let mut start = n.div_ceil(m).max(1);
    if strategy == Strategy::Criteria && (2..=m).contains(&n) {
        if height_one(n, ell, m, node_budget)? {
            // `construct` only searches when d > 1, with the same budget.
            let cert = witness::construct(q, true, node_budget)
                .map_err(budget_or_search)?
                .expect("height_one promised a distinct witness");
            result.h = HeightValue::Exact(1);
            result.method = if solver::reduce(ell, m).d == 1 { Method::Sivek } else { Method::FibreBound };
            result.witness = Some(cert);
            return Ok(result);
        }
        start = start.max(2);
    }
    for h in start..=n {
        let spec = SearchSpec::bounded(m, n, ell, h).with_budget(node_budget);
        match oracle::exists_witness(&spec)? {
            SearchOutcome::Found(s) => {
                let mut derivation = Vec::new();
                if h > start {
                    derivation.push(format!("search: no witness with multiplicity <= {}", h - 1));
                } else if h > 1 {
                    derivation.push(format!("bound: multiplicity >= {h} is forced"));
                }
                derivation.push(format!("search: lexicographically least witness with multiplicity <= {h}"));
                result.h = HeightValue::Exact(h);
                result.witness = Some(WitnessCertificate::from_multiset(ell, &s, h == 1, derivation));
                return Ok(result);
            }
            SearchOutcome::NotFound => continue,
            SearchOutcome::BudgetExceeded { .. } => {
                let upper = witness::construct(q, false, node_budget)
                    .ok()
                    .flatten()
                    .map_or(n, |c| c.max_multiplicity());
                result.h = HeightValue::Unknown { lower: h, upper };
                return Ok(result);
            }
        }
    }
    unreachable!("n ∈ W_ℓ(m) has a witness with multiplicity at most n")
}

fn budget_or_search(e: WitnessError) -> HeightError {
    match e {
        WitnessError::BudgetExceeded(nodes) => HeightError::BudgetExceeded(nodes),
        WitnessError::Search(s) => HeightError::Search(s),
        other => panic!("verified construction failed: {other}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::verify_certificate;
    use crate::DEFAULT_BUDGET;

    fn h(n: u64, ell: u64, m: u64) -> HeightResult {
        compute_height(n, ell, m, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn height_one_examples() {
        assert!(height_one(2, 2, 4, DEFAULT_BUDGET).unwrap());
        assert!(!height_one(5, 1, 6, DEFAULT_BUDGET).unwrap());
        assert!(height_one(6, 8, 12, DEFAULT_BUDGET).unwrap());
        assert_eq!(height_one(7, 1, 6, DEFAULT_BUDGET), Err(HeightError::OutOfRange { n: 7, m: 6 }));
        assert_eq!(height_one(1, 1, 6, DEFAULT_BUDGET), Err(HeightError::OutOfRange { n: 1, m: 6 }));
    }

    #[test]
    fn sivek_examples() {
        assert!(!sivek_criterion(5, 6));
        assert!(sivek_criterion(6, 12));
        for m in 2..40 {
            assert!(sivek_criterion(m, m));
        }
        assert!(!sivek_criterion(7, 6));
    }

    #[test]
    fn computed_heights() {
        assert_eq!(h(2, 1, 2).h, HeightValue::Exact(1));
        let r = h(5, 1, 6);
        assert_eq!(r.h, HeightValue::Exact(2));
        assert_eq!(r.witness.as_ref().unwrap().exponents, vec![(0, 2), (2, 1), (3, 1), (4, 1)]);
        let r = h(4, 1, 2);
        assert_eq!(r.h, HeightValue::Exact(2));
        assert_eq!(r.witness.as_ref().unwrap().exponents, vec![(0, 2), (1, 2)]);
        assert_eq!(h(6, 6, 6).h, HeightValue::Undefined);
        assert_eq!(h(7, 1, 15).h, HeightValue::Undefined);
        assert_eq!(h(6, 8, 12).h, HeightValue::Exact(1));
        assert_eq!(h(6, 1, 3).h, HeightValue::Exact(2));
    }

    #[test]
    fn budget_gives_bounds_not_answers() {
        let r = compute_height(23, 1, 15, 5).unwrap();
        match r.h {
            HeightValue::Unknown { lower, upper } => {
                assert!(lower >= 2 && lower <= upper);
            }
            other => panic!("expected unknown, got {other:?}"),
        }
        assert!(r.witness.is_none());
    }

    #[test]
    fn strategies_agree() {
        for m in 2..=10 {
            for ell in 1..=10 {
                for n in 1..=12 {
                    let a = compute_height_with(n, ell, m, DEFAULT_BUDGET, Strategy::Exhaustive).unwrap();
                    let b = compute_height_with(n, ell, m, DEFAULT_BUDGET, Strategy::Criteria).unwrap();
                    assert_eq!(a.h, b.h, "(n,l,m)=({n},{ell},{m})");
                    for r in [a, b] {
                        if let Some(w) = &r.witness {
                            assert!(verify_certificate(w));
                            assert_eq!(Some(w.max_multiplicity()), r.exact());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn height_respects_the_pigeonhole_bound() {
        for m in 2..=8 {
            for n in 2..=20 {
                if let Some(hv) = h(n, 1, m).exact() {
                    assert!(hv >= n.div_ceil(m));
                }
            }
        }
    }
}
