//! Constructing explicit witnesses.
//!
//! A member `n = Σ n_i q_i` of `W(m')` is realised in `Ω_{m'}` as a union of
//! full `q_i`-cycles. That base sum is carried to `Ω_m` by inverting the
//! power map: a base exponent `t` is hit by exactly the `d` exponents
//! `e_0 + k·m'` with `(ℓ/d)·e_0 ≡ t (mod m')`. Taking one exponent per unit
//! of multiplicity from distinct fibre points gives all-distinct witnesses
//! whenever every base multiplicity is at most `d`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::cyclotomic::{check_certificate, CycloError, ExponentMultiset, Rejection};
use crate::oracle::{self, SearchError, SearchOutcome, SearchSpec};
use crate::solver::{self, WQuery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("representation does not match the generators or does not sum to n")]
    InvalidRepresentation,
    #[error("base modulus must exceed 1")]
    TrivialModulus,
    #[error("base multiset lives mod {got}, expected m/d = {expected}")]
    BaseModulus { expected: u64, got: u64 },
    #[error("base multiplicity {multiplicity} exceeds d = {d}: a distinct lift needs every fibre count at most d")]
    FibreOverflow { multiplicity: u64, d: u64 },
    #[error("oracle search ran out of budget after {0} nodes")]
    BudgetExceeded(u64),
    #[error("constructed certificate failed verification: {0}")]
    Unverified(Rejection),
    #[error(transparent)]
    Arithmetic(#[from] CycloError),
    #[error(transparent)]
    Search(SearchError),
}

impl From<SearchError> for WitnessError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Arithmetic(c) => WitnessError::Arithmetic(c),
            other => WitnessError::Search(other),
        }
    }
}

/// A claimed vanishing power sum `Σ_{i≤n} x_i^ℓ = 0` with `x_i ∈ Ω_m`.
///
/// Serialises with fixed field order and ascending exponents, which makes
/// the JSON form byte-stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub m: u64,
    pub ell: u64,
    pub n: u64,
    /// `[exponent, multiplicity]` pairs, strictly ascending by exponent.
    pub exponents: Vec<(u64, u64)>,
    pub distinct: bool,
    pub derivation: Vec<String>,
}

impl WitnessCertificate {
    pub fn from_multiset(ell: u64, s: &ExponentMultiset, distinct: bool, derivation: Vec<String>) -> Self {
        Self {
            m: s.modulus(),
            ell,
            n: s.size(),
            exponents: s.pairs(),
            distinct,
            derivation,
        }
    }

    pub fn multiset(&self) -> Result<ExponentMultiset, CycloError> {
        ExponentMultiset::from_pairs(self.m, self.exponents.iter().copied())
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.exponents.iter().map(|&(_, a)| a).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate is plain data")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Union of full cycles in `Ω_{m'}`: `rep[i]` copies of the `primes[i]`-cycle
/// `{j·m'/q : j < q}`. The `c`-th copy of a given cycle is rotated by
/// `c mod (m'/q)`, so repeated copies land on different cosets while any
/// are left.
pub fn base_vanishing_sum(
    n: u64,
    m_prime: u64,
    primes: &[u64],
    rep: &[u64],
) -> Result<ExponentMultiset, WitnessError> {
    if m_prime <= 1 {
        return Err(WitnessError::TrivialModulus);
    }
    if primes.len() != rep.len() {
        return Err(WitnessError::InvalidRepresentation);
    }
    let mut total = 0u64;
    for (&q, &c) in primes.iter().zip(rep) {
        if q < 2 || !m_prime.is_multiple_of(q) {
            return Err(WitnessError::InvalidRepresentation);
        }
        total = q
            .checked_mul(c)
            .and_then(|v| total.checked_add(v))
            .ok_or(WitnessError::InvalidRepresentation)?;
    }
    if total != n {
        return Err(WitnessError::InvalidRepresentation);
    }
    let mut s = ExponentMultiset::new(m_prime)?;
    for (&q, &copies) in primes.iter().zip(rep) {
        let stride = m_prime / q;
        for copy in 0..copies {
            let offset = copy % stride;
            for j in 0..q {
                s.insert(offset + j * stride, 1)?;
            }
        }
    }
    Ok(s)
}

/// Pulls a vanishing sum over `Ω_{m/d}` back to a vanishing `ℓ`-th power
/// sum over `Ω_m`, where `d = gcd(m, ℓ)`.
///
/// Each base exponent `t` is replaced by `e_0 = (ℓ/d)^{-1}·t mod (m/d)`.
/// With `distinct`, a multiplicity `a ≤ d` is spread over the fibre
/// `e_0, e_0 + m/d, …, e_0 + (a−1)·m/d`; otherwise `e_0` is repeated `a`
/// times.
pub fn lift_witness(
    base: &ExponentMultiset,
    ell: u64,
    m: u64,
    distinct: bool,
) -> Result<WitnessCertificate, WitnessError> {
    let red = solver::reduce(ell, m);
    let (d, m_prime) = (red.d, red.m_prime);
    if base.modulus() != m_prime {
        return Err(WitnessError::BaseModulus { expected: m_prime, got: base.modulus() });
    }
    if m_prime <= 1 {
        return Err(WitnessError::TrivialModulus);
    }
    let unit = (ell / d) % m_prime;
    let inv = arith::mod_inverse(unit, m_prime).expect("ℓ/d is a unit mod m/d");
    let mut lifted = ExponentMultiset::new(m)?;
    for (t, a) in base.iter() {
        let e0 = arith::mul_mod(inv, t, m_prime);
        if distinct {
            if a > d {
                return Err(WitnessError::FibreOverflow { multiplicity: a, d });
            }
            for k in 0..a {
                lifted.insert(e0 + k * m_prime, 1)?;
            }
        } else {
            lifted.insert(e0, a)?;
        }
    }
    let mut derivation = vec![
        format!("reduce: d=gcd({m},{ell})={d}, m'={m_prime}"),
        format!("base in Omega_{m_prime}: {base}"),
        format!("solve ({}/{d})*e = t mod {m_prime}: inverse of {unit} mod {m_prime} is {inv}", ell),
    ];
    derivation.push(if distinct {
        format!("lift: spread each base multiplicity over distinct fibre points e0 + k*{m_prime}")
    } else {
        "lift: base exponent t -> e0 with the same multiplicity".to_string()
    });
    let cert = WitnessCertificate::from_multiset(ell, &lifted, distinct, derivation);
    check_certificate(&cert).map_err(WitnessError::Unverified)?;
    Ok(cert)
}

/// A verified certificate for `q`, or `None` when none exists: `n ∉ W_ℓ(m)`,
/// or a distinct witness was requested and no base sum over `Ω_{m/d}` with
/// all multiplicities at most `d` exists.
///
/// The base sum comes from the canonical representation of `n`. If a
/// distinct witness is wanted and that base is too concentrated, the
/// exhaustive search supplies a base with multiplicity bound `d` instead.
pub fn construct(
    q: WQuery,
    want_distinct: bool,
    node_budget: u64,
) -> Result<Option<WitnessCertificate>, WitnessError> {
    if !solver::decide(q) {
        return Ok(None);
    }
    if want_distinct && q.n > q.m {
        return Ok(None);
    }
    let red = solver::reduce(q.ell, q.m);
    let sg = red.semigroup();
    let rep = sg.representation(q.n).expect("decide implies membership");
    let terms: Vec<String> = rep
        .iter()
        .zip(&red.primes)
        .filter(|(&c, _)| c > 0)
        .map(|(c, p)| format!("{c}*{p}"))
        .collect();
    let mut trace = vec![format!("representation: {} = {}", q.n, terms.join(" + "))];
    let mut base = base_vanishing_sum(q.n, red.m_prime, &red.primes, &rep)?;
    trace.push("cycles: union of full prime cycles, repeated copies rotated onto new cosets".to_string());
    if want_distinct && base.max_multiplicity() > red.d {
        let spec = SearchSpec::bounded(red.m_prime, q.n, 1, red.d).with_budget(node_budget);
        match oracle::exists_witness(&spec)? {
            SearchOutcome::Found(s) => {
                trace.push(format!("search: base with multiplicity <= {} is {s}", red.d));
                base = s;
            }
            SearchOutcome::NotFound => return Ok(None),
            SearchOutcome::BudgetExceeded { nodes } => return Err(WitnessError::BudgetExceeded(nodes)),
        }
    }
    let mut cert = lift_witness(&base, q.ell, q.m, want_distinct)?;
    trace.append(&mut cert.derivation);
    cert.derivation = trace;
    Ok(Some(cert))
}
