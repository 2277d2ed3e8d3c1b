//! Deciding membership in `W_ℓ(m)`.
//!
//! With `d = gcd(m, ℓ)`, `W_ℓ(m) = W(m/d)`, and `W(k)` is the set of
//! positive members of the monoid generated by the primes dividing `k`.

use std::fmt;

use crate::arith;
use crate::semigroup::{Gaps, SemigroupSpec};

/// A query "is `n ∈ W_ℓ(m)`?".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WQuery {
    pub n: u64,
    pub ell: u64,
    pub m: u64,
}

impl WQuery {
    /// `None` unless all three parameters are positive.
    pub fn new(n: u64, ell: u64, m: u64) -> Option<Self> {
        (n >= 1 && ell >= 1 && m >= 1).then_some(Self { n, ell, m })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WReduction {
    /// `gcd(m, ℓ)`.
    pub d: u64,
    /// `m / d`.
    pub m_prime: u64,
    /// Distinct primes dividing `m / d`, ascending.
    pub primes: Vec<u64>,
}

impl WReduction {
    pub fn semigroup(&self) -> SemigroupSpec {
        SemigroupSpec::build(&self.primes).expect("prime support is prime")
    }
}

impl fmt::Display for WReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}, m'={}, primes={{", self.d, self.m_prime)?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Panics if `ell` or `m` is zero.
pub fn reduce(ell: u64, m: u64) -> WReduction {
    assert!(ell >= 1 && m >= 1, "reduce requires positive ell and m");
    let d = arith::gcd(m, ell);
    let m_prime = m / d;
    WReduction { d, m_prime, primes: arith::prime_support(m_prime) }
}

pub fn decide(q: WQuery) -> bool {
    if q.n == 0 {
        return false;
    }
    let red = reduce(q.ell, q.m);
    red.m_prime > 1 && red.semigroup().contains(q.n)
}

/// Shape of `W_ℓ(m)` as a subset of the positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WSet {
    Empty,
    /// Positive multiples of a single prime.
    Multiples(u64),
    /// Every positive integer except a finite gap list (always containing 1).
    Cofinite { generators: Vec<u64>, gaps: Vec<u64> },
}

pub fn describe(ell: u64, m: u64) -> WSet {
    let red = reduce(ell, m);
    let sg = red.semigroup();
    match sg.gaps() {
        Gaps::Everything => WSet::Empty,
        Gaps::NonMultiples(p) => WSet::Multiples(p),
        Gaps::Finite(gaps) => WSet::Cofinite { generators: red.primes, gaps },
    }
}

impl fmt::Display for WSet {
    /// `∅`, `5ℕ`, or `2ℕ + 5ℕ = ℕ ∖ {1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WSet::Empty => write!(f, "∅"),
            WSet::Multiples(p) => write!(f, "{p}ℕ"),
            WSet::Cofinite { generators, gaps } => {
                let sum: Vec<String> = generators.iter().map(|p| format!("{p}ℕ")).collect();
                let gaps: Vec<String> = gaps.iter().map(u64::to_string).collect();
                write!(f, "{} = ℕ ∖ {{{}}}", sum.join(" + "), gaps.join(","))
            }
        }
    }
}

/// `W(d)` for every divisor `d` of `m`, one `"d | W(d)"` line per divisor
/// after a header line.
pub fn render_table(m: u64) -> String {
    let mut out = String::from("d | W(d)\n");
    for d in arith::divisors(m) {
        out.push_str(&format!("{d} | {}\n", describe(1, d)));
    }
    out
}
