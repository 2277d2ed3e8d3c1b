//! The additive monoid `q_1ℕ + ⋯ + q_sℕ` generated by distinct primes.
//!
//! Membership is decided through the Apéry set with respect to the smallest
//! generator `q_1`: for each residue `r mod q_1` we store the least member
//! congruent to `r`, computed by a shortest-path dynamic program over the
//! residue classes. Then `n` is a member iff `n ≥ apery[n mod q_1]`. This is
//! the coin-problem table folded modulo `q_1`, so memory is `O(q_1)` rather
//! than `O(q_1·q_2)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use thiserror::Error;

use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator {0} is not prime")]
    NotPrime(u64),
}

/// Structure of the complement of the monoid in the positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gaps {
    /// No generators: no positive integer is a member.
    Everything,
    /// One generator `p`: exactly the non-multiples of `p` are excluded.
    NonMultiples(u64),
    /// Two or more generators: finitely many gaps, ascending.
    Finite(Vec<u64>),
}

/// Largest non-member, or the structural marker when it does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frobenius {
    Everything,
    NonMultiples(u64),
    Largest(u128),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupSpec {
    generators: Vec<u64>,
    /// `apery[r]` is the least member `≡ r (mod q_1)`; empty when `s ≤ 1`.
    apery: Vec<u128>,
}

impl SemigroupSpec {
    /// Builds the monoid over a set of primes. Duplicates collapse; order
    /// does not matter.
    pub fn build(primes: &[u64]) -> Result<Self, SemigroupError> {
        let mut generators = primes.to_vec();
        generators.sort_unstable();
        generators.dedup();
        if let Some(&bad) = generators.iter().find(|&&p| !arith::is_prime(p)) {
            return Err(SemigroupError::NotPrime(bad));
        }
        let apery = if generators.len() >= 2 {
            apery_set(&generators)
        } else {
            Vec::new()
        };
        Ok(Self { generators, apery })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.generators.as_slice() {
            [] => n == 0,
            [p] => n.is_multiple_of(*p),
            [q1, ..] => u128::from(n) >= self.apery[(n % q1) as usize],
        }
    }

    pub fn frobenius(&self) -> Frobenius {
        match self.generators.as_slice() {
            [] => Frobenius::Everything,
            [p] => Frobenius::NonMultiples(*p),
            [q1, ..] => {
                let top = self.apery.iter().copied().max().expect("q1 ≥ 2 residues");
                Frobenius::Largest(top - u128::from(*q1))
            }
        }
    }

    pub fn gaps(&self) -> Gaps {
        match self.generators.as_slice() {
            [] => Gaps::Everything,
            [p] => Gaps::NonMultiples(*p),
            [q1, ..] => {
                let step = *q1 as u128;
                let mut out = Vec::new();
                for (r, &least) in self.apery.iter().enumerate() {
                    let mut v = r as u128;
                    while v < least {
                        if v > 0 {
                            out.push(v as u64);
                        }
                        v += step;
                    }
                }
                out.sort_unstable();
                Gaps::Finite(out)
            }
        }
    }

    /// Canonical coefficients `(n_1, …, n_s)`, aligned with
    /// [`generators`](Self::generators), with `Σ n_i q_i = n`.
    ///
    /// The coefficient of the largest generator is maximised first, then the
    /// next largest, and so on. `None` for non-members.
    pub fn representation(&self, n: u64) -> Option<Vec<u64>> {
        if !self.contains(n) {
            return None;
        }
        let prefixes: Vec<SemigroupSpec> = (0..self.generators.len())
            .map(|i| SemigroupSpec::build(&self.generators[..i]).expect("subset of primes"))
            .collect();
        let mut coeffs = vec![0u64; self.generators.len()];
        let mut rest = n;
        for i in (0..self.generators.len()).rev() {
            let q = self.generators[i];
            let below = &prefixes[i];
            let c = (0..=rest / q)
                .rev()
                .find(|&c| below.contains(rest - c * q))
                .expect("membership of the remainder was established one level up");
            coeffs[i] = c;
            rest -= c * q;
        }
        debug_assert_eq!(rest, 0);
        Some(coeffs)
    }

    /// Explicit membership table for `0..=bound`.
    pub fn membership_table(&self, bound: u64) -> Vec<bool> {
        (0..=bound).map(|n| self.contains(n)).collect()
    }
}

/// Least member in each residue class mod the smallest generator
/// (Dijkstra over `ℤ/q_1`, edges `r → r + q_i`).
fn apery_set(generators: &[u64]) -> Vec<u128> {
    let q1 = generators[0];
    let size = q1 as usize;
    let mut dist = vec![u128::MAX; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u128, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &q in &generators[1..] {
            let next = ((r as u128 + u128::from(q)) % u128::from(q1)) as usize;
            let nd = d + u128::from(q);
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, q) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ">")
    }
}
