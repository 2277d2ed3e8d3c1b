//! Elementary integer arithmetic: gcd, trial-division factoring, divisors,
//! modular inverses. Inputs are expected to be desk-scale (factoring is
//! `O(√m)`).

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut q = 3u64;
    while q <= p / q {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `1` has none.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= m / p {
        if m.is_multiple_of(p) {
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Distinct prime divisors of `m`, ascending.
pub fn prime_support(m: u64) -> Vec<u64> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `m`, ascending. Empty for `m = 0`.
pub fn divisors(m: u64) -> Vec<u64> {
    if m == 0 {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i <= m / i {
        if m.is_multiple_of(i) {
            small.push(i);
            if i != m / i {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm, in
/// `[0, modulus)`. `None` when `gcd(a, modulus) ≠ 1`. Modulus 1 yields 0.
pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 0 {
        return None;
    }
    if modulus == 1 {
        return Some(0);
    }
    let ext = i128::from(a % modulus).extended_gcd(&i128::from(modulus));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(i128::from(modulus)) as u64)
}

/// `(a · b) mod m` without intermediate overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}
