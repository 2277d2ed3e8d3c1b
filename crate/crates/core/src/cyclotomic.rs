//! Exact arithmetic in `ℤ[ζ_m]`.
//!
//! A sum `Σ a_e ζ_m^e` is stored as its length-`m` coefficient vector, an
//! element of `ℤ[x]/(x^m − 1)`. It vanishes exactly when the cyclotomic
//! polynomial `Φ_m` divides `Σ a_e x^e`, which is decided by remainder
//! computation with no floating point involved.

use std::any::{Any, TypeId};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith;
use crate::scalar::Coefficient;
use crate::witness::WitnessCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("coefficient overflow")]
    Overflow,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {0} does not fit in memory")]
    ModulusTooLarge(u64),
    #[error("divisor is not monic")]
    NotMonic,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division was expected to be exact but left a remainder")]
    InexactDivision,
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exponent {exponent} is outside [0, {modulus})")]
    ExponentOutOfRange { exponent: u64, modulus: u64 },
    #[error("multiplicity of exponent {0} must be positive")]
    ZeroMultiplicity(u64),
}

fn lift<T: Coefficient>(v: u64) -> Result<T, CycloError> {
    T::from_u64(v).ok_or(CycloError::Overflow)
}

fn modulus_len(m: u64) -> Result<usize, CycloError> {
    if m == 0 {
        return Err(CycloError::ZeroModulus);
    }
    usize::try_from(m).map_err(|_| CycloError::ModulusTooLarge(m))
}

/// Dense integer polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct IntPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> IntPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![T::one()] }
    }

    /// `c · x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, CycloError> {
        let coeffs = coeffs
            .iter()
            .map(|&c| T::from_i64(c).ok_or(CycloError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self::new(coeffs))
    }

    /// `x^m − 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![T::zero(); m + 1];
        coeffs[0] = -T::one();
        coeffs[m] = coeffs[m].clone() + T::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycloError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            out.push(a.checked_add(&b).ok_or(CycloError::Overflow)?);
        }
        Ok(Self::new(out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CycloError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            out.push(a.checked_sub(&b).ok_or(CycloError::Overflow)?);
        }
        Ok(Self::new(out))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycloError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(CycloError::Overflow)?;
                out[i + j] = out[i + j].checked_add(&prod).ok_or(CycloError::Overflow)?;
            }
        }
        Ok(Self::new(out))
    }

    /// Quotient and remainder by a monic divisor. Only ring operations are
    /// needed, so the result is exact over `ℤ`.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self), CycloError> {
        let dd = divisor.degree().ok_or(CycloError::DivisionByZero)?;
        if !divisor.leading().is_some_and(One::is_one) {
            return Err(CycloError::NotMonic);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[top], T::zero());
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (j, b) in divisor.coeffs[..dd].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = c.checked_mul(b).ok_or(CycloError::Overflow)?;
                rem[shift + j] = rem[shift + j].checked_sub(&prod).ok_or(CycloError::Overflow)?;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Result<Self, CycloError> {
        Ok(self.div_rem_monic(divisor)?.1)
    }

    /// Quotient by a monic divisor, failing unless the remainder is zero.
    pub fn exact_div_monic(&self, divisor: &Self) -> Result<Self, CycloError> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if !r.is_zero() {
            return Err(CycloError::InexactDivision);
        }
        Ok(q)
    }
}

impl<T: Coefficient> fmt::Display for IntPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match deg {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{deg}")?,
                _ => write!(f, "{mag}x^{deg}")?,
            }
        }
        Ok(())
    }
}

type Memo = RwLock<HashMap<(TypeId, u64), Arc<dyn Any + Send + Sync>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The `m`-th cyclotomic polynomial, `Φ_m(x) = (x^m − 1) / Π_{d|m, d<m} Φ_d(x)`.
///
/// Every division is checked to be exact. Results are memoized per process
/// and per coefficient type; concurrent callers may compute the same entry
/// twice but always observe one value.
pub fn cyclotomic_polynomial<T: Coefficient>(m: u64) -> Result<Arc<IntPolynomial<T>>, CycloError> {
    let len = modulus_len(m)?;
    let key = (TypeId::of::<T>(), m);
    if let Some(hit) = memo().read().expect("memo poisoned").get(&key) {
        return Ok(hit.clone().downcast().expect("memo entry has the keyed type"));
    }
    let mut poly = IntPolynomial::<T>::x_pow_minus_one(len);
    for d in arith::divisors(m) {
        if d == m {
            break;
        }
        poly = poly.exact_div_monic(&*cyclotomic_polynomial::<T>(d)?)?;
    }
    let fresh = Arc::new(poly);
    let mut table = memo().write().expect("memo poisoned");
    let entry = table.entry(key).or_insert_with(|| fresh.clone());
    Ok(entry.clone().downcast().expect("memo entry has the keyed type"))
}

/// `x^e mod Φ_m` for every `e ∈ [0, m)`, each padded to `φ(m)` coefficients.
pub fn monomial_residues<T: Coefficient>(m: u64) -> Result<Vec<Vec<T>>, CycloError> {
    let len = modulus_len(m)?;
    let phi = cyclotomic_polynomial::<T>(m)?;
    let deg = phi.degree().expect("cyclotomic polynomials are nonzero");
    let mut out = Vec::with_capacity(len);
    let mut cur = vec![T::zero(); deg];
    if deg > 0 {
        cur[0] = T::one();
    }
    for _ in 0..len {
        out.push(cur.clone());
        // cur ← x · cur mod Φ_m
        if deg == 0 {
            continue;
        }
        let carry = cur[deg - 1].clone();
        for i in (1..deg).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = T::zero();
        if !carry.is_zero() {
            for (i, b) in phi.coeffs()[..deg].iter().enumerate() {
                let prod = carry.checked_mul(b).ok_or(CycloError::Overflow)?;
                cur[i] = cur[i].checked_sub(&prod).ok_or(CycloError::Overflow)?;
            }
        }
    }
    Ok(out)
}

/// A multiset of residues mod `m`: exponent `e` stands for `ζ_m^e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentMultiset {
    modulus: u64,
    entries: BTreeMap<u64, u64>,
}

impl ExponentMultiset {
    pub fn new(modulus: u64) -> Result<Self, CycloError> {
        if modulus == 0 {
            return Err(CycloError::ZeroModulus);
        }
        Ok(Self { modulus, entries: BTreeMap::new() })
    }

    /// Builds from `(exponent, multiplicity)` pairs; repeated exponents
    /// accumulate.
    pub fn from_pairs(
        modulus: u64,
        pairs: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, CycloError> {
        let mut s = Self::new(modulus)?;
        for (e, a) in pairs {
            s.insert(e, a)?;
        }
        Ok(s)
    }

    /// Builds from a list of exponents, one root per item.
    pub fn from_exponents(
        modulus: u64,
        exponents: impl IntoIterator<Item = u64>,
    ) -> Result<Self, CycloError> {
        Self::from_pairs(modulus, exponents.into_iter().map(|e| (e, 1)))
    }

    pub fn insert(&mut self, exponent: u64, multiplicity: u64) -> Result<(), CycloError> {
        if exponent >= self.modulus {
            return Err(CycloError::ExponentOutOfRange { exponent, modulus: self.modulus });
        }
        if multiplicity == 0 {
            return Err(CycloError::ZeroMultiplicity(exponent));
        }
        let slot = self.entries.entry(exponent).or_insert(0);
        *slot = slot.checked_add(multiplicity).ok_or(CycloError::Overflow)?;
        Ok(())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn multiplicity(&self, exponent: u64) -> u64 {
        self.entries.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, multiplicity)` pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&e, &a)| (e, a))
    }

    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.iter().collect()
    }

    /// The underlying list `x_1, …, x_n` as sorted exponents.
    pub fn sorted_exponents(&self) -> Vec<u64> {
        self.iter()
            .flat_map(|(e, a)| std::iter::repeat_n(e, a as usize))
            .collect()
    }

    /// Total size `n = Σ a_e`.
    pub fn size(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest multiplicity; 0 when empty.
    pub fn max_multiplicity(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    pub fn is_distinct(&self) -> bool {
        self.entries.values().all(|&a| a == 1)
    }

    /// Shift every exponent by `c` mod `m`, i.e. multiply the sum by `ζ_m^c`.
    pub fn rotate(&self, c: u64) -> Self {
        let m = self.modulus;
        let entries = self
            .entries
            .iter()
            .map(|(&e, &a)| (((u128::from(e) + u128::from(c)) % u128::from(m)) as u64, a))
            .collect();
        Self { modulus: m, entries }
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (e, a)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}:{a}")?;
        }
        write!(f, "}}")
    }
}

/// Element of `ℤ[x]/(x^m − 1)`; index `e` holds the coefficient of `ζ_m^e`.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclotomicElement<T> {
    modulus: u64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> CyclotomicElement<T> {
    pub fn zero(modulus: u64) -> Result<Self, CycloError> {
        let len = modulus_len(modulus)?;
        Ok(Self { modulus, coeffs: vec![T::zero(); len] })
    }

    pub fn from_coeffs(modulus: u64, coeffs: Vec<T>) -> Result<Self, CycloError> {
        let len = modulus_len(modulus)?;
        if coeffs.len() != len {
            return Err(CycloError::LengthMismatch { expected: len, got: coeffs.len() });
        }
        Ok(Self { modulus, coeffs })
    }

    /// Folds an arbitrary polynomial into `ℤ[x]/(x^m − 1)` using `x^m = 1`.
    pub fn from_polynomial(modulus: u64, poly: &IntPolynomial<T>) -> Result<Self, CycloError> {
        let mut out = Self::zero(modulus)?;
        let len = out.coeffs.len();
        for (i, c) in poly.coeffs().iter().enumerate() {
            let slot = &mut out.coeffs[i % len];
            *slot = slot.checked_add(c).ok_or(CycloError::Overflow)?;
        }
        Ok(out)
    }

    /// `Σ_e a_e ζ_m^{ℓe}` for the multiset `s = {e: a_e}`.
    pub fn from_power_map(s: &ExponentMultiset, ell: u64) -> Result<Self, CycloError> {
        let m = s.modulus();
        let mut out = Self::zero(m)?;
        let ell = ell % m;
        for (e, a) in s.iter() {
            let idx = arith::mul_mod(ell, e, m) as usize;
            let a = lift::<T>(a)?;
            out.coeffs[idx] = out.coeffs[idx].checked_add(&a).ok_or(CycloError::Overflow)?;
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn to_polynomial(&self) -> IntPolynomial<T> {
        IntPolynomial::new(self.coeffs.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycloError> {
        if self.modulus != other.modulus {
            return Err(CycloError::LengthMismatch {
                expected: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b).ok_or(CycloError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self { modulus: self.modulus, coeffs })
    }

    /// Multiply by `ζ_m^c`.
    pub fn rotate(&self, c: u64) -> Self {
        let len = self.coeffs.len();
        let shift = (c % self.modulus) as usize;
        let mut coeffs = vec![T::zero(); len];
        for (i, v) in self.coeffs.iter().enumerate() {
            coeffs[(i + shift) % len] = v.clone();
        }
        Self { modulus: self.modulus, coeffs }
    }

    /// Canonical representative: the remainder mod `Φ_m`, of degree `< φ(m)`.
    pub fn reduce(&self) -> Result<IntPolynomial<T>, CycloError> {
        let phi = cyclotomic_polynomial::<T>(self.modulus)?;
        self.to_polynomial().rem_monic(&phi)
    }

    /// Exact vanishing test: `Φ_m` divides `Σ coeffs[e] x^e`.
    pub fn is_zero(&self) -> Result<bool, CycloError> {
        Ok(self.reduce()?.is_zero())
    }

    /// Floating-point value at `ζ_m = e^{2πi/m}`. Advisory only.
    pub fn to_complex(&self) -> Complex64 {
        let m = self.modulus as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| {
                let angle = std::f64::consts::TAU * e as f64 / m;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

/// Why a certificate failed verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("modulus m must be positive")]
    ZeroModulus,
    #[error("power l must be positive")]
    ZeroPower,
    #[error("a certificate must contain at least one root")]
    Empty,
    #[error("modulus mismatch: exponent {exponent} is not a residue mod {modulus}")]
    ModulusMismatch { exponent: u64, modulus: u64 },
    #[error("exponents must be strictly ascending (found {found} after {previous})")]
    Unsorted { previous: u64, found: u64 },
    #[error("exponent {0} has multiplicity 0")]
    ZeroMultiplicity(u64),
    #[error("declared n={declared} but multiplicities sum to {actual}")]
    SizeMismatch { declared: u64, actual: u64 },
    #[error("marked distinct but exponent {exponent} has multiplicity {multiplicity}")]
    NotDistinct { exponent: u64, multiplicity: u64 },
    #[error("power sum does not vanish in Z[zeta_{0}]")]
    NonVanishing(u64),
    #[error("arithmetic failure: {0}")]
    Arithmetic(#[from] CycloError),
}

/// Full check of a certificate: field consistency, declared size, the
/// distinctness flag, and exact vanishing of `Σ x_i^ℓ` in `ℤ[ζ_m]`.
pub fn check_certificate(c: &WitnessCertificate) -> Result<(), Rejection> {
    if c.m == 0 {
        return Err(Rejection::ZeroModulus);
    }
    if c.ell == 0 {
        return Err(Rejection::ZeroPower);
    }
    let mut previous: Option<u64> = None;
    let mut total: u64 = 0;
    for &(e, a) in &c.exponents {
        if e >= c.m {
            return Err(Rejection::ModulusMismatch { exponent: e, modulus: c.m });
        }
        if let Some(p) = previous {
            if e <= p {
                return Err(Rejection::Unsorted { previous: p, found: e });
            }
        }
        if a == 0 {
            return Err(Rejection::ZeroMultiplicity(e));
        }
        if c.distinct && a != 1 {
            return Err(Rejection::NotDistinct { exponent: e, multiplicity: a });
        }
        previous = Some(e);
        total = total.checked_add(a).ok_or(CycloError::Overflow)?;
    }
    if c.n == 0 {
        return Err(Rejection::Empty);
    }
    if total != c.n {
        return Err(Rejection::SizeMismatch { declared: c.n, actual: total });
    }
    let s = ExponentMultiset::from_pairs(c.m, c.exponents.iter().copied())?;
    if !crate::Cyclo::from_power_map(&s, c.ell)?.is_zero()? {
        return Err(Rejection::NonVanishing(c.m));
    }
    Ok(())
}

/// `true` iff [`check_certificate`] accepts `c`.
pub fn verify_certificate(c: &WitnessCertificate) -> bool {
    check_certificate(c).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyclo, Cyclo64, Int, Poly, Poly64};
    use num_complex::Complex64;

    /// Φ_m by numerically multiplying out `Π (x − ζ^k)` over primitive `k`,
    /// then rounding. Independent of the division route.
    fn phi_by_roots(m: u64) -> Vec<i64> {
        let mut poly = vec![Complex64::new(1.0, 0.0)];
        for k in (1..=m).filter(|&k| arith::gcd(k, m) == 1) {
            let root = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / m as f64);
            let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * root;
            }
            poly = next;
        }
        poly.iter().map(|c| c.re.round() as i64).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial::<Int>(1).unwrap(), Poly::from_i64s(&[-1, 1]).unwrap());
        assert_eq!(*cyclotomic_polynomial::<Int>(2).unwrap(), Poly::from_i64s(&[1, 1]).unwrap());
        // frozen from phi_by_roots(12)
        assert_eq!(phi_by_roots(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(
            *cyclotomic_polynomial::<Int>(12).unwrap(),
            Poly::from_i64s(&[1, 0, -1, 0, 1]).unwrap()
        );
        assert_eq!(cyclotomic_polynomial::<Int>(12).unwrap().to_string(), "x^4 - x^2 + 1");
    }

    #[test]
    fn division_route_matches_root_product() {
        for m in 1..=64 {
            let phi = cyclotomic_polynomial::<i64>(m).unwrap();
            assert_eq!(phi.coeffs(), phi_by_roots(m).as_slice(), "m={m}");
        }
    }

    #[test]
    fn phi_105_has_a_coefficient_of_minus_two() {
        let phi = cyclotomic_polynomial::<Int>(105).unwrap();
        assert_eq!(phi.degree(), Some(48));
        assert!(phi.coeffs().contains(&Int::from(-2)));
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let big = Poly64::from_i64s(&[i64::MAX, 1]).unwrap();
        assert_eq!(big.checked_mul(&big), Err(CycloError::Overflow));
        let s = ExponentMultiset::from_pairs(2, [(0, u64::MAX)]).unwrap();
        assert_eq!(Cyclo64::from_power_map(&s, 1), Err(CycloError::Overflow));
        assert!(Cyclo::from_power_map(&s, 1).is_ok());
    }

    #[test]
    fn division_errors() {
        let p = Poly::from_i64s(&[1, 0, 1]).unwrap();
        let not_monic = Poly::from_i64s(&[1, 2]).unwrap();
        assert_eq!(p.div_rem_monic(&not_monic), Err(CycloError::NotMonic));
        assert_eq!(p.div_rem_monic(&Poly::zero()), Err(CycloError::DivisionByZero));
        let x_minus_one = Poly::from_i64s(&[-1, 1]).unwrap();
        assert_eq!(p.exact_div_monic(&x_minus_one), Err(CycloError::InexactDivision));
    }

    #[test]
    fn power_map_examples() {
        let s = ExponentMultiset::from_exponents(3, [0, 1, 2]).unwrap();
        let v = Cyclo::from_power_map(&s, 1).unwrap();
        assert_eq!(v.coeffs(), &[Int::from(1), Int::from(1), Int::from(1)]);

        let s = ExponentMultiset::from_exponents(12, [0, 1, 2]).unwrap();
        let v = Cyclo64::from_power_map(&s, 8).unwrap();
        let mut expect = vec![0i64; 12];
        expect[0] = 1;
        expect[8] = 1;
        expect[4] = 1;
        assert_eq!(v.coeffs(), expect.as_slice());

        let s = ExponentMultiset::from_pairs(4, [(1, 2)]).unwrap();
        let v = Cyclo64::from_power_map(&s, 2).unwrap();
        assert_eq!(v.coeffs(), &[0, 0, 2, 0]);
    }

    #[test]
    fn zero_test_examples() {
        let full = Cyclo64::from_coeffs(3, vec![1, 1, 1]).unwrap();
        assert!(full.is_zero().unwrap());
        let partial = Cyclo64::from_coeffs(3, vec![1, 1, 0]).unwrap();
        assert!(!partial.is_zero().unwrap());

        let s = ExponentMultiset::from_exponents(30, [0, 6, 12, 18, 24, 1, 16]).unwrap();
        let v = Cyclo::from_power_map(&s, 1).unwrap();
        // oracle: divisibility by the root-product Φ_30
        let phi30 = Poly::from_i64s(&phi_by_roots(30)).unwrap();
        assert!(v.to_polynomial().rem_monic(&phi30).unwrap().is_zero());
        assert!(v.to_complex().norm() < 1e-9);
        assert!(v.is_zero().unwrap());
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert_eq!(
            Cyclo64::from_coeffs(3, vec![1, 1]),
            Err(CycloError::LengthMismatch { expected: 3, got: 2 })
        );
        assert_eq!(Cyclo64::zero(0), Err(CycloError::ZeroModulus));
    }

    #[test]
    fn monomial_residues_match_division() {
        for m in 1..=40u64 {
            let phi = cyclotomic_polynomial::<i64>(m).unwrap();
            let res = monomial_residues::<i64>(m).unwrap();
            for (e, r) in res.iter().enumerate() {
                let direct = Poly64::monomial(1, e).rem_monic(&phi).unwrap();
                assert_eq!(Poly64::new(r.clone()), direct, "m={m} e={e}");
            }
        }
    }

    #[test]
    fn multiset_basics() {
        let mut s = ExponentMultiset::new(6).unwrap();
        s.insert(0, 2).unwrap();
        s.insert(3, 1).unwrap();
        s.insert(0, 1).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.max_multiplicity(), 3);
        assert!(!s.is_distinct());
        assert_eq!(s.sorted_exponents(), vec![0, 0, 0, 3]);
        assert_eq!(s.rotate(4).pairs(), vec![(1, 1), (4, 3)]);
        assert_eq!(s.to_string(), "{0:3, 3:1}");
        assert_eq!(
            s.insert(6, 1),
            Err(CycloError::ExponentOutOfRange { exponent: 6, modulus: 6 })
        );
        assert_eq!(s.insert(1, 0), Err(CycloError::ZeroMultiplicity(1)));
        assert!(ExponentMultiset::new(0).is_err());
    }

    fn cert(m: u64, ell: u64, n: u64, exps: &[(u64, u64)], distinct: bool) -> WitnessCertificate {
        WitnessCertificate {
            m,
            ell,
            n,
            exponents: exps.to_vec(),
            distinct,
            derivation: Vec::new(),
        }
    }

    #[test]
    fn certificate_examples() {
        assert!(verify_certificate(&cert(2, 1, 2, &[(0, 1), (1, 1)], false)));
        assert!(verify_certificate(&cert(12, 8, 3, &[(0, 1), (1, 1), (2, 1)], true)));
        assert_eq!(
            check_certificate(&cert(6, 1, 3, &[(0, 1), (1, 1), (2, 1)], false)),
            Err(Rejection::NonVanishing(6))
        );
    }

    #[test]
    fn certificate_rejections() {
        assert_eq!(
            check_certificate(&cert(2, 1, 2, &[(0, 1), (2, 1)], false)),
            Err(Rejection::ModulusMismatch { exponent: 2, modulus: 2 })
        );
        assert_eq!(
            check_certificate(&cert(2, 1, 3, &[(0, 1), (1, 1)], false)),
            Err(Rejection::SizeMismatch { declared: 3, actual: 2 })
        );
        assert_eq!(
            check_certificate(&cert(2, 1, 4, &[(0, 2), (1, 2)], true)),
            Err(Rejection::NotDistinct { exponent: 0, multiplicity: 2 })
        );
        assert_eq!(
            check_certificate(&cert(2, 1, 2, &[(1, 1), (0, 1)], false)),
            Err(Rejection::Unsorted { previous: 1, found: 0 })
        );
        assert_eq!(
            check_certificate(&cert(2, 1, 2, &[(0, 0), (1, 2)], false)),
            Err(Rejection::ZeroMultiplicity(0))
        );
        assert_eq!(check_certificate(&cert(0, 1, 0, &[], false)), Err(Rejection::ZeroModulus));
        assert_eq!(check_certificate(&cert(2, 0, 0, &[], false)), Err(Rejection::ZeroPower));
    }
}
