//! Exhaustive search for vanishing power sums.
//!
//! This module is the ground truth the rest of the crate is tested against.
//! It knows nothing about semigroups, reductions or lifting: it walks over
//! exponent multiplicity vectors and accepts a candidate only if the exact
//! zero test from [`crate::cyclotomic`] passes.
//!
//! Exponents are visited in ascending order and multiplicities in
//! descending order, so the first witness found is the lexicographically
//! smallest sorted exponent list. The search is pruned without ever
//! discarding a witness:
//!
//! * rotation: any witness can be rotated so that it contains exponent 0,
//!   and the lexicographically smallest one already does;
//! * linear constraints: vanishing means `Σ c_e · (x^{ℓe} mod Φ_m) = 0`, a
//!   linear system in the multiplicities `c_e`, together with `Σ c_e = n`.
//!   The system is brought to a form where every row has a distinct last
//!   column, so once the search reaches that column its multiplicity is
//!   forced. Rows still open must stay solvable over the unvisited columns
//!   (divisibility by the gcd of their coefficients, and a range bound);
//! * failure memo: a state is the next exponent, the remaining count and
//!   the partial row values; a state that failed once fails again.
//!
//! All arithmetic is exact integer arithmetic.

use std::collections::HashSet;

use thiserror::Error;

use crate::arith;
use crate::cyclotomic::{monomial_residues, CycloError, ExponentMultiset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search: {0}")]
    InvalidSpec(&'static str),
    #[error(transparent)]
    Arithmetic(#[from] CycloError),
}

/// Parameters of one exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpec {
    pub m: u64,
    pub n: u64,
    pub ell: u64,
    pub max_multiplicity: u64,
    pub distinct_only: bool,
    pub node_budget: u64,
    /// Force exponent 0 into the witness (rotation symmetry). On by default.
    pub fix_first: bool,
}

impl SearchSpec {
    /// Multiplicity bounded only by `n`.
    pub fn unbounded(m: u64, n: u64, ell: u64) -> Self {
        Self::bounded(m, n, ell, n)
    }

    pub fn bounded(m: u64, n: u64, ell: u64, max_multiplicity: u64) -> Self {
        Self {
            m,
            n,
            ell,
            max_multiplicity,
            distinct_only: false,
            node_budget: crate::DEFAULT_BUDGET,
            fix_first: true,
        }
    }

    pub fn distinct(m: u64, n: u64, ell: u64) -> Self {
        Self { distinct_only: true, ..Self::bounded(m, n, ell, 1) }
    }

    pub fn with_budget(self, node_budget: u64) -> Self {
        Self { node_budget, ..self }
    }

    pub fn without_symmetry(self) -> Self {
        Self { fix_first: false, ..self }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.m == 0 {
            return Err(SearchError::InvalidSpec("modulus must be positive"));
        }
        if self.n == 0 {
            return Err(SearchError::InvalidSpec("target size must be positive"));
        }
        if self.max_multiplicity == 0 {
            return Err(SearchError::InvalidSpec("multiplicity bound must be positive"));
        }
        if self.distinct_only && self.max_multiplicity != 1 {
            return Err(SearchError::InvalidSpec("distinct search needs multiplicity bound 1"));
        }
        if self.distinct_only && self.n > self.m {
            return Err(SearchError::InvalidSpec("distinct search needs n <= m"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ExponentMultiset),
    NotFound,
    BudgetExceeded { nodes: u64 },
}

impl SearchOutcome {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::NotFound => Some(false),
            SearchOutcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&ExponentMultiset> {
        match self {
            SearchOutcome::Found(s) => Some(s),
            _ => None,
        }
    }
}

/// `coeffs · c = rhs`, with `coeffs[pivot]` the last nonzero entry.
#[derive(Debug, Clone)]
struct Row {
    coeffs: Vec<i64>,
    rhs: i64,
    pivot: usize,
    /// Over columns `k..`: gcd of entries, sum and max of positive entries,
    /// sum and min of negative entries.
    gcd: Vec<i64>,
    pos_sum: Vec<i64>,
    pos_max: Vec<i64>,
    neg_sum: Vec<i64>,
    neg_min: Vec<i64>,
}

impl Row {
    fn new(coeffs: Vec<i64>, rhs: i64, pivot: usize) -> Self {
        let m = coeffs.len();
        let mut gcd = vec![0; m + 1];
        let mut pos_sum = vec![0; m + 1];
        let mut pos_max = vec![0; m + 1];
        let mut neg_sum = vec![0; m + 1];
        let mut neg_min = vec![0; m + 1];
        for k in (0..m).rev() {
            let a = coeffs[k];
            gcd[k] = num_integer::gcd(gcd[k + 1], a);
            pos_sum[k] = pos_sum[k + 1] + a.max(0);
            pos_max[k] = pos_max[k + 1].max(a);
            neg_sum[k] = neg_sum[k + 1] + a.min(0);
            neg_min[k] = neg_min[k + 1].min(a);
        }
        Self { coeffs, rhs, pivot, gcd, pos_sum, pos_max, neg_sum, neg_min }
    }

    /// Can `Σ_{e≥k} coeffs[e]·c_e = target` hold with `0 ≤ c_e ≤ cap` and
    /// `Σ c_e = remaining`?
    fn open(&self, k: usize, target: i128, cap: i128, remaining: i128) -> bool {
        let g = i128::from(self.gcd[k]);
        if g == 0 {
            return target == 0;
        }
        if target % g != 0 {
            return false;
        }
        let hi = (i128::from(self.pos_sum[k]) * cap).min(i128::from(self.pos_max[k]) * remaining);
        let lo = (i128::from(self.neg_sum[k]) * cap).max(i128::from(self.neg_min[k]) * remaining);
        lo <= target && target <= hi
    }
}

/// Row-reduces the system `[A | 0; 1…1 | n]` so that each row's last
/// nonzero column is distinct and appears in no other row. `None` when the
/// system is inconsistent.
fn reduce_system(columns: &[Vec<i64>], n: u64) -> Result<Option<Vec<Row>>, CycloError> {
    let m = columns.len();
    let phi = columns[0].len();
    // rows as i128 with the rhs in the final slot
    let mut rows: Vec<Vec<i128>> = (0..phi)
        .map(|i| {
            let mut r: Vec<i128> = columns.iter().map(|col| i128::from(col[i])).collect();
            r.push(0);
            r
        })
        .collect();
    let mut sum_row = vec![1i128; m];
    sum_row.push(i128::from(n));
    rows.push(sum_row);

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row index, column)
    let mut used = vec![false; rows.len()];
    for col in (0..m).rev() {
        let Some(p) = (0..rows.len()).find(|&r| !used[r] && rows[r][col] != 0) else {
            continue;
        };
        used[p] = true;
        pivots.push((p, col));
        let pivot_row = rows[p].clone();
        let a = pivot_row[col];
        for (r, row) in rows.iter_mut().enumerate() {
            if r == p || row[col] == 0 {
                continue;
            }
            let b = row[col];
            let g = num_integer::gcd(a, b);
            let (fa, fb) = (a / g, b / g);
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = x
                    .checked_mul(fa)
                    .and_then(|v| y.checked_mul(fb).and_then(|w| v.checked_sub(w)))
                    .ok_or(CycloError::Overflow)?;
            }
            normalize(row);
        }
    }
    // leftover rows are all-zero on the coefficient side
    if (0..rows.len()).any(|r| !used[r] && rows[r][m] != 0) {
        return Ok(None);
    }
    pivots.sort_by_key(|&(_, col)| col);
    pivots
        .into_iter()
        .map(|(r, col)| {
            let mut row = rows[r].clone();
            if row[col] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            let narrow = row
                .iter()
                .map(|&x| i64::try_from(x).map_err(|_| CycloError::Overflow))
                .collect::<Result<Vec<i64>, _>>()?;
            let (coeffs, rhs) = narrow.split_at(m);
            Ok(Row::new(coeffs.to_vec(), rhs[0], col))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

struct OutOfBudget;

struct Search {
    m: usize,
    h: u64,
    fix_first: bool,
    budget: u64,
    nodes: u64,
    rows: Vec<Row>,
    /// `pivot_of[k]`: the row forced at column `k`.
    pivot_of: Vec<Option<usize>>,
    /// `partials[k][r]`: `Σ_{e<k} rows[r].coeffs[e]·c_e`.
    partials: Vec<Vec<i128>>,
    counts: Vec<u64>,
    failed: HashSet<(usize, u64, Box<[i128]>)>,
}

impl Search {
    fn dfs(&mut self, k: usize, remaining: u64) -> Result<bool, OutOfBudget> {
        if k == self.m {
            return Ok(remaining == 0);
        }
        let slots = (self.m - k) as u64;
        if remaining > self.h.saturating_mul(slots) {
            return Ok(false);
        }
        let cap = i128::from(self.h.min(remaining));
        let rem = i128::from(remaining);
        for (r, row) in self.rows.iter().enumerate() {
            if row.pivot >= k && !row.open(k, i128::from(row.rhs) - self.partials[k][r], cap, rem) {
                return Ok(false);
            }
        }
        let key = (k, remaining, self.partials[k].clone().into_boxed_slice());
        if self.failed.contains(&key) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let lo = u64::from(k == 0 && self.fix_first);
        let hi = self.h.min(remaining);
        let choices: Vec<u64> = match self.pivot_of[k] {
            Some(r) => {
                let row = &self.rows[r];
                let num = i128::from(row.rhs) - self.partials[k][r];
                let den = i128::from(row.coeffs[k]);
                if num % den != 0 {
                    vec![]
                } else {
                    let v = num / den;
                    if v >= i128::from(lo) && v <= i128::from(hi) {
                        vec![v as u64]
                    } else {
                        vec![]
                    }
                }
            }
            None => (lo..=hi).rev().collect(),
        };
        for c in choices {
            self.advance(k, c);
            self.counts[k] = c;
            if self.dfs(k + 1, remaining - c)? {
                return Ok(true);
            }
        }
        self.counts[k] = 0;
        self.failed.insert(key);
        Ok(false)
    }

    /// Level `k + 1` partial row values after placing `c` copies of `k`.
    fn advance(&mut self, k: usize, c: u64) {
        let (lower, upper) = self.partials.split_at_mut(k + 1);
        let c = i128::from(c);
        for (r, row) in self.rows.iter().enumerate() {
            upper[0][r] = lower[k][r] + i128::from(row.coeffs[k]) * c;
        }
    }
}

/// Looks for a multiset of `n` exponents mod `m`, each used at most
/// `max_multiplicity` times, whose `ℓ`-th power sum vanishes.
pub fn exists_witness(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    spec.validate()?;
    let m = usize::try_from(spec.m).map_err(|_| CycloError::ModulusTooLarge(spec.m))?;
    let basis = monomial_residues::<i64>(spec.m)?;
    let columns: Vec<Vec<i64>> = (0..spec.m)
        .map(|e| basis[arith::mul_mod(spec.ell, e, spec.m) as usize].clone())
        .collect();
    let Some(rows) = reduce_system(&columns, spec.n)? else {
        return Ok(SearchOutcome::NotFound);
    };
    let mut pivot_of = vec![None; m];
    for (r, row) in rows.iter().enumerate() {
        pivot_of[row.pivot] = Some(r);
    }
    let mut search = Search {
        m,
        h: spec.max_multiplicity,
        fix_first: spec.fix_first,
        budget: spec.node_budget,
        nodes: 0,
        partials: vec![vec![0; rows.len()]; m + 1],
        rows,
        pivot_of,
        counts: vec![0; m],
        failed: HashSet::new(),
    };
    match search.dfs(0, spec.n) {
        Err(OutOfBudget) => Ok(SearchOutcome::BudgetExceeded { nodes: search.nodes }),
        Ok(false) => Ok(SearchOutcome::NotFound),
        Ok(true) => {
            let pairs = search
                .counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(e, &c)| (e as u64, c));
            let found = ExponentMultiset::from_pairs(spec.m, pairs)?;
            assert!(
                crate::Cyclo::from_power_map(&found, spec.ell)?.is_zero()?,
                "linear constraints disagreed with the exact zero test"
            );
            Ok(SearchOutcome::Found(found))
        }
    }
}

/// Membership of `1..=n_max` in `W_ℓ(m)` by search with unbounded
/// multiplicity. Index `i` holds the answer for `n = i + 1`; `None` marks
/// an exhausted budget.
pub fn enumerate_w(m: u64, ell: u64, n_max: u64, node_budget: u64) -> Result<Vec<Option<bool>>, SearchError> {
    (1..=n_max)
        .map(|n| {
            let spec = SearchSpec::unbounded(m, n, ell).with_budget(node_budget);
            Ok(exists_witness(&spec)?.as_bool())
        })
        .collect()
}
