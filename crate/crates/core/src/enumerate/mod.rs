//! Exact counts of sequences by linear complexity.
//!
//! `b(n, r)` is the number of length-`n` sequences over `F_q` with linear
//! complexity at most `r`, i.e. the size of a ball of radius `r` in the LC
//! metric. It is computed three independent ways (closed form, the
//! two-step recurrence, and the sum over the first nonzero index) which must
//! agree, and all of them are checked against brute-force enumeration.
//!
//! Counting only needs the integer `q`. Nothing here uses floating point.

mod daykin;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::lfsr::{berlekamp_massey_raw, for_each_sequence, Sequence};
use crate::matrix::MatrixFq;

pub use daykin::{daykin_check, daykin_witness, DaykinWitness};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Default bound on `q^n` for brute-force enumeration.
pub const DEFAULT_BRUTE_LIMIT: u64 = 1 << 24;

/// Which formula computes `b(n, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Recur,
    Sum,
}

fn pow(q: u64, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn check_params(q: u64, n: usize, r: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::BadParams(format!("q must be at least 2, got {q}")));
    }
    if r > n {
        return Err(Error::BadParams(format!(
            "need 0 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

fn exact_div(num: &BigUint, den: &BigUint) -> Result<BigUint> {
    if !(num % den).is_zero() {
        return Err(Error::InexactDivision(format!("{num} / {den}")));
    }
    Ok(num / den)
}

/// Closed form for `b(n, r)`:
/// `(q^{2r+1} + 1)/(q + 1)` when `2r + 1 <= n`, otherwise
/// `q^n - (q^{2(n-r)} - 1)/(q + 1)`.
pub fn count_le_closed(q: u64, n: usize, r: usize) -> Result<BigCount> {
    check_params(q, n, r)?;
    if r == 0 {
        return Ok(BigUint::one());
    }
    let q1 = BigUint::from(q + 1);
    if r < n - r {
        exact_div(&(pow(q, 2 * r + 1) + 1u32), &q1)
    } else {
        Ok(pow(q, n) - exact_div(&(pow(q, 2 * (n - r)) - 1u32), &q1)?)
    }
}

/// `b(n, r) = 1 - q + q^2 b(n-2, r-1)`, anchored at `b(m, 0) = 1` and
/// `b(m, s) = q^m` for `s >= m`.
pub fn count_le_recur(q: u64, n: usize, r: usize) -> Result<BigCount> {
    check_params(q, n, r)?;
    let (mut m, mut s, mut depth) = (n, r, 0usize);
    let mut b = loop {
        if s == 0 {
            break BigUint::one();
        }
        if s >= m {
            break pow(q, m);
        }
        m -= 2;
        s -= 1;
        depth += 1;
    };
    let q = BigUint::from(q);
    let q2 = &q * &q;
    for _ in 0..depth {
        b = &q2 * b + 1u32 - &q;
    }
    Ok(b)
}

/// `b(n, r)` as `1 + sum_u b(n, r, u)` with the per-`u` counts expanded
/// recursively. Memoized on `(n, r)`.
pub fn count_le_sum(q: u64, n: usize, r: usize) -> Result<BigCount> {
    check_params(q, n, r)?;
    let mut memo = HashMap::new();
    Ok(sum_rec(q, n, r, &mut memo))
}

fn sum_rec(q: u64, n: usize, r: usize, memo: &mut HashMap<(usize, usize), BigUint>) -> BigUint {
    if r == 0 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&(n, r)) {
        return v.clone();
    }
    let qm1 = BigUint::from(q - 1);
    let mut total = BigUint::one();
    let reduced_terms = if r < n - r {
        r
    } else {
        (n - r).saturating_sub(1)
    };
    for u in 0..reduced_terms {
        let inner = sum_rec(q, n - 2 * u - 2, r - u - 1, memo);
        total += pow(q, u + 1) * &qm1 * inner;
    }
    if n - r <= r {
        for u in (n - r).saturating_sub(1)..r {
            total += &qm1 * pow(q, n - u - 1);
        }
    }
    memo.insert((n, r), total.clone());
    total
}

pub fn count_le(method: Method, q: u64, n: usize, r: usize) -> Result<BigCount> {
    match method {
        Method::Closed => count_le_closed(q, n, r),
        Method::Recur => count_le_recur(q, n, r),
        Method::Sum => count_le_sum(q, n, r),
    }
}

/// Number of length-`n` sequences with linear complexity exactly `r`.
pub fn count_exact(q: u64, n: usize, r: usize) -> Result<BigCount> {
    check_params(q, n, r)?;
    let qm1 = BigUint::from(q - 1);
    Ok(if r == 0 {
        BigUint::one()
    } else if r <= n / 2 {
        pow(q, 2 * r - 1) * qm1
    } else {
        pow(q, 2 * (n - r)) * qm1
    })
}

/// `b(n, r, u)`: nonzero sequences of linear complexity at most `r` whose
/// first nonzero term sits at index `u`.
pub fn count_first_nonzero(q: u64, n: usize, r: usize, u: usize) -> Result<BigCount> {
    check_params(q, n, r)?;
    if u >= n {
        return Err(Error::BadParams(format!(
            "need 0 <= u <= n - 1, got n = {n}, u = {u}"
        )));
    }
    let qm1 = BigUint::from(q - 1);
    if u >= r {
        return Ok(BigUint::zero());
    }
    let short_ball = r < n - r;
    if !short_ball && u + 1 >= n - r {
        return Ok(pow(q, n - u - 1) * qm1);
    }
    Ok(pow(q, u + 1) * qm1 * count_le_closed(q, n - 2 * u - 2, r - u - 1)?)
}

/// Sequence counts indexed by linear complexity `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityHistogram {
    q: u64,
    n: usize,
    counts: Vec<BigCount>,
}

impl ComplexityHistogram {
    pub fn new(q: u64, n: usize, counts: Vec<BigCount>) -> Result<ComplexityHistogram> {
        if counts.len() != n + 1 {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                found: counts.len(),
            });
        }
        Ok(ComplexityHistogram { q, n, counts })
    }

    /// Exact counts from the closed formula.
    pub fn from_formula(q: u64, n: usize) -> Result<ComplexityHistogram> {
        let counts = (0..=n)
            .map(|r| count_exact(q, n, r))
            .collect::<Result<_>>()?;
        ComplexityHistogram::new(q, n, counts)
    }

    /// Exact counts as successive differences of `b(n, r)`.
    pub fn from_balls(method: Method, q: u64, n: usize) -> Result<ComplexityHistogram> {
        let balls = (0..=n)
            .map(|r| count_le(method, q, n, r))
            .collect::<Result<Vec<_>>>()?;
        let counts = (0..=n)
            .map(|r| {
                if r == 0 {
                    balls[0].clone()
                } else {
                    &balls[r] - &balls[r - 1]
                }
            })
            .collect();
        ComplexityHistogram::new(q, n, counts)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigCount] {
        &self.counts
    }

    /// Count of sequences with linear complexity at most `r`.
    pub fn cumulative(&self, r: usize) -> BigCount {
        self.counts[..=r.min(self.n)].iter().sum()
    }

    pub fn total(&self) -> BigCount {
        self.counts.iter().sum()
    }
}

/// Tallies every sequence of length `n` by its linear complexity.
pub fn brute_histogram(field: &Field, n: usize) -> Result<ComplexityHistogram> {
    brute_histogram_limited(field, n, DEFAULT_BRUTE_LIMIT)
}

fn check_space(field: &Field, n: usize, limit: u64) -> Result<()> {
    let size = (field.q() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::OracleTooLarge(format!(
            "{}^{n} sequences exceed the limit {limit}",
            field.q()
        )));
    }
    Ok(())
}

pub fn brute_histogram_limited(field: &Field, n: usize, limit: u64) -> Result<ComplexityHistogram> {
    check_space(field, n, limit)?;
    let mut tally = vec![0u64; n + 1];
    for_each_sequence(field, n, |s| tally[berlekamp_massey_raw(field, s).0] += 1);
    ComplexityHistogram::new(field.q(), n, tally.into_iter().map(BigUint::from).collect())
}

/// Brute-force `b(n, r, u)`.
pub fn brute_first_nonzero(
    field: &Field,
    n: usize,
    r: usize,
    u: usize,
    limit: u64,
) -> Result<BigCount> {
    check_params(field.q(), n, r)?;
    check_space(field, n, limit)?;
    let mut count = 0u64;
    for_each_sequence(field, n, |s| {
        if s.iter().position(|e| !e.is_zero()) == Some(u) && berlekamp_massey_raw(field, s).0 <= r {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

/// `floor(q^n / b(n, t))` with `t = floor((d - 1)/2)`: balls of radius `t`
/// around the members of a code of minimum distance `d` are disjoint.
pub fn sphere_packing_bound(q: u64, n: usize, d: usize) -> Result<BigCount> {
    if d == 0 || d > n {
        return Err(Error::BadParams(format!(
            "need 1 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    let ball = count_le_closed(q, n, (d - 1) / 2)?;
    Ok(pow(q, n) / ball)
}

/// The `(r+1) x (n-r)` matrix with entry `(i, k) = a_{i+k}`. Its last row is
/// a combination of the others iff the sequence has an order-`r` register.
pub fn persymmetric_matrix(s: &Sequence, r: usize) -> Result<MatrixFq> {
    let n = s.len();
    if r >= n {
        return Err(Error::BadParams(format!(
            "need 0 <= r <= n - 1, got n = {n}, r = {r}"
        )));
    }
    let a: &[Fe] = s.elems();
    Ok(MatrixFq::from_fn(s.field(), r + 1, n - r, |i, k| a[i + k]))
}
