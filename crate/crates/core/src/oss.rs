//! Codes under the linear-complexity metric: minimum distance, the Singleton
//! bound, the optimal set `{(0, ..., 0, a_1, ..., a_k)}` and its decoder.

use num_bigint::BigUint;

use crate::enumerate::BigCount;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::lfsr::{berlekamp_massey_raw, lc_distance, linear_complexity, Sequence};

/// Default bound on the number of pairs examined by [`min_distance_exhaustive`].
pub const DEFAULT_PAIR_LIMIT: u64 = 1_000_000;

/// Parameters of the optimal set of length `n` and dimension `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OssParams {
    field: Field,
    n: usize,
    k: usize,
}

impl OssParams {
    pub fn new(field: &Field, n: usize, k: usize) -> Result<OssParams> {
        if k == 0 || k > n {
            return Err(Error::BadParams(format!(
                "need 1 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        Ok(OssParams {
            field: field.clone(),
            n,
            k,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n - k + 1`.
    pub fn min_distance(&self) -> usize {
        self.n - self.k + 1
    }

    /// Largest `L(e)` the decoder corrects: `2 L(e) <= n - k`.
    pub fn radius(&self) -> usize {
        (self.n - self.k) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub message: Vec<Fe>,
    pub error: Sequence,
    pub corrected: Sequence,
}

/// `n - k` zeros followed by the message.
pub fn oss_encode(params: &OssParams, msg: &[Fe]) -> Result<Sequence> {
    if msg.len() != params.k {
        return Err(Error::LengthMismatch {
            expected: params.k,
            found: msg.len(),
        });
    }
    let mut elems = vec![Fe::ZERO; params.n - params.k];
    elems.extend_from_slice(msg);
    Sequence::new(&params.field, elems)
}

/// Unique decoding: the first `n - k` received terms are the error's, so
/// Berlekamp-Massey on them recovers the error register, which is run out to
/// length `n`. The result is verified before it is returned.
pub fn oss_decode(params: &OssParams, recv: &Sequence) -> Result<DecodeResult> {
    let f = &params.field;
    if recv.field() != f {
        return Err(Error::FieldMismatch);
    }
    if recv.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            found: recv.len(),
        });
    }
    let nk = params.n - params.k;
    let prefix = &recv.elems()[..nk];
    let (l, conn) = berlekamp_massey_raw(f, prefix);
    if 2 * l > nk {
        return Err(Error::DecodeFailure(format!(
            "error prefix has linear complexity {l}, beyond radius {}",
            params.radius()
        )));
    }

    let mut err: Vec<Fe> = prefix[..l].to_vec();
    for i in l..params.n {
        // a_i = -sum_{j=1}^{L} f_j a_{i-j}
        let mut acc = Fe::ZERO;
        for j in 1..=l {
            let fj = conn.get(j).copied().unwrap_or(Fe::ZERO);
            acc = f.sub(acc, f.mul(fj, err[i - j]));
        }
        err.push(acc);
    }
    if err[..nk] != *prefix {
        return Err(Error::DecodeFailure(
            "recovered register does not reproduce the prefix".into(),
        ));
    }
    let error = Sequence::new(f, err)?;
    let lc = linear_complexity(&error);
    if 2 * lc > nk {
        return Err(Error::DecodeFailure(format!(
            "rebuilt error has linear complexity {lc}, beyond radius {}",
            params.radius()
        )));
    }
    let corrected = recv.sub(&error)?;
    if corrected.elems()[..nk].iter().any(|e| !e.is_zero()) {
        return Err(Error::DecodeFailure(
            "corrected word is not in the code".into(),
        ));
    }
    let message = corrected.elems()[nk..].to_vec();
    Ok(DecodeResult {
        message,
        error,
        corrected,
    })
}

/// Every codeword, messages in canonical lexicographic order.
pub fn oss_codebook(params: &OssParams, limit: u64) -> Result<Vec<Sequence>> {
    let q = params.field.q();
    let size = (q as u128)
        .checked_pow(params.k as u32)
        .unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::TooLarge(format!(
            "{q}^{} codewords exceed the limit {limit}",
            params.k
        )));
    }
    let mut out = Vec::with_capacity(size as usize);
    crate::lfsr::for_each_sequence(&params.field, params.k, |msg| {
        out.push(oss_encode(params, msg).expect("message has length k"));
    });
    Ok(out)
}

/// Minimum LC distance over pairs of distinct members.
pub fn min_distance_exhaustive(set: &[Sequence]) -> Result<usize> {
    min_distance_exhaustive_limited(set, DEFAULT_PAIR_LIMIT)
}

pub fn min_distance_exhaustive_limited(set: &[Sequence], pair_limit: u64) -> Result<usize> {
    check_set(set)?;
    let pairs = (set.len() as u128) * (set.len() as u128 - 1) / 2;
    if pairs > pair_limit as u128 {
        return Err(Error::TooLarge(format!(
            "{pairs} pairs exceed the limit {pair_limit}"
        )));
    }
    let mut best: Option<usize> = None;
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if a == b {
                continue;
            }
            let d = lc_distance(a, b)?;
            best = Some(best.map_or(d, |x| x.min(d)));
        }
    }
    best.ok_or_else(|| Error::DegenerateSet("no two distinct members".into()))
}

/// Minimum linear complexity over nonzero members. For a linear set this is
/// its minimum distance.
pub fn min_distance_linear(set: &[Sequence]) -> Result<usize> {
    check_set(set)?;
    set.iter()
        .filter(|s| !s.is_zero())
        .map(linear_complexity)
        .min()
        .ok_or_else(|| Error::DegenerateSet("no nonzero members".into()))
}

/// Whether `set` meets the Singleton bound with equality: its members are
/// distinct and `#set = q^{n-d+1}` for its exhaustive minimum distance `d`.
/// Works for any candidate set, not only the zero-prefix family.
pub fn is_optimal_set(set: &[Sequence], pair_limit: u64) -> Result<bool> {
    let d = min_distance_exhaustive_limited(set, pair_limit)?;
    let distinct: std::collections::HashSet<&[Fe]> = set.iter().map(Sequence::elems).collect();
    if distinct.len() != set.len() {
        return Ok(false);
    }
    let f = set[0].field();
    Ok(singleton_bound(f.q(), set[0].len(), d)? == BigCount::from(set.len()))
}

fn check_set(set: &[Sequence]) -> Result<()> {
    if set.len() < 2 {
        return Err(Error::DegenerateSet(format!("{} member(s)", set.len())));
    }
    let first = &set[0];
    for s in &set[1..] {
        if s.field() != first.field() {
            return Err(Error::FieldMismatch);
        }
        if s.len() != first.len() {
            return Err(Error::LengthMismatch {
                expected: first.len(),
                found: s.len(),
            });
        }
    }
    Ok(())
}

/// `q^{n-d+1}`.
pub fn singleton_bound(q: u64, n: usize, d: usize) -> Result<BigCount> {
    if q < 2 {
        return Err(Error::BadParams(format!(
            "field order must be at least 2, got {q}"
        )));
    }
    if d == 0 || d > n {
        return Err(Error::BadParams(format!(
            "need 1 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    Ok(BigUint::from(q).pow((n - d + 1) as u32))
}

/// Sums of the `n - d + 1` windows of length `d`: the all-ones row vector
/// times the `d x (n-d+1)` window matrix. Injective on any set of minimum
/// distance at least `d`.
pub fn singleton_projection(s: &Sequence, d: usize) -> Result<Vec<Fe>> {
    let ones = vec![Fe::ONE; d];
    singleton_projection_with(s, d, &ones)
}

/// Projection with an arbitrary weight vector of length `d` whose last entry
/// is 1. `(0, ..., 0, 1)` punctures the first `d - 1` positions.
pub fn singleton_projection_with(s: &Sequence, d: usize, weights: &[Fe]) -> Result<Vec<Fe>> {
    let n = s.len();
    if d == 0 || d > n {
        return Err(Error::BadParams(format!(
            "need 1 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    if weights.len() != d || weights[d - 1] != Fe::ONE {
        return Err(Error::BadParams(
            "weights must have length d and end in 1".into(),
        ));
    }
    let f = s.field();
    let a = s.elems();
    Ok((0..=n - d)
        .map(|j| (0..d).fold(Fe::ZERO, |acc, i| f.add(acc, f.mul(weights[i], a[i + j]))))
        .collect())
}
