//! Periodic linear complexity and Reed-Solomon codes.
//!
//! For `f(x) = a_0 + ... + a_{q-2} x^{q-2}` the König-Rados theorem counts
//! the roots of `f` in `F_q^*` as `q - 1 - rank(A)` with `A` the circulant of
//! the coefficients. Equivalently the periodic linear complexity of
//! `(a_0, ..., a_{q-2})` equals the Hamming weight of its evaluation over
//! `F_q^*`, which turns Reed-Solomon decoding into a Berlekamp-Massey problem
//! on the interpolated coefficients.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::lfsr::{berlekamp_massey_raw, linear_complexity, Sequence};
use crate::matrix::MatrixFq;
use crate::poly::Polynomial;

/// Largest field order for which the evaluation set `F_q^*` is materialized.
pub const MAX_EVAL_ORDER: u64 = 1 << 20;

/// Reed-Solomon code of length `q - 1` evaluated on all of `F_q^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsParams {
    field: Field,
    k: usize,
    alphas: Vec<Fe>,
}

impl RsParams {
    /// Evaluation points are the nonzero elements in canonical order.
    pub fn new(field: &Field, k: usize) -> Result<RsParams> {
        if field.q() > MAX_EVAL_ORDER {
            return Err(Error::TooLarge(format!(
                "field order {} exceeds {MAX_EVAL_ORDER}",
                field.q()
            )));
        }
        let n = (field.q() - 1) as usize;
        if k == 0 || k > n {
            return Err(Error::BadParams(format!("need 1 <= k <= {n}, got k = {k}")));
        }
        Ok(RsParams {
            field: field.clone(),
            k,
            alphas: field.nonzero_elements().collect(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphas(&self) -> &[Fe] {
        &self.alphas
    }

    /// Number of symbol errors corrected: `floor((n - k) / 2)`.
    pub fn radius(&self) -> usize {
        (self.n() - self.k) / 2
    }
}

/// Coefficients `a_0 .. a_{q-2}` of a polynomial of degree at most `q - 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffVector {
    field: Field,
    coeffs: Vec<Fe>,
}

impl CoeffVector {
    pub fn new(field: &Field, coeffs: Vec<Fe>) -> Result<CoeffVector> {
        let expected = (field.q() - 1) as usize;
        if coeffs.len() != expected {
            return Err(Error::BadLength {
                expected,
                found: coeffs.len(),
            });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::ElementOutOfRange {
                index: bad.index(),
                q: field.q(),
            });
        }
        Ok(CoeffVector {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn as_sequence(&self) -> Sequence {
        Sequence::from_canonical(&self.field, self.coeffs.clone())
    }
}

/// Entry `(i, j)` is `a_{(i + j) mod (q - 1)}`.
pub fn circulant(c: &CoeffVector) -> MatrixFq {
    let n = c.coeffs.len();
    MatrixFq::from_fn(&c.field, n, n, |i, j| c.coeffs[(i + j) % n])
}

/// Roots in `F_q^*`, as `q - 1 - rank(circulant)`.
pub fn konig_rados_roots(c: &CoeffVector) -> usize {
    c.coeffs.len() - circulant(c).rank()
}

/// Roots in `F_q^*`, by evaluating everywhere.
pub fn count_roots_direct(c: &CoeffVector) -> usize {
    c.field
        .nonzero_elements()
        .filter(|&x| c.field.eval_poly(&c.coeffs, x).is_zero())
        .count()
}

/// `(f(alpha_1), ..., f(alpha_n))` for `f` with the given `k` coefficients.
pub fn rs_encode(params: &RsParams, msg: &[Fe]) -> Result<Sequence> {
    if msg.len() != params.k {
        return Err(Error::BadLength {
            expected: params.k,
            found: msg.len(),
        });
    }
    if let Some(&bad) = msg.iter().find(|&&c| !params.field.contains(c)) {
        return Err(Error::ElementOutOfRange {
            index: bad.index(),
            q: params.field.q(),
        });
    }
    let f = &params.field;
    let word = params.alphas.iter().map(|&x| f.eval_poly(msg, x)).collect();
    Ok(Sequence::from_canonical(f, word))
}

/// The unique polynomial of degree below `points.len()` through `points`.
pub fn lagrange_interpolate(field: &Field, points: &[(Fe, Fe)]) -> Result<Polynomial> {
    for (i, &(x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|&(y, _)| y == x) {
            return Err(Error::DuplicateX);
        }
    }
    let f = field;
    let mut acc = Polynomial::zero(f);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one(f);
        let mut denom = Fe::ONE;
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Polynomial::from_canonical(f, vec![f.neg(xj), Fe::ONE]))?;
            denom = f.mul(denom, f.sub(xi, xj));
        }
        acc = acc.add(&basis.scale(f.div(yi, denom)?))?;
    }
    Ok(acc)
}

/// Linear complexity of the periodic extension of `s`: Berlekamp-Massey on
/// two periods. The plain linear complexity of the finite vector is
/// [`crate::lfsr::linear_complexity`] and may be smaller.
pub fn periodic_lc(s: &Sequence) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(linear_complexity(&s.concat(s)?))
}

pub fn hamming_weight(s: &Sequence) -> usize {
    s.elems().iter().filter(|e| !e.is_zero()).count()
}

pub fn hamming_distance(a: &Sequence, b: &Sequence) -> Result<usize> {
    Ok(hamming_weight(&a.sub(b)?))
}

/// Interpolate the received word, run Berlekamp-Massey on the coefficients
/// of index `>= k` (which belong to the error polynomial alone), extend that
/// recurrence backwards to recover the low error coefficients, and evaluate.
/// Returns the message coefficients and the error vector.
pub fn rs_decode_via_bm(params: &RsParams, recv: &Sequence) -> Result<(Vec<Fe>, Sequence)> {
    let f = &params.field;
    if recv.field() != f {
        return Err(Error::FieldMismatch);
    }
    let n = params.n();
    let k = params.k;
    if recv.len() != n {
        return Err(Error::BadLength {
            expected: n,
            found: recv.len(),
        });
    }
    let points: Vec<(Fe, Fe)> = params
        .alphas
        .iter()
        .copied()
        .zip(recv.elems().iter().copied())
        .collect();
    let received_poly = lagrange_interpolate(f, &points)?;
    let b: Vec<Fe> = (0..n).map(|i| received_poly.coeff(i)).collect();

    let tail = &b[k..];
    let (l, conn) = berlekamp_massey_raw(f, tail);
    if 2 * l > n - k {
        return Err(Error::DecodeFailure(format!(
            "error coefficients have linear complexity {l}, beyond radius {}",
            params.radius()
        )));
    }
    let mut err_coeffs = vec![Fe::ZERO; n];
    err_coeffs[k..].copy_from_slice(tail);
    if l > 0 {
        let last = conn.get(l).copied().unwrap_or(Fe::ZERO);
        if last.is_zero() {
            return Err(Error::DecodeFailure(
                "recurrence cannot be run backwards (feedback constant term is zero)".into(),
            ));
        }
        let last_inv = f.inv(last)?;
        // E_{i-l} = -(E_i + sum_{j=1}^{l-1} f_j E_{i-j}) / f_l
        for idx in (0..k).rev() {
            let i = idx + l;
            let mut acc = err_coeffs[i];
            for j in 1..l {
                acc = f.add(
                    acc,
                    f.mul(conn.get(j).copied().unwrap_or(Fe::ZERO), err_coeffs[i - j]),
                );
            }
            err_coeffs[idx] = f.neg(f.mul(acc, last_inv));
        }
    }

    let error_word: Vec<Fe> = params
        .alphas
        .iter()
        .map(|&x| f.eval_poly(&err_coeffs, x))
        .collect();
    let error = Sequence::from_canonical(f, error_word);
    let weight = hamming_weight(&error);
    if weight > params.radius() {
        return Err(Error::DecodeFailure(format!(
            "recovered error has weight {weight}, beyond radius {}",
            params.radius()
        )));
    }
    let msg: Vec<Fe> = (0..k).map(|i| f.sub(b[i], err_coeffs[i])).collect();
    let reencoded = rs_encode(params, &msg)?;
    if reencoded.add(&error)? != *recv {
        return Err(Error::DecodeFailure(
            "re-encoded word does not match".into(),
        ));
    }
    Ok((msg, error))
}
