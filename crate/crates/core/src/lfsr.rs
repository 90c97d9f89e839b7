//! Shift registers, Berlekamp-Massey and the linear-complexity distance.
//!
//! An LFSR of order `l` with coefficients `c_0..c_{l-1}` produces
//! `a_{i+l} = sum_j c_j a_{i+j}`. Its feedback polynomial is
//! `z^l - sum_j c_j z^j`; Berlekamp-Massey works with the connection
//! polynomial `1 + f_1 z + ... + f_L z^L`, which is the reversal of the
//! feedback polynomial within a window of `L + 1` coefficients. Both are
//! carried in [`BmResult`].

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::Polynomial;

/// Default bound on `q^l` for [`min_lfsr_oracle`].
pub const DEFAULT_ORACLE_LIMIT: u64 = 1 << 20;

/// A finite sequence over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    field: Field,
    elems: Vec<Fe>,
}

impl Sequence {
    pub fn new(field: &Field, elems: Vec<Fe>) -> Result<Sequence> {
        if let Some(&bad) = elems.iter().find(|&&e| !field.contains(e)) {
            return Err(Error::ElementOutOfRange {
                index: bad.index(),
                q: field.q(),
            });
        }
        Ok(Sequence {
            field: field.clone(),
            elems,
        })
    }

    pub(crate) fn from_canonical(field: &Field, elems: Vec<Fe>) -> Sequence {
        Sequence {
            field: field.clone(),
            elems,
        }
    }

    /// Sequence of prime-subfield images of `values`.
    pub fn from_ints(field: &Field, values: &[i64]) -> Sequence {
        let elems = values.iter().map(|&v| field.from_int(v)).collect();
        Sequence {
            field: field.clone(),
            elems,
        }
    }

    pub fn zeros(field: &Field, n: usize) -> Sequence {
        Sequence {
            field: field.clone(),
            elems: vec![Fe::ZERO; n],
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elems(&self) -> &[Fe] {
        &self.elems
    }

    pub fn into_elems(self) -> Vec<Fe> {
        self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elems.iter().all(|e| e.is_zero())
    }

    /// Index of the first nonzero term.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.elems.iter().position(|e| !e.is_zero())
    }

    fn check_compatible(&self, other: &Sequence) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Sequence) -> Result<Sequence> {
        self.check_compatible(other)?;
        let f = &self.field;
        let elems = self
            .elems
            .iter()
            .zip(&other.elems)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Sequence::from_canonical(f, elems))
    }

    pub fn sub(&self, other: &Sequence) -> Result<Sequence> {
        self.check_compatible(other)?;
        let f = &self.field;
        let elems = self
            .elems
            .iter()
            .zip(&other.elems)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Sequence::from_canonical(f, elems))
    }

    pub fn neg(&self) -> Sequence {
        let elems = self.elems.iter().map(|&a| self.field.neg(a)).collect();
        Sequence::from_canonical(&self.field, elems)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Sequence) -> Result<Sequence> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut elems = self.elems.clone();
        elems.extend_from_slice(&other.elems);
        Ok(Sequence::from_canonical(&self.field, elems))
    }
}

/// A feedback shift register with its initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfsrSpec {
    field: Field,
    coeffs: Vec<Fe>,
    init: Vec<Fe>,
}

impl LfsrSpec {
    /// `coeffs[j]` multiplies `a_{i+j}` in the recurrence.
    pub fn new(field: &Field, coeffs: Vec<Fe>, init: Vec<Fe>) -> Result<LfsrSpec> {
        if coeffs.len() != init.len() {
            return Err(Error::LengthMismatch {
                expected: coeffs.len(),
                found: init.len(),
            });
        }
        if let Some(&bad) = coeffs.iter().chain(&init).find(|&&e| !field.contains(e)) {
            return Err(Error::ElementOutOfRange {
                index: bad.index(),
                q: field.q(),
            });
        }
        Ok(LfsrSpec {
            field: field.clone(),
            coeffs,
            init,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn init(&self) -> &[Fe] {
        &self.init
    }

    /// `z^l - sum_j c_j z^j`.
    pub fn feedback_polynomial(&self) -> Polynomial {
        let f = &self.field;
        let mut coeffs: Vec<Fe> = self.coeffs.iter().map(|&c| f.neg(c)).collect();
        coeffs.push(Fe::ONE);
        Polynomial::from_canonical(f, coeffs)
    }
}

/// Runs the register for `n` steps. Order 0 yields the zero sequence.
pub fn lfsr_generate(spec: &LfsrSpec, n: usize) -> Sequence {
    let f = &spec.field;
    let l = spec.order();
    let mut out: Vec<Fe> = Vec::with_capacity(n);
    for i in 0..n {
        if i < l {
            out.push(spec.init[i]);
        } else {
            let base = i - l;
            let next = spec
                .coeffs
                .iter()
                .enumerate()
                .fold(Fe::ZERO, |acc, (j, &c)| f.add(acc, f.mul(c, out[base + j])));
            out.push(next);
        }
    }
    Sequence::from_canonical(f, out)
}

/// The reciprocal `z^l f(1/z)`.
pub fn reciprocal(f: &Polynomial, l: usize) -> Result<Polynomial> {
    f.reversed(l)
}

/// Output of Berlekamp-Massey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmResult {
    linear_complexity: usize,
    connection: Polynomial,
    feedback: Polynomial,
}

impl BmResult {
    pub fn linear_complexity(&self) -> usize {
        self.linear_complexity
    }

    /// Connection polynomial, constant term 1, degree at most `L`.
    pub fn connection(&self) -> &Polynomial {
        &self.connection
    }

    /// Monic feedback polynomial of degree `L`.
    pub fn feedback(&self) -> &Polynomial {
        &self.feedback
    }

    /// Recurrence coefficients `c_0..c_{L-1}` with `a_{i+L} = sum_j c_j a_{i+j}`.
    pub fn recurrence_coeffs(&self) -> Vec<Fe> {
        let f = self.feedback.field();
        (0..self.linear_complexity)
            .map(|j| f.neg(self.feedback.coeff(j)))
            .collect()
    }

    /// The register that regenerates `s` from its first `L` terms.
    pub fn register_for(&self, s: &Sequence) -> Result<LfsrSpec> {
        let l = self.linear_complexity;
        if s.len() < l {
            return Err(Error::LengthMismatch {
                expected: l,
                found: s.len(),
            });
        }
        LfsrSpec::new(s.field(), self.recurrence_coeffs(), s.elems()[..l].to_vec())
    }
}

/// Berlekamp-Massey on raw elements: returns `L` and the connection
/// polynomial coefficients (trimmed, constant term 1).
pub fn berlekamp_massey_raw(field: &Field, s: &[Fe]) -> (usize, Vec<Fe>) {
    let f = field;
    let mut conn: Vec<Fe> = vec![Fe::ONE];
    let mut prev: Vec<Fe> = vec![Fe::ONE];
    let mut l = 0usize;
    let mut m: isize = -1;
    let mut e = Fe::ONE;

    for i in 0..s.len() {
        let mut d = s[i];
        for j in 1..=l.min(conn.len() - 1) {
            d = f.add(d, f.mul(conn[j], s[i - j]));
        }
        if d.is_zero() {
            continue;
        }
        let before = conn.clone();
        let scale = f.div(d, e).expect("last discrepancy is nonzero");
        let shift = (i as isize - m) as usize;
        if conn.len() < prev.len() + shift {
            conn.resize(prev.len() + shift, Fe::ZERO);
        }
        for (k, &a) in prev.iter().enumerate() {
            conn[k + shift] = f.sub(conn[k + shift], f.mul(scale, a));
        }
        if 2 * l <= i {
            l = i + 1 - l;
            m = i as isize;
            prev = before;
            e = d;
        }
    }
    while conn.len() > 1 && conn.last().is_some_and(|c| c.is_zero()) {
        conn.pop();
    }
    (l, conn)
}

pub fn berlekamp_massey(s: &Sequence) -> BmResult {
    let field = s.field();
    let (l, conn) = berlekamp_massey_raw(field, s.elems());
    let connection = Polynomial::from_canonical(field, conn);
    let feedback = connection
        .reversed(l)
        .expect("connection polynomial degree never exceeds L");
    BmResult {
        linear_complexity: l,
        connection,
        feedback,
    }
}

pub fn linear_complexity(s: &Sequence) -> usize {
    berlekamp_massey_raw(s.field(), s.elems()).0
}

/// `L(a - b)`.
pub fn lc_distance(a: &Sequence, b: &Sequence) -> Result<usize> {
    Ok(linear_complexity(&a.sub(b)?))
}

/// Brute-force linear complexity: the least `l` for which some coefficient
/// vector in `F_q^l` satisfies the recurrence at every index where `a_{i+l}`
/// exists.
pub fn min_lfsr_oracle(s: &Sequence) -> Result<usize> {
    min_lfsr_oracle_limited(s, DEFAULT_ORACLE_LIMIT)
}

/// [`min_lfsr_oracle`] with an explicit bound on `q^l`.
pub fn min_lfsr_oracle_limited(s: &Sequence, limit: u64) -> Result<usize> {
    let f = s.field();
    let a = s.elems();
    let n = a.len();
    let q = f.q();
    for l in 0..n {
        let count = (q as u128).checked_pow(l as u32).unwrap_or(u128::MAX);
        if count > limit as u128 {
            return Err(Error::OracleTooLarge(format!(
                "{q}^{l} coefficient vectors exceed the limit {limit}"
            )));
        }
        let mut c = vec![0u64; l];
        loop {
            let generates = (0..n - l).all(|i| {
                let sum = (0..l).fold(Fe::ZERO, |acc, j| {
                    f.add(acc, f.mul(Fe::from_raw(c[j]), a[i + j]))
                });
                sum == a[i + l]
            });
            if generates {
                return Ok(l);
            }
            // odometer step
            let mut pos = 0;
            while pos < l {
                c[pos] += 1;
                if c[pos] < q {
                    break;
                }
                c[pos] = 0;
                pos += 1;
            }
            if pos == l {
                break;
            }
        }
    }
    Ok(n)
}

/// Checks that `A(z) f*(z)`, truncated below `z^n`, has degree below `l`,
/// where `A` is the generating function of the first `n` outputs.
pub fn generating_function_check(spec: &LfsrSpec, n: usize) -> Result<bool> {
    let l = spec.order();
    if n < 2 * l {
        return Err(Error::BadParams(format!(
            "need n >= 2l, got n = {n}, l = {l}"
        )));
    }
    let field = spec.field();
    let a = lfsr_generate(spec, n);
    let series = Polynomial::from_canonical(field, a.into_elems());
    let fstar = reciprocal(&spec.feedback_polynomial(), l)?;
    let product = series.mul(&fstar)?.truncate(n);
    Ok(product.degree().is_none_or(|d| d < l))
}

/// Calls `visit` once for every sequence of length `n`, in lexicographic
/// order of canonical indices (last position varies fastest).
pub fn for_each_sequence(field: &Field, n: usize, mut visit: impl FnMut(&[Fe])) {
    let q = field.q();
    let mut cur = vec![Fe::ZERO; n];
    loop {
        visit(&cur);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            let next = cur[pos].index() + 1;
            if next < q {
                cur[pos] = Fe::from_raw(next);
                break;
            }
            cur[pos] = Fe::ZERO;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn seq(f: &Field, v: &[i64]) -> Sequence {
        Sequence::from_ints(f, v)
    }

    fn spec(f: &Field, c: &[i64], init: &[i64]) -> LfsrSpec {
        let e = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect();
        LfsrSpec::new(f, e(c), e(init)).unwrap()
    }

    #[test]
    fn generate_examples() {
        let f2 = gf(2);
        let fib = spec(&f2, &[1, 1], &[0, 1]);
        assert_eq!(lfsr_generate(&fib, 8), seq(&f2, &[0, 1, 1, 0, 1, 1, 0, 1]));
        let empty = spec(&f2, &[], &[]);
        assert_eq!(lfsr_generate(&empty, 4), Sequence::zeros(&f2, 4));
        let f3 = gf(3);
        assert_eq!(
            lfsr_generate(&spec(&f3, &[2], &[1]), 4),
            seq(&f3, &[1, 2, 1, 2])
        );
        // shorter than the register: just the initial state
        assert_eq!(lfsr_generate(&fib, 1), seq(&f2, &[0]));
    }

    #[test]
    fn reciprocal_examples() {
        let f3 = gf(3);
        let p =
            |v: &[i64]| Polynomial::new(&f3, v.iter().map(|&x| f3.from_int(x)).collect()).unwrap();
        // z^2 - z - 1 -> -z^2 - z + 1
        assert_eq!(reciprocal(&p(&[-1, -1, 1]), 2).unwrap(), p(&[1, 2, 2]));
        assert_eq!(reciprocal(&p(&[1]), 0).unwrap(), p(&[1]));
        assert_eq!(reciprocal(&p(&[0, 1]), 1).unwrap(), p(&[1]));
        assert_eq!(
            reciprocal(&p(&[0, 0, 1]), 1),
            Err(Error::DegreeExceedsOrder {
                degree: 2,
                order: 1
            })
        );
    }

    #[test]
    fn bm_examples() {
        let f2 = gf(2);
        assert_eq!(
            berlekamp_massey(&seq(&f2, &[0, 0, 0])).linear_complexity(),
            0
        );
        assert_eq!(
            berlekamp_massey(&seq(&f2, &[0, 0, 1])).linear_complexity(),
            3
        );

        let r = berlekamp_massey(&seq(&f2, &[1, 0, 1, 0]));
        assert_eq!(r.linear_complexity(), 2);
        assert_eq!(r.recurrence_coeffs(), vec![Fe::ONE, Fe::ZERO]);

        let r = berlekamp_massey(&seq(&f2, &[1, 1, 0, 1]));
        assert_eq!(r.linear_complexity(), 2);
        assert_eq!(r.recurrence_coeffs(), vec![Fe::ONE, Fe::ONE]);

        let empty = berlekamp_massey(&seq(&f2, &[]));
        assert_eq!(empty.linear_complexity(), 0);
        assert_eq!(empty.connection(), &Polynomial::one(&f2));
        assert_eq!(empty.feedback(), &Polynomial::one(&f2));
    }

    #[test]
    fn lc_examples() {
        let f2 = gf(2);
        assert_eq!(linear_complexity(&Sequence::zeros(&f2, 7)), 0);
        assert_eq!(linear_complexity(&seq(&f2, &[0, 0, 0, 0, 1])), 5);
        let f3 = gf(3);
        assert_eq!(linear_complexity(&seq(&f3, &[0, 0, 0, 0, 2])), 5);
        // a_{i+1} = 2 a_i already generates it
        assert_eq!(linear_complexity(&seq(&f3, &[1, 2, 1, 2, 1])), 1);
        assert_eq!(min_lfsr_oracle(&seq(&f3, &[1, 2, 1, 2, 1])), Ok(1));
        assert_eq!(linear_complexity(&seq(&f3, &[1, 2, 1, 2, 2])), 4);
    }

    #[test]
    fn distance_examples() {
        let f2 = gf(2);
        let a = seq(&f2, &[1, 1, 1, 1]);
        assert_eq!(lc_distance(&a, &a), Ok(0));
        assert_eq!(
            lc_distance(&a, &Sequence::zeros(&f2, 4)),
            Ok(linear_complexity(&a))
        );
        let b = seq(&f2, &[0, 1, 1, 1]);
        // the difference (1,0,0,0) is generated by a_{i+1} = 0
        assert_eq!(lc_distance(&a, &b), Ok(1));
        assert_eq!(min_lfsr_oracle(&seq(&f2, &[1, 0, 0, 0])), Ok(1));
        assert_eq!(lc_distance(&a, &seq(&f2, &[1, 1, 1, 0])), Ok(4));
        assert_eq!(
            lc_distance(&a, &seq(&f2, &[1, 1])),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 2
            })
        );
        assert_eq!(
            lc_distance(&a, &seq(&gf(3), &[1, 1, 1, 1])),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn oracle_examples_and_guard() {
        let f2 = gf(2);
        assert_eq!(min_lfsr_oracle(&Sequence::zeros(&f2, 5)), Ok(0));
        assert_eq!(min_lfsr_oracle(&seq(&f2, &[0, 0, 1])), Ok(3));
        assert_eq!(min_lfsr_oracle(&seq(&f2, &[])), Ok(0));
        let long = seq(&f2, &[0, 0, 0, 0, 0, 1]);
        assert!(matches!(
            min_lfsr_oracle_limited(&long, 8),
            Err(Error::OracleTooLarge(_))
        ));
        assert_eq!(min_lfsr_oracle_limited(&long, 32), Ok(6));
    }

    #[test]
    fn bm_matches_oracle_gf2_exhaustive_small() {
        let f2 = gf(2);
        for n in 0..=8 {
            for_each_sequence(&f2, n, |s| {
                let s = Sequence::new(&f2, s.to_vec()).unwrap();
                assert_eq!(Ok(linear_complexity(&s)), min_lfsr_oracle(&s), "{s:?}");
            });
        }
    }

    #[test]
    fn bm_round_trip_and_polynomial_conventions() {
        let f3 = gf(3);
        for n in 0..=6 {
            for_each_sequence(&f3, n, |s| {
                let s = Sequence::new(&f3, s.to_vec()).unwrap();
                let r = berlekamp_massey(&s);
                let l = r.linear_complexity();
                assert_eq!(r.connection().coeff(0), Fe::ONE);
                assert!(r.connection().degree().unwrap() <= l);
                assert!(r.feedback().is_monic());
                assert_eq!(r.feedback().degree(), Some(l));
                assert_eq!(&reciprocal(r.connection(), l).unwrap(), r.feedback());
                assert_eq!(lfsr_generate(&r.register_for(&s).unwrap(), n), s);
            });
        }
    }

    #[test]
    fn generating_function_examples() {
        let f2 = gf(2);
        assert_eq!(
            generating_function_check(&spec(&f2, &[1, 1], &[0, 1]), 8),
            Ok(true)
        );
        assert_eq!(generating_function_check(&spec(&f2, &[], &[]), 0), Ok(true));
        assert!(generating_function_check(&spec(&f2, &[1, 1], &[0, 1]), 3).is_err());
    }

    #[test]
    fn enumeration_order_and_count() {
        let f3 = gf(3);
        let mut seen = Vec::new();
        for_each_sequence(&f3, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![Fe::ZERO, Fe::ONE]);
        let mut count = 0;
        for_each_sequence(&f3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
