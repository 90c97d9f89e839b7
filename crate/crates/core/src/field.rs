//! Finite fields GF(p^m).
//!
//! Elements are stored as their canonical index: the coefficient vector
//! `(c_0, ..., c_{m-1})` of the polynomial representative read as a base-`p`
//! integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. For prime fields the index is
//! simply the residue. Index order is the canonical element order used
//! everywhere an enumeration of the field is needed.
//!
//! Extension fields are built from a monic irreducible modulus, either
//! supplied by the caller or the first one found by [`Field::of_order`].
//! There is no table of Conway polynomials.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest prime characteristic accepted.
pub const MAX_CHARACTERISTIC: u64 = u32::MAX as u64;

/// Largest field order accepted for arithmetic.
pub const MAX_ORDER: u64 = 1 << 62;

/// A field element, as its canonical index in `[0, q)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Unchecked; callers guarantee `index < q`.
    #[inline]
    pub(crate) const fn from_raw(index: u64) -> Fe {
        Fe(index)
    }

    #[inline]
    pub fn index(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(p^m).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    /// Low-to-high coefficients of the monic modulus, length `m + 1`.
    /// Empty for prime fields.
    modulus: Arc<[u64]>,
}

impl Field {
    /// Builds GF(p^m). A modulus is required iff `m > 1`, and must be monic,
    /// of degree exactly `m` and irreducible over GF(p).
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if p > MAX_CHARACTERISTIC {
            return Err(Error::FieldTooLarge(format!(
                "characteristic {p} exceeds {MAX_CHARACTERISTIC}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadParams(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::FieldTooLarge(format!("{p}^{m} exceeds {MAX_ORDER}")))?;

        let modulus: Arc<[u64]> = match (m, modulus) {
            (1, None) => Arc::from(Vec::new()),
            (1, Some(_)) => {
                return Err(Error::BadModulus(
                    "a modulus is only accepted for extension fields (m > 1)".into(),
                ))
            }
            (_, None) => {
                return Err(Error::BadModulus(format!(
                    "GF({p}^{m}) needs an explicit irreducible modulus"
                )))
            }
            (_, Some(coeffs)) => {
                check_modulus(p, m, coeffs)?;
                Arc::from(coeffs.to_vec())
            }
        };
        Ok(Field { p, m, q, modulus })
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`. Extension fields use the first monic
    /// irreducible modulus in canonical order of the lower coefficients.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, m) = prime_power_parts(q).ok_or(Error::NotPrime(q))?;
        if m == 1 {
            return Field::prime(p);
        }
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(format!("{q} exceeds {MAX_ORDER}")));
        }
        let m_us = m as usize;
        for low in 0..q {
            let mut coeffs = Vec::with_capacity(m_us + 1);
            let mut rest = low;
            for _ in 0..m_us {
                coeffs.push(rest % p);
                rest /= p;
            }
            coeffs.push(1);
            if coeffs[0] != 0 && is_irreducible(p, &coeffs) {
                return Field::new(p, m, Some(&coeffs));
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order `p^m`.
    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        if self.m == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Checked conversion from a canonical index.
    pub fn from_index(&self, index: u64) -> Result<Fe> {
        if index < self.q {
            Ok(Fe(index))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, value: i64) -> Fe {
        Fe(value.rem_euclid(self.p as i64) as u64)
    }

    /// Builds an element from low-to-high residues; missing high coefficients
    /// are zero.
    pub fn element(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() > self.m as usize {
            return Err(Error::BadParams(format!(
                "{} coefficients given for an element of GF({}^{})",
                coeffs.len(),
                self.p,
                self.m
            )));
        }
        let mut index = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::ElementOutOfRange {
                    index: c,
                    q: self.p,
                });
            }
            index = index * self.p + c;
        }
        Ok(Fe(index))
    }

    /// Low-to-high residues of `a`, always `m` of them.
    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut x = a.0;
        for _ in 0..self.m {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn compose(&self, digits: &[u64]) -> Fe {
        Fe(digits.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.q
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    /// All nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q).map(Fe)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.m == 1 {
            return Fe(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let digits: Vec<u64> = self
            .coeffs(a)
            .into_iter()
            .map(|d| if d == 0 { 0 } else { self.p - d })
            .collect();
        self.compose(&digits)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            return Fe(a.0 * b.0 % self.p);
        }
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let m = self.m as usize;
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        // x^m = -(mod_0 + ... + mod_{m-1} x^{m-1})
        for d in (m..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..m {
                let t = c * self.modulus[i] % self.p;
                prod[d - m + i] = (prod[d - m + i] + self.p - t) % self.p;
            }
        }
        self.compose(&prod[..m])
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Evaluates `coeffs[0] + coeffs[1] x + ...` by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[Fe], x: Fe) -> Fe {
        coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Text form of an element: a decimal residue for prime fields, or
    /// `[c0,c1,...]` (low-to-high, `m` entries) for extension fields.
    pub fn format_element(&self, a: Fe) -> String {
        if self.m == 1 {
            return a.0.to_string();
        }
        let parts: Vec<String> = self.coeffs(a).iter().map(u64::to_string).collect();
        format!("[{}]", parts.join(","))
    }

    /// Inverse of [`Field::format_element`]. Extension elements may list
    /// fewer than `m` residues; the rest are zero.
    pub fn parse_element(&self, token: &str) -> std::result::Result<Fe, String> {
        let token = token.trim();
        let residue = |s: &str| -> std::result::Result<u64, String> {
            let v: u64 = s
                .trim()
                .parse()
                .map_err(|_| format!("`{s}` is not a nonnegative integer"))?;
            if v >= self.p {
                Err(format!(
                    "residue {v} out of range for characteristic {}",
                    self.p
                ))
            } else {
                Ok(v)
            }
        };
        if let Some(inner) = token.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| format!("unterminated element `{token}`"))?;
            let digits = inner
                .split(',')
                .map(residue)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if digits.len() > self.m as usize {
                return Err(format!(
                    "element `{token}` has {} residues, field degree is {}",
                    digits.len(),
                    self.m
                ));
            }
            Ok(self.compose(&digits))
        } else if self.m == 1 {
            residue(token).map(Fe)
        } else {
            Err(format!(
                "extension field elements are written `[c0,...,c{}]`, got `{token}`",
                self.m - 1
            ))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

/// Deterministic trial division; fine for the supported range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// True iff `n = p^k` for a prime `p` and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    prime_power_parts(n).is_some()
}

/// `(p, k)` with `n = p^k`, if `n` is a prime power.
pub fn prime_power_parts(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|pp| pp <= n) {
        if n.is_multiple_of(p) {
            let (mut x, mut k) = (n, 0);
            while x % p == 0 {
                x /= p;
                k += 1;
            }
            return (x == 1).then_some((p, k));
        }
        p += 1;
    }
    Some((n, 1))
}

fn check_modulus(p: u64, m: u32, coeffs: &[u64]) -> Result<()> {
    let m = m as usize;
    if coeffs.len() != m + 1 {
        return Err(Error::BadModulus(format!(
            "expected {} coefficients for degree {m}, got {}",
            m + 1,
            coeffs.len()
        )));
    }
    if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
        return Err(Error::BadModulus(format!(
            "coefficient {c} not reduced mod {p}"
        )));
    }
    if coeffs[m] != 1 {
        return Err(Error::BadModulus("modulus is not monic".into()));
    }
    if !is_irreducible(p, coeffs) {
        return Err(Error::BadModulus("modulus is reducible".into()));
    }
    Ok(())
}

// Dense polynomials over GF(p) as residue vectors, only used to validate moduli.

fn rp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rp_inv(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn rp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = rp_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = rp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = rp_trim(r);
    }
    r
}

fn rp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    rp_rem(&prod, f, p)
}

fn rp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (rp_trim(a.to_vec()), rp_trim(b.to_vec()));
    while !b.is_empty() {
        let r = rp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or test: `f` of degree m is irreducible over GF(p) iff
/// gcd(f, x^{p^i} - x) = 1 for every 1 <= i <= m/2.
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let m = f.len() - 1;
    let x = rp_rem(&[0, 1], f, p);
    let mut h = x.clone();
    for _ in 0..m / 2 {
        // h <- h^p mod f
        let mut acc = vec![1u64];
        let (mut base, mut e) = (h.clone(), p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rp_mulmod(&acc, &base, f, p);
            }
            base = rp_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        h = acc;
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = rp_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}
