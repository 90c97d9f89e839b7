//! Univariate polynomials over a finite field, low-to-high coefficients.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// A polynomial with trailing zero coefficients trimmed; the zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Fe>,
}

fn trim(coeffs: &mut Vec<Fe>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

impl Polynomial {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> Result<Polynomial> {
        if let Some(&bad) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::ElementOutOfRange {
                index: bad.index(),
                q: field.q(),
            });
        }
        trim(&mut coeffs);
        Ok(Polynomial {
            field: field.clone(),
            coeffs,
        })
    }

    /// Internal constructor for coefficients already known to be canonical.
    pub(crate) fn from_canonical(field: &Field, mut coeffs: Vec<Fe>) -> Polynomial {
        trim(&mut coeffs);
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            coeffs: vec![Fe::ONE],
        }
    }

    /// `c * z^k`.
    pub fn monomial(field: &Field, c: Fe, k: usize) -> Polynomial {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = c;
        Polynomial::from_canonical(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Fe::ONE)
    }

    pub fn eval(&self, x: Fe) -> Fe {
        self.field.eval_poly(&self.coeffs, x)
    }

    fn same_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial::from_canonical(f, coeffs))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(Fe::ONE))
    }

    pub fn scale(&self, c: Fe) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Polynomial::from_canonical(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Polynomial::from_canonical(f, out))
    }

    /// Reduction modulo `z^n`.
    pub fn truncate(&self, n: usize) -> Polynomial {
        let coeffs = self.coeffs.iter().take(n).copied().collect();
        Polynomial::from_canonical(&self.field, coeffs)
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, d));
            }
        }
        Ok((
            Polynomial::from_canonical(f, quot),
            Polynomial::from_canonical(f, rem),
        ))
    }

    /// Monic greatest common divisor; zero iff both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        match a.coeffs.last() {
            Some(&lead) => Ok(a.scale(self.field.inv(lead)?)),
            None => Ok(a),
        }
    }

    /// Coefficients reversed within a window of `window + 1` terms, i.e.
    /// `z^window * p(1/z)`.
    pub fn reversed(&self, window: usize) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            if d > window {
                return Err(Error::DegreeExceedsOrder {
                    degree: d,
                    order: window,
                });
            }
        }
        let coeffs = (0..=window).map(|i| self.coeff(window - i)).collect();
        Ok(Polynomial::from_canonical(&self.field, coeffs))
    }
}
