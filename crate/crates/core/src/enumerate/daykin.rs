//! Daykin's reduction of a persymmetric matrix.
//!
//! For a sequence whose first nonzero term is `a_u`, the inverse power series
//! `theta` of `a_u + a_{u+1} z + ...` gives lower- and upper-triangular
//! Toeplitz matrices `U`, `V` with `U A V = diag(X, -Y)`, where `X` is
//! anti-triangular and `Y` is a smaller persymmetric matrix built from
//! `theta`. The last row of `A` depends on the others iff the last row of `Y`
//! does, which is what drives the recursion for `b(n, r, u)`.

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::lfsr::Sequence;
use crate::matrix::MatrixFq;

use super::persymmetric_matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaykinWitness {
    /// Index of the first nonzero term.
    pub u: usize,
    /// `theta_0 .. theta_{n-u-1}`.
    pub theta: Vec<Fe>,
    pub u_mat: MatrixFq,
    pub v_mat: MatrixFq,
    pub x_mat: MatrixFq,
    pub y_mat: MatrixFq,
}

/// Builds `theta`, `U`, `V`, `X` and `Y` for the order-`r` matrix of `s`.
/// Defined when `u < min(r, n - r - 1)`.
pub fn daykin_witness(s: &Sequence, r: usize) -> Result<DaykinWitness> {
    let n = s.len();
    let u = s
        .first_nonzero()
        .ok_or_else(|| Error::BadRegime("zero sequence has no first nonzero index".into()))?;
    if u >= r || u + r + 1 >= n {
        return Err(Error::BadRegime(format!(
            "need u < min(r, n - r - 1), got n = {n}, r = {r}, u = {u}"
        )));
    }
    let f = s.field();
    let a = s.elems();

    let theta0 = f.inv(a[u])?;
    let mut theta = Vec::with_capacity(n - u);
    theta.push(theta0);
    for i in 1..n - u {
        let acc = (1..=i).fold(Fe::ZERO, |acc, l| f.add(acc, f.mul(a[u + l], theta[i - l])));
        theta.push(f.neg(f.mul(theta0, acc)));
    }

    let cols = n - r;
    let u_mat = MatrixFq::from_fn(f, r + 1, r + 1, |i, k| {
        if k <= i {
            theta[i - k]
        } else {
            Fe::ZERO
        }
    });
    let v_mat = MatrixFq::from_fn(
        f,
        cols,
        cols,
        |j, k| if k >= j { theta[k - j] } else { Fe::ZERO },
    );
    let x_mat = MatrixFq::from_fn(f, u + 1, u + 1, |i, j| {
        if i + j >= u {
            theta[i + j - u]
        } else {
            Fe::ZERO
        }
    });
    let y_mat = MatrixFq::from_fn(f, r - u, cols - u - 1, |i, j| theta[i + j + u + 2]);

    Ok(DaykinWitness {
        u,
        theta,
        u_mat,
        v_mat,
        x_mat,
        y_mat,
    })
}

/// Verifies the reduction for `(s, r)`: the `theta` recurrence, the block
/// identity `U A V = diag(X, -Y)`, and that the last row of `A` is dependent
/// exactly when the last row of `Y` is.
pub fn daykin_check(s: &Sequence, r: usize) -> Result<bool> {
    let w = daykin_witness(s, r)?;
    let f = s.field();
    let a = s.elems();
    let u = w.u;

    let theta_ok = f.mul(a[u], w.theta[0]) == Fe::ONE
        && (1..w.theta.len()).all(|i| {
            (0..=i)
                .fold(Fe::ZERO, |acc, l| {
                    f.add(acc, f.mul(a[u + l], w.theta[i - l]))
                })
                .is_zero()
        });

    let a_mat = persymmetric_matrix(s, r)?;
    let product = w.u_mat.mul(&a_mat)?.mul(&w.v_mat)?;
    let neg_y = w.y_mat.neg();
    let expected = MatrixFq::from_fn(f, a_mat.rows(), a_mat.cols(), |i, j| {
        match (i <= u, j <= u) {
            (true, true) => w.x_mat.get(i, j),
            (false, false) => neg_y.get(i - u - 1, j - u - 1),
            _ => Fe::ZERO,
        }
    });
    let block_ok = product == expected;

    let rows_ok = a_mat.last_row_dependent() == w.y_mat.last_row_dependent();

    Ok(theta_ok && block_ok && rows_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::lfsr::for_each_sequence;

    #[test]
    fn theta_starts_at_inverse() {
        let f3 = Field::prime(3).unwrap();
        let s = Sequence::from_ints(&f3, &[2, 1, 0, 1, 2, 2, 1]);
        let w = daykin_witness(&s, 2).unwrap();
        assert_eq!(w.theta[0], f3.from_int(2));
        assert_eq!(w.u, 0);
        assert_eq!((w.y_mat.rows(), w.y_mat.cols()), (2, 4));
        assert!(daykin_check(&s, 2).unwrap());
    }

    #[test]
    fn regime_errors() {
        let f2 = Field::prime(2).unwrap();
        assert!(matches!(
            daykin_check(&Sequence::zeros(&f2, 6), 2),
            Err(Error::BadRegime(_))
        ));
        let s = Sequence::from_ints(&f2, &[0, 0, 1, 1, 0, 1]);
        // u = 2 >= r
        assert!(matches!(daykin_check(&s, 2), Err(Error::BadRegime(_))));
        // u = 2 >= n - r - 1 = 2
        assert!(matches!(daykin_check(&s, 3), Err(Error::BadRegime(_))));
    }

    #[test]
    fn holds_for_all_short_binary_sequences() {
        let f2 = Field::prime(2).unwrap();
        let mut checked = 0;
        for n in 1..=8 {
            for_each_sequence(&f2, n, |s| {
                let s = Sequence::new(&f2, s.to_vec()).unwrap();
                for r in 0..n {
                    if let Ok(ok) = daykin_check(&s, r) {
                        assert!(ok, "{s:?} r={r}");
                        checked += 1;
                    }
                }
            });
        }
        assert!(checked > 0);
    }
}
