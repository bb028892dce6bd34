//! Integer polynomials and determinants of polynomial matrices.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{determinant, BigIntMatrix};
use crate::{Error, Result};

/// Polynomial in `T` with big-integer coefficients; `coeffs[i]` is the
/// coefficient of `T^i`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + T`.
    pub fn one_plus_t() -> Self {
        Self::from_i64s(&[1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `T^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers, e.g. `-9T^2 - 18T^3 - T^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("T")?,
                1 => write!(f, "{mag}T")?,
                _ if unit => write!(f, "T^{i}")?,
                _ => write!(f, "{mag}T^{i}")?,
            }
        }
        Ok(())
    }
}

/// Row-major matrix of [`IntPolynomial`] entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> IntPolynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i * self.cols + j]
    }

    /// Integer matrix obtained by substituting `T = t`.
    pub fn eval(&self, t: &BigInt) -> BigIntMatrix {
        BigIntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(t))
    }
}

/// Determinant of a polynomial matrix whose determinant has degree at most
/// `degree_bound`, by evaluation at `degree_bound + 1` integer points
/// (`0, 1, -1, 2, -2, …`) and exact interpolation.
///
/// One extra point is evaluated as a check; a mismatch there reports
/// [`Error::DegreeBoundExceeded`].
pub fn charpoly_matrix_determinant(m: &PolyMatrix, degree_bound: usize) -> Result<IntPolynomial> {
    charpoly_matrix_determinant_with_shift(m, degree_bound, 0)
}

/// Same as [`charpoly_matrix_determinant`] with every evaluation point
/// translated by `shift`. The result does not depend on `shift`.
pub fn charpoly_matrix_determinant_with_shift(
    m: &PolyMatrix,
    degree_bound: usize,
    shift: i64,
) -> Result<IntPolynomial> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let points: Vec<BigInt> = (0..degree_bound + 2).map(|i| BigInt::from(shift) + zigzag(i)).collect();
    let values = evaluate_determinants(m, &points)?;
    let (check_point, check_value) = (&points[degree_bound + 1], &values[degree_bound + 1]);
    let poly = newton_interpolate(&points[..=degree_bound], &values[..=degree_bound])?;
    if &poly.eval(check_point) != check_value {
        return Err(Error::DegreeBoundExceeded { bound: degree_bound });
    }
    Ok(poly)
}

/// 0, 1, -1, 2, -2, ...
fn zigzag(i: usize) -> BigInt {
    let k = BigInt::from(i.div_ceil(2));
    if i % 2 == 1 {
        k
    } else {
        -k
    }
}

#[cfg(feature = "parallel")]
fn evaluate_determinants(m: &PolyMatrix, points: &[BigInt]) -> Result<Vec<BigInt>> {
    use rayon::prelude::*;
    points.par_iter().map(|t| determinant(&m.eval(t))).collect()
}

#[cfg(not(feature = "parallel"))]
fn evaluate_determinants(m: &PolyMatrix, points: &[BigInt]) -> Result<Vec<BigInt>> {
    points.iter().map(|t| determinant(&m.eval(t))).collect()
}

/// Newton divided differences. Over distinct integer nodes the divided
/// differences of an integer polynomial are integers, so every division
/// must be exact; a remainder means the data is not integral.
fn newton_interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<IntPolynomial> {
    let n = xs.len();
    let mut dd: Vec<BigInt> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - j];
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(Error::NonIntegralInterpolation);
            }
            dd[i] = q;
        }
    }
    let mut poly = IntPolynomial::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let linear = IntPolynomial::from_coeffs(alloc::vec![-xs[i].clone(), BigInt::one()]);
        poly = &(&poly * &linear) + &IntPolynomial::constant(dd[i].clone());
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[0]).is_zero());
        assert_eq!(p(&[0, 0, -1]).degree(), Some(2));
    }

    #[test]
    fn arithmetic() {
        let t1 = IntPolynomial::one_plus_t();
        assert_eq!(t1.pow(3), p(&[1, 3, 3, 1]));
        let cube_minus_one = &t1.pow(3) - &IntPolynomial::one();
        assert_eq!(-&(&cube_minus_one * &cube_minus_one), p(&[0, 0, -9, -18, -15, -6, -1]));
        assert_eq!(&p(&[1, 1]) + &p(&[-1, -1]), IntPolynomial::zero());
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 0, -9, -18, -15, -6, -1]).to_string(), "-9T^2 - 18T^3 - 15T^4 - 6T^5 - T^6");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + T");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn one_by_one() {
        let m = PolyMatrix::from_fn(1, 1, |_, _| p(&[0, 0, -1]));
        assert_eq!(charpoly_matrix_determinant(&m, 2).unwrap(), p(&[0, 0, -1]));
    }

    #[test]
    fn diagonal() {
        let m = PolyMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => p(&[1, 1]),
            (1, 1) => p(&[-1, 1]),
            _ => IntPolynomial::zero(),
        });
        assert_eq!(charpoly_matrix_determinant(&m, 4).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(charpoly_matrix_determinant_with_shift(&m, 4, 17).unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn bound_too_small_is_detected() {
        let m = PolyMatrix::from_fn(1, 1, |_, _| p(&[0, 0, 0, 1]));
        assert!(matches!(
            charpoly_matrix_determinant(&m, 2),
            Err(Error::DegreeBoundExceeded { .. } | Error::NonIntegralInterpolation)
        ));
    }

    #[test]
    fn non_integral_data() {
        let xs = [0, 2].map(BigInt::from);
        let ys = [0, 1].map(BigInt::from);
        assert_eq!(newton_interpolate(&xs, &ys), Err(Error::NonIntegralInterpolation));
    }
}
