//! Truncated formal power series in `t` with polynomial coefficients — the
//! ring `Q[x][[t]] mod t^N`. The truncation order is explicit and part of a
//! series' identity; binary operations require equal orders.

use crate::arith::{int, Rational};
use crate::poly::Poly;
use num_traits::{One, Zero};
use std::ops::Add;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("non-invertible series: {0}")]
    NonInvertible(&'static str),
}

/// Exponent of the form `a + b*x` for binomial series `(1 - 4t)^(a + b*x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearExponent {
    pub const_part: Rational,
    pub x_part: Rational,
}

impl LinearExponent {
    pub fn new(const_part: Rational, x_part: Rational) -> Self {
        LinearExponent { const_part, x_part }
    }

    pub fn constant(a: Rational) -> Self {
        LinearExponent::new(a, Rational::zero())
    }

    /// `b*x`.
    pub fn x_multiple(b: Rational) -> Self {
        LinearExponent::new(Rational::zero(), b)
    }

    pub fn is_constant(&self) -> bool {
        self.x_part.is_zero()
    }
}

impl Add for &LinearExponent {
    type Output = LinearExponent;
    fn add(self, rhs: &LinearExponent) -> LinearExponent {
        LinearExponent::new(
            &self.const_part + &rhs.const_part,
            &self.x_part + &rhs.x_part,
        )
    }
}

/// Coefficients of `t^0 .. t^(order-1)`. Trailing zero coefficients are kept:
/// the order is part of the value, so equality compares both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    /// Builds from the full ascending coefficient list; the order is its
    /// length, which must be at least 1.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        Series {
            coeffs: vec![Poly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Poly::constant(c);
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^n`. Panics when `n >= order`.
    pub fn coeff(&self, n: usize) -> &Poly {
        assert!(
            n < self.coeffs.len(),
            "series coefficient index {n} out of range for order {}",
            self.coeffs.len()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    fn check_order(&self, other: &Series, op: &str) {
        assert_eq!(
            self.order(),
            other.order(),
            "series order mismatch in {op}: {} vs {}",
            self.order(),
            other.order()
        );
    }

    pub fn add(&self, other: &Series) -> Series {
        self.check_order(other, "add");
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.check_order(other, "sub");
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Series {
        self.check_order(other, "mul");
        let order = self.order();
        let mut out = vec![Poly::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse mod `t^order`, by the standard recurrence
    /// `u_0 = 1/s_0`, `u_n = -(1/s_0) * sum_{l=1..n} s_l u_{n-l}`.
    ///
    /// The constant coefficient must be a nonzero constant polynomial; this
    /// keeps every inverse coefficient inside `Q[x]`.
    pub fn reciprocal(&self) -> Result<Series, SeriesError> {
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            return Err(SeriesError::NonInvertible("zero constant coefficient"));
        }
        if !s0.is_constant() {
            return Err(SeriesError::NonInvertible(
                "constant coefficient is not a constant polynomial",
            ));
        }
        let inv_s0 = s0.constant_term().recip();
        let order = self.order();
        let mut out = Vec::with_capacity(order);
        out.push(Poly::constant(inv_s0.clone()));
        for n in 1..order {
            let mut acc = Poly::zero();
            for l in 1..=n {
                acc = &acc + &(&self.coeffs[l] * &out[n - l]);
            }
            out.push(acc.scale(&-&inv_s0));
        }
        Ok(Series { coeffs: out })
    }
}

/// Binomial series `(1 - 4t)^alpha` truncated to `order` coefficients:
/// the coefficient of `t^k` is `gen_binomial(alpha, k) * (-4)^k`, a polynomial
/// of degree `k` in `x` when the exponent has an `x` part.
pub fn binomial_series(alpha: &LinearExponent, order: usize) -> Series {
    assert!(order >= 1, "series order must be at least 1");
    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(Poly::one());
    // Running product prod_k = alpha (alpha - 1) ... (alpha - k + 1).
    let mut prod = Poly::one();
    let mut scale = Rational::one();
    for k in 1..order {
        prod = &prod * &Poly::affine(
            &alpha.const_part - int(i64::try_from(k).unwrap() - 1),
            alpha.x_part.clone(),
        );
        scale *= int(-4) / int(i64::try_from(k).unwrap());
        coeffs.push(prod.scale(&scale));
    }
    Series { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn half() -> LinearExponent {
        LinearExponent::constant(rat(1, 2))
    }

    fn half_x() -> LinearExponent {
        LinearExponent::x_multiple(rat(1, 2))
    }

    fn consts(values: &[(i64, i64)]) -> Series {
        Series::from_coeffs(values.iter().map(|&(n, d)| Poly::constant(rat(n, d))).collect())
    }

    #[test]
    fn binomial_series_zero_exponent_is_one() {
        let s = binomial_series(&LinearExponent::constant(int(0)), 5);
        assert_eq!(s, Series::one(5));
    }

    #[test]
    fn binomial_series_sqrt_coefficients() {
        // (1 - 4t)^(1/2) = 1 - 2t - 2t^2 - 4t^3 - ...
        let s = binomial_series(&half(), 4);
        assert_eq!(s, consts(&[(1, 1), (-2, 1), (-2, 1), (-4, 1)]));
    }

    #[test]
    fn binomial_series_linear_exponent() {
        // (1 - 4t)^(x/2) starts 1 - 2x*t + ...
        let s = binomial_series(&half_x(), 2);
        assert_eq!(*s.coeff(0), Poly::one());
        assert_eq!(*s.coeff(1), Poly::affine(int(0), int(-2)));
    }

    #[test]
    fn mul_identity_and_exponent_additivity() {
        let s = binomial_series(&half(), 8);
        assert_eq!(Series::one(8).mul(&s), s);
        // sqrt * sqrt = 1 - 4t
        let whole = binomial_series(&LinearExponent::constant(int(1)), 8);
        assert_eq!(s.mul(&s), whole);
    }

    #[test]
    fn mul_hand_example() {
        // (1 - 2x t)(1 + 2x t) = 1 - 4x^2 t^2 at order 3
        let a = Series::from_coeffs(vec![Poly::one(), Poly::affine(int(0), int(-2)), Poly::zero()]);
        let b = Series::from_coeffs(vec![Poly::one(), Poly::affine(int(0), int(2)), Poly::zero()]);
        let prod = a.mul(&b);
        assert_eq!(*prod.coeff(0), Poly::one());
        assert_eq!(*prod.coeff(1), Poly::zero());
        assert_eq!(
            *prod.coeff(2),
            Poly::from_coeffs(vec![int(0), int(0), int(-4)])
        );
    }

    #[test]
    fn reciprocal_of_constant() {
        let two = Series::constant(int(2), 4);
        assert_eq!(two.reciprocal().unwrap(), Series::constant(rat(1, 2), 4));
    }

    #[test]
    fn reciprocal_of_one_plus_sqrt_yields_halved_catalan_numbers() {
        let s = Series::one(4).add(&binomial_series(&half(), 4));
        let recip = s.reciprocal().unwrap();
        assert_eq!(recip, consts(&[(1, 2), (1, 2), (1, 1), (5, 2)]));
        assert_eq!(s.mul(&recip), Series::one(4));
    }

    #[test]
    fn reciprocal_of_one_plus_three_halves_power() {
        let s = Series::one(4).add(&binomial_series(&LinearExponent::constant(rat(3, 2)), 4));
        let recip = s.reciprocal().unwrap();
        assert_eq!(recip, consts(&[(1, 2), (3, 2), (3, 1), (7, 2)]));
    }

    #[test]
    fn reciprocal_rejects_zero_constant_term() {
        let s = Series::from_coeffs(vec![Poly::zero(), Poly::one()]);
        assert_eq!(
            s.reciprocal(),
            Err(SeriesError::NonInvertible("zero constant coefficient"))
        );
    }

    #[test]
    fn reciprocal_rejects_non_constant_leading_poly() {
        let s = Series::from_coeffs(vec![Poly::affine(int(2), int(1)), Poly::one()]);
        assert!(matches!(s.reciprocal(), Err(SeriesError::NonInvertible(_))));
    }

    #[test]
    fn add_and_scale_consistency() {
        let s = binomial_series(&half(), 2);
        assert_eq!(s.add(&Series::zero(2)), s);
        assert_eq!(s.scale(&int(1)), s);
        assert_eq!(s.add(&s), s.scale(&int(2)));
    }

    #[test]
    #[should_panic(expected = "series order mismatch")]
    fn mul_rejects_order_mismatch() {
        let _ = Series::one(3).mul(&Series::one(4));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn coeff_rejects_out_of_range_index() {
        let _ = Series::one(3).coeff(3);
    }
}
