//! Dense univariate polynomials over exact rationals in the indeterminate `x`.

use crate::arith::Rational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient `i` is the coefficient of `x^i`. Normalized so the
/// highest-index stored coefficient is nonzero; the zero polynomial stores
/// nothing and has no degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `b + a*x`.
    pub fn affine(b: Rational, a: Rational) -> Self {
        Poly::from_coeffs(vec![b, a])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut poly = Poly { coeffs };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact Horner evaluation at `r`.
    pub fn eval(&self, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    /// `p(a*x + b)`, by Horner-style repeated substitution.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> Poly {
        let arg = Poly::affine(b.clone(), a.clone());
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Index of the lowest coefficient at which `self` and `other` differ,
    /// or `None` when equal.
    pub fn first_difference(&self, other: &Poly) -> Option<usize> {
        let top = self.coeffs.len().max(other.coeffs.len());
        (0..top).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let top = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..top).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let top = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..top).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

/// Stable textual format used in reports and golden tests: descending powers,
/// exact rationals as `p/q`, e.g. `2*x^2 - 6*x + 2`. Magnitude-one
/// coefficients of `x` terms are left implicit (`x^2`, `-x`).
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(coeffs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn add_identity_and_inverse() {
        let q = p(&[(1, 1), (-2, 1)]);
        assert_eq!(&Poly::zero() + &q, q);
        assert_eq!(&q + &-&q, Poly::zero());
    }

    #[test]
    fn add_hand_example() {
        // (1 - 2x) + (2x^2 - 6x + 2) = 2x^2 - 8x + 3
        let a = p(&[(1, 1), (-2, 1)]);
        let b = p(&[(2, 1), (-6, 1), (2, 1)]);
        assert_eq!(&a + &b, p(&[(3, 1), (-8, 1), (2, 1)]));
    }

    #[test]
    fn mul_identity_and_hand_examples() {
        let q = p(&[(1, 2), (0, 1), (3, 1)]);
        assert_eq!(&Poly::one() * &q, q);
        assert_eq!(&Poly::x() * &Poly::x(), p(&[(0, 1), (0, 1), (1, 1)]));
        // (1 - 2x)(1 + 2x) = 1 - 4x^2
        let a = p(&[(1, 1), (-2, 1)]);
        let b = p(&[(1, 1), (2, 1)]);
        assert_eq!(&a * &b, p(&[(1, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn affine_substitute_examples() {
        let c1 = p(&[(1, 1), (-2, 1)]); // 1 - 2x
        assert_eq!(c1.affine_substitute(&int(1), &int(0)), c1);
        assert_eq!(c1.affine_substitute(&int(3), &int(0)), p(&[(1, 1), (-6, 1)]));
        assert_eq!(c1.affine_substitute(&int(1), &rat(1, 3)), p(&[(1, 3), (-2, 1)]));
    }

    #[test]
    fn eval_examples() {
        let c1 = p(&[(1, 1), (-2, 1)]);
        assert_eq!(c1.eval(&int(0)), int(1));
        assert_eq!(c1.eval(&int(3)), int(-5));
        let c2 = p(&[(2, 1), (-6, 1), (2, 1)]);
        assert_eq!(c2.eval(&int(1)), int(-2));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[(0, 1), (0, 1)]).degree(), None);
        assert_eq!(p(&[(1, 1), (0, 1)]).degree(), Some(0));
    }

    #[test]
    fn display_golden_format() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(p(&[(1, 1), (-2, 1)]).to_string(), "-2*x + 1");
        assert_eq!(p(&[(2, 1), (-6, 1), (2, 1)]).to_string(), "2*x^2 - 6*x + 2");
        assert_eq!(p(&[(0, 1), (-1, 1), (1, 2)]).to_string(), "1/2*x^2 - x");
        assert_eq!(p(&[(-1, 3)]).to_string(), "-1/3");
    }

    #[test]
    fn first_difference_reports_lowest_index() {
        let a = p(&[(1, 1), (2, 1), (3, 1)]);
        let b = p(&[(1, 1), (5, 1), (3, 1)]);
        assert_eq!(a.first_difference(&b), Some(1));
        assert_eq!(a.first_difference(&a), None);
        assert_eq!(a.first_difference(&p(&[(1, 1), (2, 1)])), Some(2));
    }
}
