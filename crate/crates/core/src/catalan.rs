//! Catalan and w-Catalan polynomials from their generating functions, the
//! Stirling-expansion route, and the alternating half-power / double-ratio
//! series the symmetric identities are built from.

use crate::arith::{catalan_number, factorial, int, rat, stirling1, Rational};
use crate::poly::Poly;
use crate::series::{binomial_series, LinearExponent, Series};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parity error: {name} must be odd (got {value})")]
pub struct ParityError {
    pub name: &'static str,
    pub value: u32,
}

pub(crate) fn require_odd(name: &'static str, value: u32) -> Result<(), ParityError> {
    if value % 2 == 1 {
        Ok(())
    } else {
        Err(ParityError { name, value })
    }
}

/// `w/2` as a constant exponent.
fn half_of(w: u32) -> LinearExponent {
    LinearExponent::constant(rat(i64::from(w), 2))
}

/// `(w/2) * x` as a linear exponent.
fn half_of_times_x(w: u32) -> LinearExponent {
    LinearExponent::x_multiple(rat(i64::from(w), 2))
}

/// Generating series of the w-Catalan numbers,
/// `2 / (1 + (1 - 4t)^(w/2))`, truncated to `order` coefficients.
/// All coefficients are constant polynomials.
pub fn w_catalan_number_series(w: u32, order: usize) -> Series {
    assert!(w >= 1, "w must be at least 1");
    let denom = Series::one(order).add(&binomial_series(&half_of(w), order));
    // Constant term is always 2, so the reciprocal exists.
    denom.reciprocal().expect("constant term 2 is invertible").scale(&int(2))
}

/// Generating series of the w-Catalan polynomials,
/// `2 / (1 + (1 - 4t)^(w/2)) * (1 - 4t)^((w/2) x)`.
pub fn w_catalan_series(w: u32, order: usize) -> Series {
    w_catalan_number_series(w, order).mul(&binomial_series(&half_of_times_x(w), order))
}

/// Generating series of the Catalan numbers, `2 / (1 + sqrt(1 - 4t))`.
pub fn catalan_number_series(order: usize) -> Series {
    w_catalan_number_series(1, order)
}

/// The w-Catalan polynomial: coefficient of `t^n` in `w_catalan_series`.
pub fn w_catalan_poly(n: u32, w: u32) -> Poly {
    w_catalan_series(w, n as usize + 1).coeff(n as usize).clone()
}

/// The Catalan polynomial, i.e. the `w = 1` case.
pub fn catalan_poly(n: u32) -> Poly {
    w_catalan_poly(n, 1)
}

/// The w-Catalan number: constant term of the w-Catalan polynomial.
pub fn w_catalan_number(n: u32, w: u32) -> Rational {
    w_catalan_poly(n, w).constant_term()
}

/// The Catalan polynomial by its Stirling-number expansion,
/// `sum_{m<=n} sum_{j<=m} (x/2)^j S1(m, j) (-4)^m C_{n-m} / m!`.
/// An independent route that must agree with `catalan_poly`.
pub fn catalan_poly_stirling(n: u32) -> Poly {
    let mut acc = Poly::zero();
    for m in 0..=n {
        let weight = pow_i64(-4, m) / Rational::from_integer(factorial(m)) * catalan_number(n - m);
        let mut inner = vec![Rational::zero(); m as usize + 1];
        for (j, slot) in inner.iter_mut().enumerate() {
            // S1(m, j) * (1/2)^j
            *slot = Rational::from_integer(stirling1(m as usize, j)) * pow_rat(&rat(1, 2), j as u32);
        }
        acc = &acc + &Poly::from_coeffs(inner).scale(&weight);
    }
    acc
}

/// `S_{k,d}(w - 1) = sum_{i<w} binomial(d*i/2, k) (-1)^i` for odd `d`, `w`.
pub fn s_kd(k: u32, d: u32, w: u32) -> Result<Rational, ParityError> {
    require_odd("d", d)?;
    require_odd("w", w)?;
    let mut acc = Rational::zero();
    for i in 0..w {
        let top = rat(i64::from(d) * i64::from(i), 2);
        let term = crate::arith::gen_binomial(&top, k);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The finite alternating sum `sum_{i<w} (-1)^i (1 - 4t)^(d*i/2)`. Its
/// coefficient of `t^k` equals `s_kd(k, d, w) * (-4)^k`.
pub fn alternating_half_power_series(d: u32, w: u32, order: usize) -> Result<Series, ParityError> {
    require_odd("d", d)?;
    require_odd("w", w)?;
    let mut acc = Series::zero(order);
    for i in 0..w {
        let term = binomial_series(
            &LinearExponent::constant(rat(i64::from(d) * i64::from(i), 2)),
            order,
        );
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// The two-parameter ratio series
/// `2 (1-4t)^(w1 w2 x / 2) ((1-4t)^(w1 w2 / 2) + 1)
///  / (((1-4t)^(w1/2) + 1) ((1-4t)^(w2/2) + 1))`,
/// whose `t^n` coefficients admit the two symmetric expansions checked by the
/// double-ratio verifier.
pub fn double_ratio_series(w1: u32, w2: u32, order: usize) -> Result<Series, ParityError> {
    require_odd("w1", w1)?;
    require_odd("w2", w2)?;
    let prod = w1 * w2;
    let numer = binomial_series(&half_of_times_x(prod), order)
        .mul(&Series::one(order).add(&binomial_series(&half_of(prod), order)))
        .scale(&int(2));
    let denom = Series::one(order)
        .add(&binomial_series(&half_of(w1), order))
        .mul(&Series::one(order).add(&binomial_series(&half_of(w2), order)));
    // Constant term of the denominator is 4.
    Ok(numer.mul(&denom.reciprocal().expect("constant term 4 is invertible")))
}

/// `base^exp` as a rational, with `i64` base.
pub fn pow_i64(base: i64, exp: u32) -> Rational {
    pow_rat(&int(base), exp)
}

pub fn pow_rat(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_polys_small() {
        assert_eq!(catalan_poly(0), Poly::one());
        assert_eq!(catalan_poly(1), Poly::affine(int(1), int(-2)));
        assert_eq!(
            catalan_poly(2),
            Poly::from_coeffs(vec![int(2), int(-6), int(2)])
        );
    }

    #[test]
    fn w_one_reduces_to_catalan() {
        for n in 0..=12 {
            assert_eq!(w_catalan_poly(n, 1), catalan_poly(n), "n={n}");
        }
    }

    #[test]
    fn w_catalan_poly_small() {
        assert_eq!(w_catalan_poly(0, 7), Poly::one());
        assert_eq!(w_catalan_poly(1, 3), Poly::affine(int(3), int(-6)));
    }

    #[test]
    fn w_catalan_numbers_small() {
        assert_eq!(w_catalan_number(3, 1), int(5));
        assert_eq!(w_catalan_number(0, 9), int(1));
        assert_eq!(w_catalan_number(2, 3), int(6));
    }

    #[test]
    fn constant_terms_match_catalan_numbers() {
        for n in 0..=30 {
            assert_eq!(catalan_poly(n).constant_term(), catalan_number(n), "n={n}");
        }
    }

    #[test]
    fn stirling_route_matches_generating_function() {
        assert_eq!(catalan_poly_stirling(0), Poly::one());
        assert_eq!(catalan_poly_stirling(1), Poly::affine(int(1), int(-2)));
        assert_eq!(catalan_poly_stirling(5), catalan_poly(5));
    }

    #[test]
    fn s_kd_degenerate_cases() {
        for k in 0..6 {
            let want = if k == 0 { int(1) } else { int(0) };
            assert_eq!(s_kd(k, 7, 1).unwrap(), want, "k={k}");
        }
        for (d, w) in [(1, 3), (3, 5), (5, 9)] {
            assert_eq!(s_kd(0, d, w).unwrap(), int(1));
        }
    }

    #[test]
    fn s_kd_hand_values() {
        assert_eq!(s_kd(1, 1, 3).unwrap(), rat(1, 2)); // 0 - 1/2 + 1
        assert_eq!(s_kd(1, 3, 3).unwrap(), rat(3, 2)); // 0 - 3/2 + 3
    }

    #[test]
    fn s_kd_rejects_even_parameters() {
        assert_eq!(
            s_kd(1, 2, 3),
            Err(ParityError { name: "d", value: 2 })
        );
        assert_eq!(
            s_kd(1, 1, 4),
            Err(ParityError { name: "w", value: 4 })
        );
    }

    #[test]
    fn alternating_series_examples() {
        let s = alternating_half_power_series(5, 1, 4).unwrap();
        assert_eq!(s, Series::one(4));

        let s = alternating_half_power_series(1, 3, 2).unwrap();
        assert_eq!(*s.coeff(1), Poly::constant(int(-2)));

        let s = alternating_half_power_series(3, 3, 2).unwrap();
        assert_eq!(*s.coeff(1), Poly::constant(int(-6)));
    }

    #[test]
    fn alternating_series_coefficient_law() {
        for (d, w) in [(1, 1), (1, 3), (3, 3), (3, 5), (5, 7)] {
            let s = alternating_half_power_series(d, w, 10).unwrap();
            for k in 0..10u32 {
                let want = s_kd(k, d, w).unwrap() * pow_i64(-4, k);
                assert_eq!(*s.coeff(k as usize), Poly::constant(want), "d={d} w={w} k={k}");
            }
        }
    }

    #[test]
    fn double_ratio_at_one_one_is_catalan_series() {
        let order = 8;
        let ratio = double_ratio_series(1, 1, order).unwrap();
        assert_eq!(ratio, w_catalan_series(1, order));
    }

    #[test]
    fn double_ratio_with_unit_first_parameter() {
        // (1, w2): coefficient n collapses to C_{n,1}(w2 x).
        let order = 7;
        let ratio = double_ratio_series(1, 3, order).unwrap();
        for n in 0..order {
            let want = catalan_poly(n as u32).affine_substitute(&int(3), &int(0));
            assert_eq!(*ratio.coeff(n), want, "n={n}");
        }
    }

    #[test]
    fn double_ratio_rejects_even_parameters() {
        assert!(double_ratio_series(2, 3, 4).is_err());
        assert!(double_ratio_series(3, 6, 4).is_err());
    }

    #[test]
    fn leading_coefficient_law() {
        // deg C_{n,w}(x) = n with leading coefficient (-2w)^n / n!.
        for w in [1u32, 3, 5, 7] {
            let series = w_catalan_series(w, 21);
            for n in 0..=20u32 {
                let p = series.coeff(n as usize);
                assert_eq!(p.degree(), Some(n as usize), "n={n} w={w}");
                let want = pow_i64(-2 * i64::from(w), n)
                    / Rational::from_integer(factorial(n));
                assert_eq!(p.leading_coeff().unwrap(), &want, "n={n} w={w}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "w must be at least 1")]
    fn zero_w_rejected() {
        let _ = w_catalan_poly(3, 0);
    }
}
