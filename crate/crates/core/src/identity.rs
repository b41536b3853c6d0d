//! Coefficient-exact verifiers for the symmetric identities. Every verifier
//! sweeps its parameter grid in order and records a pass/fail cell per tuple;
//! a failing cell carries both sides and the lowest differing coefficient.

use crate::arith::{catalan_number, gen_binomial, int, rat, Rational};
use crate::catalan::{
    alternating_half_power_series, catalan_number_series, catalan_poly_stirling,
    double_ratio_series, pow_i64, require_odd, s_kd, w_catalan_number_series, w_catalan_series,
    ParityError,
};
use crate::poly::Poly;
use crate::report::{IdentityId, Outcome, VerificationReport, Witness};
use crate::series::Series;
use num_traits::Zero;
use std::collections::BTreeMap;

fn poly_outcome(lhs: &Poly, rhs: &Poly) -> Outcome {
    match lhs.first_difference(rhs) {
        None => Outcome::Pass,
        Some(idx) => Outcome::Fail(Witness::values(lhs, rhs).with_first_diff(idx)),
    }
}

fn value_outcome(lhs: &Rational, rhs: &Rational) -> Outcome {
    if lhs == rhs {
        Outcome::Pass
    } else {
        Outcome::Fail(Witness::values(lhs, rhs))
    }
}

fn series_outcome(lhs: &Series, rhs: &Series) -> Outcome {
    for n in 0..lhs.order().min(rhs.order()) {
        if lhs.coeff(n) != rhs.coeff(n) {
            return Outcome::Fail(
                Witness::values(lhs.coeff(n), rhs.coeff(n)).with_first_diff(n),
            );
        }
    }
    Outcome::Pass
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Coefficients `t^0 .. t^n_max` of the w-Catalan polynomial series, per
/// distinct `w`, computed once per sweep.
fn poly_tables(ws: impl IntoIterator<Item = u32>, n_max: u32) -> BTreeMap<u32, Vec<Poly>> {
    let mut tables = BTreeMap::new();
    for w in ws {
        tables
            .entry(w)
            .or_insert_with(|| w_catalan_series(w, n_max as usize + 1).coeffs().to_vec());
    }
    tables
}

fn s_kd_table(d: u32, w: u32, k_max: u32) -> Vec<Rational> {
    (0..=k_max).map(|k| s_kd(k, d, w).expect("parity checked")).collect()
}

fn check_all_odd(name: &'static str, values: &[u32]) -> Result<(), ParityError> {
    values.iter().try_for_each(|&v| require_odd(name, v))
}

fn check_pairs_odd(pairs: &[(u32, u32)]) -> Result<(), ParityError> {
    for &(w1, w2) in pairs {
        require_odd("w1", w1)?;
        require_odd("w2", w2)?;
    }
    Ok(())
}

/// `C_n(d) + C_n = 2^(2n+1) sum_{i<d} binomial(i/2, n) (-1)^(n-i)` for every
/// `n <= n_max` and odd `d`.
pub fn verify_theorem1(n_max: u32, d_list: &[u32]) -> Result<VerificationReport, ParityError> {
    check_all_odd("d", d_list)?;
    let polys = w_catalan_series(1, n_max as usize + 1);
    let mut report = VerificationReport::new(IdentityId::Theorem1);
    for n in 0..=n_max {
        for &d in d_list {
            let lhs = polys.coeff(n as usize).eval(&int(i64::from(d))) + catalan_number(n);
            let mut sum = Rational::zero();
            for i in 0..d {
                sum += gen_binomial(&rat(i64::from(i), 2), n) * sign(n + i);
            }
            let rhs = pow_i64(2, 2 * n + 1) * sum;
            report.push(
                vec![("n", i64::from(n)), ("d", i64::from(d))],
                value_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// One side of the Theorem 2 convolution:
/// `sum_{l<=n} (-4)^(n-l) C_{l,wa}(wb x) S_{n-l,wb}(wa - 1)`.
fn convolution_side(cw_a: &[Poly], wb: u32, skd_b_of_a: &[Rational], n: u32) -> Poly {
    let wb_rat = int(i64::from(wb));
    let zero = int(0);
    let mut acc = Poly::zero();
    for l in 0..=n {
        let weight = pow_i64(-4, n - l) * &skd_b_of_a[(n - l) as usize];
        if weight.is_zero() {
            continue;
        }
        let substituted = cw_a[l as usize].affine_substitute(&wb_rat, &zero);
        acc = &acc + &substituted.scale(&weight);
    }
    acc
}

/// Swap symmetry of the convolution form for every `n <= n_max` and odd pair.
pub fn verify_theorem2(
    n_max: u32,
    pairs: &[(u32, u32)],
) -> Result<VerificationReport, ParityError> {
    check_pairs_odd(pairs)?;
    let tables = poly_tables(pairs.iter().flat_map(|&(a, b)| [a, b]), n_max);
    let mut report = VerificationReport::new(IdentityId::Theorem2);
    for &(w1, w2) in pairs {
        let skd_21 = s_kd_table(w2, w1, n_max);
        let skd_12 = s_kd_table(w1, w2, n_max);
        for n in 0..=n_max {
            let lhs = convolution_side(&tables[&w1], w2, &skd_21, n);
            let rhs = convolution_side(&tables[&w2], w1, &skd_12, n);
            report.push(
                vec![("n", i64::from(n)), ("w1", i64::from(w1)), ("w2", i64::from(w2))],
                poly_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// `C_n(w2 x) = sum_{l<=n} (-4)^(n-l) C_{l,w2}(x) S_{n-l}(w2 - 1)`.
pub fn verify_corollary3(n_max: u32, w_list: &[u32]) -> Result<VerificationReport, ParityError> {
    check_all_odd("w2", w_list)?;
    let catalan = w_catalan_series(1, n_max as usize + 1);
    let tables = poly_tables(w_list.iter().copied(), n_max);
    let mut report = VerificationReport::new(IdentityId::Corollary3);
    for &w2 in w_list {
        let skd = s_kd_table(1, w2, n_max);
        let w2_rat = int(i64::from(w2));
        let zero = int(0);
        for n in 0..=n_max {
            let lhs = catalan.coeff(n as usize).affine_substitute(&w2_rat, &zero);
            let mut rhs = Poly::zero();
            for l in 0..=n {
                let weight = pow_i64(-4, n - l) * &skd[(n - l) as usize];
                rhs = &rhs + &tables[&w2][l as usize].scale(&weight);
            }
            report.push(
                vec![("n", i64::from(n)), ("w2", i64::from(w2))],
                poly_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// The numeric (`x = 0`) slice of Theorem 2.
pub fn verify_corollary4(
    n_max: u32,
    pairs: &[(u32, u32)],
) -> Result<VerificationReport, ParityError> {
    check_pairs_odd(pairs)?;
    let numbers: BTreeMap<u32, Vec<Rational>> = pairs
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .map(|w| {
            let series = w_catalan_number_series(w, n_max as usize + 1);
            let values = series.coeffs().iter().map(Poly::constant_term).collect();
            (w, values)
        })
        .collect();
    let side = |wa: u32, skd: &[Rational], n: u32| -> Rational {
        (0..=n)
            .map(|l| pow_i64(-4, n - l) * &numbers[&wa][l as usize] * &skd[(n - l) as usize])
            .sum()
    };
    let mut report = VerificationReport::new(IdentityId::Corollary4);
    for &(w1, w2) in pairs {
        let skd_21 = s_kd_table(w2, w1, n_max);
        let skd_12 = s_kd_table(w1, w2, n_max);
        for n in 0..=n_max {
            let lhs = side(w1, &skd_21, n);
            let rhs = side(w2, &skd_12, n);
            report.push(
                vec![("n", i64::from(n)), ("w1", i64::from(w1)), ("w2", i64::from(w2))],
                value_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// One side of the Theorem 5 alternating sum:
/// `sum_{l<wa} (-1)^l C_{n,wa}(wb x + (wb/wa) l)`.
fn shifted_side(cw_a_n: &Poly, wa: u32, wb: u32) -> Poly {
    let wb_rat = int(i64::from(wb));
    let mut acc = Poly::zero();
    for l in 0..wa {
        let shift = rat(i64::from(wb) * i64::from(l), i64::from(wa));
        let term = cw_a_n.affine_substitute(&wb_rat, &shift);
        acc = if l % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Swap symmetry of the shifted-argument alternating sums.
pub fn verify_theorem5(
    n_max: u32,
    pairs: &[(u32, u32)],
) -> Result<VerificationReport, ParityError> {
    check_pairs_odd(pairs)?;
    let tables = poly_tables(pairs.iter().flat_map(|&(a, b)| [a, b]), n_max);
    let mut report = VerificationReport::new(IdentityId::Theorem5);
    for &(w1, w2) in pairs {
        for n in 0..=n_max {
            let lhs = shifted_side(&tables[&w1][n as usize], w1, w2);
            let rhs = shifted_side(&tables[&w2][n as usize], w2, w1);
            report.push(
                vec![("n", i64::from(n)), ("w1", i64::from(w1)), ("w2", i64::from(w2))],
                poly_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// `C_n(w1 x) = sum_{l<w1} (-1)^l C_{n,w1}(x + l/w1)`.
pub fn verify_mult_formula(n_max: u32, w_list: &[u32]) -> Result<VerificationReport, ParityError> {
    check_all_odd("w1", w_list)?;
    let catalan = w_catalan_series(1, n_max as usize + 1);
    let tables = poly_tables(w_list.iter().copied(), n_max);
    let mut report = VerificationReport::new(IdentityId::MultFormula);
    for &w1 in w_list {
        let w1_rat = int(i64::from(w1));
        let zero = int(0);
        for n in 0..=n_max {
            let lhs = catalan.coeff(n as usize).affine_substitute(&w1_rat, &zero);
            // Theorem 5 side with wb = 1.
            let rhs = shifted_side(&tables[&w1][n as usize], w1, 1);
            report.push(
                vec![("n", i64::from(n)), ("w1", i64::from(w1))],
                poly_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// The Stirling-expansion route must match the generating-function route for
/// every `n <= n_max`.
pub fn verify_stirling_form(n_max: u32) -> VerificationReport {
    let series = w_catalan_series(1, n_max as usize + 1);
    let mut report = VerificationReport::new(IdentityId::StirlingForm);
    for n in 0..=n_max {
        let lhs = catalan_poly_stirling(n);
        let rhs = series.coeff(n as usize);
        report.push(vec![("n", i64::from(n))], poly_outcome(&lhs, rhs));
    }
    report
}

/// `(sum_n (C_n(d) + C_n) t^n) * (sum_n C_{n,d} t^n) = 2 sum_n C_n t^n`
/// coefficient-wise to the given order.
pub fn verify_gf_product(order: usize, d_list: &[u32]) -> Result<VerificationReport, ParityError> {
    check_all_odd("d", d_list)?;
    assert!(order >= 1, "series order must be at least 1");
    let catalan_polys = w_catalan_series(1, order);
    let catalan_numbers = catalan_number_series(order);
    let rhs = catalan_numbers.scale(&int(2));
    let mut report = VerificationReport::new(IdentityId::GfProduct);
    for &d in d_list {
        let shifted = Series::from_coeffs(
            (0..order)
                .map(|n| {
                    let value = catalan_polys.coeff(n).eval(&int(i64::from(d)))
                        + catalan_numbers.coeff(n).constant_term();
                    Poly::constant(value)
                })
                .collect(),
        );
        let lhs = shifted.mul(&w_catalan_number_series(d, order));
        report.push(vec![("d", i64::from(d))], series_outcome(&lhs, &rhs));
    }
    Ok(report)
}

/// Coefficient `k` of the alternating half-power series must equal
/// `S_{k,d}(w-1) (-4)^k` for `k < order`.
pub fn verify_alt_series(
    order: usize,
    d_list: &[u32],
    w_list: &[u32],
) -> Result<VerificationReport, ParityError> {
    check_all_odd("d", d_list)?;
    check_all_odd("w", w_list)?;
    let mut report = VerificationReport::new(IdentityId::AltSeries);
    for &d in d_list {
        for &w in w_list {
            let lhs = alternating_half_power_series(d, w, order)?;
            let rhs = Series::from_coeffs(
                (0..order)
                    .map(|k| {
                        let value = s_kd(k as u32, d, w).expect("parity checked")
                            * pow_i64(-4, k as u32);
                        Poly::constant(value)
                    })
                    .collect(),
            );
            report.push(
                vec![("d", i64::from(d)), ("w", i64::from(w))],
                series_outcome(&lhs, &rhs),
            );
        }
    }
    Ok(report)
}

/// Three-way check per `(n, w1, w2)`: the double-ratio series coefficient
/// must equal both the convolution form and the shifted-argument form.
pub fn verify_double_ratio(
    n_max: u32,
    pairs: &[(u32, u32)],
) -> Result<VerificationReport, ParityError> {
    check_pairs_odd(pairs)?;
    let tables = poly_tables(pairs.iter().flat_map(|&(a, b)| [a, b]), n_max);
    let mut report = VerificationReport::new(IdentityId::DoubleRatio);
    for &(w1, w2) in pairs {
        let ratio = double_ratio_series(w1, w2, n_max as usize + 1)?;
        let skd_21 = s_kd_table(w2, w1, n_max);
        for n in 0..=n_max {
            let from_ratio = ratio.coeff(n as usize);
            let convolution = convolution_side(&tables[&w1], w2, &skd_21, n);
            let shifted = shifted_side(&tables[&w1][n as usize], w1, w2);
            let outcome = match poly_outcome(from_ratio, &convolution) {
                Outcome::Fail(witness) => {
                    Outcome::Fail(witness.with_detail("ratio series vs convolution form"))
                }
                _ => match poly_outcome(from_ratio, &shifted) {
                    Outcome::Fail(witness) => Outcome::Fail(
                        witness.with_detail("ratio series vs shifted-argument form"),
                    ),
                    outcome => outcome,
                },
            };
            report.push(
                vec![("n", i64::from(n)), ("w1", i64::from(w1)), ("w2", i64::from(w2))],
                outcome,
            );
        }
    }
    Ok(report)
}
