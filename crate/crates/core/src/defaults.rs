//! Canonical parameter grids: every identity verified on seconds-scale grids
//! that still exercise non-trivial half-integer binomials. The CLI's
//! `verify --all` and the acceptance suite both run exactly these.

use crate::catalan::ParityError;
use crate::identity;
use crate::padic::{self, HalfBinomialSpec, PadicError};
use crate::report::VerificationReport;
use thiserror::Error;

pub const N_MAX: u32 = 15;
pub const ODD_LIST: [u32; 5] = [1, 3, 5, 7, 9];
pub const PAIR_POOL: [u32; 4] = [1, 3, 5, 7];
pub const STIRLING_FORM_N_MAX: u32 = 20;
pub const GF_PRODUCT_ORDER: usize = 12;
pub const GF_PRODUCT_D: [u32; 3] = [1, 3, 5];
pub const ALT_SERIES_ORDER: usize = 12;
pub const DOUBLE_RATIO_N_MAX: u32 = 8;
pub const DOUBLE_RATIO_PAIRS: [(u32, u32); 3] = [(1, 3), (3, 5), (3, 7)];

pub const PADIC_PRIMES: [u32; 3] = [3, 5, 7];
pub const PADIC_PRECISION: u32 = 4;
pub const PADIC_N_MAX: u32 = 5;
pub const PADIC_X: [i64; 4] = [0, 1, 2, 3];
pub const SHIFT_LIST: [u32; 3] = [1, 3, 5];

/// All ordered odd pairs drawn from [`PAIR_POOL`].
pub fn odd_pairs() -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for &a in &PAIR_POOL {
        for &b in &PAIR_POOL {
            pairs.push((a, b));
        }
    }
    pairs
}

pub fn shift_specs() -> Vec<HalfBinomialSpec> {
    let mut specs = Vec::new();
    for a in 0..=3 {
        for k in 0..=3 {
            specs.push(HalfBinomialSpec::new(a, k));
        }
    }
    specs
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Parity(#[from] ParityError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

/// Every symbolic identity on its default grid, in catalog order.
pub fn run_symbolic_suite() -> Result<Vec<VerificationReport>, ParityError> {
    let pairs = odd_pairs();
    Ok(vec![
        identity::verify_theorem1(N_MAX, &ODD_LIST)?,
        identity::verify_theorem2(N_MAX, &pairs)?,
        identity::verify_corollary3(N_MAX, &ODD_LIST)?,
        identity::verify_corollary4(N_MAX, &pairs)?,
        identity::verify_theorem5(N_MAX, &pairs)?,
        identity::verify_mult_formula(N_MAX, &ODD_LIST)?,
        identity::verify_stirling_form(STIRLING_FORM_N_MAX),
        identity::verify_gf_product(GF_PRODUCT_ORDER, &GF_PRODUCT_D)?,
        identity::verify_alt_series(ALT_SERIES_ORDER, &ODD_LIST, &ODD_LIST)?,
        identity::verify_double_ratio(DOUBLE_RATIO_N_MAX, &DOUBLE_RATIO_PAIRS)?,
    ])
}

/// Both p-adic oracles for one prime on the default grids.
pub fn run_padic_suite(p: u32, precision: u32, n_cap: u32) -> Result<Vec<VerificationReport>, PadicError> {
    Ok(vec![
        padic::verify_catalan_integral(p, PADIC_N_MAX, &PADIC_X, precision, n_cap)?,
        padic::verify_shift_identity(p, &shift_specs(), &SHIFT_LIST, precision, n_cap)?,
    ])
}

/// The full default sweep: all symbolic identities, then the p-adic oracles
/// for each default prime.
pub fn run_all() -> Result<Vec<VerificationReport>, SuiteError> {
    let mut reports = run_symbolic_suite()?;
    for &p in &PADIC_PRIMES {
        reports.extend(run_padic_suite(p, PADIC_PRECISION, padic::default_n_cap(p))?);
    }
    Ok(reports)
}
