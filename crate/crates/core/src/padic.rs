//! Independent p-adic oracle: evaluates the fermionic integral by truncated
//! alternating sums modulo `p^M` and checks its closed forms against the
//! exact symbolic engine.
//!
//! The only integrands needed are `f(y) = binomial((a + y)/2, k)`, so the
//! precision bookkeeping is fixed once: intermediate binomials work modulo
//! `p^(M + v)` with `v = v_p(k!)`, which guarantees the `p^v` carried by the
//! numerator product cancels exactly.

use crate::arith::{factorial, gen_binomial, rat, Rational};
use crate::catalan::{pow_rat, require_odd, w_catalan_series, ParityError};
use crate::report::{IdentityId, Outcome, VerificationReport, Witness};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PadicError {
    #[error("p must be an odd prime (got {0})")]
    InvalidPrime(u32),
    #[error("non-unit: {residue} mod {p}^{precision} has no inverse")]
    NonUnit {
        residue: BigInt,
        p: u32,
        precision: u32,
    },
    #[error(
        "numerator carries p^{found} but p^{needed} must cancel; representative precision bug"
    )]
    ValuationShortfall { needed: u32, found: u32 },
    #[error(transparent)]
    Parity(#[from] ParityError),
}

pub fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_prime(p: u32) -> Result<(), PadicError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(PadicError::InvalidPrime(p))
    }
}

fn pow_big(base: u32, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(modulus);
    let egcd = a.extended_gcd(modulus);
    if egcd.gcd.is_one() {
        Some(egcd.x.mod_floor(modulus))
    } else {
        None
    }
}

/// `v_p(k!)` by Legendre's formula.
pub fn factorial_valuation(k: u32, p: u32) -> u32 {
    let mut v = 0;
    let mut q = u64::from(p);
    while q <= u64::from(k) {
        v += u64::from(k) / q;
        q *= u64::from(p);
    }
    u32::try_from(v).unwrap()
}

/// A residue modulo `p^M` for an odd prime `p`. Arithmetic is only defined
/// between values with identical `(p, M)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PadicInt {
    p: u32,
    precision: u32,
    residue: BigInt,
}

impl PadicInt {
    pub fn new(p: u32, precision: u32, value: &BigInt) -> Result<Self, PadicError> {
        check_prime(p)?;
        assert!(precision >= 1, "precision must be at least 1");
        Ok(PadicInt {
            p,
            precision,
            residue: value.mod_floor(&pow_big(p, precision)),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> BigInt {
        pow_big(self.p, self.precision)
    }

    /// Maps an exact rational into `Z/p^M`. Fails when `p` divides the
    /// denominator.
    pub fn from_rational(r: &Rational, p: u32, precision: u32) -> Result<Self, PadicError> {
        let value = PadicInt::new(p, precision, r.numer())?;
        let denom = r.denom().mod_floor(&value.modulus());
        let inv = mod_inverse(&denom, &value.modulus()).ok_or(PadicError::NonUnit {
            residue: r.denom().clone(),
            p,
            precision,
        })?;
        PadicInt::new(p, precision, &(value.residue * inv))
    }

    pub fn inverse(&self) -> Result<Self, PadicError> {
        let modulus = self.modulus();
        match mod_inverse(&self.residue, &modulus) {
            Some(inv) => PadicInt::new(self.p, self.precision, &inv),
            None => Err(PadicError::NonUnit {
                residue: self.residue.clone(),
                p: self.p,
                precision: self.precision,
            }),
        }
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.p == other.p && self.precision == other.precision,
            "mixed p-adic contexts: {}^{} vs {}^{}",
            self.p,
            self.precision,
            other.p,
            other.precision
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        PadicInt {
            p: self.p,
            precision: self.precision,
            residue: (&self.residue + &other.residue).mod_floor(&self.modulus()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other);
        PadicInt {
            p: self.p,
            precision: self.precision,
            residue: (&self.residue - &other.residue).mod_floor(&self.modulus()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        PadicInt {
            p: self.p,
            precision: self.precision,
            residue: (&self.residue * &other.residue).mod_floor(&self.modulus()),
        }
    }

    /// `v_p(self - other)`, capped at the precision `M` (a zero difference
    /// reports `M`).
    pub fn diff_valuation(&self, other: &Self) -> u32 {
        self.check_compatible(other);
        let mut diff = (&self.residue - &other.residue).mod_floor(&self.modulus());
        if diff.is_zero() {
            return self.precision;
        }
        let p = BigInt::from(self.p);
        let mut v = 0;
        while (&diff % &p).is_zero() {
            diff /= &p;
            v += 1;
        }
        v
    }
}

/// Multiplicative inverse modulo `p^M`.
pub fn padic_inverse(u: &PadicInt) -> Result<PadicInt, PadicError> {
    u.inverse()
}

/// Evaluates `binomial(z, k) mod p^M` for integer representatives `z` given
/// at working precision `M + v_p(k!)`.
struct BinomialEvaluator {
    k: u32,
    val_k_factorial: u32,
    working_mod: BigInt,
    target_mod: BigInt,
    p_big: BigInt,
    /// Inverse modulo `p^M` of the unit part `k! / p^(v_p(k!))`.
    factorial_unit_inv: BigInt,
}

impl BinomialEvaluator {
    fn new(k: u32, p: u32, precision: u32) -> Result<Self, PadicError> {
        check_prime(p)?;
        assert!(precision >= 1, "precision must be at least 1");
        let v = factorial_valuation(k, p);
        let target_mod = pow_big(p, precision);
        let unit = factorial(k) / pow_big(p, v);
        let factorial_unit_inv =
            mod_inverse(&unit, &target_mod).expect("unit part of k! is coprime to p");
        Ok(BinomialEvaluator {
            k,
            val_k_factorial: v,
            working_mod: pow_big(p, precision + v),
            target_mod,
            p_big: BigInt::from(p),
            factorial_unit_inv,
        })
    }

    /// `z` is reduced modulo the working modulus internally.
    fn eval(&self, z: &BigInt) -> Result<BigInt, PadicError> {
        if self.k == 0 {
            return Ok(BigInt::one());
        }
        let mut prod = BigInt::one();
        for j in 0..self.k {
            prod = (prod * (z - BigInt::from(j))).mod_floor(&self.working_mod);
        }
        if prod.is_zero() {
            // Valuation at least M + v, so the quotient vanishes mod p^M.
            return Ok(BigInt::zero());
        }
        for _ in 0..self.val_k_factorial {
            let (q, r) = prod.div_rem(&self.p_big);
            if !r.is_zero() {
                let mut found = 0;
                let mut probe = prod.clone();
                while (&probe % &self.p_big).is_zero() {
                    probe /= &self.p_big;
                    found += 1;
                }
                return Err(PadicError::ValuationShortfall {
                    needed: self.val_k_factorial,
                    found,
                });
            }
            prod = q;
        }
        Ok((prod * &self.factorial_unit_inv).mod_floor(&self.target_mod))
    }
}

/// `binomial(z, k) mod p^M` where `z` is an integer representative carried at
/// precision `M + v_p(k!)`. The numerator product is taken at the working
/// precision, exactly `v_p(k!)` powers of `p` are cancelled, and the unit
/// part of `k!` is inverted modulo `p^M`.
pub fn padic_binomial(z: &BigInt, k: u32, p: u32, precision: u32) -> Result<PadicInt, PadicError> {
    let evaluator = BinomialEvaluator::new(k, p, precision)?;
    let residue = evaluator.eval(z)?;
    PadicInt::new(p, precision, &residue)
}

/// The integrand family `f(y) = binomial((a + y)/2, k)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HalfBinomialSpec {
    pub a: i64,
    pub k: u32,
}

impl HalfBinomialSpec {
    pub fn new(a: i64, k: u32) -> Self {
        HalfBinomialSpec { a, k }
    }

    pub fn shifted(&self, by: u32) -> Self {
        HalfBinomialSpec {
            a: self.a + i64::from(by),
            k: self.k,
        }
    }

    /// Exact value at an integer point, as a rational.
    pub fn eval_exact(&self, y: i64) -> Rational {
        gen_binomial(&rat(self.a + y, 2), self.k)
    }
}

/// Truncated fermionic sum `sum_{y < p^N} f(y) (-1)^y` reduced mod `p^M`,
/// with `(a + y)/2` realized as `(a + y) * inverse(2)` at working precision.
pub fn fermionic_truncated_sum(
    f: &HalfBinomialSpec,
    p: u32,
    n_trunc: u32,
    precision: u32,
) -> Result<PadicInt, PadicError> {
    assert!(n_trunc >= 1, "truncation exponent must be at least 1");
    let evaluator = BinomialEvaluator::new(f.k, p, precision)?;
    let bound = u64::from(p)
        .checked_pow(n_trunc)
        .expect("truncation bound p^N exceeds u64");
    let inv2 = mod_inverse(&BigInt::from(2), &evaluator.working_mod)
        .expect("2 is a unit for odd p");
    // z walks through (a + y) * inv2 mod p^(M+v) incrementally.
    let mut z = (BigInt::from(f.a) * &inv2).mod_floor(&evaluator.working_mod);
    let mut acc = BigInt::zero();
    for y in 0..bound {
        let term = evaluator.eval(&z)?;
        if y % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        z += &inv2;
        if z >= evaluator.working_mod {
            z -= &evaluator.working_mod;
        }
    }
    PadicInt::new(p, precision, &acc)
}

/// One adaptive convergence run: truncation exponents `N = 2 ..= n_cap`,
/// stopping at the first pair of successive truncations that both agree with
/// the target mod `p^M`.
#[derive(Clone, Debug)]
pub struct ConvergenceRun {
    /// `v_p(sum_N - target)` capped at `M`, indexed from `N = 2`.
    pub valuations: Vec<u32>,
    pub converged_at: Option<u32>,
    /// Valuations never decrease from the first truncation that agrees with
    /// the target mod `p` onwards.
    pub monotone_tail: bool,
    pub last_sum: PadicInt,
}

fn run_to_convergence(
    mut eval: impl FnMut(u32) -> Result<PadicInt, PadicError>,
    target: &PadicInt,
    n_cap: u32,
) -> Result<ConvergenceRun, PadicError> {
    assert!(n_cap >= 2, "need at least two truncations");
    let precision = target.precision();
    let mut valuations = Vec::new();
    let mut converged_at = None;
    let mut last_sum = None;
    for n in 2..=n_cap {
        let sum = eval(n)?;
        valuations.push(sum.diff_valuation(target));
        last_sum = Some(sum);
        let len = valuations.len();
        if len >= 2 && valuations[len - 1] == precision && valuations[len - 2] == precision {
            converged_at = Some(n);
            break;
        }
    }
    let tail_start = valuations.iter().position(|&v| v >= 1);
    let monotone_tail = match tail_start {
        Some(start) => valuations[start..].windows(2).all(|w| w[0] <= w[1]),
        None => true,
    };
    Ok(ConvergenceRun {
        valuations,
        converged_at,
        monotone_tail,
        last_sum: last_sum.expect("at least one truncation"),
    })
}

fn convergence_outcome(run: &ConvergenceRun, target: &PadicInt, n_cap: u32) -> Outcome {
    if run.converged_at.is_some() && run.monotone_tail {
        return Outcome::Pass;
    }
    let witness = Witness::values(run.last_sum.residue(), target.residue());
    let detail = if run.converged_at.is_none() {
        format!(
            "did not converge within N_cap={n_cap}; error valuations {:?}",
            run.valuations
        )
    } else {
        format!(
            "error valuation sequence decreased after first agreement mod p: {:?}",
            run.valuations
        )
    };
    Outcome::Fail(witness.with_detail(detail))
}

pub fn default_n_cap(p: u32) -> u32 {
    match p {
        3 => 12,
        5 => 8,
        _ => 6,
    }
}

/// Checks that the truncated fermionic sums of `binomial((x + y)/2, n)`
/// converge to `(-1)^n / 4^n * C_n(x)` mod `p^M` for every `n <= n_max` and
/// `x` in `x_list`. Cells whose target cannot be reduced mod `p^M` are
/// skipped with a note.
pub fn verify_catalan_integral(
    p: u32,
    n_max: u32,
    x_list: &[i64],
    precision: u32,
    n_cap: u32,
) -> Result<VerificationReport, PadicError> {
    check_prime(p)?;
    let polys = w_catalan_series(1, n_max as usize + 1);
    let mut report = VerificationReport::new(IdentityId::PadicCatalan);
    for n in 0..=n_max {
        for &x in x_list {
            let params = vec![("p", i64::from(p)), ("n", i64::from(n)), ("x", x)];
            let target_rat = pow_rat(&rat(-1, 4), n)
                * polys.coeff(n as usize).eval(&Rational::from_integer(BigInt::from(x)));
            let outcome = match PadicInt::from_rational(&target_rat, p, precision) {
                Err(PadicError::NonUnit { .. }) => Outcome::Skip(format!(
                    "target {target_rat} has denominator divisible by {p}"
                )),
                Err(other) => return Err(other),
                Ok(target) => {
                    let spec = HalfBinomialSpec::new(x, n);
                    let run = run_to_convergence(
                        |trunc| fermionic_truncated_sum(&spec, p, trunc, precision),
                        &target,
                        n_cap,
                    )?;
                    convergence_outcome(&run, &target, n_cap)
                }
            };
            report.push(params, outcome);
        }
    }
    Ok(report)
}

/// Checks the odd-shift identity
/// `I[f(. + n)] + I[f] = 2 sum_{l<n} (-1)^(n-1-l) f(l)` mod `p^M`, with both
/// integrals computed by truncated sums and the right side exactly.
pub fn verify_shift_identity(
    p: u32,
    specs: &[HalfBinomialSpec],
    shifts: &[u32],
    precision: u32,
    n_cap: u32,
) -> Result<VerificationReport, PadicError> {
    check_prime(p)?;
    shifts
        .iter()
        .try_for_each(|&s| require_odd("shift", s))
        .map_err(PadicError::from)?;
    let mut report = VerificationReport::new(IdentityId::PadicShift);
    for spec in specs {
        for &shift in shifts {
            let params = vec![
                ("p", i64::from(p)),
                ("a", spec.a),
                ("k", i64::from(spec.k)),
                ("shift", i64::from(shift)),
            ];
            // Odd shift makes (-1)^(n-1-l) = (-1)^l.
            let mut rhs = Rational::zero();
            for l in 0..i64::from(shift) {
                let term = spec.eval_exact(l);
                if l % 2 == 0 {
                    rhs += term;
                } else {
                    rhs -= term;
                }
            }
            rhs *= rat(2, 1);
            let outcome = match PadicInt::from_rational(&rhs, p, precision) {
                Err(PadicError::NonUnit { .. }) => Outcome::Skip(format!(
                    "target {rhs} has denominator divisible by {p}"
                )),
                Err(other) => return Err(other),
                Ok(target) => {
                    let shifted = spec.shifted(shift);
                    let run = run_to_convergence(
                        |trunc| {
                            let left = fermionic_truncated_sum(&shifted, p, trunc, precision)?;
                            let right = fermionic_truncated_sum(spec, p, trunc, precision)?;
                            Ok(left.add(&right))
                        },
                        &target,
                        n_cap,
                    )?;
                    convergence_outcome(&run, &target, n_cap)
                }
            };
            report.push(params, outcome);
        }
    }
    Ok(report)
}
