//! Exact integer and rational kernels: factorials, binomial coefficients with
//! arbitrary rational tops, signed Stirling numbers of the first kind, and
//! Catalan numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::RwLock;

/// The scalar field for everything symbolic. Always held in canonical form:
/// `gcd(|numerator|, denominator) = 1`, `denominator >= 1`, zero is `0/1`.
/// `num_rational::BigRational` maintains exactly this normal form after every
/// operation, so equality is structural.
pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=u64::from(n)).fold(BigInt::one(), |acc, i| acc * i)
}

/// Classical binomial coefficient for non-negative integer arguments;
/// zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Generalized binomial coefficient `r(r-1)...(r-k+1) / k!` for an arbitrary
/// rational top. `gen_binomial(r, 0) = 1` for every `r`.
pub fn gen_binomial(r: &Rational, k: u32) -> Rational {
    let mut prod = Rational::one();
    for j in 0..k {
        prod *= r - int(i64::from(j));
    }
    prod / Rational::from_integer(factorial(k))
}

/// `binomial(2n, n) / (n+1)`. Integer-valued for every `n`.
pub fn catalan_number(n: u32) -> Rational {
    let top = binomial(2 * u64::from(n), u64::from(n));
    Rational::new(top, BigInt::from(u64::from(n) + 1))
}

/// Triangular table of signed Stirling numbers of the first kind, defined by
/// the falling-factorial expansion `(z)_m = sum_j S1(m, j) z^j`.
///
/// Built once by the row recurrence `S1(m+1, j) = S1(m, j-1) - m * S1(m, j)`;
/// afterwards the table is read-only and safe to share across threads.
#[derive(Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max_m: usize) -> Self {
        let mut table = StirlingTable { rows: Vec::new() };
        table.extend_to(max_m);
        table
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S1(m, j)`; zero when `j > m`. Panics if `m` exceeds the table size.
    pub fn get(&self, m: usize, j: usize) -> BigInt {
        if j > m {
            return BigInt::zero();
        }
        self.rows[m][j].clone()
    }

    fn extend_to(&mut self, max_m: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() <= max_m {
            let m = self.rows.len() - 1;
            let prev = &self.rows[m];
            let mut row = vec![BigInt::zero(); m + 2];
            for j in 0..=m + 1 {
                let carry = if j > 0 { prev[j - 1].clone() } else { BigInt::zero() };
                let scaled = if j <= m { &prev[j] * BigInt::from(m) } else { BigInt::zero() };
                row[j] = carry - scaled;
            }
            self.rows.push(row);
        }
    }
}

static STIRLING_CACHE: RwLock<StirlingTable> = RwLock::new(StirlingTable { rows: Vec::new() });

/// Signed Stirling number of the first kind `S1(m, j)`, served from a shared
/// table that grows on demand. Returns zero for `j > m`.
pub fn stirling1(m: usize, j: usize) -> BigInt {
    if j > m {
        return BigInt::zero();
    }
    {
        let table = STIRLING_CACHE.read().unwrap();
        if table.rows.len() > m {
            return table.get(m, j);
        }
    }
    let mut table = STIRLING_CACHE.write().unwrap();
    table.extend_to(m);
    table.get(m, j)
}
