//! Verification reports: one cell per parameter tuple, deterministic order,
//! with a minimal witness (the two sides and the lowest differing coefficient
//! index) for every failing cell.

use std::fmt;

/// The catalog of verified identities. Each tag maps to exactly one verifier.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityId {
    /// `C_n(d) + C_n = 2^(2n+1) sum_{i<d} binomial(i/2, n) (-1)^(n-i)`.
    Theorem1,
    /// Symmetry of `sum_l (-4)^(n-l) C_{l,w1}(w2 x) S_{n-l,w2}(w1-1)` under
    /// swapping `(w1, w2)`.
    Theorem2,
    /// `C_n(w2 x) = sum_l (-4)^(n-l) C_{l,w2}(x) S_{n-l}(w2-1)`.
    Corollary3,
    /// The numeric (`x = 0`) slice of Theorem 2.
    Corollary4,
    /// Symmetry of the alternating sum
    /// `sum_{l<w1} (-1)^l C_{n,w1}(w2 x + (w2/w1) l)` under swapping.
    Theorem5,
    /// `C_n(w1 x) = sum_{l<w1} (-1)^l C_{n,w1}(x + l/w1)`.
    MultFormula,
    /// The Stirling-expansion route equals the generating-function route.
    StirlingForm,
    /// The generating-function product
    /// `(sum (C_n(d)+C_n) t^n)(sum C_{n,d} t^n) = 2 sum C_n t^n`.
    GfProduct,
    /// Coefficients of the alternating half-power series equal
    /// `S_{k,d}(w-1) (-4)^k`.
    AltSeries,
    /// Three-way agreement of the double-ratio series with its convolution
    /// form and its shifted-argument form.
    DoubleRatio,
    /// Truncated fermionic sums converge to `(-1)^n / 4^n * C_n(x)`.
    PadicCatalan,
    /// Truncated fermionic sums satisfy the odd-shift identity
    /// `I[f(.+n)] + I[f] = 2 sum_{l<n} (-1)^(n-1-l) f(l)`.
    PadicShift,
}

impl IdentityId {
    /// Tags verifiable via `verify --identity <tag>`.
    pub const SYMBOLIC: [IdentityId; 10] = [
        IdentityId::Theorem1,
        IdentityId::Theorem2,
        IdentityId::Corollary3,
        IdentityId::Corollary4,
        IdentityId::Theorem5,
        IdentityId::MultFormula,
        IdentityId::StirlingForm,
        IdentityId::GfProduct,
        IdentityId::AltSeries,
        IdentityId::DoubleRatio,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "thm1",
            IdentityId::Theorem2 => "thm2",
            IdentityId::Corollary3 => "cor3",
            IdentityId::Corollary4 => "cor4",
            IdentityId::Theorem5 => "thm5",
            IdentityId::MultFormula => "mult",
            IdentityId::StirlingForm => "stirling-form",
            IdentityId::GfProduct => "gf-product",
            IdentityId::AltSeries => "alt-series",
            IdentityId::DoubleRatio => "double-ratio",
            IdentityId::PadicCatalan => "padic-catalan",
            IdentityId::PadicShift => "padic-shift",
        }
    }

    pub fn parse(tag: &str) -> Option<IdentityId> {
        IdentityId::SYMBOLIC
            .iter()
            .chain([IdentityId::PadicCatalan, IdentityId::PadicShift].iter())
            .copied()
            .find(|id| id.tag() == tag)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Failure evidence: both sides rendered exactly, plus the lowest differing
/// coefficient index when the sides are polynomials or series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub lhs: String,
    pub rhs: String,
    pub first_diff: Option<usize>,
    pub detail: Option<String>,
}

impl Witness {
    pub fn values(lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            first_diff: None,
            detail: None,
        }
    }

    pub fn with_first_diff(mut self, index: usize) -> Self {
        self.first_diff = Some(index);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    /// Verified nowhere: the cell's closed-form target cannot be reduced at
    /// this precision. Never silent.
    Skip(String),
}

/// One grid cell: the parameter tuple (in declaration order) and its outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cell {
    pub params: Vec<(&'static str, i64)>,
    pub outcome: Outcome,
}

impl Cell {
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "total={} passed={} failed={} skipped={}",
            self.total, self.passed, self.failed, self.skipped
        )
    }
}

/// Deterministic per-identity report: cells appear in the requested grid
/// order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub cells: Vec<Cell>,
}

impl VerificationReport {
    pub fn new(identity: IdentityId) -> Self {
        VerificationReport {
            identity,
            cells: Vec::new(),
        }
    }

    pub fn push(&mut self, params: Vec<(&'static str, i64)>, outcome: Outcome) {
        self.cells.push(Cell { params, outcome });
    }

    pub fn summary(&self) -> Summary {
        let mut summary = Summary {
            total: self.cells.len(),
            ..Summary::default()
        };
        for cell in &self.cells {
            match cell.outcome {
                Outcome::Pass => summary.passed += 1,
                Outcome::Fail(_) => summary.failed += 1,
                Outcome::Skip(_) => summary.skipped += 1,
            }
        }
        summary
    }

    pub fn all_passed(&self) -> bool {
        self.summary().failed == 0
    }
}
