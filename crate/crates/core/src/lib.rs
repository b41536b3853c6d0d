//! Exact-arithmetic engine for Catalan and w-Catalan polynomials: builds them
//! from their generating functions over `Q[x]`, computes the auxiliary sums
//! and series the symmetric identities involve, and verifies every identity
//! both coefficient-exactly and through a truncated p-adic oracle.

pub mod arith;
pub mod catalan;
pub mod defaults;
pub mod identity;
pub mod padic;
pub mod poly;
pub mod report;
pub mod series;

pub use arith::Rational;
pub use poly::Poly;
pub use report::{IdentityId, Outcome, VerificationReport};
pub use series::Series;
