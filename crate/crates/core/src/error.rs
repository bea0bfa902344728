//! Error taxonomy shared across the crate.

/// Every failure mode a caller can act on. Congruence-side evaluation treats
/// NonIntegral as a check failure (not a crash); the CLI maps the rest to
/// usage errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A rational with p in its denominator was reduced mod a power of p.
    #[error("value is not a {p}-adic integer (denominator divisible by {p})")]
    NonIntegral { p: u64 },

    /// Fermat quotient base divisible by the prime.
    #[error("base {a} is divisible by p = {p}")]
    BaseDivisible { a: i64, p: u64 },

    /// p = x^2 + 3y^2 has no solution (p = 2 mod 3, or p in {2, 3}).
    #[error("p = {p} is not representable as x^2 + 3y^2")]
    NotRepresentable { p: u64 },

    /// A check was invoked on a prime outside its applicability predicate.
    #[error("check {check} is not applicable at p = {p} (requires {requires})")]
    NotApplicable { check: String, p: u64, requires: &'static str },

    /// Unknown check id passed to run/sweep.
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    /// Unknown identity id.
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    /// A sample point for a rational-function identity hit a pole.
    #[error("sample point hits a pole of the identity")]
    PoleSample,

    /// Identity parameters outside the documented grid.
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
}
