//! Exact-arithmetic verification engine for supercongruences of Franel
//! numbers f_n = sum_k C(n,k)^3.
//!
//! Everything is computed as an exact rational first and reduced modulo p^k
//! last; a congruence check compares canonical residues in [0, p^k). The
//! crate provides:
//!
//! - exact rationals with p-adic reduction ([`rational`], [`padic`]),
//! - special sequences: Franel numbers, Bernoulli/Euler numbers ([`sequences`]),
//! - the p-adic Gamma function and its identities ([`gammap`]),
//! - prime representation p = x^2 + 3y^2 ([`quadform`]),
//! - an exact combinatorial-identity registry ([`identities`]),
//! - the congruence check registry and prime-sweep engine ([`checks`], [`sweep`]).

pub mod arith;
pub mod checks;
pub mod comb;
pub mod error;
pub mod gammap;
pub mod identities;
pub mod padic;
pub mod primes;
pub mod quadform;
pub mod rational;
pub mod rng;
pub mod sequences;
pub mod sweep;

pub use error::Error;
pub use padic::{congruent, reduce_mod_pk, PadicResidue, Valuation};
pub use quadform::PrimeRepresentation;
pub use rational::ExactRational;
pub use sequences::SequenceCache;
