//! Tournament equilibrium set (TEQ) computation and TEQ-retentive sets.
//!
//! Alternatives are 0-based indices into a [`Tournament`] of order at most
//! 64, and sets of alternatives are single-word [`AltSet`] bit vectors.
//! Human-facing output (the `Display` impls and the CLI) is 1-based.
//!
//! - [`teq`]: TEQ, retentiveness, minimal retentive sets, a brute-force oracle.
//! - [`counterexample`]: a 24-alternative tournament with two disjoint
//!   TEQ-retentive sets, and a verifier for its claimed properties.
//! - [`search`]: seeded sampling for tournaments with several minimal
//!   retentive sets.

pub mod altset;
pub mod counterexample;
pub mod error;
pub mod iso;
pub mod search;
pub mod teq;
pub mod tournament;

pub use altset::{AltSet, MAX_ORDER};
pub use counterexample::{build_counterexample, verify_claims, CounterexampleInstance, VerificationReport};
pub use error::{ParseError, TeqError, TournamentError};
pub use iso::{find_isomorphism, IsoMapping};
pub use search::{compose_structured, search_random, SearchConfig, SearchMode, SearchReport};
pub use teq::{minimal_retentive_sets, teq, teq_bruteforce, RelationGraph, TeqCache};
pub use tournament::{Restriction, Tournament};
