//! Self-describing sequences and the Catalan family tree.
//!
//! The domain 𝒜 consists of finite sequences with `0 <= a_i <= i`. The
//! transform δ replaces each term by the number of earlier terms that are
//! strictly smaller; its fixed points are the self-describing sequences,
//! which are exactly the full names of the Catalan family tree and are
//! counted by Catalan numbers. The mirror `μ(a)_i = i - a_i` and `γ = μδ`
//! complete the set of transforms.
//!
//! Modules:
//! - [`sequence`]: the sequence types, δ (quadratic and `O(n log n)`), μ, γ.
//! - [`enumerate`]: lexicographic odometer over a generation of 𝒜.
//! - [`census`]: block-partitioned brute-force counting, parallel with the
//!   `parallel` feature.
//! - [`dynamics`]: orbits, stabilization, fixed and double point censuses.
//! - [`family`]: the Catalan family tree and its name distribution.
//! - [`combinatorics`]: exact Catalan, Fuss-Catalan and ballot counts.
//! - [`bijections`]: unit- and m-increase sequences, ballot words, West
//!   labels.
//! - [`verify`]: the exhaustive invariant suite.

pub mod bijections;
pub mod census;
pub mod combinatorics;
pub mod dynamics;
pub mod enumerate;
mod error;
pub mod family;
mod rank;
pub mod sequence;
pub mod verify;

pub use bijections::{BallotStep, BallotWord, MIncreaseSequence, UnitIncreaseSequence};
pub use census::CensusConfig;
pub use combinatorics::BigCount;
pub use dynamics::{Endomorphism, OrbitTrace};
pub use enumerate::{enumerate_a, Odometer};
pub use error::{Error, Result};
pub use family::{FamilyNode, NameDistribution};
pub use rank::RankCounter;
pub use sequence::{delta, delta_fast, gamma, lex_compare, mu, validate_in_a, RawSequence, Sequence, Term, Terms};
