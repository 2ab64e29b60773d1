//! Vertex labelings of graphs where edge label differences are primes,
//! prime powers, or products of few primes.
//!
//! The crate is organized around three kinds of instruments:
//!
//! * **Constructors** ([`constructors`]) build labelings for graph families
//!   where an explicit construction is known (complete graphs, complete
//!   multipartite graphs via prime arithmetic progressions, cycles,
//!   outerplanar graphs of large girth). Every constructor re-verifies its
//!   own output before returning it.
//! * **Verifiers** ([`labeling`]) check a labeling against one of the three
//!   distance predicates and report every violation.
//! * **Bounded searches** ([`search`]) exhaustively explore labelings with
//!   labels confined to `[-B, B]`, providing certificates when labelings
//!   exist and bounded-nonexistence evidence when they do not. A bounded
//!   `exhausted` outcome is always evidence relative to the bound, never a
//!   proof.
//!
//! Supporting modules: [`ntheory`] (primality, factor counting, twin primes,
//! prime arithmetic progressions), [`graph`] (graph type, generators, girth,
//! chromatic number, block-cutpoint tree, weak dual of outerplanar blocks),
//! [`fixtures`] (small canonical labelings used throughout the test suite),
//! and [`corpus`] (deterministic generation of outerplanar test graphs).

pub mod constructors;
pub mod corpus;
pub mod fixtures;
pub mod graph;
pub mod labeling;
pub mod ntheory;
pub mod search;

pub use graph::{Graph, Partition};
pub use labeling::{GapRule, Labeling, VerificationReport};
pub use ntheory::{PrimeAp, PrimePower, TwinPair};
pub use search::{SearchConfig, SearchOutcome, SearchStatus};
