//! Finite partition lattices and the cardinal arithmetic that governs their
//! infinite counterparts.
//!
//! The finite layer represents partitions of `{0..n}` canonically and offers
//! refinement, meet, join and covering, exhaustive enumeration, chain and
//! antichain verification with constructive families, complement search and
//! an orthocomplementation audit. The [`cardinal`] module evaluates the
//! corresponding transfinite statements symbolically.

pub mod antichains;
pub mod cardinal;
pub mod chains;
pub mod complements;
pub mod counting;
pub mod error;
pub mod lattice;
pub mod ortho;
pub mod partition;
pub mod set;
pub mod unionfind;

pub use antichains::{Antichain, AntichainReport, AntichainWitness};
pub use cardinal::{CardValue, Cardinal, ContinuumModel, Ordinal, PartitionShape};
pub use chains::{keyframe_chain, Chain, ChainReport, ChainWitness, KeyframePlan};
pub use complements::{grieser_count, is_complement, CensusRow, TransversalChoice};
pub use counting::CountScalar;
pub use error::{Error, Result};
pub use lattice::{atoms, coatoms, LatticeUniverse, RgsPartitions};
pub use ortho::{check_ortho_map, non_ortho_witness, search_orthocomplementation, OrthoAxiom, OrthoMap, OrthoReport};
pub use partition::{GroundSet, LabelVector, Partition};
pub use set::ElementSet;

/// Default count scalar for enumeration-sized quantities.
pub type Count = u64;
/// Count scalar for quantities that outgrow 64 bits (for example `2^(n−1)` at `n = 100`).
pub type WideCount = u128;

/// Census row with the default count scalar.
pub type ComplementCensusRow = CensusRow<Count>;
