//! Exact-arithmetic tools for set-intersecting families of permutations.
//!
//! A family in S_n is t-set-intersecting if any two of its members map
//! some t-subset to the same image set; equivalently it is an independent
//! set in the Cayley graph generated by the t-derangements (permutations
//! fixing no t-set). This crate reconstructs the spectral machinery that
//! bounds such families — symmetric-group characters, eigenvalues of
//! normal Cayley graphs, a weighted pseudoadjacency matrix whose
//! Hoffman/Delsarte bound collapses to t!(n-t)! — together with
//! brute-force search, conflict-witness constructions and counting
//! recurrences that verify the extremal picture on small symmetric groups.
//!
//! All algebra is exact (big integers and big rationals); floating point
//! is never used.

pub mod arith;
pub mod characters;
pub mod counting;
pub mod error;
pub mod family;
pub mod json;
pub mod partition;
pub mod permutation;
pub mod search;
pub mod selfcheck;
pub mod spanrank;
pub mod spectral;
pub mod tableaux;
pub mod weights;
pub mod witness;

pub use error::{Error, Result};
pub use family::{Family, TCoset, TSetCoset};
pub use partition::{classify, fat_partitions, partitions_of, Partition, PartitionClass, PartitionKind};
pub use permutation::{is_t_derangement, Permutation};
pub use spectral::{ClassFunction, Spectrum};
pub use weights::WeightReport;
