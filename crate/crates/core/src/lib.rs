//! Eight-element tiles of the binary Hamming cube F2^n and their
//! classification up to coordinate permutation.
//!
//! A set `D` of eight vectors is a tile when some `C` makes every vector of
//! F2^n uniquely a sum `d + c`. Up to translation and a change of basis every
//! such tile can be written as the radius-1 ball `{0, e1, .., er}` plus a
//! few extra vectors, where `r` is its rank (3 to 7). This crate
//!
//! - enumerates those normalized tiles from weight conditions
//!   ([`enumerate`]) and, independently, by exact-cover search ([`tiling`]);
//! - computes canonical forms and class partitions under permutations of
//!   coordinates ([`equivalence`], [`permutation`]);
//! - embeds a published labeled listing of the tiles and audits every claim
//!   it makes ([`catalog`], [`report`]);
//! - exposes all of it through a small command line ([`cli`]).
//!
//! Vectors are `u64` bitmasks with coordinate `i` in bit `i - 1`.
//!
//! ```
//! use hamming_tiles::{canonical_form, find_complement, Tile};
//!
//! // ball(4) plus e1+e2, e1+e3, e1+e4
//! let t = Tile::normalized(4, &[0b0011, 0b0101, 0b1001]).unwrap();
//! let cert = find_complement(&t, 4).unwrap().expect("a tile");
//! assert_eq!(cert.complement.len(), 2);
//! let (canon, _) = canonical_form(&t).unwrap();
//! assert!(canon <= t);
//! ```

pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod hamming;
pub mod permutation;
pub mod report;
pub mod text;
pub mod tiling;

pub use catalog::{builtin_catalog, verify_catalog, CatalogEntry, EntryId, VerificationReport};
pub use enumerate::{enumerate_by_cases, enumerate_exhaustive, family_list, FamilySpec};
pub use equivalence::{
    apply_permutation, canonical_form, find_witness, partition_classes, stabilizer_size,
    EquivalenceClass, InvariantSignature,
};
pub use error::{Error, Result};
pub use hamming::{ball, rank, Point, PointSet};
pub use permutation::{format_cycles, parse_cycles, Permutation};
pub use report::export_report;
pub use text::{format_tile, parse_tile};
pub use tiling::{find_complement, verify_tiling, Tile, TilingCertificate};
