//! satd-core: domain model and algorithms for mining self-admitted technical
//! debt across repository artifacts.
//!
//! This crate holds everything that does not touch the filesystem, the
//! network, or a git binary: artifact types and identifiers, the comment
//! lexer, comment lifecycle tracking, the cross-artifact linkage graph,
//! keyword/lexicon labeling, priority heuristics, chain enumeration, and the
//! rank statistics behind the reports. IO, caching, and orchestration live in
//! the companion `satd-atlas` crate.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is on
//! by default. Transcendental float math goes through `libm` so results are
//! identical with and without `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod comment;
pub mod detect;
pub mod lifecycle;
pub mod linkage;
pub mod model;
pub mod priority;
pub mod propagation;
pub mod report;
pub mod stats;

pub use model::{Artifact, ArtifactKind, RepoRef, SatdClass, SatdLabel, SentimentLabel};
