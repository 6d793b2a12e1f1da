//! Coset-leader structure of binary linear codes.
//!
//! Given a parity-check matrix, this crate computes the complete set of coset
//! leaders `CL(C)`, the coset table with its `Matphi` reduction structure,
//! the leader codewords `L(C)` and their canonical subset `L1(C)`, and the
//! derived code parameters (weight distribution of coset leaders, covering
//! radius, Newton radius). On top of those it implements complete minimum-
//! distance decoding by gradient descent over a test set.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required). Everything
//! IO-flavoured lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod code;
pub mod codes;
pub mod cosets;
pub mod decode;
pub mod error;
pub mod leader_codewords;
pub mod matrix;
pub mod oracle;
pub mod order;
pub mod word;

pub use code::LinearCode;
pub use cosets::{compute_coset_table, CosetRecord, CosetTable, Matphi};
pub use decode::{DecodeResult, Decoder};
pub use error::{Error, Result};
pub use leader_codewords::{compute_leader_codewords, LeaderCodeword, LeaderCodewordSet};
pub use matrix::BinaryMatrix;
pub use order::{SortKey, TieBreak, WeightCompatibleOrder};
pub use word::Word;
