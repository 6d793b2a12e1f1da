//! Command-line interface definition.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cosetforge_core::{TieBreak, WeightCompatibleOrder};

/// Coset leaders, leader-codeword test sets, and complete decoding for
/// binary linear codes given by a parity-check matrix.
#[derive(Parser, Debug)]
#[command(name = "cosetforge", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Weight-compatible order driving listings and representatives.
    #[arg(long, global = true, value_enum, default_value_t = OrderChoice::Degrevlex)]
    pub order: OrderChoice,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Abort instead of enumerating codes with more cosets than this.
    #[arg(long, global = true, value_name = "N")]
    pub max_cosets: Option<u64>,

    /// Write the parsed (row-reduced) parity-check matrix to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub dump_matrix: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every coset with its representative and complete leader set.
    CosetLeaders {
        /// Parity-check matrix file: `n m`, then `m` rows of `n` 0/1 digits.
        matrix: PathBuf,
        #[command(flatten)]
        opts: CosetLeadersOpts,
    },
    /// Compute the leader codewords L(C) and the subset L1(C).
    LeaderCodewords {
        matrix: PathBuf,
        #[command(flatten)]
        opts: LeaderCodewordsOpts,
    },
    /// Decode a received word to a nearest codeword.
    Decode {
        matrix: PathBuf,
        #[command(flatten)]
        opts: DecodeOpts,
    },
    /// Summarize code parameters and coset-leader statistics.
    Stats { matrix: PathBuf },
    /// Re-derive everything by brute force and compare with the engine.
    OracleCheck {
        matrix: PathBuf,
        #[command(flatten)]
        opts: OracleCheckOpts,
    },
    /// Run any subcommand on a built-in code instead of a matrix file.
    Builtin {
        /// One of: example1, hamming7, rep3, golay23, bch21.
        name: String,
        #[command(subcommand)]
        action: Action,
    },
}

/// The per-command options, reused verbatim under `builtin <name> …`.
#[derive(Subcommand, Debug)]
pub enum Action {
    /// List every coset with its representative and complete leader set.
    CosetLeaders(CosetLeadersOpts),
    /// Compute the leader codewords L(C) and the subset L1(C).
    LeaderCodewords(LeaderCodewordsOpts),
    /// Decode a received word to a nearest codeword.
    Decode(DecodeOpts),
    /// Summarize code parameters and coset-leader statistics.
    Stats,
    /// Re-derive everything by brute force and compare with the engine.
    OracleCheck(OracleCheckOpts),
}

#[derive(Args, Debug, Default)]
pub struct CosetLeadersOpts {
    /// Append the summary statistics block to the text listing.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Args, Debug, Default)]
pub struct LeaderCodewordsOpts {
    /// List only the words of the L1(C) subset.
    #[arg(long)]
    pub l1_only: bool,
}

#[derive(Args, Debug)]
pub struct DecodeOpts {
    /// Received word as a 0/1 string, leftmost digit = coordinate 1.
    #[arg(long, value_name = "BITS")]
    pub word: String,

    /// `table` corrects by the coset representative; `testset` runs gradient
    /// descent over L1(C).
    #[arg(long, value_enum, default_value_t = DecodeMode::Table)]
    pub mode: DecodeMode,

    /// Also list every coset leader of the received word (all nearest
    /// decodings).
    #[arg(long)]
    pub all_nearest: bool,
}

#[derive(Args, Debug)]
pub struct OracleCheckOpts {
    /// Which verification suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,

    /// Seed for the sampled decode checks on codes too large to scan.
    #[arg(long, default_value_t = 0x5EED_C0DE)]
    pub seed: u64,

    /// Override the brute-force size guards (max block length for full
    /// 2^n scans).
    #[arg(long, value_name = "N")]
    pub max_oracle_n: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderChoice {
    Degrevlex,
    Lex,
}

impl OrderChoice {
    /// The order object for a code of length `n`.
    #[must_use]
    pub fn build(self, n: u32) -> WeightCompatibleOrder {
        match self {
            OrderChoice::Degrevlex => WeightCompatibleOrder::new(n, TieBreak::DegRevLex),
            OrderChoice::Lex => WeightCompatibleOrder::new(n, TieBreak::Lex),
        }
    }

    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            OrderChoice::Degrevlex => "degrevlex",
            OrderChoice::Lex => "lex",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecodeMode {
    Table,
    Testset,
}

impl DecodeMode {
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            DecodeMode::Table => "table",
            DecodeMode::Testset => "testset",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    /// Coset-leader partition vs two independent brute-force scans.
    Leaders,
    /// Leader codewords vs the brute-force rewriting scan; test-set property.
    Testset,
    /// Voronoi-geometry characterization of the leader codewords.
    Zeroneighbours,
    /// Decoding distance vs exhaustive nearest-codeword search.
    Decode,
    /// Every suite above.
    All,
}
