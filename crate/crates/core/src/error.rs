use core::fmt;

/// Errors raised by fallible construction, guard, and decoding entry points.
///
/// Arithmetic between words of different lengths is a programming error and
/// panics instead of returning one of these; the panicking operations say so
/// in their docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A bit string was empty or contained a character other than '0'/'1'.
    BitParse { position: usize },
    /// A matrix was built with no rows or no columns.
    EmptyMatrix,
    /// A matrix row had a length different from the first row's.
    RaggedMatrix { row: usize, expected: u32, got: u32 },
    /// The parity-check matrix has rank zero, so the "code" is all of F2^n.
    ZeroRank,
    /// The parity-check matrix has full column rank, so the code is {0}.
    ZeroDimension,
    /// Codeword enumeration was asked for a dimension above the guard.
    EnumerationGuard { k: u32, max: u32 },
    /// Coset enumeration would materialize more than `max_cosets` records.
    CosetBudget { redundancy: u32, max_cosets: u64 },
    /// A brute-force oracle was asked for a length above its guard.
    OracleGuard { n: u32, max: u32 },
    /// The supplied base word is not in the received word's coset.
    NotInCoset,
    /// Gradient descent took more improvement steps than the length allows,
    /// so the supplied collection is not a test set.
    NotATestSet,
    /// The greedy cover ran out of useful regions with frontier words still
    /// uncovered; the candidate set is not a valid cover source.
    CoverageGap,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::BitParse { position } => {
                write!(f, "invalid bit string at position {position}: expected '0' or '1'")
            }
            Error::EmptyMatrix => write!(f, "matrix must have at least one row and one column"),
            Error::RaggedMatrix { row, expected, got } => {
                write!(f, "matrix row {row} has length {got}, expected {expected}")
            }
            Error::ZeroRank => {
                write!(f, "parity-check matrix has rank zero (code would be all of F2^n)")
            }
            Error::ZeroDimension => {
                write!(f, "parity-check matrix has full column rank (code would be {{0}})")
            }
            Error::EnumerationGuard { k, max } => {
                write!(f, "codeword enumeration guard: dimension {k} exceeds limit {max}")
            }
            Error::CosetBudget { redundancy, max_cosets } => write!(
                f,
                "coset enumeration needs 2^{redundancy} records, over the budget of {max_cosets}"
            ),
            Error::OracleGuard { n, max } => {
                write!(f, "brute-force oracle guard: length {n} exceeds limit {max}")
            }
            Error::NotInCoset => write!(f, "base word is not in the received word's coset"),
            Error::NotATestSet => {
                write!(f, "gradient descent failed to terminate: not a test set")
            }
            Error::CoverageGap => {
                write!(f, "greedy cover left frontier words uncovered")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
