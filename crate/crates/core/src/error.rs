//! Error type shared by all modules.

use crate::triangles::TriangleKind;

/// Errors reported by the library.
///
/// Enumeration refusals ([`Error::EnumerationCapExceeded`]) are deliberate
/// guards against accidental `2^n`-sized loops and are distinct from plain
/// range errors so callers can map them to a different exit status.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A row index outside `0..=max` for the requested triangle row.
    #[error("index {index} is out of range for the {kind} row n={n}; valid indices are 0..={max}")]
    IndexOutOfRange {
        kind: TriangleKind,
        n: u32,
        index: u64,
        max: u64,
    },

    /// A word ordinal outside `0..2^len`.
    #[error("ordinal {ordinal} is out of range for word length {len}; valid ordinals are 0..2^{len}")]
    OrdinalOutOfRange { len: u32, ordinal: u64 },

    /// A word length beyond the 64-letter representation limit.
    #[error("word length {len} exceeds the supported maximum of {max} letters")]
    WordTooLong { len: u32, max: u32 },

    /// A letter other than `a`/`b` in a parsed word.
    #[error("invalid letter {found:?}; words consist of the letters 'a' and 'b'")]
    InvalidLetter { found: char },

    /// Refusal to enumerate `2^n` words because `n` exceeds the cap.
    #[error("length {n} exceeds the enumeration cap {cap} (2^{n} words); raise the cap to enumerate anyway")]
    EnumerationCapExceeded { n: u32, cap: u32 },

    /// Refusal to materialize a full triangle beyond the configured limit.
    #[error("triangle of {n_max} rows exceeds the materialization limit {limit}; use the row iterator instead")]
    TriangleLimitExceeded { n_max: u32, limit: u32 },
}
