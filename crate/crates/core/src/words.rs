//! Words over the two-letter alphabet `{a, b}` and the table algorithms that
//! turn exhaustive word enumeration into triangle rows.
//!
//! A length-`n` word is the sequence of binary digits of its ordinal `m`
//! (`a` = 0, `b` = 1, most significant letter first), so enumeration in
//! ordinal order reproduces the column order of the tabulated polynomial.
//! Two indices classify a word:
//!
//! - the p-index: the number of `b` letters (plain digit sum),
//! - the q-index: the sum of quasi-binary weights `l = n - k + 1` over the
//!   `b` letters at 1-based positions `k` (digit positions grow from the last
//!   letter upward).
//!
//! Tallying either index over all `2^n` words yields, entry for entry, the
//! corresponding arithmetic-triangle row.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::Error;
use crate::triangles::{Row, TriangleKind};

/// Longest representable word; ordinals are stored as `u64` bit sets.
pub const MAX_WORD_LEN: u32 = 64;

/// Default refusal threshold for the exhaustive `2^n` enumerations.
/// At the cap, a full sweep stays in the tens of millions of words.
pub const DEFAULT_ENUMERATION_CAP: u32 = 26;

/// Enumerations iterate a `u64` ordinal range, so lengths beyond 63 are
/// refused regardless of the configured cap.
const HARD_ENUMERATION_LIMIT: u32 = 63;

/// One letter of a word. `a` deflects left, `b` right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "a",
            Letter::B => "b",
        })
    }
}

/// Which index function classifies words: plain digit sums (`P`, linear) or
/// quasi-binary weighted sums (`Q`, nonlinear).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    P,
    Q,
}

impl IndexKind {
    /// The triangle whose rows this index reproduces.
    pub fn triangle_kind(self) -> TriangleKind {
        match self {
            IndexKind::P => TriangleKind::Linear,
            IndexKind::Q => TriangleKind::Nonlinear,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::P => "p",
            IndexKind::Q => "q",
        })
    }
}

/// A length-`n` word over `{a, b}`, stored as its ordinal's bit pattern.
///
/// The letter at 0-based position `i` (counting from the first letter) is
/// bit `n - 1 - i` of the ordinal, so the letters are exactly the `n`-digit
/// binary expansion of the ordinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u32,
    bits: u64,
}

/// Word with the letters given by the `len`-digit binary expansion of `m`.
pub fn word_from_ordinal(len: u32, m: u64) -> Result<Word, Error> {
    if len > MAX_WORD_LEN {
        return Err(Error::WordTooLong {
            len,
            max: MAX_WORD_LEN,
        });
    }
    if len < 64 && m >> len != 0 {
        return Err(Error::OrdinalOutOfRange { len, ordinal: m });
    }
    Ok(Word { len, bits: m })
}

impl Word {
    /// Builds a word from explicit letters, first letter first.
    pub fn from_letters(letters: &[Letter]) -> Result<Word, Error> {
        if letters.len() as u64 > u64::from(MAX_WORD_LEN) {
            return Err(Error::WordTooLong {
                len: letters.len() as u32,
                max: MAX_WORD_LEN,
            });
        }
        let mut bits = 0u64;
        for &letter in letters {
            bits = (bits << 1) | u64::from(letter == Letter::B);
        }
        Ok(Word {
            len: letters.len() as u32,
            bits,
        })
    }

    /// Number of letters.
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Ordinal `m`: the word read as a binary number, `a` = 0, `b` = 1.
    pub fn ordinal(&self) -> u64 {
        self.bits
    }

    /// Letter at 0-based position `i` from the first letter.
    pub fn letter_at(&self, i: u32) -> Letter {
        assert!(i < self.len, "letter position {i} out of range");
        if self.bits >> (self.len - 1 - i) & 1 == 1 {
            Letter::B
        } else {
            Letter::A
        }
    }

    /// Letters in order, first letter first.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len).map(|i| self.letter_at(i))
    }

    /// Number of `b` letters (the plain digit sum of the binary record).
    pub fn p_index(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Quasi-binary weighted sum: each `b` at 1-based position `k`
    /// contributes `len - k + 1`.
    pub fn q_index(&self) -> u64 {
        // the letter at position k sits at bit len-k, whose weight is bit+1
        let mut q = 0u64;
        let mut bits = self.bits;
        while bits != 0 {
            q += u64::from(bits.trailing_zeros()) + 1;
            bits &= bits - 1;
        }
        q
    }

    /// Word with every letter swapped `a` <-> `b`.
    pub fn complement(&self) -> Word {
        Word {
            len: self.len,
            bits: !self.bits & mask(self.len),
        }
    }

    /// Word with the letter order reversed.
    pub fn reversed(&self) -> Word {
        let bits = if self.len == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - self.len)
        };
        Word {
            len: self.len,
            bits,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in self.letters() {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        let letters = s
            .chars()
            .map(|c| match c.to_ascii_lowercase() {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(Error::InvalidLetter { found: other }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::from_letters(&letters)
    }
}

fn mask(len: u32) -> u64 {
    match len {
        0 => 0,
        64 => u64::MAX,
        _ => (1u64 << len) - 1,
    }
}

pub(crate) fn check_cap(n: u32, cap: u32) -> Result<(), Error> {
    let effective = cap.min(HARD_ENUMERATION_LIMIT);
    if n > effective {
        return Err(Error::EnumerationCapExceeded { n, cap: effective });
    }
    Ok(())
}

/// Exhaustive tally of the chosen index over all `2^n` words, under
/// [`DEFAULT_ENUMERATION_CAP`].
///
/// The result is a triangle [`Row`] (linear for `P`, nonlinear for `Q`) and
/// equals the recurrence-built row entry for entry.
pub fn histogram(n: u32, kind: IndexKind) -> Result<Row, Error> {
    histogram_with_cap(n, kind, DEFAULT_ENUMERATION_CAP)
}

/// [`histogram`] with an explicit enumeration cap.
pub fn histogram_with_cap(n: u32, kind: IndexKind, cap: u32) -> Result<Row, Error> {
    check_cap(n, cap)?;
    let triangle_kind = kind.triangle_kind();
    let mut tally = vec![0u64; triangle_kind.row_len(n) as usize];

    // Gray-code sweep: consecutive visited words differ in a single letter,
    // so the class index updates in O(1) per word. Every ordinal in 0..2^n
    // is visited exactly once, which is all a tally needs.
    let mut index = 0u64;
    tally[0] += 1;
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros();
        let now_set = (step ^ (step >> 1)) >> bit & 1 == 1;
        let weight = match kind {
            IndexKind::P => 1,
            IndexKind::Q => u64::from(bit) + 1,
        };
        if now_set {
            index += weight;
        } else {
            index -= weight;
        }
        tally[index as usize] += 1;
    }

    let coeffs = tally.into_iter().map(BigUint::from).collect();
    Ok(Row::from_coeffs(triangle_kind, n, coeffs))
}

/// One similarity class of a grouped expression: the words sharing an index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpressionClass {
    /// The shared p- or q-index.
    pub index: u64,
    /// Number of member words; the class's coefficient in the expression.
    pub multiplicity: u64,
    /// Member words in ordinal order.
    pub words: Vec<Word>,
}

/// The terms of `(a+b)^n` under noncommutative multiplication, grouped into
/// similarity classes by p- or q-index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupedExpression {
    pub n: u32,
    pub kind: IndexKind,
    /// Classes in increasing index order, one per valid index.
    pub classes: Vec<ExpressionClass>,
}

/// Partitions all `2^n` words into classes of equal p- or q-index, under
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn grouped_expression(n: u32, kind: IndexKind) -> Result<GroupedExpression, Error> {
    grouped_expression_with_cap(n, kind, DEFAULT_ENUMERATION_CAP)
}

/// [`grouped_expression`] with an explicit enumeration cap.
pub fn grouped_expression_with_cap(
    n: u32,
    kind: IndexKind,
    cap: u32,
) -> Result<GroupedExpression, Error> {
    check_cap(n, cap)?;
    let len = kind.triangle_kind().row_len(n) as usize;
    let mut members: Vec<Vec<Word>> = vec![Vec::new(); len];
    for m in 0..(1u64 << n) {
        let word = Word { len: n, bits: m };
        let index = match kind {
            IndexKind::P => u64::from(word.p_index()),
            IndexKind::Q => word.q_index(),
        };
        members[index as usize].push(word);
    }
    let classes = members
        .into_iter()
        .enumerate()
        .map(|(index, words)| ExpressionClass {
            index: index as u64,
            multiplicity: words.len() as u64,
            words,
        })
        .collect();
    Ok(GroupedExpression { n, kind, classes })
}
