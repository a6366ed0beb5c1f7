//! Rows of the linear (Pascal) and nonlinear arithmetic triangles.
//!
//! Both triangles are generated row by row from their two-term recurrences,
//! with out-of-range terms taken as zero:
//!
//! - linear: `C(n,p) = C(n-1,p-1) + C(n-1,p)`, row length `n + 1`
//! - nonlinear: `[n,q] = [n-1,q] + [n-1,q-n]`, row length `n(n+1)/2 + 1`
//!
//! The nonlinear entry `[n,q]` equals the number of subsets of `{1..n}` with
//! element sum `q`, i.e. partitions of `q` into distinct parts from `{1..n}`.
//! All coefficients are exact [`BigUint`] values; a row sum is exactly `2^n`.
//! Row numbering is zero-based: row 0 is `[1]` for both kinds.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// Default cap for [`triangle`], the full-triangle materialization wrapper.
pub const DEFAULT_TRIANGLE_LIMIT: u32 = 64;

/// Which of the two arithmetic triangles a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// The Pascal triangle; rows are indexed by `p`, `0 <= p <= n`.
    Linear,
    /// The subset-sum triangle; rows are indexed by `q`, `0 <= q <= n(n+1)/2`.
    Nonlinear,
}

impl TriangleKind {
    /// Largest valid index of row `n`: `n` for linear, `n(n+1)/2` for nonlinear.
    pub fn max_index(self, n: u32) -> u64 {
        let n = u64::from(n);
        match self {
            TriangleKind::Linear => n,
            TriangleKind::Nonlinear => n * (n + 1) / 2,
        }
    }

    /// Number of entries in row `n`.
    pub fn row_len(self, n: u32) -> u64 {
        self.max_index(n) + 1
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleKind::Linear => f.write_str("linear"),
            TriangleKind::Nonlinear => f.write_str("nonlinear"),
        }
    }
}

/// One row of an arithmetic triangle: exact nonnegative coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    kind: TriangleKind,
    n: u32,
    coeffs: Vec<BigUint>,
}

impl Row {
    /// Internal constructor; callers must supply a full, valid row.
    pub(crate) fn from_coeffs(kind: TriangleKind, n: u32, coeffs: Vec<BigUint>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, kind.row_len(n));
        Row { kind, n, coeffs }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Row index `n` (equivalently the binomial power).
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // every row holds at least the single entry of row 0
    }

    /// Largest valid index, `len() - 1`.
    pub fn last_index(&self) -> u64 {
        (self.coeffs.len() - 1) as u64
    }

    pub fn get(&self, index: u64) -> Option<&BigUint> {
        self.coeffs.get(usize::try_from(index).ok()?)
    }

    /// Exact sum of the coefficients; equals `2^n`.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

/// Advances `coeffs` from linear row `k-1` to row `k` in place.
fn step_linear(coeffs: &mut Vec<BigUint>) {
    coeffs.push(BigUint::one());
    // right-to-left so each source entry is still the previous row's value
    for i in (1..coeffs.len() - 1).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] += &lo[i - 1];
    }
}

/// Advances `coeffs` from nonlinear row `k-1` to row `k` in place.
fn step_nonlinear(coeffs: &mut Vec<BigUint>, k: u32) {
    let k = k as usize;
    coeffs.resize(coeffs.len() + k, BigUint::ZERO);
    for q in (k..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(q);
        hi[0] += &lo[q - k];
    }
}

fn build_row(kind: TriangleKind, n: u32) -> Vec<BigUint> {
    let mut coeffs = Vec::with_capacity(kind.row_len(n) as usize);
    coeffs.push(BigUint::one());
    for k in 1..=n {
        match kind {
            TriangleKind::Linear => step_linear(&mut coeffs),
            TriangleKind::Nonlinear => step_nonlinear(&mut coeffs, k),
        }
    }
    coeffs
}

/// Row `n` of the Pascal triangle: `[C(n,0), ..., C(n,n)]`.
pub fn pascal_row(n: u32) -> Row {
    Row::from_coeffs(TriangleKind::Linear, n, build_row(TriangleKind::Linear, n))
}

/// Row `n` of the nonlinear triangle: entry `q` counts the subsets of
/// `{1..n}` with element sum `q`.
pub fn nonlinear_row(n: u32) -> Row {
    Row::from_coeffs(
        TriangleKind::Nonlinear,
        n,
        build_row(TriangleKind::Nonlinear, n),
    )
}

/// Builds row `n` of the given kind.
pub fn row(kind: TriangleKind, n: u32) -> Row {
    match kind {
        TriangleKind::Linear => pascal_row(n),
        TriangleKind::Nonlinear => nonlinear_row(n),
    }
}

/// Single coefficient `C(n,index)` or `[n,index]`.
///
/// # Errors
///
/// [`Error::IndexOutOfRange`] if `index` exceeds the row's valid interval,
/// naming that interval.
pub fn coefficient(kind: TriangleKind, n: u32, index: u64) -> Result<BigUint, Error> {
    let max = kind.max_index(n);
    if index > max {
        return Err(Error::IndexOutOfRange { kind, n, index, max });
    }
    Ok(row(kind, n).coeffs[index as usize].clone())
}

/// Iterator over rows `0..=n_max`, each computed from its predecessor only.
pub fn rows(kind: TriangleKind, n_max: u32) -> Rows {
    Rows {
        kind,
        n_max,
        next_n: 0,
        coeffs: Vec::new(),
    }
}

/// See [`rows`].
#[derive(Debug, Clone)]
pub struct Rows {
    kind: TriangleKind,
    n_max: u32,
    next_n: u32,
    coeffs: Vec<BigUint>,
}

impl Iterator for Rows {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        if self.next_n > self.n_max {
            return None;
        }
        if self.next_n == 0 {
            self.coeffs.push(BigUint::one());
        } else {
            match self.kind {
                TriangleKind::Linear => step_linear(&mut self.coeffs),
                TriangleKind::Nonlinear => step_nonlinear(&mut self.coeffs, self.next_n),
            }
        }
        let row = Row::from_coeffs(self.kind, self.next_n, self.coeffs.clone());
        self.next_n += 1;
        Some(row)
    }
}

/// Materializes rows `0..=n_max` under [`DEFAULT_TRIANGLE_LIMIT`].
pub fn triangle(kind: TriangleKind, n_max: u32) -> Result<Vec<Row>, Error> {
    triangle_with_limit(kind, n_max, DEFAULT_TRIANGLE_LIMIT)
}

/// Materializes rows `0..=n_max`, refusing if `n_max` exceeds `limit`.
///
/// Full materialization of the nonlinear triangle is quadratic in memory;
/// prefer [`rows`] for large sweeps.
pub fn triangle_with_limit(kind: TriangleKind, n_max: u32, limit: u32) -> Result<Vec<Row>, Error> {
    if n_max > limit {
        return Err(Error::TriangleLimitExceeded { n_max, limit });
    }
    Ok(rows(kind, n_max).collect())
}
