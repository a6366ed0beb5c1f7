//! Distribution analysis of triangle rows: probabilities, cumulative
//! envelopes, half-mass central intervals, empirical width exponents, and the
//! rescaled comparison of the two triangles' sum envelopes.
//!
//! Everything is computed over exact row coefficients; each reported float is
//! a single correctly rounded conversion of an exact integer ratio with a
//! power-of-two denominator. In particular probabilities are never formed by
//! rounding a coefficient first and dividing afterwards.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::triangles::{self, Row, TriangleKind};

/// Correctly rounded `numer / 2^pow`.
///
/// The denominator is a power of two, so rounding the quotient to nearest
/// (ties to even) amounts to rounding the numerator to 53 significant bits
/// and adjusting the exponent. Callers keep results far from the subnormal
/// range, where this scheme stays exact.
fn pow2_ratio_to_f64(numer: &BigUint, pow: u64) -> f64 {
    if numer.is_zero() {
        return 0.0;
    }
    let bits = numer.bits();
    if bits <= 53 {
        let m: u64 = numer.try_into().expect("fits in 53 bits");
        return (m as f64) * exact_pow2(-(pow as i64));
    }
    let shift = bits - 54;
    let top: u64 = (numer >> shift).try_into().expect("54-bit slice");
    let sticky = numer.trailing_zeros().unwrap_or(0) < shift;
    let mut m = top >> 1;
    if top & 1 == 1 && (sticky || m & 1 == 1) {
        m += 1; // round to nearest, ties to even
    }
    (m as f64) * exact_pow2(shift as i64 + 1 - pow as i64)
}

/// `2^e` as an exact f64; `e` must stay in the normal range.
fn exact_pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e), "2^{e} leaves the normal range");
    f64::from_bits(((e + 1023) as u64) << 52)
}

/// Probabilities and exact-moment summary of one row scaled by `2^-n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSummary {
    pub kind: TriangleKind,
    pub n: u32,
    /// `coeff[i] / 2^n`, each entry correctly rounded from the exact ratio.
    pub probabilities: Vec<f64>,
    pub mean: f64,
    pub variance: f64,
    /// Indices of the maximal coefficient, by exact integer comparison.
    pub modes: Vec<u64>,
}

/// Distribution summary of row `n` of the given triangle. `n >= 1`.
pub fn distribution(kind: TriangleKind, n: u32) -> DistributionSummary {
    distribution_from_row(&triangles::row(kind, n))
}

/// [`distribution`] over an already-built row.
pub fn distribution_from_row(row: &Row) -> DistributionSummary {
    let n = row.n();
    assert!(n >= 1, "distributions need n >= 1");
    let pow = u64::from(n);
    let coeffs = row.coeffs();

    let probabilities = coeffs.iter().map(|c| pow2_ratio_to_f64(c, pow)).collect();

    // first and second raw moments as exact integers
    let mut s1 = BigUint::ZERO;
    let mut s2 = BigUint::ZERO;
    for (i, c) in coeffs.iter().enumerate() {
        let i = i as u64;
        s1 += c * i;
        s2 += c * (i * i);
    }
    let mean = pow2_ratio_to_f64(&s1, pow);
    // var * 4^n = 2^n * s2 - s1^2, nonnegative by Cauchy-Schwarz
    let var_numer = (&s2 << n) - (&s1 * &s1);
    let variance = pow2_ratio_to_f64(&var_numer, 2 * pow);

    let max = coeffs.iter().max().expect("rows are nonempty");
    let modes = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| *c == max)
        .map(|(i, _)| i as u64)
        .collect();

    DistributionSummary {
        kind: row.kind(),
        n,
        probabilities,
        mean,
        variance,
        modes,
    }
}

/// Normalized prefix sums of row `n`: entry `i` is `(sum of coeffs[..=i]) / 2^n`.
///
/// Nondecreasing by construction; the final entry is exactly `1.0`.
pub fn cumulative_envelope(kind: TriangleKind, n: u32) -> Vec<f64> {
    cumulative_envelope_from_row(&triangles::row(kind, n))
}

/// [`cumulative_envelope`] over an already-built row.
pub fn cumulative_envelope_from_row(row: &Row) -> Vec<f64> {
    assert!(row.n() >= 1, "envelopes need n >= 1");
    let pow = u64::from(row.n());
    let mut prefix = BigUint::ZERO;
    row.coeffs()
        .iter()
        .map(|c| {
            prefix += c;
            pow2_ratio_to_f64(&prefix, pow)
        })
        .collect()
}

/// The minimal symmetric-about-center index window holding at least half the
/// row's total mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralInterval {
    pub lo: u64,
    pub hi: u64,
    /// Number of indices, `hi - lo + 1`.
    pub width: u64,
    /// Exact coefficient sum over `[lo, hi]`; at least `2^(n-1)`.
    pub mass: BigUint,
}

/// Scans outward from the row center until the exact window mass reaches
/// `2^(n-1)`. The window is symmetric (`lo + hi` equals the last index) and
/// minimal: one symmetric pair fewer drops below the half mass.
pub fn half_mass_interval(row: &Row) -> CentralInterval {
    let n = row.n();
    assert!(n >= 1, "half-mass intervals need n >= 1");
    let coeffs = row.coeffs();
    let last = row.last_index() as usize;
    let half = BigUint::from(2u32).pow(n - 1);

    let mut lo = last / 2;
    let mut hi = last - lo;
    let mut mass = coeffs[lo].clone();
    if hi != lo {
        mass += &coeffs[hi];
    }
    while mass < half {
        lo -= 1;
        hi += 1;
        mass += &coeffs[lo];
        mass += &coeffs[hi];
    }
    CentralInterval {
        lo: lo as u64,
        hi: hi as u64,
        width: (hi - lo + 1) as u64,
        mass,
    }
}

/// Empirical exponent relating half-mass interval width to row base length.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentEstimate {
    pub kind: TriangleKind,
    pub n: u32,
    /// Row base length in index units: `n` (linear) or `n(n+1)/2` (nonlinear).
    pub base_length: u64,
    /// Width of the half-mass interval in index units.
    pub interval_width: u64,
    /// `ln(interval_width) / ln(base_length)`.
    pub k: f64,
}

/// Exponent estimate for row `n` of the given triangle. `n >= 4` (below
/// that the width degenerates and `k` leaves `(0, 1)`).
pub fn estimate_exponent(kind: TriangleKind, n: u32) -> ExponentEstimate {
    estimate_exponent_from_row(&triangles::row(kind, n))
}

/// [`estimate_exponent`] over an already-built row.
pub fn estimate_exponent_from_row(row: &Row) -> ExponentEstimate {
    let n = row.n();
    assert!(n >= 4, "exponent estimates need n >= 4");
    let interval = half_mass_interval(row);
    let base_length = row.kind().max_index(n);
    let k = (interval.width as f64).ln() / (base_length as f64).ln();
    ExponentEstimate {
        kind: row.kind(),
        n,
        base_length,
        interval_width: interval.width,
        k,
    }
}

/// Distance report between the two triangles' sum envelopes after abscissa
/// rescaling.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeComparison {
    pub n: u32,
    /// `q_max / p_max = (n + 1) / 2`, exact in f64.
    pub rescale_factor: f64,
    pub sup_distance: f64,
    pub mean_abs_distance: f64,
}

/// One abscissa of the shared comparison grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopePair {
    /// Linear row index `p`; the shared abscissa.
    pub index: u64,
    /// Linear envelope value at `p`.
    pub linear: f64,
    /// Rescaled nonlinear envelope sampled at the lattice-aligned position.
    pub nonlinear_rescaled: f64,
}

/// Samples both sum envelopes on the linear abscissa grid `0..=n`.
///
/// The nonlinear envelope is a piecewise-linear curve through
/// `(q / rescale, E[q])`. Sampling aligns the two step lattices' centers:
/// linear index `p` corresponds to nonlinear position `u` with
/// `u + 1/2 = (p + 1/2) * rescale`, which lands on exact quarter-index
/// positions. Without the alignment the two inclusive-prefix lattices carry
/// a systematic half-cell offset that the envelopes themselves do not have.
pub fn envelope_comparison_grid(n: u32) -> Vec<EnvelopePair> {
    assert!(n >= 2, "envelope comparison needs n >= 2");
    let linear = cumulative_envelope(TriangleKind::Linear, n);
    let nonlinear = cumulative_envelope(TriangleKind::Nonlinear, n);
    let last = nonlinear.len() - 1;

    (0..=u64::from(n))
        .map(|p| {
            // u in quarter-index units: 4u = 2p(n+1) + n - 1
            let u4 = 2 * p * (u64::from(n) + 1) + u64::from(n) - 1;
            let (cell, quarter) = (u4 / 4, u4 % 4);
            let value = if cell as usize >= last {
                nonlinear[last] // flat beyond the last point; both tails sit at 1
            } else {
                let frac = quarter as f64 / 4.0;
                nonlinear[cell as usize] * (1.0 - frac) + nonlinear[cell as usize + 1] * frac
            };
            EnvelopePair {
                index: p,
                linear: linear[p as usize],
                nonlinear_rescaled: value,
            }
        })
        .collect()
}

/// Sup and mean absolute distance between the rescaled sum envelopes on the
/// shared grid of [`envelope_comparison_grid`]. `n >= 2`.
pub fn compare_envelopes(n: u32) -> EnvelopeComparison {
    let grid = envelope_comparison_grid(n);
    let mut sup = 0.0f64;
    let mut total = 0.0f64;
    for pair in &grid {
        let d = (pair.linear - pair.nonlinear_rescaled).abs();
        sup = sup.max(d);
        total += d;
    }
    EnvelopeComparison {
        n,
        rescale_factor: (f64::from(n) + 1.0) / 2.0,
        sup_distance: sup,
        mean_abs_distance: total / grid.len() as f64,
    }
}
