//! Certified checks of the asymptotic upper bound
//! `p(n) < h(n) = (1 + 1/(22n)) / √(πn)` and of the Stirling factorial
//! bounds behind it.
//!
//! Real quantities are carried as [`RealEnclosure`]s built from certified
//! enclosures of π and e. The bound itself is decided in squared form,
//! `π·n·p(n)² < (1 + 1/(22n))²`, which needs no square roots: only the π
//! enclosure is inexact there.

mod constants;
mod dyadic;
mod enclosure;

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

pub use constants::{e_enclosure, e_table, pi_enclosure, pi_table};
pub use dyadic::{Direction, Dyadic};
pub use enclosure::RealEnclosure;

use crate::counting::{factorial, proportion_p};
use crate::error::{Error, Result};
use crate::rational::{ExactRational, Rounding};

pub const MIN_PRECISION_BITS: u32 = 16;
pub const DEFAULT_PRECISION_BITS: u32 = 128;
pub const MAX_PRECISION_BITS: u32 = 4096;

/// Extra working bits on top of the requested precision.
const GUARD_BITS: u32 = 32;

fn check_args(n: usize, precision_bits: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if precision_bits < MIN_PRECISION_BITS {
        return Err(Error::PrecisionTooLow {
            requested: precision_bits,
            minimum: MIN_PRECISION_BITS,
        });
    }
    Ok(())
}

/// Enclosure of `h(n) = (1 + 1/(22n)) / √(πn)` with relative width at most
/// `2^-precision_bits`.
pub fn h_enclosure(n: usize, precision_bits: u32) -> Result<RealEnclosure> {
    check_args(n, precision_bits)?;
    let numerator = ExactRational::new(22 * n as i64 + 1, 22 * n as i64);
    for attempt in 0..4 {
        let w = precision_bits + GUARD_BITS + 64 * attempt;
        let pi_n = pi_enclosure(w).mul(&RealEnclosure::from_int(n as i64), w);
        let root = pi_n.sqrt(w)?;
        let h = RealEnclosure::from_rational(&numerator, w).div(&root, w)?;
        if h.relative_width_within(precision_bits) {
            return Ok(h);
        }
    }
    Err(Error::Widening { precision_bits })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CertifiedTrue,
    CertifiedFalse,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedTrue => "certified_true",
            Verdict::CertifiedFalse => "certified_false",
            Verdict::Undecided => "undecided",
        }
    }
}

/// Outcome of certifying `p(n) < h(n)` for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub p_value: ExactRational,
    pub h_enclosure: RealEnclosure,
    pub verdict: Verdict,
    pub precision_bits: u32,
}

/// Flat serialisable form of a [`BoundReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub n: usize,
    pub p: String,
    pub p_dec: String,
    pub h_lower: String,
    pub h_upper: String,
    pub verdict: Verdict,
    pub precision_bits: u32,
}

impl BoundReport {
    pub fn to_record(&self) -> BoundRecord {
        let (h_lower, h_upper) = self.h_enclosure.to_decimal_bounds(20);
        BoundRecord {
            n: self.n,
            p: self.p_value.to_string(),
            p_dec: self.p_value.to_decimal(20, Rounding::Nearest),
            h_lower,
            h_upper,
            verdict: self.verdict,
            precision_bits: self.precision_bits,
        }
    }
}

/// Decides `π·n·p² < (1 + 1/(22n))²` against the given π enclosure.
fn squared_form_verdict(n: usize, p: &ExactRational, pi: &RealEnclosure) -> Verdict {
    // π·n·a²·(22n)² vs (22n+1)²·b² for p = a/b
    let m = BigInt::from(22 * n as u64);
    let lhs = BigInt::from(n as u64) * p.numer() * p.numer() * &m * &m;
    let m1 = &m + 1u32;
    let rhs = Dyadic::from_int(&m1 * &m1 * p.denom() * p.denom());
    let lhs = Dyadic::from_int(lhs);
    if pi.upper().mul(&lhs) < rhs {
        Verdict::CertifiedTrue
    } else if pi.lower().mul(&lhs) > rhs {
        Verdict::CertifiedFalse
    } else {
        Verdict::Undecided
    }
}

/// Certifies `p(n) < h(n)`, starting at [`DEFAULT_PRECISION_BITS`] and
/// doubling up to [`MAX_PRECISION_BITS`].
pub fn certify_upper_bound(n: usize) -> Result<BoundReport> {
    certify_upper_bound_with(n, DEFAULT_PRECISION_BITS, MAX_PRECISION_BITS)
}

pub fn certify_upper_bound_with(
    n: usize,
    start_bits: u32,
    max_bits: u32,
) -> Result<BoundReport> {
    check_args(n, start_bits)?;
    let p = proportion_p(n)?;
    let mut bits = start_bits;
    loop {
        let pi = pi_enclosure(bits);
        let h = h_enclosure(n, bits)?;
        let verdict = match squared_form_verdict(n, &p, &pi) {
            // the reported enclosure must agree with the verdict on its own
            Verdict::CertifiedTrue if h.lower().cmp_rational(&p).is_gt() => {
                Verdict::CertifiedTrue
            }
            Verdict::CertifiedFalse if h.upper().cmp_rational(&p).is_lt() => {
                Verdict::CertifiedFalse
            }
            _ => Verdict::Undecided,
        };
        if verdict != Verdict::Undecided || bits >= max_bits {
            return Ok(BoundReport {
                n,
                p_value: p,
                h_enclosure: h,
                verdict,
                precision_bits: bits,
            });
        }
        bits = (bits * 2).min(max_bits);
    }
}

/// Enclosure of `p(n) / h(n)`.
pub fn ratio_p_over_h(n: usize, precision_bits: u32) -> Result<RealEnclosure> {
    check_args(n, precision_bits)?;
    let w = precision_bits + GUARD_BITS;
    let p = RealEnclosure::from_rational(&proportion_p(n)?, w);
    p.div(&h_enclosure(n, w)?, w)
}

/// Working precision for the Stirling check: relative error of `x^n` grows
/// with `n`, so at least `n·log2(n)/2 + 64` bits.
pub fn stirling_working_bits(n: usize, precision_bits: u32) -> u32 {
    let scaled = (n as f64) * (n as f64).log2() / 2.0;
    precision_bits.max(scaled.ceil() as u32 + 64)
}

/// Certifies `√(2πn)(n/e)^n < n! < (1 + 1/(11n))√(2πn)(n/e)^n`.
///
/// Returns `Ok(false)` if either inequality is certified to fail and
/// [`Error::Undecided`] if the enclosures stay too wide.
pub fn check_stirling_bounds(n: usize, precision_bits: u32) -> Result<bool> {
    check_args(n, precision_bits)?;
    let fact = ExactRational::from(factorial(n));
    let n_pow_n = RealEnclosure::point(Dyadic::from_int(BigUint::from(n).pow(n as u32)));
    let factor = ExactRational::new(11 * n as i64 + 1, 11 * n as i64);
    let base = stirling_working_bits(n, precision_bits);
    let mut w = base;
    for _ in 0..3 {
        let two_pi_n = pi_enclosure(w).mul(&RealEnclosure::from_int(2 * n as i64), w);
        let root = two_pi_n.sqrt(w)?;
        let e_n = e_enclosure(w).pow(n as u64, w)?;
        let approx = root.mul(&n_pow_n, w).div(&e_n, w)?;
        let upper = RealEnclosure::from_rational(&factor, w).mul(&approx, w);
        let low_side = approx.compare_rational(&fact);
        let high_side = upper.compare_rational(&fact);
        if matches!(low_side, Some(Ordering::Greater | Ordering::Equal))
            || matches!(high_side, Some(Ordering::Less | Ordering::Equal))
        {
            return Ok(false);
        }
        if low_side == Some(Ordering::Less) && high_side == Some(Ordering::Greater) {
            return Ok(true);
        }
        w *= 2;
    }
    Err(Error::Undecided {
        n,
        precision_bits: w / 2,
    })
}

/// Roughly log-spaced integers from 1 to `max` inclusive, deduplicated.
pub fn log_spaced_grid(max: usize, steps: usize) -> Vec<usize> {
    if max <= 1 || steps <= 1 {
        return vec![max.max(1)];
    }
    let mut grid: Vec<usize> = (0..steps)
        .map(|i| {
            let t = i as f64 / (steps - 1) as f64;
            ((max as f64).powf(t).round() as usize).clamp(1, max)
        })
        .collect();
    grid.dedup();
    grid
}
