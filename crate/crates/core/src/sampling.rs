//! Uniform sampling from W(B_n), W(D_n) and the coset W(B_n) \ W(D_n), and
//! Monte Carlo estimates of the only-negative proportions.
//!
//! Trials are cut into fixed batches of [`BATCH_SIZE`]. Batch `b` draws from
//! a ChaCha8 generator seeded with the report seed and switched to stream
//! `b`, so a report depends only on `(selector, n, trials, seed)` and never
//! on the number of worker threads.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{proportion_p, proportion_p_minus, proportion_p_plus};
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::signed_perm::SignedPermutation;

pub const BATCH_SIZE: u64 = 1 << 16;

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupSelector {
    B,
    D,
    #[serde(rename = "coset")]
    Coset,
}

impl GroupSelector {
    pub const ALL: [GroupSelector; 3] = [GroupSelector::B, GroupSelector::D, GroupSelector::Coset];

    /// The exact proportion of only-negative elements in the selected set.
    pub fn exact_proportion(self, n: usize) -> Result<ExactRational> {
        match self {
            GroupSelector::B => proportion_p(n),
            GroupSelector::D => proportion_p_plus(n),
            GroupSelector::Coset => proportion_p_minus(n),
        }
    }
}

impl fmt::Display for GroupSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupSelector::B => "B",
            GroupSelector::D => "D",
            GroupSelector::Coset => "coset",
        })
    }
}

impl FromStr for GroupSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(GroupSelector::B),
            "d" => Ok(GroupSelector::D),
            "coset" => Ok(GroupSelector::Coset),
            _ => Err(Error::Parse {
                what: "group selector",
                input: s.to_string(),
            }),
        }
    }
}

/// Required parity of the number of negative window entries.
#[derive(Clone, Copy)]
enum Parity {
    Any,
    Even,
    Odd,
}

fn sample_with<R: Rng + ?Sized>(n: usize, parity: Parity, rng: &mut R) -> Result<SignedPermutation> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    let mut window: Vec<i32> = (1..=n as i32).collect();
    window.shuffle(rng);
    let free = match parity {
        Parity::Any => n,
        Parity::Even | Parity::Odd => n - 1,
    };
    let mut negatives = 0usize;
    let mut bits = 0u64;
    for (i, v) in window.iter_mut().take(free).enumerate() {
        if i % 64 == 0 {
            bits = rng.random();
        }
        if bits >> (i % 64) & 1 == 1 {
            *v = -*v;
            negatives += 1;
        }
    }
    let force_negative = match parity {
        Parity::Any => false,
        Parity::Even => negatives % 2 == 1,
        Parity::Odd => negatives % 2 == 0,
    };
    if force_negative {
        window[n - 1] = -window[n - 1];
    }
    Ok(SignedPermutation::from_window_unchecked(window))
}

/// Uniform element of W(B_n): a shuffled permutation with n fair signs.
pub fn sample_b<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<SignedPermutation> {
    sample_with(n, Parity::Any, rng)
}

/// Uniform element of W(D_n): n − 1 fair signs, the last one fixed so the
/// window has evenly many negative entries.
pub fn sample_d<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<SignedPermutation> {
    sample_with(n, Parity::Even, rng)
}

/// Uniform element of W(B_n) \ W(D_n).
pub fn sample_coset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<SignedPermutation> {
    sample_with(n, Parity::Odd, rng)
}

pub fn sample<R: Rng + ?Sized>(
    selector: GroupSelector,
    n: usize,
    rng: &mut R,
) -> Result<SignedPermutation> {
    match selector {
        GroupSelector::B => sample_b(n, rng),
        GroupSelector::D => sample_d(n, rng),
        GroupSelector::Coset => sample_coset(n, rng),
    }
}

/// The generator used for batch `batch` of a run seeded with `seed`.
pub fn batch_rng(seed: u64, batch: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

/// Wilson score interval for `hits` successes in `trials`.
pub fn wilson_interval(hits: u64, trials: u64, z: f64) -> (f64, f64) {
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    // clamp rounding noise so the interval always holds the point estimate
    ((center - half).clamp(0.0, p), (center + half).clamp(p, 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateReport {
    pub selector: GroupSelector,
    pub n: usize,
    pub trials: u64,
    pub hits: u64,
    pub estimate: ExactRational,
    pub exact: ExactRational,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
    /// `None` when the exact value is 0 or 1 and the estimate differs.
    pub z_score: Option<f64>,
}

impl EstimateReport {
    pub fn is_degenerate(&self) -> bool {
        self.z_score.is_none()
    }
}

/// Standardised deviation of `hits / trials` from `exact`.
pub fn z_score(hits: u64, trials: u64, exact: &ExactRational) -> Option<f64> {
    let estimate = ExactRational::new(hits, trials);
    if exact.is_zero() || *exact == ExactRational::one() {
        return (estimate == *exact).then_some(0.0);
    }
    let e = exact.to_f64();
    let sd = (e * (1.0 - e) / trials as f64).sqrt();
    Some((hits as f64 / trials as f64 - e) / sd)
}

/// Counts only-negative elements among `trials` uniform draws from the
/// selected set.
pub fn estimate_proportion(
    selector: GroupSelector,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<EstimateReport> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let exact = selector.exact_proportion(n)?;
    let batches = trials.div_ceil(BATCH_SIZE);
    let hits = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = batch_rng(seed, b);
            let count = BATCH_SIZE.min(trials - b * BATCH_SIZE);
            let mut hits = 0u64;
            for _ in 0..count {
                let w = sample(selector, n, &mut rng).expect("rank checked above");
                hits += w.has_only_negative_cycles() as u64;
            }
            hits
        })
        .sum::<u64>();
    let (ci_low, ci_high) = wilson_interval(hits, trials, Z_95);
    Ok(EstimateReport {
        selector,
        n,
        trials,
        hits,
        estimate: ExactRational::new(hits, trials),
        z_score: z_score(hits, trials, &exact),
        exact,
        ci_low,
        ci_high,
        seed,
    })
}
