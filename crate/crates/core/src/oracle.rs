//! Brute-force ground truth by full enumeration of W(B_n).
//!
//! Elements are classified through their orbits on the 2n points
//! ([`SignedPermutation::orbit_cycles`]), independently of the counting
//! formulas and of the sign-product shortcut.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{group_order_b, BigNatural};
use crate::error::{Error, Result};
use crate::signed_perm::{Permutation, SignVector, SignedPermutation};

pub const DEFAULT_COUNT_CAP: usize = 8;
pub const DEFAULT_LEMMA_CAP: usize = 6;
pub const DEFAULT_BIJECTION_CAP: usize = 5;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            n,
            cap,
            elements: group_order_b(n)?.to_string(),
        });
    }
    Ok(())
}

/// Every element of W(B_n) once: permutations in lexicographic order, and
/// for each the sign masks `0..2^n`.
#[derive(Debug, Clone)]
pub struct EnumerateB {
    base: Option<Permutation>,
    mask: u64,
    masks: u64,
}

impl Iterator for EnumerateB {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let base = self.base.as_mut()?;
        let w = SignedPermutation::from_parts(base, self.mask);
        self.mask += 1;
        if self.mask == self.masks {
            self.mask = 0;
            if !base.advance() {
                self.base = None;
            }
        }
        Some(w)
    }
}

pub fn enumerate_b(n: usize) -> Result<EnumerateB> {
    enumerate_b_capped(n, DEFAULT_COUNT_CAP)
}

pub fn enumerate_b_capped(n: usize, cap: usize) -> Result<EnumerateB> {
    check_cap(n, cap)?;
    Ok(EnumerateB {
        base: Some(Permutation::identity(n)?),
        mask: 0,
        masks: 1 << n,
    })
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut x = Permutation::identity(n).expect("n >= 1");
    let mut out = vec![x.clone()];
    while x.advance() {
        out.push(x.clone());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteCounts {
    pub n: usize,
    #[serde(serialize_with = "as_string")]
    pub total: BigNatural,
    #[serde(serialize_with = "as_string")]
    pub neg_b: BigNatural,
    #[serde(serialize_with = "as_string")]
    pub neg_d: BigNatural,
    #[serde(serialize_with = "as_string")]
    pub neg_coset: BigNatural,
    #[serde(serialize_with = "as_string")]
    pub pos_b: BigNatural,
}

// big integers go out as decimal strings so JSON readers never round them
fn as_string<S: serde::Serializer>(v: &BigNatural, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Default, Clone, Copy)]
struct Tally {
    total: u64,
    neg_b: u64,
    neg_d: u64,
    neg_coset: u64,
    pos_b: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            total: self.total + o.total,
            neg_b: self.neg_b + o.neg_b,
            neg_d: self.neg_d + o.neg_d,
            neg_coset: self.neg_coset + o.neg_coset,
            pos_b: self.pos_b + o.pos_b,
        }
    }
}

/// Counts only-negative and only-positive elements of W(B_n), split by
/// W(D_n) membership, by enumerating the whole group.
pub fn brute_counts(n: usize) -> Result<BruteCounts> {
    brute_counts_capped(n, DEFAULT_COUNT_CAP)
}

pub fn brute_counts_capped(n: usize, cap: usize) -> Result<BruteCounts> {
    check_cap(n, cap)?;
    let perms = all_permutations(n);
    let masks = 1u64 << n;
    // sign-mask ranges as work units; merge order is irrelevant for sums
    let chunk = (masks / 64).max(1);
    let tally = (0..masks.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut t = Tally::default();
            for mask in c * chunk..((c + 1) * chunk).min(masks) {
                for x in &perms {
                    let w = SignedPermutation::from_parts(x, mask);
                    let d = w.cycle_decomposition();
                    t.total += 1;
                    let even = d.negative_count() % 2 == 0;
                    if d.positive_lengths.is_empty() {
                        t.neg_b += 1;
                        if even {
                            t.neg_d += 1;
                        } else {
                            t.neg_coset += 1;
                        }
                    }
                    if d.negative_lengths.is_empty() {
                        t.pos_b += 1;
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(BruteCounts {
        n,
        total: tally.total.into(),
        neg_b: tally.neg_b.into(),
        neg_d: tally.neg_d.into(),
        neg_coset: tally.neg_coset.into(),
        pos_b: tally.pos_b.into(),
    })
}

/// Histogram of cycle counts of the projections over all of W(B_n).
pub fn projection_cycle_histogram(n: usize) -> Result<Vec<BigNatural>> {
    check_cap(n, DEFAULT_COUNT_CAP)?;
    let mut hist = vec![0u64; n + 1];
    for w in enumerate_b(n)? {
        hist[w.projection().cycle_count()] += 1;
    }
    Ok(hist.into_iter().map(BigUint::from).collect())
}

/// The fiber of the projection over `base`, bucketed by sign vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPartition {
    pub base: Permutation,
    pub k: usize,
    pub buckets: BTreeMap<SignVector, u64>,
}

impl FiberPartition {
    pub fn new(base: &Permutation) -> Self {
        let n = base.rank();
        let mut buckets = BTreeMap::new();
        for mask in 0..1u64 << n {
            let w = SignedPermutation::from_parts(base, mask);
            let s = SignVector::from_cycles(&w.orbit_cycles());
            *buckets.entry(s).or_insert(0) += 1;
        }
        FiberPartition {
            base: base.clone(),
            k: base.cycle_count(),
            buckets,
        }
    }

    pub fn total(&self) -> u64 {
        self.buckets.values().sum()
    }

    /// First sign vector whose class does not have exactly `2^(n-k)`
    /// elements, together with its count.
    pub fn first_violation(&self) -> Option<(SignVector, u64)> {
        let n = self.base.rank();
        let expected = 1u64 << (n - self.k);
        (0..1u64 << self.k)
            .map(|mask| SignVector::from_mask(self.k, mask))
            .map(|s| {
                let count = self.buckets.get(&s).copied().unwrap_or(0);
                (s, count)
            })
            .find(|(_, count)| *count != expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub fibers_checked: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Checks that over every `x` in S_n each of the `2^k` sign classes of the
/// fiber has exactly `2^(n-k)` elements.
pub fn verify_lemma(n: usize) -> Result<LemmaReport> {
    verify_lemma_capped(n, DEFAULT_LEMMA_CAP)
}

pub fn verify_lemma_capped(n: usize, cap: usize) -> Result<LemmaReport> {
    check_cap(n, cap)?;
    let mut fibers_checked = 0;
    for x in all_permutations(n) {
        let fiber = FiberPartition::new(&x);
        fibers_checked += 1;
        let failure = if fiber.total() != 1 << n {
            Some(format!("fiber over {x} has {} elements", fiber.total()))
        } else if fiber.buckets.len() > 1 << fiber.k {
            Some(format!("fiber over {x} has {} sign classes", fiber.buckets.len()))
        } else {
            fiber.first_violation().map(|(s, count)| {
                format!(
                    "fiber over {x}: class {s} has {count} elements, expected {}",
                    1u64 << (n - fiber.k)
                )
            })
        };
        if failure.is_some() {
            return Ok(LemmaReport {
                n,
                fibers_checked,
                passed: false,
                failure,
            });
        }
    }
    Ok(LemmaReport {
        n,
        fibers_checked,
        passed: true,
        failure: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub maps_checked: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

/// The flip set used for target sign vector `s` over `x`: the smallest
/// point of each cycle whose sign is negative.
pub fn flip_set(x: &Permutation, s: &SignVector) -> Vec<usize> {
    let cycles = x.cycles();
    s.negative_positions().map(|j| cycles[j][0]).collect()
}

/// Checks that left multiplication by the flip set maps the all-positive
/// class of every fiber bijectively onto each other sign class.
pub fn verify_flip_bijection(n: usize) -> Result<BijectionReport> {
    verify_flip_bijection_capped(n, DEFAULT_BIJECTION_CAP)
}

pub fn verify_flip_bijection_capped(n: usize, cap: usize) -> Result<BijectionReport> {
    check_cap(n, cap)?;
    let sign_of = |w: &SignedPermutation| SignVector::from_cycles(&w.orbit_cycles());
    let mut maps_checked = 0;
    let fail = |maps_checked, msg: String| BijectionReport {
        n,
        maps_checked,
        passed: false,
        failure: Some(msg),
    };
    for x in all_permutations(n) {
        let k = x.cycle_count();
        let fiber: Vec<SignedPermutation> = (0..1u64 << n)
            .map(|mask| SignedPermutation::from_parts(&x, mask))
            .collect();
        let base_class: Vec<&SignedPermutation> = fiber
            .iter()
            .filter(|w| sign_of(w).is_all(crate::signed_perm::Sign::Plus))
            .collect();
        for mask in 0..1u64 << k {
            let s = SignVector::from_mask(k, mask);
            let pairs = flip_set(&x, &s);
            let target: HashSet<&SignedPermutation> =
                fiber.iter().filter(|w| sign_of(w) == s).collect();
            let mut images = HashSet::new();
            for w in &base_class {
                let image = w.flip_map(pairs.iter().copied())?;
                if !target.contains(&image) {
                    return Ok(fail(
                        maps_checked,
                        format!("{w} maps to {image}, outside the class {s} over {x}"),
                    ));
                }
                if !images.insert(image.clone()) {
                    return Ok(fail(
                        maps_checked,
                        format!("{image} is hit twice over {x} for class {s}"),
                    ));
                }
            }
            if images.len() != target.len() {
                return Ok(fail(
                    maps_checked,
                    format!(
                        "class {s} over {x} has {} elements but only {} are hit",
                        target.len(),
                        images.len()
                    ),
                ));
            }
            maps_checked += 1;
        }
    }
    Ok(BijectionReport {
        n,
        maps_checked,
        passed: true,
        failure: None,
    })
}
