//! Exact counts and proportions of elements with only negative cycles.
//!
//! Every count is available along two routes that are checked against each
//! other: the Stirling-number sum over cycle counts of the projection, and
//! the closed product obtained from the rising factorial
//! `χ_n(X) = X(X+1)···(X+n−1)` evaluated at `±1/2`. The coefficient route is
//! `Θ(n²)` and only runs up to [`Counter::cross_check_bound`].

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

pub type BigNatural = BigUint;

/// Default largest `n` for which the Stirling-sum route is evaluated.
pub const DEFAULT_CROSS_CHECK_BOUND: usize = 2000;

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidRank(0))
    } else {
        Ok(())
    }
}

/// Product of arbitrary many machine-word factors by a balanced tree.
pub(crate) fn product<I: IntoIterator<Item = u64>>(factors: I) -> BigUint {
    // pack runs of small factors into single words first
    let mut leaves: Vec<BigUint> = Vec::new();
    let mut acc: u64 = 1;
    for f in factors {
        match acc.checked_mul(f) {
            Some(v) => acc = v,
            None => {
                leaves.push(BigUint::from(acc));
                acc = f;
            }
        }
    }
    leaves.push(BigUint::from(acc));
    while leaves.len() > 1 {
        leaves = leaves
            .chunks(2)
            .map(|c| match c {
                [a, b] => a * b,
                [a] => a.clone(),
                _ => unreachable!(),
            })
            .collect();
    }
    leaves.pop().unwrap()
}

pub fn factorial(n: usize) -> BigNatural {
    product(1..=n as u64)
}

/// `(2n−1)!! = 1·3·5···(2n−1)`, with `(−1)!! = 1` for `n = 0`.
pub fn double_factorial_odd(n: usize) -> BigNatural {
    product((0..n as u64).map(|j| 2 * j + 1))
}

/// `|W(B_n)| = 2^n · n!`.
pub fn group_order_b(n: usize) -> Result<BigNatural> {
    check_rank(n)?;
    Ok(factorial(n) << n)
}

/// The central binomial coefficient `C(2n, n)` from its prime factorisation.
pub fn central_binomial(n: usize) -> BigNatural {
    let m = 2 * n;
    if m < 2 {
        return BigUint::one();
    }
    let mut composite = vec![false; m + 1];
    let mut factors = Vec::new();
    for p in 2..=m {
        if composite[p] {
            continue;
        }
        let mut q = p * p;
        while q <= m {
            composite[q] = true;
            q += p;
        }
        // each power of p contributes floor(2n/p^i) - 2 floor(n/p^i) ∈ {0, 1}
        let mut power: u64 = 1;
        let mut pi = p;
        loop {
            if m / pi - 2 * (n / pi) == 1 {
                power *= p as u64;
            }
            match pi.checked_mul(p) {
                Some(next) if next <= m => pi = next,
                _ => break,
            }
        }
        if power > 1 {
            factors.push(power);
        }
    }
    product(factors)
}

/// Rows of unsigned Stirling numbers of the first kind, starting at row 0.
/// Row `n` holds `S1(n, 0..=n)`.
pub fn stirling_rows() -> impl Iterator<Item = Vec<BigNatural>> {
    let mut row: Vec<BigNatural> = vec![BigUint::one()];
    let mut n = 0usize;
    std::iter::from_fn(move || {
        let out = row.clone();
        // S1(n+1, k) = S1(n, k−1) + n·S1(n, k)
        let mut next = vec![BigUint::zero(); n + 2];
        for k in 0..=n + 1 {
            let mut v = if k > 0 { row[k - 1].clone() } else { BigUint::zero() };
            if k <= n && n > 0 {
                v += &row[k] * n;
            }
            next[k] = v;
        }
        row = next;
        n += 1;
        Some(out)
    })
}

/// `S1(n, k)`, the number of permutations of `n` letters with `k` cycles.
pub fn stirling1_unsigned(n: usize, k: usize) -> Result<BigNatural> {
    if k > n {
        return Err(Error::StirlingIndex { n, k });
    }
    Ok(stirling_rows().nth(n).unwrap().swap_remove(k))
}

/// Triangular table of `S1(n, k)` for `0 <= k <= n <= n_max`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigNatural>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Result<Self> {
        check_rank(n_max)?;
        Ok(StirlingTable {
            rows: stirling_rows().take(n_max + 1).collect(),
        })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[BigNatural]> {
        self.rows.get(n).map(|r| r.as_slice())
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigNatural> {
        self.rows.get(n).and_then(|r| r.get(k))
    }
}

/// `χ_n(x) = x(x+1)···(x+n−1)` as an exact product.
pub fn chi_eval(n: usize, x: &ExactRational) -> Result<ExactRational> {
    check_rank(n)?;
    // x = a/b: Π (a + j b) / b^n
    let (a, b) = (x.numer(), x.denom());
    let mut negatives = 0usize;
    let mut zero = false;
    let mut factors: Vec<BigUint> = Vec::with_capacity(n);
    for j in 0..n {
        let f = a + b * BigInt::from(j);
        match f.sign() {
            num_bigint::Sign::NoSign => zero = true,
            num_bigint::Sign::Minus => negatives += 1,
            num_bigint::Sign::Plus => {}
        }
        factors.push(f.magnitude().clone());
    }
    if zero {
        return Ok(ExactRational::zero());
    }
    let mut numer = BigInt::from(big_product(factors));
    if negatives % 2 == 1 {
        numer = -numer;
    }
    Ok(ExactRational::new(numer, b.pow(n as u32)))
}

fn big_product(mut leaves: Vec<BigUint>) -> BigUint {
    if leaves.is_empty() {
        return BigUint::one();
    }
    while leaves.len() > 1 {
        leaves = leaves
            .chunks(2)
            .map(|c| if c.len() == 2 { &c[0] * &c[1] } else { c[0].clone() })
            .collect();
    }
    leaves.pop().unwrap()
}

/// `Σ_k coeffs[k] · x^k`, the coefficient route for `χ_n`.
pub fn chi_eval_by_coefficients(coeffs: &[BigNatural], x: &ExactRational) -> ExactRational {
    // Horner
    coeffs.iter().rev().fold(ExactRational::zero(), |acc, c| {
        &(&acc * x) + &ExactRational::from(c.clone())
    })
}

/// `Σ_k S1(n,k)·2^(n−k)` restricted to `k` matching `keep`.
fn weighted_stirling_sum(row: &[BigNatural], keep: impl Fn(usize) -> bool) -> BigNatural {
    let n = row.len() - 1;
    row.iter()
        .enumerate()
        .filter(|(k, _)| keep(*k))
        .fold(BigUint::zero(), |acc, (k, s)| acc + (s << (n - k)))
}

/// Which elements are being counted among those with only negative cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    All,
    Even,
    Odd,
}

/// Counting with a configurable bound on the quadratic cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counter {
    pub cross_check_bound: usize,
}

impl Default for Counter {
    fn default() -> Self {
        Counter {
            cross_check_bound: DEFAULT_CROSS_CHECK_BOUND,
        }
    }
}

impl Counter {
    pub fn new(cross_check_bound: usize) -> Self {
        Counter { cross_check_bound }
    }

    /// `2^n χ_n(1/2)` and `2^n χ_n(−1/2)` as integers.
    fn chi_at_halves(n: usize) -> Result<(BigInt, BigInt)> {
        let half = ExactRational::new(1, 2);
        let scale = ExactRational::from(BigUint::one() << n);
        let plus = &chi_eval(n, &half)? * &scale;
        let minus = &chi_eval(n, &-half)? * &scale;
        match (plus.is_integer(), minus.is_integer()) {
            (true, true) => Ok((plus.numer().clone(), minus.numer().clone())),
            _ => Err(Error::NotNatural { what: "2^n χ_n(±1/2)", n }),
        }
    }

    fn count(&self, n: usize, part: Part) -> Result<BigNatural> {
        check_rank(n)?;
        let what = match part {
            Part::All => "count_all_negative_B",
            Part::Even => "count_all_negative_D",
            Part::Odd => "count_all_negative_coset",
        };
        let (plus, minus) = Self::chi_at_halves(n)?;
        let closed: BigInt = match part {
            Part::All => plus.clone(),
            Part::Even | Part::Odd => {
                let sum = if part == Part::Even { &plus + &minus } else { &plus - &minus };
                // 2^(n−1)(χ(1/2) ± χ(−1/2)) = (2^n χ(1/2) ± 2^n χ(−1/2)) / 2
                if sum.bit(0) {
                    return Err(Error::NotNatural { what, n });
                }
                sum >> 1
            }
        };
        let closed = closed.to_biguint().ok_or(Error::NotNatural { what, n })?;
        if part == Part::All && closed != double_factorial_odd(n) {
            return Err(Error::CrossCheck { what, n });
        }
        if n <= self.cross_check_bound {
            let row = stirling_rows().nth(n).unwrap();
            let sum = match part {
                Part::All => weighted_stirling_sum(&row, |_| true),
                Part::Even => weighted_stirling_sum(&row, |k| k % 2 == 0),
                Part::Odd => weighted_stirling_sum(&row, |k| k % 2 == 1),
            };
            if sum != closed {
                return Err(Error::CrossCheck { what, n });
            }
        }
        Ok(closed)
    }

    pub fn count_all_negative_b(&self, n: usize) -> Result<BigNatural> {
        self.count(n, Part::All)
    }

    /// Same size as the only-negative class: the sign classes over each
    /// fiber of the projection all have equal cardinality.
    pub fn count_all_positive_b(&self, n: usize) -> Result<BigNatural> {
        self.count(n, Part::All)
    }

    pub fn count_all_negative_d(&self, n: usize) -> Result<BigNatural> {
        self.count(n, Part::Even)
    }

    pub fn count_all_negative_coset(&self, n: usize) -> Result<BigNatural> {
        self.count(n, Part::Odd)
    }
}

pub fn count_all_negative_b(n: usize) -> Result<BigNatural> {
    Counter::default().count_all_negative_b(n)
}

pub fn count_all_positive_b(n: usize) -> Result<BigNatural> {
    Counter::default().count_all_positive_b(n)
}

pub fn count_all_negative_d(n: usize) -> Result<BigNatural> {
    Counter::default().count_all_negative_d(n)
}

pub fn count_all_negative_coset(n: usize) -> Result<BigNatural> {
    Counter::default().count_all_negative_coset(n)
}

/// `p(n) = (2n−1)!! / (2^n n!) = C(2n, n) / 4^n`, reduced.
pub fn proportion_p(n: usize) -> Result<ExactRational> {
    check_rank(n)?;
    Ok(ExactRational::new(
        BigInt::from(central_binomial(n)),
        BigInt::one() << (2 * n),
    ))
}

/// `p⁺(n) = p(n) · (2n−2)/(2n−1)`.
pub fn proportion_p_plus(n: usize) -> Result<ExactRational> {
    let factor = ExactRational::new(2 * n as i64 - 2, 2 * n as i64 - 1);
    Ok(&proportion_p(n)? * &factor)
}

/// `p⁻(n) = p(n) · 2n/(2n−1)`.
pub fn proportion_p_minus(n: usize) -> Result<ExactRational> {
    let factor = ExactRational::new(2 * n as i64, 2 * n as i64 - 1);
    Ok(&proportion_p(n)? * &factor)
}
