//! Certified enclosures of π and e.
//!
//! Up to [`TABLE_BITS`] bits the 40-digit decimal brackets below are used
//! as-is. Beyond that the enclosures come from truncated series with
//! explicit error terms (Machin's formula for π, the factorial series for e).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::dyadic::{Direction, Dyadic};
use super::enclosure::RealEnclosure;
use crate::rational::ExactRational;

pub const PI_LOWER: &str = "3.14159265358979323846264338327950288419";
pub const PI_UPPER: &str = "3.14159265358979323846264338327950288420";
pub const E_LOWER: &str = "2.718281828459045235360287471352662497757";
pub const E_UPPER: &str = "2.718281828459045235360287471352662497758";

/// Relative precision the decimal brackets are trusted for.
pub const TABLE_BITS: u32 = 120;

fn parse_decimal(s: &str) -> ExactRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    ExactRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
}

fn from_table(lower: &str, upper: &str, bits: u32) -> RealEnclosure {
    RealEnclosure::new(
        Dyadic::from_rational(&parse_decimal(lower), bits + 8, Direction::Down),
        Dyadic::from_rational(&parse_decimal(upper), bits + 8, Direction::Up),
    )
    .expect("table brackets are ordered")
}

/// The 40-digit table bracket for π.
pub fn pi_table() -> (ExactRational, ExactRational) {
    (parse_decimal(PI_LOWER), parse_decimal(PI_UPPER))
}

/// The 40-digit table bracket for e.
pub fn e_table() -> (ExactRational, ExactRational) {
    (parse_decimal(E_LOWER), parse_decimal(E_UPPER))
}

/// Enclosure of π with relative width at most `2^-bits`.
pub fn pi_enclosure(bits: u32) -> RealEnclosure {
    if bits <= TABLE_BITS {
        return from_table(PI_LOWER, PI_UPPER, bits);
    }
    pi_series(bits + 16)
}

/// Enclosure of e with relative width at most `2^-bits`.
pub fn e_enclosure(bits: u32) -> RealEnclosure {
    if bits <= TABLE_BITS {
        return from_table(E_LOWER, E_UPPER, bits);
    }
    e_series(bits + 16)
}

/// Bounds `[lo, hi]` on `2^w · arctan(1/x)`.
fn arctan_inv_scaled(x: u64, w: u64) -> (BigInt, BigInt) {
    // q_k = floor(2^w / x^(2k+1)) exactly, since floor(floor(y)/m) = floor(y/m)
    let x2 = x * x;
    let mut q: BigUint = (BigUint::one() << w) / x;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    while !q.is_zero() {
        // each truncated term is within 1 of the exact scaled term
        let t = BigInt::from(&q / (2 * k + 1));
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        terms += 1;
        q /= x2;
        k += 1;
    }
    // the first omitted term is below 1 in scaled units (alternating tail)
    let slack = BigInt::from(terms + 1);
    (&sum - &slack, &sum + &slack)
}

fn pi_series(w: u32) -> RealEnclosure {
    let w = w as u64 + 8;
    // π = 16 arctan(1/5) − 4 arctan(1/239)
    let (a_lo, a_hi) = arctan_inv_scaled(5, w);
    let (b_lo, b_hi) = arctan_inv_scaled(239, w);
    let lo = a_lo * 16 - b_hi * 4;
    let hi = a_hi * 16 - b_lo * 4;
    RealEnclosure::new(Dyadic::new(lo, -(w as i64)), Dyadic::new(hi, -(w as i64)))
        .expect("series bounds are ordered")
}

fn e_series(w: u32) -> RealEnclosure {
    let w = w as u64 + 8;
    // q_k = floor(2^w / k!)
    let mut q: BigUint = BigUint::one() << w;
    let mut sum = BigUint::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    while !q.is_zero() {
        sum += &q;
        terms += 1;
        k += 1;
        q /= k;
    }
    // truncation loses < 1 per term; the tail after 2^w/k! < 1 is below 2
    let lo = BigInt::from(sum.clone());
    let hi = BigInt::from(sum) + BigInt::from(terms + 2);
    RealEnclosure::new(Dyadic::new(lo, -(w as i64)), Dyadic::new(hi, -(w as i64)))
        .expect("series bounds are ordered")
}
