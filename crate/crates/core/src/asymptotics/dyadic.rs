//! Dyadic rationals `m · 2^e` with directed rounding.
//!
//! Enclosure endpoints live here instead of in general rationals: products
//! and sums stay exact without gcd reductions, and rounding to a fixed
//! number of significant bits keeps them small.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::ExactRational;

/// Rounding direction on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// `mantissa · 2^exponent`, normalised so the mantissa is odd (or zero with
/// exponent 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        let mantissa = mantissa.into();
        if mantissa.is_zero() {
            return Dyadic {
                mantissa,
                exponent: 0,
            };
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        Dyadic {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic::new(0, 0)
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn to_rational(&self) -> ExactRational {
        if self.exponent >= 0 {
            ExactRational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            ExactRational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as u64,
            )
        }
    }

    /// Nearest dyadic in direction `dir` with at most `bits` significant bits.
    pub fn round(&self, bits: u32, dir: Direction) -> Dyadic {
        let excess = self.mantissa.bits() as i64 - bits as i64;
        if excess <= 0 {
            return self.clone();
        }
        let divisor = BigInt::one() << excess as u64;
        let q = match dir {
            Direction::Down => self.mantissa.div_floor(&divisor),
            Direction::Up => -((-&self.mantissa).div_floor(&divisor)),
        };
        Dyadic::new(q, self.exponent + excess)
    }

    /// `q` rounded in direction `dir` to at least `bits` significant bits.
    pub fn from_rational(q: &ExactRational, bits: u32, dir: Direction) -> Dyadic {
        if q.is_zero() {
            return Dyadic::zero();
        }
        let (a, b) = (q.numer(), q.denom());
        // choose s with a·2^s / b having about bits + 1 bits
        let s = bits as i64 + 1 - (a.bits() as i64 - b.bits() as i64);
        let (num, den) = if s >= 0 {
            (a << s as u64, b.clone())
        } else {
            (a.clone(), b << (-s) as u64)
        };
        Dyadic::new(div_directed(&num, &den, dir), -s)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &other.mantissa << (other.exponent - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
        )
    }

    /// `self / other` rounded in direction `dir` to at least `bits`
    /// significant bits.
    ///
    /// # Panics
    /// If `other` is zero.
    pub fn div(&self, other: &Dyadic, bits: u32, dir: Direction) -> Dyadic {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let s = bits as i64 + 1 + other.mantissa.bits() as i64 - self.mantissa.bits() as i64;
        let s = s.max(0);
        let q = div_directed(&(&self.mantissa << s as u64), &other.mantissa, dir);
        Dyadic::new(q, self.exponent - other.exponent - s)
    }

    /// `√self` rounded in direction `dir` to at least `bits` significant
    /// bits.
    ///
    /// # Panics
    /// If `self` is negative.
    pub fn sqrt(&self, bits: u32, dir: Direction) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // m · 2^e with e even and m carrying at least 2·bits + 2 bits
        let mut shift = (2 * bits as i64 + 2 - self.mantissa.bits() as i64).max(0);
        if (self.exponent - shift) % 2 != 0 {
            shift += 1;
        }
        let m: BigUint = self.mantissa.magnitude() << shift as u64;
        let e = self.exponent - shift;
        let r = m.sqrt();
        let r = if dir == Direction::Up && &r * &r != m {
            r + 1u32
        } else {
            r
        };
        Dyadic::new(BigInt::from(r), e / 2)
    }

    /// `self^exp` with intermediate rounding in direction `dir` at `bits`
    /// bits. Only meaningful for non-negative `self`.
    pub fn pow(&self, exp: u64, bits: u32, dir: Direction) -> Dyadic {
        assert!(!self.is_negative(), "directed power of a negative number");
        let mut result = Dyadic::from_int(1);
        let mut base = self.round(bits, dir);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).round(bits, dir);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).round(bits, dir);
            }
        }
        result
    }

    pub fn cmp_rational(&self, q: &ExactRational) -> Ordering {
        // m·2^e vs a/b  <=>  m·b·2^e vs a
        let lhs = &self.mantissa * q.denom();
        if self.exponent >= 0 {
            (lhs << self.exponent as u64).cmp(q.numer())
        } else {
            lhs.cmp(&(q.numer() << (-self.exponent) as u64))
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.mantissa.sign(), other.mantissa.sign());
        if sa != sb {
            let rank = |s: Sign| match s {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            };
            return rank(sa).cmp(&rank(sb));
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &other.mantissa << (other.exponent - e) as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn div_directed(num: &BigInt, den: &BigInt, dir: Direction) -> BigInt {
    match dir {
        Direction::Down => num.div_floor(den),
        Direction::Up => -((-num).div_floor(den)),
    }
}
