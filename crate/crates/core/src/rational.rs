//! Reduced arbitrary-precision rationals and their decimal rendering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRational {
    numer: BigInt,
    denom: BigInt,
}

/// gcd with shortcuts for the shapes that dominate here: one side a power of
/// two or a machine word. The general case falls back to `num_integer`.
fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = (a.magnitude(), b.magnitude());
    if a.is_zero() {
        return b.clone().into();
    }
    if b.is_zero() {
        return a.clone().into();
    }
    if let Some(small) = b.to_u64() {
        let r = (a % small).to_u64().unwrap();
        return BigInt::from(small.gcd(&r));
    }
    if let Some(small) = a.to_u64() {
        let r = (b % small).to_u64().unwrap();
        return BigInt::from(small.gcd(&r));
    }
    let tz = |x: &BigUint| x.trailing_zeros().unwrap_or(0);
    let is_pow2 = |x: &BigUint| x.count_ones() == 1;
    if is_pow2(a) || is_pow2(b) {
        return BigInt::from(BigUint::one() << tz(a).min(tz(b)));
    }
    a.gcd(b).into()
}

impl ExactRational {
    /// # Panics
    /// If `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let (mut numer, mut denom) = (numer.into(), denom.into());
        assert!(!denom.is_zero(), "zero denominator");
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        let g = gcd(&numer, &denom);
        if !g.is_one() {
            numer /= &g;
            denom /= &g;
        }
        ExactRational { numer, denom }
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactRational {
            numer: value.into(),
            denom: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// The value as a natural number, if it is one.
    pub fn to_natural(&self) -> Option<BigUint> {
        if self.is_integer() {
            self.numer.to_biguint()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        ExactRational {
            numer: self.numer.abs(),
            denom: self.denom.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        ExactRational::new(self.denom.clone(), self.numer.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        // lowest terms are preserved by powers
        ExactRational {
            numer: self.numer.pow(exp),
            denom: self.denom.pow(exp),
        }
    }

    pub fn to_f64(&self) -> f64 {
        BigRational::new_raw(self.numer.clone(), self.denom.clone())
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` significant digits. Trailing zeros
    /// after the point are trimmed, keeping at least one fractional digit.
    /// Magnitudes outside `1e-25 .. 1e25` use exponent notation.
    pub fn to_decimal(&self, digits: usize, rounding: Rounding) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0.0".to_string();
        }
        let negative = self.is_negative();
        let a = self.numer.magnitude();
        let b = self.denom.magnitude();
        let ten = BigUint::from(10u32);

        // exponent e with 10^e <= a/b < 10^(e+1)
        let approx = (a.bits() as f64 - b.bits() as f64) * std::f64::consts::LOG10_2;
        let mut e = approx.floor() as i64 - 1;
        let ge_pow = |e: i64| -> bool {
            if e >= 0 {
                a >= &(b * ten.pow(e as u32))
            } else {
                &(a * ten.pow((-e) as u32)) >= b
            }
        };
        while ge_pow(e + 1) {
            e += 1;
        }
        while !ge_pow(e) {
            e -= 1;
        }

        // mantissa = a/b * 10^(digits - 1 - e), rounded by magnitude
        let shift = digits as i64 - 1 - e;
        let (num, den) = if shift >= 0 {
            (a * ten.pow(shift as u32), b.clone())
        } else {
            (a.clone(), b * ten.pow((-shift) as u32))
        };
        let (q, r) = num.div_rem(&den);
        let away = match rounding {
            Rounding::Nearest => &r * 2u32 >= den,
            Rounding::Floor => negative && !r.is_zero(),
            Rounding::Ceil => !negative && !r.is_zero(),
        };
        let mut mantissa = if away { q + 1u32 } else { q };
        if mantissa == ten.pow(digits as u32) {
            mantissa /= 10u32;
            e += 1;
        }

        let text = mantissa.to_string();
        let sign = if negative { "-" } else { "" };
        let trim = |frac: &str| -> String {
            let t = frac.trim_end_matches('0');
            if t.is_empty() {
                "0".to_string()
            } else {
                t.to_string()
            }
        };
        if !(-25..25).contains(&e) {
            return format!("{sign}{}.{}e{e}", &text[..1], trim(&text[1..]));
        }
        if e < 0 {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("{sign}0.{zeros}{}", trim(&text))
        } else {
            let int_len = e as usize + 1;
            if int_len >= text.len() {
                let zeros = "0".repeat(int_len - text.len());
                format!("{sign}{text}{zeros}.0")
            } else {
                format!("{sign}{}.{}", &text[..int_len], trim(&text[int_len..]))
            }
        }
    }
}

/// Rounding direction for decimal rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Nearest,
    Floor,
    Ceil,
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        let sa = self.numer.sign();
        let sb = other.numer.sign();
        if sa != sb {
            let rank = |s: Sign| match s {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            };
            return rank(sa).cmp(&rank(sb));
        }
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational::from_integer(v)
    }
}

impl From<BigUint> for ExactRational {
    fn from(v: BigUint) -> Self {
        ExactRational::from_integer(BigInt::from(v))
    }
}

impl From<BigInt> for ExactRational {
    fn from(v: BigInt) -> Self {
        ExactRational::from_integer(v)
    }
}

impl<'a> Add<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        if self.denom == rhs.denom {
            return ExactRational::new(&self.numer + &rhs.numer, self.denom.clone());
        }
        ExactRational::new(
            &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            &self.denom * &rhs.denom,
        )
    }
}

impl<'a> Sub<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &ExactRational) -> ExactRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        // cross-cancel first so the gcds stay on the smaller operands
        let g1 = gcd(&self.numer, &rhs.denom);
        let g2 = gcd(&rhs.numer, &self.denom);
        ExactRational {
            numer: (&self.numer / &g1) * (&rhs.numer / &g2),
            denom: (&self.denom / &g2) * (&rhs.denom / &g1),
        }
        .normalized()
    }
}

impl<'a> Div<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    /// # Panics
    /// On division by zero.
    fn div(self, rhs: &ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero");
        self * &rhs.recip()
    }
}

impl ExactRational {
    fn normalized(mut self) -> Self {
        if self.numer.is_zero() {
            self.denom = BigInt::one();
        } else if self.denom.is_negative() {
            self.numer = -self.numer;
            self.denom = -self.denom;
        }
        self
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

/// Renders as `numerator/denominator`, always with both parts.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `a/b` or a bare integer `a`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "rational",
            input: s.to_string(),
        };
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let numer: BigInt = n.parse().map_err(|_| err())?;
        let denom: BigInt = d.parse().map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        Ok(ExactRational::new(numer, denom))
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
