use std::cmp::Ordering;

use super::dyadic::{Direction, Dyadic};
use crate::error::{Error, Result};
use crate::rational::{ExactRational, Rounding};

/// A closed interval `[lower, upper]` certified to contain a real value.
///
/// Every operation rounds outward, so the result contains the exact result
/// for any choice of points in the operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealEnclosure {
    lower: Dyadic,
    upper: Dyadic,
}

impl RealEnclosure {
    pub fn new(lower: Dyadic, upper: Dyadic) -> Result<Self> {
        if lower > upper {
            return Err(Error::EmptyEnclosure);
        }
        Ok(RealEnclosure { lower, upper })
    }

    pub fn point(value: Dyadic) -> Self {
        RealEnclosure {
            lower: value.clone(),
            upper: value,
        }
    }

    /// Encloses `q` with endpoints of at most `bits` significant bits.
    pub fn from_rational(q: &ExactRational, bits: u32) -> Self {
        RealEnclosure {
            lower: Dyadic::from_rational(q, bits, Direction::Down),
            upper: Dyadic::from_rational(q, bits, Direction::Up),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::point(Dyadic::from_int(v))
    }

    pub fn lower(&self) -> &Dyadic {
        &self.lower
    }

    pub fn upper(&self) -> &Dyadic {
        &self.upper
    }

    pub fn lower_rational(&self) -> ExactRational {
        self.lower.to_rational()
    }

    pub fn upper_rational(&self) -> ExactRational {
        self.upper.to_rational()
    }

    pub fn width(&self) -> Dyadic {
        self.upper.sub(&self.lower)
    }

    pub fn midpoint(&self) -> ExactRational {
        let sum = self.lower.add(&self.upper).to_rational();
        &sum * &ExactRational::new(1, 2)
    }

    pub fn contains(&self, q: &ExactRational) -> bool {
        self.lower.cmp_rational(q).is_le() && self.upper.cmp_rational(q).is_ge()
    }

    pub fn is_positive(&self) -> bool {
        self.lower.is_positive()
    }

    /// Certified comparison with an exact value; `None` when `q` lies inside.
    pub fn compare_rational(&self, q: &ExactRational) -> Option<Ordering> {
        if self.upper.cmp_rational(q).is_lt() {
            Some(Ordering::Less)
        } else if self.lower.cmp_rational(q).is_gt() {
            Some(Ordering::Greater)
        } else if self.lower == self.upper {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certified comparison of two enclosed values; `None` when they overlap.
    pub fn compare(&self, other: &RealEnclosure) -> Option<Ordering> {
        if self.upper < other.lower {
            Some(Ordering::Less)
        } else if self.lower > other.upper {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// True when `width <= 2^-bits · |lower|` (and the enclosure excludes 0).
    pub fn relative_width_within(&self, bits: u32) -> bool {
        if !self.is_positive() && !self.upper.is_negative() {
            return false;
        }
        let scale = if self.is_positive() {
            self.lower.clone()
        } else {
            self.upper.neg()
        };
        let w = self.width();
        w <= scale.mul(&Dyadic::new(1, -(bits as i64)))
    }

    fn outward(lower: Dyadic, upper: Dyadic, bits: u32) -> Self {
        RealEnclosure {
            lower: lower.round(bits, Direction::Down),
            upper: upper.round(bits, Direction::Up),
        }
    }

    pub fn add(&self, other: &RealEnclosure, bits: u32) -> Self {
        Self::outward(self.lower.add(&other.lower), self.upper.add(&other.upper), bits)
    }

    pub fn sub(&self, other: &RealEnclosure, bits: u32) -> Self {
        Self::outward(self.lower.sub(&other.upper), self.upper.sub(&other.lower), bits)
    }

    pub fn mul(&self, other: &RealEnclosure, bits: u32) -> Self {
        let products = [
            self.lower.mul(&other.lower),
            self.lower.mul(&other.upper),
            self.upper.mul(&other.lower),
            self.upper.mul(&other.upper),
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self::outward(lo, hi, bits)
    }

    /// Fails when the divisor enclosure contains zero.
    pub fn div(&self, other: &RealEnclosure, bits: u32) -> Result<Self> {
        if !(other.is_positive() || other.upper.is_negative()) {
            return Err(Error::NotPositive);
        }
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lower, &self.upper] {
            for b in [&other.lower, &other.upper] {
                let d = a.div(b, bits, Direction::Down);
                let u = a.div(b, bits, Direction::Up);
                lo = Some(match lo {
                    Some(x) if x <= d => x,
                    _ => d,
                });
                hi = Some(match hi {
                    Some(x) if x >= u => x,
                    _ => u,
                });
            }
        }
        Ok(Self::outward(lo.unwrap(), hi.unwrap(), bits))
    }

    /// Square root of an enclosure of a non-negative value.
    pub fn sqrt(&self, bits: u32) -> Result<Self> {
        if self.lower.is_negative() {
            return Err(Error::NotPositive);
        }
        Ok(RealEnclosure {
            lower: self.lower.sqrt(bits, Direction::Down),
            upper: self.upper.sqrt(bits, Direction::Up),
        })
    }

    /// Integer power of an enclosure of a non-negative value.
    pub fn pow(&self, exp: u64, bits: u32) -> Result<Self> {
        if self.lower.is_negative() {
            return Err(Error::NotPositive);
        }
        Ok(RealEnclosure {
            lower: self.lower.pow(exp, bits, Direction::Down),
            upper: self.upper.pow(exp, bits, Direction::Up),
        })
    }

    /// Both endpoints as decimals with `digits` significant digits, rounded
    /// outward.
    pub fn to_decimal_bounds(&self, digits: usize) -> (String, String) {
        (
            self.lower_rational().to_decimal(digits, Rounding::Floor),
            self.upper_rational().to_decimal(digits, Rounding::Ceil),
        )
    }
}
