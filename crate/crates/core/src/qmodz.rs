//! Elements of Q/Z stored as reduced fractions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// A class in Q/Z, normalized so that `0 <= num < den` and `gcd(num, den) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QmodZ {
    num: i64,
    den: i64,
}

impl QmodZ {
    pub const ZERO: QmodZ = QmodZ { num: 0, den: 1 };

    /// # Panics
    /// If `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        QmodZ { num: num / g, den: den / g }
    }

    pub fn from_ratio(r: Ratio<i128>) -> Self {
        let den = *r.denom();
        let num = r.numer().rem_euclid(den);
        let g = num.gcd(&den);
        QmodZ {
            num: i64::try_from(num / g).expect("Q/Z numerator overflow"),
            den: i64::try_from(den / g).expect("Q/Z denominator overflow"),
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Additive order, which for a reduced fraction is its denominator.
    pub fn order(&self) -> i64 {
        self.den
    }

    /// Multiplies by `n` and returns the result as an integer, if `n * self` is zero in Q/Z
    /// up to this integer lift (i.e. `n * num / den` is integral).
    pub fn scaled_integer(&self, n: i64) -> Option<i64> {
        let p = n as i128 * self.num as i128;
        if p % self.den as i128 == 0 {
            Some((p / self.den as i128) as i64)
        } else {
            None
        }
    }
}

impl Default for QmodZ {
    fn default() -> Self {
        QmodZ::ZERO
    }
}

impl Add for QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: QmodZ) -> QmodZ {
        let l = self.den.lcm(&rhs.den);
        let n = self.num as i128 * (l / self.den) as i128 + rhs.num as i128 * (l / rhs.den) as i128;
        QmodZ::new(n.rem_euclid(l as i128) as i64, l)
    }
}

impl Neg for QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(-self.num, self.den)
    }
}

impl Sub for QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: QmodZ) -> QmodZ {
        self + (-rhs)
    }
}

impl Mul<i64> for QmodZ {
    type Output = QmodZ;
    fn mul(self, k: i64) -> QmodZ {
        let n = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        QmodZ::new(n as i64, self.den)
    }
}

impl std::iter::Sum for QmodZ {
    fn sum<I: Iterator<Item = QmodZ>>(iter: I) -> QmodZ {
        iter.fold(QmodZ::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
