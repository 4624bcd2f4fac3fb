use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error};

/// Unbounded nonnegative integer used for every stable-set count.
///
/// Serialized as a decimal string so consumers never overflow.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn pow2(exp: usize) -> Self {
        BigCount(BigUint::one() << exp)
    }

    pub fn pow(base: u64, exp: usize) -> Self {
        BigCount(num_traits::pow(BigUint::from(base), exp))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }

    /// Number of binary digits; zero for zero.
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl Add<&BigCount> for BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(self.0 + &rhs.0)
    }
}

impl Add<u64> for BigCount {
    type Output = BigCount;
    fn add(self, rhs: u64) -> BigCount {
        BigCount(self.0 + rhs)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl Mul<&BigCount> for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(self.0 * &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |a, b| a + b)
    }
}

impl Product for BigCount {
    fn product<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::one(), |a, b| a * b)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid(format!("not a decimal count: {s:?}")));
        }
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| invalid(format!("not a decimal count: {e}")))
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
