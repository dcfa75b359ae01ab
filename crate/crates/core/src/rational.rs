//! Exact rationals for vertex weights and partition-function values.

use alloc::string::String;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept reduced.
pub type Rational = num_rational::BigRational;

/// A nonnegative exact value of `hom`, `Z` or `Z_b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExactValue(Rational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FractionError {
    #[error("malformed fraction {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("negative value {0:?}")]
    Negative(String),
}

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue(Rational::zero())
    }

    pub fn one() -> Self {
        ExactValue(Rational::one())
    }

    pub fn from_integer(value: BigUint) -> Self {
        ExactValue(Rational::from_integer(BigInt::from_biguint(Sign::Plus, value)))
    }

    /// `numer / denom`; `denom` must be nonzero.
    pub fn from_ratio(numer: BigUint, denom: BigUint) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        ExactValue(Rational::new(BigInt::from_biguint(Sign::Plus, numer), BigInt::from_biguint(Sign::Plus, denom)))
    }

    /// Returns `None` for negative input.
    pub fn from_rational(value: Rational) -> Option<Self> {
        if value.is_negative() {
            None
        } else {
            Some(ExactValue(value))
        }
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> BigUint {
        self.0.numer().magnitude().clone()
    }

    pub fn denom(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    /// The integer value, if the denominator is one.
    pub fn to_integer(&self) -> Option<BigUint> {
        self.is_integer().then(|| self.numer())
    }

    pub fn pow(&self, exp: u32) -> Self {
        ExactValue(num_traits::Pow::pow(&self.0, exp))
    }
}

impl Mul for ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: ExactValue) -> ExactValue {
        ExactValue(self.0 * rhs.0)
    }
}

impl Mul<&ExactValue> for &ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: &ExactValue) -> ExactValue {
        ExactValue(&self.0 * &rhs.0)
    }
}

impl From<u64> for ExactValue {
    fn from(v: u64) -> Self {
        ExactValue::from_integer(BigUint::from(v))
    }
}

/// Integers print as `p`, everything else as reduced `p/q`.
impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_fraction(f, &self.0)
    }
}

impl FromStr for ExactValue {
    type Err = FractionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_fraction(s)?;
        ExactValue::from_rational(r).ok_or_else(|| FractionError::Negative(s.into()))
    }
}

pub(crate) fn write_fraction(f: &mut impl fmt::Write, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn fraction_string(r: &Rational) -> String {
    let mut s = String::new();
    write_fraction(&mut s, r).expect("writing to a String cannot fail");
    s
}

/// Parses `p` or `p/q` (optional leading `-`, no decimals, no whitespace).
pub fn parse_fraction(s: &str) -> Result<Rational, FractionError> {
    let malformed = || FractionError::Malformed(s.into());
    let parse_int = |t: &str| -> Result<BigInt, FractionError> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        BigInt::from_str(t).map_err(|_| malformed())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            if q.starts_with('-') {
                return Err(malformed());
            }
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(FractionError::ZeroDenominator(s.into()));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `p / q` as a [`Rational`], for literals in tests and constructions.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}
