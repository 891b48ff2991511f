//! Exact rational numbers.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced fraction with a positive denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac(BigRational);

impl Frac {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Frac(BigRational::new(num, den)))
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Frac(BigRational::from_integer(n.into()))
    }

    /// `num/den` from machine integers. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Frac::new(num.into(), den.into()).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Frac(BigRational::zero())
    }

    pub fn one() -> Self {
        Frac(BigRational::one())
    }

    pub fn num(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn den(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Frac(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Frac(self.0.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        Frac(num_traits::Pow::pow(&self.0, e))
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        let (q, r) = self.num().div_mod_floor(self.den());
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Frac) -> Frac {
        Frac((&self.0 + &other.0) / BigInt::from(2))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for Frac {
    fn from(r: BigRational) -> Self {
        Frac(r)
    }
}

impl From<BigInt> for Frac {
    fn from(n: BigInt) -> Self {
        Frac::from_int(n)
    }
}

impl From<i64> for Frac {
    fn from(n: i64) -> Self {
        Frac::from_int(n)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num(), self.den())
    }
}

impl FromStr for Frac {
    type Err = Error;

    /// Accepts `n` or `n/d` with decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Frac::new(n, d)
            }
            None => Ok(Frac::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Frac> for &Frac {
            type Output = Frac;
            fn $m(self, rhs: &Frac) -> Frac {
                Frac((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Frac> for Frac {
            type Output = Frac;
            fn $m(self, rhs: Frac) -> Frac {
                Frac(self.0.$m(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-self.0)
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_reduced_with_positive_denominator() {
        let f = Frac::new(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(f.num(), &BigInt::from(-3));
        assert_eq!(f.den(), &BigInt::from(2));
        assert_eq!(f.to_string(), "-3/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Frac::new(1.into(), 0.into()), Err(Error::DivisionByZero));
        assert!("1/0".parse::<Frac>().is_err());
    }

    #[test]
    fn parse_and_ceil() {
        let f: Frac = "-7/2".parse().unwrap();
        assert_eq!(f.ceil(), BigInt::from(-3));
        assert_eq!("5".parse::<Frac>().unwrap().ceil(), BigInt::from(5));
        assert_eq!("11/4".parse::<Frac>().unwrap().ceil(), BigInt::from(3));
        assert!("x".parse::<Frac>().is_err());
    }

    #[test]
    fn midpoint_and_sign() {
        let m = Frac::ratio(-1, 2).midpoint(&Frac::ratio(3, 2));
        assert_eq!(m, Frac::ratio(1, 2));
        assert_eq!(Frac::ratio(-1, 3).signum(), -1);
        assert_eq!(Frac::zero().signum(), 0);
    }
}
