//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the computation paths.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Build `num/den` in lowest terms. Panics on a zero denominator.
    pub fn fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Scalar(self.0.recip())
    }

    /// Generalized binomial coefficient `C(n, k)` over the integers:
    /// zero for `k < 0`, and for `k >= 0` the falling-factorial product
    /// `n(n-1)...(n-k+1)/k!`, which also covers negative `n`
    /// (so `C(-1, 0) = 1`, `C(-1, 1) = -1`, `C(0, 1) = 0`).
    pub fn binomial(n: i64, k: i64) -> Self {
        if k < 0 {
            return Scalar::zero();
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for j in 0..k {
            num *= BigInt::from(n - j);
            den *= BigInt::from(j + 1);
        }
        Scalar(BigRational::new(num, den))
    }
}

impl fmt::Display for Scalar {
    /// Prints `p/q`, or just `p` when the denominator is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = num::rational::ParseRatioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigRational::from_str(s).map(Scalar)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_and_sign() {
        let s = Scalar::fraction(4, -6);
        assert_eq!(s, Scalar::fraction(-2, 3));
        assert_eq!(s.to_string(), "-2/3");
        assert!(s.denom() > &BigInt::from(0));
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(Scalar::binomial(3, 2), Scalar::from_int(3));
        assert_eq!(Scalar::binomial(0, 1), Scalar::zero());
        assert_eq!(Scalar::binomial(-1, 0), Scalar::one());
        assert_eq!(Scalar::binomial(5, -1), Scalar::zero());
        assert_eq!(Scalar::binomial(4, 4), Scalar::one());
        // (u-1)^{-s} = sum_{r>=s} C(r-1, r-s) u^{-r}: first coefficients of 1/(u-1)^2
        assert_eq!(Scalar::binomial(1, 0), Scalar::one());
        assert_eq!(Scalar::binomial(2, 1), Scalar::from_int(2));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..=50, 1i64..=20).prop_map(|(n, d)| Scalar::fraction(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.recip(), Scalar::one());
            }
        }
    }
}
