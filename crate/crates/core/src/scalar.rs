//! Exact Gaussian rationals `a + bi` with `a, b ∈ ℚ`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `ℚ(i)`.
///
/// Both parts are kept as normalized [`BigRational`]s, so structural equality
/// is field equality. The order is lexicographic on `(re, im)`, which is total
/// and compatible with addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `re + im·i` from small integers.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn real(re: BigRational) -> Self {
        Scalar::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when both parts have denominator 1.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    pub fn conj(&self) -> Scalar {
        Scalar::new(self.re.clone(), -&self.im)
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Scalar::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// Sign used when printing sums: negative iff the first nonzero part is
    /// negative.
    pub fn is_negative(&self) -> bool {
        self < &Scalar::zero()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::real(q)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $imp<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero, like the integer operators. Use
/// [`Scalar::checked_div`] when the divisor may vanish.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division of Scalar by zero")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Lexicographic comparison; the same order `Ord` derives.
pub fn cmp(a: &Scalar, b: &Scalar) -> Ordering {
    a.cmp(b)
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Prints in the scalar literal grammar: `3/4`, `-2`, `1/2+1/3i`, `-1i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write_rational(f, &self.re),
            (true, false) => {
                write_rational(f, &self.im)?;
                f.write_str("i")
            }
            (false, false) => {
                write_rational(f, &self.re)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                write_rational(f, &self.im.abs())?;
                f.write_str("i")
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_halves_and_thirds() {
        assert_eq!(
            Scalar::ratio(1, 2) + Scalar::ratio(1, 3),
            Scalar::ratio(5, 6)
        );
    }

    #[test]
    fn i_squared() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let z = Scalar::gaussian(1, 1);
        let expected = Scalar::ratio(1, 2) - Scalar::ratio(1, 2) * Scalar::i();
        assert_eq!(z.inv().unwrap(), expected);
        // hand expansion: (1+i)(1/2-i/2) = 1/2 - i/2 + i/2 + 1/2 = 1
        assert!((&z * &expected).is_one());
    }

    #[test]
    fn inverse_of_zero() {
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn order_examples() {
        assert_eq!(cmp(&Scalar::zero(), &Scalar::one()), Ordering::Less);
        assert_eq!(cmp(&Scalar::i(), &Scalar::one()), Ordering::Less);
        let a = Scalar::ratio(1, 2) + Scalar::gaussian(0, 3);
        let b = Scalar::ratio(1, 2) + Scalar::i();
        assert_eq!(cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn normalization() {
        let a = Scalar::ratio(2, -4);
        assert_eq!(a, Scalar::ratio(-1, 2));
        assert_eq!(a.re().denom(), &BigInt::from(2));
        assert_eq!(Scalar::ratio(0, 7), Scalar::zero());
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::ratio(3, 4).to_string(), "3/4");
        assert_eq!(Scalar::from_int(-2).to_string(), "-2");
        let z = Scalar::ratio(1, 2) + Scalar::ratio(1, 3) * Scalar::i();
        assert_eq!(z.to_string(), "1/2+1/3i");
        assert_eq!((-Scalar::i()).to_string(), "-1i");
        assert_eq!((Scalar::from_int(2) - Scalar::i()).to_string(), "2-1i");
    }

    #[test]
    fn big_values_do_not_overflow() {
        let mut z = Scalar::from_int(i64::MAX);
        for _ in 0..4 {
            z = &z * &z;
        }
        assert!(z.is_gaussian_integer());
        assert!(z > Scalar::from_int(i64::MAX));
    }
}
