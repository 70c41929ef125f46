//! Exact scalar types.
//!
//! Everything in this crate is computed exactly. The linear algebra is written
//! once against [`Scalar`] / [`EuclideanScalar`] and instantiated with machine
//! integers, big integers, rationals and the two-element field.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// A commutative ring element with exact arithmetic.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;
}

/// A Euclidean domain (the integers or a field), enough for Hermite and Smith
/// reductions.
pub trait EuclideanScalar: Scalar {
    /// Euclidean size; zero exactly for the zero element.
    fn size(&self) -> u128;

    /// Division with remainder: `self = q * d + r` with `size(r) < size(d)`.
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self);

    /// Inverse of a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Unit `u` such that `u * self` is the canonical associate (non-negative
    /// for the integers, one for non-zero field elements).
    fn normalizing_unit(&self) -> Self;
}

macro_rules! impl_primitive_int {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }

        impl EuclideanScalar for $t {
            fn size(&self) -> u128 {
                self.unsigned_abs() as u128
            }

            fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
                let q = self.div_floor(d);
                (q, *self - q * *d)
            }

            fn unit_inverse(&self) -> Option<Self> {
                match *self {
                    1 => Some(1),
                    -1 => Some(-1),
                    _ => None,
                }
            }

            fn normalizing_unit(&self) -> Self {
                if *self < 0 { -1 } else { 1 }
            }
        }
    )*};
}

impl_primitive_int!(i32, i64, i128);

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl EuclideanScalar for BigInt {
    fn size(&self) -> u128 {
        // Saturating is fine: only the ordering between sizes matters.
        let bits = self.bits();
        if bits >= 127 {
            u128::MAX
        } else {
            let mag = self.magnitude();
            mag.to_u64_digits()
                .iter()
                .rev()
                .fold(0u128, |acc, d| (acc << 64) | u128::from(*d))
        }
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        let (q, r) = self.div_mod_floor(d);
        (q, r)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + Send + Sync + 'static + Scalar,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v))
    }
}

impl<T> EuclideanScalar for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + Send + Sync + 'static + Scalar,
{
    fn size(&self) -> u128 {
        u128::from(!self.is_zero())
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        (self.clone() / d.clone(), Self::zero())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            Self::one()
        } else {
            self.recip()
        }
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub fn from_int(v: i64) -> Self {
        Gf2(v.rem_euclid(2) == 1)
    }
}

impl Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

impl Scalar for Gf2 {
    fn from_i64(v: i64) -> Self {
        Gf2::from_int(v)
    }
}

impl EuclideanScalar for Gf2 {
    fn size(&self) -> u128 {
        u128::from(self.0)
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        assert!(d.0, "division by zero in GF(2)");
        (*self, Gf2::ZERO)
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.0.then_some(Gf2::ONE)
    }

    fn normalizing_unit(&self) -> Self {
        Gf2::ONE
    }
}
