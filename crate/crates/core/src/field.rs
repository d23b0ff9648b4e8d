//! Coefficient fields.
//!
//! Every algebraic routine in the crate is generic over [`Field`]. Two
//! implementations ship: exact rationals ([`Rational`]) and residues modulo a
//! word-sized prime ([`Zp`]).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::ops::{AddAssign, DivAssign, MulAssign, RemAssign, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, NumAssignRef, NumRef, One, ToPrimitive, Zero};

/// Exact rational numbers, stored in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A commutative field usable as polynomial coefficients.
pub trait Field:
    NumAssignRef + NumRef + Neg<Output = Self> + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
    /// Characteristic of the field; `0` for the rationals.
    const CHARACTERISTIC: u64;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    /// Short name used in file headers (`q` or `zp:P`).
    fn tag() -> String;

    /// Integer value if the element is an integer of machine size.
    fn to_i64(&self) -> Option<i64>;
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn tag() -> String {
        "q".to_string()
    }

    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Residue class modulo the prime `P` (odd, below 2^31), stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Zp<const P: u64>(u64);

/// The five-digit prime used as the default modular accelerator.
pub type Zp32003 = Zp<32003>;

impl<const P: u64> Zp<P> {
    pub fn new(v: i64) -> Self {
        Zp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Zp(acc)
    }
}

impl<const P: u64> Debug for Zp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Zp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // symmetric representative reads better in printed polynomials
        let v = self.0 as i64;
        let half = (P / 2) as i64;
        if v > half {
            write!(f, "{}", v - P as i64)
        } else {
            write!(f, "{}", v)
        }
    }
}

impl<const P: u64> Zero for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Zp<P> {
    fn one() -> Self {
        Zp(1)
    }
}

impl<const P: u64> Add for Zp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Zp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Zp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Zp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u64> Mul for Zp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Zp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Div for Zp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}

impl<const P: u64> Rem for Zp<P> {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        Zp(0)
    }
}

impl<const P: u64> Neg for Zp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Zp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

macro_rules! zp_ref_ops {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl<'a, const P: u64> $tr<&'a Zp<P>> for Zp<P> {
            type Output = Zp<P>;
            fn $m(self, o: &'a Zp<P>) -> Zp<P> {
                $tr::$m(self, *o)
            }
        }
        impl<const P: u64> $atr for Zp<P> {
            fn $am(&mut self, o: Zp<P>) {
                *self = $tr::$m(*self, o);
            }
        }
        impl<'a, const P: u64> $atr<&'a Zp<P>> for Zp<P> {
            fn $am(&mut self, o: &'a Zp<P>) {
                *self = $tr::$m(*self, *o);
            }
        }
    )*};
}

zp_ref_ops!(
    Add add AddAssign add_assign,
    Sub sub SubAssign sub_assign,
    Mul mul MulAssign mul_assign,
    Div div DivAssign div_assign,
    Rem rem RemAssign rem_assign
);

impl<const P: u64> Num for Zp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Zp::new)
    }
}

impl<const P: u64> Field for Zp<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_i64(v: i64) -> Self {
        Zp::new(v)
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }

    fn tag() -> String {
        format!("zp:{}", P)
    }

    fn to_i64(&self) -> Option<i64> {
        let v = self.0 as i64;
        Some(if v > (P / 2) as i64 { v - P as i64 } else { v })
    }
}

pub(crate) fn is_negative<F: Field>(c: &F) -> bool {
    match c.to_i64() {
        Some(v) => v < 0,
        None => format!("{}", c).starts_with('-'),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zp_inverse_and_range() {
        let a = Zp32003::new(-5);
        assert_eq!(a.value(), 31998);
        assert_eq!(a * a.inv(), Zp32003::one());
        assert_eq!(Zp32003::new(32003), Zp32003::zero());
    }

    #[test]
    fn rationals_lowest_terms() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.clone() * r.inv(), Rational::one());
    }
}
