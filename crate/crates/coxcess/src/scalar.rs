//! Exact arithmetic in the real quadratic field Q(√5).
//!
//! Every number the engine touches is an element `a + b·√5` with `a`, `b`
//! arbitrary-precision rationals. Crystallographic root data never populates
//! the √5 part; the H-type and pentagonal dihedral systems do. There is no
//! floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element `a + b√5` of Q(√5), stored in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar { a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar { a: BigRational::one(), b: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { a: BigRational::from_integer(BigInt::from(n)), b: BigRational::zero() }
    }

    /// The rational number `num/den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar { a: BigRational::new(BigInt::from(num), BigInt::from(den)), b: BigRational::zero() }
    }

    /// `(num/den)·√5`.
    pub fn surd(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar { a: BigRational::zero(), b: BigRational::new(BigInt::from(num), BigInt::from(den)) }
    }

    /// The golden ratio φ = (1 + √5)/2 = 2·cos(π/5).
    pub fn golden() -> Self {
        Scalar {
            a: BigRational::new(BigInt::from(1), BigInt::from(2)),
            b: BigRational::new(BigInt::from(1), BigInt::from(2)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (s, t) if s == t => s,
            // Mixed signs: compare a² with 5b². The value has the sign of a
            // exactly when a² > 5b² (√5 is irrational, so equality is impossible
            // for a, b ≠ 0).
            (s, _) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
                match a2.cmp(&b2) {
                    Ordering::Greater => s,
                    Ordering::Less => -s,
                    Ordering::Equal => unreachable!("a² = 5b² with a,b nonzero"),
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        // 1/(a + b√5) = (a - b√5)/(a² - 5b²)
        let norm = &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
        Scalar { a: &self.a / &norm, b: -&self.b / &norm }
    }

    pub fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero");
        let d = BigRational::from_integer(BigInt::from(n));
        Scalar { a: &self.a / &d, b: &self.b / &d }
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = BigRational::from_integer(BigInt::from(5));
        Scalar {
            a: &self.a * &rhs.a + &five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            first = false;
        }
        if !self.b.is_zero() {
            if !first && self.b.is_positive() {
                write!(f, "+")?;
            }
            if self.b == BigRational::from_integer(BigInt::from(-1)) {
                write!(f, "-")?;
            } else if self.b != BigRational::one() {
                write!(f, "{}*", self.b)?;
            }
            write!(f, "sqrt5")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sc(a_n: i64, a_d: i64, b_n: i64, b_d: i64) -> Scalar {
        &Scalar::ratio(a_n, a_d) + &Scalar::surd(b_n, b_d)
    }

    #[test]
    fn zero_iff_both_parts_zero() {
        assert!(Scalar::zero().is_zero());
        assert!(!sc(1, 2, 0, 1).is_zero());
        assert!(!sc(0, 1, -1, 3).is_zero());
        // a + b√5 = 0 with b ≠ 0 would make √5 rational
        let x = sc(7, 3, -2, 5);
        let y = sc(7, 3, -2, 5);
        assert!((&x - &y).is_zero());
    }

    #[test]
    fn golden_ratio_satisfies_quadratic() {
        let phi = Scalar::golden();
        let lhs = &(&phi * &phi) - &phi;
        assert_eq!(lhs, Scalar::one());
    }

    #[test]
    fn sign_with_mixed_parts() {
        // 9/4 - √5 > 0  (81/16 > 5)
        assert_eq!(sc(9, 4, -1, 1).signum(), 1);
        // 2 - √5 < 0
        assert_eq!(sc(2, 1, -1, 1).signum(), -1);
        // -2 + √5 > 0
        assert_eq!(sc(-2, 1, 1, 1).signum(), 1);
        assert_eq!(Scalar::zero().signum(), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let x = sc(3, 7, -2, 3);
        assert_eq!(&x * &x.inv(), Scalar::one());
        let g = Scalar::golden();
        // 1/φ = φ - 1
        assert_eq!(g.inv(), &g - &Scalar::one());
    }

    #[test]
    fn ordering_is_total_and_exact() {
        let phi = Scalar::golden(); // ≈ 1.618
        assert!(phi > Scalar::one());
        assert!(phi < Scalar::from_int(2));
        assert!(Scalar::surd(1, 1) > Scalar::from_int(2));
        assert!(Scalar::surd(1, 1) < Scalar::ratio(9, 4));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::surd(1, 1).to_string(), "sqrt5");
        assert_eq!(sc(1, 2, 1, 2).to_string(), "1/2+1/2*sqrt5");
        assert_eq!(sc(0, 1, -1, 1).to_string(), "-sqrt5");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(an, ad, bn, bd)| sc(an, ad, bn, bd))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            // associativity and commutativity, exact equality
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            // distributivity
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            // inverses
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv(), Scalar::one());
            }
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn order_compatible_with_arithmetic(x in arb_scalar(), y in arb_scalar()) {
            if x < y {
                prop_assert!((&y - &x).is_positive());
            }
            if x == y {
                prop_assert!((&y - &x).is_zero());
            }
        }
    }
}
