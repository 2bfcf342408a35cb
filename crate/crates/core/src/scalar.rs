//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Every coefficient in this crate is a `Rational`; nothing is ever rounded.
//! `GaussRational` (a + b·i with rational a, b) carries the complex
//! coefficients of polynomials in `z`, `z̄` before they are split into real
//! linear systems.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num/den` as a rational. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).ok()?;
            let d = BigInt::from_str(den.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// Complex scalar with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::zero() }
    }

    pub fn one() -> Self {
        GaussRational { re: Rational::one(), im: Rational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat_int(v))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign for GaussRational {
    fn sub_assign(&mut self, rhs: GaussRational) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        &self * &rhs
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign for GaussRational {
    fn mul_assign(&mut self, rhs: GaussRational) {
        let v = &*self * &rhs;
        *self = v;
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussRational {
    fmt_gauss!();
}

macro_rules! fmt_gauss {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.im.is_zero() {
                return write!(f, "{}", rational_to_string(&self.re));
            }
            if self.re.is_zero() {
                return write!(f, "{}*i", rational_to_string(&self.im));
            }
            if self.im.is_negative() {
                write!(
                    f,
                    "{} - {}*i",
                    rational_to_string(&self.re),
                    rational_to_string(&-self.im.clone())
                )
            } else {
                write!(f, "{} + {}*i", rational_to_string(&self.re), rational_to_string(&self.im))
            }
        }
    };
}
use fmt_gauss;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_string_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "12345678901234567890/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_to_string(&r), s);
        }
        assert_eq!(rational_to_string(&parse_rational("2/4").unwrap()), "1/2");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn gauss_arithmetic() {
        let i = GaussRational::i();
        assert_eq!(i.clone() * i.clone(), GaussRational::from_int(-1));
        let z = GaussRational::new(rat_int(1), rat_int(2));
        assert_eq!(z.conj() * z.clone(), GaussRational::from_int(5));
        assert!(!z.is_real());
        assert!(z.clone().sub(z).is_zero());
    }

    proptest! {
        // (a/b + c/d) - c/d = a/b, exactly.
        #[test]
        fn add_sub_round_trip(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!((x.clone() + y.clone()) - y, x);
        }

        #[test]
        fn always_lowest_terms(a in -1000i64..1000, b in 1i64..1000) {
            let x = rat(a, b);
            prop_assert!(x.denom().is_positive());
            let g = num_integer::gcd(x.numer().clone(), x.denom().clone());
            prop_assert!(g.is_one() || x.numer().is_zero());
        }
    }
}
