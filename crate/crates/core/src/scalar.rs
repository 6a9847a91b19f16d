//! Exact Gaussian-rational scalars.
//!
//! Every quantity in this crate is built from `Rational` (arbitrary-precision
//! rationals, always in lowest terms with positive denominator) or
//! [`GaussianRational`], the complex extension `re + im*i`. Arithmetic never
//! rounds; equality is exact.
//!
//! The canonical text form, used by all JSON I/O, writes a value as
//! `a/b+c/di` with lowest-terms integer parts and `/1` omitted, e.g. `1/2-3i`,
//! `7`, `-2/3i`, `0`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, exact.
pub type Rational = BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// `(re + im*i)` from integer parts.
    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat_int(re), rat_int(im))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the squared modulus, a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiply by a real rational.
    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.re * c, &self.im * c)
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::from_rational(re)
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'b> Div<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Exact division. Panics on a zero divisor.
    fn div(self, rhs: &'b GaussianRational) -> GaussianRational {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "division of GaussianRational by zero");
        let num = self * &rhs.conj();
        GaussianRational::new(num.re / &n, num.im / &n)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// Render a rational in canonical form: `n` when the denominator is 1,
/// otherwise `n/d` with positive `d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", format_rational(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}{}{}i",
            format_rational(&self.re),
            sign,
            format_rational(&self.im.abs())
        )
    }
}

/// Parse a rational in `n` or `n/d` form. Rejects anything else,
/// including a trailing `i`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        what: "rational",
        token: token.to_string(),
    };
    let s = token.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(num_str).map_err(|_| bad())?;
    let denom = match den_str {
        Some(d) => {
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

fn parse_term(term: &str, acc: &mut GaussianRational, seen: &mut (bool, bool)) -> Result<()> {
    let bad = || Error::Parse {
        what: "complex rational",
        token: term.to_string(),
    };
    if let Some(coeff) = term.strip_suffix('i') {
        if seen.1 {
            return Err(bad());
        }
        seen.1 = true;
        acc.im = match coeff {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c).map_err(|_| bad())?,
        };
    } else {
        if seen.0 {
            return Err(bad());
        }
        seen.0 = true;
        acc.re = parse_rational(term).map_err(|_| bad())?;
    }
    Ok(())
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parse the canonical `a/b+c/di` form. Also accepts the shorthand
    /// `i`, `-i`, and either part alone.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                what: "complex rational",
                token: s.to_string(),
            });
        }
        // Split at an interior sign; signs can only start a term since the
        // grammar has no exponents.
        let mut terms: Vec<String> = Vec::new();
        let mut current = String::new();
        for (k, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);

        if terms.len() > 2 {
            return Err(Error::Parse {
                what: "complex rational",
                token: s.to_string(),
            });
        }
        let mut out = GaussianRational::zero();
        let mut seen = (false, false);
        for term in &terms {
            parse_term(term, &mut out, &mut seen)?;
        }
        Ok(out)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
