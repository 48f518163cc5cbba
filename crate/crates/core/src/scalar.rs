//! Exact coefficients: rationals and elements of a real quadratic field `Q(sqrt(d))`.
//!
//! A [`Scalar`] is either a rational number or `p + q*sqrt(d)` with `q != 0` and `d > 1`
//! square-free. A quadratic value whose radical part cancels collapses back to
//! [`Scalar::Rational`], so equality is structural.
//!
//! Arithmetic between two quadratic scalars with different radicands has no meaning in
//! this crate and panics. Callers that mix inputs of unknown origin check
//! [`Scalar::compatible`] first; [`crate::Element`] does this for every operation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Largest trial divisor used when extracting square factors from a radicand.
const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic(QuadraticSurd),
}

/// `rational + radical * sqrt(radicand)` with a nonzero radical part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    rational: BigRational,
    radical: BigRational,
    radicand: u64,
}

impl QuadraticSurd {
    pub fn rational(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical(&self) -> &BigRational {
        &self.radical
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_integer(value: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom`. Panics on a zero denominator.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_rational(value: BigRational) -> Self {
        Scalar::Rational(value)
    }

    /// Builds `rational + radical*sqrt(radicand)`.
    ///
    /// The radicand must be square-free and greater than one. A zero radical part yields a
    /// rational scalar.
    pub fn quadratic(
        rational: BigRational,
        radical: BigRational,
        radicand: u64,
    ) -> Result<Self, AlgebraError> {
        if radicand < 2 || !is_square_free(radicand) {
            return Err(AlgebraError::InvalidRadicand(radicand));
        }
        Ok(Self::quadratic_unchecked(rational, radical, radicand))
    }

    fn quadratic_unchecked(rational: BigRational, radical: BigRational, radicand: u64) -> Self {
        if radical.is_zero() {
            Scalar::Rational(rational)
        } else {
            Scalar::Quadratic(QuadraticSurd {
                rational,
                radical,
                radicand,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quadratic(_) => None,
        }
    }

    /// The radicand `d` of a quadratic scalar, `None` for rationals.
    pub fn radicand(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Quadratic(q) => Some(q.radicand),
        }
    }

    /// Rational part `p` of `p + q*sqrt(d)`.
    pub fn rational_part(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Quadratic(q) => q.rational.clone(),
        }
    }

    /// Radical part `q` of `p + q*sqrt(d)`; zero for rationals.
    pub fn radical_part(&self) -> BigRational {
        match self {
            Scalar::Rational(_) => BigRational::zero(),
            Scalar::Quadratic(q) => q.radical.clone(),
        }
    }

    /// Two scalars can be combined unless they live in different quadratic fields.
    pub fn compatible(&self, other: &Scalar) -> bool {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// `p - q*sqrt(d)`.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => self.clone(),
            Scalar::Quadratic(q) => Scalar::Quadratic(QuadraticSurd {
                rational: q.rational.clone(),
                radical: -q.radical.clone(),
                radicand: q.radicand,
            }),
        }
    }

    /// Field norm `p^2 - d*q^2`, which is `p^2` for rationals.
    pub fn norm(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r * r,
            Scalar::Quadratic(q) => {
                let d = BigRational::from_integer(BigInt::from(q.radicand));
                &q.rational * &q.rational - d * &q.radical * &q.radical
            }
        }
    }

    /// Sign as a real number: `Less`, `Equal` or `Greater` than zero.
    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Rational(r) => r.cmp(&BigRational::zero()),
            Scalar::Quadratic(q) => {
                let p_sign = q.rational.cmp(&BigRational::zero());
                let q_sign = q.radical.cmp(&BigRational::zero());
                if p_sign == q_sign || p_sign == Ordering::Equal {
                    return q_sign;
                }
                // Opposite signs: the larger magnitude wins. |p| vs |q|sqrt(d).
                let d = BigRational::from_integer(BigInt::from(q.radicand));
                let p2 = &q.rational * &q.rational;
                let q2d = &q.radical * &q.radical * d;
                if p2 > q2d {
                    p_sign
                } else {
                    q_sign
                }
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Quadratic(q) => {
                // norm is nonzero because d is not a rational square
                let norm = self.norm();
                Some(Scalar::quadratic_unchecked(
                    &q.rational / &norm,
                    -(&q.radical / &norm),
                    q.radicand,
                ))
            }
        }
    }

    fn combine_radicand(&self, other: &Scalar) -> u64 {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "scalars from Q(sqrt({a})) and Q(sqrt({b})) cannot be combined");
                a
            }
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => 0,
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_integer(value)
    }
}

impl From<BigRational> for Scalar {
    fn from(value: BigRational) -> Self {
        Scalar::Rational(value)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let d = self.combine_radicand(rhs);
                Scalar::quadratic_unchecked(
                    self.rational_part() + rhs.rational_part(),
                    self.radical_part() + rhs.radical_part(),
                    d,
                )
            }
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let d = self.combine_radicand(rhs);
                let (p1, q1) = (self.rational_part(), self.radical_part());
                let (p2, q2) = (rhs.rational_part(), rhs.radical_part());
                let dd = BigRational::from_integer(BigInt::from(d));
                Scalar::quadratic_unchecked(&p1 * &p2 + &q1 * &q2 * dd, p1 * q2 + p2 * q1, d)
            }
        }
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;

    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quadratic(q) => Scalar::Quadratic(QuadraticSurd {
                rational: -q.rational.clone(),
                radical: -q.radical.clone(),
                radicand: q.radicand,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($imp:ident $method:ident),*) => {$(
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
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for Scalar {
    /// Rationals print as `a` or `a/b`; quadratic values as `(p+q*sqrt(d))`, or
    /// `(q*sqrt(d))` when the rational part vanishes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quadratic(q) => {
                let d = q.radicand;
                if q.rational.is_zero() {
                    write!(f, "({}*sqrt({d}))", q.radical)
                } else if q.radical.is_negative() {
                    write!(f, "({}-{}*sqrt({d}))", q.rational, -q.radical.clone())
                } else {
                    write!(f, "({}+{}*sqrt({d}))", q.rational, q.radical)
                }
            }
        }
    }
}

pub fn is_square_free(value: u64) -> bool {
    if value == 0 {
        return false;
    }
    // u64 inputs stay below the trial-division limit
    let (k, _) = split_square(&BigUint::from(value)).expect("u64 square-free split");
    k.is_one()
}

/// Writes `m = k^2 * d` with `d` square-free; returns `(k, d)`.
///
/// Trial division runs up to the cube root of the remaining cofactor. What is left then has
/// at most two prime factors, so it is either square-free or a perfect square.
fn split_square(m: &BigUint) -> Result<(BigUint, u64), AlgebraError> {
    let mut rest = m.clone();
    let mut k = BigUint::one();
    let mut d = BigUint::one();
    let mut p = 2u64;
    loop {
        let pb = BigUint::from(p);
        if &pb * &pb * &pb > rest {
            break;
        }
        if p > TRIAL_DIVISION_LIMIT {
            return Err(AlgebraError::Resource(format!(
                "square-free part of {m} needs trial division beyond {TRIAL_DIVISION_LIMIT}"
            )));
        }
        let mut exponent = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            exponent += 1;
        }
        k *= pb.pow(exponent / 2);
        if exponent % 2 == 1 {
            d *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        k *= root;
    } else {
        d *= rest;
    }
    let d = d.to_u64().ok_or_else(|| {
        AlgebraError::Resource(format!("square-free part of {m} does not fit in 64 bits"))
    })?;
    Ok((k, d))
}

/// Exact square root of a positive rational as a [`Scalar`].
///
/// Returns a rational when the argument is a rational square and a value in
/// `Q(sqrt(d))` otherwise. `Ok(None)` for negative input.
pub fn sqrt_rational(value: &BigRational) -> Result<Option<Scalar>, AlgebraError> {
    match value.numer().sign() {
        Sign::Minus => return Ok(None),
        Sign::NoSign => return Ok(Some(Scalar::zero())),
        Sign::Plus => {}
    }
    // sqrt(a/b) = sqrt(a*b)/b
    let ab = (value.numer() * value.denom())
        .to_biguint()
        .expect("positive product");
    let (k, d) = split_square(&ab)?;
    let coefficient = BigRational::new(BigInt::from(k), value.denom().clone());
    if d == 1 {
        Ok(Some(Scalar::Rational(coefficient)))
    } else {
        Ok(Some(Scalar::quadratic_unchecked(
            BigRational::zero(),
            coefficient,
            d,
        )))
    }
}
