//! Exact numbers of the form `p + q·√r` with rational `p`, `q`.
//!
//! The radicand is kept normalized: it is either `0` (the value is rational)
//! or a square-free integer greater than one. Any rational radicand handed to
//! [`Scalar::sqrt`] or [`Scalar::new`] is reduced to that form, so two scalars
//! are equal exactly when their fields are equal.
//!
//! Arithmetic between two irrational scalars with different radicands would
//! leave the field `ℚ(√r)`; the checked methods report this as
//! [`Error::RadicandMismatch`] and the operator impls panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    p: BigRational,
    q: BigRational,
    r: BigInt,
}

/// Splits a positive integer into `(s, k)` with `n = s²·k` and `k` square-free.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut f = BigInt::from(2u32);
    while &f * &f <= rest {
        let mut count = 0u32;
        while (&rest % &f).is_zero() {
            rest /= &f;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= &f;
        }
        if count % 2 == 1 {
            inside *= &f;
        }
        f += if f == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    inside *= rest;
    (outside, inside)
}

impl Scalar {
    /// Builds `p + q·√r`, normalizing the radicand.
    pub fn new(p: BigRational, q: BigRational, r: BigRational) -> Result<Self> {
        let root = Scalar::sqrt(&r)?;
        Ok(Scalar::from(p) + root.scale(&q))
    }

    pub fn zero() -> Self {
        Scalar {
            p: BigRational::zero(),
            q: BigRational::zero(),
            r: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar::from(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from(BigRational::from_integer(n.into()))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Scalar::from(BigRational::new(n.into(), d.into()))
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt(r: &BigRational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NegativeRadicand(r.to_string()));
        }
        if r.is_zero() {
            return Ok(Scalar::zero());
        }
        // √(n/d) = √(n·d)/d
        let nd = r.numer() * r.denom();
        let (outside, inside) = square_part(&nd);
        let coeff = BigRational::new(outside, r.denom().clone());
        if inside.is_one() {
            Ok(Scalar::from(coeff))
        } else {
            Ok(Scalar {
                p: BigRational::zero(),
                q: coeff,
                r: inside,
            })
        }
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    /// Normalized radicand: `0` for rational values, otherwise square-free `> 1`.
    pub fn radicand(&self) -> &BigInt {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.p)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Scalar::build(&self.p * k, &self.q * k, self.r.clone())
    }

    /// `p − q·√r`.
    pub fn galois_conj(&self) -> Self {
        Scalar::build(self.p.clone(), -&self.q, self.r.clone())
    }

    /// Field norm `p² − q²·r`, a rational that vanishes only at zero.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - &self.q * &self.q * BigRational::from_integer(self.r.clone())
    }

    /// Sign of the real number this scalar denotes.
    pub fn signum(&self) -> i8 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sq == 0 || sp == sq {
            return if sp != 0 { sp } else { sq };
        }
        if sp == 0 {
            return sq;
        }
        // opposite signs: compare p² against q²·r
        let n = self.norm();
        if n.is_positive() {
            sp
        } else {
            sq
        }
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        if self.q.is_zero() {
            return p;
        }
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        p + q * r.sqrt()
    }

    fn build(p: BigRational, q: BigRational, r: BigInt) -> Self {
        if q.is_zero() {
            Scalar {
                p,
                q,
                r: BigInt::zero(),
            }
        } else {
            Scalar { p, q, r }
        }
    }

    fn common_radicand(&self, other: &Scalar) -> Result<BigInt> {
        match (self.r.is_zero(), other.r.is_zero()) {
            (true, _) => Ok(other.r.clone()),
            (_, true) => Ok(self.r.clone()),
            _ if self.r == other.r => Ok(self.r.clone()),
            _ => Err(Error::RadicandMismatch {
                left: self.r.clone(),
                right: other.r.clone(),
            }),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Self> {
        let r = self.common_radicand(other)?;
        Ok(Scalar::build(&self.p + &other.p, &self.q + &other.q, r))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Self> {
        let r = self.common_radicand(other)?;
        Ok(Scalar::build(&self.p - &other.p, &self.q - &other.q, r))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Self> {
        let r = self.common_radicand(other)?;
        let rr = BigRational::from_integer(r.clone());
        let p = &self.p * &other.p + &self.q * &other.q * rr;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Scalar::build(p, q, r))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar::build(
            &self.p / &n,
            -&self.q / &n,
            self.r.clone(),
        ))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl From<BigRational> for Scalar {
    fn from(p: BigRational) -> Self {
        Scalar {
            p,
            q: BigRational::zero(),
            r: BigInt::zero(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

macro_rules! checked_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

checked_binop!(Add, add, try_add);
checked_binop!(Sub, sub, try_sub);
checked_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::build(-&self.p, -&self.q, self.r.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Formats a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return f.write_str(&fmt_rational(&self.p));
        }
        let surd = |q: &BigRational| -> String {
            if q.is_one() {
                format!("sqrt({})", self.r)
            } else {
                format!("{}*sqrt({})", fmt_rational(q), self.r)
            }
        };
        if self.p.is_zero() {
            if self.q.is_negative() {
                write!(f, "-{}", surd(&-&self.q))
            } else {
                f.write_str(&surd(&self.q))
            }
        } else if self.q.is_negative() {
            write!(f, "{} - {}", fmt_rational(&self.p), surd(&-&self.q))
        } else {
            write!(f, "{} + {}", fmt_rational(&self.p), surd(&self.q))
        }
    }
}
