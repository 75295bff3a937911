//! Elements `a₀ + a₁e₁ + a₂e₂ + a₃e₃` of the Clifford algebra Cℓ₂.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Products of basis elements: `BASIS_PRODUCT[i][j] = (sign, k)` means
/// `eᵢ·eⱼ = sign·eₖ`, with `e₀ = 1`.
const BASIS_PRODUCT: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (1, 0), (1, 3), (1, 2)],
    [(1, 2), (-1, 3), (1, 0), (-1, 1)],
    [(1, 3), (-1, 2), (1, 1), (-1, 0)],
];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cl2Element {
    c: [Scalar; 4],
}

impl Cl2Element {
    pub fn new(c: [Scalar; 4]) -> Self {
        Cl2Element { c }
    }

    pub fn from_rationals(c: [BigRational; 4]) -> Self {
        Cl2Element {
            c: c.map(Scalar::from),
        }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cl2Element {
            c: c.map(Scalar::from_int),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        let mut c: [Scalar; 4] = Default::default();
        c[0] = s;
        Cl2Element { c }
    }

    /// The basis element `eᵢ` (`e₀ = 1`).
    pub fn basis(i: usize) -> Self {
        let mut c: [Scalar; 4] = Default::default();
        c[i] = Scalar::one();
        Cl2Element { c }
    }

    pub fn e1() -> Self {
        Self::basis(1)
    }

    pub fn e2() -> Self {
        Self::basis(2)
    }

    pub fn e3() -> Self {
        Self::basis(3)
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[Scalar; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(Scalar::is_rational)
    }

    /// Coefficients as rationals, or `IrrationalCoefficient`.
    pub fn rational_coeffs(&self) -> Result<[BigRational; 4]> {
        let mut out: [BigRational; 4] = Default::default();
        for (o, s) in out.iter_mut().zip(&self.c) {
            *o = s
                .to_rational()
                .cloned()
                .ok_or_else(|| Error::IrrationalCoefficient(self.to_string()))?;
        }
        Ok(out)
    }

    /// The radicand shared by the coefficients (`0` when all are rational).
    pub fn radicand(&self) -> Result<BigInt> {
        let mut r = BigInt::zero();
        for s in &self.c {
            if s.radicand().is_zero() {
                continue;
            }
            if r.is_zero() {
                r = s.radicand().clone();
            } else if &r != s.radicand() {
                return Err(Error::RadicandMismatch {
                    left: r,
                    right: s.radicand().clone(),
                });
            }
        }
        Ok(r)
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        let (l, r) = (self.radicand()?, rhs.radicand()?);
        if l.is_zero() || r.is_zero() || l == r {
            Ok(())
        } else {
            Err(Error::RadicandMismatch { left: l, right: r })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let mut c: [Scalar; 4] = Default::default();
        for (i, o) in c.iter_mut().enumerate() {
            *o = self.c[i].try_add(&rhs.c[i])?;
        }
        Ok(Cl2Element { c })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }

    /// Bilinear product following the multiplication table of the basis.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let mut c: [Scalar; 4] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, k) = BASIS_PRODUCT[i][j];
                let t = a.try_mul(b)?;
                c[k] = if sign > 0 {
                    c[k].try_add(&t)?
                } else {
                    c[k].try_sub(&t)?
                };
            }
        }
        Ok(Cl2Element { c })
    }

    pub fn try_scale(&self, k: &Scalar) -> Result<Self> {
        let mut c: [Scalar; 4] = Default::default();
        for (o, s) in c.iter_mut().zip(&self.c) {
            *o = s.try_mul(k)?;
        }
        Ok(Cl2Element { c })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Cl2Element {
            c: std::array::from_fn(|i| self.c[i].scale(k)),
        }
    }

    pub fn try_div_scalar(&self, k: &Scalar) -> Result<Self> {
        self.try_scale(&k.inv()?)
    }

    /// ā: negates the e₁, e₂, e₃ parts.
    pub fn conj(&self) -> Self {
        let [a0, a1, a2, a3] = &self.c;
        Cl2Element::new([a0.clone(), -a1, -a2, -a3])
    }

    /// a′: negates the e₃ part only.
    pub fn prime(&self) -> Self {
        let [a0, a1, a2, a3] = &self.c;
        Cl2Element::new([a0.clone(), a1.clone(), a2.clone(), -a3])
    }

    /// Real part `a₀`.
    pub fn cre(&self) -> Scalar {
        self.c[0].clone()
    }

    /// Imaginary part `a₁e₁ + a₂e₂ + a₃e₃`.
    pub fn cim(&self) -> Self {
        let mut out = self.clone();
        out.c[0] = Scalar::zero();
        out
    }

    /// `a₀² + a₁² + a₂² + a₃²`.
    pub fn modulus_sq(&self) -> Scalar {
        self.c.iter().map(|s| s * s).fold(Scalar::zero(), |acc, x| acc + x)
    }

    /// H(a) = a₀² − a₁² − a₂² + a₃², the scalar `ā·a`.
    pub fn h(&self) -> Scalar {
        let [a0, a1, a2, a3] = &self.c;
        a0 * a0 - a1 * a1 - a2 * a2 + a3 * a3
    }

    /// G(a) = a₁² + a₂² − a₃², the scalar `Cim(a)²`.
    pub fn g(&self) -> Scalar {
        let [_, a1, a2, a3] = &self.c;
        a1 * a1 + a2 * a2 - a3 * a3
    }

    pub fn is_zero_divisor(&self) -> bool {
        self.h().is_zero()
    }

    pub fn is_central(&self) -> bool {
        self.c[1..].iter().all(Scalar::is_zero)
    }

    /// Two-sided inverse `ā / H(a)`.
    pub fn inverse(&self) -> Result<Self> {
        let h = self.h();
        if h.is_zero() {
            return Err(Error::ZeroDivisor(self.to_string()));
        }
        self.conj().try_div_scalar(&h)
    }

    pub fn split(&self) -> ComplexSplit {
        let [a0, a1, a2, a3] = &self.c;
        ComplexSplit {
            z1: ComplexPart::new(a0.clone(), a3.clone()),
            z2: ComplexPart::new(a2.clone(), a1.clone()),
        }
    }

    /// Float approximation of the coefficients.
    pub fn to_f64(&self) -> [f64; 4] {
        std::array::from_fn(|i| self.c[i].to_f64())
    }
}

/// A member `x + y·e₃` of the commutative subalgebra span{1, e₃} ≅ ℂ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPart {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexPart {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        ComplexPart { re, im }
    }

    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        ComplexPart::new(self.re.clone(), -&self.im)
    }

    pub fn to_element(&self) -> Cl2Element {
        Cl2Element::new([self.re.clone(), Scalar::zero(), Scalar::zero(), self.im.clone()])
    }
}

/// The decomposition `a = z₁ + z₂·e₂` with `z₁ = a₀ + a₃e₃`, `z₂ = a₂ + a₁e₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSplit {
    pub z1: ComplexPart,
    pub z2: ComplexPart,
}

impl ComplexSplit {
    pub fn reconstruct(&self) -> Cl2Element {
        self.z1.to_element() + self.z2.to_element() * Cl2Element::e2()
    }

    /// |z₁|² − |z₂|², which equals H(a).
    pub fn h(&self) -> Scalar {
        self.z1.norm_sq() - self.z2.norm_sq()
    }
}

macro_rules! element_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Cl2Element> for &Cl2Element {
            type Output = Cl2Element;
            fn $method(self, rhs: &Cl2Element) -> Cl2Element {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Cl2Element> for Cl2Element {
            type Output = Cl2Element;
            fn $method(self, rhs: Cl2Element) -> Cl2Element {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cl2Element> for Cl2Element {
            type Output = Cl2Element;
            fn $method(self, rhs: &Cl2Element) -> Cl2Element {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cl2Element> for &Cl2Element {
            type Output = Cl2Element;
            fn $method(self, rhs: Cl2Element) -> Cl2Element {
                self.$method(&rhs)
            }
        }
    };
}

element_binop!(Add, add, try_add);
element_binop!(Sub, sub, try_sub);
element_binop!(Mul, mul, try_mul);

impl Neg for &Cl2Element {
    type Output = Cl2Element;
    fn neg(self) -> Cl2Element {
        Cl2Element {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

impl Neg for Cl2Element {
    type Output = Cl2Element;
    fn neg(self) -> Cl2Element {
        -&self
    }
}

const BASIS_NAMES: [&str; 4] = ["", "e1", "e2", "e3"];

/// Renders in the literal syntax accepted by the CLI, e.g. `1/4 - e1 + 2e3`.
/// Irrational coefficients are parenthesized and joined with `*`.
impl fmt::Display for Cl2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, s) in self.c.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let (negative, body) = if s.is_rational() {
                let neg = s.signum() < 0;
                let mag = if neg { -s } else { s.clone() };
                let text = match (i, mag.to_rational().map(|r| r == &BigRational::from_integer(1.into()))) {
                    (0, _) => mag.to_string(),
                    (_, Some(true)) => BASIS_NAMES[i].to_string(),
                    _ => format!("{}{}", mag, BASIS_NAMES[i]),
                };
                (neg, text)
            } else if s.p().is_zero() {
                let neg = s.q() < &BigRational::zero();
                let mag = if neg { -s } else { s.clone() };
                let text = if i == 0 {
                    mag.to_string()
                } else {
                    format!("{}*{}", mag, BASIS_NAMES[i])
                };
                (neg, text)
            } else {
                let text = if i == 0 {
                    format!("({s})")
                } else {
                    format!("({s})*{}", BASIS_NAMES[i])
                };
                (false, text)
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
