//! Similarity (`au = ub`) and pseudosimilarity (`au = ūb`) with invertible
//! witnesses `u`.
//!
//! Every non-real `a` is similar to exactly one of `a₀ + √G·e₂` (G > 0),
//! `a₀ + √(−G)·e₃` (G < 0) or `a₀ + e₂ + e₃` (G = 0), where `G = G(a)`.
//! Witness coefficients live in `ℚ(√|G|)`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::element::Cl2Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalKind {
    PosG,
    NegG,
    ZeroG,
    Central,
}

impl CanonicalKind {
    pub fn name(self) -> &'static str {
        match self {
            CanonicalKind::PosG => "positive-g",
            CanonicalKind::NegG => "negative-g",
            CanonicalKind::ZeroG => "zero-g",
            CanonicalKind::Central => "central",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub kind: CanonicalKind,
    pub a0: BigRational,
    pub g: BigRational,
}

impl CanonicalForm {
    /// The representative element of the similarity class.
    pub fn element(&self) -> Cl2Element {
        let a0 = Scalar::from(self.a0.clone());
        let z = Scalar::zero();
        match self.kind {
            CanonicalKind::Central => Cl2Element::scalar(a0),
            CanonicalKind::PosG => {
                let root = Scalar::sqrt(&self.g).expect("g > 0");
                Cl2Element::new([a0, z.clone(), root, z])
            }
            CanonicalKind::NegG => {
                let root = Scalar::sqrt(&-&self.g).expect("g < 0");
                Cl2Element::new([a0, z.clone(), z, root])
            }
            CanonicalKind::ZeroG => Cl2Element::new([a0, z, Scalar::one(), Scalar::one()]),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.element())
    }
}

/// An invertible element realizing a similarity or pseudosimilarity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: Cl2Element,
    pub h_u: Scalar,
}

impl Witness {
    fn checked(u: Cl2Element) -> Result<Self> {
        let h_u = u.h();
        if h_u.is_zero() {
            return Err(Error::InternalConsistency(format!("witness {u} is a zero divisor")));
        }
        Ok(Witness { u, h_u })
    }
}

fn rat(s: &Scalar) -> BigRational {
    s.to_rational().cloned().expect("rational coefficient")
}

/// Canonical form of `a` and a witness `u` with `a·u = u·κ`, i.e. `u⁻¹au = κ`.
pub fn canonical(a: &Cl2Element) -> Result<(CanonicalForm, Witness)> {
    let [a0, a1, a2, a3] = a.rational_coeffs()?;
    let g = rat(&a.g());
    let s = |x: &BigRational| Scalar::from(x.clone());
    let zero = Scalar::zero();

    let (kind, u) = if a.is_central() {
        (CanonicalKind::Central, Cl2Element::one())
    } else if g.is_negative() {
        let root = Scalar::sqrt(&-&g)?;
        let u = if !a3.is_positive() {
            Cl2Element::new([s(&a2), s(&a3) - &root, zero, s(&a1)])
        } else {
            Cl2Element::new([s(&a3) + &root, s(&a2), -s(&a1), zero])
        };
        (CanonicalKind::NegG, u)
    } else if g.is_positive() {
        let root = Scalar::sqrt(&g)?;
        let u = if !a2.is_positive() {
            Cl2Element::new([s(&a3), s(&a2) - &root, -s(&a1), zero])
        } else {
            Cl2Element::new([s(&a2) + &root, s(&a3), zero, s(&a1)])
        };
        (CanonicalKind::PosG, u)
    } else {
        let one = BigRational::from_integer(1.into());
        let u = if a2 != a3 {
            Cl2Element::from_rationals([BigRational::zero(), a1, &one + &a2, &one + &a3])
        } else {
            // G = a₁² = 0 here, so a = a₀ + c(e₂ + e₃) with c ≠ 0 and H(u) = 4c
            Cl2Element::from_rationals([&one + &a2, &a2 - &one, BigRational::zero(), BigRational::zero()])
        };
        (CanonicalKind::ZeroG, u)
    };

    let form = CanonicalForm { kind, a0, g };
    let witness = Witness::checked(u)?;
    let kappa = form.element();
    if a.try_mul(&witness.u)? != witness.u.try_mul(&kappa)? {
        return Err(Error::InternalConsistency(format!(
            "canonical witness {} fails for {a}",
            witness.u
        )));
    }
    Ok((form, witness))
}

/// Equal real parts and equal G for non-real elements; equality for real ones.
pub fn is_similar(a: &Cl2Element, b: &Cl2Element) -> bool {
    match (a.is_central(), b.is_central()) {
        (true, true) => a == b,
        (false, false) => a.cre() == b.cre() && a.g() == b.g(),
        _ => false,
    }
}

/// Some `u` with `H(u) ≠ 0` and `u⁻¹au = b`, built as `u_a·u_b⁻¹` from the
/// canonical witnesses of `a` and `b`.
pub fn similarity_witness(a: &Cl2Element, b: &Cl2Element) -> Result<Witness> {
    a.rational_coeffs()?;
    b.rational_coeffs()?;
    if !is_similar(a, b) {
        return Err(Error::NotSimilar(a.to_string(), b.to_string()));
    }
    if a.is_central() {
        return Witness::checked(Cl2Element::one());
    }
    let (_, wa) = canonical(a)?;
    let (_, wb) = canonical(b)?;
    let u = wa.u.try_mul(&wb.u.inverse()?)?;
    let witness = Witness::checked(u)?;
    if a.try_mul(&witness.u)? != witness.u.try_mul(b)? {
        return Err(Error::InternalConsistency(format!(
            "similarity witness {} fails for {a} ~ {b}",
            witness.u
        )));
    }
    Ok(witness)
}

/// `ā + b = 0`, or `H(a) = H(b)` with `H(ā + b) ≠ 0`; two zeros are
/// pseudosimilar, a zero and a nonzero element are not.
pub fn is_pseudosimilar(a: &Cl2Element, b: &Cl2Element) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => true,
        (false, false) => {
            let s = a.conj() + b;
            s.is_zero() || (a.h() == b.h() && !s.h().is_zero())
        }
        _ => false,
    }
}

/// Some `u` with `H(u) ≠ 0` and `a·u = ū·b`, verified before it is returned.
pub fn pseudosimilarity_witness(a: &Cl2Element, b: &Cl2Element) -> Result<Witness> {
    if !is_pseudosimilar(a, b) {
        return Err(Error::NotPseudosimilar(a.to_string(), b.to_string()));
    }
    let u = if a.is_zero() {
        Cl2Element::one()
    } else {
        let s = a.conj() + b;
        if !s.is_zero() {
            s
        } else {
            let [a0, a1, a2, a3] = a.coeffs().clone();
            let z = Scalar::zero();
            let sq = |x: &Scalar| x * x;
            if !(sq(&a0) + sq(&a3)).is_zero() {
                Cl2Element::new([a3, z.clone(), z, a0])
            } else if !(sq(&a1) - sq(&a3)).is_zero() {
                Cl2Element::new([z.clone(), a3, z, a1])
            } else {
                Cl2Element::new([z.clone(), z, a3, a2])
            }
        }
    };
    let witness = Witness::checked(u)?;
    if a.try_mul(&witness.u)? != witness.u.conj().try_mul(b)? {
        return Err(Error::InternalConsistency(format!(
            "pseudosimilarity witness {} fails for {a}, {b}",
            witness.u
        )));
    }
    Ok(witness)
}
