//! Closed-form Moore-Penrose inverse in Cℓ₂.
//!
//! The prime involution plays the part of the matrix transpose
//! (`L(a′) = L(a)ᵀ`), so `x = a⁺` is the unique element with
//! `axa = a`, `xax = x`, `(ax)′ = ax`, `(xa)′ = xa`.

use num_rational::BigRational;

use crate::element::Cl2Element;
use crate::error::Result;
use crate::matrix::{mp_oracle, RatMatrix};
use crate::rep::{left_matrix, phi_matrix, right_matrix};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MpCase {
    Zero,
    Invertible,
    ZeroDivisor,
}

impl MpCase {
    pub fn name(self) -> &'static str {
        match self {
            MpCase::Zero => "zero",
            MpCase::Invertible => "invertible",
            MpCase::ZeroDivisor => "zero-divisor",
        }
    }
}

pub fn mp_case(a: &Cl2Element) -> MpCase {
    if a.is_zero() {
        MpCase::Zero
    } else if a.h().is_zero() {
        MpCase::ZeroDivisor
    } else {
        MpCase::Invertible
    }
}

/// `|z₁|² = a₀² + a₃²`; positive for every nonzero zero divisor.
fn z1_norm(a: &Cl2Element) -> Scalar {
    a.split().z1.norm_sq()
}

/// The Moore-Penrose inverse `a⁺`:
/// `0` for `a = 0`, `ā/H(a)` when `H(a) ≠ 0`, and `a′/(4(a₀² + a₃²))` otherwise.
pub fn mp(a: &Cl2Element) -> Cl2Element {
    match mp_case(a) {
        MpCase::Zero => Cl2Element::zero(),
        MpCase::Invertible => a.inverse().expect("H(a) is nonzero"),
        MpCase::ZeroDivisor => {
            let denom = z1_norm(a).scale(&BigRational::from_integer(4.into()));
            a.prime()
                .try_div_scalar(&denom)
                .expect("a₀² + a₃² > 0 for a nonzero zero divisor")
        }
    }
}

/// Whether `x` satisfies the four Penrose equations for `a`.
pub fn verify_penrose(a: &Cl2Element, x: &Cl2Element) -> bool {
    let ax = a * x;
    let xa = x * a;
    &ax * a == *a && &xa * x == *x && ax.prime() == ax && xa.prime() == xa
}

/// `L(a⁺) = L(a)⁺` and `R(a⁺) = R(a)⁺`, the right sides from the matrix oracle.
pub fn mp_matrix_consistency(a: &Cl2Element) -> Result<bool> {
    let x = mp(a);
    Ok(left_matrix(&x)? == mp_oracle(&left_matrix(a)?)
        && right_matrix(&x)? == mp_oracle(&right_matrix(a)?))
}

/// φ(a)⁺ as φ(a⁺); the zero element maps to the zero matrix.
pub fn phi_mp(a: &Cl2Element) -> Result<RatMatrix> {
    a.rational_coeffs()?;
    phi_matrix(&mp(a))
}
