//! Matrix representations of Cℓ₂: left and right multiplication on ℝ⁴ and
//! the 2×2 isomorphism φ.

use num_rational::BigRational;

use crate::element::Cl2Element;
use crate::error::Result;
use crate::matrix::RatMatrix;

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn signs(s: [i64; 4]) -> RatMatrix {
    RatMatrix::diag(&s.map(int))
}

/// C = diag(1, 1, 1, −1)
pub fn c_matrix() -> RatMatrix {
    signs([1, 1, 1, -1])
}

/// D = diag(1, −1, −1, 1)
pub fn d_matrix() -> RatMatrix {
    signs([1, -1, -1, 1])
}

/// U = diag(1, −1, −1, −1); `U·x⃗` is the coordinate vector of `x̄`.
pub fn u_matrix() -> RatMatrix {
    signs([1, -1, -1, -1])
}

/// Coordinate vector `(x₀, x₁, x₂, x₃)` of a rational element.
pub fn to_vector(x: &Cl2Element) -> Result<Vec<BigRational>> {
    Ok(x.rational_coeffs()?.to_vec())
}

/// Panics unless `v` has four entries.
pub fn from_vector(v: &[BigRational]) -> Cl2Element {
    let c: [BigRational; 4] = v.to_vec().try_into().expect("coordinate vector of length 4");
    Cl2Element::from_rationals(c)
}

/// L(a), the matrix of `x ↦ a·x`.
pub fn left_matrix(a: &Cl2Element) -> Result<RatMatrix> {
    let [a0, a1, a2, a3] = a.rational_coeffs()?;
    Ok(RatMatrix::from_rows(vec![
        vec![a0.clone(), a1.clone(), a2.clone(), -a3.clone()],
        vec![a1.clone(), a0.clone(), a3.clone(), -a2.clone()],
        vec![a2.clone(), -a3.clone(), a0.clone(), a1.clone()],
        vec![a3, -a2, a1, a0],
    ]))
}

/// R(a), the matrix of `x ↦ x·a`.
pub fn right_matrix(a: &Cl2Element) -> Result<RatMatrix> {
    let [a0, a1, a2, a3] = a.rational_coeffs()?;
    Ok(RatMatrix::from_rows(vec![
        vec![a0.clone(), a1.clone(), a2.clone(), -a3.clone()],
        vec![a1.clone(), a0.clone(), -a3.clone(), a2.clone()],
        vec![a2.clone(), a3.clone(), a0.clone(), -a1.clone()],
        vec![a3, a2, -a1, a0],
    ]))
}

/// φ(a) = [[a₀+a₁, a₂+a₃], [a₂−a₃, a₀−a₁]].
pub fn phi_matrix(a: &Cl2Element) -> Result<RatMatrix> {
    let [a0, a1, a2, a3] = a.rational_coeffs()?;
    Ok(RatMatrix::from_rows(vec![
        vec![&a0 + &a1, &a2 + &a3],
        vec![&a2 - &a3, &a0 - &a1],
    ]))
}

/// Outcome of [`structural_identities_check`]: the names of identities that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructuralReport {
    pub failed: Vec<&'static str>,
}

impl StructuralReport {
    pub fn holds(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Checks the transpose, homomorphism and determinant identities linking
/// `a`, `b` with their left and right representations.
pub fn structural_identities_check(a: &Cl2Element, b: &Cl2Element) -> Result<StructuralReport> {
    let (la, ra) = (left_matrix(a)?, right_matrix(a)?);
    let (lb, rb) = (left_matrix(b)?, right_matrix(b)?);
    let (c, d) = (c_matrix(), d_matrix());
    let h = a.h().to_rational().cloned().expect("rational input has rational H");
    let ab = a * b;

    let checks: [(&'static str, bool); 9] = [
        ("R(a) = C L(a)^T C", ra == &(&c * &la.transpose()) * &c),
        ("L(conj a) = D L(a)^T D", left_matrix(&a.conj())? == &(&d * &la.transpose()) * &d),
        ("R(conj a) = D R(a)^T D", right_matrix(&a.conj())? == &(&d * &ra.transpose()) * &d),
        ("L(a') = L(a)^T", left_matrix(&a.prime())? == la.transpose()),
        ("R(a') = R(a)^T", right_matrix(&a.prime())? == ra.transpose()),
        ("L(ab) = L(a) L(b)", left_matrix(&ab)? == &la * &lb),
        ("R(ab) = R(b) R(a)", right_matrix(&ab)? == &rb * &ra),
        ("L(a) R(b) = R(b) L(a)", &la * &rb == &rb * &la),
        ("det L(a) = det R(a) = H(a)^2", {
            let h2 = &h * &h;
            la.det() == h2 && ra.det() == h2
        }),
    ];
    Ok(StructuralReport {
        failed: checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect(),
    })
}
