//! General solutions of `axb = d`, `ax = xb` and `ax = x̄b`.
//!
//! Solution sets are stored as a particular solution plus a basis of the
//! homogeneous solutions, so the free parameter `y` of the closed forms is
//! replaced by coordinates with respect to that basis.

use num_rational::BigRational;
use num_traits::Zero;

use crate::element::Cl2Element;
use crate::error::Result;
use crate::matrix::RatMatrix;
use crate::mp::mp;
use crate::rep::{from_vector, left_matrix, right_matrix, to_vector};
use crate::spectrum::{f_matrix, w_matrix};

/// `{particular + Σ tᵢ·basisᵢ}`, or the empty set when unsolvable.
///
/// An unsolvable set still carries the homogeneous basis (the kernel of the
/// linear map), so `dimension()` is always `4 − rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub solvable: bool,
    pub particular: Option<Cl2Element>,
    pub homogeneous_basis: Vec<Cl2Element>,
}

impl SolutionSet {
    pub fn unsolvable(homogeneous_basis: Vec<Cl2Element>) -> Self {
        SolutionSet {
            solvable: false,
            particular: None,
            homogeneous_basis,
        }
    }

    fn homogeneous(basis: Vec<Cl2Element>) -> Self {
        SolutionSet {
            solvable: true,
            particular: Some(Cl2Element::zero()),
            homogeneous_basis: basis,
        }
    }

    pub fn dimension(&self) -> usize {
        self.homogeneous_basis.len()
    }

    /// `particular + Σ tᵢ·basisᵢ`; `None` when unsolvable.
    ///
    /// Panics if `params` does not have one entry per basis element.
    pub fn member(&self, params: &[BigRational]) -> Option<Cl2Element> {
        assert_eq!(params.len(), self.dimension(), "one parameter per basis element");
        let base = self.particular.clone()?;
        Some(
            self.homogeneous_basis
                .iter()
                .zip(params)
                .fold(base, |acc, (h, t)| acc + h.scale(t)),
        )
    }

    /// Whether `x` belongs to the solution set.
    pub fn contains(&self, x: &Cl2Element) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        let Ok(diff) = to_vector(&(x - p)) else {
            return false;
        };
        if diff.iter().all(Zero::is_zero) {
            return true;
        }
        let mut cols = self.basis_vectors();
        let before = rank_of(&cols);
        cols.push(diff);
        rank_of(&cols) == before
    }

    /// Whether the homogeneous parts span the same subspace.
    pub fn same_span(&self, other: &SolutionSet) -> bool {
        let (a, b) = (self.basis_vectors(), other.basis_vectors());
        let ra = rank_of(&a);
        if ra != rank_of(&b) {
            return false;
        }
        let joint: Vec<_> = a.into_iter().chain(b).collect();
        rank_of(&joint) == ra
    }

    fn basis_vectors(&self) -> Vec<Vec<BigRational>> {
        self.homogeneous_basis
            .iter()
            .map(|h| to_vector(h).expect("rational basis"))
            .collect()
    }
}

fn rank_of(cols: &[Vec<BigRational>]) -> usize {
    if cols.is_empty() {
        0
    } else {
        RatMatrix::from_columns(cols).rank()
    }
}

fn to_elements(vectors: Vec<Vec<BigRational>>) -> Vec<Cl2Element> {
    vectors.iter().map(|v| from_vector(v)).collect()
}

/// All `x` with `a·x·b = d`.
///
/// Solvable iff `a a⁺ d b⁺ b = d`; then `x = a⁺ d b⁺ + y − a⁺a y b b⁺`.
pub fn solve_axb(a: &Cl2Element, b: &Cl2Element, d: &Cl2Element) -> Result<SolutionSet> {
    for e in [a, b, d] {
        e.rational_coeffs()?;
    }
    let (ap, bp) = (mp(a), mp(b));
    let projector = &RatMatrix::identity(4)
        - &(&left_matrix(&(&ap * a))? * &right_matrix(&(b * &bp))?);
    let basis = to_elements(projector.column_space());
    if &(&(a * &ap) * d) * &(&bp * b) != *d {
        return Ok(SolutionSet::unsolvable(basis));
    }
    Ok(SolutionSet {
        solvable: true,
        particular: Some(&(&ap * d) * &bp),
        homogeneous_basis: basis,
    })
}

/// All `x` with `a·x = d`.
pub fn solve_ax(a: &Cl2Element, d: &Cl2Element) -> Result<SolutionSet> {
    solve_axb(a, &Cl2Element::one(), d)
}

/// All `x` with `x·b = d`.
pub fn solve_xb(b: &Cl2Element, d: &Cl2Element) -> Result<SolutionSet> {
    solve_axb(&Cl2Element::one(), b, d)
}

/// All `x` with `a·x = 0`: `x = y − a⁺a y`.
pub fn null_right(a: &Cl2Element) -> Result<SolutionSet> {
    solve_ax(a, &Cl2Element::zero())
}

/// All `x` with `x·b = 0`: `x = y − y b b⁺`.
pub fn null_left(b: &Cl2Element) -> Result<SolutionSet> {
    solve_xb(b, &Cl2Element::zero())
}

/// `a₀ = b₀`, `G(a) = G(b)` and `a, b ∉ ℝ`: the setting where F(a,b) has
/// rank two and a closed-form pseudo-inverse.
pub fn sylvester_closed_form_applies(a: &Cl2Element, b: &Cl2Element) -> bool {
    !a.is_central() && !b.is_central() && a.cre() == b.cre() && a.g() == b.g()
}

fn cim_norm_sum(a: &Cl2Element, b: &Cl2Element) -> Result<BigRational> {
    let two = BigRational::from_integer(2.into());
    let s = a.cim().modulus_sq() + b.cim().modulus_sq();
    Ok(two * s.to_rational().cloned().unwrap_or_default())
}

/// `F⁺ = (L(a′) − R(b′)) / (2(|Cim a|² + |Cim b|²))`, or `None` outside
/// [`sylvester_closed_form_applies`].
pub fn sylvester_pinv(a: &Cl2Element, b: &Cl2Element) -> Result<Option<RatMatrix>> {
    a.rational_coeffs()?;
    b.rational_coeffs()?;
    if !sylvester_closed_form_applies(a, b) {
        return Ok(None);
    }
    let v = &left_matrix(&a.prime())? - &right_matrix(&b.prime())?;
    Ok(Some(v.scale(&cim_norm_sum(a, b)?.recip())))
}

/// `y − (a′a y − a′y b − a y b′ + y b b′) / (2(|Cim a|² + |Cim b|²))`, the
/// element-level form of `(E₄ − F⁺F) y⃗`. `None` outside
/// [`sylvester_closed_form_applies`].
pub fn sylvester_general(a: &Cl2Element, b: &Cl2Element, y: &Cl2Element) -> Result<Option<Cl2Element>> {
    for e in [a, b, y] {
        e.rational_coeffs()?;
    }
    if !sylvester_closed_form_applies(a, b) {
        return Ok(None);
    }
    let (ap, bp) = (a.prime(), b.prime());
    let num = &(&(&ap * a) * y) - &(&(&ap * y) * b) - &(&(a * y) * &bp) + &(&(y * b) * &bp);
    Ok(Some(y - &num.scale(&cim_norm_sum(a, b)?.recip())))
}

/// All `x` with `a·x = x·b`.
pub fn solve_sylvester(a: &Cl2Element, b: &Cl2Element) -> Result<SolutionSet> {
    let f = f_matrix(a, b)?;
    let basis = match sylvester_pinv(a, b)? {
        Some(fp) => (&RatMatrix::identity(4) - &(&fp * &f)).column_space(),
        None => f.null_space(),
    };
    Ok(SolutionSet::homogeneous(to_elements(basis)))
}

/// All `x` with `a·x = x̄·b`.
pub fn solve_consylvester(a: &Cl2Element, b: &Cl2Element) -> Result<SolutionSet> {
    Ok(SolutionSet::homogeneous(to_elements(w_matrix(a, b)?.null_space())))
}
