//! Spectra and ranks of L(a), R(a), F(a,b) = L(a) − R(b) and
//! W(a,b) = L(a) − R(b)·U.
//!
//! Eigenvalues are kept symbolic. `F` needs two independent square roots and
//! `W` may have complex eigenvalues, so neither fits the single-radicand
//! [`Scalar`]; float evaluation is for display only.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::element::Cl2Element;
use crate::error::Result;
use crate::matrix::RatMatrix;
use crate::rep::{left_matrix, right_matrix, u_matrix};
use crate::scalar::{fmt_rational, Scalar};

/// The eigenvalue pair `center ± √radicand`, each of the given algebraic
/// multiplicity. A negative radicand denotes a complex-conjugate pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenDescriptor {
    pub center: BigRational,
    pub radicand: BigRational,
    pub multiplicity: u32,
}

impl EigenDescriptor {
    pub fn new(center: BigRational, radicand: BigRational, multiplicity: u32) -> Self {
        EigenDescriptor {
            center,
            radicand,
            multiplicity,
        }
    }

    /// `((λ − center)² − radicand)^multiplicity`, this pair's factor of the
    /// characteristic polynomial.
    pub fn factor_at(&self, lambda: &BigRational) -> BigRational {
        let d = lambda - &self.center;
        let f = &d * &d - &self.radicand;
        (0..self.multiplicity).fold(BigRational::one(), |acc, _| acc * &f)
    }

    /// Both values exactly, when the radicand is nonnegative.
    pub fn exact_values(&self) -> Option<[Scalar; 2]> {
        let root = Scalar::sqrt(&self.radicand).ok()?;
        let c = Scalar::from(self.center.clone());
        Some([&c + &root, &c - &root])
    }

    /// `(re, im)` of `center + √radicand` and `center − √radicand`.
    pub fn approx(&self) -> [(f64, f64); 2] {
        let c = self.center.to_f64().unwrap_or(f64::NAN);
        let s = self.radicand.to_f64().unwrap_or(f64::NAN);
        if s >= 0.0 {
            [(c + s.sqrt(), 0.0), (c - s.sqrt(), 0.0)]
        } else {
            let t = (-s).sqrt();
            [(c, t), (c, -t)]
        }
    }
}

impl fmt::Display for EigenDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ± sqrt({})",
            fmt_rational(&self.center),
            fmt_rational(&self.radicand)
        )?;
        if self.multiplicity > 1 {
            write!(f, " (multiplicity {})", self.multiplicity)?;
        }
        Ok(())
    }
}

/// Eigenvalues of L(a); R(a) has the same spectrum.
///
/// Each root of `λ² − 2a₀λ + H(a)` occurs with multiplicity two.
pub fn lr_eigen(a: &Cl2Element) -> Result<Vec<EigenDescriptor>> {
    let [a0, ..] = a.rational_coeffs()?;
    let g = rational(&a.g());
    Ok(vec![EigenDescriptor::new(a0, g, 2)])
}

fn rational(s: &Scalar) -> BigRational {
    s.to_rational().cloned().expect("value of a rational element")
}

pub fn f_matrix(a: &Cl2Element, b: &Cl2Element) -> Result<RatMatrix> {
    Ok(&left_matrix(a)? - &right_matrix(b)?)
}

/// One eigenvalue `shift + outer·(√g_a + inner·√g_b)` of F(a,b), with
/// `outer`, `inner` ∈ {+1, −1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FEigenvalue {
    pub shift: BigRational,
    pub g_a: BigRational,
    pub g_b: BigRational,
    pub outer: i8,
    pub inner: i8,
}

impl FEigenvalue {
    /// The value as a [`Scalar`], when both roots are real and lie in a
    /// common quadratic field.
    pub fn exact(&self) -> Option<Scalar> {
        let ra = Scalar::sqrt(&self.g_a).ok()?;
        let rb = Scalar::sqrt(&self.g_b).ok()?;
        let inner = if self.inner > 0 { ra.try_add(&rb) } else { ra.try_sub(&rb) }.ok()?;
        let shift = Scalar::from(self.shift.clone());
        if self.outer > 0 {
            shift.try_add(&inner).ok()
        } else {
            shift.try_sub(&inner).ok()
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        let root = |g: &BigRational| {
            let x = g.to_f64().unwrap_or(f64::NAN);
            if x >= 0.0 {
                (x.sqrt(), 0.0)
            } else {
                (0.0, (-x).sqrt())
            }
        };
        let (ar, ai) = root(&self.g_a);
        let (br, bi) = root(&self.g_b);
        let (o, i) = (f64::from(self.outer), f64::from(self.inner));
        let shift = self.shift.to_f64().unwrap_or(f64::NAN);
        (shift + o * (ar + i * br), o * (ai + i * bi))
    }
}

impl fmt::Display for FEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.exact() {
            return write!(f, "{x}");
        }
        let sign = |s: i8| if s > 0 { '+' } else { '-' };
        write!(
            f,
            "{} {} (sqrt({}) {} sqrt({}))",
            fmt_rational(&self.shift),
            sign(self.outer),
            fmt_rational(&self.g_a),
            sign(self.inner),
            fmt_rational(&self.g_b)
        )
    }
}

/// The four eigenvalues `(a₀ − b₀) ± (√G(a) ± √G(b))` of F(a,b), in the
/// sign order (+,+), (+,−), (−,+), (−,−).
pub fn f_eigen(a: &Cl2Element, b: &Cl2Element) -> Result<[FEigenvalue; 4]> {
    let [a0, ..] = a.rational_coeffs()?;
    let [b0, ..] = b.rational_coeffs()?;
    let shift = a0 - b0;
    let (g_a, g_b) = (rational(&a.g()), rational(&b.g()));
    Ok([(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(outer, inner)| FEigenvalue {
        shift: shift.clone(),
        g_a: g_a.clone(),
        g_b: g_b.clone(),
        outer,
        inner,
    }))
}

/// `∏ (λ − μ)` over the four eigenvalues, paired so the radicals cancel:
/// `((λ − δ)² − g_a − g_b)² − 4·g_a·g_b`.
pub fn f_char_poly_at(eigs: &[FEigenvalue; 4], lambda: &BigRational) -> BigRational {
    let e = &eigs[0];
    let d = lambda - &e.shift;
    let t = &d * &d - &e.g_a - &e.g_b;
    &t * &t - BigRational::from_integer(4.into()) * &e.g_a * &e.g_b
}

/// det F = δ⁴ − 2δ²(G(a) + G(b)) + (G(a) − G(b))² with δ = a₀ − b₀.
pub fn f_det(a: &Cl2Element, b: &Cl2Element) -> Result<BigRational> {
    let eigs = f_eigen(a, b)?;
    Ok(f_char_poly_at(&eigs, &BigRational::zero()))
}

/// Rank of F(a,b) by exact elimination.
pub fn f_rank(a: &Cl2Element, b: &Cl2Element) -> Result<usize> {
    Ok(f_matrix(a, b)?.rank())
}

pub fn w_matrix(a: &Cl2Element, b: &Cl2Element) -> Result<RatMatrix> {
    Ok(&left_matrix(a)? - &(&right_matrix(b)? * &u_matrix()))
}

/// Eigenvalues of W(a,b): `a₀ ± √(G(a) + H(b))` and
/// `(a₀ + b₀) ± √(G(a) + G(b) + 2(−a₁b₁ − a₂b₂ + a₃b₃))`.
pub fn w_eigen(a: &Cl2Element, b: &Cl2Element) -> Result<[EigenDescriptor; 2]> {
    let [a0, a1, a2, a3] = a.rational_coeffs()?;
    let [b0, b1, b2, b3] = b.rational_coeffs()?;
    let (ga, gb, hb) = (rational(&a.g()), rational(&b.g()), rational(&b.h()));
    let cross = -(&a1 * &b1) - &a2 * &b2 + &a3 * &b3;
    let two = BigRational::from_integer(2.into());
    Ok([
        EigenDescriptor::new(a0.clone(), &ga + &hb, 1),
        EigenDescriptor::new(&a0 + &b0, ga + gb + two * cross, 1),
    ])
}

/// det W = (H(a) − H(b))·H(ā + b).
pub fn w_det(a: &Cl2Element, b: &Cl2Element) -> Result<BigRational> {
    a.rational_coeffs()?;
    b.rational_coeffs()?;
    let diff = rational(&a.h()) - rational(&b.h());
    Ok(diff * rational(&(a.conj() + b).h()))
}

/// Which rank statement applies to W(a,b).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WRankCase {
    /// H(a) = H(b) and ā + b = 0.
    Rank1Conj,
    /// H(a) = H(b) and H(ā + b) ≠ 0.
    Rank3Invertible,
    /// H(a) = H(b) and ā + b is a nonzero zero divisor.
    Rank3ZeroDivisor,
    /// H(a) ≠ H(b) and ā + b is a nonzero zero divisor.
    Rank3Mixed,
    /// det W ≠ 0.
    FullRank,
}

impl WRankCase {
    pub fn expected_rank(self) -> usize {
        match self {
            WRankCase::Rank1Conj => 1,
            WRankCase::Rank3Invertible | WRankCase::Rank3ZeroDivisor | WRankCase::Rank3Mixed => 3,
            WRankCase::FullRank => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WRankCase::Rank1Conj => "rank1-conj",
            WRankCase::Rank3Invertible => "rank3-invertible",
            WRankCase::Rank3ZeroDivisor => "rank3-zero-divisor",
            WRankCase::Rank3Mixed => "rank3-mixed",
            WRankCase::FullRank => "full-rank",
        }
    }
}

/// Classifies W(a,b). The rank cases are consulted only when det W = 0.
pub fn w_rank_case(a: &Cl2Element, b: &Cl2Element) -> Result<WRankCase> {
    if !w_det(a, b)?.is_zero() {
        return Ok(WRankCase::FullRank);
    }
    let s = a.conj() + b;
    let equal_h = a.h() == b.h();
    Ok(match (equal_h, s.is_zero(), s.is_zero_divisor()) {
        (true, true, _) => WRankCase::Rank1Conj,
        (true, false, false) => WRankCase::Rank3Invertible,
        (true, false, true) => WRankCase::Rank3ZeroDivisor,
        // det W = 0 with H(a) ≠ H(b) forces H(ā + b) = 0, and ā + b = 0 would force H(a) = H(b)
        (false, _, _) => WRankCase::Rank3Mixed,
    })
}

/// The classified case next to the rank found by elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WRankReport {
    pub case: WRankCase,
    pub rank: usize,
}

impl WRankReport {
    /// False when elimination disagrees with the rank the case predicts.
    pub fn consistent(&self) -> bool {
        self.case.expected_rank() == self.rank
    }
}

pub fn w_rank_report(a: &Cl2Element, b: &Cl2Element) -> Result<WRankReport> {
    Ok(WRankReport {
        case: w_rank_case(a, b)?,
        rank: w_matrix(a, b)?.rank(),
    })
}

/// `det(λE₄ − M)` evaluated exactly.
pub fn char_poly_at(m: &RatMatrix, lambda: &BigRational) -> BigRational {
    let n = m.rows();
    (&RatMatrix::identity(n).scale(lambda) - m).det()
}
