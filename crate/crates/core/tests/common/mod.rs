//! Generators and small exact helpers shared by the integration tests.
#![allow(dead_code)]

use cl2::rep::{left_matrix, right_matrix, to_vector};
use cl2::{Cl2Element, RatMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub mod corpus;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn el(c: [i64; 4]) -> Cl2Element {
    Cl2Element::from_ints(c)
}

pub fn elq(c: [(i64, i64); 4]) -> Cl2Element {
    Cl2Element::from_rationals(c.map(|(n, d)| q(n, d)))
}

pub fn parse(s: &str) -> Cl2Element {
    cl2::cli::parse_element(s).unwrap_or_else(|e| panic!("{s:?}: {e}"))
}

pub fn rand_q(rng: &mut StdRng) -> BigRational {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn rand_elem(rng: &mut StdRng) -> Cl2Element {
    Cl2Element::from_rationals([rand_q(rng), rand_q(rng), rand_q(rng), rand_q(rng)])
}

/// A random point on the rational unit circle.
pub fn circle_point(rng: &mut StdRng) -> (BigRational, BigRational) {
    let t = rand_q(rng);
    let den = BigRational::one() + &t * &t;
    ((BigRational::one() - &t * &t) / &den, (int(2) * &t) / &den)
}

/// A nonzero zero divisor: `a₂ + a₁i = (a₀ + a₃i)(c + si)` with `c² + s² = 1`,
/// which forces `a₀² + a₃² = a₁² + a₂²`.
pub fn rand_zero_divisor(rng: &mut StdRng) -> Cl2Element {
    loop {
        let (a0, a3) = (rand_q(rng), rand_q(rng));
        if a0.is_zero() && a3.is_zero() {
            continue;
        }
        let (c, s) = circle_point(rng);
        let a2 = &a0 * &c - &a3 * &s;
        let a1 = &a0 * &s + &a3 * &c;
        return Cl2Element::from_rationals([a0, a1, a2, a3]);
    }
}

pub fn rand_invertible(rng: &mut StdRng) -> Cl2Element {
    loop {
        let a = rand_elem(rng);
        if !a.is_zero_divisor() {
            return a;
        }
    }
}

pub fn rand_noncentral(rng: &mut StdRng) -> Cl2Element {
    loop {
        let a = rand_elem(rng);
        if !a.is_central() {
            return a;
        }
    }
}

/// `L(a)R(b)` as an independent matrix for the RREF oracle.
pub fn lr(a: &Cl2Element, b: &Cl2Element) -> RatMatrix {
    &left_matrix(a).unwrap() * &right_matrix(b).unwrap()
}

/// Whether `M x = v` is consistent, by comparing ranks of `M` and `[M | v]`.
pub fn consistent(m: &RatMatrix, v: &[BigRational]) -> bool {
    let mut cols: Vec<Vec<BigRational>> = (0..m.cols()).map(|j| m.column(j)).collect();
    let r = RatMatrix::from_columns(&cols).rank();
    cols.push(v.to_vec());
    RatMatrix::from_columns(&cols).rank() == r
}

/// Rank of a set of elements as coefficient vectors.
pub fn span_rank(xs: &[Cl2Element]) -> usize {
    if xs.is_empty() {
        return 0;
    }
    let cols: Vec<Vec<BigRational>> = xs.iter().map(|x| to_vector(x).unwrap()).collect();
    RatMatrix::from_columns(&cols).rank()
}

/// Whether two element sets span the same subspace.
pub fn same_span(xs: &[Cl2Element], ys: &[Cl2Element]) -> bool {
    let both: Vec<Cl2Element> = xs.iter().chain(ys).cloned().collect();
    let r = span_rank(&both);
    r == span_rank(xs) && r == span_rank(ys)
}

/// Column vectors of a matrix as elements.
pub fn columns_as_elements(m: &RatMatrix) -> Vec<Cl2Element> {
    (0..m.cols()).map(|j| cl2::rep::from_vector(&m.column(j))).collect()
}

/// The product `∏ (λ − rᵢ)` for roots given as `(center, radicand)` pairs,
/// each pair standing for `center ± sqrt(radicand)`.
pub fn quartic_from_pairs(pairs: &[(BigRational, BigRational)], lambda: &BigRational) -> BigRational {
    pairs.iter().fold(BigRational::one(), |acc, (c, s)| {
        let t = lambda - c;
        acc * (&t * &t - s)
    })
}

/// The product `∏ (λ − rᵢ)` over rational roots.
pub fn poly_from_roots(roots: &[BigRational], lambda: &BigRational) -> BigRational {
    roots.iter().fold(BigRational::one(), |acc, r| acc * (lambda - r))
}
