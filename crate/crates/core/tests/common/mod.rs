#![allow(dead_code)]

use evoalg::algebra::{eabp_from_tensor, GeneralAlgebra, InheritanceTensor, Mode};
use evoalg::exact::scalar::{int, ratio};
use evoalg::exact::{Matrix, MultiPoly, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in `[0, 1]` with denominator at most `max_den`.
pub fn unit_rational(rng: &mut impl Rng, max_den: i64) -> Scalar {
    let q = rng.gen_range(1..=max_den);
    ratio(rng.gen_range(0..=q), q)
}

/// Rational with numerator in `[-range, range]` and denominator in `[1, max_den]`.
pub fn small_rational(rng: &mut impl Rng, range: i64, max_den: i64) -> Scalar {
    ratio(rng.gen_range(-range..=range), rng.gen_range(1..=max_den))
}

/// Probability vector of length `len` with small denominators.
pub fn stochastic_row(rng: &mut impl Rng, len: usize) -> Vec<Scalar> {
    loop {
        let w: Vec<i64> = (0..len).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(0..=4) }).collect();
        let s: i64 = w.iter().sum();
        if s > 0 {
            return w.into_iter().map(|x| ratio(x, s)).collect();
        }
    }
}

pub fn random_tensor(rng: &mut impl Rng, n: usize, nu: usize) -> InheritanceTensor {
    let pf = (0..n).map(|_| (0..nu).map(|_| stochastic_row(rng, n)).collect()).collect();
    let pm = (0..n).map(|_| (0..nu).map(|_| stochastic_row(rng, nu)).collect()).collect();
    InheritanceTensor::new(n, nu, pf, pm, Mode::Strict).expect("stochastic rows")
}

pub fn random_eabp(rng: &mut impl Rng, max_n: usize, max_nu: usize) -> GeneralAlgebra {
    let n = rng.gen_range(1..=max_n);
    let nu = rng.gen_range(1..=max_nu);
    eabp_from_tensor(&random_tensor(rng, n, nu))
}

pub fn random_state(rng: &mut impl Rng, n: usize, nu: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    (stochastic_row(rng, n), stochastic_row(rng, nu))
}

/// One female type, two male types: sons of a male of type 1 are of type 1
/// with probability `a`, sons of a male of type 2 with probability `b`.
pub fn two_males(a: &Scalar, b: &Scalar) -> GeneralAlgebra {
    let t = InheritanceTensor::from_fn(
        1,
        2,
        Mode::Strict,
        |_, _, _| int(1),
        |_, j, l| {
            let p = if j == 0 { a.clone() } else { b.clone() };
            if l == 0 {
                p
            } else {
                int(1) - p
            }
        },
    )
    .expect("stochastic");
    eabp_from_tensor(&t)
}

/// The three-female, two-male operator with invariant forms depending on
/// both sexes, written as polynomials in `x1, x2, x3, y1, y2` (variables 0..5).
pub fn mixed_operator() -> Vec<MultiPoly> {
    let v = |i: u32| MultiPoly::var(i);
    let h = ratio(1, 2);
    let term = |c: &Scalar, a: u32, b: u32| (&v(a) * &v(b)).scale(c);
    let one = int(1);
    let sum = |ts: Vec<MultiPoly>| ts.iter().fold(MultiPoly::zero(), |acc, t| &acc + t);
    let (x1, x2, x3, y1, y2) = (0, 1, 2, 3, 4);
    vec![
        sum(vec![term(&one, x1, y1), term(&h, x3, y1)]),
        sum(vec![term(&one, x2, y2), term(&h, x3, y2)]),
        sum(vec![term(&one, x1, y2), term(&one, x2, y1), term(&h, x3, y1), term(&h, x3, y2)]),
        sum(vec![term(&one, x1, y1), term(&one, x1, y2), term(&h, x3, y1), term(&h, x3, y2)]),
        sum(vec![term(&one, x2, y1), term(&one, x2, y2), term(&h, x3, y1), term(&h, x3, y2)]),
    ]
}

/// Reads the inheritance coefficients off a quadratic operator:
/// `Pf(i,j,k)` is the coefficient of `x_i y_j` in `x'_k`, likewise for males.
pub fn tensor_from_operator(n: usize, nu: usize, op: &[MultiPoly]) -> InheritanceTensor {
    let coeff = |out: usize, i: usize, j: usize| {
        let m = (&MultiPoly::var(i as u32) * &MultiPoly::var((n + j) as u32))
            .terms()
            .next()
            .map(|(m, _)| m.clone())
            .expect("monomial");
        op[out].coefficient(&m)
    };
    InheritanceTensor::from_fn(n, nu, Mode::Strict, |i, j, k| coeff(k, i, j), |i, j, l| coeff(n + l, i, j))
        .expect("stochastic operator")
}

pub fn random_invertible(rng: &mut impl Rng, dim: usize) -> Matrix {
    loop {
        let rows = (0..dim).map(|_| (0..dim).map(|_| small_rational(rng, 5, 4)).collect()).collect();
        let m = Matrix::from_rows(rows, dim).expect("rectangular");
        if m.rank() == dim {
            return m;
        }
    }
}
