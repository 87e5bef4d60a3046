use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, Scalar};

/// Whether negative inheritance coefficients are accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Coefficients are probabilities: nonnegative, rows summing to 1.
    #[default]
    Strict,
    /// Rows must still sum to 1 but entries may be negative. Population
    /// dynamics (states, trajectories) are unavailable in this mode.
    Permissive,
}

/// Inheritance coefficients of a bisexual population with `n` female and
/// `nu` male types. `female(i, j, k)` is the probability that a female
/// offspring of the pair (female type `i`, male type `j`) has type `k`;
/// `male(i, j, l)` likewise for male offspring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InheritanceTensor {
    n: usize,
    nu: usize,
    pf: Vec<Scalar>,
    pm: Vec<Scalar>,
    mode: Mode,
}

impl InheritanceTensor {
    /// Builds a tensor from nested arrays `pf[i][j][k]`, `pm[i][j][l]`.
    pub fn new(n: usize, nu: usize, pf: Vec<Vec<Vec<Scalar>>>, pm: Vec<Vec<Vec<Scalar>>>, mode: Mode) -> Result<Self> {
        if n == 0 || nu == 0 {
            return Err(Error::TensorShape("n and nu must be positive".into()));
        }
        let pf = flatten("female", pf, n, nu, n)?;
        let pm = flatten("male", pm, n, nu, nu)?;
        let t = InheritanceTensor { n, nu, pf, pm, mode };
        t.validate()?;
        Ok(t)
    }

    /// Builds a tensor from coefficient functions.
    pub fn from_fn(
        n: usize,
        nu: usize,
        mode: Mode,
        female: impl Fn(usize, usize, usize) -> Scalar,
        male: impl Fn(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        let pf = (0..n).map(|i| (0..nu).map(|j| (0..n).map(|k| female(i, j, k)).collect()).collect()).collect();
        let pm = (0..n).map(|i| (0..nu).map(|j| (0..nu).map(|l| male(i, j, l)).collect()).collect()).collect();
        InheritanceTensor::new(n, nu, pf, pm, mode)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.nu {
                self.check_row("female", i, j, (0..self.n).map(|k| self.female(i, j, k)))?;
                self.check_row("male", i, j, (0..self.nu).map(|l| self.male(i, j, l)))?;
            }
        }
        Ok(())
    }

    fn check_row<'a>(
        &self,
        sex: &'static str,
        i: usize,
        j: usize,
        row: impl Iterator<Item = &'a Scalar>,
    ) -> Result<()> {
        let mut sum = Scalar::zero();
        for (k, v) in row.enumerate() {
            if self.mode == Mode::Strict && scalar::is_negative(v) {
                return Err(Error::NegativeEntry { sex, i, j, k, value: scalar::render(v) });
            }
            sum += v;
        }
        if !sum.is_one() {
            return Err(Error::Stochasticity { sex, i, j, sum: scalar::render(&sum) });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_strict(&self) -> bool {
        self.mode == Mode::Strict
    }

    pub fn female(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.pf[(i * self.nu + j) * self.n + k]
    }

    pub fn male(&self, i: usize, j: usize, l: usize) -> &Scalar {
        &self.pm[(i * self.nu + j) * self.nu + l]
    }

    /// The `nu x nu` matrix `(male(i, j, l))_{j,l}` for a fixed female type `i`.
    pub fn male_transition(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.nu, self.nu);
        for j in 0..self.nu {
            for l in 0..self.nu {
                m[(j, l)] = self.male(i, j, l).clone();
            }
        }
        m
    }

    pub fn female_rows(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.n)
            .map(|i| (0..self.nu).map(|j| (0..self.n).map(|k| self.female(i, j, k).clone()).collect()).collect())
            .collect()
    }

    pub fn male_rows(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.n)
            .map(|i| (0..self.nu).map(|j| (0..self.nu).map(|l| self.male(i, j, l).clone()).collect()).collect())
            .collect()
    }
}

fn flatten(sex: &'static str, nested: Vec<Vec<Vec<Scalar>>>, n: usize, nu: usize, last: usize) -> Result<Vec<Scalar>> {
    if nested.len() != n {
        return Err(Error::TensorShape(format!("{sex} tensor has {} female slices, expected {n}", nested.len())));
    }
    let mut out = Vec::with_capacity(n * nu * last);
    for (i, slice) in nested.into_iter().enumerate() {
        if slice.len() != nu {
            return Err(Error::TensorShape(format!(
                "{sex} tensor slice {i} has {} male entries, expected {nu}",
                slice.len()
            )));
        }
        for (j, row) in slice.into_iter().enumerate() {
            if row.len() != last {
                return Err(Error::TensorShape(format!(
                    "{sex} tensor row ({i},{j}) has length {}, expected {last}",
                    row.len()
                )));
            }
            out.extend(row);
        }
    }
    Ok(out)
}
