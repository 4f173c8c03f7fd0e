//! Holte's carries Markov chain.
//!
//! When `m` integers are added in base `b` with digits drawn independently
//! and uniformly from `{0, ..., b-1}`, the column carries form a Markov chain
//! on `{0, ..., m-1}`. [`CarriesMatrix`] stores its transition matrix with the
//! convention `entry(i, j) = P(next carry = j | current carry = i)`: rows are
//! the current state, rows sum to 1.
//!
//! The matrix is built by two independent routes that must agree entry for
//! entry:
//!
//! * [`CarriesMatrix::holte`] — the alternating binomial sum
//!   `K_b(i,j) = b^-m * sum_r (-1)^r C(m+1, r) C(m-1-i+(j+1-r)b, m)`;
//! * [`CarriesMatrix::from_digit_counts`] — digit-sum counts, via
//!   `K_b(j,i) = C_b(ib - j + b - 1, m+1) / b^m`.
//!
//! Two classical facts are exposed and verified exactly: powers multiply the
//! base (`K_a K_b = K_ab`, see [`CarriesMatrix::r_step`]), and the stationary
//! law is Eulerian, `pi(j) = A(m, j)/m!`, independent of the base
//! ([`stationary`]).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{digit_sum_count, eulerian_numbers};
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{binomial, factorial, Rational};

/// Transition matrix of the base-`b` carries chain for the addition of
/// `m` numbers (an `m x m` stochastic matrix of exact rationals).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarriesMatrix {
    base: u64,
    addends: usize,
    matrix: RatMatrix,
}

impl CarriesMatrix {
    /// Build from the closed-form alternating sum over binomials.
    ///
    /// An empty sum (upper limit `j - floor(i/b) < 0`) yields a structural
    /// zero, e.g. the corners of the base-2, three-addend matrix.
    pub fn holte(base: u64, addends: usize) -> Result<Self> {
        check_args(base, addends)?;
        let b = base as i64;
        let m = addends as i64;
        let scale = BigInt::from(base).pow(addends as u32);
        let matrix = RatMatrix::construct(addends, addends, |i, j| {
            let i = i as i64;
            let j = j as i64;
            let upper = j - i.div_euclid(b);
            let mut numer = BigInt::from(0);
            for r in 0..=upper {
                let term = binomial(m + 1, r) * binomial(m - 1 - i + (j + 1 - r) * b, m);
                if r % 2 == 0 {
                    numer += term;
                } else {
                    numer -= term;
                }
            }
            Rational::new(numer, scale.clone())
        });
        Ok(CarriesMatrix {
            base,
            addends,
            matrix,
        })
    }

    /// Build from digit-sum counts: the entry in row `j`, column `i` is
    /// `C_b(ib - j + b - 1, m+1) / b^m`.
    pub fn from_digit_counts(base: u64, addends: usize) -> Result<Self> {
        check_args(base, addends)?;
        let b = base as i64;
        let m = addends as i64;
        let scale = BigInt::from(base).pow(addends as u32);
        let mut rows = Vec::with_capacity(addends);
        for j in 0..m {
            let mut row = Vec::with_capacity(addends);
            for i in 0..m {
                let count = digit_sum_count(base, i * b - j + b - 1, addends as u32 + 1)?;
                row.push(Rational::new(count, scale.clone()));
            }
            rows.push(row);
        }
        Ok(CarriesMatrix {
            base,
            addends,
            matrix: RatMatrix::from_rows(rows)?,
        })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn addends(&self) -> usize {
        self.addends
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// `P(next = j | current = i)`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.matrix.get(i, j)
    }

    /// The `r`-step chain: base `b^r`, matrix `K^r`. Multiplicativity of the
    /// carries matrices makes this identical to building the one-step chain
    /// in base `b^r` directly.
    pub fn r_step(&self, steps: u32) -> Result<Self> {
        let base = self
            .base
            .checked_pow(steps)
            .ok_or_else(|| Error::domain(format!("base {}^{steps} overflows", self.base)))?;
        Ok(CarriesMatrix {
            base,
            addends: self.addends,
            matrix: self.matrix.pow(u64::from(steps))?,
        })
    }
}

/// The Eulerian stationary law `(A(m,0)/m!, ..., A(m,m-1)/m!)`, the left fixed
/// vector of every `CarriesMatrix` with `m` addends regardless of base.
pub fn stationary(addends: usize) -> Result<Vec<Rational>> {
    if addends < 1 {
        return Err(Error::domain("stationary law needs at least 1 addend"));
    }
    let table = eulerian_numbers(addends)?;
    let denom = factorial(addends as i64)?;
    Ok(table
        .values()
        .iter()
        .map(|v| Rational::new(v.clone(), denom.clone()))
        .collect())
}

fn check_args(base: u64, addends: usize) -> Result<()> {
    if base < 1 {
        return Err(Error::domain("carries chain needs base >= 1"));
    }
    if addends < 1 {
        return Err(Error::domain("carries chain needs at least 1 addend"));
    }
    i64::try_from(base)
        .ok()
        .and_then(|b| b.checked_mul(addends as i64 + 2))
        .ok_or_else(|| Error::domain(format!("base {base} too large")))?;
    Ok(())
}
