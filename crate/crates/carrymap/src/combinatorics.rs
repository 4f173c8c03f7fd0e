//! Eulerian numbers and digit-sum counts.
//!
//! `C_b(i, n)` — the number of ways to write `i` as an ordered sum of `n`
//! digits in `{0, ..., b-1}` — is implemented twice on purpose: a closed-form
//! alternating binomial sum ([`digit_sum_count`]) and literal powering of
//! `1 + x + ... + x^(b-1)` ([`digit_sum_count_poly`]). The two routes share no
//! code and the test suite pins them against each other, because every carries
//! matrix built from counts funnels through this function.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{binomial, Rational};

/// The row `A(n, 0), ..., A(n, n-1)` of Eulerian numbers: `A(n, k)` counts
/// permutations of `n` symbols with exactly `k` descents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTable {
    n: usize,
    values: Vec<BigInt>,
}

impl EulerianTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, k: usize) -> BigInt {
        self.values.get(k).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Eulerian numbers by the standard recurrence
/// `A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1)`.
pub fn eulerian_numbers(n: usize) -> Result<EulerianTable> {
    if n < 1 {
        return Err(Error::domain("eulerian numbers need n >= 1"));
    }
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for k in 0..m {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += BigInt::from(k as u64 + 1) * &row[k];
            }
            if k >= 1 && k - 1 < row.len() {
                v += BigInt::from((m - k) as u64) * &row[k - 1];
            }
            next[k] = v;
        }
        row = next;
    }
    Ok(EulerianTable { n, values: row })
}

/// The Eulerian polynomial `A_n(x) = sum_k A(n, k) x^k`, degree `n - 1`.
pub fn eulerian_polynomial(n: usize) -> Result<Polynomial> {
    let table = eulerian_numbers(n)?;
    Ok(Polynomial::new(
        table
            .values
            .into_iter()
            .map(Rational::from_integer)
            .collect(),
    ))
}

/// `C_b(i, n)` by the alternating binomial convolution
/// `sum_r (-1)^r C(n, r) C(i - r*b + n - 1, n - 1)`.
///
/// Zero for `i < 0` or `i > n(b-1)`; the out-of-range-binomial-is-zero
/// convention truncates the sum by itself.
pub fn digit_sum_count(base: u64, i: i64, n: u32) -> Result<BigInt> {
    let b = check_base(base)?;
    if n == 0 {
        // Empty sum: only the value 0 is reachable, in exactly one way.
        return Ok(if i == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let n = i64::from(n);
    if i < 0 || i > n * (b - 1) {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    for r in 0..=n {
        let term = binomial(n, r) * binomial(i - r * b + n - 1, n - 1);
        if r % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `C_b(i, n)` as the coefficient of `x^i` in `(1 + x + ... + x^(b-1))^n`,
/// computed by actually powering that polynomial. Independent of
/// [`digit_sum_count`] by construction.
pub fn digit_sum_count_poly(base: u64, i: i64, n: u32) -> Result<BigInt> {
    let b = check_base(base)?;
    if i < 0 {
        return Ok(BigInt::zero());
    }
    let all_ones = Polynomial::new(vec![Rational::one(); b as usize]);
    let power = all_ones.pow(n);
    let coeff = power.coeff(i as usize);
    debug_assert!(coeff.is_integer());
    Ok(coeff.to_integer())
}

fn check_base(base: u64) -> Result<i64> {
    if base < 1 {
        return Err(Error::domain("base must be >= 1"));
    }
    i64::try_from(base).map_err(|_| Error::domain(format!("base {base} too large")))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: enumerate all n! permutations and count descents directly.
    fn eulerian_by_enumeration(n: usize) -> Vec<BigInt> {
        fn visit(perm: &mut Vec<usize>, rest: &mut Vec<usize>, counts: &mut [BigInt]) {
            if rest.is_empty() {
                let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
                counts[descents] += 1u32;
                return;
            }
            for idx in 0..rest.len() {
                let v = rest.remove(idx);
                perm.push(v);
                visit(perm, rest, counts);
                perm.pop();
                rest.insert(idx, v);
            }
        }
        let mut counts = vec![BigInt::zero(); n];
        visit(&mut Vec::new(), &mut (1..=n).collect(), &mut counts);
        counts
    }

    #[test]
    fn eulerian_small_rows() {
        assert_eq!(eulerian_numbers(1).unwrap().values(), &[BigInt::one()]);
        let row3: Vec<BigInt> = [1, 4, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(eulerian_numbers(3).unwrap().values(), &row3[..]);
        let row4: Vec<BigInt> = [1, 11, 11, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(eulerian_numbers(4).unwrap().values(), &row4[..]);
        assert!(eulerian_numbers(0).is_err());
    }

    #[test]
    fn eulerian_matches_permutation_enumeration() {
        for n in 1..=7 {
            assert_eq!(
                eulerian_numbers(n).unwrap().values(),
                &eulerian_by_enumeration(n)[..],
                "n = {n}"
            );
        }
    }

    #[test]
    fn eulerian_row_invariants() {
        for n in 1..=10usize {
            let table = eulerian_numbers(n).unwrap();
            let sum: BigInt = table.values().iter().sum();
            assert_eq!(sum, crate::rational::factorial(n as i64).unwrap());
            assert_eq!(table.value(0), BigInt::one());
            assert_eq!(table.value(n - 1), BigInt::one());
            for k in 0..n {
                assert_eq!(table.value(k), table.value(n - 1 - k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn eulerian_polynomials() {
        assert_eq!(eulerian_polynomial(1).unwrap(), Polynomial::one());
        assert_eq!(eulerian_polynomial(2).unwrap(), Polynomial::from_ints(&[1, 1]));
        assert_eq!(eulerian_polynomial(3).unwrap(), Polynomial::from_ints(&[1, 4, 1]));
        assert_eq!(eulerian_polynomial(3).unwrap().degree(), Some(2));
    }

    #[test]
    fn digit_sum_count_examples() {
        assert_eq!(digit_sum_count(2, 1, 2).unwrap(), BigInt::from(2));
        // (1 + x + x^2)^2 = 1 + 2x + 3x^2 + 2x^3 + x^4
        assert_eq!(digit_sum_count(3, 2, 2).unwrap(), BigInt::from(3));
        assert_eq!(digit_sum_count(2, -1, 3).unwrap(), BigInt::zero());
        assert_eq!(digit_sum_count(2, 7, 3).unwrap(), BigInt::zero());
        assert!(digit_sum_count(0, 0, 1).is_err());
    }

    #[test]
    fn base_one_is_a_point_mass() {
        for n in 0..=6 {
            assert_eq!(digit_sum_count(1, 0, n).unwrap(), BigInt::one());
            assert_eq!(digit_sum_count(1, 1, n).unwrap(), BigInt::zero());
            assert_eq!(digit_sum_count_poly(1, 0, n).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn empty_sum_counts() {
        assert_eq!(digit_sum_count(4, 0, 0).unwrap(), BigInt::one());
        assert_eq!(digit_sum_count(4, 1, 0).unwrap(), BigInt::zero());
        assert_eq!(digit_sum_count_poly(4, 0, 0).unwrap(), BigInt::one());
        assert_eq!(digit_sum_count_poly(4, 1, 0).unwrap(), BigInt::zero());
    }

    #[test]
    fn closed_form_matches_polynomial_powering() {
        for b in 1..=4u64 {
            for n in 0..=6u32 {
                let top = i64::from(n) * (b as i64 - 1);
                for i in -2..=top + 2 {
                    assert_eq!(
                        digit_sum_count(b, i, n).unwrap(),
                        digit_sum_count_poly(b, i, n).unwrap(),
                        "b={b} i={i} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_sum_to_b_to_the_n() {
        for b in 1..=5u64 {
            for n in 0..=8u32 {
                let top = i64::from(n) * (b as i64 - 1);
                let sum: BigInt = (0..=top)
                    .map(|i| digit_sum_count(b, i, n).unwrap())
                    .sum();
                assert_eq!(sum, BigInt::from(b).pow(n), "b={b} n={n}");
            }
        }
    }

    #[test]
    fn counts_reversal_symmetry() {
        for b in 1..=5u64 {
            for n in 0..=8u32 {
                let top = i64::from(n) * (b as i64 - 1);
                for i in 0..=top {
                    assert_eq!(
                        digit_sum_count(b, i, n).unwrap(),
                        digit_sum_count(b, top - i, n).unwrap(),
                        "b={b} n={n} i={i}"
                    );
                }
            }
        }
    }
}
