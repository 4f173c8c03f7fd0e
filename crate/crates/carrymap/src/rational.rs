//! Exact rational scalars and big-integer combinatorial primitives.
//!
//! Every quantity in this crate is an arbitrary-precision rational. [`Rational`]
//! is `num_rational::BigRational`, which keeps values in lowest terms with a
//! positive denominator, so equality is structural and zero is `0/1`.
//!
//! The textual form used everywhere (CLI, JSON, CSV) is `"p/q"` with `q > 0`
//! in lowest terms; integers print as plain `"p"`. `BigRational`'s `Display`
//! and `FromStr` already implement exactly this, so [`parse_rational`] and
//! [`format_rational`] are thin wrappers that normalize errors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from an integer pair. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A rational from a single integer.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parse the `"p/q"` (or plain `"p"`) form.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let parsed: Rational = trimmed
        .parse()
        .map_err(|e| Error::Parse(format!("invalid rational {trimmed:?}: {e}")))?;
    Ok(parsed)
}

/// Render in the canonical `"p/q"` form (plain `"p"` when the value is an integer).
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Approximate a rational as an `f64`. Only for human-facing output; never
/// used in any comparison.
pub fn rational_to_f64(value: &Rational) -> f64 {
    let numer = value.numer();
    let denom = value.denom();
    // Scale down in tandem so huge exact values still give a finite estimate.
    let bits = numer.bits().max(denom.bits());
    if bits <= 52 {
        bigint_to_f64(numer) / bigint_to_f64(denom)
    } else {
        let shift = bits - 52;
        bigint_to_f64(&(numer >> shift)) / bigint_to_f64(&(denom >> shift))
    }
}

fn bigint_to_f64(value: &BigInt) -> f64 {
    let mut out = 0.0f64;
    for digit in value.iter_u64_digits().rev() {
        out = out * 18446744073709551616.0 + digit as f64;
    }
    if value.is_negative() {
        -out
    } else {
        out
    }
}

/// Binomial coefficient C(n, k) as a big integer.
///
/// Out-of-range arguments (`k < 0`, `k > n`, `n < 0`) return 0. The
/// alternating sums in this crate rely on that convention to truncate
/// themselves, so it is part of the contract, not leniency.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// n! as a big integer. Negative input is a domain error.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!("factorial of negative {n}")));
    }
    let mut result = BigInt::one();
    for i in 2..=n {
        result *= BigInt::from(i);
    }
    Ok(result)
}
