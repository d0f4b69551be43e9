//! Exact scalar arithmetic over ℚ.
//!
//! Coefficients throughout the crate are arbitrary-precision rationals kept
//! in lowest terms with a positive denominator, which is exactly the
//! normal form `num_rational::BigRational` maintains.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Renders a rational in the canonical `p/q` form (bare integer when `q = 1`).
pub fn render(r: &Rational) -> String {
    r.to_string()
}

/// Factorial as a rational, used by the closed-form Wronskian values.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
