//! Exact integer and rational arithmetic.
//!
//! Big integers and rationals come from `num-bigint`/`num-rational`. On top
//! of them: truncated power series and dense integer polynomials.

mod poly;
mod series;

pub use num_bigint::{BigInt, BigUint};
pub use poly::{characteristic_polynomial, IntPoly};
pub use series::{SeriesError, TruncatedSeries};

use num_bigint::Sign;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // running product stays integral: C(n, j+1) = C(n, j) * (n - j) / (j + 1)
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Rational from an integer.
pub fn rat(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Rational `num / den`. Panics when `den == 0`.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// The integer value of `q`, if it has one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Whether `q` is in normalized form: `gcd(num, den) = 1` and `den > 0`.
pub fn is_normalized(q: &Rational) -> bool {
    use num_integer::Integer;
    let den = q.denom();
    if den.sign() != Sign::Plus {
        return false;
    }
    if q.numer().is_zero() {
        return den.is_one();
    }
    q.numer().abs().gcd(den).is_one()
}
