//! Smooth Fano complete intersections `X ⊂ P^{N+r}` and their classical
//! invariants.
//!
//! With `H` the hyperplane class, `c(X) = (1+H)^{N+r+1} / ∏(1+d_i H)` and
//! `∫_X H^N = d_1⋯d_r`, so every invariant here is read off from one
//! truncated series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::exactmath::{as_integer, factorial, rat, Rational, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidInstance {
    #[error("dimension 2 (del Pezzo surfaces) is not supported; need N >= 3")]
    DelPezzo,
    #[error("dimension must be at least 3 (got {0})")]
    DimensionTooSmall(u32),
    #[error("at least one degree is required")]
    NoDegrees,
    #[error("degrees must be at least 2 (got {0})")]
    DegreeTooSmall(u32),
    #[error("not Fano: rho = {0}")]
    NotFano(i64),
}

/// A complete intersection of the given degrees in `P^{dim + r}`.
///
/// Degrees are kept sorted ascending, so two instances are equal exactly
/// when their degree multisets agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawInstance", into = "RawInstance")]
pub struct CompleteIntersection {
    dim: u32,
    degrees: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    dim: u32,
    degrees: Vec<u32>,
}

impl TryFrom<RawInstance> for CompleteIntersection {
    type Error = InvalidInstance;
    fn try_from(raw: RawInstance) -> Result<Self, InvalidInstance> {
        Self::new(raw.dim, raw.degrees)
    }
}

impl From<CompleteIntersection> for RawInstance {
    fn from(ci: CompleteIntersection) -> Self {
        RawInstance {
            dim: ci.dim,
            degrees: ci.degrees,
        }
    }
}

impl CompleteIntersection {
    pub fn new(dim: u32, degrees: impl Into<Vec<u32>>) -> Result<Self, InvalidInstance> {
        let mut degrees = degrees.into();
        match dim {
            2 => return Err(InvalidInstance::DelPezzo),
            d if d < 3 => return Err(InvalidInstance::DimensionTooSmall(d)),
            _ => {}
        }
        if degrees.is_empty() {
            return Err(InvalidInstance::NoDegrees);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(InvalidInstance::DegreeTooSmall(d));
        }
        degrees.sort_unstable();
        let rho = index_of(dim, &degrees);
        if rho < 1 {
            return Err(InvalidInstance::NotFano(rho));
        }
        debug_assert!(rho <= i64::from(dim));
        Ok(Self { dim, degrees })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codim(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// `∏ d_i = ∫_X H^N`.
    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// `D = ∏ d_i^{d_i}`.
    pub fn big_d(&self) -> BigInt {
        self.degrees
            .iter()
            .map(|&d| num_traits::pow(BigInt::from(d), d as usize))
            .product()
    }

    /// `F = ∏ d_i!`.
    pub fn big_f(&self) -> BigInt {
        self.degrees.iter().map(|&d| factorial(u64::from(d))).product()
    }

    /// Even N with Fano index one: the only case with a nonzero primitive
    /// eigenvalue.
    pub fn is_index_one_even(&self) -> bool {
        self.dim.is_multiple_of(2) && fano_index(self) == 1
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}(", self.dim)?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

fn index_of(dim: u32, degrees: &[u32]) -> i64 {
    let sum: i64 = degrees.iter().map(|&d| i64::from(d)).sum();
    i64::from(dim) + degrees.len() as i64 + 1 - sum
}

/// Fano index `ρ = N + r + 1 - Σ d_i`.
pub fn fano_index(ci: &CompleteIntersection) -> i64 {
    index_of(ci.dim, &ci.degrees)
}

/// Total Chern class series `(1+x)^{N+r+1} / ∏(1+d_i x)` to order `order`.
pub fn chern_series(ci: &CompleteIntersection, order: usize) -> TruncatedSeries {
    let n_plus_r_plus_1 = u64::from(ci.dim + ci.codim() + 1);
    let numerator = TruncatedSeries::one_plus(order, rat(1)).pow(n_plus_r_plus_1);
    let denominator = TruncatedSeries::product(
        order,
        &ci.degrees
            .iter()
            .map(|&d| TruncatedSeries::one_plus(order, rat(d)))
            .collect::<Vec<_>>(),
    );
    let inv = denominator
        .inverse()
        .expect("product of (1 + d x) has constant term 1");
    &numerator * &inv
}

/// `(c_0, …, c_N)` with `c(X) = Σ c_p H^p`.
pub fn chern_coefficients(ci: &CompleteIntersection) -> Result<Vec<Rational>> {
    let series = chern_series(ci, ci.dim as usize);
    let coeffs = series.coefficients().to_vec();
    for (index, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegerChern {
                index,
                value: c.to_string(),
            });
        }
    }
    Ok(coeffs)
}

/// `χ_top(X) = (∏ d_i) · c_N`.
pub fn euler_characteristic(ci: &CompleteIntersection) -> Result<BigInt> {
    let chern = chern_coefficients(ci)?;
    euler_from_chern(ci, &chern)
}

fn euler_from_chern(ci: &CompleteIntersection, chern: &[Rational]) -> Result<BigInt> {
    let value = &chern[ci.dim as usize] * rat(ci.degree_product());
    as_integer(&value).ok_or_else(|| Error::NonIntegerEuler {
        value: value.to_string(),
    })
}

/// Dimension of the even-degree primitive cohomology: `χ - (N+1)` for even
/// N, and 0 for odd N (odd N has no even-degree primitive classes).
pub fn primitive_dimension(ci: &CompleteIntersection) -> Result<BigInt> {
    let euler = euler_characteristic(ci)?;
    primitive_from_euler(ci, &euler)
}

fn primitive_from_euler(ci: &CompleteIntersection, euler: &BigInt) -> Result<BigInt> {
    if ci.dim % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let value = euler - BigInt::from(ci.dim + 1);
    if value.is_negative() {
        return Err(Error::NegativePrimitiveDim {
            value: value.to_string(),
        });
    }
    Ok(value)
}

/// Every derived integer invariant of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyInvariants {
    pub rho: i64,
    pub big_d: BigInt,
    pub big_f: BigInt,
    pub chern: Vec<Rational>,
    pub euler: BigInt,
    pub primitive_dim: BigInt,
}

impl VarietyInvariants {
    pub fn compute(ci: &CompleteIntersection) -> Result<Self> {
        let chern = chern_coefficients(ci)?;
        let euler = euler_from_chern(ci, &chern)?;
        let primitive_dim = primitive_from_euler(ci, &euler)?;
        Ok(Self {
            rho: fano_index(ci),
            big_d: ci.big_d(),
            big_f: ci.big_f(),
            chern,
            euler,
            primitive_dim,
        })
    }
}

/// All Fano complete intersections with `3 <= N <= max_dim` and
/// `1 <= r <= max_r`, ordered lexicographically by `(N, r, degrees)`.
pub fn enumerate_fano_cis(max_dim: u32, max_r: u32) -> impl Iterator<Item = CompleteIntersection> {
    (3..=max_dim).flat_map(move |dim| {
        // each degree is >= 2, so Σd <= N + r forces r <= N
        (1..=max_r.min(dim)).flat_map(move |r| {
            let mut found = Vec::new();
            let mut current = Vec::with_capacity(r as usize);
            degree_sequences(dim + r, r, 2, &mut current, &mut found);
            found
                .into_iter()
                .map(move |degrees| CompleteIntersection { dim, degrees })
        })
    })
}

/// Nondecreasing sequences of `len` integers, each >= `min`, summing to at
/// most `budget`, in lexicographic order.
fn degree_sequences(budget: u32, len: u32, min: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if len == 0 {
        out.push(current.clone());
        return;
    }
    let mut d = min;
    while d * len <= budget {
        current.push(d);
        degree_sequences(budget - d, len - 1, d, current, out);
        current.pop();
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(dim: u32, degrees: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(dim, degrees.to_vec()).unwrap()
    }

    #[test]
    fn fano_index_examples() {
        assert_eq!(fano_index(&ci(4, &[3])), 3);
        assert_eq!(fano_index(&ci(4, &[2, 2, 3])), 1);
        assert_eq!(fano_index(&ci(3, &[2])), 3);
    }

    #[test]
    fn constructor_rejections() {
        use InvalidInstance::*;
        assert_eq!(CompleteIntersection::new(2, vec![3]), Err(DelPezzo));
        assert_eq!(CompleteIntersection::new(1, vec![2]), Err(DimensionTooSmall(1)));
        assert_eq!(CompleteIntersection::new(4, vec![]), Err(NoDegrees));
        assert_eq!(CompleteIntersection::new(4, vec![1, 3]), Err(DegreeTooSmall(1)));
        assert_eq!(CompleteIntersection::new(3, vec![5]), Err(NotFano(0)));
        assert_eq!(
            CompleteIntersection::new(3, vec![5]).unwrap_err().to_string(),
            "not Fano: rho = 0"
        );
    }

    #[test]
    fn degrees_are_sorted() {
        assert_eq!(ci(4, &[3, 2, 2]), ci(4, &[2, 2, 3]));
        assert_eq!(ci(4, &[3, 2, 2]).degrees(), &[2, 2, 3]);
    }

    #[test]
    fn chern_constant_term_is_one() {
        for x in enumerate_fano_cis(6, 6) {
            assert_eq!(chern_coefficients(&x).unwrap()[0], rat(1));
        }
    }

    #[test]
    fn chern_top_coefficients() {
        // (1+x)^6 (1 - 3x + 9x^2 - 27x^3 + 81x^4), x^4 term:
        // 81 - 6*27 + 15*9 - 20*3 + 15 = 9
        assert_eq!(chern_coefficients(&ci(4, &[3])).unwrap()[4], rat(9));
        assert_eq!(chern_coefficients(&ci(4, &[2, 2, 3])).unwrap()[4], rat(27));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&ci(4, &[3])).unwrap(), BigInt::from(27));
        assert_eq!(euler_characteristic(&ci(4, &[5])).unwrap(), BigInt::from(825));
        assert_eq!(euler_characteristic(&ci(4, &[2, 2, 3])).unwrap(), BigInt::from(324));
        // cubic threefold
        assert_eq!(euler_characteristic(&ci(3, &[3])).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn primitive_dimension_examples() {
        assert_eq!(primitive_dimension(&ci(4, &[5])).unwrap(), BigInt::from(820));
        assert_eq!(primitive_dimension(&ci(5, &[2, 2])).unwrap(), BigInt::from(0));
        assert_eq!(primitive_dimension(&ci(4, &[2, 2, 3])).unwrap(), BigInt::from(319));
        // even quadric: one primitive class
        assert_eq!(primitive_dimension(&ci(4, &[2])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn big_d_and_f() {
        let x = ci(4, &[2, 2, 3]);
        assert_eq!(x.big_d(), BigInt::from(432));
        assert_eq!(x.big_f(), BigInt::from(24));
        assert_eq!(ci(8, &[9]).big_d().to_string(), "387420489");
    }

    #[test]
    fn enumeration_small_case() {
        let got: Vec<_> = enumerate_fano_cis(3, 1).collect();
        assert_eq!(got, vec![ci(3, &[2]), ci(3, &[3]), ci(3, &[4])]);
        let got: Vec<_> = enumerate_fano_cis(4, 1).collect();
        assert_eq!(got.len(), 7);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all: Vec<_> = enumerate_fano_cis(8, 8).collect();
        for w in all.windows(2) {
            let key = |c: &CompleteIntersection| (c.dim, c.codim(), c.degrees.clone());
            assert!(key(&w[0]) < key(&w[1]));
        }
        for x in &all {
            assert_eq!(CompleteIntersection::new(x.dim, x.degrees.clone()).as_ref(), Ok(x));
        }
    }

    #[test]
    fn serde_rejects_invalid_instances() {
        let ok: CompleteIntersection = serde_json::from_str(r#"{"dim":4,"degrees":[3,2,2]}"#).unwrap();
        assert_eq!(ok, ci(4, &[2, 2, 3]));
        assert!(serde_json::from_str::<CompleteIntersection>(r#"{"dim":3,"degrees":[5]}"#).is_err());
    }
}
