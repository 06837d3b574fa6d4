use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("coefficient x^{index} requested from a series truncated at order {order}")]
    OrderExceeded { index: usize, order: usize },
}

/// A power series in one variable known exactly up to `x^order`.
///
/// The coefficient vector always has length `order + 1`. Binary operations
/// truncate to the smaller of the two orders, and reading a coefficient past
/// the order is an error rather than an implicit zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of the given order. Missing coefficients are zero;
    /// coefficients past `order` are dropped.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut coeffs: Vec<Rational> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, [])
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        Self::new(order, [c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    /// `1 + slope * x`.
    pub fn one_plus(order: usize, slope: Rational) -> Self {
        Self::new(order, [Rational::one(), slope])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of `x^index`.
    pub fn coeff(&self, index: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(index).ok_or(SeriesError::OrderExceeded {
            index,
            order: self.order(),
        })
    }

    /// Same series cut down to a lower order. Raising the order is not
    /// possible without inventing coefficients, so `order` is clamped.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order()), self.coeffs.iter().cloned())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative inverse modulo `x^(order+1)`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let acc = (1..=k).fold(Rational::zero(), |acc, j| acc + &self.coeffs[j] * &out[k - j]);
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Product of a sequence of series; `one(order)` when empty.
    pub fn product<'a>(order: usize, factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(order), |acc, f| &acc * f)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.coeffs.len())
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product, quadratic time.
    fn mul(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(Rational::zero(), |acc, j| {
                    if self.coeffs[j].is_zero() {
                        acc
                    } else {
                        acc + &self.coeffs[j] * &rhs.coeffs[k - j]
                    }
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}
