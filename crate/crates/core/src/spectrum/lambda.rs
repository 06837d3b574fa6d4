//! The primitive eigenvalue `λ` for even `N` and `ρ = 1`.
//!
//! On the primitive part `H ⋆_0` acts as `λ · Id`. The genus-one topological
//! recursion, combined with the genus-one formulas and the divisor
//! relations, expresses `N'λ` through the mirror coefficients `I_a` and the
//! Chern coefficients `c_p`. Three evaluations of `N'λ` are provided, each
//! built from a different stage of that reduction, plus the closed form
//! `λ = -∏ d_i!`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{as_integer, binomial, rat, ratio, Rational, TruncatedSeries};
use crate::gw::{mirror_series, AmbientInvariants};
use crate::variety::{chern_series, fano_index, primitive_dimension, CompleteIntersection};

fn require_case_three(ci: &CompleteIntersection) -> Result<()> {
    if ci.is_index_one_even() {
        Ok(())
    } else {
        Err(Error::NotCaseThree {
            dim: ci.dim(),
            rho: fano_index(ci),
        })
    }
}

fn divide_by_primitive_dim(ci: &CompleteIntersection, n_prime_lambda: Rational) -> Result<Rational> {
    let n_prime = primitive_dimension(ci)?;
    if n_prime.is_zero() {
        return Err(Error::ZeroPrimitiveDim);
    }
    Ok(n_prime_lambda / rat(n_prime))
}

/// `λ = -∏ d_i!`.
pub fn lambda_closed_form(ci: &CompleteIntersection) -> Result<BigInt> {
    require_case_three(ci)?;
    Ok(-ci.big_f())
}

/// `N'λ = Σ_{p=0}^{N} [c_{N-p} - C(N+1, p+1) / ∏d_i] I_p`.
pub fn n_prime_lambda_via_sum(ci: &CompleteIntersection) -> Result<Rational> {
    require_case_three(ci)?;
    let inv = AmbientInvariants::new(ci)?;
    let n = ci.dim() as usize;
    let deg = rat(ci.degree_product());
    let total = (0..=n).fold(Rational::zero(), |acc, p| {
        let weight = &inv.chern()[n - p] - rat(binomial(n as u64 + 1, p as i64 + 1)) / &deg;
        acc + weight * &inv.mirror().values()[p]
    });
    Ok(total)
}

pub fn lambda_via_sum(ci: &CompleteIntersection) -> Result<Rational> {
    let total = n_prime_lambda_via_sum(ci)?;
    divide_by_primitive_dim(ci, total)
}

/// `g(x)` built as the product of its two defining brackets:
/// `[c(x) - (1+x)^{N+1}/∏d_i] · [mirror generating function]`.
pub fn g_series(ci: &CompleteIntersection) -> TruncatedSeries {
    let order = ci.dim() as usize;
    let chern = chern_series(ci, order);
    let correction = TruncatedSeries::one_plus(order, rat(1))
        .pow(u64::from(ci.dim()) + 1)
        .scale(&ratio(1, ci.degree_product()));
    &(&chern - &correction) * &mirror_series(ci, order)
}

/// `g(x)` after cancelling `(1+x)^{N+r+1}` against the Chern factor:
///
/// ```text
/// (∏d)(∏d!) [ ∏_i ∏_{m=2}^{d_i} (1 + d_i x/m) - c(x)
///             - (1/∏d) ∏_i ∏_{m=1}^{d_i-1} (1 + d_i x/m) + (1+x)^{N+1}/∏d ]
/// ```
pub fn g_series_simplified(ci: &CompleteIntersection) -> TruncatedSeries {
    let order = ci.dim() as usize;
    let factors = |lo: u32, hi_offset: u32| -> TruncatedSeries {
        let fs: Vec<TruncatedSeries> = ci
            .degrees()
            .iter()
            .flat_map(|&d| (lo..=d - hi_offset).map(move |m| TruncatedSeries::one_plus(order, ratio(d, m))))
            .collect();
        TruncatedSeries::product(order, &fs)
    };
    let inv_deg = ratio(1, ci.degree_product());
    let upper = factors(2, 0);
    let lower = factors(1, 1).scale(&inv_deg);
    let power = TruncatedSeries::one_plus(order, rat(1))
        .pow(u64::from(ci.dim()) + 1)
        .scale(&inv_deg);
    let bracket = &(&(&upper - &chern_series(ci, order)) - &lower) + &power;
    bracket.scale(&rat(ci.degree_product() * ci.big_f()))
}

/// `N'λ = Coeff_{x^N} g(x)`.
pub fn n_prime_lambda_via_g(ci: &CompleteIntersection) -> Result<Rational> {
    require_case_three(ci)?;
    Ok(g_series(ci).coeff(ci.dim() as usize)?.clone())
}

pub fn lambda_via_g(ci: &CompleteIntersection) -> Result<Rational> {
    let total = n_prime_lambda_via_g(ci)?;
    divide_by_primitive_dim(ci, total)
}

/// `N'λ` from the genus-one recursion with the genus-one invariants
/// substituted:
///
/// ```text
/// N'λ = 24 <tau_1(H)>_{1,1} - (24/∏d) <H^{N-1}>_{0,1} <H>_{1,0}
///       - (1/∏d) Σ_{i=0}^{N} <H^i, H^{N-i}>_{0,1}
/// ```
pub fn n_prime_lambda_via_twopoint(ci: &CompleteIntersection) -> Result<Rational> {
    require_case_three(ci)?;
    let inv = AmbientInvariants::new(ci)?;
    let n = i64::from(ci.dim());
    let deg = rat(ci.degree_product());
    let twenty_four = rat(24);

    let descendant = inv.genus_one_descendant_h()? * &twenty_four;
    let degree_zero = &twenty_four * inv.line_class_invariant() * inv.genus_one_one_point_h() / &deg;
    let two_point_sum = (0..=n).try_fold(Rational::zero(), |acc, i| {
        Ok::<_, Error>(acc + inv.two_point_pure(i, 0)?)
    })?;
    Ok(descendant - degree_zero - two_point_sum / &deg)
}

pub fn lambda_via_twopoint(ci: &CompleteIntersection) -> Result<Rational> {
    let total = n_prime_lambda_via_twopoint(ci)?;
    divide_by_primitive_dim(ci, total)
}

/// All evaluations of `λ` for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaRoutes {
    pub closed_form: BigInt,
    pub via_sum: Rational,
    pub via_g: Rational,
    pub via_twopoint: Rational,
    /// `Coeff_{x^N} g(x)`.
    pub n_prime_lambda: Rational,
}

impl LambdaRoutes {
    pub fn compute(ci: &CompleteIntersection) -> Result<Self> {
        let n_prime_lambda = n_prime_lambda_via_g(ci)?;
        Ok(Self {
            closed_form: lambda_closed_form(ci)?,
            via_sum: lambda_via_sum(ci)?,
            via_g: divide_by_primitive_dim(ci, n_prime_lambda.clone())?,
            via_twopoint: lambda_via_twopoint(ci)?,
            n_prime_lambda,
        })
    }

    pub fn consistent(&self) -> bool {
        let target = rat(self.closed_form.clone());
        [&self.via_sum, &self.via_g, &self.via_twopoint]
            .iter()
            .all(|v| **v == target)
    }

    /// The common value, or `LambdaMismatch` describing every route.
    pub fn agreed(&self) -> Result<BigInt> {
        if self.consistent() {
            return Ok(self.closed_form.clone());
        }
        Err(Error::LambdaMismatch {
            detail: format!(
                "closed form {}, via sum {}, via g {}, via two-point {}",
                self.closed_form, self.via_sum, self.via_g, self.via_twopoint
            ),
        })
    }

    /// Integer value of a route, if it is one.
    pub fn as_integers(&self) -> [Option<BigInt>; 3] {
        [
            as_integer(&self.via_sum),
            as_integer(&self.via_g),
            as_integer(&self.via_twopoint),
        ]
    }
}
