//! Exact spectrum of `c_1(X) ⋆_0` on `H(X) = H_amb ⊕ H_prim`.

mod companion;
mod eigen;
mod lambda;

pub use companion::{ambient_relation, companion_matrix, predicted_characteristic_polynomial};
pub use eigen::{Eigenvalue, Modulus};
pub use lambda::{
    g_series, g_series_simplified, lambda_closed_form, lambda_via_g, lambda_via_sum,
    lambda_via_twopoint, n_prime_lambda_via_g, n_prime_lambda_via_sum,
    n_prime_lambda_via_twopoint, LambdaRoutes,
};

use num_bigint::BigInt;
use num_traits::{pow, Zero};

use crate::error::{Error, Result};
use crate::exactmath::IntPoly;
use crate::variety::{fano_index, CompleteIntersection, VarietyInvariants};

/// The primitive block of `c_1 ⋆_0` is taken to be scalar (no off-diagonal
/// terms and equal diagonal entries). This is not verified here.
pub const PRIMITIVE_BLOCK_ASSUMPTION: &str =
    "primitive block of c1* is scalar: off-diagonal <H,xi_i,xi_j>_{0,1} vanish and diagonal entries agree (assumed, not verified)";

/// An eigenvalue together with its algebraic multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralEntry {
    pub eigenvalue: Eigenvalue,
    pub multiplicity: BigInt,
}

impl SpectralEntry {
    pub fn new(eigenvalue: Eigenvalue, multiplicity: impl Into<BigInt>) -> Self {
        Self {
            eigenvalue,
            multiplicity: multiplicity.into(),
        }
    }
}

/// Spectrum of `c_1 ⋆_0` on the ambient part with multiplicities:
///
/// - `ρ > 1`: `0` with multiplicity `N+1-ρ`, and `ρ D^{1/ρ} ζ^k` for
///   `k = 0..ρ` once each;
/// - `ρ = 1`: `-F` with multiplicity `N` and `D - F` once.
pub fn ambient_spectrum(ci: &CompleteIntersection) -> Vec<SpectralEntry> {
    let n = i64::from(ci.dim());
    let rho = fano_index(ci);
    let big_d = ci.big_d();
    if rho > 1 {
        let mut out = vec![SpectralEntry::new(Eigenvalue::integer(0), n + 1 - rho)];
        out.extend((0..rho as u64).map(|k| {
            SpectralEntry::new(Eigenvalue::root_scaled(rho as u32, big_d.clone(), k), 1)
        }));
        out
    } else {
        let f = ci.big_f();
        vec![
            SpectralEntry::new(Eigenvalue::Integer(-f.clone()), n),
            SpectralEntry::new(Eigenvalue::Integer(big_d - f), 1),
        ]
    }
}

/// `∏ (μ - e)^m` over a spectrum, as an integer polynomial.
///
/// `RootScaled` entries must come as complete orbits (every phase of the
/// same order and radicand, equal multiplicities); each orbit contributes
/// `(μ^ρ - ρ^ρ D)^m`. Returns `None` for incomplete orbits.
pub fn spectrum_polynomial(entries: &[SpectralEntry]) -> Option<IntPoly> {
    let mut poly = IntPoly::one();
    let mut orbits: Vec<(u32, BigInt, BigInt, Vec<u32>)> = Vec::new();
    for entry in entries {
        match &entry.eigenvalue {
            Eigenvalue::Integer(v) => {
                let m = u64::try_from(&entry.multiplicity).ok()?;
                poly = &poly * &IntPoly::linear(v).pow(m);
            }
            Eigenvalue::RootScaled { order, radicand, phase } => {
                match orbits
                    .iter_mut()
                    .find(|(o, r, m, _)| o == order && r == radicand && *m == entry.multiplicity)
                {
                    Some(orbit) => orbit.3.push(*phase),
                    None => orbits.push((*order, radicand.clone(), entry.multiplicity.clone(), vec![*phase])),
                }
            }
        }
    }
    for (order, radicand, mult, mut phases) in orbits {
        phases.sort_unstable();
        if phases != (0..order).collect::<Vec<_>>() {
            return None;
        }
        let c = pow(BigInt::from(order), order as usize) * radicand;
        let m = u64::try_from(&mult).ok()?;
        poly = &poly * &IntPoly::binomial_minus(order as usize, &c).pow(m);
    }
    Some(poly)
}

/// Everything known about the spectrum of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub instance: CompleteIntersection,
    pub invariants: VarietyInvariants,
    pub ambient: Vec<SpectralEntry>,
    pub primitive: Option<SpectralEntry>,
    /// Spectral radius `T(X)`.
    pub radius: Modulus,
    /// Only for even `N` with `ρ = 1`.
    pub lambda: Option<BigInt>,
    pub lambda_routes: Option<LambdaRoutes>,
}

impl SpectrumReport {
    /// Assembles a report from explicit parts, computing the radius.
    pub fn from_parts(
        instance: CompleteIntersection,
        invariants: VarietyInvariants,
        ambient: Vec<SpectralEntry>,
        primitive: Option<SpectralEntry>,
        lambda_routes: Option<LambdaRoutes>,
    ) -> Self {
        let radius = max_modulus(ambient.iter().chain(primitive.iter()));
        let lambda = lambda_routes.as_ref().map(|r| r.closed_form.clone());
        Self {
            instance,
            invariants,
            ambient,
            primitive,
            radius,
            lambda,
            lambda_routes,
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &SpectralEntry> {
        self.ambient.iter().chain(self.primitive.iter())
    }

    pub fn total_multiplicity(&self) -> BigInt {
        self.entries().map(|e| e.multiplicity.clone()).sum()
    }

    pub fn rho(&self) -> i64 {
        self.invariants.rho
    }

    /// Assumptions the report relies on but does not check.
    pub fn assumptions(&self) -> Vec<&'static str> {
        match &self.primitive {
            Some(_) => vec![PRIMITIVE_BLOCK_ASSUMPTION],
            None => vec![],
        }
    }
}

fn max_modulus<'a>(entries: impl Iterator<Item = &'a SpectralEntry>) -> Modulus {
    entries
        .filter(|e| !e.multiplicity.is_zero())
        .map(|e| e.eigenvalue.modulus())
        .max()
        .unwrap_or(Modulus::Integer(BigInt::zero()))
        .normalized()
}

/// Builds the full spectrum. For even `N` and `ρ = 1` all three `λ` routes
/// are evaluated and must agree with `-F`, otherwise `LambdaMismatch`.
pub fn full_spectrum(ci: &CompleteIntersection) -> Result<SpectrumReport> {
    let invariants = VarietyInvariants::compute(ci)?;
    let ambient = ambient_spectrum(ci);
    // multiplicities must be those of the companion matrix
    let char_poly = crate::exactmath::characteristic_polynomial(&companion_matrix(ci));
    let from_entries = spectrum_polynomial(&ambient);
    if from_entries.as_ref() != Some(&char_poly) {
        return Err(Error::AmbientSpectrumMismatch {
            spectrum: from_entries.map_or_else(|| "(incomplete orbit)".to_string(), |p| p.to_string()),
            char_poly: char_poly.to_string(),
        });
    }
    let n_prime = invariants.primitive_dim.clone();

    let (primitive, routes) = if ci.dim() % 2 == 1 || n_prime.is_zero() {
        (None, None)
    } else if invariants.rho > 1 {
        (Some(SpectralEntry::new(Eigenvalue::integer(0), n_prime)), None)
    } else {
        let routes = LambdaRoutes::compute(ci)?;
        let lambda = routes.agreed()?;
        (Some(SpectralEntry::new(Eigenvalue::Integer(lambda), n_prime)), Some(routes))
    };
    Ok(SpectrumReport::from_parts(
        ci.clone(),
        invariants,
        ambient,
        primitive,
        routes,
    ))
}

/// `T(X)`, collapsed to an integer whenever it is one.
pub fn spectral_radius(report: &SpectrumReport) -> Modulus {
    max_modulus(report.entries())
}
