//! Conjecture O and Galkin's lower bound, decided by exact arithmetic.
//!
//! Conjecture O for a Fano `F` of index `ρ` with spectral radius `T`:
//!
//! 1. `T` is an eigenvalue of `c_1 ⋆_0` of multiplicity one;
//! 2. every eigenvalue `u` with `|u| = T` has `u / T` a `ρ`-th root of unity.
//!
//! Galkin's bound asks for `T > N + 1` (equality only for projective space,
//! which the instances here never are).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::spectrum::{full_spectrum, Eigenvalue, Modulus, SpectrumReport};
use crate::variety::CompleteIntersection;

/// Clause (1) evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityWitness {
    /// Multiplicity of the eigenvalue `T` itself.
    pub multiplicity_of_t: BigInt,
    /// Multiplicity of all eigenvalues of modulus `T`.
    pub on_circle: BigInt,
}

/// One eigenvalue on the circle `|u| = T`, with its argument as a reduced
/// fraction of a full turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirclePoint {
    pub eigenvalue: Eigenvalue,
    pub turn: (u64, u64),
    pub is_root_of_unity: bool,
}

/// Clause (2) evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootsWitness {
    pub rho: i64,
    pub points: Vec<CirclePoint>,
}

/// `T > N+1` checked as `lhs > rhs` with both sides raised to the power
/// that clears the radical: `ρ^ρ D` vs `(N+1)^ρ`, or `D - F` vs `N + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalkinWitness {
    pub power: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: W,
}

pub fn check_multiplicity_one(report: &SpectrumReport) -> Verdict<MultiplicityWitness> {
    let radius = &report.radius;
    let mut multiplicity_of_t = BigInt::zero();
    let mut on_circle = BigInt::zero();
    for entry in report.entries() {
        let ev = &entry.eigenvalue;
        if ev.modulus() != *radius {
            continue;
        }
        on_circle += &entry.multiplicity;
        // T is the positive real point of the circle; T = 0 only if every eigenvalue vanishes
        let is_t = match ev.turn() {
            Some(turn) => turn == (0, 1),
            None => radius.cmp_integer(&BigInt::zero()).is_eq(),
        };
        if is_t {
            multiplicity_of_t += &entry.multiplicity;
        }
    }
    Verdict {
        holds: multiplicity_of_t == BigInt::from(1),
        witness: MultiplicityWitness {
            multiplicity_of_t,
            on_circle,
        },
    }
}

pub fn check_roots_of_unity(report: &SpectrumReport) -> Verdict<RootsWitness> {
    let rho = report.rho();
    let radius = &report.radius;
    let points: Vec<CirclePoint> = report
        .entries()
        .filter(|e| !e.multiplicity.is_zero() && e.eigenvalue.modulus() == *radius)
        .map(|e| CirclePoint {
            eigenvalue: e.eigenvalue.clone(),
            turn: e.eigenvalue.turn().unwrap_or((0, 1)),
            is_root_of_unity: rho >= 1 && e.eigenvalue.is_root_of_unity_multiple(radius, rho as u64),
        })
        .collect();
    Verdict {
        holds: !points.is_empty() && points.iter().all(|p| p.is_root_of_unity),
        witness: RootsWitness { rho, points },
    }
}

/// Both clauses of Conjecture O.
pub fn check_conjecture_o(
    report: &SpectrumReport,
) -> (Verdict<MultiplicityWitness>, Verdict<RootsWitness>) {
    (check_multiplicity_one(report), check_roots_of_unity(report))
}

/// `T(X) > N + 1`. Uses the unnormalized modulus of the eigenvalue that
/// realizes `T`, so that for `ρ > 1` the witness is `ρ^ρ D` vs `(N+1)^ρ`.
pub fn check_galkin(report: &SpectrumReport) -> Verdict<GalkinWitness> {
    let bound = BigInt::from(report.instance.dim() + 1);
    let radius: Modulus = report
        .entries()
        .map(|e| e.eigenvalue.modulus())
        .find(|m| *m == report.radius)
        .unwrap_or_else(|| report.radius.clone());
    let (lhs, rhs) = radius.powered_against(&bound);
    let (power, _) = radius.power_form();
    Verdict {
        holds: lhs > rhs,
        witness: GalkinWitness { power, lhs, rhs },
    }
}

/// Aggregated verdicts for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub instance: CompleteIntersection,
    pub spectrum: Option<SpectrumReport>,
    pub multiplicity_one: Option<Verdict<MultiplicityWitness>>,
    pub roots_of_unity: Option<Verdict<RootsWitness>>,
    pub galkin: Option<Verdict<GalkinWitness>>,
    /// True when no `λ` is needed or all routes agree with `-F`.
    pub lambda_consistent: bool,
    /// Set when the pipeline failed; all verdicts are then false.
    pub diagnostic: Option<String>,
}

impl ConjectureReport {
    pub fn conj_o_multiplicity_one(&self) -> bool {
        self.multiplicity_one.as_ref().is_some_and(|v| v.holds)
    }

    pub fn conj_o_roots_of_unity(&self) -> bool {
        self.roots_of_unity.as_ref().is_some_and(|v| v.holds)
    }

    pub fn galkin_strict(&self) -> bool {
        self.galkin.as_ref().is_some_and(|v| v.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.diagnostic.is_none()
            && self.conj_o_multiplicity_one()
            && self.conj_o_roots_of_unity()
            && self.galkin_strict()
            && self.lambda_consistent
    }

    /// Verdicts computed from an already assembled spectrum.
    pub fn from_spectrum(report: SpectrumReport) -> Self {
        let (mult, roots) = check_conjecture_o(&report);
        let galkin = check_galkin(&report);
        let lambda_consistent = report
            .lambda_routes
            .as_ref()
            .is_none_or(|routes| routes.consistent());
        Self {
            instance: report.instance.clone(),
            spectrum: Some(report),
            multiplicity_one: Some(mult),
            roots_of_unity: Some(roots),
            galkin: Some(galkin),
            lambda_consistent,
            diagnostic: None,
        }
    }

    fn failed(instance: CompleteIntersection, diagnostic: String) -> Self {
        Self {
            instance,
            spectrum: None,
            multiplicity_one: None,
            roots_of_unity: None,
            galkin: None,
            lambda_consistent: false,
            diagnostic: Some(diagnostic),
        }
    }
}

/// Full pipeline for one instance. Pipeline errors (including a `λ`
/// mismatch) become a failed report with a diagnostic.
pub fn verify_instance(ci: &CompleteIntersection) -> ConjectureReport {
    match full_spectrum(ci) {
        Ok(report) => ConjectureReport::from_spectrum(report),
        Err(err) => ConjectureReport::failed(ci.clone(), err.to_string()),
    }
}
