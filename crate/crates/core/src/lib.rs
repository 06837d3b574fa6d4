//! Exact spectra of quantum multiplication by `c_1` on Fano complete
//! intersections in projective space, with checks of Conjecture O and
//! Galkin's lower bound.
//!
//! Everything is computed over the integers and rationals; no floating
//! point is involved in any verdict.
//!
//! ```
//! use qspec_core::{verify_instance, CompleteIntersection};
//!
//! let quintic_fourfold = CompleteIntersection::new(4, vec![5]).unwrap();
//! let report = verify_instance(&quintic_fourfold);
//! assert!(report.all_hold());
//! ```

pub mod conjectures;
pub mod error;
pub mod exactmath;
pub mod gw;
pub mod report;
pub mod spectrum;
pub mod variety;

pub use conjectures::{check_conjecture_o, check_galkin, verify_instance, ConjectureReport};
pub use error::{Error, Result};
pub use exactmath::{Rational, TruncatedSeries};
pub use report::ReportDocument;
pub use spectrum::{full_spectrum, spectral_radius, Eigenvalue, Modulus, SpectrumReport};
pub use variety::{enumerate_fano_cis, CompleteIntersection, InvalidInstance, VarietyInvariants};
