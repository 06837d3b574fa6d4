//! Machine-readable report documents (schema `qspec-ci/1`).
//!
//! Every number is serialized as a decimal string so that big integers
//! survive consumers limited to 64-bit or floating-point numbers. Rationals
//! are written `p/q` (or just `p` when integral).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::conjectures::ConjectureReport;
use crate::spectrum::{Eigenvalue, Modulus, SpectralEntry};

pub const SCHEMA_VERSION: &str = "qspec-ci/1";

/// Column names of the CSV rendering, in order.
pub const CSV_HEADER: [&str; 18] = [
    "dim",
    "degrees",
    "rho",
    "D",
    "F",
    "euler",
    "primitiveDim",
    "spectrum",
    "lambda",
    "T",
    "conjOMultiplicityOne",
    "conjORootsOfUnity",
    "galkinStrict",
    "lambdaConsistent",
    "multiplicityOfT",
    "galkinLhs",
    "galkinRhs",
    "diagnostic",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ReportDocument {
    pub schema_version: String,
    pub instance: InstanceFields,
    pub spectrum: Vec<SpectrumItem>,
    pub lambda: Option<String>,
    #[serde(rename = "T")]
    pub radius: Option<RadiusDoc>,
    pub verdicts: VerdictFlags,
    pub witnesses: Witnesses,
    pub assumptions: Vec<String>,
    pub diagnostic: Option<String>,
    pub timing_ms: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct InstanceFields {
    pub dim: String,
    pub degrees: Vec<String>,
    pub rho: String,
    #[serde(rename = "D")]
    pub big_d: String,
    #[serde(rename = "F")]
    pub big_f: String,
    pub euler: Option<String>,
    pub primitive_dim: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpectrumItem {
    pub part: Part,
    pub eigenvalue: EigenvalueDoc,
    pub multiplicity: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Part {
    Ambient,
    Primitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum EigenvalueDoc {
    Integer {
        value: String,
    },
    #[serde(rename_all = "camelCase")]
    RootScaled {
        root_order: String,
        radicand: String,
        phase: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum RadiusDoc {
    Integer {
        value: String,
    },
    /// `rootOrder * radicand^(1/rootOrder)`.
    #[serde(rename_all = "camelCase")]
    Radical { root_order: String, radicand: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct VerdictFlags {
    pub conj_o_multiplicity_one: bool,
    pub conj_o_roots_of_unity: bool,
    pub galkin_strict: bool,
    pub lambda_consistent: bool,
}

impl VerdictFlags {
    pub fn all(&self) -> bool {
        self.conj_o_multiplicity_one
            && self.conj_o_roots_of_unity
            && self.galkin_strict
            && self.lambda_consistent
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Witnesses {
    pub multiplicity: Option<MultiplicityDoc>,
    pub roots_of_unity: Option<Vec<CirclePointDoc>>,
    pub galkin: Option<GalkinDoc>,
    pub lambda_routes: Option<LambdaRoutesDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct MultiplicityDoc {
    pub multiplicity_of_t: String,
    pub on_circle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CirclePointDoc {
    pub eigenvalue: EigenvalueDoc,
    /// Argument as a fraction of a full turn, `k/m`.
    pub turn: String,
    pub is_root_of_unity: bool,
}

/// `lhs > rhs` stands for `T^power > (N+1)^power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GalkinDoc {
    pub power: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LambdaRoutesDoc {
    pub closed_form: String,
    pub via_sum: String,
    pub via_g: String,
    pub via_twopoint: String,
    pub n_prime_lambda: String,
}

impl From<&Eigenvalue> for EigenvalueDoc {
    fn from(ev: &Eigenvalue) -> Self {
        match ev {
            Eigenvalue::Integer(v) => EigenvalueDoc::Integer { value: v.to_string() },
            Eigenvalue::RootScaled { order, radicand, phase } => EigenvalueDoc::RootScaled {
                root_order: order.to_string(),
                radicand: radicand.to_string(),
                phase: phase.to_string(),
            },
        }
    }
}

impl EigenvalueDoc {
    /// Compact form used in CSV and text output.
    pub fn compact(&self) -> String {
        match self {
            EigenvalueDoc::Integer { value } => value.clone(),
            EigenvalueDoc::RootScaled { root_order, radicand, phase } => {
                format!("{root_order}*{radicand}^(1/{root_order})@{phase}/{root_order}")
            }
        }
    }
}

impl From<&Modulus> for RadiusDoc {
    fn from(m: &Modulus) -> Self {
        match m {
            Modulus::Integer(v) => RadiusDoc::Integer { value: v.to_string() },
            Modulus::Radical { order, radicand } => RadiusDoc::Radical {
                root_order: order.to_string(),
                radicand: radicand.to_string(),
            },
        }
    }
}

impl RadiusDoc {
    pub fn compact(&self) -> String {
        match self {
            RadiusDoc::Integer { value } => value.clone(),
            RadiusDoc::Radical { root_order, radicand } => {
                format!("{root_order}*{radicand}^(1/{root_order})")
            }
        }
    }
}

fn spectrum_item(part: Part, entry: &SpectralEntry) -> SpectrumItem {
    SpectrumItem {
        part,
        eigenvalue: (&entry.eigenvalue).into(),
        multiplicity: entry.multiplicity.to_string(),
    }
}

impl ReportDocument {
    pub fn from_report(report: &ConjectureReport, timing_ms: Option<u128>) -> Self {
        let ci = &report.instance;
        let spectrum = report.spectrum.as_ref();
        let invariants = spectrum.map(|s| &s.invariants);

        let instance = InstanceFields {
            dim: ci.dim().to_string(),
            degrees: ci.degrees().iter().map(u32::to_string).collect(),
            rho: crate::variety::fano_index(ci).to_string(),
            big_d: ci.big_d().to_string(),
            big_f: ci.big_f().to_string(),
            euler: invariants.map(|i| i.euler.to_string()),
            primitive_dim: invariants.map(|i| i.primitive_dim.to_string()),
        };

        let items = spectrum
            .map(|s| {
                s.ambient
                    .iter()
                    .map(|e| spectrum_item(Part::Ambient, e))
                    .chain(s.primitive.iter().map(|e| spectrum_item(Part::Primitive, e)))
                    .collect()
            })
            .unwrap_or_default();

        let witnesses = Witnesses {
            multiplicity: report.multiplicity_one.as_ref().map(|v| MultiplicityDoc {
                multiplicity_of_t: v.witness.multiplicity_of_t.to_string(),
                on_circle: v.witness.on_circle.to_string(),
            }),
            roots_of_unity: report.roots_of_unity.as_ref().map(|v| {
                v.witness
                    .points
                    .iter()
                    .map(|p| CirclePointDoc {
                        eigenvalue: (&p.eigenvalue).into(),
                        turn: format!("{}/{}", p.turn.0, p.turn.1),
                        is_root_of_unity: p.is_root_of_unity,
                    })
                    .collect()
            }),
            galkin: report.galkin.as_ref().map(|v| GalkinDoc {
                power: v.witness.power.to_string(),
                lhs: v.witness.lhs.to_string(),
                rhs: v.witness.rhs.to_string(),
            }),
            lambda_routes: spectrum.and_then(|s| s.lambda_routes.as_ref()).map(|r| LambdaRoutesDoc {
                closed_form: r.closed_form.to_string(),
                via_sum: r.via_sum.to_string(),
                via_g: r.via_g.to_string(),
                via_twopoint: r.via_twopoint.to_string(),
                n_prime_lambda: r.n_prime_lambda.to_string(),
            }),
        };

        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            instance,
            spectrum: items,
            lambda: spectrum.and_then(|s| s.lambda.as_ref()).map(|l| l.to_string()),
            radius: spectrum.map(|s| (&s.radius).into()),
            verdicts: VerdictFlags {
                conj_o_multiplicity_one: report.conj_o_multiplicity_one(),
                conj_o_roots_of_unity: report.conj_o_roots_of_unity(),
                galkin_strict: report.galkin_strict(),
                lambda_consistent: report.lambda_consistent,
            },
            witnesses,
            assumptions: spectrum
                .map(|s| s.assumptions().iter().map(|a| a.to_string()).collect())
                .unwrap_or_default(),
            diagnostic: report.diagnostic.clone(),
            timing_ms: timing_ms.map(|t| t.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.diagnostic.is_none() && self.verdicts.all()
    }

    pub fn spectrum_compact(&self) -> String {
        self.spectrum
            .iter()
            .map(|item| {
                let part = match item.part {
                    Part::Ambient => "amb",
                    Part::Primitive => "prim",
                };
                format!("{part}:{}x{}", item.eigenvalue.compact(), item.multiplicity)
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// One CSV row matching [`CSV_HEADER`].
    pub fn csv_record(&self) -> Vec<String> {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        let galkin = self.witnesses.galkin.as_ref();
        vec![
            self.instance.dim.clone(),
            self.instance.degrees.join(";"),
            self.instance.rho.clone(),
            self.instance.big_d.clone(),
            self.instance.big_f.clone(),
            opt(&self.instance.euler),
            opt(&self.instance.primitive_dim),
            self.spectrum_compact(),
            opt(&self.lambda),
            self.radius.as_ref().map(RadiusDoc::compact).unwrap_or_default(),
            self.verdicts.conj_o_multiplicity_one.to_string(),
            self.verdicts.conj_o_roots_of_unity.to_string(),
            self.verdicts.galkin_strict.to_string(),
            self.verdicts.lambda_consistent.to_string(),
            self.witnesses
                .multiplicity
                .as_ref()
                .map(|m| m.multiplicity_of_t.clone())
                .unwrap_or_default(),
            galkin.map(|g| g.lhs.clone()).unwrap_or_default(),
            galkin.map(|g| g.rhs.clone()).unwrap_or_default(),
            opt(&self.diagnostic),
        ]
    }

    /// Human-readable multi-line summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.instance;
        let dash = "-".to_string();
        let _ = writeln!(out, "instance      N = {}, degrees = ({})", i.dim, i.degrees.join(","));
        let _ = writeln!(out, "rho           {}", i.rho);
        let _ = writeln!(out, "D, F          {}, {}", i.big_d, i.big_f);
        let _ = writeln!(out, "euler         {}", i.euler.as_ref().unwrap_or(&dash));
        let _ = writeln!(out, "primitive dim {}", i.primitive_dim.as_ref().unwrap_or(&dash));
        let _ = writeln!(out, "spectrum");
        for item in &self.spectrum {
            let part = match item.part {
                Part::Ambient => "ambient",
                Part::Primitive => "primitive",
            };
            let _ = writeln!(out, "  {:<10}{:<40} x {}", part, item.eigenvalue.compact(), item.multiplicity);
        }
        let _ = writeln!(out, "lambda        {}", self.lambda.as_ref().unwrap_or(&dash));
        let _ = writeln!(
            out,
            "T             {}",
            self.radius.as_ref().map(RadiusDoc::compact).unwrap_or(dash.clone())
        );
        let flag = |b: bool| if b { "PASS" } else { "FAIL" };
        let v = &self.verdicts;
        let _ = writeln!(out, "conjecture O (1) multiplicity one  {}", flag(v.conj_o_multiplicity_one));
        let _ = writeln!(out, "conjecture O (2) roots of unity    {}", flag(v.conj_o_roots_of_unity));
        let _ = writeln!(out, "galkin T > N+1                     {}", flag(v.galkin_strict));
        let _ = writeln!(out, "lambda routes consistent           {}", flag(v.lambda_consistent));
        for a in &self.assumptions {
            let _ = writeln!(out, "assumes: {a}");
        }
        if let Some(d) = &self.diagnostic {
            let _ = writeln!(out, "diagnostic: {d}");
        }
        out
    }
}

/// A whole scan: rows in enumeration order plus a summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ScanDocument {
    pub schema_version: String,
    pub rows: Vec<ReportDocument>,
    pub summary: ScanSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ScanSummary {
    pub instances: String,
    pub failures: String,
}

impl ScanDocument {
    pub fn new(rows: Vec<ReportDocument>) -> Self {
        let failures = rows.iter().filter(|r| !r.passed()).count();
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            summary: ScanSummary {
                instances: rows.len().to_string(),
                failures: failures.to_string(),
            },
            rows,
        }
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.passed()).count()
    }
}
