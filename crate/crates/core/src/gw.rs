//! Degree-one genus-zero invariants with ambient insertions, all reduced to
//! the mirror coefficients `I_a`.
//!
//! The mirror formula identifies
//!
//! ```text
//! I_a = <tau_{a-1}(H^{N-a})>_{0,1}     (0 <= a <= N)
//! ```
//!
//! where `Σ I_a x^a = (∏d_i)(∏d_i!) [∏_i ∏_{m=1}^{d_i} (1 + d_i x / m) / (1+x)^{N+r+1} - 1]`.
//! The divisor relations on `M_{0,2}(X, 1)` then reduce every two-point
//! invariant used downstream to a binomial combination of the `I_a`.
//! Invariants with primitive insertions are never computed.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, ratio, rat, Rational, TruncatedSeries};
use crate::variety::{chern_coefficients, CompleteIntersection};

/// `(I_0, …, I_N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorCoefficients {
    values: Vec<Rational>,
}

impl MirrorCoefficients {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    fn get(&self, a: i64) -> Result<&Rational> {
        usize::try_from(a)
            .ok()
            .and_then(|i| self.values.get(i))
            .ok_or_else(|| Error::IndexRange {
                what: "a",
                value: a,
                range: format!("[0, {}]", self.values.len() - 1),
            })
    }
}

/// The mirror generating function, truncated at `x^order`.
pub fn mirror_series(ci: &CompleteIntersection, order: usize) -> TruncatedSeries {
    let linear_factors: Vec<TruncatedSeries> = ci
        .degrees()
        .iter()
        .flat_map(|&d| (1..=d).map(move |m| TruncatedSeries::one_plus(order, ratio(d, m))))
        .collect();
    let numerator = TruncatedSeries::product(order, &linear_factors);
    let exponent = u64::from(ci.dim() + ci.codim() + 1);
    let denominator = TruncatedSeries::one_plus(order, rat(1))
        .pow(exponent)
        .inverse()
        .expect("(1+x)^k has constant term 1");
    let bracket = &(&numerator * &denominator) - &TruncatedSeries::one(order);
    bracket.scale(&rat(ci.degree_product() * ci.big_f()))
}

pub fn mirror_coefficients(ci: &CompleteIntersection) -> Result<MirrorCoefficients> {
    let values = mirror_series(ci, ci.dim() as usize).coefficients().to_vec();
    if !values[0].is_zero() {
        return Err(Error::MirrorNormalization {
            value: values[0].to_string(),
        });
    }
    Ok(MirrorCoefficients { values })
}

/// Chern and mirror data of one instance, shared by the invariants below.
#[derive(Debug, Clone)]
pub struct AmbientInvariants {
    dim: u32,
    degree_product: BigInt,
    chern: Vec<Rational>,
    mirror: MirrorCoefficients,
}

impl AmbientInvariants {
    pub fn new(ci: &CompleteIntersection) -> Result<Self> {
        Ok(Self {
            dim: ci.dim(),
            degree_product: ci.degree_product(),
            chern: chern_coefficients(ci)?,
            mirror: mirror_coefficients(ci)?,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn degree_product(&self) -> &BigInt {
        &self.degree_product
    }

    pub fn chern(&self) -> &[Rational] {
        &self.chern
    }

    pub fn mirror(&self) -> &MirrorCoefficients {
        &self.mirror
    }

    /// `<tau_{a-1}(H^{N-a})>_{0,1} = I_a`.
    pub fn one_point_descendant(&self, a: i64) -> Result<Rational> {
        self.mirror.get(a).cloned()
    }

    /// `<tau_0(H^i) tau_a(H^{N-i-a})>_{0,1} = Σ_{p=0}^{i} C(i,p) I_{a+p}`.
    pub fn two_point_pure(&self, i: i64, a: i64) -> Result<Rational> {
        let n = i64::from(self.dim);
        if i < 0 || a < 0 || i + a > n {
            return Err(Error::IndexRange {
                what: "(i, a)",
                value: i + a,
                range: format!("i >= 0, a >= 0, i + a <= {n}"),
            });
        }
        (0..=i).try_fold(Rational::zero(), |acc, p| {
            Ok(acc + rat(binomial(i as u64, p)) * self.mirror.get(a + p)?)
        })
    }

    /// `<tau_p(c_{N-2-p}) tau_1(H)>_{0,1} + <tau_p(c_{N-2-p} ∪ H)>_{0,1}`,
    /// which the divisor relations collapse to `-c_{N-2-p} I_{p+2}`.
    pub fn chern_descendant_combination(&self, p: i64) -> Result<Rational> {
        let n = i64::from(self.dim);
        if p < 0 || p > n - 2 {
            return Err(Error::IndexRange {
                what: "p",
                value: p,
                range: format!("[0, {}]", n - 2),
            });
        }
        let c = &self.chern[(n - 2 - p) as usize];
        Ok(-(c * self.mirror.get(p + 2)?))
    }

    /// Genus-one degree-zero invariant `<H>_{1,0} = -(1/24) ∫_X H ∪ c_{N-1}(X)`,
    /// using `∫_X H^N = ∏ d_i`.
    pub fn genus_one_one_point_h(&self) -> Rational {
        let c = &self.chern[self.dim as usize - 1];
        -(c * rat(self.degree_product.clone())) / rat(24)
    }

    /// Genus-one degree-one descendant `<tau_1(H)>_{1,1}`: minus 1/24 times
    /// the sum over `p` of the Chern-descendant combinations.
    pub(crate) fn genus_one_descendant_h(&self) -> Result<Rational> {
        let n = i64::from(self.dim);
        let sum = (0..=n - 2).try_fold(Rational::zero(), |acc, p| {
            Ok::<_, Error>(acc + self.chern_descendant_combination(p)?)
        })?;
        Ok(-sum / rat(24))
    }

    /// `<H^{N-1}>_{0,1} = I_1`.
    pub fn line_class_invariant(&self) -> Rational {
        self.mirror.values[1].clone()
    }
}

pub fn one_point_descendant(ci: &CompleteIntersection, a: i64) -> Result<Rational> {
    AmbientInvariants::new(ci)?.one_point_descendant(a)
}

pub fn two_point_pure(ci: &CompleteIntersection, i: i64, a: i64) -> Result<Rational> {
    AmbientInvariants::new(ci)?.two_point_pure(i, a)
}

pub fn chern_descendant_combination(ci: &CompleteIntersection, p: i64) -> Result<Rational> {
    AmbientInvariants::new(ci)?.chern_descendant_combination(p)
}

pub fn genus_one_one_point_h(ci: &CompleteIntersection) -> Result<Rational> {
    Ok(AmbientInvariants::new(ci)?.genus_one_one_point_h())
}

/// `Σ_{p=0}^{N} C(N+1, p+1) I_p`.
pub fn hockey_stick_total(inv: &AmbientInvariants) -> Rational {
    let n = u64::from(inv.dim);
    inv.mirror
        .values
        .iter()
        .enumerate()
        .map(|(p, ip)| rat(binomial(n + 1, p as i64 + 1)) * ip)
        .fold(Rational::zero(), |acc, t| acc + t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::enumerate_fano_cis;

    fn ci(dim: u32, degrees: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(dim, degrees.to_vec()).unwrap()
    }

    #[test]
    fn mirror_normalization_over_enumeration() {
        for x in enumerate_fano_cis(8, 8) {
            let m = mirror_coefficients(&x).unwrap();
            assert!(m.values()[0].is_zero(), "{x}");
            assert_eq!(m.values().len(), x.dim() as usize + 1);
        }
    }

    #[test]
    fn linear_mirror_coefficients() {
        // 600 * (137/12 - 6)
        assert_eq!(one_point_descendant(&ci(4, &[5]), 1).unwrap(), rat(3250));
        // 18 * (3 + 3/2 + 1 - 5)
        assert_eq!(one_point_descendant(&ci(3, &[3]), 1).unwrap(), rat(9));
        assert_eq!(one_point_descendant(&ci(4, &[5]), 0).unwrap(), rat(0));
    }

    #[test]
    fn descendant_index_range() {
        let x = ci(4, &[5]);
        assert!(matches!(one_point_descendant(&x, 5), Err(Error::IndexRange { .. })));
        assert!(matches!(one_point_descendant(&x, -1), Err(Error::IndexRange { .. })));
    }

    #[test]
    fn two_point_small_cases() {
        let inv = AmbientInvariants::new(&ci(4, &[5])).unwrap();
        let i = inv.mirror().values().to_vec();
        for a in 0..=4 {
            assert_eq!(inv.two_point_pure(0, a).unwrap(), i[a as usize]);
        }
        assert_eq!(inv.two_point_pure(1, 0).unwrap(), &i[0] + &i[1]);
        assert_eq!(inv.two_point_pure(2, 0).unwrap(), &i[0] + rat(2) * &i[1] + &i[2]);
        assert!(inv.two_point_pure(3, 2).is_err());
        assert!(inv.two_point_pure(-1, 0).is_err());
    }

    #[test]
    fn chern_descendant_examples() {
        let inv = AmbientInvariants::new(&ci(4, &[3])).unwrap();
        let (c, i) = (inv.chern().to_vec(), inv.mirror().values().to_vec());
        assert_eq!(inv.chern_descendant_combination(2).unwrap(), -i[4].clone());
        assert_eq!(inv.chern_descendant_combination(0).unwrap(), -(&c[2] * &i[2]));
        assert!(inv.chern_descendant_combination(3).is_err());
    }

    #[test]
    fn genus_one_degree_zero() {
        // cubic fourfold: c_3 = 2, so -(1/24) * 3 * 2
        assert_eq!(genus_one_one_point_h(&ci(4, &[3])).unwrap(), ratio(-1, 4));
        for x in enumerate_fano_cis(6, 6) {
            let v = genus_one_one_point_h(&x).unwrap();
            assert!((BigInt::from(24) % v.denom()).is_zero());
        }
    }
}
